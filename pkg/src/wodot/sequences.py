"""Sequences over a finite abelian group, stored as multiplicity maps."""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Iterator, Mapping

from .config import settings
from .errors import BudgetExceededError, PreconditionError
from .groups import (
    ElementLike,
    ElementSet,
    GroupElement,
    GroupSpec,
    _same,
    require_exhaustive,
)


class GSequence:
    """A finite multiset g_1 · ... · g_l of elements of ``group``.

    >>> G = GroupSpec.cyclic(6)
    >>> S = GSequence.from_terms(G, [1, 1, 3])
    >>> len(S), S.h, sigma(S)
    (3, 2, GroupElement(5))
    """

    __slots__ = ("group", "_counts")

    def __init__(self, group: GroupSpec, mult: Mapping[ElementLike, int] | None = None):
        self.group = group
        counts: Counter[int] = Counter()
        for g, k in (mult or {}).items():
            if k < 0:
                raise PreconditionError(f"negative multiplicity {k}")
            if k:
                counts[group.elem(g).index] += int(k)
        self._counts = tuple(sorted(counts.items()))

    @classmethod
    def from_terms(cls, group: GroupSpec, terms: Iterable[ElementLike]) -> "GSequence":
        return cls._from_counts(group, Counter(group.elem(t).index for t in terms))

    @classmethod
    def _from_counts(cls, group: GroupSpec, counts: Mapping[int, int]) -> "GSequence":
        out = cls.__new__(cls)
        out.group = group
        out._counts = tuple(sorted((i, k) for i, k in counts.items() if k))
        return out

    @classmethod
    def parse(cls, group: GroupSpec, text: str) -> "GSequence":
        """Parse the shorthand ``"0^3 1 3"`` (cyclic) or ``"0,0^2 1,1"``.

        Terms are whitespace separated; coordinates are comma separated and an
        optional ``^k`` gives the multiplicity.
        """
        counts: Counter[int] = Counter()
        for tok in text.split():
            body, _, exp = tok.partition("^")
            try:
                coords = [int(c) for c in body.split(",")]
                k = int(exp) if exp else 1
            except ValueError as exc:
                raise PreconditionError(f"malformed term {tok!r}") from exc
            if k < 0:
                raise PreconditionError(f"negative multiplicity in {tok!r}")
            counts[group.elem(coords).index] += k
        return cls._from_counts(group, counts)

    @classmethod
    def from_json(cls, data: dict) -> "GSequence":
        group = GroupSpec(tuple(data["group"]["moduli"]))
        return cls._from_counts(
            group, Counter({group.elem(t["elem"]).index: int(t["mult"]) for t in data["terms"]})
        )

    # -- accessors ----------------------------------------------------------

    @property
    def counts(self) -> dict[int, int]:
        """Multiplicities keyed by element index."""
        return dict(self._counts)

    @property
    def mult(self) -> dict[GroupElement, int]:
        return {self.group.from_index(i): k for i, k in self._counts}

    def v(self, g: ElementLike) -> int:
        """Multiplicity v_g(S)."""
        return self.counts.get(self.group.elem(g).index, 0)

    def __len__(self) -> int:
        return sum(k for _, k in self._counts)

    @property
    def h(self) -> int:
        return max((k for _, k in self._counts), default=0)

    def support(self) -> ElementSet:
        return ElementSet._from_indices(self.group, (i for i, _ in self._counts))

    def terms(self) -> Iterator[GroupElement]:
        for i, k in self._counts:
            g = self.group.from_index(i)
            for _ in range(k):
                yield g

    def term_indices(self) -> list[int]:
        return [i for i, k in self._counts for _ in range(k)]

    def __mul__(self, other: "GSequence") -> "GSequence":
        _same(self.group, other.group)
        c = Counter(self.counts)
        c.update(other.counts)
        return GSequence._from_counts(self.group, c)

    def remove(self, g: ElementLike, k: int = 1) -> "GSequence":
        """S · g^{-k}."""
        i = self.group.elem(g).index
        c = self.counts
        if c.get(i, 0) < k:
            raise PreconditionError(f"{self.group.from_index(i)} occurs fewer than {k} times")
        c[i] -= k
        return GSequence._from_counts(self.group, c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GSequence):
            return NotImplemented
        return self.group == other.group and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self.group, self._counts))

    def __str__(self) -> str:
        if not self._counts:
            return "1"  # the empty sequence
        parts = []
        for i, k in self._counts:
            g = str(self.group.from_index(i))
            parts.append(g if k == 1 else f"{g}^{k}")
        return "·".join(parts)

    def __repr__(self) -> str:
        return f"GSequence({self.group}: {self})"

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "terms": [{"elem": list(self.group.coords(i)), "mult": k} for i, k in self._counts],
        }


def sigma(S: GSequence) -> GroupElement:
    """σ(S), the sum of all terms."""
    G = S.group
    total = [0] * G.rank
    for i, k in S._counts:
        for j, c in enumerate(G.coords(i)):
            total[j] += k * c
    return G.elem(total)


def translate(gp: ElementLike, S: GSequence) -> GSequence:
    """g' + S, every term shifted by g'."""
    g = S.group.elem(gp)
    G = S.group
    return GSequence._from_counts(
        G, {G.index(x + y for x, y in zip(G.coords(i), g.coords)): k for i, k in S._counts}
    )


def _sums_by_length(S: GSequence) -> list[set[int]]:
    """reach[t] = indices of all sums of t-term subsequences."""
    G = S.group
    require_exhaustive(G)
    table = G._add
    mul = G.mul_table
    e = G.exponent
    reach: list[set[int]] = [{0}]
    for g, v in S._counts:
        multiples = [int(mul[t % e, g]) for t in range(v + 1)]
        nxt: list[set[int]] = [set() for _ in range(len(reach) + v)]
        for t, sums in enumerate(reach):
            for c in range(v + 1):
                row = table[multiples[c]]
                nxt[t + c].update(row[s] for s in sums)
        reach = nxt
    return reach


def sigma_n(S: GSequence, n: int) -> ElementSet:
    """Σ_n(S), the set of sums of n-term subsequences."""
    if not 0 <= n <= len(S):
        raise PreconditionError(f"n = {n} outside [0, {len(S)}]")
    return ElementSet._from_indices(S.group, _sums_by_length(S)[n])


def subsequence_sums(S: GSequence) -> ElementSet:
    """Σ(S), sums of all nonempty subsequences."""
    reach = _sums_by_length(S)
    return ElementSet._from_indices(S.group, set().union(*reach[1:]))


def _check_budget(S: GSequence) -> None:
    size = math.prod(k + 1 for _, k in S._counts)
    if size > settings.enum_budget:
        raise BudgetExceededError(
            f"too large to verify: {size} multiplicity vectors > budget {settings.enum_budget}"
        )


def is_zero_sum(S: GSequence) -> bool:
    return not sigma(S)


def is_zero_sum_free(S: GSequence) -> bool:
    """True iff no nonempty subsequence sums to 0."""
    _check_budget(S)
    return not any(0 in sums for sums in _sums_by_length(S)[1:])


def is_minimal_zero_sum(S: GSequence) -> bool:
    """σ(S) = 0, |S| ≥ 1, and no proper nonempty subsequence is zero-sum."""
    if not len(S):
        raise PreconditionError("the empty sequence is not considered")
    _check_budget(S)
    if sigma(S):
        return False
    reach = _sums_by_length(S)
    return not any(0 in reach[t] for t in range(1, len(S)))
