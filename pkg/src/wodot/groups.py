"""Finite abelian groups C_{n1} ⊕ ... ⊕ C_{nk} as residue vectors.

Elements are numbered in mixed radix with the first coordinate most
significant, so index order coincides with lexicographic order of the
coordinate vectors.  All set-valued machinery works on these indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator, Union

import numpy as np

from .config import settings
from .errors import GroupMismatchError, PreconditionError

ElementLike = Union["GroupElement", int, Iterable[int]]


@dataclass(frozen=True)
class GroupSpec:
    """The group C_{moduli[0]} ⊕ ... ⊕ C_{moduli[-1]}.

    >>> G = GroupSpec((2, 4))
    >>> G.order, G.exponent
    (8, 4)
    """

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        mods = tuple(int(m) for m in self.moduli)
        if not mods:
            raise PreconditionError("a group needs at least one modulus")
        if any(m < 2 for m in mods):
            raise PreconditionError(f"every modulus must be >= 2, got {mods}")
        object.__setattr__(self, "moduli", mods)

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls((n,))

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``"2,4"`` or ``"5"``."""
        try:
            return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))
        except ValueError as exc:
            raise PreconditionError(f"bad group spec {text!r}") from exc

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @cached_property
    def exponent(self) -> int:
        return reduce(math.lcm, self.moduli, 1)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @cached_property
    def is_cyclic(self) -> bool:
        return self.exponent == self.order

    @cached_property
    def is_klein(self) -> bool:
        """True when the group is isomorphic to C2 ⊕ C2."""
        return self.order == 4 and self.exponent == 2

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        out = []
        s = 1
        for m in reversed(self.moduli):
            out.append(s)
            s *= m
        return tuple(reversed(out))

    # -- element construction -------------------------------------------------

    def index(self, coords: Iterable[int]) -> int:
        return sum((c % m) * s for c, m, s in zip(coords, self.moduli, self._strides))

    def coords(self, index: int) -> tuple[int, ...]:
        return tuple((index // s) % m for m, s in zip(self.moduli, self._strides))

    def elem(self, x: ElementLike) -> "GroupElement":
        """Coerce ``x`` into an element of this group.

        Plain integers are accepted only for groups given by a single modulus.
        """
        if isinstance(x, GroupElement):
            if x.group != self:
                raise GroupMismatchError(f"{x} is not in {self}")
            return x
        if isinstance(x, (int, np.integer)):
            if self.rank != 1:
                raise PreconditionError(f"integer element {x} is ambiguous in {self}")
            return GroupElement(self, (int(x),))
        coords = tuple(int(c) for c in x)
        if len(coords) != self.rank:
            raise PreconditionError(f"element {coords} has wrong length for {self}")
        return GroupElement(self, coords)

    def from_index(self, index: int) -> "GroupElement":
        return GroupElement(self, self.coords(index))

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def elements(self) -> list["GroupElement"]:
        return [self.from_index(i) for i in range(self.order)]

    def set(self, items: Iterable[ElementLike]) -> "ElementSet":
        return ElementSet(self, items)

    def full(self) -> "ElementSet":
        return ElementSet._from_indices(self, range(self.order))

    def trivial(self) -> "ElementSet":
        return ElementSet._from_indices(self, (0,))

    # -- lookup tables, only for groups under the exhaustive cap ------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        require_exhaustive(self)
        n = self.order
        coords = np.array([self.coords(i) for i in range(n)], dtype=np.int64)
        mods = np.array(self.moduli, dtype=np.int64)
        strides = np.array(self._strides, dtype=np.int64)
        summed = (coords[:, None, :] + coords[None, :, :]) % mods
        return (summed * strides).sum(axis=2)

    @cached_property
    def neg_table(self) -> np.ndarray:
        require_exhaustive(self)
        return np.array([self.index(-c for c in self.coords(i)) for i in range(self.order)],
                        dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        """``mul_table[k, g]`` is the index of k·g for k in [0, exponent)."""
        require_exhaustive(self)
        e, n = self.exponent, self.order
        out = np.zeros((e, n), dtype=np.int64)
        for g in range(1, n):
            c = self.coords(g)
            for k in range(1, e):
                out[k, g] = self.index(k * x for x in c)
        return out

    @cached_property
    def _add(self) -> list[list[int]]:
        return self.add_table.tolist()

    @cached_property
    def _neg(self) -> list[int]:
        return self.neg_table.tolist()

    def __str__(self) -> str:
        return " ⊕ ".join(f"C{m}" for m in self.moduli)

    def to_json(self) -> dict:
        return {"moduli": list(self.moduli)}


def require_exhaustive(group: GroupSpec) -> None:
    if group.order > settings.order_cap:
        raise PreconditionError(
            f"|G| = {group.order} exceeds the exhaustive cap {settings.order_cap}"
        )


@dataclass(frozen=True, order=False)
class GroupElement:
    group: GroupSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        red = tuple(int(c) % m for c, m in zip(self.coords, self.group.moduli))
        if len(red) != self.group.rank or len(self.coords) != self.group.rank:
            raise PreconditionError(f"element {self.coords} has wrong length for {self.group}")
        object.__setattr__(self, "coords", red)

    @property
    def index(self) -> int:
        return self.group.index(self.coords)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return add(self, other)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return add(self, neg(other))

    def __neg__(self) -> "GroupElement":
        return neg(self)

    def __rmul__(self, c: int) -> "GroupElement":
        return scalar_mul(c, self)

    def __lt__(self, other: "GroupElement") -> bool:
        _same(self.group, other.group)
        return self.coords < other.coords

    def __bool__(self) -> bool:
        return any(self.coords)

    def __repr__(self) -> str:
        return f"GroupElement({self})"

    def __str__(self) -> str:
        if self.group.rank == 1:
            return str(self.coords[0])
        return "(" + ",".join(map(str, self.coords)) + ")"

    def to_json(self) -> list[int]:
        return list(self.coords)


class ElementSet:
    """An immutable set of elements of one group."""

    __slots__ = ("group", "_idx")

    def __init__(self, group: GroupSpec, members: Iterable[ElementLike] = ()):
        self.group = group
        self._idx = frozenset(group.elem(x).index for x in members)

    @classmethod
    def _from_indices(cls, group: GroupSpec, indices: Iterable[int]) -> "ElementSet":
        out = cls.__new__(cls)
        out.group = group
        out._idx = frozenset(indices)
        return out

    @classmethod
    def from_bits(cls, group: GroupSpec, bits: int) -> "ElementSet":
        return cls._from_indices(group, (i for i in range(group.order) if bits >> i & 1))

    @property
    def indices(self) -> frozenset[int]:
        return self._idx

    @property
    def bits(self) -> int:
        return sum(1 << i for i in self._idx)

    def __iter__(self) -> Iterator[GroupElement]:
        return (self.group.from_index(i) for i in sorted(self._idx))

    def __len__(self) -> int:
        return len(self._idx)

    def __contains__(self, x: ElementLike) -> bool:
        try:
            return self.group.elem(x).index in self._idx
        except PreconditionError:
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.group == other.group and self._idx == other._idx

    def __hash__(self) -> int:
        return hash((self.group, self._idx))

    def __le__(self, other: "ElementSet") -> bool:
        _same(self.group, other.group)
        return self._idx <= other._idx

    def __ge__(self, other: "ElementSet") -> bool:
        return other <= self

    def __or__(self, other: "ElementSet") -> "ElementSet":
        _same(self.group, other.group)
        return ElementSet._from_indices(self.group, self._idx | other._idx)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        _same(self.group, other.group)
        return ElementSet._from_indices(self.group, self._idx & other._idx)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        _same(self.group, other.group)
        return ElementSet._from_indices(self.group, self._idx - other._idx)

    def translate(self, g: ElementLike) -> "ElementSet":
        """The set g + A."""
        gi = self.group.elem(g).index
        row = self.group._add[gi]
        return ElementSet._from_indices(self.group, (row[a] for a in self._idx))

    def __repr__(self) -> str:
        return "{" + ", ".join(str(e) for e in self) + "}"

    def to_json(self) -> list[list[int]]:
        return [list(self.group.coords(i)) for i in sorted(self._idx)]


def _same(g: GroupSpec, h: GroupSpec) -> None:
    if g != h:
        raise GroupMismatchError(f"{g} and {h} are different groups")


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    _same(a.group, b.group)
    return GroupElement(a.group, tuple(x + y for x, y in zip(a.coords, b.coords)))


def neg(a: GroupElement) -> GroupElement:
    return GroupElement(a.group, tuple(-x for x in a.coords))


def scalar_mul(c: int, g: GroupElement) -> GroupElement:
    """c·g for any integer c (negative allowed)."""
    return GroupElement(g.group, tuple((c % m) * x for x, m in zip(g.coords, g.group.moduli)))


def order_of(g: GroupElement) -> int:
    return reduce(math.lcm, (m // math.gcd(x, m) for x, m in zip(g.coords, g.group.moduli)), 1)


def _closure(group: GroupSpec, gens: Iterable[int]) -> frozenset[int]:
    table = group._add
    gens = [g for g in set(gens) if g != 0]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            row = table[h]
            for g in gens:
                s = row[g]
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return frozenset(seen)


def span(A: ElementSet) -> ElementSet:
    """The subgroup ⟨A⟩ generated by A (⟨∅⟩ = {0})."""
    require_exhaustive(A.group)
    return ElementSet._from_indices(A.group, _closure(A.group, A.indices))


def star_span(A: ElementSet) -> ElementSet:
    """The smallest subgroup H such that A lies in a single H-coset: ⟨A − a⟩."""
    if not len(A):
        raise PreconditionError("star_span of the empty set is undefined")
    require_exhaustive(A.group)
    G = A.group
    a0 = G._neg[min(A.indices)]
    return ElementSet._from_indices(G, _closure(G, (G._add[a][a0] for a in A.indices)))


def stabilizer(A: ElementSet) -> ElementSet:
    """H(A) = {g : g + A = A}."""
    if not len(A):
        raise PreconditionError("stabilizer of the empty set is undefined")
    require_exhaustive(A.group)
    G = A.group
    idx = A.indices
    na0 = G._neg[min(idx)]
    out = []
    for a in idx:
        row = G._add[G._add[a][na0]]
        if all(row[x] in idx for x in idx):
            out.append(G._add[a][na0])
    return ElementSet._from_indices(G, out)


def sumset(A: ElementSet, B: ElementSet) -> ElementSet:
    _same(A.group, B.group)
    require_exhaustive(A.group)
    table = A.group._add
    return ElementSet._from_indices(A.group, {table[a][b] for a in A.indices for b in B.indices})


def is_subgroup(H: ElementSet) -> bool:
    require_exhaustive(H.group)
    idx = H.indices
    if 0 not in idx:
        return False
    table = H.group._add
    return all(table[a][b] in idx for a in idx for b in idx)


def coset_decompose(A: ElementSet, H: ElementSet) -> dict[GroupElement, ElementSet]:
    """Partition A by H-cosets, keyed by the lexicographically least coset element."""
    _same(A.group, H.group)
    if not is_subgroup(H):
        raise PreconditionError(f"{H} is not a subgroup")
    table = A.group._add
    classes: dict[int, set[int]] = {}
    for a in A.indices:
        rep = min(table[a][h] for h in H.indices)
        classes.setdefault(rep, set()).add(a)
    return {
        A.group.from_index(rep): ElementSet._from_indices(A.group, members)
        for rep, members in sorted(classes.items())
    }
