"""Predictions for W⊙S with W a run of |S| consecutive integers, and exhaustive
campaigns that check them against the exact sumset.

For S not contained in a coset of a proper subgroup:

* |W⊙S| >= min(|G| - 1, |S|);
* |S| >= |G| + 1 forces W⊙S = G, already for some length-|G| subsequence;
* at |S| = |G| the only sequences missing an element are the four distinct
  elements of C2 ⊕ C2 (missing 0) and the translates g' + 0^{|G|-2}·g·(-g) of a
  cyclic group with ord(g) = |G| (missing |G|(|G|-1)/2 · g').
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .errors import NotApplicableError, PreconditionError, TheoremViolation
from .groups import (
    ElementSet,
    GroupElement,
    GroupSpec,
    _closure,
    _same,
    order_of,
    scalar_mul,
    span,
    stabilizer,
    star_span,
    require_exhaustive,
)
from .sequences import GSequence, translate
from .weighted import WeightSeq, odot, odot_bits


class Kind(str, Enum):
    FULL = "full"
    KLEIN = "exception-klein"
    CYCLIC = "exception-cyclic"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    g: Optional[GroupElement] = None
    gprime: Optional[GroupElement] = None
    predicted_missing: Optional[GroupElement] = None
    reason: Optional[str] = None

    @property
    def exceptional(self) -> bool:
        return self.kind in (Kind.KLEIN, Kind.CYCLIC)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.g is not None:
            out["g"] = self.g.to_json()
            out["gprime"] = self.gprime.to_json()
        if self.predicted_missing is not None:
            out["predicted_missing"] = self.predicted_missing.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out


def generates_up_to_translation(S: GSequence) -> bool:
    """star_span(supp(S)) == G."""
    if not len(S):
        return False
    return len(star_span(S.support())) == S.group.order


def lower_bound(G: GroupSpec, S: GSequence) -> int:
    _same(G, S.group)
    if not generates_up_to_translation(S):
        raise NotApplicableError("supp(S) lies in a coset of a proper subgroup")
    return min(G.order - 1, len(S))


def classify_full_length(G: GroupSpec, S: GSequence) -> Classification:
    """Structural verdict for |S| = |G|; never computes the sumset."""
    _same(G, S.group)
    n = G.order
    if len(S) != n:
        return Classification(Kind.NOT_APPLICABLE, reason=f"|S| = {len(S)} != |G| = {n}")
    if n < 3:
        return Classification(Kind.NOT_APPLICABLE, reason="|G| < 3")
    if not generates_up_to_translation(S):
        return Classification(
            Kind.NOT_APPLICABLE, reason="supp(S) lies in a coset of a proper subgroup"
        )
    if G.is_klein and len(S.support()) == 4:
        return Classification(Kind.KLEIN, predicted_missing=G.zero)
    if G.is_cyclic:
        for gp_idx, k in S.counts.items():
            if k < n - 2:
                continue
            gp = G.from_index(gp_idx)
            T = translate(-gp, S).counts
            if T.get(0) != n - 2 or len(T) != 3:
                continue
            a, b = (G.from_index(i) for i in sorted(T) if i != 0)
            if order_of(a) == n and a + b == G.zero:
                return Classification(
                    Kind.CYCLIC,
                    g=a,
                    gprime=gp,
                    predicted_missing=scalar_mul((n - 1) * n // 2, gp),
                )
    return Classification(Kind.FULL)


@dataclass
class VerificationReport:
    group: GroupSpec
    lengths: list[int] = field(default_factory=list)
    checked: dict[int, int] = field(default_factory=dict)
    bound_violations: list[dict] = field(default_factory=list)
    exceptions: list[tuple[GSequence, Classification]] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    witnesses: int = 0

    @property
    def ok(self) -> bool:
        return not self.bound_violations and not self.mismatches

    @property
    def total(self) -> int:
        return sum(self.checked.values())

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        _same(self.group, other.group)
        checked = Counter(self.checked)
        checked.update(other.checked)
        return VerificationReport(
            self.group,
            sorted(set(self.lengths) | set(other.lengths)),
            dict(sorted(checked.items())),
            self.bound_violations + other.bound_violations,
            self.exceptions + other.exceptions,
            self.mismatches + other.mismatches,
            self.witnesses + other.witnesses,
        )

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "lengths": self.lengths,
            "sequences_checked": {str(k): v for k, v in self.checked.items()},
            "total": self.total,
            "bound_violations": self.bound_violations,
            "exceptions": [
                {"sequence": S.to_json(), "classification": c.to_json()}
                for S, c in self.exceptions
            ],
            "mismatches": self.mismatches,
            "witnesses": self.witnesses,
            "ok": self.ok,
        }


def _popcount(x: int) -> int:
    return bin(x).count("1")


def verify_main_theorem(
    G: GroupSpec,
    max_len: int,
    progress: Optional[Callable[[str], None]] = None,
) -> VerificationReport:
    """Check every sequence of length <= max_len whose support is not in a proper coset."""
    require_exhaustive(G)
    n = G.order
    if not 1 <= max_len <= n + 1:
        raise PreconditionError(f"max_len must lie in [1, |G| + 1 = {n + 1}]")
    report = VerificationReport(G, lengths=list(range(1, max_len + 1)))
    add, neg = G._add, G._neg
    full = (1 << n) - 1
    generating: dict[int, bool] = {}
    run_full = list(range(n))

    def spans(support: tuple[int, ...]) -> bool:
        key = sum(1 << i for i in support)
        if key not in generating:
            na = neg[support[0]]
            generating[key] = len(_closure(G, (add[a][na] for a in support))) == n
        return generating[key]

    for length in report.lengths:
        weights = list(range(length))
        count = 0
        for combo in itertools.combinations_with_replacement(range(n), length):
            counts = Counter(combo)
            if not spans(tuple(sorted(counts))):
                continue
            count += 1
            bits = odot_bits(G, weights, counts)
            size = _popcount(bits)
            if size < min(n - 1, length):
                report.bound_violations.append(
                    {"sequence": list(combo), "size": size, "bound": min(n - 1, length)}
                )
            if length == n + 1:
                if bits != full:
                    report.mismatches.append({"sequence": list(combo), "reason": "not all of G"})
                    continue
                for g, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
                    sub = dict(counts)
                    sub[g] -= 1
                    if odot_bits(G, run_full, sub) == full:
                        report.witnesses += 1
                        break
                else:
                    report.mismatches.append(
                        {"sequence": list(combo), "reason": "no length-|G| subsequence is full"}
                    )
            elif length == n:
                S = GSequence._from_counts(G, counts)
                cls = classify_full_length(G, S)
                missing = [i for i in range(n) if not bits >> i & 1]
                if cls.exceptional:
                    report.exceptions.append((S, cls))
                    if missing != [cls.predicted_missing.index]:
                        report.mismatches.append(
                            {"sequence": list(combo), "reason": "wrong exceptional prediction",
                             "missing": missing, "classification": cls.kind.value}
                        )
                    elif cls.kind is Kind.CYCLIC and any(
                        order_of(G.from_index(h)) == n and h in missing for h in range(n)
                    ):
                        report.mismatches.append(
                            {"sequence": list(combo), "reason": "a generator is missing"}
                        )
                elif missing:
                    report.mismatches.append(
                        {"sequence": list(combo), "reason": "unpredicted missing elements",
                         "missing": missing}
                    )
        report.checked[length] = count
        if progress:
            progress(f"{G}: length {length}: {count} sequences")
    return report


def check_key_lemma(G: GroupSpec, x, y, L: int) -> bool:
    """Bounds for W⊙(x·y) with W = (0)(1)...(L-1):
    min(|G|, 2L - 3) if x = y, min(|G| - 1, 2L - 2) otherwise, and for L >= 3
    the result is not inside a coset of a proper subgroup.
    """
    x, y = G.elem(x), G.elem(y)
    if not x or not y:
        raise PreconditionError("x and y must be nonzero")
    if len(span(G.set([x, y]))) != G.order:
        raise PreconditionError("x and y must generate G")
    if L < 1:
        raise PreconditionError("L must be positive")
    A = odot(WeightSeq.run(0, L), GSequence.from_terms(G, [x, y]))
    n = G.order
    bound = min(n, 2 * L - 3) if x == y else min(n - 1, 2 * L - 2)
    if len(A) < bound:
        return False
    if L >= 3 and len(star_span(A)) != n:
        return False
    return True


def find_special_subset(G: GroupSpec, x, y, z) -> ElementSet:
    """A 4-subset X of (0)(1)(2)⊙(x·y·z) with star_span(X) = G, at least two
    elements in 3z + star_span({x, z}), and |H(X)| != 2 unless G ≅ C6.
    """
    x, y, z = G.elem(x), G.elem(y), G.elem(z)
    if G.order < 5:
        raise PreconditionError("needs |G| >= 5")
    if len({x, y, z}) != 3:
        raise PreconditionError("x, y, z must be distinct")
    if len(star_span(G.set([x, y, z]))) != G.order:
        raise PreconditionError("x, y, z lie in a coset of a proper subgroup")
    if min(order_of(x - z), order_of(y - z), order_of(x - y)) < 3:
        raise PreconditionError("pairwise differences must have order >= 3")
    A = odot(WeightSeq.run(0, 3), GSequence.from_terms(G, [x, y, z]))
    target = star_span(G.set([x, z])).translate(scalar_mul(3, z))
    c6 = G.order == 6
    for quad in itertools.combinations(sorted(A.indices), 4):
        X = ElementSet._from_indices(G, quad)
        if len(X & target) < 2 or len(star_span(X)) != G.order:
            continue
        if not c6 and len(stabilizer(X)) == 2:
            continue
        return X
    raise TheoremViolation(f"no special 4-subset for x={x}, y={y}, z={z} in {G}")


def check_punctured(A: ElementSet, x) -> bool:
    """With A ∪ {x} periodic under a subgroup of order >= 3 and x ∉ A, check that
    A ∪ {y} is aperiodic for every y != x.
    """
    G = A.group
    x = G.elem(x)
    if x in A:
        raise PreconditionError("x must not lie in A")
    if not len(A):
        raise PreconditionError("A must be nonempty")
    if len(stabilizer(A | G.set([x]))) < 3:
        raise PreconditionError("A ∪ {x} is not periodic with period subgroup of order >= 3")
    for yi in range(G.order):
        if yi == x.index:
            continue
        if len(stabilizer(A | ElementSet._from_indices(G, (yi,)))) != 1:
            return False
    return True
