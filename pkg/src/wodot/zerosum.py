"""Maximal-length minimal zero-sum sequences over C_m ⊕ C_{mn} with a prescribed
multiplicity pattern or support size.

With the basis e_1 = (1, 0), e_2 = (0, 1) and roles {j, k} = {1, 2}, the
sequence

    S = e_j^{ord e_j - 1} · Π_i (x_i e_j + e_k)^{a_i}

is a minimal zero-sum sequence of length m + mn - 1 exactly when the x_i are
distinct residues mod ord e_j, Σ a_i = ord e_k and Σ a_i x_i ≡ 1 (mod ord e_j).
The x_i are found with the distinct-residue congruence solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import congruence
from .errors import PreconditionError, TheoremViolation
from .groups import GroupSpec
from .sequences import GSequence, is_minimal_zero_sum


@dataclass(frozen=True)
class Rank2Target:
    m: int
    n: int
    pattern: tuple[int, ...]
    role: tuple[int, int] = (1, 2)

    def __post_init__(self) -> None:
        if self.m < 2 or self.n < 1:
            raise PreconditionError("need m >= 2 and n >= 1")
        if self.role not in ((1, 2), (2, 1)):
            raise PreconditionError(f"role must be (1, 2) or (2, 1), got {self.role}")
        if not self.pattern or any(a < 1 for a in self.pattern):
            raise PreconditionError("pattern entries must be >= 1")
        if sum(self.pattern) != self.ord_k:
            raise PreconditionError(f"pattern must sum to ord e_k = {self.ord_k}")
        if len(self.pattern) > self.ord_j:
            raise PreconditionError(f"pattern longer than ord e_j = {self.ord_j}")

    @property
    def group(self) -> GroupSpec:
        return GroupSpec((self.m, self.m * self.n))

    @property
    def ord_j(self) -> int:
        return self.m if self.role[0] == 1 else self.m * self.n

    @property
    def ord_k(self) -> int:
        return self.m * self.n if self.role[0] == 1 else self.m


@dataclass(frozen=True)
class ConstructionResult:
    m: int
    n: int
    sequence: Optional[GSequence] = None
    witness_x: Optional[tuple[int, ...]] = None
    pattern: Optional[tuple[int, ...]] = None
    role: Optional[tuple[int, int]] = None
    verified: bool = False
    infeasible: Optional[str] = None

    @property
    def feasible(self) -> bool:
        return self.infeasible is None

    def to_json(self) -> dict:
        if not self.feasible:
            return {"m": self.m, "n": self.n, "infeasible": self.infeasible,
                    "pattern": list(self.pattern) if self.pattern else None}
        return {
            "m": self.m,
            "n": self.n,
            "sequence": self.sequence.to_json(),
            "witness_x": list(self.witness_x),
            "pattern": list(self.pattern),
            "role": list(self.role),
            "verified": self.verified,
            "length": len(self.sequence),
            "support": len(self.sequence.support()),
        }


def max_minimal_length(m: int, n: int) -> int:
    if m < 2 or n < 1:
        raise PreconditionError("need m >= 2 and n >= 1")
    return m + m * n - 1


def construct_from_pattern(m: int, n: int, pattern: Sequence[int], role=(1, 2)
                           ) -> ConstructionResult:
    t = Rank2Target(m, n, tuple(int(a) for a in pattern), tuple(role))
    G = t.group
    oj = t.ord_j
    padded = t.pattern + (0,) * (oj - len(t.pattern))
    verdict = congruence.construct(congruence.normalize(padded, n=oj), 1)
    if not verdict.solvable:
        return ConstructionResult(
            m, n, pattern=t.pattern, role=t.role,
            infeasible=f"Σ a_i x_i ≡ 1 (mod {oj}) has no solution in distinct residues "
                       f"for a = {padded}",
        )
    xs = verdict.witness[: len(t.pattern)]
    e = [(1, 0), (0, 1)]
    ej, ek = e[t.role[0] - 1], e[t.role[1] - 1]
    mult = {ej: oj - 1}
    for x, a in zip(xs, t.pattern):
        mult[(x * ej[0] + ek[0], x * ej[1] + ek[1])] = a
    S = GSequence(G, mult)
    if len(S) != max_minimal_length(m, n) or len(S.support()) != len(t.pattern) + 1:
        raise TheoremViolation(f"assembled sequence {S} has the wrong shape")
    if not is_minimal_zero_sum(S):
        raise TheoremViolation(f"{S} is not a minimal zero-sum sequence")
    return ConstructionResult(m, n, S, xs, t.pattern, t.role, verified=True)


def _support_pattern(m: int, n: int, k: int, role: tuple[int, int]
                     ) -> tuple[Optional[tuple[int, ...]], Optional[str]]:
    """Pattern realizing support size k, or the reason there is none."""
    mn = m * n
    if not 3 <= k <= m + 1:
        return None, f"support size must lie in [3, m + 1] = [3, {m + 1}]"
    l = k - 1
    if n == 1:
        if k <= m:
            return (1,) * (l - 1) + (m - l + 1,), None
        if m == 2:
            return (1, 1), None
        return None, ("n = 1, m >= 3: support m + 1 needs every a_i = 1, and then "
                      "Σ x_i ≡ m(m-1)/2 ≢ 1 (mod m)")
    if role == (2, 1):
        # ord e_j = mn > ord e_k = m
        return (1,) * (l - 1) + (m - l + 1,), None
    # ord e_j = m < ord e_k = mn
    if m == 2:
        return (mn - 1, 1), None
    if k <= m:
        return (1,) * (l - 1) + (mn - l + 1,), None
    return (1,) * (m - 2) + (2, mn - m), None


def construct_with_support(m: int, n: int, k: int, role=(1, 2)) -> ConstructionResult:
    if m < 2 or n < 1:
        raise PreconditionError("need m >= 2 and n >= 1")
    role = tuple(role)
    pattern, reason = _support_pattern(m, n, k, role)
    if pattern is None:
        return ConstructionResult(m, n, infeasible=reason)
    if n == 1:
        role = (1, 2)
    return construct_from_pattern(m, n, pattern, role)


def feasible_support_sizes(m: int, n: int) -> set[int]:
    if m < 2 or n < 1:
        raise PreconditionError("need m >= 2 and n >= 1")
    out = set(range(3, m + 2))
    if n == 1 and m >= 3:
        out.discard(m + 1)
    return out
