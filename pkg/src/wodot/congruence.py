"""Solutions of a_1 x_1 + ... + a_n x_n ≡ α (mod n) with the x_i pairwise distinct mod n.

Such solutions are exactly the permutations x of [0, n-1], so the attainable
right-hand sides form W⊙S for W = (0)(1)...(n-1) and S = ā_1 · ... · ā_n over C_n.
Writing T = n(n-1)/2, the attainable set is

* T·a_1 + d·Z with d = gcd(a_2 - a_1, ..., a_n - a_1, n), except when
* all but two coefficients are ≡ c and the other two are c ± u with
  gcd(u, n) = 1; then it is everything except T·c mod n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Sequence

from .config import settings
from .errors import BudgetExceededError, PreconditionError, TheoremViolation


class Branch(str, Enum):
    GENERAL_GCD = "general-gcd"
    SPECIAL_FAMILY = "special-family"
    N2_TABLE = "n2-table"


@dataclass(frozen=True)
class CongruenceInstance:
    modulus: int
    original: tuple[int, ...]
    r: int
    coeffs: tuple[int, ...]  # reduced mod n and zero-padded to length n
    alpha: Optional[int] = None

    def with_alpha(self, alpha: int) -> "CongruenceInstance":
        return replace(self, alpha=alpha)


@dataclass(frozen=True)
class CongruenceVerdict:
    solvable: bool
    branch: Branch
    alpha: int
    special: Optional[tuple[int, int, int]] = None  # (j, k, l), 0-based
    gcd: Optional[int] = None
    half_term: Optional[int] = None  # T·a_1 (general) or T·a_l (special), mod n
    witness: Optional[tuple[int, ...]] = None

    def to_json(self) -> dict:
        out: dict = {"solvable": self.solvable, "branch": self.branch.value, "alpha": self.alpha}
        if self.gcd is not None:
            out["gcd"] = self.gcd
        if self.special is not None:
            out["special"] = list(self.special)
        if self.half_term is not None:
            out["half_term"] = self.half_term
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def normalize(a: Sequence[int], r: Optional[int] = None, n: int = 0, alpha: Optional[int] = None
              ) -> CongruenceInstance:
    """Pad the first r coefficients with n - r zeros."""
    a = tuple(int(x) for x in a)
    r = len(a) if r is None else r
    if n < 2:
        raise PreconditionError("modulus must be >= 2")
    if r != len(a):
        raise PreconditionError(f"got {len(a)} coefficients for r = {r}")
    if r > n:
        raise PreconditionError(f"{r} pairwise distinct residues do not exist modulo {n}")
    if r < 2:
        raise PreconditionError("need at least two unknowns")
    coeffs = tuple(x % n for x in a) + (0,) * (n - r)
    return CongruenceInstance(n, a, r, coeffs, alpha)


def diff_gcd(inst: CongruenceInstance, i: int = 0) -> int:
    """gcd(a_1 - a_i, ..., a_n - a_i, n); independent of i."""
    a = inst.coeffs
    return math.gcd(inst.modulus, *(x - a[i] for x in a))


def _half(n: int) -> int:
    return n * (n - 1) // 2


def detect_special_family(inst: CongruenceInstance) -> Optional[tuple[int, int, int]]:
    """Indices (j, k, l) with a_j - a_l ≡ -(a_k - a_l), gcd(a_j - a_l, n) = 1 and
    a_i ≡ a_l for every other i; None if there are none.
    """
    n, a = inst.modulus, inst.coeffs
    if n < 3:
        return None
    seen = []
    for c in a:
        if c not in seen:
            seen.append(c)
    for c in seen:
        others = [i for i, x in enumerate(a) if x != c]
        if len(others) != 2:
            continue
        j, k = others
        u = (a[j] - c) % n
        if (a[k] - c) % n == (-u) % n and math.gcd(u, n) == 1:
            return j, k, a.index(c)
    return None


def _check_alpha(inst: CongruenceInstance, alpha: Optional[int]) -> int:
    alpha = inst.alpha if alpha is None else alpha
    if alpha is None:
        raise PreconditionError("no target α given")
    return int(alpha)


_N2 = {(0, 0): {0}, (0, 1): {0, 1}, (1, 1): {1}}


def decide(inst: CongruenceInstance, alpha: Optional[int] = None) -> CongruenceVerdict:
    n, a = inst.modulus, inst.coeffs
    alpha = _check_alpha(inst, alpha)
    if n == 2:
        return CongruenceVerdict(alpha % 2 in _N2[tuple(sorted(a))], Branch.N2_TABLE, alpha)
    T = _half(n)
    fam = detect_special_family(inst)
    if fam is not None:
        missing = T * a[fam[2]] % n
        return CongruenceVerdict(
            alpha % n != missing, Branch.SPECIAL_FAMILY, alpha, special=fam, half_term=missing
        )
    d = diff_gcd(inst)
    base = T * a[0] % n
    return CongruenceVerdict((alpha - base) % d == 0, Branch.GENERAL_GCD, alpha, gcd=d,
                             half_term=base)


def _rot(bits: int, k: int, n: int, mask: int) -> int:
    k %= n
    return ((bits << k) | (bits >> (n - k))) & mask if k else bits


def _suffix_table(a: Sequence[int], n: int) -> list[int]:
    """reach[R] = bitmask of Σ_{i >= n - |R|} a_i x_i over bijections onto residue set R."""
    if n > settings.mask_bits:
        raise BudgetExceededError(f"witness search needs 2**{n} states > 2**{settings.mask_bits}")
    mask = (1 << n) - 1
    reach = [0] * (1 << n)
    reach[0] = 1
    for R in range(1, 1 << n):
        ai = a[n - bin(R).count("1")]
        acc = 0
        rest = R
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            acc |= _rot(reach[R ^ low], ai * x, n, mask)
            rest ^= low
        reach[R] = acc
    return reach


def construct(inst: CongruenceInstance, alpha: Optional[int] = None) -> CongruenceVerdict:
    """decide() plus the lexicographically least witness permutation when solvable."""
    verdict = decide(inst, alpha)
    n, a = inst.modulus, inst.coeffs
    reach = _suffix_table(a, n)
    target = verdict.alpha % n
    found = bool(reach[(1 << n) - 1] >> target & 1)
    if found != verdict.solvable:
        raise TheoremViolation(
            f"characterization says solvable={verdict.solvable}, search says {found} for {inst}"
        )
    if not found:
        return verdict
    remaining = (1 << n) - 1
    need = target
    xs = []
    for ai in a:
        for x in range(n):
            if not remaining >> x & 1:
                continue
            rest = (need - ai * x) % n
            if reach[remaining ^ (1 << x)] >> rest & 1:
                xs.append(x)
                remaining ^= 1 << x
                need = rest
                break
    witness = tuple(xs)
    if sorted(witness) != list(range(n)) or sum(c * x for c, x in zip(a, witness)) % n != target:
        raise TheoremViolation(f"bad witness {witness} for {inst}")
    return replace(verdict, witness=witness)


def project_witness(inst: CongruenceInstance, witness: Sequence[int]) -> tuple[int, ...]:
    """Restrict a witness back to the r original unknowns."""
    return tuple(witness[: inst.r])


def unreachable_alphas(inst: CongruenceInstance) -> list[int]:
    return [al for al in range(inst.modulus) if not decide(inst, al).solvable]


def decide_all_alpha(inst: CongruenceInstance) -> bool:
    """True iff every α admits a distinct-residue solution."""
    n = inst.modulus
    if n < 3:
        raise PreconditionError("needs n >= 3")
    if detect_special_family(inst) is not None:
        return False
    return diff_gcd(inst) == 1


def decide_alpha_one(inst: CongruenceInstance) -> bool:
    """Parity form of the α = 1 verdict."""
    n, a = inst.modulus, inst.coeffs
    if n == 2:
        return 1 in _N2[tuple(sorted(a))]
    d = diff_gcd(inst)
    if n % 2 == 1 or any(x % 2 == 0 for x in a):
        return d == 1
    if n % 4 == 0:
        return False
    return d == 2
