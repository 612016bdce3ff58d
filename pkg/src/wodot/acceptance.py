"""Exit-criteria suite, shared by ``wodot selftest`` and tests/test_acceptance.py.

Every check compares the library against an independent route (brute-force
enumeration, permutation listing, or a structural prediction) with exact
equality.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from . import congruence as cg
from .groups import (
    ElementSet,
    GroupSpec,
    coset_decompose,
    order_of,
    stabilizer,
    star_span,
    sumset,
)
from .sequences import GSequence, sigma
from .theorem import check_key_lemma, find_special_subset, verify_main_theorem
from .weighted import (
    WeightSeq,
    check_sequence_shift,
    check_weight_shift,
    odot,
    odot_naive,
)
from .zerosum import construct_with_support, feasible_support_sizes, max_minimal_length

DEFAULT_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.name} ({self.detail}; {self.seconds:.1f}s)"


def _groups(*mods: tuple[int, ...]) -> list[GroupSpec]:
    return [GroupSpec(m) for m in mods]


THEOREM_GROUPS = _groups((2,), (3,), (4,), (5,), (6,), (7,), (8,),
                         (2, 2), (2, 4), (3, 3), (2, 2, 2))
SMALL_GROUPS = _groups((2,), (3,), (4,), (2, 2), (5,), (6,))
ORDER_5_TO_12 = _groups((5,), (6,), (7,), (8,), (2, 4), (2, 2, 2), (9,), (3, 3), (10,), (11,),
                        (12,), (2, 6))
UP_TO_8 = _groups((2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (2, 4), (2, 2, 2))
RANDOM_POOL = _groups((2,), (3,), (4,), (5,), (6,), (7,), (8,), (9,), (10,), (12,), (2, 2),
                      (2, 4), (3, 3), (2, 6), (2, 2, 2), (4, 4), (2, 2, 3))
ZEROSUM_PAIRS = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1)]


def _multisets(n: int, length: int) -> Iterable[tuple[int, ...]]:
    return itertools.combinations_with_replacement(range(n), length)


def _random_sequence(rng: random.Random, G: GroupSpec, length: int) -> GSequence:
    return GSequence._from_counts(
        G, dict(_count(rng.randrange(G.order) for _ in range(length)))
    )


def _count(xs: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in xs:
        out[x] = out.get(x, 0) + 1
    return out


# -- criterion 1 ---------------------------------------------------------------

def criterion_1(seed: int = DEFAULT_SEED, progress: Optional[Callable[[str], None]] = None):
    bad = []
    total = 0
    for G in THEOREM_GROUPS:
        rep = verify_main_theorem(G, G.order + 1, progress=progress)
        total += rep.total
        if not rep.ok:
            bad.append(f"{G}: {len(rep.bound_violations)} bound, {len(rep.mismatches)} mismatch")
    return not bad, f"{total} sequences over {len(THEOREM_GROUPS)} groups" + (
        "; " + "; ".join(bad) if bad else "")


# -- criterion 2 ---------------------------------------------------------------

def criterion_2(seed: int = DEFAULT_SEED, progress=None):
    checked = 0
    bad = []
    for G in SMALL_GROUPS:
        seqs = [GSequence._from_counts(G, _count(c)) for ln in range(6) for c in _multisets(G.order, ln)]
        for start in range(G.exponent):
            for ln in range(6):
                W = WeightSeq.run(start, ln)
                for S in seqs:
                    checked += 1
                    if odot(W, S) != odot_naive(W, S):
                        bad.append(f"{G} W={W} S={S}")
    rng = random.Random(seed)
    for _ in range(10_000):
        G = rng.choice(RANDOM_POOL)
        r = rng.randint(0, 7)
        extra = rng.randint(0, 1 if r >= 6 else 2)
        lw, ls = (r, r + extra) if rng.random() < 0.5 else (r + extra, r)
        W = WeightSeq(rng.randint(-20, 20) for _ in range(lw))
        S = _random_sequence(rng, G, ls)
        checked += 1
        if odot(W, S) != odot_naive(W, S):
            bad.append(f"{G} W={W} S={S}")
    return not bad, f"{checked} instances" + (f"; first mismatch {bad[0]}" if bad else "")


# -- criterion 3 ---------------------------------------------------------------

def criterion_3(seed: int = DEFAULT_SEED, progress=None):
    rng = random.Random(seed + 3)
    fails = {"weight-shift": 0, "sequence-shift": 0, "generation": 0}
    for _ in range(10_000):
        G = rng.choice(RANDOM_POOL)
        ls = rng.randint(0, 8)
        W = WeightSeq(rng.randint(-15, 15) for _ in range(ls + rng.randint(0, 2)))
        if not check_weight_shift(W, _random_sequence(rng, G, ls), rng.randint(-30, 30)):
            fails["weight-shift"] += 1
    for _ in range(10_000):
        G = rng.choice(RANDOM_POOL)
        lw = rng.randint(0, 8)
        W = WeightSeq(rng.randint(-15, 15) for _ in range(lw))
        S = _random_sequence(rng, G, lw + rng.randint(0, 2))
        if not check_sequence_shift(W, S, G.from_index(rng.randrange(G.order))):
            fails["sequence-shift"] += 1
    for _ in range(10_000):
        G = rng.choice(RANDOM_POOL)
        ln = rng.randint(1, 9)
        S = _random_sequence(rng, G, ln)
        W = WeightSeq.run(rng.randint(-10, 10), ln)
        if star_span(odot(W, S)) != star_span(S.support()):
            fails["generation"] += 1
    return not any(fails.values()), ", ".join(f"{k}: {v} failures / 10000" for k, v in fails.items())


# -- criterion 4 ---------------------------------------------------------------

def criterion_4(seed: int = DEFAULT_SEED, progress=None):
    key = special = 0
    bad = []
    for n in range(3, 13):
        G = GroupSpec.cyclic(n)
        for x in range(1, n):
            for y in range(1, n):
                if math.gcd(x, y, n) != 1:
                    continue
                for L in range(2, n + 2):
                    key += 1
                    if not check_key_lemma(G, x, y, L):
                        bad.append(f"key lemma C{n} x={x} y={y} L={L}")
    for G in ORDER_5_TO_12:
        els = G.elements()
        for x, y, z in itertools.permutations(els, 3):
            if len(star_span(G.set([x, y, z]))) != G.order:
                continue
            if min(order_of(x - z), order_of(y - z), order_of(x - y)) < 3:
                continue
            special += 1
            X = find_special_subset(G, x, y, z)
            A = odot(WeightSeq.run(0, 3), GSequence.from_terms(G, [x, y, z]))
            target = star_span(G.set([x, z])).translate(3 * z)
            ok = (len(X) == 4 and X <= A and len(X & target) >= 2
                  and len(star_span(X)) == G.order
                  and (G.order == 6 or len(stabilizer(X)) != 2))
            if not ok:
                bad.append(f"special subset {G} {x},{y},{z}")
    return not bad, f"{key} key-lemma cases, {special} special-subset triples" + (
        f"; {bad[:3]}" if bad else "")


# -- criteria 5 and 6 ----------------------------------------------------------

def _perm_matrix(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def _oracle_residues(perms: np.ndarray, coeffs: np.ndarray, n: int) -> np.ndarray:
    """presence[t, α] = some permutation x gives Σ a_i x_i ≡ α, for each row t of coeffs."""
    out = np.zeros((coeffs.shape[0], n), dtype=bool)
    step = max(1, 2_000_000 // perms.shape[0])
    for lo in range(0, coeffs.shape[0], step):
        sums = (coeffs[lo:lo + step] @ perms.T) % n
        for a in range(n):
            out[lo:lo + step, a] = (sums == a).any(axis=1)
    return out


def _criterion_5_instances(seed: int):
    """Yield (n, coefficient tuples array, alphas per tuple as list of lists)."""
    for n in (3, 4, 5):
        tuples = np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int64)
        yield n, tuples, [list(range(n))] * len(tuples)
    tuples = np.array(list(itertools.product(range(6), repeat=6)), dtype=np.int64)
    yield 6, tuples, [[0, 1]] * len(tuples)
    rng = random.Random(seed + 5)
    for n in (7, 8, 9):
        tuples = np.array([[rng.randint(-3 * n, 3 * n) for _ in range(n)] for _ in range(1000)],
                          dtype=np.int64)
        yield n, tuples, [[rng.randint(-3 * n, 3 * n)] for _ in range(1000)]


def criterion_5(seed: int = DEFAULT_SEED, progress=None):
    cases = witnesses = 0
    bad = []
    for n, tuples, alphas in _criterion_5_instances(seed):
        presence = _oracle_residues(_perm_matrix(n), tuples, n)
        for row, als, pres in zip(tuples.tolist(), alphas, presence):
            inst = cg.normalize(row, n=n)
            for al in als:
                cases += 1
                v = cg.construct(inst, al)
                if v.solvable != bool(pres[al % n]):
                    bad.append(f"n={n} a={row} α={al}")
                if v.solvable:
                    w = v.witness
                    if sorted(w) != list(range(n)) or (sum(a * x for a, x in zip(row, w)) - al) % n:
                        bad.append(f"witness n={n} a={row} α={al}")
                    witnesses += 1
        if progress:
            progress(f"congruence n={n}: {len(tuples)} tuples")
    return not bad, f"{cases} (tuple, α) cases, {witnesses} witnesses substituted" + (
        f"; {bad[:3]}" if bad else "")


def criterion_6(seed: int = DEFAULT_SEED, progress=None):
    cases = 0
    bad = []
    for n, tuples, _ in _criterion_5_instances(seed):
        for row in tuples.tolist():
            inst = cg.normalize(row, n=n)
            cases += 1
            if cg.decide_alpha_one(inst) != cg.decide(inst, 1).solvable:
                bad.append(f"n={n} a={row}")
    named = [
        ((1, 1, 1, 1), 4, False),
        ((1,) * 6, 6, False),
        ((1, 1, 1, 1, 1, 3), 6, True),
    ]
    for a, n, expected in named:
        inst = cg.normalize(a, n=n)
        if cg.decide_alpha_one(inst) != expected or cg.decide(inst, 1).solvable != expected:
            bad.append(f"named family {a} mod {n}")
    return not bad, f"{cases} instances + {len(named)} named families" + (
        f"; {bad[:3]}" if bad else "")


# -- criterion 7 ---------------------------------------------------------------

def minimal_zero_sum_oracle(S: GSequence) -> bool:
    """Walk every multiplicity vector 0 <= u <= v_g(S) with plain coordinate sums."""
    G = S.group
    items = sorted(S.counts.items())
    full = tuple(k for _, k in items)
    coords = [G.coords(i) for i, _ in items]
    if any(sum(k * c[j] for k, c in zip(full, coords)) % m for j, m in enumerate(G.moduli)):
        return False
    for u in itertools.product(*(range(k + 1) for k in full)):
        if u == full or not any(u):
            continue
        if not any(sum(k * c[j] for k, c in zip(u, coords)) % m for j, m in enumerate(G.moduli)):
            return False
    return True


def criterion_7(seed: int = DEFAULT_SEED, progress=None):
    bad = []
    built = 0
    for m, n in ZEROSUM_PAIRS:
        feas = feasible_support_sizes(m, n)
        for k in range(3, m + 2):
            res = construct_with_support(m, n, k)
            if k in feas:
                S = res.sequence
                ok = (res.feasible and len(S) == max_minimal_length(m, n)
                      and len(S.support()) == k and not sigma(S)
                      and minimal_zero_sum_oracle(S))
                built += ok
                if not ok:
                    bad.append(f"(m,n,k)=({m},{n},{k}) not realized")
            elif res.feasible:
                bad.append(f"(m,n,k)=({m},{n},{k}) unexpectedly feasible")
        expected_missing = {m + 1} if n == 1 and m >= 3 else set()
        if set(range(3, m + 2)) - feas != expected_missing:
            bad.append(f"feasible sizes for ({m},{n}) = {sorted(feas)}")
    return not bad, f"{built} sequences built and brute-force verified over {len(ZEROSUM_PAIRS)} pairs" + (
        f"; {bad}" if bad else "")


# -- criterion 8 ---------------------------------------------------------------

def _phi_size(A: ElementSet, H: ElementSet) -> int:
    return len(coset_decompose(A, H))


def kneser_holds(sets: list[ElementSet]) -> bool:
    total = sets[0]
    for A in sets[1:]:
        total = sumset(total, A)
    H = stabilizer(total)
    return _phi_size(total, H) >= sum(_phi_size(A, H) for A in sets) - len(sets) + 1


def criterion_8(seed: int = DEFAULT_SEED, progress=None):
    kneser = pigeon = 0
    bad = []
    for G in UP_TO_8:
        n = G.order
        subsets = [ElementSet.from_bits(G, b) for b in range(1, 1 << n)]
        for i, A in enumerate(subsets):
            for B in subsets[i:]:
                kneser += 1
                if not kneser_holds([A, B]):
                    bad.append(f"kneser {G} {A} {B}")
                if len(A) + len(B) - 1 >= n:
                    pigeon += 1
                    if len(sumset(A, B)) != n:
                        bad.append(f"pigeonhole {G} {A} {B}")
    rng = random.Random(seed + 8)
    pool = [G for G in RANDOM_POOL if G.order <= 24] + _groups((16,), (4, 4), (2, 8), (3, 6), (24,), (2, 12))
    for _ in range(1000):
        G = rng.choice(pool)
        fam = []
        for _ in range(rng.randint(1, 4)):
            size = rng.randint(1, max(1, G.order // 2))
            fam.append(ElementSet._from_indices(G, rng.sample(range(G.order), size)))
        kneser += 1
        if not kneser_holds(fam):
            bad.append(f"kneser random {G}")
    return not bad, f"{kneser} Kneser families, {pigeon} pigeonhole pairs" + (
        f"; {bad[:3]}" if bad else "")


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "main theorem, exhaustive small groups", criterion_1),
    (2, "W⊙S DP agrees with the permutation oracle", criterion_2),
    (3, "shift identities and generation", criterion_3),
    (4, "two-term bounds and special 4-subsets", criterion_4),
    (5, "congruence characterization vs permutation oracle", criterion_5),
    (6, "α = 1 parity table", criterion_6),
    (7, "rank-2 maximal minimal zero-sum realizability", criterion_7),
    (8, "Kneser and pigeonhole sanity", criterion_8),
]


def run_criterion(number: int, seed: int = DEFAULT_SEED, progress=None) -> CriterionResult:
    _, name, fn = CRITERIA[number - 1]
    t0 = time.perf_counter()
    passed, detail = fn(seed, progress)
    return CriterionResult(number, name, passed, detail, time.perf_counter() - t0)


def run_all(seed: int = DEFAULT_SEED, progress=None) -> list[CriterionResult]:
    return [run_criterion(num, seed, progress) for num, _, _ in CRITERIA]
