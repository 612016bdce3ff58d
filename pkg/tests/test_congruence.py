import itertools
import math
import random

import numpy as np
import pytest

from wodot import (
    GroupSpec,
    GSequence,
    PreconditionError,
    WeightSeq,
    construct,
    decide,
    decide_all_alpha,
    decide_alpha_one,
    detect_special_family,
    normalize,
    odot,
)
from wodot.congruence import Branch, diff_gcd, project_witness, unreachable_alphas


def perm_oracle(a, n):
    """Residues Σ a_i x_i over all permutations x of [0, n-1]."""
    P = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    return set(np.unique(P @ np.array(a, dtype=np.int64) % n).tolist())


def odot_attainable(a, n):
    G = GroupSpec.cyclic(n)
    return {g.index for g in odot(WeightSeq.run(0, n), GSequence.from_terms(G, [x % n for x in a]))}


def special_oracle(a, n):
    """Exhaustive search over ordered triples of distinct indices."""
    for j, k, l in itertools.permutations(range(n), 3):
        if (a[j] - a[l]) % n != (a[l] - a[k]) % n or math.gcd(a[j] - a[l], n) != 1:
            continue
        if all((a[i] - a[l]) % n == 0 for i in range(n) if i not in (j, k)):
            return True
    return False


def test_normalize():
    inst = normalize((1, 2), 2, 4)
    assert inst.coeffs == (1, 2, 0, 0) and inst.r == 2 and inst.original == (1, 2)
    assert normalize((1, 2, 3, 4), n=4).coeffs == (1, 2, 3, 0)
    assert normalize((5, -1, 2), n=3).coeffs == (2, 2, 2)
    with pytest.raises(PreconditionError):
        normalize((1, 1, 1, 1, 1), n=4)
    with pytest.raises(PreconditionError):
        normalize((1,), n=4)
    assert project_witness(inst, (3, 1, 0, 2)) == (3, 1)


def test_special_family_examples():
    j, k, l = detect_special_family(normalize((0, 0, 0, 1, 4), n=5))
    a = (0, 0, 0, 1, 4)
    assert (a[j], a[k], a[l]) == (1, 4, 0)
    assert detect_special_family(normalize((1, 1, 1, 1), n=4)) is None
    assert detect_special_family(normalize((0, 0, 0, 2, 3), n=5)) is not None


def test_decide_examples():
    v = decide(normalize((1, 1, 1, 1), n=4), 1)
    assert not v.solvable and v.gcd == 4 and v.half_term == 2
    inst = normalize((0, 0, 0, 1, 4), n=5)
    assert decide(inst, 1).solvable
    v = decide(inst, 5)
    assert not v.solvable and v.branch is Branch.SPECIAL_FAMILY
    for n in (3, 4, 7):
        zero = normalize((0,) * n, n=n)
        assert decide(zero, 0).solvable and not decide(zero, 1).solvable
    v = decide(normalize((1, 1, 1, 1, 1, 3), n=6), 1)
    assert v.solvable and v.gcd == 2 and v.half_term == 3 and v.branch is Branch.GENERAL_GCD


def test_construct_examples():
    inst = normalize((1, 1, 1, 1, 1, 3), n=6)
    v = construct(inst, 1)
    assert v.witness == (0, 1, 2, 3, 4, 5)
    assert sum(c * x for c, x in zip(inst.coeffs, v.witness)) % 6 == 1
    v = construct(normalize((1, 1, 1, 1), n=4), 2)
    assert v.solvable and sorted(v.witness) == [0, 1, 2, 3]
    v = construct(normalize((1, 1, 1, 1), n=4), 1)
    assert not v.solvable and v.witness is None
    assert v.to_json() == {"solvable": False, "branch": "general-gcd", "alpha": 1, "gcd": 4,
                           "half_term": 2}


def test_n2_table():
    for a in itertools.product(range(2), repeat=2):
        inst = normalize(a, n=2)
        reach = perm_oracle(a, 2)
        for alpha in range(2):
            v = decide(inst, alpha)
            assert v.branch is Branch.N2_TABLE and v.solvable == (alpha in reach)
            assert construct(inst, alpha).solvable == v.solvable
        assert decide_alpha_one(inst) == (1 in reach)


def test_decide_all_alpha_examples():
    assert decide_all_alpha(normalize((0, 0, 0, 0, 1), n=5))
    inst = normalize((0, 0, 0, 1, 4), n=5)
    assert not decide_all_alpha(inst) and unreachable_alphas(inst) == [0]
    assert not decide_all_alpha(normalize((0, 0, 0, 2), n=4))
    with pytest.raises(PreconditionError):
        decide_all_alpha(normalize((0, 1), n=2))


def test_decide_alpha_one_examples():
    assert not decide_alpha_one(normalize((1,) * 6, n=6))
    assert decide_alpha_one(normalize((1, 1, 1, 1, 1, 3), n=6))
    for a in itertools.product((1, 3, 5, 7), repeat=3):
        assert not decide_alpha_one(normalize(a + (1,) * 5, n=8))
    assert decide_alpha_one(normalize((1, 2), 2, 5))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_exhaustive_against_oracles(n):
    for a in itertools.combinations_with_replacement(range(n), n):
        reach = perm_oracle(a, n)
        assert reach == odot_attainable(a, n)
        inst = normalize(a, n=n)
        assert (detect_special_family(inst) is not None) == special_oracle(a, n)
        for alpha in range(n):
            v = decide(inst, alpha)
            assert v.solvable == (alpha in reach), (a, alpha)
            assert decide(inst, alpha + 3 * n).solvable == v.solvable
        assert decide_all_alpha(inst) == (len(reach) == n)
        assert decide_alpha_one(inst) == (1 in reach)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_exhaustive_ordered_tuples_small(n):
    # ordering matters for the index-based certificates, so walk all tuples for n <= 5
    if n == 6:
        tuples = random.Random(6).sample(list(itertools.product(range(n), repeat=n)), 3000)
    else:
        tuples = itertools.product(range(n), repeat=n)
    for a in tuples:
        inst = normalize(a, n=n)
        fam = detect_special_family(inst)
        if fam is not None:
            j, k, l = fam
            assert len({j, k, l}) == 3
            assert (a[j] - a[l]) % n == (a[l] - a[k]) % n and math.gcd(a[j] - a[l], n) == 1
        for alpha in (0, 1):
            v = construct(inst, alpha)
            if v.solvable:
                assert sorted(v.witness) == list(range(n))
                assert sum(c * x for c, x in zip(a, v.witness)) % n == alpha


@pytest.mark.parametrize("n", [7, 8, 9])
def test_random_tuples_against_odot(n):
    rng = random.Random(n)
    for _ in range(1000):
        a = [rng.randrange(n) for _ in range(n)]
        if rng.random() < 0.3:  # bias towards the special family and large gcds
            c, u = rng.randrange(n), rng.choice([u for u in range(1, n) if math.gcd(u, n) == 1])
            a = [c] * n
            a[rng.randrange(n)] = (c + u) % n
            a[min(range(n), key=lambda i: (a[i] != c, rng.random()))] = (c - u) % n
        reach = odot_attainable(a, n)
        inst = normalize(a, n=n)
        for alpha in range(n):
            assert decide(inst, alpha).solvable == (alpha in reach)
        assert decide_alpha_one(inst) == (1 in reach)


def test_construct_random_larger():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(7, 11)
        a = [rng.randrange(-20, 20) for _ in range(rng.randint(2, n))]
        inst = normalize(a, n=n)
        alpha = rng.randrange(n)
        v = construct(inst, alpha)
        assert v.solvable == decide(inst, alpha).solvable
        if v.solvable:
            x = project_witness(inst, v.witness)
            assert len(set(x)) == len(a) and sum(c * xi for c, xi in zip(a, x)) % n == alpha


def test_gcd_symmetry():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(2, 30)
        inst = normalize([rng.randrange(-50, 50) for _ in range(n)], n=n)
        assert len({diff_gcd(inst, i) for i in range(n)}) == 1


def test_half_modulus_coprimality():
    # n ≡ 2 (mod 4), x = n/2 odd: gcd(x, (x-1)/2) = 1, so with all a_i odd the
    # α = 1 condition collapses to gcd = 2
    for n in range(6, 200, 4):
        x = n // 2
        assert x % 2 == 1 and math.gcd(x, (x - 1) // 2) == 1
    rng = random.Random(8)
    for n in (6, 10):
        for _ in range(200):
            a = [rng.randrange(n) | 1 for _ in range(n)]
            inst = normalize(a, n=n)
            assert decide_alpha_one(inst) == (diff_gcd(inst) == 2) == decide(inst, 1).solvable
