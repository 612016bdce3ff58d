import random

import pytest

from wodot import (
    GroupSpec,
    GSequence,
    Kind,
    NotApplicableError,
    PreconditionError,
    WeightSeq,
    check_key_lemma,
    check_punctured,
    classify_full_length,
    find_special_subset,
    lower_bound,
    odot,
    order_of,
    scalar_mul,
    stabilizer,
    star_span,
    translate,
    verify_main_theorem,
)
from wodot.theorem import generates_up_to_translation

C4, C5, C6, C7, C9 = (GroupSpec.cyclic(n) for n in (4, 5, 6, 7, 9))
K4 = GroupSpec((2, 2))


def run(S):
    return odot(WeightSeq.run(0, len(S)), S)


def test_lower_bound_values():
    assert lower_bound(C5, GSequence.from_terms(C5, [0, 1, 2])) == 3
    assert lower_bound(C5, GSequence.from_terms(C5, [0, 1, 2, 2, 3, 4, 4])) == 4
    with pytest.raises(NotApplicableError):
        lower_bound(C6, GSequence.from_terms(C6, [1, 3, 5]))


@pytest.mark.parametrize("G", [C5, C7, GroupSpec.cyclic(8)], ids=str)
def test_lower_bound_is_tight_for_zeros_and_a_generator(G):
    for length in range(2, G.order):
        S = GSequence(G, {0: length - 1, 1: 1})
        assert len(run(S)) == length == lower_bound(G, S)
    S = GSequence(G, {0: G.order - 1, 1: 1})
    assert lower_bound(G, S) == G.order - 1 and run(S) == G.full()


def test_classify_examples():
    c = classify_full_length(C4, GSequence.from_terms(C4, [0, 0, 1, 3]))
    assert c.kind is Kind.CYCLIC and c.gprime == C4.zero and c.predicted_missing == C4.zero
    assert c.g in (C4.elem(1), C4.elem(3))

    c = classify_full_length(K4, GSequence.from_terms(K4, K4.elements()))
    assert c.kind is Kind.KLEIN and c.predicted_missing == K4.zero

    S = GSequence.from_terms(C5, [0, 0, 1, 2, 3])
    assert classify_full_length(C5, S).kind is Kind.FULL
    assert run(S) == C5.full()


def test_classify_not_applicable():
    assert classify_full_length(C5, GSequence.from_terms(C5, [0, 1])).kind is Kind.NOT_APPLICABLE
    assert classify_full_length(C6, GSequence.from_terms(C6, [0, 2, 4, 0, 2, 4])).kind \
        is Kind.NOT_APPLICABLE


def test_cyclic_exception_missing_element_for_nonzero_shift():
    n = 7
    for gp in range(n):
        for g in (1, 2, 3):
            S = translate(gp, GSequence(C7, {0: n - 2, g: 1, n - g: 1}))
            c = classify_full_length(C7, S)
            assert c.kind is Kind.CYCLIC
            assert C7.full() - run(S) == C7.set([c.predicted_missing])
            assert c.predicted_missing == C7.elem((n - 1) * n // 2 * gp)


def test_verify_c5():
    rep = verify_main_theorem(C5, 6)
    assert rep.ok and not rep.bound_violations
    got = {S for S, _ in rep.exceptions}
    expected = {translate(gp, GSequence(C5, {0: 3, g: 1, 5 - g: 1}))
                for gp in range(5) for g in range(1, 5)}
    assert got == expected
    assert rep.witnesses == rep.checked[6]


def test_verify_klein_and_c2():
    rep = verify_main_theorem(K4, 5)
    assert rep.ok
    assert [S for S, _ in rep.exceptions] == [GSequence.from_terms(K4, K4.elements())]
    rep = verify_main_theorem(GroupSpec.cyclic(2), 3)
    assert rep.ok and rep.exceptions == []


def test_verify_rejects_long_max_len():
    with pytest.raises(PreconditionError):
        verify_main_theorem(C5, 7)


def test_report_merge_and_json():
    a = verify_main_theorem(C4, 3)
    b = verify_main_theorem(C4, 5)
    m = a.merge(b)
    assert m.total == a.total + b.total and m.ok
    assert m.to_json()["ok"] is True
    assert b.merge(a).to_json() != {}  # merge order only affects list order


def test_cyclic_exception_contains_generators():
    rep = verify_main_theorem(C9, 9)
    for S, c in rep.exceptions:
        A = run(S)
        assert all(g in A for g in C9.elements() if order_of(g) == 9)


def test_translation_covariance():
    rng = random.Random(4)
    for G in (C4, C5, C6, C7, K4, GroupSpec((2, 4))):
        for _ in range(40):
            S = GSequence.from_terms(G, [G.from_index(rng.randrange(G.order)) for _ in range(G.order)])
            c = classify_full_length(G, S)
            for g in G.elements():
                d = classify_full_length(G, translate(g, S))
                assert d.kind is c.kind
                if c.exceptional:
                    shift = scalar_mul(G.order * (G.order - 1) // 2, g)
                    assert d.predicted_missing == c.predicted_missing + shift


@pytest.mark.parametrize("mods", [(10,), (11,), (12,), (2, 6)])
def test_sampled_medium_groups(mods):
    G = GroupSpec(mods)
    rng = random.Random(sum(mods))
    n = G.order
    for _ in range(150):
        length = rng.randint(2, n + 1)
        S = GSequence.from_terms(G, [G.from_index(rng.randrange(n)) for _ in range(length)])
        if not generates_up_to_translation(S):
            continue
        A = run(S)
        assert len(A) >= lower_bound(G, S)
        if length == n + 1:
            assert A == G.full()
        if length == n:
            assert classify_full_length(G, S).exceptional == (A != G.full())


def test_key_lemma_examples():
    assert check_key_lemma(C5, 1, 1, 3)
    assert len(odot(WeightSeq.run(0, 3), GSequence.from_terms(C5, [1, 1]))) == 3
    assert check_key_lemma(C5, 1, 2, 3)
    for x in range(1, 5):
        for y in range(1, 5):
            assert check_key_lemma(C5, x, y, 2)
    with pytest.raises(PreconditionError):
        check_key_lemma(C6, 2, 4, 3)
    with pytest.raises(PreconditionError):
        check_key_lemma(C5, 0, 1, 3)


def _special_ok(G, x, y, z, X):
    A = odot(WeightSeq.run(0, 3), GSequence.from_terms(G, [x, y, z]))
    x, y, z = G.elem(x), G.elem(y), G.elem(z)
    target = star_span(G.set([x, z])).translate(3 * z)
    return (len(X) == 4 and X <= A and len(X & target) >= 2 and len(star_span(X)) == G.order)


def test_special_subset_examples():
    X = find_special_subset(C5, 1, 2, 0)
    assert _special_ok(C5, 1, 2, 0, X) and len(stabilizer(X)) != 2
    X = find_special_subset(C7, 3, 5, 0)
    assert _special_ok(C7, 3, 5, 0, X) and len(stabilizer(X)) != 2
    X = find_special_subset(C6, 1, 2, 0)
    assert _special_ok(C6, 1, 2, 0, X)


def test_special_subset_preconditions():
    with pytest.raises(PreconditionError):
        find_special_subset(C4, 1, 2, 0)
    with pytest.raises(PreconditionError):
        find_special_subset(C6, 1, 4, 0)  # ord(4 - 1) = 2


def test_punctured():
    assert check_punctured(C6.set([0, 2]), 4)
    assert check_punctured(C9.set([0, 3]), 6)
    with pytest.raises(PreconditionError):
        check_punctured(C4.set([0]), 2)  # period subgroup {0, 2} has order 2
    with pytest.raises(PreconditionError):
        check_punctured(C6.set([0, 2]), 2)
