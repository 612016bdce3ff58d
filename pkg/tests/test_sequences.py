import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wodot import (
    BudgetExceededError,
    GroupSpec,
    GSequence,
    PreconditionError,
    is_minimal_zero_sum,
    is_zero_sum,
    is_zero_sum_free,
    override,
    scalar_mul,
    sigma,
    sigma_n,
    subsequence_sums,
    translate,
)

C4, C6 = GroupSpec.cyclic(4), GroupSpec.cyclic(6)
GROUPS = [GroupSpec(m) for m in [(3,), (4,), (6,), (2, 2), (2, 4), (3, 3)]]


def seqs(G, max_len=8):
    return st.lists(st.integers(0, G.order - 1), max_size=max_len).map(
        lambda xs: GSequence.from_terms(G, [G.from_index(i) for i in xs])
    )


def naive_sigma_n(S, n):
    terms = list(S.terms())
    out = set()
    for idx in itertools.combinations(range(len(terms)), n):
        total = S.group.zero
        for i in idx:
            total = total + terms[i]
        out.add(total)
    return S.group.set(out)


def test_sigma():
    assert sigma(GSequence(C6)) == C6.zero
    g = C6.elem(2)
    S = GSequence(C6, {0: 4, g: 1, -g: 1})
    assert sigma(S) == C6.zero
    assert sigma(GSequence.parse(C6, "1^2 3")) == C6.elem(5)


def test_translate():
    S = GSequence.parse(C4, "0^3 2")
    assert translate(0, S) == S
    assert translate(1, S) == GSequence.parse(C4, "1^3 3")
    for g in C4.elements():
        assert translate(g, S).h == S.h


def test_sigma_n_examples():
    S = GSequence.from_terms(C4, [0, 1, 2])
    assert sigma_n(S, 0) == C4.set([0])
    assert sigma_n(S, 2) == C4.set([1, 2, 3])
    assert sigma_n(S, 3) == C4.set([sigma(S)])
    with pytest.raises(PreconditionError):
        sigma_n(S, 4)


def test_minimal_zero_sum_examples():
    for g in C6.elements()[1:]:
        assert is_minimal_zero_sum(GSequence.from_terms(C6, [g, -g]))
    assert not is_minimal_zero_sum(GSequence.from_terms(C6, [0, 3, 3]))
    K = GroupSpec((2, 2))
    assert is_minimal_zero_sum(GSequence.from_terms(K, [(1, 0), (0, 1), (1, 1)]))
    assert is_zero_sum(GSequence.from_terms(C6, [0, 3, 3]))
    assert is_zero_sum_free(GSequence.from_terms(C6, [1] * 5))
    assert not is_zero_sum_free(GSequence.from_terms(C6, [1] * 6))


def test_budget_is_an_error_not_false():
    S = GSequence.from_terms(C6, [1] * 5 + [2] * 5)  # 36 multiplicity vectors
    with override(enum_budget=30):
        with pytest.raises(BudgetExceededError):
            is_minimal_zero_sum(S)
        with pytest.raises(BudgetExceededError):
            is_zero_sum_free(S)


def test_parse_and_json_round_trip():
    G = GroupSpec((2, 4))
    S = GSequence.parse(G, "0,0^2 1,1")
    assert len(S) == 3 and S.v((0, 0)) == 2
    assert GSequence.from_json(S.to_json()) == S
    with pytest.raises(PreconditionError):
        GSequence.parse(G, "0^2")  # wrong rank


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_translate_shifts_sum(G, data):
    S = data.draw(seqs(G))
    g = G.from_index(data.draw(st.integers(0, G.order - 1)))
    T = translate(g, S)
    assert len(T) == len(S)
    assert sigma(T) == sigma(S) + scalar_mul(len(S), g)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_sigma_n_matches_index_subsets(G, data):
    S = data.draw(seqs(G, 10))
    for n in range(len(S) + 1):
        assert sigma_n(S, n) == naive_sigma_n(S, n)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_zero_sum_free_iff_zero_not_in_subsums(G, data):
    S = data.draw(seqs(G, 10).filter(len))
    sums = subsequence_sums(S)
    assert sigma(S) in sums
    assert is_zero_sum_free(S) == (G.zero not in sums)
