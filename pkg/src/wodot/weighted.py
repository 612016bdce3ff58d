"""Weighted restricted sumsets W⊙S."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Iterable, Sequence

import numpy as np

from ._kernels import odot_dp
from .config import settings
from .errors import BudgetExceededError, PreconditionError
from .groups import ElementSet, GroupSpec, require_exhaustive, scalar_mul
from .sequences import GSequence, sigma, translate


class WeightSeq:
    """A finite multiset of integer weights.

    >>> WeightSeq.run(0, 4)
    WeightSeq(0·1·2·3)
    """

    __slots__ = ("weights",)

    def __init__(self, weights: Iterable[int] = ()):
        self.weights: tuple[int, ...] = tuple(sorted(int(w) for w in weights))

    @classmethod
    def run(cls, start: int, length: int) -> "WeightSeq":
        """(start)(start+1)...(start+length-1)."""
        if length < 0:
            raise PreconditionError("run length must be >= 0")
        return cls(range(start, start + length))

    @classmethod
    def parse(cls, text: str) -> "WeightSeq":
        """``"0..4"`` (inclusive) or a comma list ``"0,1,1,5"``."""
        text = text.strip()
        try:
            if ".." in text:
                lo, hi = text.split("..")
                return cls(range(int(lo), int(hi) + 1))
            return cls(int(t) for t in text.split(",") if t.strip())
        except ValueError as exc:
            raise PreconditionError(f"bad weight spec {text!r}") from exc

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.weights))

    def is_run(self) -> bool:
        return all(b - a == 1 for a, b in zip(self.weights, self.weights[1:]))

    def __len__(self) -> int:
        return len(self.weights)

    def sigma(self) -> int:
        return sum(self.weights)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightSeq) and self.weights == other.weights

    def __hash__(self) -> int:
        return hash(self.weights)

    def __repr__(self) -> str:
        return f"WeightSeq({'·'.join(map(str, self.weights))})"


def shift_weights(W: WeightSeq, w: int) -> WeightSeq:
    """W + w."""
    return WeightSeq(x + w for x in W.weights)


def odot_bits(group: GroupSpec, weights: Sequence[int], counts: dict[int, int]) -> int:
    """W⊙S as a bitmask over element indices; ``counts`` maps index -> multiplicity.

    This is the allocation-light entry point used by the verification campaigns.
    """
    require_exhaustive(group)
    slen = sum(counts.values())
    L = max(len(weights), slen)
    ws = list(weights) + [0] * (L - len(weights))
    if slen < L:
        counts = dict(counts)
        counts[0] = counts.get(0, 0) + L - slen
    items = sorted((i, k) for i, k in counts.items() if k)
    nstates = math.prod(k + 1 for _, k in items)
    if nstates > 1 << settings.mask_bits:
        raise BudgetExceededError(
            f"W⊙S needs {nstates} DP states > 2**{settings.mask_bits}"
        )
    e = group.exponent
    words = odot_dp(
        np.array([w % e for w in ws], dtype=np.int64),
        np.array([i for i, _ in items], dtype=np.int64),
        np.array([k for _, k in items], dtype=np.int64),
        group.add_table,
        group.mul_table,
    )
    bits = 0
    for j, word in enumerate(words.tolist()):
        bits |= int(word) << (64 * j)
    return bits


def odot(W: WeightSeq, S: GSequence) -> ElementSet:
    """W⊙S: all w_1 g_1 + ... + w_r g_r over r-term subsequences matched bijectively,
    r = min(|W|, |S|).  Both empty gives {0}.
    """
    return ElementSet.from_bits(S.group, odot_bits(S.group, W.weights, S.counts))


def odot_naive(W: WeightSeq, S: GSequence) -> ElementSet:
    """W⊙S by listing every choice of r weights and every ordered choice of r terms."""
    G = S.group
    r = min(len(W), len(S))
    if r > settings.perm_budget:
        raise BudgetExceededError(f"r = {r} exceeds the permutation budget {settings.perm_budget}")
    terms = [G.coords(i) for i in S.term_indices()]
    weight_choices = set(itertools.combinations(W.weights, r))
    term_choices = set(itertools.permutations(terms, r))
    out = set()
    for ws in weight_choices:
        for ts in term_choices:
            total = [0] * G.rank
            for w, t in zip(ws, ts):
                for j, c in enumerate(t):
                    total[j] += w * c
            out.add(G.index(total))
    return ElementSet._from_indices(G, out)


def check_weight_shift(W: WeightSeq, S: GSequence, w: int) -> bool:
    """(W + w)⊙S == W⊙S + w·σ(S); only asserted when |W| >= |S|."""
    if len(W) < len(S):
        raise PreconditionError("weight-shift identity needs |W| >= |S|")
    lhs = odot(shift_weights(W, w), S)
    return lhs == odot(W, S).translate(scalar_mul(w, sigma(S)))


def check_sequence_shift(W: WeightSeq, S: GSequence, g) -> bool:
    """W⊙(g + S) == W⊙S + σ(W)·g; only asserted when |S| >= |W|."""
    if len(S) < len(W):
        raise PreconditionError("sequence-shift identity needs |S| >= |W|")
    g = S.group.elem(g)
    lhs = odot(W, translate(g, S))
    return lhs == odot(W, S).translate(scalar_mul(W.sigma(), g))
