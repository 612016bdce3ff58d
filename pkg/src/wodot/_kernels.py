"""Compiled inner loops."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def odot_dp(weights, elems, mults, add_table, mul_table):
    """Bitset (uint64 words) of all w_1 g_{π(1)} + ... + w_L g_{π(L)}.

    ``weights`` are already reduced mod the exponent and have the same length
    as the sequence described by ``elems``/``mults``.  The state is the vector
    of how many copies of each distinct term have been consumed; weights are
    handed out in order, so the state also fixes which weight comes next.
    """
    n = add_table.shape[0]
    nwords = (n + 63) // 64
    d = elems.shape[0]
    strides = np.empty(d, np.int64)
    nstates = 1
    for j in range(d):
        strides[j] = nstates
        nstates *= mults[j] + 1
    dp = np.zeros((nstates, nwords), np.uint64)
    used = np.zeros(nstates, np.int64)
    dp[0, 0] = np.uint64(1)
    L = weights.shape[0]
    one = np.uint64(1)
    for s in range(nstates):
        t = used[s]
        if t == L:
            continue
        w = weights[t]
        for j in range(d):
            digit = (s // strides[j]) % (mults[j] + 1)
            if digit == mults[j]:
                continue
            c = mul_table[w, elems[j]]
            tgt = s + strides[j]
            used[tgt] = t + 1
            for x in range(n):
                if (dp[s, x >> 6] >> np.uint64(x & 63)) & one:
                    y = add_table[x, c]
                    dp[tgt, y >> 6] |= one << np.uint64(y & 63)
    return dp[nstates - 1]
