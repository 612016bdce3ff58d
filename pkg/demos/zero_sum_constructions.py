"""
Long minimal zero-sum sequences over C_m ⊕ C_mn
===============================================

Pick a multiplicity pattern or a support size and build a sequence of
maximal length m + mn - 1 that is a minimal zero-sum sequence.
"""

from wodot import (
    construct_from_pattern,
    construct_with_support,
    feasible_support_sizes,
    max_minimal_length,
)

res = construct_from_pattern(3, 2, (1, 2, 3))
print(res.sequence, "x =", res.witness_x, "length", len(res.sequence))

for m, n in [(3, 1), (3, 2), (4, 2)]:
    print(f"m={m}, n={n}: length {max_minimal_length(m, n)}, "
          f"support sizes {sorted(feasible_support_sizes(m, n))}")
    for k in range(3, m + 2):
        r = construct_with_support(m, n, k)
        print("   k =", k, r.sequence if r.feasible else r.infeasible)

# roles swapped: the long generator is repeated instead
r = construct_with_support(4, 2, 4, role=(2, 1))
print("role (2,1):", r.sequence)
