"""
Weighted restricted sumsets
===========================

Build a few sequences over small groups and look at W⊙S.
"""

from wodot import GroupSpec, GSequence, WeightSeq, odot, odot_naive, shift_weights

# a sequence over C_5, written with exponents for repeated terms
C5 = GroupSpec.cyclic(5)
S = GSequence.parse(C5, "0 1^2")
W = WeightSeq.run(0, len(S))
print(S, "with weights", W.weights, "->", odot(W, S))

# the permutation oracle agrees
print("naive:", odot_naive(W, S))

# shifting every weight by 1 translates the result by σ(S)
print("shifted:", odot(shift_weights(W, 1), S))

# the two exceptional shapes at full length
C3 = GroupSpec.cyclic(3)
print("C3, 0·1·2 ->", odot(WeightSeq.run(0, 3), GSequence.from_terms(C3, [0, 1, 2])))

K4 = GroupSpec((2, 2))
print("K4, every element ->", odot(WeightSeq.run(0, 4), GSequence.from_terms(K4, K4.elements())))
