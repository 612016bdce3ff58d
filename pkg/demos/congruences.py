"""
Linear congruences in distinct residues
=======================================

Which right-hand sides α admit a solution of a_1 x_1 + ... + a_n x_n ≡ α (mod n)
with the x_i pairwise distinct?
"""

from wodot import construct, decide, decide_all_alpha, decide_alpha_one, normalize
from wodot.congruence import unreachable_alphas

inst = normalize((1, 1, 1, 1, 1, 3), n=6)
v = construct(inst, 1)
print("mod 6, a = (1,1,1,1,1,3), α = 1:", v.to_json())

# all coefficients odd and n divisible by 4: α = 1 never works
print("mod 4, all ones:", decide(normalize((1, 1, 1, 1), n=4), 1).solvable)
print("mod 8, all ones:", decide_alpha_one(normalize((1,) * 8, n=8)))

# the special family misses exactly one residue
fam = normalize((0, 0, 0, 1, 4), n=5)
print("mod 5, (0,0,0,1,4): every α?", decide_all_alpha(fam), "unreachable", unreachable_alphas(fam))

# fewer unknowns than the modulus: pad with zeros, project the witness back
short = normalize((3, 5), 2, 7)
w = construct(short, 4).witness
print("3x + 5y ≡ 4 (mod 7), x != y:", w[:2])
