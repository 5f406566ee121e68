"""
Burau and Lawrence-Krammer-Bigelow matrices from the module action
==================================================================
"""

from braidhom import (
    BraidWord,
    braid_relations_hold,
    dual_representation,
    evaluate_word,
    generator_matrix,
)
from braidhom.linalg import identity, mat_alpha, mat_eq, mat_mul, transpose

# m = 1 on the 3-punctured disc: the reduced Burau matrices, size n-1.
print("reduced Burau sigma_1 for n = 3:")
burau = generator_matrix(3, 1, 1)
for row in burau.rows():
    print("   ", [str(entry) for entry in row])
print("convention:", burau.convention)
print()

# m = 2: the LKB matrices, size n(n-1)/2, over Z[x^+-1, d^+-1].
print("LKB sigma_1 for n = 3:")
lkb = generator_matrix(3, 1, 2)
for row in lkb.rows():
    print("   ", [str(entry) for entry in row])
print()

for m in (1, 2):
    print(f"braid relations, m = {m}, n <= 5:",
          all(braid_relations_hold(n, m) for n in range(2, 6)))

# Words multiply out exactly; equal braids give equal matrices.
left = evaluate_word(BraidWord(3, (1, 2, 1)), 2)
right = evaluate_word(BraidWord(3, (2, 1, 2)), 2)
print("sigma1 sigma2 sigma1 == sigma2 sigma1 sigma2:",
      mat_eq(left.rows(), right.rows()))

# The dual action is rho'(b) = alpha(rho(b^-1))^T, the unique action making
# the identity pairing invariant.
word = BraidWord(4, (1, -3, 2, 2))
rho = evaluate_word(word, 2)
dual = dual_representation(word, 2)
check = mat_mul(transpose(mat_alpha(rho.rows())), dual.rows())
print("alpha(rho)^T . rho' == 1:",
      mat_eq(check, identity(rho.ring, rho.size)))
