"""The five classical bases, change of basis, and the Hall inner product."""

from wreathsf import e, gram_schmidt_schur, h, hall_inner, m, multiply, p, s, to_basis, transition
from wreathsf.partitions import partitions_of
from wreathsf.symfunc import gen_basis_poly

print("h_2 =", to_basis(h(2), "p"))
print("e_2 =", to_basis(e(2), "p"))
print("s_21 =", to_basis(s(2, 1), "m"))
print("s_1 * s_1 =", multiply(s(1), s(1)))
print("s_21 * s_1 =", multiply(s(2, 1), s(1)))

# explicit polynomials, useful for sanity checks by hand
print("s_21(x1,x2,x3) =", gen_basis_poly("s", (2, 1), 3))

M = transition("s", "m", 4)
print("s -> m at degree 4 (Kostka matrix):")
for lam, row in zip(M.index, M.rows):
    print(f"  {str(lam):>8}", [int(x) for x in row])

# orthogonalizing m gives the same matrix, without any tableaux
print("Gram-Schmidt agrees:", gram_schmidt_schur(4) == M)

n = 4
gram = [[hall_inner(s(a), s(b)) for b in partitions_of(n)] for a in partitions_of(n)]
print("<s_a, s_b> is the identity at n = 4:", all(gram[i][j] == (i == j) for i in range(5) for j in range(5)))
print("<h_21, m_21> =", hall_inner(h(2, 1), m(2, 1)), " <p_2, p_2> =", hall_inner(p(2), p(2)))
