"""Character tables of wreath products from the inner product <S, P>."""

from math import factorial

from wreathsf import ClassFunction, builtin, character_table, dimension, frobenius_ch, wreath_schur
from wreathsf.partitions import ColoredPartition, colored_partitions_of

# the hyperoctahedral group B_2 = Z_2 wr S_2 (order 8)
G = builtin("z2")
T = character_table(G, 2)
print(T.to_text(), "\n")
print("degrees", T.degrees(), "sum of squares", sum(d * d for d in T.degrees()), "= 2^2 * 2!")

# with the trivial group the same pipeline gives S_n
print(character_table(builtin("trivial"), 4).to_text(), "\n")

# Z_3 wr S_2: irrational values appear
print(character_table(builtin("z3"), 2).to_text(), "\n")

# dimensions from the hook formula, S_3 wr S_2 (order 72)
S3 = builtin("s3")
dims = [dimension(S3, lam) for lam in colored_partitions_of(2, 3)]
print("S3 wr S2 dimensions:", dims, "sum of squares", sum(d * d for d in dims), "=", 6**2 * factorial(2))

lam = ColoredPartition([(1,), (1,)])
print("S_(1;1) =", wreath_schur(G, lam))
print("ch(chi^(1;1)) =", frobenius_ch(ClassFunction.irreducible(G, lam)))
