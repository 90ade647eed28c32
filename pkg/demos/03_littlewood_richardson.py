"""Littlewood-Richardson coefficients two ways, and the Pieri rule."""

from wreathsf import SkewShape, lr_coeff, lr_coeff_oracle, pieri, skew_schur_expand
from wreathsf.lr import lr_tableaux

lam, mu, nu = (3, 2, 1), (2, 1), (2, 1)
print(f"c^{lam}_{{{mu},{nu}}} =", lr_coeff(lam, mu, nu), "(oracle:", lr_coeff_oracle(lam, mu, nu), ")")
for T in lr_tableaux(lam, mu, nu):
    print(T, "\n")

print("s_(3,2,1)/(2,1) =", skew_schur_expand(SkewShape((3, 2, 1), (2, 1))))

print("horizontal 2-strips on (2,1):", [tuple(x) for x in pieri((2, 1), 2, "row")])
print("vertical 2-strips on (2,1):  ", [tuple(x) for x in pieri((2, 1), 2, "column")])
