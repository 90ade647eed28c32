"""Partitions, skew shapes and semistandard tableaux."""

from wreathsf import SkewShape, Tableau, conjugate, kostka, partitions_of, skew_components, strip_type, word
from wreathsf.tableaux import enumerate_ssyt, is_lattice

lam = (4, 3, 2, 2, 1)
print("conjugate of", lam, "is", tuple(conjugate(lam)))

# p(n) for small n
print("p(n):", [len(partitions_of(n)) for n in range(11)])

shape = SkewShape((6, 4, 2, 2), (4, 2))
for comp in skew_components(shape):
    print("component", comp, "size", comp.size)

for outer, inner in [((3, 1), (1,)), ((1, 1), ()), ((2, 2), ()), ((2, 1), (1,))]:
    print(f"{outer}/{inner}:", strip_type(SkewShape(outer, inner)))

# the two standard tableaux of shape (2,1)
for T in enumerate_ssyt(SkewShape((2, 1)), (1, 1, 1)):
    print(T, "\n")

print("Kostka matrix, n = 4")
ps = partitions_of(4)
for a in ps:
    print(f"  {str(a):>8}", [kostka(a, b) for b in ps])

T = Tableau.from_rows((6, 6, 6, 6), [[5, 5], [1, 1, 6, 7], [2, 3, 3, 3, 7, 8], [4, 4, 6, 7, 8, 9]], inner=(4, 2))
w = word(T)
print("reading word:", "".join(map(str, w)), "lattice:", is_lattice(w))
