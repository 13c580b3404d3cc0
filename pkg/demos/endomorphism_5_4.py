"""f on S_(5,1^4): its value on z, the triangular block on the domino subspace, and the spectrum per field."""

from hookspecht import HookShape, build_f, generalized_eigenspaces, matrix_of_f
from hookspecht.combinatorics import normal_form
from hookspecht.endomorphism import eigenvalue_formula, predicted_diagonal

shape = HookShape(5, 4)
f = build_f(shape, 0)
print("f(z) =")
for t, c in f.image_of_z:
    print(f"  {c:+d} * v[{t}]")

mats = matrix_of_f(shape, 0)
print("\nrestricted to e(i_lambda)S, rows/cols ordered by (length, js):")
for t in mats.domino:
    nf = normal_form(t)
    print(f"  d={nf.d} js={nf.js}")
print(mats.restricted.to_text())
print("diagonal     ", mats.restricted.diagonal())
print("predicted    ", predicted_diagonal(shape))
print("formula      ", eigenvalue_formula(shape))

for p in (0, 3, 5, 7):
    spaces = generalized_eigenspaces(shape, p)
    print(f"char {p}: " + ", ".join(f"{e.value} (dim {e.dim})" for e in spaces))
