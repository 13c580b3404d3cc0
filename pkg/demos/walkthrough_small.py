"""A tour of S_(3,1^2) at e = 2: basis, generator actions, the endomorphism f, and the verdict."""

from hookspecht import HookShape, SpechtModule, decide, matrix_of_f, spectrum
from hookspecht.klr_engine import Psi, Y

shape = HookShape(3, 2)
S = SpechtModule(shape, 0)
print(f"{shape}: dim {S.dim}, residue sequence of z = {S.i_lambda}")
for i, t in enumerate(S.basis):
    print(f"  v{i} = {str(t):<14}  word {S.word_of(t)}  residues {S.residues_of(t)}")

# psi_3 z moves z to v_{s_3 t}; psi_3 psi_3 z picks up -(y_3 - y_4)^2 = 0 here
z = S.basis_vector(S.z)
print("psi3 z       =", S.act(Psi(3), z))
print("psi3 psi3 z  =", S.apply([Psi(3), Psi(3)], z))
print("y2 psi3 z    =", S.apply([Y(2), Psi(3)], z))

mats = matrix_of_f(shape, 0, S)
print("\nf on the full basis:")
print(mats.full.to_text())
sp = spectrum(shape, 0, S, mats)
print("eigenvalues:", sp.eigenvalues, "multiplicities:", sp.multiplicities)
for p in (0, 2, 3, 5):
    v = decide(3, 2, p)
    print(f"char {p}: {'decomposable' if v.decomposable else 'indecomposable'} ({v.rule})")
