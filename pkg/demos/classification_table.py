"""Decomposability of S_(a,1^b) for small hooks, one grid per characteristic."""

from hookspecht import decide

for p in (0, 2, 3, 5):
    print(f"char {p}   (D = decomposable, . = indecomposable; rows a, columns b)")
    print("      " + " ".join(f"{b:>2}" for b in range(9)))
    for a in range(1, 11):
        cells = " ".join(" D" if decide(a, b, p).decomposable else " ." for b in range(9))
        print(f"  a={a:<2} {cells}")
    print()
