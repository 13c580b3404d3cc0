"""Hook partitions, standard and domino tableaux, permutations and reduced words.

Everything here works at quantum characteristic ``e = 2``: residues are
``(col - row) mod 2``.  A standard tableau of hook shape ``(a, 1^b)`` is
determined by the set of entries in its leg, so :class:`StandardTableau`
stores only that tuple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "HookShape",
    "Node",
    "StandardTableau",
    "DominoNormalForm",
    "initial_tableau",
    "initial_rows",
    "residue_sequence",
    "enumerate_standard",
    "permutation_of",
    "coxeter_length",
    "apply_word",
    "is_domino",
    "is_domino_by_pairs",
    "enumerate_domino",
    "normal_form",
    "tableau_from_normal_form",
    "make_Tij",
]


@dataclass(frozen=True, order=True)
class HookShape:
    """The hook partition ``(a, 1^b)``: an arm row of length ``a`` and ``b`` leg boxes."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("hook parameters must be integers")
        if self.a < 1 or self.b < 0:
            raise ValueError(f"invalid hook (a={self.a}, b={self.b}): need a >= 1, b >= 0")

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def partition(self) -> tuple[int, ...]:
        return (self.a,) + (1,) * self.b

    def conjugate(self) -> "HookShape":
        return HookShape(self.b + 1, self.a - 1)

    def nodes(self) -> list["Node"]:
        return [Node(1, c) for c in range(1, self.a + 1)] + [
            Node(r, 1) for r in range(2, self.b + 2)
        ]

    def __str__(self):
        if self.b == 0:
            return f"({self.a})"
        return f"({self.a},1^{self.b})"


@dataclass(frozen=True, order=True)
class Node:
    row: int
    col: int

    @property
    def residue(self) -> int:
        return (self.col - self.row) % 2


@dataclass(frozen=True, order=True)
class StandardTableau:
    """A standard ``(a, 1^b)``-tableau, stored as its increasing tuple of leg entries.

    Entry 1 always sits at ``(1, 1)``; the arm holds the remaining entries in
    increasing order.
    """

    shape: HookShape
    leg: tuple[int, ...]

    def __post_init__(self):
        leg = tuple(self.leg)
        object.__setattr__(self, "leg", leg)
        n = self.shape.n
        if len(leg) != self.shape.b:
            raise ValueError(f"leg must have {self.shape.b} entries, got {leg}")
        if any(x >= y for x, y in zip(leg, leg[1:])):
            raise ValueError(f"leg entries must increase: {leg}")
        if leg and (leg[0] < 2 or leg[-1] > n):
            raise ValueError(f"leg entries must lie in 2..{n}: {leg}")

    @property
    def arm(self) -> tuple[int, ...]:
        """Entries in row 1 to the right of the corner, left to right."""
        legset = set(self.leg)
        return tuple(k for k in range(2, self.shape.n + 1) if k not in legset)

    @property
    def first_row(self) -> tuple[int, ...]:
        return (1,) + self.arm

    @property
    def first_column(self) -> tuple[int, ...]:
        return (1,) + self.leg

    def node_of(self, k: int) -> Node:
        if k == 1:
            return Node(1, 1)
        if k in self.leg:
            return Node(self.leg.index(k) + 2, 1)
        return Node(1, self.arm.index(k) + 2)

    def entries(self) -> dict[Node, int]:
        out = {Node(1, 1): 1}
        for c, k in enumerate(self.arm, start=2):
            out[Node(1, c)] = k
        for r, k in enumerate(self.leg, start=2):
            out[Node(r, 1)] = k
        return out

    def rows(self) -> list[list[int]]:
        return [list(self.first_row)] + [[k] for k in self.leg]

    def in_leg(self, k: int) -> bool:
        return k in self.leg

    def swap(self, r: int) -> "StandardTableau | None":
        """``s_r T`` (entries ``r`` and ``r+1`` exchanged), or ``None`` if not standard."""
        if r < 2 or r >= self.shape.n:
            return None
        a, b = r in self.leg, (r + 1) in self.leg
        if a == b:
            return None
        leg = tuple(sorted((set(self.leg) - {r, r + 1}) | ({r + 1} if a else {r})))
        return StandardTableau(self.shape, leg)

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """Rows of integers, one row per line, entries separated by single spaces."""
        return "\n".join(" ".join(str(k) for k in row) for row in self.rows())

    @classmethod
    def from_text(cls, text: str) -> "StandardTableau":
        rows = [[int(x) for x in line.split()] for line in text.strip().splitlines()]
        if not rows or any(len(r) != 1 for r in rows[1:]):
            raise ValueError("not a hook tableau")
        shape = HookShape(len(rows[0]), len(rows) - 1)
        t = cls(shape, tuple(r[0] for r in rows[1:]))
        if list(t.first_row) != rows[0]:
            raise ValueError("tableau is not standard")
        return t

    def to_dict(self) -> dict:
        return {"shape": [self.shape.a, self.shape.b], "leg": list(self.leg), "arm": list(self.arm)}

    @classmethod
    def from_dict(cls, data: dict) -> "StandardTableau":
        a, b = data["shape"]
        t = cls(HookShape(a, b), tuple(data["leg"]))
        if "arm" in data and list(data["arm"]) != list(t.arm):
            raise ValueError("arm and leg entries are inconsistent")
        return t

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "StandardTableau":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        return self.to_text().replace("\n", " / ")


@dataclass(frozen=True)
class DominoNormalForm:
    """``d`` displaced leg dominoes with chain tops ``js = (j_1 < ... < j_d)``.

    The associated basis vector is
    ``Psi_down(j_1 -> b+3-2d) Psi_down(j_2 -> b+5-2d) ... Psi_down(j_d -> b+1) z``.
    """

    d: int
    js: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "js", tuple(self.js))
        if self.d != len(self.js):
            raise ValueError("d must equal len(js)")

    def chain_bounds(self, shape: HookShape) -> list[tuple[int, int]]:
        """(top, bottom) of each descending chain, left to right."""
        b, d = shape.b, self.d
        return [(j, b + 1 - 2 * (d - v)) for v, j in enumerate(self.js, start=1)]

    def length(self, shape: HookShape) -> int:
        """Number of Psi factors, r(T)."""
        return sum((top - bot) // 2 + 1 for top, bot in self.chain_bounds(shape))

    def validate(self, shape: HookShape) -> None:
        b, n, d = shape.b, shape.n, self.d
        if b % 2 or n % 2 == 0:
            raise ValueError("normal forms need b even and n odd")
        if not 0 <= d <= b // 2:
            raise ValueError(f"d={d} out of range 0..{b // 2}")
        for v, j in enumerate(self.js, start=1):
            if j % 2 == 0:
                raise ValueError(f"j_{v}={j} is not odd")
            lo, hi = b + 1 - 2 * (d - v), n - 2 - 2 * (d - v)
            if not lo <= j <= hi:
                raise ValueError(f"j_{v}={j} outside [{lo}, {hi}]")
        if any(x >= y for x, y in zip(self.js, self.js[1:])):
            raise ValueError("js must strictly increase")


# -- basic constructions --------------------------------------------------


def initial_tableau(shape: HookShape) -> StandardTableau:
    """``T_lambda``: 1..b+1 down the first column, then b+2..n along the arm."""
    return StandardTableau(shape, tuple(range(2, shape.b + 2)))


def initial_rows(partition: Sequence[int]) -> list[list[int]]:
    """Initial tableau of an arbitrary partition (entries written down the columns)."""
    parts = [p for p in partition if p > 0]
    if any(x < y for x, y in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {partition}")
    rows = [[0] * p for p in parts]
    k = 1
    for c in range(parts[0] if parts else 0):
        for r in range(len(parts)):
            if c < parts[r]:
                rows[r][c] = k
                k += 1
    return rows


def residue_sequence(t: StandardTableau | Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Residues ``(col - row) mod 2`` of the nodes holding 1, 2, ..., n.

    Accepts a hook :class:`StandardTableau` or any tableau given as a list of rows.
    """
    if isinstance(t, StandardTableau):
        return _hook_residues(t.shape, t.leg)
    where = {}
    for r, row in enumerate(t, start=1):
        for c, k in enumerate(row, start=1):
            where[k] = (c - r) % 2
    return tuple(where[k] for k in range(1, len(where) + 1))


@cache
def _hook_residues(shape: HookShape, leg: tuple[int, ...]) -> tuple[int, ...]:
    res = [0] * shape.n
    for r, k in enumerate(leg, start=2):
        res[k - 1] = (1 - r) % 2
    for c, k in enumerate(StandardTableau(shape, leg).arm, start=2):
        res[k - 1] = (c - 1) % 2
    return tuple(res)


@cache
def enumerate_standard(shape: HookShape) -> tuple[StandardTableau, ...]:
    """All standard tableaux, ordered lexicographically by leg entries."""
    return tuple(
        StandardTableau(shape, leg) for leg in combinations(range(2, shape.n + 1), shape.b)
    )


# -- permutations ---------------------------------------------------------


def coxeter_length(perm: Sequence[int]) -> int:
    """Number of inversions of a permutation in one-line notation."""
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def apply_word(word: Iterable[int], perm: Sequence[int]) -> tuple[int, ...]:
    """Left-multiply ``perm`` by ``s_{r_1} ... s_{r_m}`` (rightmost letter acts first)."""
    p = list(perm)
    for r in reversed(list(word)):
        p = [r + 1 if x == r else r if x == r + 1 else x for x in p]
    return tuple(p)


@cache
def permutation_of(t: StandardTableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(w_T, word)`` with ``w_T T_lambda = T``.

    ``w_T`` is in one-line notation: ``w_T(k)`` is the entry of ``T`` in the node
    where ``T_lambda`` has ``k``.  ``word`` is the lexicographically smallest
    reduced word, built by repeatedly stripping the smallest left descent.
    """
    perm = (1,) + t.leg + t.arm
    word = []
    pos = {v: i for i, v in enumerate(perm)}
    cur = list(perm)
    while True:
        for r in range(1, len(cur)):
            if pos[r] > pos[r + 1]:
                break
        else:
            break
        word.append(r)
        i, j = pos[r], pos[r + 1]
        cur[i], cur[j] = r + 1, r
        pos[r], pos[r + 1] = j, i
    return perm, tuple(word)


# -- dominoes -------------------------------------------------------------


def is_domino(t: StandardTableau) -> bool:
    """Same residue sequence as the initial tableau."""
    return residue_sequence(t) == residue_sequence(initial_tableau(t.shape))


def is_domino_by_pairs(t: StandardTableau) -> bool:
    """Every pair ``(2i, 2i+1)`` occupies adjacent boxes (meaningful for b even)."""
    n = t.shape.n
    for i in range(1, (n + 1) // 2):
        lo, hi = 2 * i, 2 * i + 1
        if hi > n:
            break
        if t.in_leg(lo) != t.in_leg(hi):
            return False
    if n % 2 == 0 and t.in_leg(n):
        return False
    return True


def _domino_regime(shape: HookShape) -> bool:
    return shape.b % 2 == 0 and shape.n % 2 == 1


@cache
def enumerate_domino(shape: HookShape) -> tuple[StandardTableau, ...]:
    """Domino tableaux ordered by length r(T), ties broken by the tuple ``js``.

    Outside the ``b`` even, ``n`` odd regime this is the residue filter of
    :func:`enumerate_standard` in its own order.
    """
    doms = [t for t in enumerate_standard(shape) if is_domino(t)]
    if not _domino_regime(shape):
        return tuple(doms)
    keyed = [(normal_form(t), t) for t in doms]
    keyed.sort(key=lambda p: (p[0].length(shape), p[0].js))
    return tuple(t for _, t in keyed)


def normal_form(t: StandardTableau) -> DominoNormalForm:
    shape = t.shape
    if not _domino_regime(shape):
        raise ValueError(f"normal forms are only defined for b even, n odd (got {shape})")
    if not is_domino(t):
        raise ValueError(f"not a domino tableau: {t}")
    init = initial_tableau(shape).leg
    first = next((p for p, (x, y) in enumerate(zip(t.leg, init)) if x != y), len(init))
    moved = t.leg[first:]
    js = tuple(k - 2 for k in moved[1::2])
    return DominoNormalForm(len(js), js)


def tableau_from_normal_form(shape: HookShape, nf: DominoNormalForm) -> StandardTableau:
    nf.validate(shape)
    keep = tuple(range(2, shape.b - 2 * nf.d + 2))
    moved = tuple(k for j in nf.js for k in (j + 1, j + 2))
    return StandardTableau(shape, keep + moved)


def make_Tij(shape: HookShape, i: int, j: int) -> StandardTableau:
    """Tableau whose leg dominoes are ``{[2,3],...,[b,b+1],[j-1,j]}`` minus ``[i-1,i]``."""
    b, n = shape.b, shape.n
    if b % 2:
        raise ValueError("T_{i,j} needs b even")
    if i % 2 == 0 or j % 2 == 0 or not (3 <= i <= b + 1 < j <= n):
        raise ValueError(f"need odd i, j with 3 <= i <= b+1 < j <= n, got i={i}, j={j}")
    dominoes = [(k - 1, k) for k in range(3, b + 2, 2) if k != i] + [(j - 1, j)]
    return StandardTableau(shape, tuple(x for dom in dominoes for x in dom))
