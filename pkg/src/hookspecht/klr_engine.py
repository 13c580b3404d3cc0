"""Generic rewriting engine for hook Specht modules of the KLR algebra at e = 2.

The module ``S_(a,1^b)`` is cyclic on ``z`` with basis ``v_T = psi_{w_T} z`` over
standard tableaux ``T``.  Actions are computed one generator at a time on basis
vectors, using only defining relations:

* ``e(i)`` acts diagonally through tracked residue sequences;
* ``y_k`` is pushed right through the first letter of ``w_T`` with the four
  y-psi relations until it meets ``z`` and dies;
* ``psi_r v_T`` is ``v_{s_r T}`` when the word stays reduced and standard, is
  rewritten with the quadratic relation when ``r`` is a left descent, and
  otherwise the reduced word ``r . w_T`` is moved by braid and commutation moves
  to a word ending in a letter that kills ``z`` (or in the Garnir word
  ``psi_1 ... psi_{b+1}``).  Each braid move with a correction term contributes
  a shorter word, which is reduced recursively.

Results are memoised per (generator, basis vector).  All arithmetic is exact.
"""

from __future__ import annotations

import json
import logging
import re
import sys
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    HookShape,
    StandardTableau,
    enumerate_standard,
    initial_tableau,
    permutation_of,
    residue_sequence,
)
from .fields import Field, parse_scalar
from .matrices import ActionMatrix, sparse_matrix

__all__ = [
    "Generator",
    "E",
    "Y",
    "Psi",
    "parse_generator",
    "parse_word",
    "ModuleElement",
    "SpechtModule",
    "RewriteError",
    "DEFAULT_MAX_STEPS",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10**7


class RewriteError(RuntimeError):
    """Reduction exceeded its step budget or hit a cyclic dependency."""


@dataclass(frozen=True)
class Generator:
    """One KLR generator: ``e(i)``, ``y_k`` or ``psi_r``."""

    kind: str
    index: int = 0
    residues: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("e", "y", "psi"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "e":
            if self.residues is None or any(x not in (0, 1) for x in self.residues):
                raise ValueError("e(i) needs a 0/1 residue sequence")
            object.__setattr__(self, "residues", tuple(self.residues))

    def check(self, n: int) -> None:
        if self.kind == "y" and not 1 <= self.index <= n:
            raise IndexError(f"y_{self.index} out of range for n={n}")
        if self.kind == "psi" and not 1 <= self.index <= n - 1:
            raise IndexError(f"psi_{self.index} out of range for n={n}")
        if self.kind == "e" and len(self.residues) != n:
            raise IndexError(f"e(i) needs a sequence of length {n}")

    def __str__(self):
        if self.kind == "e":
            return "e(" + "".join(map(str, self.residues)) + ")"
        return f"{self.kind}{self.index}"


def E(residues: Iterable[int]) -> Generator:
    return Generator("e", residues=tuple(residues))


def Y(k: int) -> Generator:
    return Generator("y", k)


def Psi(r: int) -> Generator:
    return Generator("psi", r)


_GEN_RE = re.compile(r"^(psi|y)_?(\d+)$|^e\(([01]+)\)$|^e_lambda$")


def parse_generator(text: str, shape: HookShape | None = None) -> Generator:
    """Parse ``psi3``, ``y_2``, ``e(01010)`` or ``e_lambda`` (needs ``shape``)."""
    m = _GEN_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse generator {text!r}")
    if m.group(1):
        return Generator(m.group(1), int(m.group(2)))
    if m.group(3):
        return E(int(c) for c in m.group(3))
    if shape is None:
        raise ValueError("e_lambda needs a shape")
    return E(residue_sequence(initial_tableau(shape)))


def parse_word(text: str, shape: HookShape | None = None) -> tuple[Generator, ...]:
    """Whitespace separated generators, written as a product (rightmost acts first)."""
    return tuple(parse_generator(tok, shape) for tok in text.split())


class ModuleElement:
    """Finite linear combination of basis vectors ``v_T`` with exact coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, terms: Mapping[StandardTableau, object], field: Field):
        self.field = field
        self.terms = {t: field(c) for t, c in terms.items() if field(c) != 0}

    @classmethod
    def zero(cls, field: Field) -> "ModuleElement":
        return cls({}, field)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, t: StandardTableau):
        return self.terms.get(t, 0)

    def _combine(self, other: "ModuleElement", sign: int) -> "ModuleElement":
        if other.field != self.field:
            raise ValueError("elements live over different fields")
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + sign * c
        return ModuleElement(out, self.field)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return ModuleElement({t: -c for t, c in self.terms.items()}, self.field)

    def __rmul__(self, c):
        return ModuleElement({t: c * v for t, v in self.terms.items()}, self.field)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{self.field.signed(c)}*v[{t}]" for t, c in sorted(self.terms.items(), key=lambda p: p[0].leg)]
        return " + ".join(parts)

    def to_dict(self) -> dict:
        items = sorted(self.terms.items(), key=lambda p: (p[0].shape, p[0].leg))
        return {
            "char": self.field.char,
            "terms": [{"tableau": t.to_dict(), "coeff": self.field.format(c)} for t, c in items],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ModuleElement":
        field = Field(data.get("char", 0))
        terms = {}
        for term in data["terms"]:
            value, p = parse_scalar(term["coeff"])
            if p != field.char:
                raise ValueError("coefficient characteristic mismatch")
            terms[StandardTableau.from_dict(term["tableau"])] = value
        return cls(terms, field)

    @classmethod
    def from_json(cls, text: str) -> "ModuleElement":
        return cls.from_dict(json.loads(text))


class SpechtModule:
    """``S_(a,1^b)`` over ``field`` with the standard tableau basis.

    >>> S = SpechtModule(HookShape(3, 2))
    >>> S.dim
    6
    >>> S.reduce([Psi(1)])
    0
    """

    def __init__(self, shape: HookShape | Sequence[int], field: Field | int = 0,
                 max_steps: int = DEFAULT_MAX_STEPS):
        if not isinstance(shape, HookShape):
            parts = [p for p in shape if p > 0]
            if not parts or any(p != 1 for p in parts[1:]):
                raise ValueError(f"only hook partitions are supported, got {tuple(shape)}")
            shape = HookShape(parts[0], len(parts) - 1)
        self.shape = shape
        self.field = field if isinstance(field, Field) else Field(field)
        self.max_steps = max_steps
        self.n = shape.n
        self.basis: tuple[StandardTableau, ...] = enumerate_standard(shape)
        self.index = {t: i for i, t in enumerate(self.basis)}
        self.z = self.index[initial_tableau(shape)]
        self.i_lambda = residue_sequence(initial_tableau(shape))
        self._legs = [frozenset(t.leg) for t in self.basis]
        self._res = [residue_sequence(t) for t in self.basis]
        self._perm = []
        self._word = []
        self._pred: list[tuple[int, int] | None] = []
        for t in self.basis:
            perm, word = permutation_of(t)
            self._perm.append(perm)
            self._word.append(word)
        for i, word in enumerate(self._word):
            if not word:
                self._pred.append(None)
            else:
                prev = self.basis[i].swap(word[0])
                self._pred.append((word[0], self.index[prev]))
        self._psi_memo: dict[tuple[int, int], dict[int, int]] = {}
        self._y_memo: dict[tuple[int, int], dict[int, int]] = {}
        self._word_memo: dict[tuple[int, ...], dict[int, int]] = {(): {self.z: 1}}
        self._busy: set = set()
        self._steps = 0
        self._depth = 0
        self.stats = {"braid_moves": 0, "commutations": 0, "garnir": 0}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self):
        return f"SpechtModule({self.shape}, char={self.field.char})"

    # -- vectors ----------------------------------------------------------

    def element(self, vec: Mapping[int, object]) -> ModuleElement:
        return ModuleElement({self.basis[i]: c for i, c in vec.items()}, self.field)

    def coords(self, v: ModuleElement) -> dict[int, object]:
        return {self.index[t]: c for t, c in v}

    def basis_vector(self, t: StandardTableau | int) -> ModuleElement:
        i = t if isinstance(t, int) else self.index[t]
        return self.element({i: 1})

    def word_of(self, t: StandardTableau | int) -> tuple[int, ...]:
        """Canonical reduced word of ``w_T`` (so ``v_T = psi_{r_1} ... psi_{r_m} z``)."""
        i = t if isinstance(t, int) else self.index[t]
        return self._word[i]

    def residues_of(self, t: StandardTableau | int) -> tuple[int, ...]:
        i = t if isinstance(t, int) else self.index[t]
        return self._res[i]

    def _clean(self, acc: dict) -> dict:
        p = self.field.char
        if p:
            return {k: v % p for k, v in acc.items() if v % p}
        return {k: v for k, v in acc.items() if v}

    @staticmethod
    def _axpy(acc: dict, vec: Mapping[int, object], c=1) -> None:
        for k, v in vec.items():
            acc[k] = acc.get(k, 0) + c * v

    # -- public API -------------------------------------------------------

    def act(self, g: Generator, v: ModuleElement) -> ModuleElement:
        g.check(self.n)
        return self.element(self._entry(lambda: self._act_vec(g, self.coords(v))))

    def reduce(self, word: Sequence[Generator]) -> ModuleElement:
        """Expand ``word . z`` in the basis (the rightmost generator acts first)."""
        for g in word:
            g.check(self.n)
        return self.element(self._entry(lambda: self._apply_word({self.z: 1}, word)))

    def apply(self, word: Sequence[Generator], v: ModuleElement) -> ModuleElement:
        for g in word:
            g.check(self.n)
        return self.element(self._entry(lambda: self._apply_word(self.coords(v), word)))

    def apply_psi_word(self, letters: Sequence[int], v: ModuleElement) -> ModuleElement:
        """Apply ``psi_{l_1} ... psi_{l_m}`` (rightmost first)."""
        return self.apply([Psi(r) for r in letters], v)

    def action_matrix(self, g: Generator) -> ActionMatrix:
        g.check(self.n)
        rows: dict[int, dict[int, object]] = {}
        for j in range(self.dim):
            col = self._entry(lambda: self._act_vec(g, {j: 1}))
            for i, c in col.items():
                rows.setdefault(i, {})[j] = c
        return ActionMatrix(sparse_matrix(rows, (self.dim, self.dim), self.field), self.basis, self.field, str(g))

    def linear_map_matrix(self, images: Sequence[Mapping[int, object]], label: str = "") -> ActionMatrix:
        """Matrix whose column ``j`` is ``images[j]`` (coordinates by basis index)."""
        rows: dict[int, dict[int, object]] = {}
        for j, col in enumerate(images):
            for i, c in col.items():
                rows.setdefault(i, {})[j] = c
        return ActionMatrix(sparse_matrix(rows, (self.dim, self.dim), self.field), self.basis, self.field, label)

    def generators(self) -> list[Generator]:
        return [Y(k) for k in range(1, self.n + 1)] + [Psi(r) for r in range(1, self.n)]

    # -- internals ---------------------------------------------------------

    def _entry(self, fn):
        if self._depth == 0:
            self._steps = 0
        self._depth += 1
        limit = sys.getrecursionlimit()
        if limit < 20000:
            sys.setrecursionlimit(20000)
        try:
            return fn()
        finally:
            self._depth -= 1

    def _tick(self, what):
        self._steps += 1
        if self._steps > self.max_steps:
            raise RewriteError(f"rewrite step cap {self.max_steps} exceeded while reducing {what}")

    def _apply_word(self, vec: dict, word: Sequence[Generator]) -> dict:
        for g in reversed(list(word)):
            vec = self._act_vec(g, vec)
        return vec

    def _act_vec(self, g: Generator, vec: Mapping[int, object]) -> dict:
        if g.kind == "e":
            return self._clean({i: c for i, c in vec.items() if self._res[i] == g.residues})
        if g.kind == "y":
            return self._y_vec(g.index, vec)
        return self._psi_vec(g.index, vec)

    def _psi_vec(self, r: int, vec: Mapping[int, object]) -> dict:
        acc: dict = {}
        for i, c in vec.items():
            self._axpy(acc, self._psi(r, i), c)
        return self._clean(acc)

    def _y_vec(self, k: int, vec: Mapping[int, object]) -> dict:
        acc: dict = {}
        for i, c in vec.items():
            self._axpy(acc, self._y(k, i), c)
        return self._clean(acc)

    def _psi_word(self, letters: tuple[int, ...]) -> dict:
        """``psi_{letters} z``, memoised on the letter tuple."""
        hit = self._word_memo.get(letters)
        if hit is not None:
            return hit
        out = self._psi_vec(letters[0], self._psi_word(letters[1:]))
        self._word_memo[letters] = out
        return out

    def _y(self, k: int, i: int) -> dict:
        key = (k, i)
        hit = self._y_memo.get(key)
        if hit is not None:
            return hit
        if i == self.z:
            self._y_memo[key] = {}
            return {}
        self._guard(("y", k, i))
        self._tick(f"y{k} v[{self.basis[i]}]")
        r, prev = self._pred[i]
        res = self._res[prev]
        equal = res[r - 1] == res[r]
        if k == r:
            out = self._psi_vec(r, self._y(r + 1, prev))
            if equal:
                out = dict(out)
                out[prev] = out.get(prev, 0) - 1
        elif k == r + 1:
            out = self._psi_vec(r, self._y(r, prev))
            if equal:
                out = dict(out)
                out[prev] = out.get(prev, 0) + 1
        else:
            out = self._psi_vec(r, self._y(k, prev))
        out = self._clean(out)
        self._busy.discard(("y", k, i))
        self._y_memo[key] = out
        return out

    def _guard(self, key):
        if key in self._busy:
            raise RewriteError(f"cyclic dependency while computing {key}")
        self._busy.add(key)

    def _psi(self, r: int, i: int) -> dict:
        key = (r, i)
        hit = self._psi_memo.get(key)
        if hit is not None:
            return hit
        self._guard(("psi", r, i))
        self._tick(f"psi{r} v[{self.basis[i]}]")
        legs = self._legs[i]
        r_leg, s_leg = r in legs, (r + 1) in legs
        if r >= 2 and r_leg and not s_leg:
            out = {self.index[self.basis[i].swap(r)]: 1}
        elif r >= 2 and s_leg and not r_leg:
            # r is a left descent: psi_r v_T = psi_r^2 v_{s_r T}
            prev = self.index[self.basis[i].swap(r)]
            res = self._res[prev]
            if res[r - 1] == res[r]:
                out = {}
            else:
                base = {prev: 1}
                yr = self._y_vec(r, base)
                ys = self._y_vec(r + 1, base)
                acc: dict = {}
                self._axpy(acc, self._y_vec(r, yr), -1)
                self._axpy(acc, self._y_vec(r, ys), 2)
                self._axpy(acc, self._y_vec(r + 1, ys), -1)
                out = self._clean(acc)
        else:
            out = self._psi_nonstandard(r, i)
        self._busy.discard(("psi", r, i))
        self._psi_memo[key] = out
        return out

    def _psi_nonstandard(self, r: int, i: int) -> dict:
        """``psi_r v_T`` when ``s_r w_T`` is longer but ``s_r T`` is not standard."""
        b = self.shape.b
        word = [r] + list(self._word[i])
        perm = [r + 1 if x == r else r if x == r + 1 else x for x in self._perm[i]]
        descents = [q for q in range(1, self.n) if perm[q - 1] > perm[q]]
        killers = [q for q in descents if q != b + 1]
        corrections: list[tuple[int, tuple, tuple, int]] = []
        if killers:
            self._bring_to_end(word, len(word), min(killers), corrections)
        else:
            # only right descent is b+1: w = u . s_1 s_2 ... s_{b+1}
            if b + 1 > self.n - 1:
                raise RewriteError(f"no killing suffix for psi{r} v[{self.basis[i]}]")
            self.stats["garnir"] += 1
            top = len(word)
            for k, letter in enumerate(range(b + 1, 0, -1)):
                self._bring_to_end(word, top - k, letter, corrections)
            if word[len(word) - b - 1:] != list(range(1, b + 2)):
                raise RewriteError(f"Garnir suffix not reached for word {word}")
        acc: dict = {}
        for sign, left, right, a in corrections:
            base = self._psi_word(right)
            ycomb: dict = {}
            self._axpy(ycomb, self._y_vec(a, base), 1)
            self._axpy(ycomb, self._y_vec(a + 1, base), -2)
            self._axpy(ycomb, self._y_vec(a + 2, base), 1)
            vec = self._clean(ycomb)
            for letter in reversed(left):
                if not vec:
                    break
                vec = self._psi_vec(letter, vec)
            self._axpy(acc, vec, sign)
        return self._clean(acc)

    def _bring_to_end(self, word: list, hi: int, s: int, corrections: list) -> None:
        """Rewrite ``word[:hi]`` (reduced, right descent ``s``) to end in ``s``.

        Braid moves whose residue condition triggers the correction term append
        ``(sign, left, right, a)`` meaning ``sign * left (y_a - 2y_{a+1} + y_{a+2}) right z``.
        """
        if hi <= 0:
            raise RewriteError(f"letter {s} is not a right descent of {word}")
        self._tick(f"word {word}")
        t = word[hi - 1]
        if t == s:
            return
        if abs(t - s) > 1:
            self._bring_to_end(word, hi - 1, s, corrections)
            word[hi - 2], word[hi - 1] = t, s
            self.stats["commutations"] += 1
            return
        self._bring_to_end(word, hi - 1, s, corrections)
        self._bring_to_end(word, hi - 2, t, corrections)
        k = hi - 3
        a = min(s, t)
        right = tuple(word[k + 3:])
        res = list(self.i_lambda)
        for letter in reversed(right):
            res[letter - 1], res[letter] = res[letter], res[letter - 1]
        if res[a - 1] != res[a] and res[a] != res[a + 1]:
            # psi_a psi_{a+1} psi_a = psi_{a+1} psi_a psi_{a+1} + (y_a - 2y_{a+1} + y_{a+2})
            sign = 1 if t == a else -1
            corrections.append((sign, tuple(word[:k]), right, a))
        word[k:hi] = [s, t, s]
        self.stats["braid_moves"] += 1
