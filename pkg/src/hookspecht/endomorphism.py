"""The endomorphism ``f`` of ``S_(a,1^b)`` (``a`` odd, ``b`` even), its spectrum, and decomposability.

``f`` is determined by

    f(z) = sum over odd 3 <= i <= b+1 < j <= n of ((i-1)/2) ((n+2-j)/2) v_{T_{i,j}},

and ``f(v_T) = psi_{w_T} f(z)``.  On the domino subspace it is lower triangular
in the (length, js) order, so its diagonal lists the eigenvalues; the
generalised eigenspaces are submodules, and two distinct eigenvalues split
``S_lambda``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction
from functools import reduce as _fold
from math import ceil

from sympy.polys.matrices import DomainMatrix

from .combinatorics import (
    HookShape,
    StandardTableau,
    enumerate_domino,
    make_Tij,
    normal_form,
)
from .klr_engine import ModuleElement, Psi, SpechtModule, Y
from .fields import Field
from .matrices import ActionMatrix, block_indices, nullspace

__all__ = [
    "EndomorphismF",
    "FMatrices",
    "Spectrum",
    "Eigenspace",
    "EndB2Report",
    "Verdict",
    "f_coefficient",
    "build_f",
    "endomorphism_matrix",
    "matrix_of_f",
    "predicted_diagonal",
    "eigenvalue_formula",
    "spectrum",
    "generalized_eigenspaces",
    "end_space",
    "end_algebra_b2",
    "decide",
    "analyze",
]


def _as_shape(shape) -> HookShape:
    return shape if isinstance(shape, HookShape) else HookShape(*shape)


def _as_field(char) -> Field:
    return char if isinstance(char, Field) else Field(char)


def _require_regime(shape: HookShape, field: Field) -> None:
    if shape.a % 2 == 0 or shape.b % 2:
        raise ValueError(f"f is only constructed for a odd and b even, got {shape}")
    if field.char == 2:
        raise ValueError("the eigenvalue analysis of f needs characteristic != 2")


def f_coefficient(shape: HookShape, i: int, j: int) -> int:
    return (i - 1) // 2 * ((shape.n + 2 - j) // 2)


@dataclass
class EndomorphismF:
    shape: HookShape
    field: Field
    image_of_z: ModuleElement

    def coefficients(self) -> dict[tuple[int, int], int]:
        b, n = self.shape.b, self.shape.n
        return {(i, j): f_coefficient(self.shape, i, j)
                for i in range(3, b + 2, 2) for j in range(b + 3, n + 1, 2)}


def _module(shape: HookShape, field: Field, module: SpechtModule | None) -> SpechtModule:
    if module is not None:
        if module.shape != shape or module.field != field:
            raise ValueError("module does not match shape/field")
        return module
    return SpechtModule(shape, field)


def relations_of_z(S: SpechtModule, u: ModuleElement) -> list[str]:
    """Names of the defining relations of ``z`` that ``u`` violates (empty when ``z -> u`` extends)."""
    bad = []
    coords = S.coords(u)
    if any(S.residues_of(i) != S.i_lambda for i in coords):
        bad.append("e(i_lambda)")
    for k in range(1, S.n + 1):
        if S.act(Y(k), u):
            bad.append(f"y{k}")
    for j in range(1, S.n):
        if j != S.shape.b + 1 and S.act(Psi(j), u):
            bad.append(f"psi{j}")
    if S.shape.b + 1 <= S.n - 1 and S.apply_psi_word(range(1, S.shape.b + 2), u):
        bad.append("garnir")
    return bad


def build_f(shape, char=0, module: SpechtModule | None = None) -> EndomorphismF:
    """Construct ``f(z)`` and check that it satisfies every relation of ``z``."""
    shape, field = _as_shape(shape), _as_field(char)
    _require_regime(shape, field)
    S = _module(shape, field, module)
    terms = {}
    for (i, j), c in EndomorphismF(shape, field, ModuleElement.zero(field)).coefficients().items():
        terms[make_Tij(shape, i, j)] = c
    fz = ModuleElement(terms, field)
    bad = relations_of_z(S, fz)
    if bad:
        raise ArithmeticError(f"f(z) violates relations {bad} for {shape}")
    return EndomorphismF(shape, field, fz)


def endomorphism_matrix(S: SpechtModule, u: ModuleElement, label: str = "") -> ActionMatrix:
    """Matrix of the endomorphism ``z -> u``: column ``T`` is ``psi_{w_T} u``."""
    images = [S.coords(S.apply_psi_word(S.word_of(i), u)) for i in range(S.dim)]
    return S.linear_map_matrix(images, label)


@dataclass
class FMatrices:
    full: ActionMatrix
    restricted: ActionMatrix
    domino: tuple[StandardTableau, ...]
    f: EndomorphismF


def matrix_of_f(shape, char=0, module: SpechtModule | None = None) -> FMatrices:
    """Full matrix of ``f`` and its restriction to ``e(i_lambda) S`` in domino order."""
    shape, field = _as_shape(shape), _as_field(char)
    S = _module(shape, field, module)
    f = build_f(shape, field, S)
    full = endomorphism_matrix(S, f.image_of_z, "f")
    dom = enumerate_domino(shape)
    restricted = full.restrict([S.index[t] for t in dom])
    return FMatrices(full, restricted, dom, f)


def predicted_diagonal(shape) -> list[int]:
    """Diagonal of ``f`` on the domino basis from the three triangularity conditions.

    For ``v_T`` with normal form ``(d, js)``, the term ``(i, j)`` of ``f(z)`` contributes
    its coefficient times 1 when ``i+j = 2b+6``, ``i >= b+3-2d``, ``j_v >= j-4-4(d-v)``;
    times 1 when ``i+j = 2b+2``, ``i >= b+1-2d``, ``j_v >= j-2-4(d-v)``; and times -2
    when ``i+j = 2b+4``, ``i >= b+3-2d``, ``j_v >= j-2-4(d-v)``.
    """
    shape = _as_shape(shape)
    b, n = shape.b, shape.n
    out = []
    for t in enumerate_domino(shape):
        nf = normal_form(t)
        d, js = nf.d, nf.js
        total = 0
        for i in range(3, b + 2, 2):
            for j in range(b + 3, n + 1, 2):
                c = f_coefficient(shape, i, j)

                def holds(slack):
                    return all(jv >= j - slack - 4 * (d - v) for v, jv in enumerate(js, start=1))

                if i + j == 2 * b + 6 and i >= b + 3 - 2 * d and holds(4):
                    total += c
                elif i + j == 2 * b + 2 and i >= b + 1 - 2 * d and holds(2):
                    total += c
                elif i + j == 2 * b + 4 and i >= b + 3 - 2 * d and holds(2):
                    total -= 2 * c
        out.append(total)
    return out


def eigenvalue_formula(shape) -> list[int]:
    """``-(d/2)(n-2d+1)`` for ``d = 0..min(b/2, (a-1)/2)``."""
    shape = _as_shape(shape)
    top = min(shape.b // 2, (shape.a - 1) // 2)
    return [-(d * (shape.n - 2 * d + 1)) // 2 for d in range(top + 1)]


# -- spectra -----------------------------------------------------------------


def _poly_div_root(coeffs, x, field: Field):
    """Synthetic division by ``(t - x)``; returns (quotient, remainder)."""
    out, acc = [], 0
    for c in coeffs:
        acc = field(acc * x + c)
        out.append(acc)
    return out[:-1], out[-1]


def poly_roots(coeffs, field: Field, bound: int | None = None) -> dict:
    """Roots in the prime field (char p) or integer roots in ``[-bound, bound]`` (char 0)."""
    candidates = field.elements() if field.char else range(-bound, bound + 1)
    roots = {}
    for x in candidates:
        m, cur = 0, list(coeffs)
        while len(cur) > 1:
            q, r = _poly_div_root(cur, x, field)
            if r != 0:
                break
            m, cur = m + 1, q
        if m:
            roots[field(x)] = m
    return roots


def _blocks(S: SpechtModule) -> list[list[int]]:
    return block_indices([S.residues_of(i) for i in range(S.dim)])


def _gershgorin(M: ActionMatrix) -> int:
    rows: dict[int, Fraction] = {}
    for i, _, v in M.entries():
        rows[i] = rows.get(i, 0) + abs(Fraction(v))
    return int(max(rows.values(), default=0)) + 1


@dataclass
class Spectrum:
    shape: HookShape
    char: int
    eigenvalues: list
    multiplicities: dict
    diagonal: list
    triangular: bool
    basis: list[str]
    charpoly_degree: int

    def to_dict(self) -> dict:
        field = Field(self.char)
        return {
            "shape": [self.shape.a, self.shape.b],
            "char": self.char,
            "eigenvalues": [_scalar_out(x, field) for x in self.eigenvalues],
            "multiplicities": {str(_scalar_out(x, field)): m for x, m in self.multiplicities.items()},
            "diagonal": [_scalar_out(x, field) for x in self.diagonal],
            "triangular": self.triangular,
            "basis": self.basis,
        }


def _scalar_out(x, field: Field):
    x = field(x)
    return x if isinstance(x, int) else str(x)


def spectrum(shape, char=0, module: SpechtModule | None = None, mats: FMatrices | None = None) -> Spectrum:
    """Eigenvalues of ``f`` from the characteristic polynomial of each residue block.

    Over F_p every field element is tried; over Q integer candidates inside the
    Gershgorin bound are tried, and the multiplicities must exhaust the degree.
    """
    shape, field = _as_shape(shape), _as_field(char)
    _require_regime(shape, field)
    S = _module(shape, field, module)
    mats = mats or matrix_of_f(shape, field, S)
    bound = _gershgorin(mats.full) if field.char == 0 else None
    mult: dict = {}
    degree = 0
    for block in _blocks(S):
        sub = mats.full.restrict(block)
        coeffs = [field.from_domain(c) for c in sub.dm.to_dense().charpoly()]
        roots = poly_roots(coeffs, field, bound)
        if sum(roots.values()) != len(block):
            raise ArithmeticError(f"characteristic polynomial of a block of {shape} does not split over the field")
        for x, m in roots.items():
            mult[x] = mult.get(x, 0) + m
        degree += len(block)
    diag = mats.restricted.diagonal()
    values = sorted(mult, key=lambda x: (Fraction(x) if field.char == 0 else x))
    basis = [str(normal_form(t).js) for t in mats.domino]
    return Spectrum(shape, field.char, values, mult, diag, mats.restricted.is_lower_triangular(), basis, degree)


@dataclass
class Eigenspace:
    value: object
    dim: int
    basis: list = dc_field(default_factory=list, repr=False)


def _power_kernel(block: DomainMatrix, x, field: Field) -> DomainMatrix:
    """Kernel of ``(B - x)^k`` for ``k`` large enough that the kernel stops growing."""
    dom = field.fraction_domain
    m = block.shape[0]
    shifted = block.convert_to(dom) - DomainMatrix.eye(m, dom) * dom.convert(field.to_domain(x, dom))
    shifted = shifted.to_dense()
    power = shifted
    prev = -1
    while True:
        ker = power.nullspace()
        dim = ker.shape[0]
        if dim == prev or dim == m:
            return ker
        prev = dim
        power = power * shifted


def generalized_eigenspaces(shape, char=0, module: SpechtModule | None = None,
                            mats: FMatrices | None = None, with_bases: bool = False) -> list[Eigenspace]:
    """Generalised eigenspaces of ``f``, computed per residue block (``f`` commutes with every ``e(i)``)."""
    shape, field = _as_shape(shape), _as_field(char)
    _require_regime(shape, field)
    S = _module(shape, field, module)
    mats = mats or matrix_of_f(shape, field, S)
    spec = spectrum(shape, field, S, mats)
    spaces = {x: Eigenspace(x, 0) for x in spec.eigenvalues}
    for block in _blocks(S):
        sub = mats.full.restrict(block)
        for x in spec.eigenvalues:
            ker = _power_kernel(sub.dm, x, field)
            rows = ker.to_Matrix().tolist() if ker.shape[0] else []
            rows = [r for r in rows if any(r)]
            spaces[x].dim += len(rows)
            if with_bases:
                for r in rows:
                    spaces[x].basis.append({block[c]: field.from_domain(field.fraction_domain.convert(v))
                                            for c, v in enumerate(r) if v})
    return [spaces[x] for x in spec.eigenvalues]


def invariant_under(S: SpechtModule, f: ActionMatrix, space: Eigenspace, gens=None) -> bool:
    """``(f - x)^m g v = 0`` for every generator ``g`` and basis vector ``v`` of the space."""
    field = S.field
    gens = gens or S.generators()
    for g in gens:
        for vec in space.basis:
            w = S.coords(S.act(g, S.element(vec)))
            for _ in range(space.dim):
                if not w:
                    break
                fw = {}
                for i, j, v in f.entries():
                    if j in w:
                        fw[i] = fw.get(i, 0) + v * w[j]
                for i, c in w.items():
                    fw[i] = fw.get(i, 0) - space.value * c
                w = {i: field(c) for i, c in fw.items() if field(c) != 0}
            if w:
                return False
    return True


# -- End algebra ---------------------------------------------------------------


def end_space(shape, char=0, module: SpechtModule | None = None) -> list[ModuleElement]:
    """Basis of ``{u in e(i_lambda) S : u satisfies every relation of z}`` = ``End(S)``."""
    shape, field = _as_shape(shape), _as_field(char)
    S = _module(shape, field, module)
    cols = [i for i in range(S.dim) if S.residues_of(i) == S.i_lambda]
    dom = field.fraction_domain
    rows = []
    ops = [S.action_matrix(Y(k)) for k in range(1, S.n + 1)]
    ops += [S.action_matrix(Psi(j)) for j in range(1, S.n) if j != shape.b + 1]
    if shape.b + 1 <= S.n - 1:
        ops.append(_fold(lambda x, y: x @ y, [S.action_matrix(Psi(j)) for j in range(1, shape.b + 2)]))
    for op in ops:
        sdm = op.dm.convert_to(dom).to_sparse().rep
        for r, row in sdm.items():
            picked = {p: row[c] for p, c in enumerate(cols) if c in row}
            if picked:
                rows.append(picked)
    A = DomainMatrix({k: r for k, r in enumerate(rows)}, (max(len(rows), 1), len(cols)), dom)
    ker = nullspace(A, field) if cols else None
    out = []
    if ker is None:
        return out
    for r in ker.to_Matrix().tolist():
        vec = {cols[c]: field.from_domain(dom.convert(v)) for c, v in enumerate(r) if v}
        if vec:
            out.append(S.element(vec))
    return out


@dataclass
class EndB2Report:
    shape: HookShape
    char: int
    r: int
    f_squared_ok: bool
    end_dim: int
    idempotents: list
    only_trivial: bool
    brute_force_agrees: bool | None

    def to_dict(self) -> dict:
        field = Field(self.char)
        return {
            "shape": [self.shape.a, self.shape.b],
            "char": self.char,
            "relation": f"f^2 = -{self.r + 1} f",
            "f_squared_ok": self.f_squared_ok,
            "end_dim": self.end_dim,
            "idempotents": [[field.format(a), field.format(b)] for a, b in self.idempotents],
            "only_trivial": self.only_trivial,
        }


def idempotent_pairs(r: int, field: Field) -> list[tuple]:
    """All ``(alpha, beta)`` with ``(alpha I + beta f)^2 = alpha I + beta f`` given ``f^2 = -(r+1) f``.

    The conditions are ``alpha^2 = alpha`` and ``2 alpha beta - (r+1) beta^2 = beta``.
    """
    s = field(r + 1)
    out = []
    for alpha in (0, 1):
        # beta (2 alpha - 1 - s beta) = 0
        out.append((alpha, 0))
        if s != 0:
            beta = field(field(2 * alpha - 1) * field.inv(s))
            if beta != 0:
                out.append((alpha, beta))
    return sorted(set(out))


def end_algebra_b2(shape, char=0, module: SpechtModule | None = None) -> EndB2Report:
    shape, field = _as_shape(shape), _as_field(char)
    if shape.b != 2 or shape.a % 2 == 0:
        raise ValueError("the {I, f} description needs b = 2 and a odd")
    S = _module(shape, field, module)
    mats = matrix_of_f(shape, field, S)
    F = mats.full
    r = (shape.a - 1) // 2
    ok = (F @ F) == F.scale(-(r + 1))
    end_dim = len(end_space(shape, field, S))
    pairs = idempotent_pairs(r, field)
    brute = None
    if field.char and field.char <= 50:
        ident = ActionMatrix(DomainMatrix.eye(S.dim, field.domain), S.basis, field)
        found = []
        for a_ in field.elements():
            for b_ in field.elements():
                M = ident.scale(a_) + F.scale(b_)
                if M @ M == M:
                    found.append((a_, b_))
        brute = sorted(found) == pairs
    return EndB2Report(shape, field.char, r, ok, end_dim, pairs, pairs == [(0, 0), (1, 0)], brute)


# -- decision ------------------------------------------------------------------


@dataclass
class Verdict:
    shape: HookShape
    char: int
    decomposable: bool
    rule: str
    canonical: HookShape

    def to_dict(self) -> dict:
        return {
            "shape": [self.shape.a, self.shape.b],
            "n": self.shape.n,
            "char": self.char,
            "decomposable": self.decomposable,
            "rule": self.rule,
            "canonical": [self.canonical.a, self.canonical.b],
        }


def canonical_shape(shape: HookShape) -> HookShape:
    """The member of ``{shape, conjugate}`` with ``b < a``."""
    return shape.conjugate() if shape.b >= shape.a else shape


def murphy_indecomposable(a: int, b: int) -> bool:
    """Characteristic 2 rule for ``b < a``: ``a-1 = b (mod 2^L)`` with ``2^(L-1) <= b < 2^L``."""
    if (a + b) % 2 == 0 or b <= 1:
        return True
    L = b.bit_length()
    return (a - 1 - b) % (1 << L) == 0


def decide(a: int, b: int, char: int = 0) -> Verdict:
    """Decomposability of ``S_(a,1^b)`` over a field of characteristic ``char`` (at e = 2)."""
    shape = HookShape(a, b)
    field = Field(char)
    canon = canonical_shape(shape)
    ca, cb = canon.a, canon.b
    if shape.n % 2 == 0:
        return Verdict(shape, field.char, False, "n-even", canon)
    if cb <= 1:
        return Verdict(shape, field.char, False, "2-regular", canon)
    if field.char == 2:
        ind = murphy_indecomposable(ca, cb)
        return Verdict(shape, 2, not ind, "murphy-char2", canon)
    if cb in (2, 3):
        m = ceil(ca / 2)
        if field.divides(m):
            return Verdict(shape, field.char, False, f"b={cb}, char | {m}", canon)
        return Verdict(shape, field.char, True, f"b={cb}, char does not divide {m}", canon)
    return Verdict(shape, field.char, True, "b>=4", canon)


def analyze(a: int, b: int, char: int = 0, with_spectrum: bool = True) -> dict:
    """Verdict plus (when ``f`` exists) spectrum and eigenspace dimensions, as plain data."""
    shape, field = HookShape(a, b), Field(char)
    verdict = decide(a, b, char)
    out = {
        "shape": [a, b],
        "n": shape.n,
        "char": field.char,
        "dim": len(SpechtModule(shape, field).basis),
        "domino_count": len(enumerate_domino(shape)),
        "decomposable": verdict.decomposable,
        "rule": verdict.rule,
        "eigenvalues": [],
        "eigenspace_dims": [],
    }
    if with_spectrum and a % 2 == 1 and b % 2 == 0 and field.char != 2:
        S = SpechtModule(shape, field)
        mats = matrix_of_f(shape, field, S)
        spaces = generalized_eigenspaces(shape, field, S, mats)
        out["eigenvalues"] = [_scalar_out(e.value, field) for e in spaces]
        out["eigenspace_dims"] = [e.dim for e in spaces]
    return out


def to_json(obj, **kw) -> str:
    data = obj.to_dict() if hasattr(obj, "to_dict") else asdict(obj)
    return json.dumps(data, **kw)
