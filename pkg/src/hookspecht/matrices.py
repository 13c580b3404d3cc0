"""Exact matrices in a fixed tableau basis, backed by sympy's ``DomainMatrix``."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from sympy.polys.matrices import DomainMatrix

from .combinatorics import StandardTableau
from .fields import Field, parse_scalar

__all__ = ["ActionMatrix", "sparse_matrix", "identity", "block_indices", "charpoly", "nullspace"]


def sparse_matrix(entries: dict[int, dict[int, object]], shape: tuple[int, int], field: Field,
                  domain=None) -> DomainMatrix:
    dom = domain or field.domain
    rows = {}
    for i, row in entries.items():
        conv = {j: field.to_domain(v, dom) for j, v in row.items() if field(v) != 0}
        if conv:
            rows[i] = conv
    return DomainMatrix(rows, shape, dom)


def identity(size: int, field: Field, domain=None) -> DomainMatrix:
    dom = domain or field.domain
    return DomainMatrix({i: {i: dom.one} for i in range(size)}, (size, size), dom)


@dataclass
class ActionMatrix:
    """Matrix of a linear map on a module with basis ``basis``.

    Column ``c`` holds the coordinates of the image of ``basis[c]``.
    """

    dm: DomainMatrix
    basis: tuple[StandardTableau, ...]
    field: Field
    label: str = ""

    @property
    def size(self) -> int:
        return self.dm.shape[0]

    def entries(self) -> Iterator[tuple[int, int, object]]:
        """Nonzero ``(row, col, value)`` triples in row-major order."""
        sdm = self.dm.to_sparse().rep
        for i in sorted(sdm):
            for j in sorted(sdm[i]):
                yield i, j, self.field.from_domain(sdm[i][j])

    def __getitem__(self, ij):
        i, j = ij
        return self.field.from_domain(self.dm.to_sparse().rep.get(i, {}).get(j, self.dm.domain.zero))

    def to_rows(self) -> list[list]:
        out = [[0] * self.dm.shape[1] for _ in range(self.dm.shape[0])]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, object]:
        return {i: v for i, jj, v in self.entries() if jj == j}

    def is_zero(self) -> bool:
        return self.dm.is_zero_matrix

    def diagonal(self) -> list:
        return [self[i, i] for i in range(self.size)]

    def is_lower_triangular(self) -> bool:
        return all(i >= j for i, j, _ in self.entries())

    def restrict(self, indices: Sequence[int]) -> "ActionMatrix":
        """Submatrix on the given basis positions (rows and columns)."""
        pos = {k: p for p, k in enumerate(indices)}
        sdm = self.dm.to_sparse().rep
        rows = {}
        for i in indices:
            row = {pos[j]: v for j, v in sdm.get(i, {}).items() if j in pos}
            if row:
                rows[pos[i]] = row
        dm = DomainMatrix(rows, (len(indices), len(indices)), self.dm.domain)
        return ActionMatrix(dm, tuple(self.basis[i] for i in indices), self.field, self.label)

    def _wrap(self, dm, label=""):
        return ActionMatrix(dm, self.basis, self.field, label)

    def __matmul__(self, other: "ActionMatrix") -> "ActionMatrix":
        return self._wrap(self.dm * other.dm)

    def __add__(self, other: "ActionMatrix") -> "ActionMatrix":
        return self._wrap(self.dm + other.dm)

    def __sub__(self, other: "ActionMatrix") -> "ActionMatrix":
        return self._wrap(self.dm - other.dm)

    def __neg__(self):
        return self._wrap(-self.dm)

    def scale(self, c) -> "ActionMatrix":
        return self._wrap(self.dm * self.field.to_domain(c, self.dm.domain))

    def __eq__(self, other):
        if not isinstance(other, ActionMatrix):
            return NotImplemented
        return self.dm.shape == other.dm.shape and self.dm.to_sparse() == other.dm.to_sparse()

    def reduce_mod(self, p: int) -> "ActionMatrix":
        """Reduce an integral characteristic-0 matrix modulo ``p``."""
        if self.field.char != 0:
            raise ValueError("only integral char-0 matrices can be reduced")
        target = Field(p)
        rows = {}
        for i, j, v in self.entries():
            if getattr(v, "denominator", 1) != 1:
                raise ValueError("matrix is not integral")
            rows.setdefault(i, {})[j] = v
        return ActionMatrix(sparse_matrix(rows, self.dm.shape, target), self.basis, target, self.label)

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "char": self.field.char,
            "rows": self.dm.shape[0],
            "cols": self.dm.shape[1],
            "basis": [t.to_dict() for t in self.basis],
            "entries": [[i, j, self.field.format(v)] for i, j, v in self.entries()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "ActionMatrix":
        field = Field(data.get("char", 0))
        rows = {}
        for i, j, s in data["entries"]:
            v, p = parse_scalar(s)
            if p != field.char:
                raise ValueError(f"entry {s!r} does not belong to characteristic {field.char}")
            rows.setdefault(i, {})[j] = v
        shape = (data["rows"], data["cols"])
        dom = field.domain if all(field(v) == int(field(v)) for r in rows.values() for v in r.values()) \
            else field.fraction_domain
        basis = tuple(StandardTableau.from_dict(t) for t in data.get("basis", []))
        return cls(sparse_matrix(rows, shape, field, dom), basis, field, data.get("label", ""))

    @classmethod
    def from_json(cls, text: str) -> "ActionMatrix":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        rows = [[str(self.field.signed(v)) if self.field.char else str(v) for v in r] for r in self.to_rows()]
        width = max((len(x) for r in rows for x in r), default=1)
        return "\n".join(" ".join(x.rjust(width) for x in r) for r in rows)


def block_indices(keys: Sequence) -> list[list[int]]:
    """Group positions by key, preserving first-appearance order."""
    groups: dict = {}
    for pos, k in enumerate(keys):
        groups.setdefault(k, []).append(pos)
    return list(groups.values())


def charpoly(dm: DomainMatrix, field: Field) -> list:
    """Characteristic polynomial coefficients, leading coefficient first."""
    dom = field.fraction_domain
    return [field.from_domain(c) for c in dm.convert_to(dom).to_dense().charpoly()]


def nullspace(dm: DomainMatrix, field: Field) -> DomainMatrix:
    """Rows spanning the right kernel, over the fraction field."""
    dom = field.fraction_domain
    return dm.convert_to(dom).to_dense().nullspace()
