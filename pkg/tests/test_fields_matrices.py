from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hookspecht.fields import Field, parse_scalar
from hookspecht.combinatorics import HookShape
from hookspecht.klr_engine import Psi, SpechtModule, Y
from hookspecht.matrices import ActionMatrix, block_indices


def test_field_normalises():
    F5 = Field(5)
    assert F5(-2) == 3
    assert F5(Fraction(1, 2)) == 3
    assert F5.inv(2) == 3
    assert F5.signed(4) == -1
    assert Field(0)(Fraction(4, 2)) == 2


def test_field_rejects_composites():
    for bad in (1, 4, 9, -3):
        with pytest.raises(ValueError):
            Field(bad)


def test_divides_convention():
    assert Field(0).divides(0)
    assert not Field(0).divides(3)
    assert Field(3).divides(6)
    with pytest.raises(ZeroDivisionError):
        Field(7).inv(0)


@given(st.integers(-50, 50), st.integers(1, 20), st.sampled_from([0, 2, 3, 5, 7, 11]))
def test_format_parse_round_trip(num, den, p):
    F = Field(p)
    if p and den % p == 0:
        return
    x = F(Fraction(num, den))
    v, q = parse_scalar(F.format(x))
    assert q == p and F(v) == x


def test_matrix_round_trip_and_reduction():
    S = SpechtModule(HookShape(3, 2), 0)
    M = S.action_matrix(Psi(3))
    assert ActionMatrix.from_json(M.to_json()) == M
    M7 = SpechtModule(HookShape(3, 2), 7).action_matrix(Psi(3))
    assert M.reduce_mod(7) == M7
    assert M7.to_rows() == ActionMatrix.from_dict(M7.to_dict()).to_rows()


def test_matrix_algebra():
    S = SpechtModule(HookShape(2, 2), 3)
    A, B = S.action_matrix(Y(3)), S.action_matrix(Psi(1))
    assert (A + B) - B == A
    assert (-A).scale(-1) == A
    assert A.restrict(range(S.dim)) == A


def test_block_indices():
    assert block_indices(["x", "y", "x", "z", "y"]) == [[0, 2], [1, 4], [3]]
