import pytest
from hypothesis import given, strategies as st

from hookspecht.combinatorics import HookShape, enumerate_standard
from hookspecht.fields import Field
from hookspecht.klr_engine import (
    E,
    ModuleElement,
    Psi,
    RewriteError,
    SpechtModule,
    Y,
    parse_generator,
    parse_word,
)


@st.composite
def module_and_word(draw, n_max=8, length=6):
    n = draw(st.integers(2, n_max))
    b = draw(st.integers(0, n - 1))
    p = draw(st.sampled_from([0, 3, 5]))
    S = SpechtModule(HookShape(n - b, b), p)
    gens = st.one_of(st.builds(Psi, st.integers(1, n - 1)), st.builds(Y, st.integers(1, n)))
    return S, draw(st.lists(gens, max_size=length))


def test_small_module():
    S = SpechtModule(HookShape(3, 2))
    assert S.dim == 6
    assert S.reduce([Psi(1)]) == 0
    assert S.reduce([Y(4)]) == 0
    assert S.reduce([E(S.i_lambda)]) == S.basis_vector(S.z)


def test_refuses_non_hooks():
    with pytest.raises(ValueError):
        SpechtModule((3, 2))
    assert SpechtModule((3, 1, 1)).dim == 6


def test_basis_words_reach_their_tableaux():
    for b in range(5):
        S = SpechtModule(HookShape(5 - b, b), 0)
        for t in S.basis:
            assert S.reduce([Psi(r) for r in S.word_of(t)]) == S.basis_vector(t)


@given(module_and_word())
def test_action_is_compositional(data):
    S, word = data
    v = S.reduce(word)
    for g in (Psi(1), Y(S.n)):
        assert S.act(g, v) == S.reduce((g,) + tuple(word))


@given(module_and_word(n_max=7, length=4))
def test_quadratic_relation_on_random_vectors(data):
    S, word = data
    v = S.reduce(word)
    for r in range(1, S.n):
        lhs = S.apply([Psi(r), Psi(r)], v)
        rhs = ModuleElement.zero(S.field)
        for t, c in v:
            i = S.residues_of(t)
            if i[r - 1] != i[r]:
                # -(y_r - y_{r+1})^2 e(i)
                w = c * S.basis_vector(t)
                rhs = rhs - S.apply([Y(r), Y(r)], w) + 2 * S.apply([Y(r), Y(r + 1)], w) \
                    - S.apply([Y(r + 1), Y(r + 1)], w)
        assert lhs == rhs


def test_residues_are_a_grading():
    S = SpechtModule(HookShape(4, 3), 5)
    for g in S.generators():
        M = S.action_matrix(g)
        for i, j, _ in M.entries():
            if g.kind == "psi":
                r = g.index
                src = list(S.residues_of(j))
                src[r - 1], src[r] = src[r], src[r - 1]
                assert S.residues_of(i) == tuple(src)
            else:
                assert S.residues_of(i) == S.residues_of(j)


def test_step_cap_raises():
    S = SpechtModule(HookShape(5, 4), 0, max_steps=5)
    with pytest.raises(RewriteError):
        for t in S.basis:
            S.act(Psi(3), S.basis_vector(t))


def test_parse_generators():
    s = HookShape(3, 2)
    assert parse_generator("psi3") == Psi(3)
    assert parse_generator("y_2") == Y(2)
    assert parse_generator("e(01010)") == E((0, 1, 0, 1, 0))
    assert parse_generator("e_lambda", s) == E((0, 1, 0, 1, 0))
    assert parse_word("psi1 y2") == (Psi(1), Y(2))
    with pytest.raises(ValueError):
        parse_generator("x1")
    with pytest.raises(ValueError):
        parse_generator("e_lambda")
    with pytest.raises(IndexError):
        SpechtModule(s).act(Psi(5), SpechtModule(s).basis_vector(0))


def test_element_serialisation():
    S = SpechtModule(HookShape(3, 2), 7)
    v = 3 * S.basis_vector(0) - S.basis_vector(5)
    assert ModuleElement.from_json(v.to_json()) == v
    assert v - v == 0
    assert not ModuleElement.zero(Field(7))


def test_characteristic_coherence():
    s = HookShape(4, 4)
    S0, S3 = SpechtModule(s, 0), SpechtModule(s, 3)
    for g in S0.generators():
        if g.kind != "e":
            assert S0.action_matrix(g).reduce_mod(3) == S3.action_matrix(g)
    assert len(enumerate_standard(s)) == S3.dim
