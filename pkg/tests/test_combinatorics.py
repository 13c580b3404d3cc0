from math import comb

import pytest
from hypothesis import given, strategies as st

from hookspecht.combinatorics import (
    DominoNormalForm,
    HookShape,
    StandardTableau,
    coxeter_length,
    enumerate_domino,
    enumerate_standard,
    initial_rows,
    initial_tableau,
    is_domino,
    is_domino_by_pairs,
    make_Tij,
    normal_form,
    permutation_of,
    residue_sequence,
    tableau_from_normal_form,
)

from conftest import domino_hooks, hooks

@st.composite
def hook(draw, n_max=10):
    n = draw(st.integers(1, n_max))
    b = draw(st.integers(0, n - 1))
    return HookShape(n - b, b)


def test_shape_basics():
    s = HookShape(3, 2)
    assert s.n == 5
    assert s.partition == (3, 1, 1)
    assert s.conjugate() == HookShape(3, 2)
    assert HookShape(4, 1).conjugate() == HookShape(2, 3)
    with pytest.raises(ValueError):
        HookShape(0, 2)


def test_initial_tableau_and_residues():
    # column-reading fill: the leg of t^lambda holds 2..b+1
    assert initial_rows((3, 1, 1)) == [[1, 4, 5], [2], [3]]
    t = initial_tableau(HookShape(3, 2))
    assert t.leg == (2, 3)
    assert residue_sequence(t) == (0, 1, 0, 1, 0)
    assert residue_sequence(initial_tableau(HookShape(2, 3))) == (0, 1, 0, 1, 1)


def test_dimension_is_binomial():
    for s in hooks(10):
        assert len(enumerate_standard(s)) == comb(s.n - 1, s.b)


def test_swap_standardness():
    t = initial_tableau(HookShape(3, 2))
    assert t.swap(3) is not None
    assert t.swap(4) is None  # 4 and 5 share the column


@given(hook())
def test_permutation_word_is_reduced(s):
    for t in enumerate_standard(s):
        perm, word = permutation_of(t)
        assert len(word) == coxeter_length(perm)
        assert sorted(perm) == list(range(1, s.n + 1))


@given(hook(9))
def test_text_and_dict_round_trip(s):
    for t in enumerate_standard(s):
        assert StandardTableau.from_text(t.to_text()) == t
        assert StandardTableau.from_dict(t.to_dict()) == t
        assert StandardTableau.from_json(t.to_json()) == t


def test_domino_count_and_predicates():
    for s in domino_hooks(11):
        dom = enumerate_domino(s)
        assert len(dom) == comb((s.n - 1) // 2, s.b // 2)
        for t in enumerate_standard(s):
            assert is_domino(t) == is_domino_by_pairs(t) == (t in dom)


def test_normal_form_round_trip():
    for s in domino_hooks(11):
        for t in enumerate_domino(s):
            nf = normal_form(t)
            nf.validate(s)
            assert tableau_from_normal_form(s, nf) == t


def test_normal_form_validation():
    s = HookShape(5, 4)
    with pytest.raises(ValueError):
        DominoNormalForm(1, (4,)).validate(s)
    with pytest.raises(ValueError):
        DominoNormalForm(2, (5, 5)).validate(s)
    with pytest.raises(ValueError):
        DominoNormalForm(1, ())


def test_make_Tij():
    s = HookShape(5, 4)
    assert make_Tij(s, 3, 7).leg == (4, 5, 6, 7)
    assert make_Tij(s, 5, 9).leg == (2, 3, 8, 9)
    with pytest.raises(ValueError):
        make_Tij(s, 4, 7)
