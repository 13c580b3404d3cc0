import pytest
from hypothesis import given, strategies as st

from hookspecht.combinatorics import DominoNormalForm, HookShape, enumerate_domino, enumerate_standard
from hookspecht.hook_actions import DominoTL, HookActions, PsiChain, cancel_chains, chains_of, psi_word
from hookspecht.klr_engine import Psi

SHAPES = [HookShape(3, 2), HookShape(5, 4), HookShape(7, 6), HookShape(5, 2), HookShape(7, 4), HookShape(9, 2)]
EXTRA = [HookShape(1, 6), HookShape(3, 4), HookShape(3, 6), HookShape(5, 6), HookShape(3, 8), HookShape(1, 0)]


@pytest.mark.parametrize("shape", SHAPES + EXTRA, ids=str)
@pytest.mark.parametrize("char", [0, 3])
def test_fast_path_matches_engine(shape, char):
    ha = HookActions(shape, char)
    S = ha.engine
    for t in enumerate_domino(shape):
        v = S.basis_vector(t)
        for g in S.generators():
            assert ha.apply(g, t) == S.act(g, v), (g, t)
        for j in range(3, shape.n - 1, 2):
            assert ha.apply_Psi(j, t) == S.apply_psi_word(psi_word(j), v)
    assert ha.fallbacks == 0


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_psi_action_items(shape):
    ha = HookActions(shape)
    S = ha.engine
    for t in enumerate_domino(shape):
        v = S.basis_vector(t)
        for j in range(3, shape.n - 1, 2):
            for item in (1, 2, 4):
                if item == 2 and j + 2 > shape.n - 2 or item == 4 and j - 2 < 3:
                    continue
                lhs, rhs = ha.psi_actions(item, j, t)
                assert lhs == rhs
            # items 3 and 5 as the engine sees them
            if j + 2 <= shape.n - 1:
                assert S.apply_psi_word(psi_word(j) + (j + 2,), v) == 0
            if j - 2 >= 1:
                assert S.apply_psi_word(psi_word(j) + (j - 2,), v) == 0
    assert ha.fallbacks == 0


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_normal_forms_and_garnir(shape):
    ha = HookActions(shape)
    S = ha.engine
    for t in enumerate_domino(shape):
        assert ha.normal_form_matches(t)
        assert ha.garnir_word_kills(t)
        if shape.b + 1 <= shape.n - 1:
            assert S.apply_psi_word(range(1, shape.b + 2), S.basis_vector(t)) == 0
    assert ha.fallbacks == 0


def test_trace_records_rules():
    ha = HookActions(HookShape(5, 4), trace=True)
    t = enumerate_domino(HookShape(5, 4))[0]
    ha.apply(Psi(2), t)
    ha.apply(Psi(1), t)
    assert [e["rule"] for e in ha.events] == ["psi-even-kills", "psi1-kills"]


def test_not_covered_uses_engine():
    s = HookShape(5, 4)
    ha = HookActions(s)
    t = next(t for t in enumerate_standard(s) if t not in enumerate_domino(s))
    assert ha.apply(Psi(3), t) == ha.engine.act(Psi(3), ha.engine.basis_vector(t))
    assert ha.fallbacks == 1


def test_temperley_lieb_relations():
    tl = DominoTL(HookShape(7, 6))
    for k in range(1, tl.N):
        e = tl.generator(k)
        assert tl.compose(e, e) == (1, e)
        for m in (k - 1, k + 1):
            if 1 <= m < tl.N:
                f = tl.generator(m)
                assert tl.compose(tl.compose(e, f)[1], e) == (0, e)


chain_ends = st.tuples(st.sampled_from([3, 5, 7, 9, 11]), st.sampled_from([3, 5, 7, 9, 11]))


@given(chain_ends, chain_ends, st.integers(0, 19))
def test_cancellation_rules(c1, c2, pick):
    shape = HookShape(7, 6)
    (x1, y1), (x2, y2) = sorted(c1, reverse=True), sorted(c2, reverse=True)
    ha = HookActions(shape)
    dom = enumerate_domino(shape)
    tail = ha.engine.basis_vector(dom[pick % len(dom)])
    a, b = PsiChain.down(x1, y1), PsiChain.down(x2, y2)
    lhs, rhs, rule = ha.cancel(a, b, tail)
    if rule:
        assert lhs == rhs


def test_cancellation_boundary_is_excluded():
    # at x2 = y1 the middle factor squares: Psi_3 Psi_3 v = -2 Psi_3 v, not Psi_3 v
    a, b = PsiChain.down(3, 3), PsiChain.down(3, 3)
    assert cancel_chains(a, b)[2] is None
    shape = HookShape(5, 4)
    ha = HookActions(shape)
    t = next(t for t in enumerate_domino(shape) if t.leg == (2, 3, 6, 7))
    v = ha.engine.basis_vector(t)
    once = ha.engine.apply_psi_word(psi_word(3), v)
    assert once != 0
    assert ha.engine.apply_psi_word(psi_word(3) * 2, v) == -2 * once


def test_chain_objects():
    c = PsiChain.down(7, 3)
    assert c.indices() == (7, 5, 3)
    assert len(c) == 3
    assert PsiChain.down(3, 5).empty
    chains = chains_of(HookShape(5, 4), DominoNormalForm(2, (5, 7)))
    assert [ch.indices() for ch in chains] == [(5, 3), (7, 5)]
