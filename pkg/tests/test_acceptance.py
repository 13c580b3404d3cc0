"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

import sys
import time
from functools import reduce
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, domino_hooks, hooks  # noqa: E402

from hookspecht.combinatorics import HookShape, enumerate_domino, make_Tij  # noqa: E402
from hookspecht.endomorphism import (  # noqa: E402
    build_f,
    decide,
    end_algebra_b2,
    end_space,
    matrix_of_f,
    spectrum,
)
from hookspecht.fields import Field  # noqa: E402
from hookspecht.hook_actions import HookActions, psi_word  # noqa: E402
from hookspecht.klr_engine import Psi, SpechtModule, parse_generator  # noqa: E402
from hookspecht.matrices import ActionMatrix  # noqa: E402
from hookspecht.oracle import verify_presentation, verify_domino_identities  # noqa: E402


def record(label: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    return out + ([m] if m > 1 else [])


def test_criterion_1_presentation():
    t0 = time.perf_counter()
    failures, count, relation_lines = [], 0, set()
    for shape in hooks(11):
        for p in (0, 3, 5, 7):
            rep = verify_presentation(shape, p)
            count += 1
            relation_lines |= {c.name for c in rep.checks}
            if not rep.ok:
                failures.append(f"{shape} char {p}: {rep.failures()[0].name}")
    secs = time.perf_counter() - t0
    ok = not failures and secs < 300
    record("1 presentation", ok,
           f"{count} (shape, char) pairs, {len(relation_lines)} named checks (17 KLR relation lines, 4 Specht relations, dimension, basis words), {secs:.1f}s"
           + (f"; first failure {failures[0]}" if failures else ""))
    assert not failures, failures[:5]
    assert secs < 300


DOMINO_SHAPES = [HookShape(3, 2), HookShape(5, 4), HookShape(7, 6), HookShape(5, 2), HookShape(7, 4), HookShape(9, 2)]


def test_criterion_2_domino_actions():
    bad, fallbacks, vectors = [], 0, 0
    for shape in DOMINO_SHAPES:
        ha = HookActions(shape)
        S = ha.engine
        for t in enumerate_domino(shape):
            vectors += 1
            v = S.basis_vector(t)
            for g in S.generators():
                if g.kind == "y" or (g.kind == "psi" and (g.index % 2 == 0 or g.index == 1)):
                    if ha.apply(g, t) != 0 or S.act(g, v) != 0:
                        bad.append(f"{g} on {t}")
            for j in range(3, shape.n - 1, 2):
                for item in (1, 2, 4):
                    if (item == 2 and j + 2 > shape.n - 2) or (item == 4 and j - 2 < 3):
                        continue
                    lhs, rhs = ha.psi_actions(item, j, t)
                    k = {1: j, 2: j + 2, 4: j - 2}[item]
                    eng_l = S.apply_psi_word((j,) + (psi_word(k) if item != 1 else ()) + psi_word(j), v)
                    eng_r = S.apply_psi_word((j,), v)
                    if item == 1:
                        eng_r = -2 * eng_r
                    if lhs != rhs or eng_l != eng_r or lhs != eng_l:
                        bad.append(f"item {item} j={j} on {t}")
                if j + 2 <= shape.n - 1 and S.apply_psi_word(psi_word(j) + (j + 2,), v) != 0:
                    bad.append(f"item 3 j={j} on {t}")
                if j - 2 >= 1 and S.apply_psi_word(psi_word(j) + (j - 2,), v) != 0:
                    bad.append(f"item 5 j={j} on {t}")
            if not ha.garnir_word_kills(t) or S.apply_psi_word(range(1, shape.b + 2), v) != 0:
                bad.append(f"garnir on {t}")
        fallbacks += ha.fallbacks
        if not verify_domino_identities(shape).ok:
            bad.append(f"oracle domino suite on {shape}")
    ok = not bad and fallbacks == 0
    record("2 domino identities", ok,
           f"{len(DOMINO_SHAPES)} shapes, {vectors} domino vectors, {fallbacks} fallbacks"
           + (f"; first failure {bad[0]}" if bad else ""))
    assert not bad, bad[:5]
    assert fallbacks == 0


def test_criterion_3_endomorphism_5_4():
    s = HookShape(5, 4)
    f = build_f(s, 0)
    want = {make_Tij(s, 3, 7): 2, make_Tij(s, 3, 9): 1, make_Tij(s, 5, 7): 4, make_Tij(s, 5, 9): 2}
    coeffs_ok = dict(f.image_of_z.terms) == want
    mats = matrix_of_f(s, 0)
    tri = mats.restricted.is_lower_triangular()
    diag = set(mats.restricted.diagonal())
    ok = coeffs_ok and tri and diag == {0, -4, -6}
    record("3 f on (5,1^4)", ok, f"coefficients {'exact' if coeffs_ok else 'WRONG'}, "
           f"lower triangular {tri}, diagonal set {sorted(diag)}")
    assert coeffs_ok and tri and diag == {0, -4, -6}


def test_criterion_4_b2_algebra():
    notes, bad = [], []
    for a in (3, 5, 7, 9):
        s = HookShape(a, 2)
        r = (a - 1) // 2
        rep = end_algebra_b2(s, 0)
        if not rep.f_squared_ok:
            bad.append(f"f^2 on {s}")
        F0 = matrix_of_f(s, 0).full
        for p in prime_factors((s.n - 1) // 2):
            field = Field(p)
            F = F0.reduce_mod(p)
            if not (F @ F) == F.scale(-(r + 1)):
                bad.append(f"f^2 mod {p} on {s}")
            # alpha^2 = alpha, 2 alpha beta = beta (the f^2 term vanishes mod p)
            solved = sorted((al, be) for al in field.elements() for be in field.elements()
                            if field(al * al) == al and field(2 * al * be - (r + 1) * be * be) == be)
            ident = ActionMatrix(F.dm.eye(F.size, F.dm.domain), F.basis, field)
            brute = sorted((al, be) for al in field.elements() for be in field.elements()
                           if (lambda M: M @ M == M)(ident.scale(al) + F.scale(be)))
            if solved != [(0, 0), (1, 0)] or brute != solved:
                bad.append(f"idempotents mod {p} on {s}: {solved}")
            notes.append(f"a={a} p={p}")
    ok = not bad
    record("4 b=2 algebra", ok, f"f^2=-(r+1)f for a in 3,5,7,9; trivial idempotents at {', '.join(notes)}"
           + (f"; first failure {bad[0]}" if bad else ""))
    assert not bad, bad


def test_criterion_5_classification():
    t0 = time.perf_counter()
    bad, rows, witnesses = [], 0, 0
    for p in (0, 2, 3, 5):
        for a in range(1, 11):
            for b in range(0, 9):
                rows += 1
                v = decide(a, b, p)
                if decide(b + 1, a - 1, p).decomposable != v.decomposable:
                    bad.append(f"conjugation ({a},{b}) char {p}")
                if a % 2 == 1 and b % 2 == 0 and decide(a + 1, b + 1, p).decomposable != v.decomposable:
                    bad.append(f"branching ({a},{b}) char {p}")
    for shape in hooks(11):
        if shape.n % 2 == 0 or shape.b % 2:
            continue
        for p in (0, 3, 5):
            witnesses += 1
            distinct = len(spectrum(shape, p).eigenvalues)
            if (distinct >= 2) != decide(shape.a, shape.b, p).decomposable:
                bad.append(f"spectral witness {shape} char {p}: {distinct} eigenvalues")
    secs = time.perf_counter() - t0
    ok = not bad and secs < 120
    record("5 classification", ok, f"{rows} table rows, {witnesses} spectral witnesses, {secs:.1f}s"
           + (f"; first failure {bad[0]}" if bad else ""))
    assert not bad, bad[:5]
    assert secs < 120


def test_criterion_6_cross_field():
    bad, compared = [], 0
    for shape in hooks(9):
        S0 = SpechtModule(shape, 0)
        gens = [g for g in S0.generators() if g.kind != "e"] + [parse_generator("e_lambda", shape)]
        mats0 = {str(g): S0.action_matrix(g) for g in gens}
        if shape.a % 2 == 1 and shape.b % 2 == 0:
            mats0["f"] = matrix_of_f(shape, 0, S0).full
        for p in (3, 5, 7):
            Sp = SpechtModule(shape, p)
            for name, M0 in mats0.items():
                Mp = matrix_of_f(shape, p, Sp).full if name == "f" else Sp.action_matrix(parse_generator(name, shape))
                compared += 1
                if M0.reduce_mod(p) != Mp:
                    bad.append(f"{name} on {shape} mod {p}")
    record("6 cross-field coherence", not bad, f"{compared} matrices compared entrywise"
           + (f"; first failure {bad[0]}" if bad else ""))
    assert not bad, bad[:5]


def test_supplementary_end_dimension_n_even():
    bad = [f"{s} char {p}" for s in hooks(9) if s.n % 2 == 0 for p in (0, 2, 3)
           if len(end_space(s, p)) != 1]
    record("supplementary: dim End = 1 for n even (n <= 9)", not bad, f"{len(bad)} exceptions")
    assert not bad, bad


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
