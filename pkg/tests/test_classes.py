from fractions import Fraction as F
import random

import pytest

from coopdecomp.classes import (
    Flag,
    ClassReport,
    almost_positive_coeffs,
    classify,
    is_balanced,
    is_exact,
    is_supermodular,
    is_totally_balanced,
    is_totally_monotone,
    jordan_decompose_tm,
    supermodular_violation,
    supermodular_violation_definitional,
    totally_monotone_violation_definitional,
)
from coopdecomp.decomposition import game_vB
from coopdecomp.errors import NotInClass
from coopdecomp.game import (
    coalition,
    coalitions,
    embed_additive,
    make_game,
    mobius,
    size,
    unanimity,
    zero_game,
)
from coopdecomp.generators import (
    random_exact,
    random_game,
    random_supermodular,
    random_tm,
    random_zero_monotone,
)

MAJORITY = make_game(3, {a: 1 for a in coalitions(3) if size(a) >= 2})
PAIRS = [coalition(1, 2), coalition(1, 3), coalition(2, 3)]


def test_classify_unanimity_games():
    for n in (2, 3, 4):
        for a in coalitions(n):
            r = classify(unanimity(n, a))
            assert r.totally_monotone and r.supermodular and r.monotone and r.balanced
            assert bool(r.zero_normalized) == (size(a) >= 2)
            if a == (1 << n) - 1:
                assert r.exact
            assert r.chain_holds()


def test_classify_majority():
    r = classify(MAJORITY)
    assert not r.balanced and not r.exact and not r.totally_balanced
    assert not r.supermodular and r.monotone


def test_classify_zero_game():
    r = classify(zero_game(3))
    assert all(f.holds for f in r.as_dict().values())


def test_is_balanced_certificates():
    cert = is_balanced(unanimity(3, 7))
    assert cert and sum(cert.core_point) == 1 and min(cert.core_point) >= 0
    cert = is_balanced(MAJORITY)
    assert not cert
    assert cert.weights == {a: F(1, 2) for a in PAIRS}
    assert sum(w * MAJORITY[a] for a, w in cert.weights.items()) > MAJORITY[7]
    x = (F(1), F(-2), F(5, 3))
    assert is_balanced(embed_additive(x)).core_point == x


def test_is_exact_examples():
    assert is_exact(unanimity(3, 7))
    assert not is_exact(make_game(3, {coalition(1, 2): -1}))
    rng = random.Random(11)
    for _ in range(15):
        assert is_exact(random_supermodular(rng, 1 + rng.randint(1, 3)))


def test_is_totally_balanced_examples():
    assert not is_totally_balanced(MAJORITY)
    assert is_totally_balanced(embed_additive((1, -3, F(1, 2))))
    rng = random.Random(12)
    for _ in range(15):
        v = random_exact(rng, rng.randint(2, 4))
        assert is_exact(v) and is_totally_balanced(v)


def test_supermodular_tests_agree():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(2, 4)
        v = random_supermodular(rng, n) if rng.random() < 0.5 else random_game(rng, n)
        assert (supermodular_violation(v) is None) == (supermodular_violation_definitional(v) is None)


def test_totally_monotone_matches_definition():
    rng = random.Random(14)
    for _ in range(40):
        n = rng.randint(2, 3)
        v = random_tm(rng, n) if rng.random() < 0.5 else random_game(rng, n, bound=5)
        assert is_totally_monotone(v) == (totally_monotone_violation_definitional(v) is None)
        if is_totally_monotone(v):
            assert is_supermodular(v)


def test_chain_holds_detects_violation():
    t, f = Flag(True), Flag(False)
    base = dict(
        weakly_superadditive=t, monotone=t, zero_normalized=t, zero_monotone=t, additive=t,
        totally_monotone=t, supermodular=t, exact=t, totally_balanced=t, balanced=t,
    )
    assert ClassReport(**base).chain_holds()
    assert not ClassReport(**{**base, "balanced": f}).chain_holds()
    assert ClassReport(**{**base, "totally_monotone": f, "exact": Flag(None)}).chain_holds()


def test_chain_on_random_games():
    rng = random.Random(15)
    for _ in range(60):
        n = rng.randint(1, 4)
        assert classify(random_game(rng, n, bound=5)).chain_holds()


def test_jordan_decomposition():
    u12, u13 = unanimity(3, coalition(1, 2)), unanimity(3, coalition(1, 3))
    assert jordan_decompose_tm(u12 - u13) == (u12, u13)
    v = random_tm(random.Random(16), 3, nonneg=True)
    assert jordan_decompose_tm(v) == (v, zero_game(3))
    assert jordan_decompose_tm(zero_game(3)) == (zero_game(3), zero_game(3))
    w = random_game(random.Random(17), 4)
    w1, w2 = jordan_decompose_tm(w)
    assert w1 - w2 == w and is_totally_monotone(w1) and is_totally_monotone(w2)


def test_almost_positive_coeffs():
    b = coalition(2, 3)
    lam = almost_positive_coeffs(unanimity(3, b))
    assert lam.support() == [b] and lam[b] == 1
    rng = random.Random(18)
    for _ in range(10):
        v = random_zero_monotone(rng, 3)
        for B in coalitions(3):
            if size(B) < 2:
                continue
            lam = almost_positive_coeffs(game_vB(v, B))
            expected = {B: v[B], 7: v[7] - v[B]} if B != 7 else {7: v[7]}
            assert {a: lam[a] for a in lam.support()} == {a: c for a, c in expected.items() if c}
    with pytest.raises(NotInClass) as exc:
        almost_positive_coeffs(make_game(3, {1: 1}))
    assert exc.value.condition == "zero_normalized"
    with pytest.raises(NotInClass) as exc:
        almost_positive_coeffs(-unanimity(3, 7))
    assert exc.value.condition == "totally_monotone"


def test_mobius_nonnegative_on_tm_generators():
    v = random_tm(random.Random(19), 4)
    m = mobius(v)
    assert all(m[a] >= 0 for a in coalitions(4) if size(a) >= 2)
