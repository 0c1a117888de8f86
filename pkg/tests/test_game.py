from fractions import Fraction as F
import random

import pytest
from hypothesis import given, settings, strategies as st

from coopdecomp.errors import (
    DuplicateCoalition,
    EmptyCarrier,
    EmptyList,
    MixedPlayerCounts,
    NonzeroEmptySet,
    NotAdditive,
    PlayerCountOutOfRange,
)
from coopdecomp.game import (
    Game,
    MobiusCoeffs,
    SetFunction,
    coalition,
    coalitions,
    embed_additive,
    game_inf,
    game_sup,
    game_to_vector,
    linear_combine,
    make_game,
    members,
    mobius,
    mobius_inverse,
    restrict_additive,
    size,
    subgame,
    unanimity,
    vector_to_game,
    zero_game,
    zero_normalize,
)
from coopdecomp.generators import random_game

U12 = coalition(1, 2)
U13 = coalition(1, 3)


def square_game(n):
    return Game.from_function(n, lambda m: size(m) ** 2)


def test_coalition_helpers():
    assert coalition(1, 3) == 5
    assert members(5) == (1, 3)
    assert coalitions(2) == (1, 2, 3)
    assert coalitions(3) == (1, 2, 4, 3, 5, 6, 7)
    assert coalitions(2, empty=True)[0] == 0


def test_make_game_unanimity_pair():
    v = make_game(2, [(U12, 1)])
    assert v.values == (0, 0, 0, 1)
    assert v == unanimity(2, U12)


def test_make_game_defaults_and_errors():
    assert make_game(3, []) == zero_game(3)
    assert make_game(2, {1: F(1, 2)})[1] == F(1, 2)
    with pytest.raises(NonzeroEmptySet):
        make_game(2, [(0, 1)])
    with pytest.raises(DuplicateCoalition):
        make_game(2, [(1, 1), (1, 2)])
    with pytest.raises(PlayerCountOutOfRange):
        make_game(0, [])
    with pytest.raises(TypeError):
        make_game(2, [(1, 0.5)])


def test_game_is_immutable():
    v = unanimity(2, 3)
    with pytest.raises(AttributeError):
        v.n = 3


def test_unanimity():
    u = unanimity(3, U12)
    assert [m for m in coalitions(3) if u[m]] == [U12, 7]
    un = unanimity(3, 7)
    assert [m for m in coalitions(3) if un[m]] == [7]
    with pytest.raises(EmptyCarrier):
        unanimity(2, 0)


def test_linear_combine():
    v = linear_combine([(1, unanimity(3, U12)), (1, unanimity(3, U13))])
    assert v == make_game(3, {U12: 1, U13: 1, 7: 2})
    w = square_game(3)
    assert linear_combine([(0, w)]) == zero_game(3)
    assert linear_combine([(-1, w), (1, w)]) == zero_game(3)
    with pytest.raises(EmptyList):
        linear_combine([])
    with pytest.raises(MixedPlayerCounts):
        linear_combine([(1, zero_game(2)), (1, zero_game(3))])


def test_sup_inf():
    v = square_game(3)
    assert game_sup([v, v]) == v
    assert game_sup([unanimity(3, U12), unanimity(3, U13)]) == make_game(3, {U12: 1, U13: 1, 7: 1})
    assert game_inf([unanimity(3, 7), zero_game(3)]) == zero_game(3)
    with pytest.raises(EmptyList):
        game_sup([])


def test_mobius_examples():
    for a in coalitions(3):
        m = mobius(unanimity(3, a))
        assert m.support() == [a] and m[a] == 1
    x = (F(1), F(-2), F(3, 4))
    m = mobius(embed_additive(x))
    assert [m[1], m[2], m[4]] == list(x)
    assert all(m[a] == 0 for a in coalitions(3) if size(a) >= 2)
    m = mobius(square_game(3))
    for a in coalitions(3):
        assert m[a] == {1: 1, 2: 2, 3: 0}[size(a)]


def test_mobius_inverse_examples():
    coeffs = [0] * 8
    coeffs[U12] = 1
    assert mobius_inverse(MobiusCoeffs(3, coeffs)) == unanimity(3, U12)
    assert mobius_inverse(MobiusCoeffs(3, [0] * 8)) == zero_game(3)
    sq = [0] + [{1: 1, 2: 2, 3: 0}[size(a)] for a in range(1, 8)]
    assert mobius_inverse(MobiusCoeffs(3, sq)) == square_game(3)


def test_mobius_matches_alternating_sum():
    rng = random.Random(7)
    for n in (2, 3, 4):
        v = random_game(rng, n)
        m = mobius(v)
        for a in coalitions(n):
            direct = sum(
                (-1) ** (size(a) - size(b)) * v[b] for b in range(1 << n) if b & a == b
            )
            assert m[a] == direct


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_mobius_round_trip(n, seed):
    v = random_game(random.Random(seed), n)
    assert mobius_inverse(mobius(v)) == v


def test_zero_normalize_examples():
    v = make_game(2, {1: 1, 2: 2, 3: 5})
    hat, add = zero_normalize(v)
    assert hat == make_game(2, {3: 2})
    assert restrict_additive(add) == (1, 2)
    u = unanimity(3, U12)
    assert zero_normalize(u) == (u, zero_game(3))
    m = embed_additive((3, F(-1, 2), 0))
    assert zero_normalize(m) == (zero_game(3), m)


def test_embed_and_restrict_additive():
    assert embed_additive((0, 0, 0)) == zero_game(3)
    assert embed_additive((1, 2)) == make_game(2, {1: 1, 2: 2, 3: 3})
    assert restrict_additive(embed_additive((1, 2))) == (1, 2)
    assert restrict_additive(zero_game(3)) == (0, 0, 0)
    with pytest.raises(NotAdditive):
        restrict_additive(unanimity(2, U12))


def test_subgame_examples():
    v = square_game(3)
    assert subgame(v, 7) == v
    assert subgame(unanimity(3, U12), U12) == unanimity(2, 3)
    assert subgame(unanimity(3, 7), U12) == zero_game(2)
    assert subgame(v, coalition(1, 3)) == square_game(2)
    with pytest.raises(EmptyCarrier):
        subgame(v, 0)


def test_vector_round_trip():
    rng = random.Random(3)
    v = random_game(rng, 4)
    assert vector_to_game(4, game_to_vector(v)) == v


def test_arithmetic():
    v = square_game(3)
    assert v + (-v) == zero_game(3)
    assert 2 * v == v + v
    assert v - v == zero_game(3)
    with pytest.raises(MixedPlayerCounts):
        v + zero_game(2)


def test_set_function():
    f = SetFunction(2, [1, 0, 2, 3])
    assert f[0] == 1
    assert f.items()[0] == (0, 1)
    assert SetFunction(2, [0, 0, 0, 1]) == unanimity(2, 3)
    with pytest.raises(AttributeError):
        f.n = 1
