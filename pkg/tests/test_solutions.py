from fractions import Fraction as F
import random

import pytest

from coopdecomp.errors import EmptyK, InvalidWeights, UnboundedK
from coopdecomp.game import (
    coalition,
    coalitions,
    delta,
    embed_additive,
    members,
    mobius,
    payoff,
    size,
    unanimity,
    zero_game,
    Game,
)
from coopdecomp.generators import random_game, random_supermodular, random_tm, random_weights
from coopdecomp.polyhedra import HPolytope, point, polytope_equal, simplex_v, vertices
from coopdecomp.solutions import (
    ProbabilisticWeights,
    core_h,
    excess_profile,
    imputations,
    marginal_vector,
    nucleolus,
    permutations,
    probabilistic_value,
    selector_value,
    selector_values,
    selectors,
    selectope,
    shapley,
    shapley_weights,
    weber,
)

U12 = coalition(1, 2)
X3 = (F(2), F(-1, 3), F(5, 7))


def square_game(n):
    return Game.from_function(n, lambda m: size(m) ** 2)


def test_core_examples():
    for a in coalitions(3):
        assert vertices(core_h(unanimity(3, a))) == simplex_v(3, members(a))
    assert vertices(core_h(embed_additive(X3))) == point(X3)
    majority = Game.from_function(3, lambda m: 1 if size(m) >= 2 else 0)
    assert vertices(core_h(majority)).is_empty()


def test_marginal_vector_examples():
    m = embed_additive(X3)
    for pi in permutations(3):
        assert marginal_vector(m, pi) == X3
    assert marginal_vector(unanimity(3, 7), (1, 2, 3)) == (0, 0, 1)
    assert marginal_vector(unanimity(3, U12), (2, 1, 3)) == (1, 0, 0)
    rng = random.Random(1)
    v = random_game(rng, 4)
    for pi in permutations(4):
        assert sum(marginal_vector(v, pi)) == v[15]


def test_weber_examples():
    assert weber(embed_additive(X3)) == point(X3)
    assert weber(unanimity(3, 7)) == simplex_v(3, (1, 2, 3))
    rng = random.Random(2)
    for n in (2, 3, 4):
        v = random_supermodular(rng, n)
        assert polytope_equal(weber(v), vertices(core_h(v)))


def test_selector_value_examples():
    u = unanimity(3, coalition(2, 3))
    for a in list(selectors(3))[:20]:
        assert selector_value(u, a) == delta(3, a[coalition(2, 3)])
    forced = {m: members(m)[0] for m in coalitions(3)}
    assert selector_value(embed_additive(X3), forced) == X3
    v = square_game(3)
    m = mobius(v)
    expected = tuple(sum(m[a] for a in coalitions(3) if members(a)[0] == i) for i in (1, 2, 3))
    assert selector_value(v, forced) == expected


def test_selector_values_matches_selectors():
    v = random_game(random.Random(3), 3)
    fast = sorted(x for _, x in selector_values(v))
    slow = sorted(selector_value(v, a) for a in selectors(3))
    assert fast == slow and len(fast) == 1 * 1 * 1 * 2 * 2 * 2 * 3


def test_selectope_examples():
    for b in coalitions(3):
        assert selectope(unanimity(3, b)) == simplex_v(3, members(b))
    assert selectope(embed_additive(X3)) == point(X3)
    rng = random.Random(4)
    for _ in range(5):
        v = random_tm(rng, 3)
        s = selectope(v)
        for x in vertices(core_h(v)).vertices:
            assert s.contains(x)


def test_probabilistic_value_examples():
    rng = random.Random(5)
    v = random_game(rng, 3)
    dictator = ProbabilisticWeights(3, [{0: 1}] * 3)
    assert probabilistic_value(v, dictator) == (v[1], v[2], v[4])
    assert probabilistic_value(unanimity(3, U12), shapley_weights(3)) == (F(1, 2), F(1, 2), 0)
    for _ in range(5):
        assert probabilistic_value(embed_additive(X3), random_weights(rng, 3)) == X3


def test_weights_validation():
    with pytest.raises(InvalidWeights):
        ProbabilisticWeights(2, [{0: 1}])
    with pytest.raises(InvalidWeights):
        ProbabilisticWeights(2, [{1: 1}, {0: 1}])
    with pytest.raises(InvalidWeights):
        ProbabilisticWeights(2, [{0: F(1, 2)}, {0: 1}])
    with pytest.raises(InvalidWeights):
        ProbabilisticWeights(2, [{0: 2, 2: -1}, {0: 1}])


def test_shapley_examples():
    for n in (2, 3, 4):
        assert shapley(unanimity(n, (1 << n) - 1)) == (F(1, n),) * n
    assert shapley(unanimity(3, U12)) == (F(1, 2), F(1, 2), 0)
    v = random_game(random.Random(6), 3)
    avg = tuple(sum(marginal_vector(v, pi)[i] for pi in permutations(3)) / 6 for i in range(3))
    assert shapley(v) == avg


def test_excess_profile_examples():
    v = random_supermodular(random.Random(7), 3)
    x = vertices(core_h(v)).vertices[0]
    prof = excess_profile(v, x).sorted
    assert len(prof) == 8 and prof[0] == 0 and all(e <= 0 for e in prof)
    assert excess_profile(zero_game(3), (0, 0, 0)).sorted == (0,) * 8
    prof = excess_profile(unanimity(3, U12), (F(1, 2), F(1, 2), 0)).sorted
    # zeros for the empty set, N, {1,2} and {3}
    assert prof == (0,) * 4 + (F(-1, 2),) * 4


def test_nucleolus_examples():
    v = random_game(random.Random(8), 3)
    x = (F(1), F(2), F(3))
    K = HPolytope(3, [], [((1, 0, 0), 1), ((0, 1, 0), 2), ((0, 0, 1), 3)])
    assert nucleolus(v, K) == x
    assert nucleolus(unanimity(3, 7)) == (F(1, 3),) * 3
    assert nucleolus(unanimity(3, U12)) == (F(1, 2), F(1, 2), 0)


def _random_point(rng, v):
    """Random rational imputation of ``v``."""
    w = [F(rng.randint(0, 50)) for _ in range(v.n)]
    total = sum(w) or F(1)
    slack = v[(1 << v.n) - 1] - sum(v[1 << i] for i in range(v.n))
    return tuple(v[1 << i] + slack * wi / total for i, wi in enumerate(w))


def test_nucleolus_is_lexicographically_minimal():
    rng = random.Random(9)
    v = unanimity(3, U12)
    nu = nucleolus(v)
    best = excess_profile(v, nu)
    for _ in range(10000):
        y = _random_point(rng, v)
        assert imputations(v).contains(y)
        assert best <= excess_profile(v, y)


def test_nucleolus_region_errors():
    v = unanimity(2, 3)
    with pytest.raises(EmptyK):
        nucleolus(v, HPolytope(2, [((1, 0), 1), ((-1, 0), 0)]))
    with pytest.raises(UnboundedK):
        nucleolus(v, HPolytope(2, [((1, 0), 0)]))


def test_payoff_of_allocation():
    assert payoff(X3, 5) == X3[0] + X3[2]
