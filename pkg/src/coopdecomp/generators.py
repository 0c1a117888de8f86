"""Seeded random games for tests and experiments.

Every generator takes a :class:`random.Random` instance so that corpora are
reproducible.  Entries are rationals with numerators and denominators
bounded by ``bound``.
"""
from fractions import Fraction
from functools import lru_cache

from .classes import supermodular0_cone, tm0_cone
from .errors import PlayerCountOutOfRange
from .game import (
    MAX_PLAYERS,
    ZERO,
    Game,
    coalitions,
    embed_additive,
    grand,
    linear_combine,
    make_game,
    members,
    payoff,
    size,
    unanimity,
    vector_to_game,
)
from .polyhedra import HPolytope, extreme_rays
from .solutions import ProbabilisticWeights


def rational(rng, bound=100, nonneg=False):
    num = rng.randint(0 if nonneg else -bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_game(rng, n, bound=100):
    return make_game(n, [(a, rational(rng, bound)) for a in coalitions(n)])


def random_allocation(rng, n, bound=100, nonneg=False):
    return tuple(rational(rng, bound, nonneg) for _ in range(n))


def random_additive(rng, n, bound=100):
    return embed_additive(random_allocation(rng, n, bound))


def _sparse_weight(rng, bound, density):
    return rational(rng, bound, nonneg=True) if rng.random() < density else ZERO


def random_tm0(rng, n, bound=20, density=0.6):
    """Zero-normalized totally monotone: nonnegative dividends on coalitions of size >= 2."""
    terms = [(_sparse_weight(rng, bound, density), unanimity(n, a)) for a in coalitions(n) if size(a) >= 2]
    return linear_combine(terms) if terms else Game(n, [ZERO] * (1 << n))


def random_tm(rng, n, bound=20, density=0.6, nonneg=False):
    """Totally monotone game; with ``nonneg`` the singleton dividends are nonnegative too."""
    x = random_allocation(rng, n, bound, nonneg)
    return random_tm0(rng, n, bound, density) + embed_additive(x)


@lru_cache(maxsize=None)
def zero_normalized_rays(kind, n):
    """Extreme rays of ``"tm0"`` or ``"supermodular0"`` as games.

    The singleton coordinates are fixed at 0 by the cone, so the double
    description runs on the coordinates of size >= 2 only.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_PLAYERS:
        raise PlayerCountOutOfRange(f"player count must be in [1, {MAX_PLAYERS}], got {n!r}")
    cone = {"tm0": tm0_cone, "supermodular0": supermodular0_cone}[kind](n)
    masks = coalitions(n)
    keep = [k for k, a in enumerate(masks) if size(a) >= 2]
    if not keep:
        return ()
    small = HPolytope(len(keep), [(tuple(r[k] for k in keep), b) for r, b in cone.inequalities])
    out = []
    for g in extreme_rays(small).generators:
        vec = [0] * len(masks)
        for k, x in zip(keep, g):
            vec[k] = x
        out.append(vector_to_game(n, vec))
    return tuple(out)


def random_cone_member(rng, generators, n, bound=20, density=0.6):
    terms = [(_sparse_weight(rng, bound, density), g) for g in generators]
    return linear_combine(terms) if terms else Game(n, [ZERO] * (1 << n))


def random_supermodular0(rng, n, bound=20, density=0.6):
    """Conic combination of the extreme rays of the zero-normalized supermodular cone."""
    return random_cone_member(rng, zero_normalized_rays("supermodular0", n), n, bound, density)


def random_supermodular(rng, n, bound=20, density=0.6):
    return random_supermodular0(rng, n, bound, density) + random_additive(rng, n, bound)


def random_zero_monotone(rng, n, bound=20, jump=0.5):
    """Zero-normalized monotone game built upward: each worth is the largest worth of its
    maximal proper subcoalitions plus, with probability ``jump``, a nonnegative increment."""
    table = [ZERO] * (1 << n)
    for a in coalitions(n):
        if size(a) == 1:
            continue
        base = max(table[a & ~(1 << (i - 1))] for i in members(a))
        table[a] = base + (rational(rng, bound, nonneg=True) if rng.random() < jump else ZERO)
    return Game(n, table)


def random_weakly_superadditive(rng, n, bound=20, jump=0.5):
    return random_zero_monotone(rng, n, bound, jump) + random_additive(rng, n, bound)


def random_balanced(rng, n, bound=20):
    """``v(A) = x(A) - s_A`` with ``s_A >= 0`` and ``v(N) = x(N)``, so ``x`` is a core point."""
    x = random_allocation(rng, n, bound)
    full = grand(n)
    return make_game(
        n,
        [(a, payoff(x, a) - (ZERO if a == full else rational(rng, bound, nonneg=True))) for a in coalitions(n)],
    )


def random_exact(rng, n, bound=20, k=3):
    """Lower envelope of ``k`` additive games with a common total; every such game is exact."""
    total = rational(rng, bound)
    xs = []
    for _ in range(k):
        x = list(random_allocation(rng, n, bound))
        x[-1] += total - sum(x, ZERO)
        xs.append(tuple(x))
    return make_game(n, [(a, min(payoff(x, a) for x in xs)) for a in coalitions(n)])


def random_symmetric(rng, n, bound=20):
    """``v(A) = f(|A|)`` for random ``f``."""
    f = [ZERO] + [rational(rng, bound) for _ in range(n)]
    return make_game(n, [(a, f[size(a)]) for a in coalitions(n)])


def random_weights(rng, n, bound=20):
    """Random probabilistic weights: each ``p_i`` is a normalized random measure on ``N - {i}``."""
    tables = []
    for i in range(n):
        bit = 1 << i
        raw = {a: rational(rng, bound, nonneg=True) for a in range(1 << n) if not a & bit}
        s = sum(raw.values(), ZERO)
        if s == 0:
            raw = {0: Fraction(1)}
            s = Fraction(1)
        tables.append({a: w / s for a, w in raw.items()})
    return ProbabilisticWeights(n, tables)


GENERATORS = {
    "general": random_game,
    "additive": random_additive,
    "tm": random_tm,
    "tm0": random_tm0,
    "supermodular": random_supermodular,
    "zero_monotone": random_zero_monotone,
    "weakly_superadditive": random_weakly_superadditive,
    "balanced": random_balanced,
    "exact": random_exact,
    "symmetric": random_symmetric,
}
