"""Factorizations ``sigma = alpha o tau`` of solution concepts through elementary games.

For every scheme there is a ``tau_*`` map sending a game to a family of
elementary games indexed by a set ``Z``, an ``alpha_*`` map aggregating
such a family into payoff allocations, and a ``factor_*`` function that
runs both and compares the result with the directly computed solution.
"""
from collections.abc import Mapping
from dataclasses import dataclass
from functools import reduce
from typing import Any, Optional

from .classes import (
    monotone_violation,
    supermodular0_cone,
    tm0_cone,
    weakly_superadditive_violation,
    zero_normalized_violation,
)
from .errors import (
    EmptyCarrier,
    EmptyList,
    FanMismatch,
    GrandCoalitionMismatch,
    MissingTableEntry,
    MixedPlayerCounts,
    NotABasis,
    NotWeaklySuperadditive,
    NotZeroMonotone,
    OutsideCone,
    OutsideSupport,
    PlayerCountOutOfRange,
)
from .game import (
    ZERO,
    Game,
    SetFunction,
    coalition_label,
    coalitions,
    delta,
    embed_additive,
    game_sup,
    game_to_vector,
    grand,
    members,
    mobius,
    payoff,
    restrict_additive,
    unanimity,
    vector_to_game,
    zero_normalize,
)
from .linalg import rank, solve
from .polyhedra import (
    VPolytope,
    conic_coordinates,
    extreme_rays,
    hull,
    intersect,
    minkowski_sum,
    point,
    polytope_equal,
    triangulate_cone,
    vertices,
    PointedCone,
)
from .solutions import (
    MAX_SELECTOPE,
    MAX_WEBER,
    check_region,
    core_h,
    imputations,
    lexicographic_center,
    marginal_vector,
    nucleolus,
    permutations,
    probabilistic_value,
    selectope,
    selector_value,
    selector_values,
    shapley,
    weber,
)

MAX_WS_CORE = 5


class ElementaryMap(Mapping):
    """A family ``omega: Z -> games`` evaluated on demand.

    ``fn`` evaluates one index.  ``items`` is a zero-argument callable
    streaming all ``(z, omega_z)`` pairs; when ``Z`` is not enumerable
    (``items is None``) only lookups work.  Entries fetched by lookup are
    cached in ``evaluated``; streamed entries are not kept.
    """

    def __init__(self, fn, items=None, size=None):
        self._fn = fn
        self._items = items
        self._size = size
        self.evaluated = {}

    def __getitem__(self, z):
        if z not in self.evaluated:
            self.evaluated[z] = self._fn(z)
        return self.evaluated[z]

    def __iter__(self):
        return (z for z, _ in self.items())

    def items(self):
        if self._items is None:
            raise TypeError("index set is not enumerable")
        return self._items()

    def values(self):
        return (g for _, g in self.items())

    def __len__(self):
        if self._size is None:
            raise TypeError("index set is infinite")
        return self._size


@dataclass
class FactorizationRecord:
    """``tau(v)``, ``alpha(tau(v))`` and the direct ``sigma(v)`` for one scheme."""

    scheme: str
    tau_output: Any
    alpha_output: Any
    direct_sigma: Any
    commutes: bool
    z_size: Optional[int] = None
    omega_proper: bool = False

    @property
    def nontrivial(self):
        """``|Z| > 1`` or the elementary games form a proper subclass of the domain."""
        return self.omega_proper or self.z_size is None or self.z_size > 1


def _same(a, b):
    if isinstance(a, VPolytope) or isinstance(b, VPolytope):
        return polytope_equal(_as_v(a), _as_v(b))
    return tuple(a) == tuple(b)


def _as_v(x):
    return x if isinstance(x, VPolytope) else point(x)


# -- probabilistic values -----------------------------------------------------

def marginal_games(v):
    """``D_i(A) = v(A + i) - v(A)`` for every player, evaluated literally (0 when ``i`` is in ``A``).

    ``D_i`` is a :class:`SetFunction`: its value at the empty coalition is ``v({i})``.
    """
    out = {}
    for i in range(1, v.n + 1):
        bit = 1 << (i - 1)
        out[i] = SetFunction(v.n, [v[a | bit] - v[a] for a in range(1 << v.n)])
    return out


def alpha_probabilistic(omega, p):
    return tuple(
        sum((w * omega[i][a] for a, w in p[i].items()), ZERO) for i in range(1, p.n + 1)
    )


def factor_probabilistic(v, p):
    tau = marginal_games(v)
    alpha = alpha_probabilistic(tau, p)
    direct = probabilistic_value(v, p)
    return FactorizationRecord("probabilistic", tau, alpha, direct, alpha == direct, z_size=v.n)


# -- Weber set ----------------------------------------------------------------

def tau_weber(v):
    return {pi: embed_additive(marginal_vector(v, pi)) for pi in permutations(v.n)}


def alpha_convex_additive(omega, n):
    """``conv{e^-1(omega_z)}`` over all ``z`` for a family of additive games."""
    return hull({restrict_additive(g, check=False) for g in omega.values()}, n)


def factor_weber(v):
    if v.n > MAX_WEBER:
        raise PlayerCountOutOfRange(f"Weber factorization limited to n <= {MAX_WEBER}")
    tau = tau_weber(v)
    alpha = alpha_convex_additive(tau, v.n)
    direct = weber(v)
    return FactorizationRecord(
        "weber", tau, alpha, direct, polytope_equal(alpha, direct), z_size=len(tau), omega_proper=v.n >= 2
    )


# -- selectope ----------------------------------------------------------------

def tau_selectope(v):
    """Lazy map from selectors (tuples of chosen players over canonical coalitions) to ``e(phi^a(v))``."""
    masks = coalitions(v.n)
    m = mobius(v)

    def fn(key):
        return embed_additive(selector_value(v, dict(zip(masks, key)), m))

    def items():
        for key, x in selector_values(v, m):
            yield key, embed_additive(x)

    count = 1
    for mask in masks:
        count *= len(members(mask))
    return ElementaryMap(fn, items, count)


def alpha_selectope(omega, n):
    return alpha_convex_additive(omega, n)


def factor_selectope(v):
    if v.n > MAX_SELECTOPE:
        raise PlayerCountOutOfRange(f"selectope factorization limited to n <= {MAX_SELECTOPE}")
    tau = tau_selectope(v)
    alpha = alpha_selectope(tau, v.n)
    direct = selectope(v)
    return FactorizationRecord(
        "selectope", tau, alpha, direct, polytope_equal(alpha, direct), z_size=len(tau), omega_proper=v.n >= 2
    )


# -- nucleolus ----------------------------------------------------------------

def tau_nucleolus(v):
    """Lazy map ``x -> theta^x_v``, the excess game of ``v`` at ``x``."""

    def fn(x):
        return Game(v.n, [v[a] - payoff(x, a) for a in range(1 << v.n)])

    return ElementaryMap(fn)


def alpha_nucleolus(omega, K):
    """Lexicographic minimum of the sorted excess vectors ``omega(x)`` over ``x`` in ``K``.

    Only the games at the vertices of ``K`` are evaluated; excess games in
    the image of ``tau`` are affine in ``x``, so the search runs over convex
    weights on those vertices.
    """
    verts = [tuple(p) for p in vertices(K).vertices]
    k = len(verts)
    games = [omega[x] for x in verts]
    n = K.dim
    excesses = [(ZERO, tuple(g[a] for g in games)) for a in range(1 << n)]
    ineqs = [(tuple(1 if j == i else 0 for j in range(k)), 0) for i in range(k)]
    eqs = [((1,) * k, 1)]
    lam, _ = lexicographic_center(k, ineqs, eqs, excesses)
    return tuple(sum((l * x[j] for l, x in zip(lam, verts)), ZERO) for j in range(n))


def factor_nucleolus(v, K=None):
    if K is None:
        K = imputations(v)
    check_region(K)
    tau = tau_nucleolus(v)
    alpha = alpha_nucleolus(tau, K)
    direct = nucleolus(v, K)
    return FactorizationRecord("nucleolus", tau, alpha, direct, alpha == direct, z_size=None)


# -- linear and conic decompositions ------------------------------------------

def _lookup(table, g):
    try:
        return _as_v(table[g])
    except KeyError:
        raise MissingTableEntry(f"no solution tabulated for generator {g!r}") from None


def _multiple(omega_i, base):
    """The scalar ``c`` with ``omega_i = c * base``."""
    k = next(a for a in range(1, 1 << base.n) if base[a] != 0)
    return omega_i[k] / base[k]


def unanimity_basis(n):
    return [unanimity(n, a) for a in coalitions(n)]


def linear_coordinates(v, basis):
    if not basis:
        raise NotABasis("empty basis")
    n = basis[0].n
    for g in basis:
        if g.n != n:
            raise MixedPlayerCounts("basis games have different player counts")
    if v.n != n:
        raise MixedPlayerCounts(f"game on {v.n} players, basis on {n}")
    vecs = [game_to_vector(g) for g in basis]
    if len(vecs) != (1 << n) - 1 or rank(vecs) != len(vecs):
        raise NotABasis(f"{len(vecs)} games of rank {rank(vecs)} do not form a basis of the game space")
    return solve(vecs, game_to_vector(v))


def alpha_scaled_sum(omega, bases, table, n):
    acc = point([0] * n)
    for key, base in bases.items():
        c = _multiple(omega[key], base)
        acc = minkowski_sum(acc, _lookup(table, base).scale(c))
    return acc


def factor_linear(v, basis, sigma_table, sigma=shapley):
    """Factor a linear solution through the coordinates of ``v`` in ``basis``.

    ``sigma_table`` maps each basis game to its (point) solution; ``sigma``
    is evaluated on ``v`` for the comparison.
    """
    coords = linear_coordinates(v, basis)
    tau = {i: c * g for i, (c, g) in enumerate(zip(coords, basis), start=1)}
    bases = {i: g for i, g in enumerate(basis, start=1)}
    for g in basis:
        _lookup(sigma_table, g)
    alpha = alpha_scaled_sum(tau, bases, sigma_table, v.n)
    direct = _as_v(sigma(v))
    return FactorizationRecord("linear", tau, alpha, direct, polytope_equal(alpha, direct), z_size=len(basis))


@dataclass(frozen=True)
class ConeSetup:
    """A cone of zero-normalized games with its rays (as games) and a simplicial fan."""

    n: int
    cone_h: Any
    fan: Any
    generators: tuple


def cone_setup(kind, n, order=None):
    """Rays and placing triangulation of ``"tm0"`` or ``"supermodular0"``.

    ``order`` permutes the generators before triangulating, which yields a
    different fan for non-simplicial cones.
    """
    cone_h = {"tm0": tm0_cone, "supermodular0": supermodular0_cone}[kind](n)
    rays = extreme_rays(cone_h)
    gens = rays.generators
    if order is not None:
        gens = tuple(gens[i] for i in order)
    cone = PointedCone(rays.dim, gens)
    fan = triangulate_cone(cone)
    games = tuple(vector_to_game(n, g) for g in gens)
    return ConeSetup(n, cone_h, fan, games)


def solution_table(generators, sigma):
    return {g: sigma(g) for g in generators}


def core_vertices(v):
    return vertices(core_h(v))


def additive_point(w):
    return point(restrict_additive(w))


def tau_cone(v, cone_h, fan):
    n = v.n
    if fan.cone.dim != cone_h.dim or cone_h.dim != (1 << n) - 1:
        raise FanMismatch("fan, cone and game space dimensions disagree")
    for g in fan.cone.generators:
        if not cone_h.contains(g):
            raise FanMismatch(f"fan generator {g} is not in the cone")
    hat, additive = zero_normalize(v)
    vec = game_to_vector(hat)
    if not cone_h.contains(vec):
        raise OutsideCone("zero-normalized part of the game is outside the cone")
    try:
        coords = conic_coordinates(vec, fan).as_dict()
    except OutsideSupport:
        raise FanMismatch("fan does not cover the cone") from None
    gens = [vector_to_game(n, g) for g in fan.cone.generators]
    tau = {i + 1: coords.get(i, ZERO) * g for i, g in enumerate(gens)}
    tau[len(gens) + 1] = additive
    return tau, gens


def alpha_cone(omega, gens, sigma_table, sigma_additive, n):
    k = len(gens)
    acc = _as_v(sigma_additive(omega[k + 1]))
    for i, g in enumerate(gens, start=1):
        c = _multiple(omega[i], g)
        if c:
            acc = minkowski_sum(acc, _lookup(sigma_table, g).scale(c))
    return acc


def factor_cone(v, cone_h, fan, sigma_table, sigma_additive, sigma):
    """Factor an additive, positively homogeneous solution through the rays of a cone.

    ``sigma_table`` gives ``sigma`` on the fan generators, ``sigma_additive``
    gives it on additive games, ``sigma`` is the direct solution on ``v``.
    Set-valued solutions are combined by scaled Minkowski sums.
    """
    tau, gens = tau_cone(v, cone_h, fan)
    for g in gens:
        _lookup(sigma_table, g)
    alpha = alpha_cone(tau, gens, sigma_table, sigma_additive, v.n)
    direct = _as_v(sigma(v))
    return FactorizationRecord(
        "cone", tau, alpha, direct, polytope_equal(alpha, direct), z_size=len(tau), omega_proper=True
    )


# -- max-decomposition of zero-monotone games ---------------------------------

def game_vB(v, B):
    """``v^B = v(B) u_B + (v(N) - v(B)) u_N``."""
    if B == 0:
        raise EmptyCarrier("v^B needs a nonempty coalition B")
    full = grand(v.n)
    return v[B] * unanimity(v.n, B) + (v[full] - v[B]) * unanimity(v.n, full)


def _require_zero_monotone(v):
    i = zero_normalized_violation(v)
    if i is not None:
        raise NotZeroMonotone(f"v({{{i}}}) != 0", condition="zero_normalized", witness=i)
    w = monotone_violation(v)
    if w is not None:
        a, b = w
        raise NotZeroMonotone(
            f"v{coalition_label(a)} > v{coalition_label(b)}", condition="monotone", witness=w
        )


def max_decompose(v):
    """``{B: v^B}`` for all nonempty ``B``; their pointwise supremum is ``v``."""
    _require_zero_monotone(v)
    return {B: game_vB(v, B) for B in coalitions(v.n)}


def verify_core_intersection(games):
    """Check that the core of the supremum equals the intersection of the cores."""
    games = list(games)
    if not games:
        raise EmptyList("need at least one game")
    n = games[0].n
    if any(g.n != n for g in games):
        raise MixedPlayerCounts("games have different player counts")
    full = grand(n)
    if len({g[full] for g in games}) != 1:
        raise GrandCoalitionMismatch("games disagree on the worth of the grand coalition")
    left = core_h(game_sup(games))
    right = reduce(intersect, (core_h(g) for g in games))
    return polytope_equal(left, right)


def tau_ws_core(v):
    """``{0: v - v_hat} + {B: (v_hat)^B}`` keyed by coalition mask (0 stands for the empty set)."""
    hat, additive = zero_normalize(v)
    out = {0: additive}
    out.update({B: game_vB(hat, B) for B in coalitions(v.n)})
    return out


def alpha_ws_core(omega, n):
    translation = vertices(core_h(omega[0]))
    inter = reduce(intersect, (core_h(omega[B]) for B in coalitions(n)))
    return minkowski_sum(translation, vertices(inter))


def core_ws(v):
    """Core of a weakly superadditive game through the max-decomposition of its zero-normalization."""
    if v.n > MAX_WS_CORE:
        raise PlayerCountOutOfRange(f"ws-core factorization limited to n <= {MAX_WS_CORE}")
    w = weakly_superadditive_violation(v)
    if w is not None:
        a, i = w
        raise NotWeaklySuperadditive(
            f"v({coalition_label(a)} + {i}) < v{coalition_label(a)} + v({{{i}}})",
            condition="weakly_superadditive",
            witness=w,
        )
    tau = tau_ws_core(v)
    alpha = alpha_ws_core(tau, v.n)
    direct = vertices(core_h(v))
    return FactorizationRecord(
        "ws_core", tau, alpha, direct, polytope_equal(alpha, direct), z_size=len(tau), omega_proper=True
    )


def nestohedron_core(v, B):
    """``conv{v(B) delta^i + (v(N) - v(B)) delta^j : i in B, j in N}``."""
    if B == 0:
        raise EmptyCarrier("B must be nonempty")
    _require_zero_monotone(v)
    n = v.n
    vb, rest = v[B], v[grand(n)] - v[B]
    pts = []
    for i in members(B):
        for j in range(1, n + 1):
            di, dj = delta(n, i), delta(n, j)
            pts.append(tuple(vb * a + rest * b for a, b in zip(di, dj)))
    return hull(pts, n)
