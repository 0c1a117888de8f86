"""Solution concepts computed directly from their definitions."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _permutations
from math import factorial

from .errors import EmptyK, InvalidWeights, PlayerCountOutOfRange, UnboundedK
from .game import ZERO, coalitions, grand, members, mobius, payoff, size
from .lp import solve_system
from .polyhedra import HPolytope, VPolytope, hull, minkowski_sum, point, simplex_v

MAX_WEBER = 8
MAX_SELECTOPE = 4
MAX_NUCLEOLUS = 6


# -- weights, permutations, selectors -----------------------------------------

class ProbabilisticWeights:
    """Per-player probability measures ``p_i`` on the subsets of ``N - {i}``.

    ``tables[i - 1]`` maps coalition masks not containing ``i`` to weights;
    missing masks weigh 0.
    """

    def __init__(self, n, tables):
        if len(tables) != n:
            raise InvalidWeights(f"need one table per player, got {len(tables)} for n={n}")
        clean = []
        for i, table in enumerate(tables, start=1):
            bit = 1 << (i - 1)
            t = {}
            for mask, w in dict(table).items():
                w = Fraction(w)
                if mask & bit or not 0 <= mask < 1 << n:
                    raise InvalidWeights(f"p_{i} has weight on coalition mask {mask} not inside N - {{{i}}}")
                if w < 0:
                    raise InvalidWeights(f"p_{i} has negative weight {w}")
                if w:
                    t[mask] = w
            if sum(t.values(), ZERO) != 1:
                raise InvalidWeights(f"p_{i} sums to {sum(t.values(), ZERO)}, not 1")
            clean.append(t)
        self.n = n
        self.tables = tuple(clean)

    def __getitem__(self, i):
        return self.tables[i - 1]


def shapley_weights(n):
    """``p_i(A) = |A|! (n - |A| - 1)! / n!``."""
    nf = factorial(n)
    by_size = [Fraction(factorial(s) * factorial(n - s - 1), nf) for s in range(n)]
    tables = []
    for i in range(n):
        bit = 1 << i
        tables.append({a: by_size[size(a)] for a in range(1 << n) if not a & bit})
    return ProbabilisticWeights(n, tables)


def permutations(n):
    """All orderings as image tuples ``(pi(1), ..., pi(n))``, lexicographic."""
    return list(_permutations(range(1, n + 1)))


def selectors(n):
    """Iterate over all selectors as dicts ``{mask: chosen player}``."""
    masks = coalitions(n)
    choices = [members(a) for a in masks]

    def rec(k, acc):
        if k == len(masks):
            yield dict(acc)
            return
        for i in choices[k]:
            acc[masks[k]] = i
            yield from rec(k + 1, acc)
        del acc[masks[k]]

    yield from rec(0, {})


# -- core and friends ---------------------------------------------------------

def core_h(v):
    """Core as an H-polytope: ``x(N) = v(N)``, ``x(A) >= v(A)`` for every proper nonempty ``A``."""
    full = grand(v.n)
    rows = [
        (tuple(1 if a >> j & 1 else 0 for j in range(v.n)), v[a])
        for a in coalitions(v.n)
        if a != full
    ]
    return HPolytope(v.n, rows, [((1,) * v.n, v[full])])


def imputations(v):
    """``{x : x(N) = v(N), x_i >= v({i})}``."""
    rows = [(tuple(1 if j == i else 0 for j in range(v.n)), v[1 << i]) for i in range(v.n)]
    return HPolytope(v.n, rows, [((1,) * v.n, v[grand(v.n)])])


def marginal_vector(v, pi):
    """Payoffs when players enter in the order ``pi`` and each receives its marginal contribution."""
    x = [ZERO] * v.n
    before = 0
    for i in pi:
        after = before | 1 << (i - 1)
        x[i - 1] = v[after] - v[before]
        before = after
    return tuple(x)


def weber(v):
    """Convex hull of all marginal vectors."""
    if v.n > MAX_WEBER:
        raise PlayerCountOutOfRange(f"Weber set enumerates n! orders; n <= {MAX_WEBER}")
    return hull({marginal_vector(v, pi) for pi in permutations(v.n)}, v.n)


def selector_value(v, a, dividends=None):
    """Each player collects the dividends of the coalitions the selector ``a`` assigns to it."""
    m = mobius(v) if dividends is None else dividends
    x = [ZERO] * v.n
    for mask in coalitions(v.n):
        if m[mask]:
            x[a[mask] - 1] += m[mask]
    return tuple(x)


def selector_values(v, dividends=None):
    """Iterate over ``(selector, phi^a(v))`` for all selectors, depth first.

    Selectors are tuples of chosen players aligned with :func:`coalitions`;
    payoffs are accumulated along the search so each leaf costs O(1) additions.
    """
    m = mobius(v) if dividends is None else dividends
    masks = coalitions(v.n)
    choices = [members(a) for a in masks]
    last = len(masks)
    chosen = [0] * last
    x = [ZERO] * v.n

    def rec(k):
        if k == last:
            yield tuple(chosen), tuple(x)
            return
        d = m[masks[k]]
        for i in choices[k]:
            chosen[k] = i
            x[i - 1] += d
            yield from rec(k + 1)
            x[i - 1] -= d

    yield from rec(0)


def selectope(v):
    """Convex hull of all selector values.

    Computed as the Minkowski sum of the scaled simplices ``m(A) * Delta_A``,
    which has the same convex hull as the set of selector values.
    """
    if v.n > MAX_SELECTOPE:
        raise PlayerCountOutOfRange(f"selectope limited to n <= {MAX_SELECTOPE}")
    m = mobius(v)
    acc = point([0] * v.n)
    for a in coalitions(v.n):
        if m[a]:
            acc = minkowski_sum(acc, simplex_v(v.n, members(a), m[a]))
    return acc


def probabilistic_value(v, p):
    """``psi_i(v) = sum_A p_i(A) (v(A + i) - v(A))``."""
    if not isinstance(p, ProbabilisticWeights):
        raise InvalidWeights("weights must be a ProbabilisticWeights instance")
    if p.n != v.n:
        raise InvalidWeights(f"weights for n={p.n} applied to a game with n={v.n}")
    out = []
    for i in range(1, v.n + 1):
        bit = 1 << (i - 1)
        out.append(sum((w * (v[a | bit] - v[a]) for a, w in p[i].items()), ZERO))
    return tuple(out)


def shapley(v):
    return probabilistic_value(v, shapley_weights(v.n))


# -- nucleolus ----------------------------------------------------------------

@dataclass(frozen=True)
class ExcessProfile:
    """Excesses of all ``2**n`` coalitions, sorted non-increasingly; compares lexicographically."""

    sorted: tuple

    def __lt__(self, other):
        return self.sorted < other.sorted

    def __le__(self, other):
        return self.sorted <= other.sorted


def excess_profile(v, x):
    return ExcessProfile(tuple(sorted((v[a] - payoff(x, a) for a in range(1 << v.n)), reverse=True)))


def lexicographic_center(dim, region_ineqs, region_eqs, excesses):
    """Lexicographically minimize the sorted vector of affine excesses over a bounded region.

    ``excesses`` is a list of ``(constant, gradient)`` pairs meaning
    ``e_k(z) = constant + gradient . z``.  Each round minimizes the largest
    excess among unfixed indices, then fixes every index whose excess is
    constant over the optimal face (min LP == max LP).  Returns the final
    point and the fixed level of every index.
    """
    region_ineqs, region_eqs = list(region_ineqs), list(region_eqs)
    fixed = {}
    z = None
    # indices with zero gradient are constant
    for k, (c, g) in enumerate(excesses):
        if not any(g):
            fixed[k] = Fraction(c)
    while len(fixed) < len(excesses):
        fixed_eqs = [(tuple(g), fixed[k] - c) for k, (c, g) in enumerate(excesses) if k in fixed]
        unfixed = [k for k in range(len(excesses)) if k not in fixed]
        # variables (z, t):  t - g.z >= c
        ineqs = [(tuple(a) + (0,), b) for a, b in region_ineqs]
        ineqs += [(tuple(-x for x in excesses[k][1]) + (1,), excesses[k][0]) for k in unfixed]
        eqs = [(tuple(a) + (0,), b) for a, b in region_eqs + fixed_eqs]
        res = solve_system([0] * dim + [1], ineqs, eqs, "min", dim + 1)
        if not res.optimal:
            raise RuntimeError(f"level LP ended {res.status}")
        level = res.value
        z = res.point[:dim]
        face_ineqs = region_ineqs + [(tuple(-x for x in excesses[k][1]), excesses[k][0] - level) for k in unfixed]
        face_eqs = region_eqs + fixed_eqs
        newly = {}
        for k in unfixed:
            c, g = excesses[k]
            at_z = c + sum((gi * zi for gi, zi in zip(g, z)), ZERO)
            lo = solve_system(g, face_ineqs, face_eqs, "min", dim).value + c
            if lo != at_z:
                continue
            hi = solve_system(g, face_ineqs, face_eqs, "max", dim).value + c
            if hi == lo:
                newly[k] = lo
        if not newly:
            raise RuntimeError("no excess became constant; region is probably unbounded")
        fixed.update(newly)
    if z is None:
        res = solve_system([0] * dim, region_ineqs, region_eqs, "min", dim)
        z = res.point
    return z, fixed


def check_region(K):
    if not solve_system([0] * K.dim, K.inequalities, K.equalities).feasible:
        raise EmptyK("the set K is empty")
    if not K.is_bounded():
        raise UnboundedK("the set K is unbounded")


def nucleolus(v, K=None):
    """The point of ``K`` whose excess profile is lexicographically minimal.

    ``K`` defaults to the imputation set.
    """
    if v.n > MAX_NUCLEOLUS:
        raise PlayerCountOutOfRange(f"nucleolus limited to n <= {MAX_NUCLEOLUS}")
    if K is None:
        K = imputations(v)
    if K.dim != v.n:
        raise ValueError(f"K has dimension {K.dim}, game has {v.n} players")
    check_region(K)
    excesses = [(v[a], tuple(-1 if a >> j & 1 else 0 for j in range(v.n))) for a in range(1 << v.n)]
    x, _ = lexicographic_center(v.n, K.inequalities, K.equalities, excesses)
    return tuple(x)


def as_polytope(sigma_value, n):
    """Wrap a point-valued solution as a one-vertex :class:`VPolytope`."""
    if isinstance(sigma_value, VPolytope):
        return sigma_value
    return point(sigma_value)
