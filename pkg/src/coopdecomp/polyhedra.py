"""Exact polyhedral geometry over the rationals.

H-form (:class:`HPolytope`) rows mean ``a.x >= b`` or ``a.x = b`` and are
stored as primitive integer vectors.  V-form (:class:`VPolytope`) stores a
canonically ordered, irredundant vertex list of ``Fraction`` tuples.

Conversion between the two uses the double description method on the
homogenized cone; LPs come from :mod:`coopdecomp.lp`.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from operator import mul

from .errors import (
    DimensionMismatch,
    NotPointed,
    OutsideSupport,
    SizeLimit,
    Unbounded,
)
from .game import as_fraction
from .linalg import integer_row, rank, solve
from .lp import lp_solve, solve_system

MAX_VERTEX_DIM = 8
MAX_VERTEX_ROWS = 64
MAX_CONE_DIM = 12


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _dot(a, b):
    return sum(map(mul, a, b))


def _canon_row(normal, rhs, equality):
    ints = integer_row(list(normal) + [rhs])
    if equality:
        lead = next((x for x in ints if x), 0)
        if lead < 0:
            ints = [-x for x in ints]
    return tuple(ints[:-1]), ints[-1]


# -- H-form -------------------------------------------------------------------

class HPolytope:
    """``{x : a.x >= b for (a, b) in inequalities, a.x = b for (a, b) in equalities}``.

    Rows are rescaled to primitive integers; exact duplicates and trivially
    true rows are dropped, a trivially false row becomes ``0 >= 1``.  Row
    order is otherwise preserved.
    """

    __slots__ = ("dim", "inequalities", "equalities")

    def __init__(self, dim, inequalities=(), equalities=()):
        self.dim = dim
        ineqs, eqs = [], []
        seen_i, seen_e = set(), set()
        infeasible = False
        for rows, eq in ((inequalities, False), (equalities, True)):
            for a, b in rows:
                if len(a) != dim:
                    raise DimensionMismatch(f"row of length {len(a)} in dimension {dim}")
                a, b = _canon_row(a, b, eq)
                if not any(a):
                    if (eq and b != 0) or (not eq and b > 0):
                        infeasible = True
                    continue
                target, seen = (eqs, seen_e) if eq else (ineqs, seen_i)
                if (a, b) not in seen:
                    seen.add((a, b))
                    target.append((a, b))
        if infeasible:
            ineqs, eqs = [((0,) * dim, 1)], []
        self.inequalities = tuple(ineqs)
        self.equalities = tuple(eqs)

    def __repr__(self):
        return f"HPolytope(dim={self.dim}, {len(self.inequalities)} inequalities, {len(self.equalities)} equalities)"

    def contains(self, x):
        return all(_dot(a, x) >= b for a, b in self.inequalities) and all(
            _dot(a, x) == b for a, b in self.equalities
        )

    def is_empty(self):
        return not lp_solve([0] * self.dim, self).feasible

    def is_bounded(self):
        """True when every coordinate is bounded above and below (2*dim LPs)."""
        for j in range(self.dim):
            e = [1 if k == j else 0 for k in range(self.dim)]
            for sense in ("min", "max"):
                if lp_solve(e, self, sense).status == "unbounded":
                    return False
        return True


def empty_h(dim):
    return HPolytope(dim, [((0,) * dim, 1)])


def simplex_h(n, carrier_players):
    """H-form of ``Delta_A = conv{delta^i : i in A}`` in ``R^n`` (1-based players)."""
    ineqs = [(tuple(1 if j == i else 0 for j in range(n)), 0) for i in range(n)]
    eqs = [(tuple(1 if j + 1 in carrier_players else 0 for j in range(n)), 1)]
    eqs += [(tuple(1 if j == i else 0 for j in range(n)), 0) for i in range(n) if i + 1 not in carrier_players]
    return HPolytope(n, ineqs, eqs)


# -- V-form -------------------------------------------------------------------

def _as_point(p):
    return tuple(as_fraction(x) for x in p)


class VPolytope:
    """Convex hull of a finite point set, kept as its canonical vertex list.

    The constructor trusts that ``vertices`` are irredundant; use :func:`hull`
    for arbitrary point sets.
    """

    __slots__ = ("dim", "vertices")

    def __init__(self, dim, vertices=()):
        pts = sorted({_as_point(v) for v in vertices})
        for p in pts:
            if len(p) != dim:
                raise DimensionMismatch(f"vertex of length {len(p)} in dimension {dim}")
        self.dim = dim
        self.vertices = tuple(pts)

    def __eq__(self, other):
        if not isinstance(other, VPolytope):
            return NotImplemented
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"VPolytope(dim={self.dim}, [{vs}])"

    def __len__(self):
        return len(self.vertices)

    def is_empty(self):
        return not self.vertices

    def scale(self, c):
        c = Fraction(c)
        if c == 0 and self.vertices:
            return VPolytope(self.dim, [(Fraction(0),) * self.dim])
        return VPolytope(self.dim, [tuple(c * x for x in v) for v in self.vertices])

    def translate(self, shift):
        shift = _as_point(shift)
        return VPolytope(self.dim, [tuple(x + s for x, s in zip(v, shift)) for v in self.vertices])

    def contains(self, x):
        """Membership by LP over convex weights (independent of the H-form)."""
        x = _as_point(x)
        k = len(self.vertices)
        if k == 0:
            return False
        eqs = [(tuple(v[j] for v in self.vertices), x[j]) for j in range(self.dim)]
        eqs.append(((1,) * k, 1))
        ineqs = [(tuple(1 if i == j else 0 for i in range(k)), 0) for j in range(k)]
        return solve_system([0] * k, ineqs, eqs).feasible


def point(x):
    x = _as_point(x)
    return VPolytope(len(x), [x])


def simplex_v(n, carrier_players, scale=1):
    """``scale * Delta_A`` as a V-polytope."""
    s = Fraction(scale)
    if s == 0:
        return point([0] * n)
    return VPolytope(n, [tuple(s if j + 1 == i else Fraction(0) for j in range(n)) for i in carrier_players])


# -- double description -------------------------------------------------------

def double_description(D, constraints, zero_sets=False):
    """Generators of ``{z in R^D : h.z >= 0 (or = 0)}``.

    ``constraints`` is a list of ``(h, is_equality)`` with integer ``h``.
    Returns ``(lineality, rays)``: a basis of the lineality space and the
    extreme rays modulo it, all primitive integer tuples.  With
    ``zero_sets`` a third list gives, per ray, the bitmask of constraint
    indices it satisfies with equality.
    """
    lin = [tuple(1 if i == j else 0 for i in range(D)) for j in range(D)]
    rays = []  # (vector, zero-set bitmask over processed constraints)
    for idx, (h, is_eq) in enumerate(constraints):
        bit = 1 << idx
        vals = [_dot(h, l) for l in lin]
        k = next((i for i, x in enumerate(vals) if x), None)
        if k is not None:
            l, hl = lin[k], vals[k]
            if hl < 0:
                l, hl = tuple(-x for x in l), -hl
            processed = bit - 1
            new_lin = []
            for i, lj in enumerate(lin):
                if i == k:
                    continue
                hj = vals[i]
                new_lin.append(_primitive([hl * a - hj * b for a, b in zip(lj, l)]) if hj else lj)
            new_rays = []
            for r, z in rays:
                hr = _dot(h, r)
                new_rays.append((_primitive([hl * a - hr * b for a, b in zip(r, l)]) if hr else r, z | bit))
            if not is_eq:
                new_rays.append((l, processed))
            lin, rays = new_lin, new_rays
            continue

        plus, zero, minus = [], [], []
        for t, (r, z) in enumerate(rays):
            s = _dot(h, r)
            if s > 0:
                plus.append((t, s))
            elif s < 0:
                minus.append((t, s))
            else:
                zero.append((r, z | bit))
        if not minus and not is_eq:
            rays = [rays[t] for t, _ in plus] + zero
            continue
        need = D - len(lin) - 2
        combos = []
        for tp, sp in plus:
            rp, zp = rays[tp]
            for tm, sm in minus:
                rm, zm = rays[tm]
                common = zp & zm
                if bin(common).count("1") < need:
                    continue
                if any(common & ~z == 0 for t, (_, z) in enumerate(rays) if t != tp and t != tm):
                    continue
                combos.append((_primitive([sp * a - sm * b for a, b in zip(rm, rp)]), common | bit))
        kept = zero + combos
        if not is_eq:
            kept = [rays[t] for t, _ in plus] + kept
        rays = kept
    if zero_sets:
        return lin, [r for r, _ in rays], [z for _, z in rays]
    return lin, [r for r, _ in rays]


def _homogenized(poly):
    """Constraints of ``{(t, x) : a.x - b t >= 0, t >= 0}`` with equalities first."""
    cons = [((-b,) + tuple(a), True) for a, b in poly.equalities]
    cons.append(((1,) + (0,) * poly.dim, False))
    cons += [((-b,) + tuple(a), False) for a, b in poly.inequalities]
    return cons


def vertices(poly):
    """Exact vertex set of a bounded H-polytope (empty V-polytope if infeasible)."""
    if poly.dim > MAX_VERTEX_DIM or len(poly.inequalities) > MAX_VERTEX_ROWS:
        raise SizeLimit(
            f"vertex enumeration limited to dim <= {MAX_VERTEX_DIM} and <= {MAX_VERTEX_ROWS} inequalities"
        )
    lin, rays = double_description(poly.dim + 1, _homogenized(poly))
    pts = [tuple(Fraction(x, r[0]) for x in r[1:]) for r in rays if r[0] > 0]
    if not pts:
        return VPolytope(poly.dim)
    if lin or any(r[0] == 0 for r in rays):
        raise Unbounded("polyhedron has a recession direction")
    return VPolytope(poly.dim, pts)


def to_h(vpoly):
    """Facet description of a V-polytope (affine hull as equalities)."""
    d = vpoly.dim
    if not vpoly.vertices:
        return empty_h(d)
    cons = [(tuple(integer_row((1,) + v)), False) for v in vpoly.vertices]
    lin, rays = double_description(d + 1, cons)
    eqs = [(l[1:], -l[0]) for l in lin]
    ineqs = [(r[1:], -r[0]) for r in rays if any(r[1:])]
    return HPolytope(d, ineqs, eqs)


def hull(points, dim=None):
    """Irredundant V-polytope of ``conv(points)``."""
    pts = list({_as_point(p) for p in points})
    if dim is None:
        if not pts:
            raise ValueError("dimension needed for an empty point set")
        dim = len(pts[0])
    if len(pts) <= 2:
        return VPolytope(dim, pts)
    den = lcm(*{x.denominator for p in pts for x in p})
    ints = [tuple(x.numerator * (den // x.denominator) for x in p) for p in pts]
    # points extreme along a coordinate go first so that most later ones fall inside
    first = set()
    for j in range(dim):
        first.add(min(range(len(ints)), key=lambda k: ints[k][j]))
        first.add(max(range(len(ints)), key=lambda k: ints[k][j]))
    order = sorted(first) + [k for k in range(len(ints)) if k not in first]
    lin, rays, zsets = double_description(dim + 1, [((den,) + ints[k], False) for k in order], zero_sets=True)
    eq_normals = [l[1:] for l in lin]
    need = dim - rank(eq_normals) if eq_normals else dim
    tight = [[] for _ in pts]
    for r, z in zip(rays, zsets):
        if not any(r[1:]):
            continue
        while z:
            low = z & -z
            tight[order[low.bit_length() - 1]].append(r[1:])
            z ^= low
    keep = [p for p, t in zip(pts, tight) if len(t) >= need and rank(eq_normals + t) == dim]
    return VPolytope(dim, keep)


def as_vpolytope(p):
    if isinstance(p, VPolytope):
        return p
    if isinstance(p, HPolytope):
        return vertices(p)
    return point(p)


# -- operations ---------------------------------------------------------------

def reduce_h(poly):
    """Drop dependent equalities and LP-redundant inequalities."""
    if poly.is_empty():
        return empty_h(poly.dim)
    eqs = []
    for a, b in poly.equalities:
        if rank([r for r, _ in eqs] + [a]) > len(eqs):
            eqs.append((a, b))
    ineqs = list(poly.inequalities)
    i = 0
    while i < len(ineqs):
        a, b = ineqs[i]
        others = ineqs[:i] + ineqs[i + 1:]
        res = solve_system(a, others, eqs, "min", poly.dim)
        if res.optimal and res.value >= b:
            ineqs.pop(i)
        else:
            i += 1
    return HPolytope(poly.dim, ineqs, eqs)


def intersect(p, q):
    """H-form of ``p & q``: concatenated rows, canonicalized, redundancy removed."""
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions {p.dim} and {q.dim}")
    return reduce_h(HPolytope(p.dim, p.inequalities + q.inequalities, p.equalities + q.equalities))


def minkowski_sum(p, q):
    """``p + q`` for V-polytopes: hull of pairwise vertex sums."""
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions {p.dim} and {q.dim}")
    if not p.vertices or not q.vertices:
        return VPolytope(p.dim)
    return hull([tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices], p.dim)


def polytope_equal(p, q):
    """Exact set equality; either argument may be H-form, V-form or a point."""
    p, q = as_vpolytope(p), as_vpolytope(q)
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions {p.dim} and {q.dim}")
    return p.vertices == q.vertices


# -- cones and fans -----------------------------------------------------------

@dataclass(frozen=True)
class PointedCone:
    dim: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(_primitive(integer_row(g)) for g in self.generators)
        for g in gens:
            if len(g) != self.dim:
                raise DimensionMismatch(f"generator of length {len(g)} in dimension {self.dim}")
        object.__setattr__(self, "generators", gens)


def is_pointed(generators, dim):
    """No nonzero nonnegative combination of the generators vanishes."""
    k = len(generators)
    if k == 0:
        return True
    eqs = [(tuple(g[j] for g in generators), 0) for j in range(dim)]
    eqs.append(((1,) * k, 1))
    ineqs = [(tuple(1 if i == j else 0 for i in range(k)), 0) for j in range(k)]
    return not solve_system([0] * k, ineqs, eqs).feasible


def extreme_rays(cone_h):
    """Extreme rays of the pointed cone ``{x : a.x >= 0, a.x = 0}``, lexicographically ordered.

    Rays keep their orientation and are scaled to primitive integer vectors.
    """
    if cone_h.dim > MAX_CONE_DIM:
        raise SizeLimit(f"cone dimension limited to {MAX_CONE_DIM}")
    if any(b != 0 for _, b in cone_h.inequalities + cone_h.equalities):
        raise ValueError("cone rows must have zero right-hand side")
    cons = [(a, True) for a, _ in cone_h.equalities] + [(a, False) for a, _ in cone_h.inequalities]
    lin, rays = double_description(cone_h.dim, cons)
    if lin:
        raise NotPointed(f"cone contains a line, e.g. {lin[0]}")
    return PointedCone(cone_h.dim, tuple(sorted(rays)))


@dataclass(frozen=True)
class SimplicialFan:
    """Maximal cells of a triangulation of ``cone``; each cell is a sorted tuple of generator indices.

    Faces of the cells (all subsets) belong to the fan implicitly.
    """

    cone: PointedCone
    cells: tuple

    def generators_of(self, cell):
        return [self.cone.generators[i] for i in cell]

    def faces(self):
        out = set()
        for cell in self.cells:
            for k in range(len(cell) + 1):
                out.update(combinations(cell, k))
        return sorted(out, key=lambda c: (len(c), c))


@dataclass(frozen=True)
class ConicCoordinates:
    """``point = sum coeffs[k] * generator[cell[k]]`` with all coefficients positive."""

    cell: tuple
    coeffs: tuple

    def as_dict(self):
        return dict(zip(self.cell, self.coeffs))


def triangulate_cone(cone):
    """Placing triangulation of a pointed cone in generator order.

    Each generator either raises the dimension (every cell becomes a pyramid
    over it) or is joined to the boundary facets it sees; generators inside
    the current cone are skipped.
    """
    gens = cone.generators
    if not is_pointed(gens, cone.dim):
        raise NotPointed("generators span a cone containing a line")
    cells = []
    span = []
    for gi, g in enumerate(gens):
        if not any(g):
            continue
        if rank(span + [g]) > len(span):
            span.append(g)
            cells = [c + (gi,) for c in cells] if cells else [(gi,)]
            continue
        facet_count = {}
        for c in cells:
            for apex in c:
                f = tuple(x for x in c if x != apex)
                facet_count.setdefault(f, []).append((c, apex))
        new = []
        for f, owners in facet_count.items():
            if len(owners) != 1:
                continue
            c, apex = owners[0]
            mu = solve([gens[i] for i in c], g)
            if mu[c.index(apex)] < 0:
                new.append(tuple(sorted(f + (gi,))))
        cells.extend(new)
    return SimplicialFan(cone, tuple(sorted(cells)))


def conic_coordinates(x, fan):
    """Minimal cell containing ``x`` and the unique positive coefficients expressing it."""
    x = _as_point(x)
    if len(x) != fan.cone.dim:
        raise DimensionMismatch(f"point of length {len(x)} in dimension {fan.cone.dim}")
    if not any(x):
        return ConicCoordinates((), ())
    for cell in fan.cells:
        mu = solve(fan.generators_of(cell), x)
        if mu is not None and all(c >= 0 for c in mu):
            support = tuple(i for i, c in zip(cell, mu) if c > 0)
            return ConicCoordinates(support, tuple(c for c in mu if c > 0))
    raise OutsideSupport("point is not in the support of the fan")


def cells_meet_properly(fan, c, d):
    """True when ``cone(c) & cone(d) == cone(c & d)`` (exact LP test)."""
    gens = fan.cone.generators
    only_c = [i for i in c if i not in d]
    only_d = [i for i in d if i not in c]
    if not only_c or not only_d:
        return True
    k = len(c) + len(d)
    eqs = [
        (tuple(gens[i][j] for i in c) + tuple(-gens[i][j] for i in d), 0)
        for j in range(fan.cone.dim)
    ]
    eqs.append((tuple(1 if i in only_c else 0 for i in c) + tuple(1 if i in only_d else 0 for i in d), 1))
    ineqs = [(tuple(1 if t == s else 0 for t in range(k)), 0) for s in range(k)]
    return not solve_system([0] * k, ineqs, eqs).feasible


def is_fan(fan):
    return all(cells_meet_properly(fan, c, d) for c, d in combinations(fan.cells, 2))
