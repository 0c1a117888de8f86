from fractions import Fraction as F
import random

import pytest

from coopdecomp.classes import is_supermodular, supermodular0_cone, tm0_cone
from coopdecomp.errors import DimensionMismatch, NotPointed, OutsideSupport
from coopdecomp.game import coalition, coalitions, delta, game_to_vector, size, unanimity, vector_to_game
from coopdecomp.generators import random_supermodular
from coopdecomp.linalg import rank
from coopdecomp.lp import lp_solve
from coopdecomp.polyhedra import (
    HPolytope,
    PointedCone,
    VPolytope,
    conic_coordinates,
    empty_h,
    extreme_rays,
    hull,
    intersect,
    is_fan,
    minkowski_sum,
    point,
    polytope_equal,
    simplex_h,
    simplex_v,
    to_h,
    triangulate_cone,
    vertices,
)
from coopdecomp.solutions import core_h


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def test_lp_trivial_cases():
    res = lp_solve([1], HPolytope(1, [((1,), 0)]))
    assert res.optimal and res.value == 0 and res.point == (0,)
    res = lp_solve([1, 1, 1], simplex_h(3, (1, 2, 3)), "max")
    assert res.value == 1


def test_lp_unbounded_ray():
    res = lp_solve([1, 0], HPolytope(2, [((1, 0), 0), ((0, 1), 0)]), "max")
    assert res.status == "unbounded"
    assert res.ray[0] > 0


def test_lp_majority_core_farkas():
    v_pairs = [coalition(1, 2), coalition(1, 3), coalition(2, 3)]
    rows = [(tuple(1 if a >> j & 1 else 0 for j in range(3)), 1 if size(a) == 2 else 0) for a in coalitions(3) if a != 7]
    poly = HPolytope(3, rows, [((1, 1, 1), 1)])
    res = lp_solve([0, 0, 0], poly)
    assert res.status == "infeasible"
    y, z = res.duals_ineq, res.duals_eq
    rows, eqs = poly.inequalities, poly.equalities
    for j in range(3):
        assert sum(yk * a[j] for yk, (a, _) in zip(y, rows)) + sum(zk * a[j] for zk, (a, _) in zip(z, eqs)) == 0
    assert sum(yk * b for yk, (_, b) in zip(y, rows)) + sum(zk * b for zk, (_, b) in zip(z, eqs)) > 0
    assert all(yk >= 0 for yk in y)
    support = {a for (normal, _), yk in zip(rows, y) if yk for a in [sum(1 << j for j in range(3) if normal[j])]}
    assert support == set(v_pairs)


def test_lp_optimal_duals():
    poly = HPolytope(2, [((1, 0), 1), ((0, 1), 2), ((-1, -1), -10)])
    res = lp_solve([2, 3], poly)
    assert res.value == 8
    combo = [sum(yk * a[j] for yk, (a, _) in zip(res.duals_ineq, poly.inequalities)) for j in range(2)]
    assert combo == [2, 3]
    assert sum(yk * b for yk, (_, b) in zip(res.duals_ineq, poly.inequalities)) == 8


def test_lp_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        lp_solve([1, 2], HPolytope(1, [((1,), 0)]))


def test_hpolytope_canonical_rows():
    p = HPolytope(2, [((F(1, 2), F(1, 3)), F(1, 6)), ((3, 2), 1)])
    assert p.inequalities == (((3, 2), 1),)


def test_vertices_examples():
    assert vertices(simplex_h(3, (1, 2, 3))).vertices == tuple(sorted(delta(3, i) for i in (1, 2, 3)))
    assert vertices(empty_h(3)).is_empty()
    assert vertices(core_h(unanimity(3, coalition(1, 2)))) == VPolytope(3, [delta(3, 1), delta(3, 2)])


def test_intersect_examples():
    p = simplex_h(3, (1, 2, 3))
    assert polytope_equal(intersect(p, p), p)
    assert vertices(intersect(simplex_h(3, (1, 2)), simplex_h(3, (1, 3)))) == point(delta(3, 1))
    assert vertices(intersect(p, empty_h(3))).is_empty()


def test_minkowski_examples():
    p = simplex_v(3, (1, 2, 3))
    shift = (F(1), F(-1, 2), F(2))
    assert minkowski_sum(p, point(shift)) == p.translate(shift)
    s = minkowski_sum(simplex_v(3, (1, 2)), simplex_v(3, (1, 2, 3)))
    pts = [tuple(a + b for a, b in zip(delta(3, i), delta(3, j))) for i in (1, 2) for j in (1, 2, 3)]
    assert s == hull(pts)
    # delta^1 + delta^2 is the midpoint of 2 delta^1 and 2 delta^2
    assert len(s.vertices) == 4 and (1, 1, 0) not in s.vertices


def test_polytope_equal_examples():
    p = simplex_v(3, (1, 2))
    assert polytope_equal(p, p.translate((0, 0, 0)))
    assert not polytope_equal(simplex_v(3, (1, 2)), simplex_v(3, (1, 3)))
    rng = random.Random(5)
    for _ in range(5):
        v = random_supermodular(rng, 3)
        h = core_h(v)
        assert polytope_equal(h, vertices(h))


def test_hull_drops_interior_points():
    pts = [(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (1, 0)]
    assert hull(pts).vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert hull([(1, 1), (1, 1)]) == point((1, 1))


def test_to_h_round_trip():
    p = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert vertices(to_h(p)) == p


def test_extreme_rays_orthant_and_tm0():
    cone = HPolytope(2, [((1, 0), 0), ((0, 1), 0)])
    assert set(extreme_rays(cone).generators) == {(1, 0), (0, 1)}
    rays = {vector_to_game(3, g) for g in extreme_rays(tm0_cone(3)).generators}
    assert rays == {unanimity(3, a) for a in coalitions(3) if size(a) >= 2}


def test_extreme_rays_supermodular0_n3():
    cone = supermodular0_cone(3)
    rays = extreme_rays(cone).generators
    assert len(rays) == 5
    for g in rays:
        assert is_supermodular(vector_to_game(3, g))
        tight = [a for a, _ in cone.inequalities + cone.equalities if dot(a, g) == 0]
        assert rank(tight) == cone.dim - 1


def test_extreme_rays_rejects_lines():
    with pytest.raises(NotPointed):
        extreme_rays(HPolytope(2, [((1, 0), 0)]))


def test_triangulate_simplex_cone():
    cone = PointedCone(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    fan = triangulate_cone(cone)
    assert fan.cells == ((0, 1, 2),)
    assert len(fan.faces()) == 8


def test_triangulate_planar_cone():
    fan = triangulate_cone(PointedCone(2, ((1, 0), (1, 1), (0, 1))))
    assert set(fan.cells) == {(0, 1), (1, 2)}
    # placing g2 last gives a single cell since g2 lies inside cone(g1, g3)
    fan = triangulate_cone(PointedCone(2, ((1, 0), (0, 1), (1, 1))))
    assert fan.cells == ((0, 1),)


def test_triangulate_tm0_cone():
    fan = triangulate_cone(extreme_rays(tm0_cone(3)))
    assert fan.cells == ((0, 1, 2, 3),)


def test_supermodular0_fan_is_proper():
    fan = triangulate_cone(extreme_rays(supermodular0_cone(3)))
    assert len(fan.cells) == 2 and is_fan(fan)


def test_conic_coordinates_examples():
    fan = triangulate_cone(PointedCone(2, ((1, 0), (1, 1), (0, 1))))
    c = conic_coordinates((1, 1), fan)
    assert c.cell == (1,) and c.coeffs == (1,)
    c = conic_coordinates((2, 1), fan)
    assert c.as_dict() == {0: 1, 1: 1}
    with pytest.raises(OutsideSupport):
        conic_coordinates((-1, 0), fan)


def test_conic_coordinates_round_trip():
    rng = random.Random(9)
    fan = triangulate_cone(extreme_rays(supermodular0_cone(3)))
    gens = fan.cone.generators
    for _ in range(30):
        cell = rng.choice(fan.cells)
        coeffs = {i: F(rng.randint(1, 20), rng.randint(1, 20)) for i in cell}
        x = tuple(sum(c * gens[i][j] for i, c in coeffs.items()) for j in range(len(gens[0])))
        cc = conic_coordinates(x, fan)
        assert cc.as_dict() == coeffs
        assert all(c > 0 for c in cc.coeffs)


def test_core_h_of_unanimity_matches_vector_space():
    u = unanimity(3, coalition(1, 3))
    assert len(game_to_vector(u)) == 7
    assert vertices(core_h(u)) == simplex_v(3, (1, 3))
