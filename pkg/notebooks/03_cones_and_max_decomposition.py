"""
Cones, fans and the max-decomposition
=====================================

Extreme rays of zero-normalized cones, conic coordinates of a game, and the
core of a weakly superadditive game as a Minkowski sum.
"""

# %%
import random

from coopdecomp import core_h, core_ws, factor_cone, max_decompose, nestohedron_core, vertices
from coopdecomp.game import coalition_label
from coopdecomp.decomposition import additive_point, cone_setup, solution_table
from coopdecomp.generators import random_supermodular, random_weakly_superadditive, random_zero_monotone, zero_normalized_rays
from coopdecomp.solutions import shapley

rng = random.Random(7)

# %%
# Rays of the zero-normalized supermodular cone.
for n in (3, 4):
    print(n, "players:", len(zero_normalized_rays("supermodular0", n)), "rays")
for g in zero_normalized_rays("supermodular0", 3):
    print(" ", g)

# %%
# The three-player cone has five rays in a four-dimensional space, so it needs
# a triangulation.  Two generator orders give two different fans.
a = cone_setup("supermodular0", 3)
k = len(a.generators)
b = cone_setup("supermodular0", 3, order=[k - 1] + list(range(k - 1)))
print(a.fan.cells)
print(b.fan.cells)

# %%
# The Shapley value of a supermodular game, rebuilt from the rays.  Both fans agree.
v = random_supermodular(rng, 3, bound=6)
for setup in (a, b):
    rec = factor_cone(v, setup.cone_h, setup.fan, solution_table(setup.generators, shapley), additive_point, shapley)
    print(rec.alpha_output, rec.commutes)

# %%
# A zero-monotone game is the pointwise max of the games v^B.
z = random_zero_monotone(rng, 3, bound=6)
parts = max_decompose(z)
for B, g in parts.items():
    print(coalition_label(B), g)

# %%
# Each v^B has a core that is a sum of two scaled simplices.
for B in parts:
    assert nestohedron_core(z, B) == vertices(core_h(parts[B]))
print("nestohedra check out")

# %%
# The core of a weakly superadditive game: translate the intersection of those cores.
ws = random_weakly_superadditive(rng, 4, bound=6)
rec = core_ws(ws)
print(len(rec.alpha_output), "core vertices, commutes:", rec.commutes)
