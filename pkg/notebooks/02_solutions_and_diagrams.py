"""
Solutions through elementary games
==================================

Each solution below is computed twice: directly, and by splitting the game
into a family of simpler games and aggregating their solutions.
"""

# %%
import random

from coopdecomp import (
    core_h,
    factor_nucleolus,
    factor_probabilistic,
    factor_selectope,
    factor_weber,
    nucleolus,
    selectope,
    shapley,
    vertices,
    weber,
)
from coopdecomp.generators import random_supermodular, random_game
from coopdecomp.solutions import shapley_weights

rng = random.Random(2024)

# %%
# A supermodular game: its core, Weber set and selectope all coincide.
v = random_supermodular(rng, 3, bound=6)
print(v)
print("core    ", vertices(core_h(v)))
print("weber   ", weber(v))
print("selectope", selectope(v))
print("shapley ", shapley(v))
print("nucleolus", nucleolus(v))

# %%
# Probabilistic values factor through the marginal contribution functions D_i.
rec = factor_probabilistic(v, shapley_weights(3))
for i, d in rec.tau_output.items():
    print(i, d)
print(rec.alpha_output, rec.commutes)

# %%
# The Weber set factors through the additive games of the marginal vectors.
w = random_game(rng, 3, bound=6)
rec = factor_weber(w)
print(len(rec.tau_output), "elementary games")
print(rec.alpha_output)
print("commutes:", rec.commutes)

# %%
# The selectope family is large, so it is streamed rather than stored.
rec = factor_selectope(w)
print(rec.z_size, "selectors, vertices:", len(rec.alpha_output))
print("commutes:", rec.commutes)

# %%
# For the nucleolus the index set is K itself; only the excess games at
# the vertices of K are ever evaluated.
rec = factor_nucleolus(v)
print(rec.alpha_output, rec.commutes)
print("evaluated excess games:", len(rec.tau_output.evaluated))
