"""
Games, dividends and classes
============================

A tour of the game table, the Moebius transform and the class checks.
"""

# %%
from fractions import Fraction

from coopdecomp import classify, coalition, make_game, mobius, mobius_inverse, unanimity, zero_normalize
from coopdecomp.classes import is_balanced, jordan_decompose_tm

# %%
# A three-player glove game: player 1 owns a left glove, 2 and 3 own right gloves.
glove = make_game(3, {coalition(1, 2): 1, coalition(1, 3): 1, coalition(1, 2, 3): 1})
print(glove)

# %%
# Harsanyi dividends; the zeta transform brings the game back.
m = mobius(glove)
print(m)
assert mobius_inverse(m) == glove

# %%
# The dividend of the grand coalition is negative, so the game is not totally monotone.
# Its Jordan pair splits it into two totally monotone games.
w1, w2 = jordan_decompose_tm(glove)
print(w1)
print(w2)
assert w1 - w2 == glove

# %%
# Zero-normalization peels off the additive part.
v = make_game(2, {1: 1, 2: 2, 3: 5})
hat, additive = zero_normalize(v)
print(hat, additive)

# %%
# Every class flag at once.  The glove game has a one-point core at (1, 0, 0).
report = classify(glove)
for name, flag in report.as_dict().items():
    print(f"{name:22s} {flag.holds}")
print("chain holds:", report.chain_holds())

# %%
# The three-player majority game is not balanced; the certificate is a balancing family.
majority = make_game(3, {coalition(1, 2): 1, coalition(1, 3): 1, coalition(2, 3): 1, 7: 1})
cert = is_balanced(majority)
print(cert.balanced, cert.weights)
print("sum of weighted worths:", sum(w * majority[a] for a, w in cert.weights.items()), "> v(N) =", majority[7])

# %%
# Unanimity games are the building blocks.
u = unanimity(3, coalition(1, 2))
print(u, classify(u).totally_monotone.holds)
print(Fraction(1, 3) * u + glove)
