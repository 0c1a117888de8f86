"""Coalitional games with exact rational worths.

Coalitions are ``int`` bitmasks: player ``i`` (1-based) is bit ``i - 1``.
A :class:`Game` stores a dense table of ``2**n`` :class:`~fractions.Fraction`
values indexed by mask.  Allocations are plain tuples of fractions.
"""
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import (
    DuplicateCoalition,
    EmptyCarrier,
    EmptyList,
    MixedPlayerCounts,
    NonzeroEmptySet,
    NotAdditive,
    PlayerCountOutOfRange,
)

MAX_PLAYERS = 12

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value):
    """Convert ints, fractions and ``"p/q"`` strings to ``Fraction``; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(f"floating point value {value!r} is not allowed; use Fraction or 'p/q'")
    return Fraction(value)


# -- coalitions ---------------------------------------------------------------

def coalition(*players):
    """Mask of the coalition formed by the given 1-based players.

    >>> coalition(1, 3)
    5
    """
    if len(players) == 1 and not isinstance(players[0], int):
        players = tuple(players[0])
    mask = 0
    for i in players:
        if i < 1:
            raise ValueError(f"player index {i} must be >= 1")
        mask |= 1 << (i - 1)
    return mask


def members(mask):
    """Ascending tuple of the 1-based players in ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask):
    return bin(mask).count("1")


def grand(n):
    return (1 << n) - 1


def coalitions(n, empty=False):
    """All coalitions of ``n`` players in canonical order.

    Canonical order is by cardinality, ties broken by ascending mask.
    """
    masks = _canonical(n)
    return masks if empty else masks[1:]


@lru_cache(maxsize=None)
def _canonical(n):
    return tuple(sorted(range(1 << n), key=lambda m: (size(m), m)))


def subsets(mask):
    """All submasks of ``mask`` (including 0 and ``mask`` itself), descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def coalition_label(mask):
    return "{" + ",".join(map(str, members(mask))) + "}" if mask else "{}"


def _check_n(n):
    if not isinstance(n, int) or not 1 <= n <= MAX_PLAYERS:
        raise PlayerCountOutOfRange(f"player count must be in [1, {MAX_PLAYERS}], got {n!r}")


# -- allocations --------------------------------------------------------------

def allocation(values):
    return tuple(as_fraction(v) for v in values)


def payoff(x, mask):
    """Total payoff ``x(A)`` of coalition ``mask``; zero for the empty coalition."""
    total = ZERO
    i = 0
    while mask:
        if mask & 1:
            total += x[i]
        mask >>= 1
        i += 1
    return total


def delta(n, i):
    """The unit allocation giving 1 to player ``i``."""
    return tuple(ONE if j == i else ZERO for j in range(1, n + 1))


# -- games --------------------------------------------------------------------

class Game:
    """Immutable TU game on players ``1..n``.

    Values are looked up by coalition mask: ``v[coalition(1, 2)]``.
    Games support ``+``, ``-``, negation and multiplication by rationals.
    """

    __slots__ = ("n", "values", "_hash")

    def __init__(self, n, values):
        _check_n(n)
        values = tuple(as_fraction(x) for x in values)
        if len(values) != 1 << n:
            raise ValueError(f"expected {1 << n} values for n={n}, got {len(values)}")
        if values[0] != 0:
            raise NonzeroEmptySet(f"v(empty) must be 0, got {values[0]}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Game is immutable")

    @classmethod
    def from_function(cls, n, f):
        """Build ``v(A) = f(mask)`` for nonempty ``A``."""
        _check_n(n)
        return cls(n, [0] + [f(m) for m in range(1, 1 << n)])

    def __getitem__(self, mask):
        return self.values[mask]

    def __len__(self):
        return len(self.values)

    @property
    def players(self):
        return grand(self.n)

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.values)))
        return self._hash

    def _same_n(self, other):
        if not isinstance(other, Game):
            return False
        if other.n != self.n:
            raise MixedPlayerCounts(f"games on {self.n} and {other.n} players")
        return True

    def __add__(self, other):
        if not self._same_n(other):
            return NotImplemented
        return Game(self.n, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        if not self._same_n(other):
            return NotImplemented
        return Game(self.n, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return Game(self.n, [-a for a in self.values])

    def __mul__(self, c):
        if isinstance(c, Game):
            return NotImplemented
        c = as_fraction(c)
        return Game(self.n, [c * a for a in self.values])

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.values)

    def items(self):
        """``(mask, value)`` pairs over nonempty coalitions in canonical order."""
        return [(m, self.values[m]) for m in coalitions(self.n)]

    def __repr__(self):
        nz = ", ".join(f"{coalition_label(m)}: {v}" for m, v in self.items() if v)
        return f"Game(n={self.n}, {{{nz}}})"


class SetFunction:
    """Immutable rational function on all coalitions, the empty one included.

    Marginal contribution maps ``A -> v(A + i) - v(A)`` take the value
    ``v({i})`` at the empty coalition, so they are set functions rather
    than games.
    """

    __slots__ = ("n", "values")

    def __init__(self, n, values):
        _check_n(n)
        values = tuple(as_fraction(x) for x in values)
        if len(values) != 1 << n:
            raise ValueError(f"expected {1 << n} values for n={n}, got {len(values)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("SetFunction is immutable")

    def __getitem__(self, mask):
        return self.values[mask]

    def __eq__(self, other):
        if not isinstance(other, (SetFunction, Game)):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def items(self):
        """``(mask, value)`` pairs over all coalitions in canonical order, the empty one first."""
        return [(m, self.values[m]) for m in coalitions(self.n, empty=True)]

    def __repr__(self):
        nz = ", ".join(f"{coalition_label(m)}: {v}" for m, v in self.items() if v)
        return f"SetFunction(n={self.n}, {{{nz}}})"


def make_game(n, assignments=()):
    """Game from ``(mask, value)`` pairs (or a dict); unlisted coalitions are worth 0."""
    _check_n(n)
    if isinstance(assignments, dict):
        assignments = assignments.items()
    table = [ZERO] * (1 << n)
    seen = set()
    for mask, value in assignments:
        if not 0 <= mask < 1 << n:
            raise ValueError(f"coalition mask {mask} out of range for n={n}")
        if mask in seen:
            raise DuplicateCoalition(f"coalition {coalition_label(mask)} listed twice")
        seen.add(mask)
        value = as_fraction(value)
        if mask == 0 and value != 0:
            raise NonzeroEmptySet(f"v(empty) must be 0, got {value}")
        table[mask] = value
    return Game(n, table)


def zero_game(n):
    return Game(n, [ZERO] * (1 << n))


def unanimity(n, carrier):
    """The unanimity game ``u_A``: worth 1 exactly on coalitions containing ``A``."""
    _check_n(n)
    if carrier == 0:
        raise EmptyCarrier("unanimity game needs a nonempty carrier")
    return Game(n, [ONE if m & carrier == carrier else ZERO for m in range(1 << n)])


def linear_combine(terms):
    """Exact pointwise sum of ``c * v`` over ``(c, v)`` pairs."""
    terms = list(terms)
    if not terms:
        raise EmptyList("need at least one term")
    n = terms[0][1].n
    table = [ZERO] * (1 << n)
    for c, v in terms:
        if v.n != n:
            raise MixedPlayerCounts(f"games on {n} and {v.n} players")
        c = as_fraction(c)
        if c:
            table = [t + c * x for t, x in zip(table, v.values)]
    return Game(n, table)


def _pointwise(games, pick):
    games = list(games)
    if not games:
        raise EmptyList("need at least one game")
    n = games[0].n
    for g in games:
        if g.n != n:
            raise MixedPlayerCounts(f"games on {n} and {g.n} players")
    return Game(n, [pick(col) for col in zip(*(g.values for g in games))])


def game_sup(games):
    """Pointwise maximum of a nonempty list of games."""
    return _pointwise(games, max)


def game_inf(games):
    """Pointwise minimum of a nonempty list of games."""
    return _pointwise(games, min)


# -- Moebius transform --------------------------------------------------------

class MobiusCoeffs:
    """Harsanyi dividends of a game, indexed by coalition mask."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        _check_n(n)
        coeffs = tuple(as_fraction(c) for c in coeffs)
        if len(coeffs) != 1 << n:
            raise ValueError(f"expected {1 << n} coefficients for n={n}")
        if coeffs[0] != 0:
            raise NonzeroEmptySet("Moebius coefficient of the empty set must be 0")
        self.n = n
        self.coeffs = coeffs

    def __getitem__(self, mask):
        return self.coeffs[mask]

    def __eq__(self, other):
        return isinstance(other, MobiusCoeffs) and (self.n, self.coeffs) == (other.n, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def support(self):
        return [m for m in coalitions(self.n) if self.coeffs[m]]

    def __repr__(self):
        nz = ", ".join(f"{coalition_label(m)}: {self.coeffs[m]}" for m in self.support())
        return f"MobiusCoeffs(n={self.n}, {{{nz}}})"


def _subset_transform(table, n, sign):
    table = list(table)
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                table[m] += sign * table[m ^ bit]
    return table


def mobius(v):
    """Moebius transform ``m(A) = sum_{B <= A} (-1)^{|A \\ B|} v(B)`` (fast subset transform)."""
    return MobiusCoeffs(v.n, _subset_transform(v.values, v.n, -1))


def mobius_inverse(m):
    """Zeta transform: the game ``v(A) = sum_{B <= A} m(B)``."""
    if m.coeffs[0] != 0:
        raise NonzeroEmptySet("Moebius coefficient of the empty set must be 0")
    return Game(m.n, _subset_transform(m.coeffs, m.n, 1))


# -- additive games and zero-normalization ------------------------------------

def embed_additive(x):
    """The additive game ``m_x(A) = x(A)``."""
    x = allocation(x)
    n = len(x)
    den = lcm(*(c.denominator for c in x)) if x else 1
    ints = [c.numerator * (den // c.denominator) for c in x]
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] + ints[low.bit_length() - 1]
    return Game(n, [Fraction(t, den) for t in table])


def is_additive(v):
    return all(v[m] == sum(v[1 << (i - 1)] for i in members(m)) for m in range(1, 1 << v.n))


def restrict_additive(v, check=True):
    """Inverse of :func:`embed_additive`: the singleton worths of an additive game."""
    if check:
        for m in coalitions(v.n):
            if v[m] != sum((v[1 << (i - 1)] for i in members(m)), ZERO):
                raise NotAdditive(f"v{coalition_label(m)} = {v[m]} differs from the sum of its singletons")
    return tuple(v[1 << i] for i in range(v.n))


def zero_normalize(v):
    """Split ``v`` into its zero-normalized part and its additive part.

    Returns ``(w, m)`` with ``w(A) = v(A) - sum_{i in A} v({i})``, ``m = v - w``.
    """
    additive = embed_additive(restrict_additive(v, check=False))
    return v - additive, additive


def is_zero_normalized(v):
    return all(v[1 << i] == 0 for i in range(v.n))


def subgame(v, carrier):
    """Restriction of ``v`` to the subsets of ``carrier``, players relabelled ``1..|A|`` in order."""
    if carrier == 0:
        raise EmptyCarrier("subgame needs a nonempty coalition")
    old = members(carrier)
    k = len(old)
    table = []
    for m in range(1 << k):
        orig = 0
        for j in range(k):
            if m >> j & 1:
                orig |= 1 << (old[j] - 1)
        table.append(v[orig])
    return Game(k, table)


def game_to_vector(v):
    """Values on nonempty coalitions in canonical order (coordinates of the game space)."""
    return tuple(v[m] for m in coalitions(v.n))


def vector_to_game(n, vec):
    order = coalitions(n)
    if len(vec) != len(order):
        raise ValueError(f"expected {len(order)} coordinates for n={n}, got {len(vec)}")
    table = [ZERO] * (1 << n)
    for m, x in zip(order, vec):
        table[m] = as_fraction(x)
    return Game(n, table)
