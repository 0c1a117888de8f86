"""Membership tests for classes of games.

Purely combinatorial classes are decided on an integer rescaling of the
worth table.  Balancedness, exactness and total balancedness are decided
by exact LPs over the core.
"""
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Any, Optional

from .errors import NotInClass, PlayerCountOutOfRange
from .game import (
    MobiusCoeffs,
    coalition_label,
    coalitions,
    grand,
    mobius,
    mobius_inverse,
    size,
    subgame,
    subsets,
)
from .lp import solve_system
from .polyhedra import HPolytope

MAX_BALANCED = 8
MAX_EXACT = 6


@dataclass(frozen=True)
class Flag:
    """Outcome of one membership test; ``witness`` explains a failure (or certifies success)."""

    holds: Optional[bool]
    witness: Any = None

    def __bool__(self):
        return bool(self.holds)


@dataclass(frozen=True)
class ClassReport:
    weakly_superadditive: Flag
    monotone: Flag
    supermodular: Flag
    totally_monotone: Flag
    zero_normalized: Flag
    zero_monotone: Flag
    additive: Flag
    balanced: Flag
    exact: Flag
    totally_balanced: Flag

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def chain_holds(self):
        """Check totally monotone => supermodular => exact => totally balanced => balanced.

        The implications are transitive, so every decided pair along the
        chain is compared; undecided (``None``) flags are skipped.
        """
        chain = [self.totally_monotone, self.supermodular, self.exact, self.totally_balanced, self.balanced]
        decided = [f.holds for f in chain if f.holds is not None]
        for k, a in enumerate(decided):
            if a and not all(decided[k:]):
                return False
        return True


def _int_table(v):
    den = lcm(*(x.denominator for x in v.values))
    return [int(x * den) for x in v.values]


# -- combinatorial classes ----------------------------------------------------

def weakly_superadditive_violation(v):
    t = _int_table(v)
    full = grand(v.n)
    for a in range(full + 1):
        for i in range(v.n):
            bit = 1 << i
            if not a & bit and t[a | bit] < t[a] + t[bit]:
                return (a, i + 1)
    return None


def monotone_violation(v):
    t = _int_table(v)
    full = grand(v.n)
    for a in range(full + 1):
        for i in range(v.n):
            bit = 1 << i
            if not a & bit and t[a | bit] < t[a]:
                return (a, a | bit)
    return None


def supermodular_violation(v):
    """Local test on pairs ``(A+i, A+j)``; equivalent to the full definition."""
    t = _int_table(v)
    full = grand(v.n)
    for a in range(full + 1):
        for i in range(v.n):
            bi = 1 << i
            if a & bi:
                continue
            for j in range(i + 1, v.n):
                bj = 1 << j
                if a & bj:
                    continue
                if t[a | bi | bj] + t[a] < t[a | bi] + t[a | bj]:
                    return (a | bi, a | bj)
    return None


def supermodular_violation_definitional(v):
    t = _int_table(v)
    full = grand(v.n)
    for a in range(full + 1):
        for b in range(a + 1, full + 1):
            if t[a | b] + t[a & b] < t[a] + t[b]:
                return (a, b)
    return None


def totally_monotone_violation(v):
    """A coalition ``|A| >= 2`` with a negative Harsanyi dividend, if any."""
    m = mobius(v)
    for a in coalitions(v.n):
        if size(a) >= 2 and m[a] < 0:
            return a
    return None


def totally_monotone_violation_definitional(v, max_k=None):
    """Search families of ``k >= 2`` distinct coalitions violating the inclusion-exclusion inequality.

    Repeated sets never matter, so distinct families suffice; ``max_k``
    caps the family size.
    """
    t = _int_table(v)
    sets = list(range(1 << v.n))
    top = len(sets) if max_k is None else max_k
    for k in range(2, top + 1):
        for fam in combinations(sets, k):
            union = 0
            for s in fam:
                union |= s
            rhs = 0
            for r in range(1, k + 1):
                sign = 1 if r % 2 else -1
                for sub in combinations(fam, r):
                    inter = sub[0]
                    for s in sub[1:]:
                        inter &= s
                    rhs += sign * t[inter]
            if t[union] < rhs:
                return fam
    return None


def zero_normalized_violation(v):
    for i in range(v.n):
        if v[1 << i] != 0:
            return i + 1
    return None


def additive_violation(v):
    t = _int_table(v)
    for a in coalitions(v.n):
        if t[a] != sum(t[1 << (i - 1)] for i in range(1, v.n + 1) if a >> (i - 1) & 1):
            return a
    return None


def is_weakly_superadditive(v):
    return weakly_superadditive_violation(v) is None


def is_monotone(v):
    return monotone_violation(v) is None


def is_supermodular(v):
    return supermodular_violation(v) is None


def is_totally_monotone(v):
    return totally_monotone_violation(v) is None


def is_zero_normalized(v):
    return zero_normalized_violation(v) is None


def is_zero_monotone(v):
    return is_zero_normalized(v) and is_monotone(v)


def is_additive(v):
    return additive_violation(v) is None


# -- core-based classes -------------------------------------------------------

@dataclass(frozen=True)
class BalanceCertificate:
    """Either a core point or balancing weights ``{mask: weight}`` with ``sum w_A v(A) > v(N)``."""

    balanced: bool
    core_point: Optional[tuple] = None
    weights: Optional[dict] = None

    def __bool__(self):
        return self.balanced


def _core_rows(v):
    full = grand(v.n)
    masks = [a for a in coalitions(v.n) if a != full]
    rows = [(tuple(1 if a >> j & 1 else 0 for j in range(v.n)), v[a]) for a in masks]
    eq = [((1,) * v.n, v[full])]
    return masks, rows, eq


def is_balanced(v):
    """Decide core nonemptiness; returns a :class:`BalanceCertificate` (truthy iff balanced)."""
    if v.n > MAX_BALANCED:
        raise PlayerCountOutOfRange(f"balancedness is decided for n <= {MAX_BALANCED}")
    masks, rows, eq = _core_rows(v)
    res = solve_system([0] * v.n, rows, eq)
    if res.feasible:
        return BalanceCertificate(True, core_point=res.point)
    scale = -res.duals_eq[0]
    weights = {a: y / scale for a, y in zip(masks, res.duals_ineq) if y}
    return BalanceCertificate(False, weights=weights)


def exactness_violation(v):
    """``None`` if exact; else a coalition whose worth is not attained as a core minimum (or ``"unbalanced"``)."""
    if v.n > MAX_EXACT:
        raise PlayerCountOutOfRange(f"exactness is decided for n <= {MAX_EXACT}")
    masks, rows, eq = _core_rows(v)
    if not solve_system([0] * v.n, rows, eq).feasible:
        return "unbalanced"
    for a, (normal, worth) in zip(masks, rows):
        res = solve_system(normal, rows, eq, "min")
        if res.value != worth:
            return a
    return None


def is_exact(v):
    return exactness_violation(v) is None


def totally_balanced_violation(v):
    if v.n > MAX_EXACT:
        raise PlayerCountOutOfRange(f"total balancedness is decided for n <= {MAX_EXACT}")
    for a in coalitions(v.n):
        if not is_balanced(subgame(v, a)):
            return a
    return None


def is_totally_balanced(v):
    return totally_balanced_violation(v) is None


def classify(v, lp=True):
    """Decide every class flag for ``v``.

    LP-backed flags are decided for ``n <= 8`` (balanced) and ``n <= 6``
    (exact, totally balanced) and left as ``Flag(None)`` above those bounds
    or when ``lp`` is false.
    """
    if lp and v.n > MAX_BALANCED:
        raise PlayerCountOutOfRange(f"LP-backed class flags need n <= {MAX_BALANCED}")

    def flag(w):
        return Flag(w is None, w)

    sm = supermodular_violation(v)
    if v.n <= 5 and (sm is None) != (supermodular_violation_definitional(v) is None):
        raise AssertionError(f"supermodularity tests disagree on {v!r}")
    tm = totally_monotone_violation(v)
    if v.n <= 4 and tm is None:
        fam = totally_monotone_violation_definitional(v, max_k=3)
        if fam is not None:
            raise AssertionError(f"dividend test accepts {v!r} but family {fam} violates total monotonicity")
    zn = zero_normalized_violation(v)
    mono = monotone_violation(v)
    zm_witness = None if zn is None and mono is None else ("zero_normalized", zn) if zn is not None else ("monotone", mono)

    balanced = exact = tb = Flag(None)
    if lp and v.n <= MAX_BALANCED:
        cert = is_balanced(v)
        balanced = Flag(cert.balanced, cert.core_point if cert.balanced else cert.weights)
        if v.n <= MAX_EXACT:
            exact = flag(exactness_violation(v))
            tb = flag(totally_balanced_violation(v))
    return ClassReport(
        weakly_superadditive=flag(weakly_superadditive_violation(v)),
        monotone=flag(mono),
        supermodular=flag(sm),
        totally_monotone=flag(tm),
        zero_normalized=flag(zn),
        zero_monotone=flag(zm_witness),
        additive=flag(additive_violation(v)),
        balanced=balanced,
        exact=exact,
        totally_balanced=tb,
    )


# -- order decompositions -----------------------------------------------------

def jordan_decompose_tm(v):
    """Minimal ``(w1, w2)`` of nonnegative totally monotone games with ``v = w1 - w2``.

    ``w1`` and ``w2`` collect the positive and negative Harsanyi dividends.
    """
    m = mobius(v)
    pos = [max(c, Fraction(0)) for c in m.coeffs]
    neg = [max(-c, Fraction(0)) for c in m.coeffs]
    return mobius_inverse(MobiusCoeffs(v.n, pos)), mobius_inverse(MobiusCoeffs(v.n, neg))


def almost_positive_coeffs(v):
    """Nonnegative weights ``lambda_A`` (``|A| >= 2``) with ``v = sum lambda_A u_A``."""
    i = zero_normalized_violation(v)
    if i is not None:
        raise NotInClass(f"v({{{i}}}) = {v[1 << (i - 1)]} != 0", condition="zero_normalized", witness=i)
    a = totally_monotone_violation(v)
    if a is not None:
        raise NotInClass(
            f"negative dividend on {coalition_label(a)}", condition="totally_monotone", witness=a
        )
    return mobius(v)


# -- cones of zero-normalized games ------------------------------------------

def _coordinate_index(n):
    return {a: k for k, a in enumerate(coalitions(n))}


def _zero_singletons(n, index):
    d = len(index)
    return [(tuple(1 if k == index[1 << i] else 0 for k in range(d)), 0) for i in range(n)]


def tm0_cone(n):
    """H-form of the zero-normalized totally monotone games (dividends >= 0 on ``|A| >= 2``)."""
    index = _coordinate_index(n)
    d = len(index)
    ineqs = []
    for a in coalitions(n):
        if size(a) < 2:
            continue
        row = [0] * d
        for b in subsets(a):
            if b:
                row[index[b]] += -1 if size(a ^ b) % 2 else 1
        ineqs.append((tuple(row), 0))
    return HPolytope(d, ineqs, _zero_singletons(n, index))


def supermodular0_cone(n):
    """H-form of the zero-normalized supermodular games via the local inequalities."""
    index = _coordinate_index(n)
    d = len(index)
    ineqs = []
    for a in range(1 << n):
        for i in range(n):
            for j in range(i + 1, n):
                bi, bj = 1 << i, 1 << j
                if a & (bi | bj):
                    continue
                row = [0] * d
                row[index[a | bi | bj]] += 1
                row[index[a | bi]] -= 1
                row[index[a | bj]] -= 1
                if a:
                    row[index[a]] += 1
                ineqs.append((tuple(row), 0))
    return HPolytope(d, ineqs, _zero_singletons(n, index))


def zero_monotone_cone(n):
    """H-form of the zero-monotone games."""
    index = _coordinate_index(n)
    d = len(index)
    ineqs = []
    for a in range(1, 1 << n):
        for i in range(n):
            bit = 1 << i
            if a & bit:
                continue
            row = [0] * d
            row[index[a | bit]] += 1
            row[index[a]] -= 1
            ineqs.append((tuple(row), 0))
    return HPolytope(d, ineqs, _zero_singletons(n, index))
