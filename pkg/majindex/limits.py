"""
Limit laws for the standardized major index.

Exact rationals are kept up to the standardization step. There the
irrational σ is evaluated with mpmath at the configured precision and
everything downstream is a float.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

import mpmath as mp
import numpy as np
import pandas as pd

from .config import precision
from .errors import (
    ContradictoryLimitError,
    InvalidShapeError,
    UnsupportedLawError,
    UnsupportedParameterError,
    ZeroVarianceError,
)
from .fakedeg import maj_gf
from .moments import cumulant_formula, mean_formula, normalized_cumulant, power_sum_bracket
from .shapes import aft, hook_lengths

logger = logging.getLogger(__name__)

INFINITY = math.inf

NORMAL = 'normal'
IRWIN_HALL_STAR = 'irwin-hall-star'
DISCRETE = 'discrete'

SMALL_HOOK = 'small-hook'
LARGE_HOOK = 'large-hook'
LARGE_HOOK_MIN_N = 10


def _to_fraction(value):
    """Exact binary value of an mpf (or float) as a Fraction."""
    value = mp.mpf(value)
    man, exp = abs(value).man_exp
    fraction = Fraction(int(man)) * Fraction(2) ** exp
    return -fraction if value < 0 else fraction


def _mpf(value):
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def normal_cdf(t):
    """Standard normal CDF Φ(t)."""
    with mp.workdps(precision()):
        return float(mp.ncdf(_mpf(t)))


def irwin_hall_star_cdf(M, t):
    """
    CDF of the standardized Irwin-Hall law (IH_M - M/2) / √(M/12).

    IH_0 is the constant 0, so its standardized law is read as a unit
    atom at 0.

    The point x = M/2 + t√(M/12) is rounded once to the working precision;
    the piecewise polynomial
    F(x) = (1/M!) Σ_{k=0}^{⌊x⌋} (-1)^k C(M, k) (x - k)^M
    is then summed exactly.

    Args:
        M (int): Number of uniform summands, at least 0
        t (float): Evaluation point

    Returns:
        float: Value in [0, 1]
    """
    if M < 0:
        raise UnsupportedParameterError(f"Error: Irwin-Hall order must be >= 0, got {M}")
    if M == 0:
        return 1.0 if t >= 0 else 0.0
    if mp.isinf(t):
        return 1.0 if t > 0 else 0.0
    with mp.workdps(precision()):
        x = _to_fraction(mp.mpf(M) / 2 + _mpf(t) * mp.sqrt(mp.mpf(M) / 12))
    if x <= 0:
        return 0.0
    if x >= M:
        return 1.0
    total = sum((-1) ** k * math.comb(M, k) * (x - k) ** M for k in range(math.floor(x) + 1))
    return float(total / math.factorial(M))


@dataclass(frozen=True)
class ReferenceLaw:
    kind: str
    M: int = None

    @classmethod
    def normal(cls):
        return cls(NORMAL)

    @classmethod
    def irwin_hall_star(cls, M):
        if M < 0:
            raise UnsupportedParameterError(f"Error: Irwin-Hall order must be >= 0, got {M}")
        return cls(IRWIN_HALL_STAR, M)

    @classmethod
    def discrete(cls):
        return cls(DISCRETE)

    @classmethod
    def parse(cls, text):
        """Read ``normal`` or ``ih:M``."""
        text = text.strip().lower()
        if text == NORMAL:
            return cls.normal()
        if text.startswith('ih:'):
            try:
                return cls.irwin_hall_star(int(text[3:]))
            except ValueError:
                pass
        raise UnsupportedLawError(f"Error: Unknown law {text!r}; use 'normal' or 'ih:M'")

    def cdf(self, t):
        if self.kind == NORMAL:
            return normal_cdf(t)
        if self.kind == IRWIN_HALL_STAR:
            return irwin_hall_star_cdf(self.M, t)
        raise UnsupportedLawError("Error: A discrete limit has no fixed continuous CDF")

    def __str__(self):
        if self.kind == IRWIN_HALL_STAR:
            return f"ih:{self.M}"
        return self.kind


@dataclass(frozen=True)
class LimitLaw:
    case: str
    law: ReferenceLaw = None

    @property
    def converges(self):
        return self.law is not None

    def to_json(self):
        return {'case': self.case, 'law': str(self.law) if self.law else None}


def classify_limit(aft_limit, size_limit, eventually_constant_normalized):
    """
    Decide the limit law of a family from its declared limiting behavior.

    An aft limit of 0 with unbounded size (one row or one column) lands
    in case (ii) with the degenerate law ``ih:0``.

    Args:
        aft_limit (int or float): Limit of aft, ``INFINITY`` if unbounded
        size_limit (int or float): Limit of |λ|, ``INFINITY`` if unbounded
        eventually_constant_normalized (bool): Normalized laws eventually constant

    Returns:
        LimitLaw: Case (i) normal, (ii) Irwin-Hall, (iii) discrete, or divergent
    """
    aft_unbounded = aft_limit == INFINITY
    size_unbounded = size_limit == INFINITY
    if not aft_unbounded and (aft_limit < 0 or aft_limit != int(aft_limit)):
        raise UnsupportedParameterError(f"Error: aft limit must be a nonnegative integer, got {aft_limit}")
    if aft_unbounded and not size_unbounded:
        raise ContradictoryLimitError("Error: aft cannot grow without bound while the size stays finite")
    if not size_unbounded and aft_limit > size_limit:
        raise ContradictoryLimitError(f"Error: aft limit {aft_limit} exceeds the size limit {size_limit}")
    if aft_unbounded:
        return LimitLaw('(i)', ReferenceLaw.normal())
    if size_unbounded:
        return LimitLaw('(ii)', ReferenceLaw.irwin_hall_star(int(aft_limit)))
    if eventually_constant_normalized:
        return LimitLaw('(iii)', ReferenceLaw.discrete())
    return LimitLaw('divergent')


@dataclass(frozen=True)
class NormalizedDistribution:
    """
    Atoms of (X - μ)/σ.

    ``offsets`` hold the exact centred values k - μ and ``variance`` the
    exact σ²; ``points`` are the standardized floats.
    """

    offsets: tuple
    masses: tuple
    variance: Fraction
    points: tuple

    @classmethod
    def from_atoms(cls, values, masses):
        values = tuple(Fraction(v) for v in values)
        masses = tuple(Fraction(m) for m in masses)
        if sum(masses) != 1:
            raise UnsupportedParameterError("Error: Masses must sum to 1")
        mean = sum(v * m for v, m in zip(values, masses))
        variance = sum((v - mean) ** 2 * m for v, m in zip(values, masses))
        if variance == 0:
            raise ZeroVarianceError("Error: Cannot standardize a distribution with zero variance")
        offsets = tuple(v - mean for v in values)
        with mp.workdps(precision()):
            sigma = mp.sqrt(_mpf(variance))
            points = tuple(float(_mpf(o) / sigma) for o in offsets)
        return cls(offsets, masses, variance, points)

    @classmethod
    def point_mass(cls):
        """A unit atom at 0, the degenerate standardized law."""
        return cls((Fraction(0),), (Fraction(1),), Fraction(0), (0.0,))

    def to_json(self):
        return {
            'variance': str(self.variance),
            'atoms': [{'offset': str(o), 'point': p, 'mass': str(m)}
                      for o, p, m in zip(self.offsets, self.points, self.masses)],
        }


def normalized_distribution(shape):
    """
    Standardize the exact maj distribution of SYT(shape).

    Args:
        shape (Partition or BlockDiagonalShape): Shape with positive variance

    Returns:
        NormalizedDistribution: Atoms in increasing order
    """
    poly = maj_gf(shape)
    total = poly(1)
    support = [(k, c) for k, c in enumerate(poly.coeffs) if c]
    try:
        return NormalizedDistribution.from_atoms([k for k, _ in support], [Fraction(c, total) for _, c in support])
    except ZeroVarianceError:
        raise ZeroVarianceError(f"Error: Shape {shape} has a single maj value; variance is zero")


def _sign(x):
    return (x > 0) - (x < 0)


def same_normalized_distribution(first, second):
    """
    Exact equality of two standardized laws.

    Atoms o/σ and o'/σ' agree when their signs agree and o²σ'² = o'²σ².
    """
    if len(first.masses) != len(second.masses) or first.masses != second.masses:
        return False
    for a, b in zip(first.offsets, second.offsets):
        if _sign(a) != _sign(b) or a * a * second.variance != b * b * first.variance:
            return False
    return True


def ks_distance(dist, law):
    """
    Kolmogorov distance between an atomic law and a continuous reference.

    The supremum is attained at an atom, on one side or the other of its
    jump, so only 2 * len(atoms) comparisons are needed.

    Args:
        dist (NormalizedDistribution): Standardized atomic law
        law (ReferenceLaw): Normal or Irwin-Hall reference

    Returns:
        float: sup_t |F(t) - G(t)|
    """
    if law.kind == DISCRETE:
        raise UnsupportedLawError("Error: Kolmogorov distance needs a continuous reference law")
    upper = np.array([float(f) for f in accumulate(dist.masses)])
    lower = upper - np.array([float(m) for m in dist.masses])
    reference = np.array([law.cdf(p) for p in dist.points])
    return float(max(np.max(np.abs(lower - reference)), np.max(np.abs(upper - reference))))


@dataclass(frozen=True)
class HookBoundReport:
    shape: object
    d: int
    n: int
    aft: int
    bracket: int
    max_hook: int
    regime: str
    applicable: bool
    lower: Fraction
    upper: Fraction
    holds: bool
    theta_ratio: Fraction = None

    def to_json(self):
        return {
            'shape': str(self.shape), 'd': self.d, 'n': self.n, 'aft': self.aft,
            'bracket': str(self.bracket), 'max_hook': self.max_hook, 'regime': self.regime,
            'applicable': self.applicable, 'lower': str(self.lower), 'upper': str(self.upper),
            'holds': self.holds,
            'theta_ratio': None if self.theta_ratio is None else str(self.theta_ratio),
        }


def check_hook_bounds(shape, d):
    """
    Evaluate the bracket Σ j^d - Σ h_c^d against its two-sided bounds.

    When every hook is below 0.8n:
        n^{d+1}/(26(d+1)) - 2(0.8)^d n^d < bracket < n^{d+1}/(d+1) + n^d.
    Otherwise (and n >= 10):
        aft·⌊n/10⌋^d / d <= bracket <= 2·aft·(n^d + d·n^{d-1}).

    The large-hook bounds are still evaluated when n < 10, but the report
    marks them as not applicable.

    Args:
        shape (Partition or BlockDiagonalShape): Nonempty shape
        d (int): Positive degree

    Returns:
        HookBoundReport: Regime, bounds and the ratio bracket / (aft·n^d)
    """
    if d < 1:
        raise UnsupportedParameterError(f"Error: Degree must be positive, got {d}")
    n = shape.n
    if n == 0:
        raise InvalidShapeError("Error: Hook bounds need a nonempty shape")
    bracket = power_sum_bracket(shape, d)
    max_hook = hook_lengths(shape)[0]
    a = aft(shape)
    if 5 * max_hook < 4 * n:
        regime = SMALL_HOOK
        applicable = True
        lower = Fraction(n ** (d + 1), 26 * (d + 1)) - 2 * Fraction(4, 5) ** d * n ** d
        upper = Fraction(n ** (d + 1), d + 1) + n ** d
        holds = lower < bracket < upper
    else:
        regime = LARGE_HOOK
        applicable = n >= LARGE_HOOK_MIN_N
        lower = Fraction(a * (n // 10) ** d, d)
        upper = Fraction(2 * a * (n ** d + d * n ** (d - 1)))
        holds = lower <= bracket <= upper
    theta = Fraction(bracket, a * n ** d) if a else None
    return HookBoundReport(shape, d, n, a, bracket, max_hook, regime, applicable, lower, upper, holds, theta)


def normalized_cumulant_scaling(shape, d):
    """|κ_d*| · aft^{d/2 - 1}, which stays within fixed bands along a family."""
    if d < 4 or d % 2:
        raise UnsupportedParameterError(f"Error: Scaling is defined for even d >= 4, got {d}")
    return abs(normalized_cumulant(shape, d)) * aft(shape) ** (d // 2 - 1)


@dataclass(frozen=True)
class LocalLimitReport:
    shape: object
    n: int
    aft: int
    mean: Fraction
    variance: Fraction
    sigma: float
    deviation: float
    argmax: int
    ratio: float

    def to_json(self):
        return {
            'shape': str(self.shape), 'n': self.n, 'aft': self.aft,
            'mean': str(self.mean), 'variance': str(self.variance), 'sigma': self.sigma,
            'deviation': self.deviation, 'argmax': self.argmax, 'ratio': self.ratio,
        }


def local_limit_deviation(shape):
    """
    max_k |P[maj = k] - f(k)| with f the N(κ_1, κ_2) density.

    The report also carries D·σ·aft, which stays bounded if the local
    limit holds at rate 1/(σ·aft). Nothing is asserted.

    Args:
        shape (Partition or BlockDiagonalShape): Shape with positive variance

    Returns:
        LocalLimitReport: Deviation, where it is attained, and the ratio
    """
    mean = mean_formula(shape)
    variance = cumulant_formula(shape, 2)
    if variance == 0:
        raise ZeroVarianceError(f"Error: Shape {shape} has a single maj value; variance is zero")
    poly = maj_gf(shape)
    total = poly(1)
    a = aft(shape)
    with mp.workdps(precision()):
        mu = _mpf(mean)
        sigma = mp.sqrt(_mpf(variance))
        best, argmax = mp.mpf(0), poly.min_degree
        for k in range(poly.min_degree, poly.degree + 1):
            gap = abs(mp.mpf(poly[k]) / total - mp.npdf(k, mu, sigma))
            if gap > best:
                best, argmax = gap, k
        ratio = best * sigma * a
        return LocalLimitReport(shape, shape.n, a, mean, variance, float(sigma), float(best), argmax, float(ratio))


def gaussian_overlay(shape):
    """
    Histogram of maj with a scaled Gaussian approximation.

    Returns:
        pandas.DataFrame: Columns ``k``, ``count`` and ``gaussian`` over the support range
    """
    poly = maj_gf(shape)
    total = poly(1)
    mean = mean_formula(shape)
    variance = cumulant_formula(shape, 2)
    ks = list(range(poly.min_degree, poly.degree + 1))
    with mp.workdps(precision()):
        if variance == 0:
            gaussian = [float(total) if k == mean else 0.0 for k in ks]
        else:
            mu, sigma = _mpf(mean), mp.sqrt(_mpf(variance))
            gaussian = [float(total * mp.npdf(k, mu, sigma)) for k in ks]
    return pd.DataFrame({'k': ks, 'count': [str(poly[k]) for k in ks], 'gaussian': gaussian})


def diagnose_family(shapes, law):
    """
    Distance of each shape's normalized law to a reference law.

    Args:
        shapes (iterable): Shapes of a family, in order
        law (ReferenceLaw): Continuous reference law

    Returns:
        pandas.DataFrame: Columns shape, n, aft, ks, kappa4_star
    """
    rows = []
    for shape in shapes:
        dist = normalized_distribution(shape)
        rows.append({
            'shape': str(shape),
            'n': shape.n,
            'aft': aft(shape),
            'ks': ks_distance(dist, law),
            'kappa4_star': float(normalized_cumulant(shape, 4)),
        })
        logger.debug("Diagnosed %s against %s", shape, law)
    return pd.DataFrame(rows, columns=['shape', 'n', 'aft', 'ks', 'kappa4_star'])


def aft_trend(shapes):
    """
    Describe how aft and size move along a finite prefix of a family.

    The report lists which limit cases the prefix is consistent with; a
    finite prefix never decides the limit.
    """
    shapes = list(shapes)
    afts = [aft(s) for s in shapes]
    sizes = [s.n for s in shapes]
    tail = len(shapes) // 2
    aft_tail, size_tail = afts[tail:], sizes[tail:]
    aft_growing = len(aft_tail) > 1 and all(a < b for a, b in zip(aft_tail, aft_tail[1:]))
    aft_settled = len(set(aft_tail)) == 1
    size_growing = len(size_tail) > 1 and all(a < b for a, b in zip(size_tail, size_tail[1:]))
    size_settled = len(set(size_tail)) == 1
    consistent = []
    if aft_growing and size_growing:
        consistent.append('(i)')
    if aft_settled and size_growing and afts[-1] >= 1:
        consistent.append('(ii)')
    if aft_settled and size_settled:
        consistent.append('(iii)')
    return {
        'aft': afts,
        'sizes': sizes,
        'aft_growing': aft_growing,
        'size_growing': size_growing,
        'consistent_with': consistent,
    }
