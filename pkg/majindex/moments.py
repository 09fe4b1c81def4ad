"""
Exact moments and cumulants of maj on SYT(λ).

All values are ``fractions.Fraction``. Floats only appear downstream in
``majindex.limits``.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import UnsupportedParameterError, ZeroVarianceError
from .shapes import b_stat, hook_lengths

_BERNOULLI = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(d):
    """
    Bernoulli number B_d with B_1 = +1/2.

    Runs the Akiyama-Tanigawa triangle up to the largest index requested
    so far; the table only grows, under a lock.

    Args:
        d (int): Nonnegative index

    Returns:
        Fraction: B_d
    """
    if d < 0:
        raise UnsupportedParameterError(f"Error: Bernoulli index must be >= 0, got {d}")
    if d < len(_BERNOULLI):
        return _BERNOULLI[d]
    with _BERNOULLI_LOCK:
        if d >= len(_BERNOULLI):
            _BERNOULLI[:] = _akiyama_tanigawa(d)
    return _BERNOULLI[d]


def _akiyama_tanigawa(n):
    row = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


def power_sum_bracket(shape, d):
    """Σ_{j=1}^{n} j^d - Σ_c h_c^d as an exact integer."""
    return sum(j ** d for j in range(1, shape.n + 1)) - sum(h ** d for h in hook_lengths(shape))


def cumulant_formula(shape, d):
    """
    d-th cumulant of maj from hook lengths alone.

    κ_d = (B_d / d) [Σ_{j=1}^{n} j^d - Σ_c h_c^d]  for d >= 2.

    Args:
        shape (Partition or BlockDiagonalShape): Shape with its hook multiset
        d (int): Cumulant order, at least 2

    Returns:
        Fraction: κ_d
    """
    if d < 2:
        raise UnsupportedParameterError(f"Error: cumulant_formula needs d >= 2 (use mean_formula for d = 1), got {d}")
    return bernoulli(d) / d * power_sum_bracket(shape, d)


def mean_formula(shape):
    """b(λ) + ½ (Σ j - Σ h_c)."""
    return b_stat(shape) + Fraction(power_sum_bracket(shape, 1), 2)


@dataclass(frozen=True)
class MomentTable:
    """Raw moments, central moments and cumulants, each indexed from order 1."""

    cumulants: tuple
    central: tuple
    raw: tuple

    @property
    def order(self):
        return len(self.cumulants)

    @property
    def mean(self):
        return self.cumulants[0]

    @property
    def variance(self):
        return self.cumulants[1] if self.order >= 2 else Fraction(0)

    def cumulant(self, d):
        return self.cumulants[d - 1]

    def central_moment(self, d):
        return self.central[d - 1]

    def raw_moment(self, d):
        return self.raw[d - 1]

    def to_json(self):
        def text(values):
            return [str(v) for v in values]
        return {
            'mean': str(self.mean),
            'variance': str(self.variance),
            'cumulants': text(self.cumulants),
            'central_moments': text(self.central),
            'raw_moments': text(self.raw),
        }


def _moments_from_cumulants(kappas):
    mu = [Fraction(1)]
    for d in range(1, len(kappas) + 1):
        value = kappas[d - 1]
        for m in range(1, d):
            value += comb(d - 1, m - 1) * kappas[m - 1] * mu[d - m]
        mu.append(value)
    return tuple(mu[1:])


def _cumulants_from_moments(raw):
    mu = (Fraction(1),) + tuple(raw)
    kappas = []
    for d in range(1, len(raw) + 1):
        value = mu[d]
        for m in range(1, d):
            value -= comb(d - 1, m - 1) * kappas[m - 1] * mu[d - m]
        kappas.append(value)
    return tuple(kappas)


def cumulants_to_moments(kappas, D=None):
    """
    Raw and central moments from cumulants κ_1..κ_D.

    Uses μ_d = κ_d + Σ_{m=1}^{d-1} C(d-1, m-1) κ_m μ_{d-m}; the central
    moments come from the same recurrence with κ_1 replaced by 0.

    Args:
        kappas (sequence): κ_1, κ_2, ... as Fractions or integers
        D (int): Highest order kept (defaults to len(kappas))

    Returns:
        MomentTable: The three consistent sequences
    """
    kappas = tuple(Fraction(k) for k in kappas)
    if D is not None:
        if D > len(kappas):
            raise UnsupportedParameterError(f"Error: Need {D} cumulants, got {len(kappas)}")
        kappas = kappas[:D]
    if not kappas:
        raise UnsupportedParameterError("Error: At least one cumulant is required")
    raw = _moments_from_cumulants(kappas)
    central = _moments_from_cumulants((Fraction(0),) + kappas[1:])
    return MomentTable(kappas, central, raw)


def moments_from_gf(poly, D):
    """
    Exact moments of the distribution P[X = k] = c_k / p(1).

    Args:
        poly (QPolynomial): Nonzero polynomial with nonnegative coefficients
        D (int): Highest order

    Returns:
        MomentTable: Moments, central moments and cumulants up to D
    """
    if poly.is_zero():
        raise UnsupportedParameterError("Error: Cannot take moments of the zero polynomial")
    if any(c < 0 for c in poly.coeffs):
        raise UnsupportedParameterError("Error: Coefficients must be nonnegative to define a distribution")
    if D < 1:
        raise UnsupportedParameterError(f"Error: D must be >= 1, got {D}")
    total = poly(1)
    raw = tuple(
        Fraction(sum(c * k ** d for k, c in enumerate(poly.coeffs) if c), total)
        for d in range(1, D + 1)
    )
    return cumulants_to_moments(_cumulants_from_moments(raw))


def formula_moments(shape, D):
    """MomentTable built from mean_formula and cumulant_formula only."""
    kappas = [mean_formula(shape)] + [cumulant_formula(shape, d) for d in range(2, D + 1)]
    return cumulants_to_moments(kappas)


def normalized_cumulant(shape, d):
    """
    κ_d / κ_2^{d/2}, exact for even d and 0 for odd d >= 3.

    Args:
        shape (Partition or BlockDiagonalShape): Shape with positive variance
        d (int): Order, at least 2

    Returns:
        Fraction: Standardized cumulant
    """
    if d < 2:
        raise UnsupportedParameterError(f"Error: normalized_cumulant needs d >= 2, got {d}")
    variance = cumulant_formula(shape, 2)
    if variance == 0:
        raise ZeroVarianceError(f"Error: Shape {shape} has a single maj value; variance is zero")
    if d % 2:
        return Fraction(0)
    return cumulant_formula(shape, d) / variance ** (d // 2)
