"""
Closed-form fake-degree polynomials and the classification of their zeros.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import InvalidShapeError, UnsupportedParameterError
from .qpoly import QPolynomial, exact_divide, q_multinomial, substitute_power
from .shapes import BlockDiagonalShape, b_stat, conjugate, hook_lengths, is_proper_rectangle


@dataclass(frozen=True)
class SupportClassification:
    min_maj: int
    max_maj: int
    gaps: frozenset
    is_rectangle_exception: bool

    def to_json(self):
        return {'min': self.min_maj, 'max': self.max_maj, 'gaps': sorted(self.gaps)}


@lru_cache(maxsize=4096)
def maj_gf_hook_formula(partition):
    """
    Stanley's hook formula q^b(λ) [n]_q! / Π_c [h_c]_q.

    Factors [j]_q shared by numerator and denominator are cancelled
    first; what is left is divided exactly.

    Args:
        partition (Partition): Straight shape

    Returns:
        QPolynomial: Σ_T q^maj(T) over SYT(λ)
    """
    numerator = Counter(range(2, partition.n + 1))
    denominator = Counter(h for h in hook_lengths(partition) if h > 1)
    common = numerator & denominator
    numerator -= common
    denominator -= common
    num = QPolynomial([1])
    for j in sorted(numerator.elements()):
        num = num.times_q_integer(j)
    den = QPolynomial([1])
    for h in sorted(denominator.elements()):
        den = den.times_q_integer(h)
    return exact_divide(num, den).shift(b_stat(partition))


def max_maj(partition):
    """C(n,2) - b(λ'), the largest major index on SYT(λ)."""
    return comb(partition.n, 2) - b_stat(conjugate(partition))


def support_classification(partition):
    """
    Predicted support of the fake-degree sequence.

    Every degree between b(λ) and C(n,2) - b(λ') is attained, except
    b(λ)+1 and C(n,2)-b(λ')-1 when λ is a rectangle with at least two
    rows and two columns.

    Args:
        partition (Partition): Nonempty partition

    Returns:
        SupportClassification: Bounds and gaps
    """
    if partition.n == 0:
        raise InvalidShapeError("Error: support_classification needs a nonempty partition")
    low = b_stat(partition)
    high = max_maj(partition)
    exception = is_proper_rectangle(partition)
    gaps = frozenset({low + 1, high - 1}) if exception else frozenset()
    return SupportClassification(low, high, gaps, exception)


def fake_degree_positive(partition, k):
    """Closed-form test of b_{λ,k} > 0 without building the polynomial."""
    if partition.n == 0:
        return k == 0
    support = support_classification(partition)
    return support.min_maj <= k <= support.max_maj and k not in support.gaps


def zero_pattern(poly):
    """Degrees between the lowest and highest nonzero coefficient that vanish."""
    lo = poly.min_degree
    return frozenset(k for k in range(lo, poly.degree + 1) if poly[k] == 0)


def maj_gf_block_diagonal(shape, m=1, d=1):
    """
    Fake degrees of a block diagonal shape (wreath-product formula, d = 1).

    Computes [n; |λ^(1)|, ..., |λ^(r)|]_q · Π_i f^{λ^(i)}(q^m).

    Args:
        shape (BlockDiagonalShape): Blocks λ^(1), ..., λ^(r)
        m (int): Power substituted into the block polynomials
        d (int): Cyclic quotient order; only 1 is supported

    Returns:
        QPolynomial: The generating polynomial
    """
    if d != 1:
        raise UnsupportedParameterError(
            f"Error: Only d = 1 is supported; the deformed multinomial for d = {d} is not defined here")
    if m < 1:
        raise UnsupportedParameterError(f"Error: m must be positive, got {m}")
    blocks = shape.blocks_tuple()
    result = q_multinomial(shape.n, [b.n for b in blocks])
    for block in blocks:
        result = result * substitute_power(maj_gf_hook_formula(block), m)
    return result


def wreath_fake_degrees(shape, d=1):
    """Block diagonal fake degrees with m set to the number of blocks."""
    return maj_gf_block_diagonal(shape, m=len(shape.blocks_tuple()), d=d)


def maj_gf(shape):
    """Closed-form maj generating function of a straight or block diagonal shape."""
    if isinstance(shape, BlockDiagonalShape):
        return maj_gf_block_diagonal(shape, m=1)
    return maj_gf_hook_formula(shape)
