"""
Exact polynomials in q with arbitrary-precision integer coefficients.

Coefficients are stored densely from degree 0 with trailing zeros
trimmed, so two polynomials are equal iff their coefficient tuples are.
"""

from dataclasses import dataclass, field

from .errors import NonExactDivisionError, UnsupportedParameterError


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPolynomial:
    """Polynomial Σ c_k q^k over the integers."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        object.__setattr__(self, 'coeffs', _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def q_integer(cls, m):
        """[m]_q = 1 + q + ... + q^(m-1)."""
        return cls([1] * m)

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def min_degree(self):
        """Lowest degree with a nonzero coefficient; -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return '0'
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = 'q' if k == 1 else f'q^{k}'
                terms.append(power if c == 1 else f'{c}*{power}')
        return ' + '.join(terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[k] + other[k] for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, q):
        """Evaluate at an integer (or Fraction) by Horner's rule."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def times_q_integer(self, m):
        """Multiply by [m]_q using a running window sum."""
        if self.is_zero():
            return self
        out = []
        window = 0
        src = self.coeffs
        for k in range(len(src) + m - 1):
            if k < len(src):
                window += src[k]
            if k - m >= 0:
                window -= src[k - m]
            out.append(window)
        return QPolynomial(out)

    def shift(self, k):
        """Multiply by q^k."""
        if self.is_zero() or k == 0:
            return self
        return QPolynomial([0] * k + list(self.coeffs))

    def reverse(self):
        """Reverse the coefficient sequence on its nonzero support."""
        if self.is_zero():
            return self
        lo = self.min_degree
        return QPolynomial(reversed(self.coeffs[lo:])).shift(lo)

    def to_json(self):
        """JSON form: lowest nonzero degree and decimal-string coefficients."""
        if self.is_zero():
            return {'min_degree': 0, 'coeffs': []}
        lo = self.min_degree
        return {'min_degree': lo, 'coeffs': [str(c) for c in self.coeffs[lo:]]}

    @classmethod
    def from_json(cls, obj):
        coeffs = [int(c) for c in obj['coeffs']]
        return cls(coeffs).shift(int(obj['min_degree']))


def q_factorial(n):
    """
    [n]_q! = Π_{j=1}^{n} [j]_q.

    Args:
        n (int): Nonnegative integer

    Returns:
        QPolynomial: Degree C(n,2), value n! at q = 1
    """
    if n < 0:
        raise UnsupportedParameterError(f"Error: q_factorial needs n >= 0, got {n}")
    result = QPolynomial([1])
    for j in range(2, n + 1):
        result = result.times_q_integer(j)
    return result


def exact_divide(num, den):
    """
    Divide two polynomials, insisting on a zero remainder.

    Args:
        num (QPolynomial): Dividend
        den (QPolynomial): Nonzero divisor

    Returns:
        QPolynomial: p with p * den == num

    Raises:
        NonExactDivisionError: If den does not divide num over the integers
    """
    if den.is_zero():
        raise NonExactDivisionError("Error: Division by the zero polynomial")
    if num.is_zero():
        return QPolynomial()
    rem = list(num.coeffs)
    d = den.coeffs
    lead = d[-1]
    dd = len(d) - 1
    if len(rem) - 1 < dd:
        raise NonExactDivisionError(f"Error: {den} does not divide {num}")
    quotient = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if not c:
            continue
        factor, leftover = divmod(c, lead)
        if leftover:
            raise NonExactDivisionError(f"Error: {den} does not divide {num}")
        quotient[k - dd] = factor
        base = k - dd
        for i, dc in enumerate(d):
            if dc:
                rem[base + i] -= factor * dc
    if any(rem[:dd]):
        raise NonExactDivisionError(f"Error: {den} does not divide {num}")
    return QPolynomial(quotient)


def q_multinomial(n, composition):
    """
    q-multinomial coefficient [n; α_1, ..., α_r]_q.

    Args:
        n (int): Total
        composition (sequence): Nonnegative parts summing to n

    Returns:
        QPolynomial: [n]_q! / Π [α_i]_q!
    """
    composition = tuple(composition)
    if any(a < 0 for a in composition) or sum(composition) != n:
        raise UnsupportedParameterError(
            f"Error: Composition {composition} does not sum to {n}")
    den = QPolynomial([1])
    for a in composition:
        den = den * q_factorial(a)
    return exact_divide(q_factorial(n), den)


def substitute_power(p, m):
    """Return p(q^m)."""
    if m < 1:
        raise UnsupportedParameterError(f"Error: substitute_power needs m >= 1, got {m}")
    if m == 1 or p.is_zero():
        return p
    out = [0] * (m * p.degree + 1)
    for k, c in enumerate(p.coeffs):
        out[m * k] = c
    return QPolynomial(out)


@dataclass(frozen=True)
class CoefficientShape:
    """Shape predicates of a coefficient sequence on its nonzero support."""

    unimodal: bool
    parity_unimodal: bool
    log_concave: bool
    symmetric: bool
    internal_zeros: tuple = field(default_factory=tuple)

    def to_json(self):
        return {
            'unimodal': self.unimodal,
            'parity_unimodal': self.parity_unimodal,
            'log_concave': self.log_concave,
            'symmetric': self.symmetric,
            'internal_zeros': list(self.internal_zeros),
        }


def is_unimodal(seq):
    """True if seq weakly increases to a peak and then weakly decreases."""
    k = 0
    size = len(seq)
    while k + 1 < size and seq[k] <= seq[k + 1]:
        k += 1
    while k + 1 < size and seq[k] >= seq[k + 1]:
        k += 1
    return k + 1 >= size


def is_log_concave(seq):
    return all(seq[k] * seq[k] >= seq[k - 1] * seq[k + 1] for k in range(1, len(seq) - 1))


def coefficient_shape(p):
    """
    Classify the coefficient sequence of a nonzero polynomial.

    All predicates look only at the coefficients between the lowest and
    the highest nonzero degree. Parity-unimodality checks the even- and
    odd-indexed subsequences separately.

    Args:
        p (QPolynomial): Nonzero polynomial

    Returns:
        CoefficientShape: The four flags and the internal zero degrees
    """
    if p.is_zero():
        raise UnsupportedParameterError("Error: coefficient_shape is undefined for the zero polynomial")
    lo = p.min_degree
    seq = p.coeffs[lo:]
    return CoefficientShape(
        unimodal=is_unimodal(seq),
        parity_unimodal=is_unimodal(seq[0::2]) and is_unimodal(seq[1::2]),
        log_concave=is_log_concave(seq),
        symmetric=seq == seq[::-1],
        internal_zeros=tuple(lo + k for k, c in enumerate(seq) if c == 0),
    )

