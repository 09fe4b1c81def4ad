"""
Standard and reverse standard Young tableaux, descents and maj.

A tableau is stored as its rows in the stacked picture: for a block
diagonal shape the rows of block 1 come first, then block 2, and so on.
Enumeration works on row words (``word[v - 1]`` is the row of ``v``),
visited in lexicographic order, so every stream is reproducible.
"""

from collections import defaultdict
from dataclasses import dataclass

from .config import resolve_cap
from .errors import EnumerationCapError, InvalidShapeError
from .qpoly import QPolynomial
from .shapes import Partition, hook_grid, hook_lengths, shape_from_json


@dataclass(frozen=True)
class StandardTableau:
    shape: object
    rows: tuple

    @classmethod
    def from_rows(cls, shape, rows):
        """
        Build a tableau and check that it is standard.

        Args:
            shape (Partition or BlockDiagonalShape): Target shape
            rows (sequence): Rows in the stacked picture

        Returns:
            StandardTableau: Validated tableau
        """
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        is_valid, message = validate_filling(shape, rows, increasing=True)
        if not is_valid:
            raise InvalidShapeError(message)
        return cls(shape, rows)

    @classmethod
    def from_json(cls, obj, shape=None):
        """Read ``{"shape": ..., "rows": ...}`` or a bare list of rows."""
        if isinstance(obj, dict):
            rows = obj['rows']
            if shape is None and 'shape' in obj:
                shape = shape_from_json(obj['shape'])
        else:
            rows = obj
        if shape is None:
            shape = Partition(tuple(len(r) for r in rows))
        return cls.from_rows(shape, rows)

    @property
    def n(self):
        return self.shape.n

    def row_word(self):
        word = [0] * self.n
        for r, row in enumerate(self.rows):
            for v in row:
                word[v - 1] = r
        return tuple(word)

    def to_json(self):
        return {'shape': self.shape.to_json(), 'rows': [list(row) for row in self.rows]}


@dataclass(frozen=True)
class ReverseStandardTableau:
    shape: object
    rows: tuple

    def to_json(self):
        return {'shape': self.shape.to_json(), 'rows': [list(row) for row in self.rows]}


@dataclass(frozen=True)
class DescentData:
    descents: frozenset
    maj: int


@dataclass(frozen=True)
class RsytBoundReport:
    holds: bool
    checked: int
    counterexample: dict = None

    def to_json(self):
        return {'holds': self.holds, 'checked': self.checked, 'counterexample': self.counterexample}


def validate_filling(shape, rows, increasing=True):
    """
    Check a filling of a shape by 1..n.

    Args:
        shape (Partition or BlockDiagonalShape): Shape being filled
        rows (tuple): Rows in the stacked picture
        increasing (bool): Standard (True) or reverse standard (False)

    Returns:
        tuple: (is_valid, error_message)
    """
    lengths = shape.row_lengths()
    if tuple(len(r) for r in rows) != tuple(lengths):
        return False, f"Error: Row lengths {[len(r) for r in rows]} do not match shape {shape}"
    values = sorted(v for row in rows for v in row)
    if values != list(range(1, shape.n + 1)):
        return False, f"Error: Entries must be exactly 1..{shape.n}"
    sign = 1 if increasing else -1
    for row in rows:
        if any(sign * (b - a) <= 0 for a, b in zip(row, row[1:])):
            return False, f"Error: Row {list(row)} is not strictly {'increasing' if increasing else 'decreasing'}"
    starts = set(shape.block_starts())
    for r in range(1, len(rows)):
        if r in starts:
            continue
        for c, v in enumerate(rows[r]):
            if sign * (v - rows[r - 1][c]) <= 0:
                return False, f"Error: Column {c + 1} is not strictly {'increasing' if increasing else 'decreasing'}"
    return True, "OK"


def _row_words(shape):
    caps = shape.row_lengths()
    starts = set(shape.block_starts())
    n = shape.n
    lengths = [0] * len(caps)
    word = []

    def extend():
        if len(word) == n:
            yield tuple(word)
            return
        for r, cap in enumerate(caps):
            if lengths[r] < cap and (r in starts or lengths[r - 1] > lengths[r]):
                lengths[r] += 1
                word.append(r)
                yield from extend()
                word.pop()
                lengths[r] -= 1

    yield from extend()


def tableau_from_row_word(shape, word):
    rows = [[] for _ in shape.row_lengths()]
    for v, r in enumerate(word, start=1):
        rows[r].append(v)
    return StandardTableau(shape, tuple(tuple(row) for row in rows))


def row_reading_tableau(shape):
    """Fill the rows of the stacked picture with 1, 2, ... in reading order."""
    rows = []
    start = 1
    for length in shape.row_lengths():
        rows.append(tuple(range(start, start + length)))
        start += length
    return StandardTableau(shape, tuple(rows))


def enumerate_syt(shape):
    """
    Yield every standard Young tableau of a shape exactly once.

    Args:
        shape (Partition or BlockDiagonalShape): Shape to fill

    Returns:
        generator: StandardTableau values in row-word lexicographic order
    """
    for word in _row_words(shape):
        yield tableau_from_row_word(shape, word)


def count_syt(shape):
    return sum(1 for _ in _row_words(shape))


def descents_of_word(word):
    return frozenset(i for i in range(1, len(word)) if word[i] > word[i - 1])


def descent_data(tableau):
    """
    Descent set and major index.

    ``i`` is a descent when ``i + 1`` lies in a strictly lower row of the
    stacked picture than ``i``.
    """
    descents = descents_of_word(tableau.row_word())
    return DescentData(descents, sum(descents))


def maj(tableau):
    return descent_data(tableau).maj


def _check_cap(shape, cap):
    limit = resolve_cap(cap)
    if shape.n > limit:
        raise EnumerationCapError(
            f"Error: Shape {shape} has {shape.n} cells, above the enumeration cap of {limit}")


def brute_force_maj_gf(shape, cap=None):
    """
    Major index generating function by direct enumeration.

    Args:
        shape (Partition or BlockDiagonalShape): Shape to enumerate
        cap (int): Largest allowed number of cells (configured default if None)

    Returns:
        QPolynomial: Coefficient of q^k counts tableaux with maj k
    """
    _check_cap(shape, cap)
    caps = shape.row_lengths()
    starts = set(shape.block_starts())
    n = shape.n
    lengths = [0] * len(caps)
    counts = defaultdict(int)

    def walk(v, last_row, total):
        if v > n:
            counts[total] += 1
            return
        for r, size in enumerate(caps):
            if lengths[r] < size and (r in starts or lengths[r - 1] > lengths[r]):
                lengths[r] += 1
                walk(v + 1, r, total + (v - 1 if v > 1 and r > last_row else 0))
                lengths[r] -= 1

    walk(1, -1, 0)
    top = max(counts)
    return QPolynomial(counts.get(k, 0) for k in range(top + 1))


def complement(tableau):
    """Replace every entry v by n + 1 - v."""
    n = tableau.n
    rows = tuple(tuple(n + 1 - v for v in row) for row in tableau.rows)
    return ReverseStandardTableau(tableau.shape, rows)


def enumerate_rsyt(shape):
    """Yield every reverse standard tableau, via complementation of SYT."""
    for tableau in enumerate_syt(shape):
        yield complement(tableau)


def stacked_hook_rows(shape):
    """Hook lengths laid out like the rows of a tableau of the shape."""
    rows = []
    for block in shape.blocks_tuple():
        rows.extend(hook_grid(block))
    return rows


def complete_homogeneous(x, y, degree):
    """h_degree(x, y) = Σ_{a+b=degree} x^a y^b."""
    if degree < 0:
        return 0
    return sum(x ** a * y ** (degree - a) for a in range(degree + 1))


def verify_rsyt_hook_bound(shape, degrees=(1, 2, 3, 4), cap=None):
    """
    Check T_c >= h_c and the power-sum identity over every RSYT.

    For each reverse standard tableau T and each degree d this checks
    Σ j^d - Σ h_c^d = Σ (T_c^d - h_c^d) = Σ (T_c - h_c) h_{d-1}(T_c, h_c).

    Args:
        shape (Partition or BlockDiagonalShape): Straight or block diagonal
        degrees (iterable): Degrees d to test
        cap (int): Enumeration cap override

    Returns:
        RsytBoundReport: First falsified instance, if any
    """
    _check_cap(shape, cap)
    hooks = stacked_hook_rows(shape)
    flat_hooks = hook_lengths(shape)
    n = shape.n
    degrees = tuple(degrees)
    brackets = {d: sum(j ** d for j in range(1, n + 1)) - sum(h ** d for h in flat_hooks) for d in degrees}
    checked = 0
    for rsyt in enumerate_rsyt(shape):
        checked += 1
        pairs = [(t, h) for row_t, row_h in zip(rsyt.rows, hooks) for t, h in zip(row_t, row_h)]
        for (t, h), (r, c) in zip(pairs, _cell_labels(hooks)):
            if t < h:
                return RsytBoundReport(False, checked, {
                    'rows': [list(row) for row in rsyt.rows], 'cell': [r, c], 'entry': t, 'hook': h})
        for d in degrees:
            middle = sum(t ** d - h ** d for t, h in pairs)
            factored = sum((t - h) * complete_homogeneous(t, h, d - 1) for t, h in pairs)
            if not brackets[d] == middle == factored:
                return RsytBoundReport(False, checked, {
                    'rows': [list(row) for row in rsyt.rows], 'degree': d,
                    'bracket': brackets[d], 'difference_sum': middle, 'factored_sum': factored})
    return RsytBoundReport(True, checked)


def _cell_labels(hook_rows):
    for r, row in enumerate(hook_rows, start=1):
        for c in range(1, len(row) + 1):
            yield r, c
