"""
The maj-incrementing map φ built from cyclic rotations of entries.

A rotation acts on the values i..k of a tableau by the cycle
(i, i+1, ..., k) (positive) or (k, k-1, ..., i) (negative). It is
admissible when the result is standard, the descent set changes by
trading j-1 for j (raising maj by exactly one), and the entries i..k sit
in the strip and bounding-rectangle pattern of a positive rotation. A
negative rotation is held to the same pattern on the transpose of its
result.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass

from .config import resolve_cap
from .errors import EnumerationCapError, InvalidShapeError
from .fakedeg import maj_gf_hook_formula, max_maj
from .shapes import BlockDiagonalShape, b_stat, is_proper_rectangle, is_rectangle
from .tableaux import StandardTableau, _row_words, descent_data, tableau_from_row_word

logger = logging.getLogger(__name__)

POSITIVE = 'positive'
NEGATIVE = 'negative'

HINT_MAX_MAJ = 'max-maj'
HINT_RECTANGLE_MIN = 'rectangle-min'
HINT_RECTANGLE_SUBMAX = 'rectangle-submax'
HINT_UNCLASSIFIED = 'unclassified'


@dataclass(frozen=True)
class RotationWitness:
    kind: str
    i: int
    j: int
    k: int
    result: StandardTableau

    @property
    def triple(self):
        return (self.i, self.j, self.k)

    def to_json(self):
        return {'kind': self.kind, 'triple': [self.i, self.j, self.k], 'result': self.result.to_json()}


@dataclass(frozen=True)
class PhiOutcome:
    witness: RotationWitness = None
    hint: str = None

    @property
    def is_fixed(self):
        return self.witness is None

    def to_json(self):
        if self.is_fixed:
            return {'fixed_point': True, 'hint': self.hint}
        return {'fixed_point': False, 'witness': self.witness.to_json()}


@dataclass(frozen=True)
class LevelSummary:
    """
    One maj level of SYT(λ).

    ``sources`` counts members that are not the φ-image of anything one
    level down. ``expected`` is the fake-degree coefficient of the level,
    and the level is ``covered`` when every φ-image landing on it is a
    known member and images plus sources account for ``expected``.
    """
    maj: int
    tableaux: int
    fixed: int
    images_from_below: int
    sources: int
    expected: int
    covered: bool

    def to_json(self):
        return {
            'maj': self.maj, 'tableaux': self.tableaux, 'fixed': self.fixed,
            'images_from_below': self.images_from_below, 'sources': self.sources,
            'expected': self.expected, 'covered': self.covered,
        }


@dataclass(frozen=True)
class RankedReport:
    shape: object
    valid: bool
    checked: int
    levels: tuple
    fixed_hints: dict
    failures: tuple

    def to_json(self):
        return {
            'shape': str(self.shape),
            'valid': self.valid,
            'checked': self.checked,
            'fixed_hints': dict(sorted(self.fixed_hints.items())),
            'failures': list(self.failures),
            'levels': [level.to_json() for level in self.levels],
        }


class _RotationSearch:
    """Position tables of one tableau, shared by every candidate interval."""

    def __init__(self, rows):
        self.grid = rows
        self.n = sum(len(r) for r in rows)
        self.row = [0] * (self.n + 2)
        self.col = [0] * (self.n + 2)
        for r, values in enumerate(rows):
            for c, v in enumerate(values):
                self.row[v] = r
                self.col[v] = c

    @staticmethod
    def _image(kind, i, k, v):
        if v < i or v > k:
            return v
        if kind == POSITIVE:
            return i if v == k else v + 1
        return k if v == i else v - 1

    def _descent_swap(self, kind, i, k):
        """Return j if the rotation trades descent j-1 for j, else None."""
        row = self.row
        n = self.n
        if kind == POSITIVE:
            def moved(v):
                if v == i:
                    return row[k]
                if i < v <= k:
                    return row[v - 1]
                return row[v]
        else:
            def moved(v):
                if v == k:
                    return row[i]
                if i <= v < k:
                    return row[v + 1]
                return row[v]
        added = removed = None
        for p in range(max(1, i - 1), min(k, n - 1) + 1):
            before = row[p + 1] > row[p]
            after = moved(p + 1) > moved(p)
            if before == after:
                continue
            if after:
                if added is not None:
                    return None
                added = p
            else:
                if removed is not None:
                    return None
                removed = p
        if added is None or removed != added - 1:
            return None
        return added

    def _stays_standard(self, kind, i, k):
        grid = self.grid
        for v in range(i, k + 1):
            r, c = self.row[v], self.col[v]
            w = self._image(kind, i, k, v)
            if c > 0 and self._image(kind, i, k, grid[r][c - 1]) > w:
                return False
            if r > 0 and self._image(kind, i, k, grid[r - 1][c]) > w:
                return False
            if c + 1 < len(grid[r]) and self._image(kind, i, k, grid[r][c + 1]) < w:
                return False
            if r + 1 < len(grid) and c < len(grid[r + 1]) and self._image(kind, i, k, grid[r + 1][c]) < w:
                return False
        return True

    def _horizontal(self, a, b):
        return not any(self.row[v + 1] > self.row[v] for v in range(a, b))

    def _northeast(self, a, b):
        """True if a sits strictly north and strictly east of b."""
        return self.row[a] < self.row[b] and self.col[a] > self.col[b]

    def _in_rectangle(self, x, a, b):
        row, col = self.row, self.col
        return (min(row[a], row[b]) <= row[x] <= max(row[a], row[b])
                and min(col[a], col[b]) <= col[x] <= max(col[a], col[b]))

    def _shape_conditions(self, i, j, k):
        """Strip and bounding-rectangle shape of a positive rotation on i..k trading j-1 for j."""
        row = self.row
        if i == j:
            return self._horizontal(i, k) and self._northeast(k, i)
        if j == k:
            return self._horizontal(i, k - 1) and row[k] > row[k - 1] and self._northeast(i, k)
        if not (self._horizontal(i, j - 1) and row[j] > row[j - 1] and self._horizontal(j, k)):
            return False
        if not (self._northeast(i, k) and self._northeast(k, k - 1)):
            return False
        if i > 1 and self._in_rectangle(i - 1, j - 1, k):
            return False
        return not (k < self.n and self._in_rectangle(k + 1, k, k - 1))

    def _mirror(self, i, k):
        """Transpose of the negative rotation's result, where the move reads as a positive one."""
        rows = self.rotated_rows(NEGATIVE, i, k)
        return _RotationSearch(tuple(
            tuple(r[c] for r in rows if c < len(r)) for c in range(len(rows[0]))))

    def triples(self, kind, first_only=False):
        """Admissible (i, j, k) for one rotation direction, sorted."""
        found = []
        for i in range(1, self.n):
            for k in range(i + 1, self.n + 1):
                j = self._descent_swap(kind, i, k)
                if j is None or not self._stays_standard(kind, i, k):
                    continue
                picture = self if kind == POSITIVE else self._mirror(i, k)
                if not picture._shape_conditions(i, j, k):
                    continue
                found.append((i, j, k))
                if first_only:
                    return found
        found.sort()
        return found

    def rotated_rows(self, kind, i, k):
        return tuple(tuple(self._image(kind, i, k, v) for v in values) for values in self.grid)


def _require_straight(tableau):
    if isinstance(tableau.shape, BlockDiagonalShape):
        raise InvalidShapeError("Error: Rotations are defined on straight shapes only")


def _rotations(tableau, kind):
    _require_straight(tableau)
    search = _RotationSearch(tableau.rows)
    return [
        RotationWitness(kind, i, j, k, StandardTableau(tableau.shape, search.rotated_rows(kind, i, k)))
        for i, j, k in search.triples(kind)
    ]


def positive_rotations(tableau):
    """
    All positive rotations of a tableau.

    Args:
        tableau (StandardTableau): Tableau of straight shape

    Returns:
        list: RotationWitness values sorted by (i, j, k)
    """
    return _rotations(tableau, POSITIVE)


def negative_rotations(tableau):
    """All negative rotations; each still raises maj by one."""
    return _rotations(tableau, NEGATIVE)


def fixed_point_hint(partition, maj_value):
    """Which exceptional family explains a tableau with no rotation."""
    if maj_value == max_maj(partition):
        return HINT_MAX_MAJ
    if is_rectangle(partition) and maj_value == b_stat(partition):
        return HINT_RECTANGLE_MIN
    if is_proper_rectangle(partition) and maj_value == max_maj(partition) - 2:
        return HINT_RECTANGLE_SUBMAX
    return HINT_UNCLASSIFIED


def phi(tableau):
    """
    Apply φ: the smallest positive rotation, else the smallest negative one.

    Args:
        tableau (StandardTableau): Tableau of straight shape

    Returns:
        PhiOutcome: Witness, or a fixed-point marker with a hint
    """
    _require_straight(tableau)
    search = _RotationSearch(tableau.rows)
    for kind in (POSITIVE, NEGATIVE):
        found = search.triples(kind)
        if found:
            i, j, k = found[0]
            result = StandardTableau(tableau.shape, search.rotated_rows(kind, i, k))
            return PhiOutcome(RotationWitness(kind, i, j, k, result))
    return PhiOutcome(hint=fixed_point_hint(tableau.shape, descent_data(tableau).maj))


def _has_rotation(rows):
    search = _RotationSearch(rows)
    return bool(search.triples(POSITIVE, first_only=True) or search.triples(NEGATIVE, first_only=True))


def _check_cap(partition, cap):
    limit = resolve_cap(cap)
    if partition.n > limit:
        raise EnumerationCapError(
            f"Error: Shape {partition} has {partition.n} cells, above the enumeration cap of {limit}")


def rotation_fixed_points(partition, cap=None):
    """
    Tableaux on which neither a positive nor a negative rotation applies.

    Args:
        partition (Partition): Straight shape
        cap (int): Enumeration cap override

    Returns:
        list: StandardTableau values in enumeration order
    """
    _check_cap(partition, cap)
    fixed = []
    for word in _row_words(partition):
        tableau = tableau_from_row_word(partition, word)
        if not _has_rotation(tableau.rows):
            fixed.append(tableau)
    logger.info("Shape %s: %d rotation fixed points", partition, len(fixed))
    return fixed


def verify_ranked_increment(partition, cap=None):
    """
    Check maj(φ(T)) = maj(T) + 1 on every non-fixed tableau.

    Also summarizes each maj level between the extreme values: how many
    tableaux it holds, how many are fixed points, how many distinct
    φ-images arrive from the level below and whether those images plus
    the level's remaining members account for its fake-degree coefficient.

    Args:
        partition (Partition): Straight shape
        cap (int): Enumeration cap override

    Returns:
        RankedReport: Per-level summary and any failures
    """
    _check_cap(partition, cap)
    members = defaultdict(set)
    fixed_per_level = Counter()
    hints = Counter()
    images = defaultdict(set)
    failures = []
    checked = 0
    for word in _row_words(partition):
        tableau = tableau_from_row_word(partition, word)
        level = descent_data(tableau).maj
        checked += 1
        members[level].add(tableau.rows)
        outcome = phi(tableau)
        if outcome.is_fixed:
            fixed_per_level[level] += 1
            hints[outcome.hint] += 1
            continue
        result = outcome.witness.result
        try:
            StandardTableau.from_rows(partition, result.rows)
        except InvalidShapeError as e:
            failures.append({'rows': [list(r) for r in tableau.rows], 'error': str(e)})
            continue
        if descent_data(result).maj != level + 1:
            failures.append({'rows': [list(r) for r in tableau.rows], 'triple': list(outcome.witness.triple)})
            continue
        images[level + 1].add(result.rows)
    gf = maj_gf_hook_formula(partition)
    levels = []
    for k in range(gf.min_degree, gf.degree + 1):
        sources = len(members[k] - images[k])
        levels.append(LevelSummary(
            maj=k,
            tableaux=len(members[k]),
            fixed=fixed_per_level[k],
            images_from_below=len(images[k]),
            sources=sources,
            expected=gf[k],
            covered=images[k] <= members[k] and len(images[k]) + sources == gf[k],
        ))
    uncovered = [level.maj for level in levels if not level.covered]
    if uncovered:
        logger.warning("Shape %s: maj levels %s are not covered", partition, uncovered)
    levels = tuple(levels)
    if failures:
        logger.warning("Shape %s: %d tableaux violate the maj increment", partition, len(failures))
    valid = not failures and not uncovered
    return RankedReport(partition, valid, checked, levels, dict(hints), tuple(failures))


def _label(rows):
    return '/'.join(' '.join(str(v) for v in row) for row in rows)


def phi_graph_dot(partition, cap=None):
    """
    Graphviz DOT text of the φ functional graph on SYT(λ).

    Nodes are tableaux (rows separated by ``/``); fixed points are boxes.
    """
    _check_cap(partition, cap)
    lines = [f'digraph "phi {partition}" {{', '  rankdir=BT;']
    ids = {}
    edges = []
    for word in _row_words(partition):
        tableau = tableau_from_row_word(partition, word)
        node = f"t{len(ids)}"
        ids[tableau.rows] = node
        outcome = phi(tableau)
        shape_attr = ', shape=box' if outcome.is_fixed else ''
        lines.append(f'  {node} [label="{_label(tableau.rows)}\\nmaj {descent_data(tableau).maj}"{shape_attr}];')
        if not outcome.is_fixed:
            edges.append((tableau.rows, outcome.witness.result.rows, outcome.witness.kind))
    for source, target, kind in edges:
        style = '' if kind == POSITIVE else ' [style=dashed]'
        lines.append(f'  {ids[source]} -> {ids[target]}{style};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
