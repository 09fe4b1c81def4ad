"""
Partitions, block diagonal shapes and their scalar statistics.

Partitions are written in English notation: row 1 on top, cells
indexed ``(row, col)`` from 1.
"""

from collections import namedtuple
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import InvalidShapeError

Cell = namedtuple('Cell', ['row', 'col'])


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise InvalidShapeError(f"Error: Partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidShapeError(f"Error: Partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ','.join(str(p) for p in self.parts)

    def row_lengths(self):
        return self.parts

    def block_starts(self):
        return (0,) if self.parts else ()

    def blocks_tuple(self):
        return (self,) if self.parts else ()

    def to_json(self):
        return list(self.parts)


@dataclass(frozen=True)
class BlockDiagonalShape:
    """
    Straight shapes stacked corner to corner.

    Block ``i + 1`` sits strictly below and strictly left of block ``i``,
    so no two blocks share a row or a column.
    """

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(b if isinstance(b, Partition) else Partition(tuple(b)) for b in self.blocks)
        if not blocks:
            raise InvalidShapeError("Error: A block diagonal shape needs at least one block")
        if any(b.n == 0 for b in blocks):
            raise InvalidShapeError("Error: Every block of a block diagonal shape must be nonempty")
        object.__setattr__(self, 'blocks', blocks)

    @property
    def n(self):
        return sum(b.n for b in self.blocks)

    def __str__(self):
        return '/'.join(str(b) for b in self.blocks)

    def row_lengths(self):
        return tuple(p for b in self.blocks for p in b.parts)

    def block_starts(self):
        starts = []
        row = 0
        for b in self.blocks:
            starts.append(row)
            row += len(b)
        return tuple(starts)

    def blocks_tuple(self):
        return self.blocks

    def to_json(self):
        return [b.to_json() for b in self.blocks]


def parse_partition(text):
    """
    Parse a comma-separated partition such as ``"5,4,4,2"``.

    Args:
        text (str): Decreasing positive integers separated by commas

    Returns:
        Partition: The parsed partition (empty for a blank string)
    """
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = tuple(int(p.strip()) for p in text.split(','))
    except ValueError:
        raise InvalidShapeError(f"Error: Partition must be comma-separated integers, got {text!r}")
    return Partition(parts)


def parse_shape(text):
    """
    Parse a straight or block diagonal shape.

    Blocks are joined with ``/``: ``"3,1/2/1,1"`` has three blocks.

    Args:
        text (str): Shape in the partition grammar

    Returns:
        Partition or BlockDiagonalShape
    """
    if '/' not in text:
        return parse_partition(text)
    pieces = text.split('/')
    if any(not p.strip() for p in pieces):
        raise InvalidShapeError(f"Error: Empty block in block diagonal shape {text!r}")
    return BlockDiagonalShape(tuple(parse_partition(p) for p in pieces))


def shape_from_json(obj):
    """Build a shape from its JSON form (array, or array of arrays)."""
    if not isinstance(obj, list):
        raise InvalidShapeError(f"Error: Shape JSON must be an array, got {obj!r}")
    if obj and all(isinstance(b, list) for b in obj):
        return BlockDiagonalShape(tuple(Partition(tuple(b)) for b in obj))
    if all(isinstance(p, int) and not isinstance(p, bool) for p in obj):
        return Partition(tuple(obj))
    raise InvalidShapeError(f"Error: Cannot read shape from {obj!r}")


def conjugate(partition):
    """Transpose the diagram: ``result[j] = #{i : λ_i ≥ j}``."""
    parts = partition.parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def cells(partition):
    """Yield the cells of a straight shape in row-reading order."""
    for row, length in enumerate(partition.parts, start=1):
        for col in range(1, length + 1):
            yield Cell(row, col)


def hook_grid(partition):
    """
    Hook lengths of a straight shape as a ragged list of rows.

    Args:
        partition (Partition): Straight shape

    Returns:
        list: ``grid[i][j]`` is the hook of cell ``(i + 1, j + 1)``
    """
    if not partition.parts:
        return []
    lam = np.array(partition.parts, dtype=np.int64)
    conj = np.array(conjugate(partition).parts, dtype=np.int64)
    i = np.arange(len(lam))[:, None]
    j = np.arange(lam[0])[None, :]
    hooks = lam[:, None] + conj[None, :] - i - j - 1
    return [[int(h) for h in hooks[r, :length]] for r, length in enumerate(partition.parts)]


def hook_lengths(shape):
    """
    Multiset of hook lengths, sorted in decreasing order.

    For a block diagonal shape every block is treated as a straight
    shape and the multisets are joined.

    Args:
        shape (Partition or BlockDiagonalShape): Shape to measure

    Returns:
        tuple: Hook lengths, one per cell
    """
    values = []
    for block in shape.blocks_tuple():
        for row in hook_grid(block):
            values.extend(row)
    return tuple(sorted(values, reverse=True))


def equal_hook_multisets(first, second):
    return hook_lengths(first) == hook_lengths(second)


def b_stat(shape):
    """
    b(λ) = Σ (i-1) λ_i, the least major index over SYT(λ).

    For block diagonal shapes this is the sum over blocks, which is the
    least major index of the stacked shape.
    """
    return sum(i * p for block in shape.blocks_tuple() for i, p in enumerate(block.parts))


def _arm_or_leg(partition):
    if not partition.parts:
        return 0
    return max(partition.parts[0], len(partition.parts))


def aft(shape):
    """
    Number of cells outside the longest first row or first column.

    For block diagonal shapes the maximum is taken over all blocks.
    """
    longest = max((_arm_or_leg(b) for b in shape.blocks_tuple()), default=0)
    return shape.n - longest


def corner_count(partition):
    """Number of removable corners, i.e. of distinct part values."""
    return len(set(partition.parts))


def is_rectangle(partition):
    return len(set(partition.parts)) <= 1


def is_proper_rectangle(partition):
    """Rectangle with at least two rows and at least two columns."""
    return is_rectangle(partition) and len(partition.parts) >= 2 and partition.parts[0] >= 2


def partitions(n):
    """
    Yield every partition of ``n`` in reverse lexicographic order.

    Starts from ``(n)`` and ends at ``(1, ..., 1)``; uses the ZS1
    successor rule on a working array.
    """
    if n < 0:
        return
    if n <= 1:
        yield Partition((1,) * n)
        return
    x = [1] * n
    x[0] = n
    m, h = 1, 1
    yield Partition((n,))
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                h += 1
                x[h - 1] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h - 1] = t
        yield Partition(tuple(x[:m]))


def _compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def block_diagonal_shapes(max_blocks, max_cells, min_blocks=1):
    """
    Yield every block diagonal shape with a bounded number of blocks and cells.

    Args:
        max_blocks (int): Largest number of blocks
        max_cells (int): Largest total number of cells
        min_blocks (int): Smallest number of blocks

    Returns:
        generator: BlockDiagonalShape values in a fixed order
    """
    for count in range(min_blocks, max_blocks + 1):
        for total in range(count, max_cells + 1):
            for sizes in _compositions(total, count):
                for blocks in product(*(list(partitions(s)) for s in sizes)):
                    yield BlockDiagonalShape(blocks)
