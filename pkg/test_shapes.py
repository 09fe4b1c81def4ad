#!/usr/bin/env python3
"""
Tests for partitions, block diagonal shapes and their statistics.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from majindex.errors import InvalidShapeError
from majindex.shapes import (
    BlockDiagonalShape,
    Partition,
    aft,
    b_stat,
    block_diagonal_shapes,
    cells,
    conjugate,
    corner_count,
    equal_hook_multisets,
    hook_grid,
    hook_lengths,
    is_proper_rectangle,
    is_rectangle,
    parse_partition,
    parse_shape,
    partitions,
    shape_from_json,
)

FIG_SHAPE = Partition((8, 8, 7, 6, 5, 5, 5, 2, 2))


def test_partition_invariants():
    p = Partition((5, 4, 4, 2))
    assert p.n == 15
    assert len(p) == 4
    assert str(p) == "5,4,4,2"
    assert Partition(()).n == 0
    for bad in [(2, 3), (3, 0), (-1,)]:
        try:
            Partition(bad)
            assert False, f"{bad} should be rejected"
        except InvalidShapeError:
            pass
    print("✓ Partition invariants enforced")


def test_parse_shapes():
    assert parse_partition("5,4,4,2") == Partition((5, 4, 4, 2))
    assert parse_partition("") == Partition(())
    shape = parse_shape("3,1/2/1,1")
    assert isinstance(shape, BlockDiagonalShape)
    assert shape.blocks == (Partition((3, 1)), Partition((2,)), Partition((1, 1)))
    assert shape.n == 8
    assert str(shape) == "3,1/2/1,1"
    assert shape.row_lengths() == (3, 1, 2, 1, 1)
    assert shape.block_starts() == (0, 2, 3)
    for bad in ["a,b", "2,3", "1//1", "3,1/"]:
        try:
            parse_shape(bad)
            assert False, f"{bad!r} should not parse"
        except InvalidShapeError:
            pass
    assert shape_from_json([[2, 1], [1]]) == BlockDiagonalShape(((2, 1), (1,)))
    assert shape_from_json([2, 1]) == Partition((2, 1))
    print("✓ Shape grammar parsed")


def test_conjugate():
    assert conjugate(Partition((2, 1))) == Partition((2, 1))
    assert conjugate(Partition(())) == Partition(())
    assert conjugate(Partition((3, 3))) == Partition((2, 2, 2))
    p = Partition((5, 4, 4, 2))
    assert conjugate(conjugate(p)) == p
    print("✓ Conjugates correct")


def test_cells():
    assert list(cells(Partition((2, 1)))) == [(1, 1), (1, 2), (2, 1)]
    print("✓ Cells enumerated in reading order")


def test_hook_lengths():
    assert hook_grid(Partition((3, 3))) == [[4, 3, 2], [3, 2, 1]]
    assert hook_lengths(Partition((2, 1))) == (3, 1, 1)
    assert hook_lengths(Partition((3, 3))) == (4, 3, 3, 2, 2, 1)
    assert hook_lengths(Partition((4,))) == (4, 3, 2, 1)
    assert hook_lengths(parse_shape("2,1/1")) == (3, 1, 1, 1)
    print("✓ Hook lengths correct")


def test_equal_hook_multiset_pair():
    first = Partition((12, 12, 3, 3, 3, 2, 2, 1, 1))
    second = Partition((15, 6, 6, 6, 4, 2))
    assert first.n == second.n == 39
    assert equal_hook_multisets(first, second)
    assert not equal_hook_multisets(Partition((2, 1)), Partition((3,)))
    print("✓ Equal hook multisets detected")


def test_b_stat():
    assert b_stat(Partition((7,))) == 0
    assert b_stat(Partition((2, 1))) == 1
    assert b_stat(Partition((1, 1, 1, 1))) == 6
    assert b_stat(Partition((5, 4, 4, 2))) == 18
    assert b_stat(parse_shape("1/1/1")) == 0
    print("✓ b(λ) correct")


def test_aft():
    assert aft(Partition((50, 2))) == 2
    assert aft(Partition((50, 3, 1))) == 4
    assert aft(FIG_SHAPE) == 39
    assert aft(Partition((7,))) == 0
    assert aft(Partition((1, 1, 1))) == 0
    assert aft(parse_shape("1/1/1")) == 2
    print("✓ aft values match")


def test_conjugation_symmetries():
    for n in range(1, 11):
        for lam in partitions(n):
            conj = conjugate(lam)
            assert hook_lengths(conj) == hook_lengths(lam), f"hooks differ for {lam}"
            grid, flipped = hook_grid(lam), hook_grid(conj)
            assert all(flipped[c][r] == h for r, row in enumerate(grid) for c, h in enumerate(row))
            assert aft(conj) == aft(lam)
            assert sum(hook_lengths(lam)) == b_stat(lam) + b_stat(conj) + n
    print("✓ Hooks, aft and b behave under conjugation for n <= 10")


def test_corners_and_rectangles():
    assert corner_count(Partition((6,))) == 1
    assert corner_count(Partition((4, 2))) == 2
    assert corner_count(FIG_SHAPE) == 5
    assert is_rectangle(Partition((3, 3)))
    assert is_rectangle(Partition((4,)))
    assert is_proper_rectangle(Partition((2, 2)))
    assert not is_proper_rectangle(Partition((1, 1)))
    assert not is_rectangle(Partition((3, 2)))
    print("✓ Corner counts and rectangles correct")


def test_partitions():
    counts = [sum(1 for _ in partitions(n)) for n in range(1, 11)]
    assert counts == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert list(partitions(0)) == [Partition(())]
    seven = list(partitions(7))
    assert seven[0] == Partition((7,))
    assert seven[-1] == Partition((1,) * 7)
    assert len(set(seven)) == len(seven)
    assert all(p.n == 7 for p in seven)
    print("✓ Partition generator complete")


def test_block_diagonal_shapes():
    shapes = list(block_diagonal_shapes(2, 3))
    assert len(shapes) == 11
    assert len(set(shapes)) == 11
    assert all(len(s.blocks) <= 2 and s.n <= 3 for s in shapes)
    assert BlockDiagonalShape(((1,), (2,))) in shapes
    try:
        BlockDiagonalShape(())
        assert False, "empty block list should be rejected"
    except InvalidShapeError:
        pass
    print("✓ Block diagonal shapes generated")
