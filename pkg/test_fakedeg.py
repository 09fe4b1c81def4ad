#!/usr/bin/env python3
"""
Tests for the hook formula, the zeros theorem and block diagonal shapes.
"""

import sys
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from majindex.errors import InvalidShapeError, UnsupportedParameterError
from majindex.fakedeg import (
    fake_degree_positive,
    maj_gf,
    maj_gf_block_diagonal,
    maj_gf_hook_formula,
    max_maj,
    support_classification,
    wreath_fake_degrees,
    zero_pattern,
)
from majindex.qpoly import QPolynomial, q_factorial
from majindex.shapes import BlockDiagonalShape, Partition, b_stat, conjugate, parse_shape, partitions
from majindex.tableaux import brute_force_maj_gf


def test_hook_formula_examples():
    assert maj_gf_hook_formula(Partition((6,))) == 1
    assert maj_gf_hook_formula(Partition((2, 1))) == QPolynomial([0, 1, 1])
    assert maj_gf_hook_formula(Partition((3, 3))) == QPolynomial([1, 0, 1, 1, 1, 0, 1]).shift(3)
    assert maj_gf_hook_formula(Partition(())) == 1
    assert maj_gf_hook_formula(Partition((5, 4, 4, 2)))(1) == 81081
    print("✓ Hook formula examples correct")


def test_hook_formula_matches_enumeration_small():
    for n in range(1, 9):
        for lam in partitions(n):
            assert maj_gf_hook_formula(lam) == brute_force_maj_gf(lam), f"mismatch at {lam}"
    print("✓ Hook formula matches enumeration for n <= 8")


def test_max_maj():
    assert max_maj(Partition((3, 3))) == 9
    assert max_maj(Partition((2, 1))) == 2
    assert max_maj(Partition((1, 1, 1))) == 3
    print("✓ Largest maj correct")


def test_conjugate_reverses_gf():
    for n in range(1, 11):
        top = comb(n, 2)
        for lam in partitions(n):
            conj = conjugate(lam)
            gf, flipped = maj_gf_hook_formula(lam), maj_gf_hook_formula(conj)
            # f^λ'(q) = q^C(n,2) f^λ(1/q)
            assert all(flipped[top - k] == gf[k] for k in range(top + 1)), f"{lam} vs {conj}"
            assert flipped.degree <= top
            assert max_maj(lam) == top - b_stat(conj)
            assert gf.reverse() == gf
    print("✓ Conjugation reverses the generating function for n <= 10")


def test_support_classification():
    assert support_classification(Partition((2, 2))).to_json() == {'min': 2, 'max': 4, 'gaps': [3]}
    assert support_classification(Partition((2, 1))).to_json() == {'min': 1, 'max': 2, 'gaps': []}
    support = support_classification(Partition((3, 3)))
    assert support.to_json() == {'min': 3, 'max': 9, 'gaps': [4, 8]}
    assert support.is_rectangle_exception
    assert not support_classification(Partition((4,))).is_rectangle_exception
    try:
        support_classification(Partition(()))
        assert False, "empty partition has no support"
    except InvalidShapeError:
        pass
    print("✓ Support classification correct")


def test_zero_pattern_matches_prediction():
    for n in range(1, 11):
        for lam in partitions(n):
            poly = maj_gf_hook_formula(lam)
            support = support_classification(lam)
            assert poly.min_degree == support.min_maj
            assert poly.degree == support.max_maj
            assert zero_pattern(poly) == support.gaps, f"zeros differ at {lam}"
    print("✓ Zeros theorem holds for n <= 10")


def test_fake_degree_positive():
    assert not fake_degree_positive(Partition((2, 2)), 3)
    lam = Partition((5, 4, 4, 2))
    assert fake_degree_positive(lam, b_stat(lam))
    assert not fake_degree_positive(Partition((2, 1)), 0)
    assert fake_degree_positive(Partition(()), 0)
    print("✓ Positivity test correct")


def test_block_diagonal_formula():
    singles = BlockDiagonalShape(((1,), (1,), (1,)))
    assert maj_gf_block_diagonal(singles, m=1) == q_factorial(3)
    assert maj_gf_block_diagonal(BlockDiagonalShape(((2, 1),)), m=1) == QPolynomial([0, 1, 1])
    assert maj_gf_block_diagonal(BlockDiagonalShape(((1,), (1,))), m=2) == QPolynomial([1, 1])
    shape = parse_shape("2,1/2/1")
    assert maj_gf_block_diagonal(shape) == brute_force_maj_gf(shape)
    assert maj_gf(shape) == maj_gf_block_diagonal(shape, m=1)
    print("✓ Block diagonal formula correct")


def test_wreath_fake_degrees():
    assert wreath_fake_degrees(BlockDiagonalShape(((1,), (1,)))) == QPolynomial([1, 1])
    shape = parse_shape("2,1/1")
    expected = maj_gf_block_diagonal(shape, m=2)
    assert wreath_fake_degrees(shape) == expected
    assert expected(1) == 4 * 2
    try:
        wreath_fake_degrees(shape, d=2)
        assert False, "d > 1 is not supported"
    except UnsupportedParameterError:
        pass
    print("✓ Wreath fake degrees (d = 1) correct")
