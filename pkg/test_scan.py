#!/usr/bin/env python3
"""
Tests for the theorem and conjecture sweeps.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from majindex.scan import (
    CONJECTURE,
    THEOREM,
    SweepReport,
    sweep_block_diagonal,
    sweep_formula_vs_oracle,
    sweep_hook_bounds,
    sweep_parity_unimodality,
    sweep_rotation,
    sweep_unimodality_conjecture,
    sweep_zeros_theorem,
)

SLOW_TESTS = {
    'test_oracle_sweep_twelve',
    'test_zeros_sweep_twelve',
    'test_hook_bounds_sweep',
    'test_rotation_sweep_ten',
    'test_block_sweep_ten',
}


def test_zeros_sweep():
    report = sweep_zeros_theorem(4)
    assert report.kind == THEOREM
    assert report.checked == 11
    assert report.passed
    assert sweep_zeros_theorem(1).checked == 1
    assert sweep_zeros_theorem(8).passed
    print("✓ Zeros sweep passes for n <= 8")


def test_zeros_sweep_twelve():
    assert sweep_zeros_theorem(12).passed
    print("✓ Zeros sweep passes for n <= 12")


def test_unimodality_conjecture_sweep():
    report = sweep_unimodality_conjecture(10)
    assert report.kind == CONJECTURE
    assert report.checked == 1
    assert report.passed
    assert sweep_unimodality_conjecture(9).checked == 0
    assert sweep_unimodality_conjecture(12).passed
    print("✓ No counterexample with four corners for n <= 12")


def test_parity_conjecture_sweep():
    report = sweep_parity_unimodality(3)
    assert report.checked == 6 and report.passed
    report = sweep_parity_unimodality(12, catalan_n_max=25)
    assert report.checked == 271 + 19
    assert report.passed
    print("✓ Parity-unimodality holds for n <= 12 and (m,m), m <= 25")


def test_oracle_sweep():
    assert sweep_formula_vs_oracle(1).checked == 1
    report = sweep_formula_vs_oracle(8)
    assert report.passed, report.violations
    print("✓ Formulas match the oracle for n <= 8")


def test_oracle_sweep_twelve():
    assert sweep_formula_vs_oracle(12).passed
    print("✓ Formulas match the oracle for n <= 12")


def test_hook_bounds_sweep():
    report = sweep_hook_bounds(22)
    assert report.passed, report.violations
    print("✓ Hook bracket bounds hold for 10 <= n <= 22")


def test_hook_bounds_sweep_small():
    report = sweep_hook_bounds(12, degrees=(2,))
    assert report.checked == 42 + 56 + 77
    assert report.passed
    print("✓ Hook bracket bounds hold for 10 <= n <= 12")


def test_rotation_sweep():
    assert sweep_rotation(6).passed
    print("✓ Rotation increment holds for n <= 6")


def test_rotation_sweep_ten():
    assert sweep_rotation(10).passed
    print("✓ Rotation increment holds for n <= 10")


def test_block_sweep():
    report = sweep_block_diagonal(7)
    assert report.passed, report.violations
    assert report.checked > 0
    print("✓ Block diagonal formula holds up to 7 cells")


def test_block_sweep_ten():
    assert sweep_block_diagonal(10).passed
    print("✓ Block diagonal formula holds up to 10 cells")


def test_report_json_is_deterministic():
    serial = sweep_zeros_theorem(6, workers=1)
    parallel = sweep_zeros_theorem(6, workers=2)
    assert serial.to_json() == parallel.to_json()
    assert 'elapsed' not in serial.to_json()
    assert 'elapsed' in serial.to_json(timing=True)
    print("✓ Sweep reports do not depend on worker count")


def test_failing_report():
    violation = {'shape': '4,2', 'n': 6, 'detail': {'property': 'unimodal'}}
    report = SweepReport("unimodal", CONJECTURE, 1, (violation,), 0.0)
    assert not report.passed
    assert json.loads(json.dumps(report.to_json()))['violations'] == [violation]
    print("✓ Violations reported")
