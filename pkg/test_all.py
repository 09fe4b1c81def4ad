#!/usr/bin/env python3
"""
Comprehensive test suite for the majindex package.

Runs every test module in order. Tests listed in a module's SLOW_TESTS
(full oracle sweeps, the 81081-tableau shape, convergence trends) are
skipped unless --full is given. pytest collects the same modules.
"""

import importlib
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent))

MODULES = [
    ("Shapes", 'test_shapes'),
    ("q-Polynomials", 'test_qpoly'),
    ("Tableaux", 'test_tableaux'),
    ("Fake Degrees", 'test_fakedeg'),
    ("Rotations", 'test_rotation'),
    ("Moments", 'test_moments'),
    ("Limit Laws", 'test_limits'),
    ("Sweeps", 'test_scan'),
    ("CLI", 'test_cli'),
]


def collect_tests(module_name, full=False):
    """
    Return the test functions of one module in definition order.

    Args:
        module_name (str): Module to import
        full (bool): Include the module's SLOW_TESTS

    Returns:
        tuple: (tests, skipped) as lists of (name, function)
    """
    module = importlib.import_module(module_name)
    slow = getattr(module, 'SLOW_TESTS', set())
    tests, skipped = [], []
    for name, func in vars(module).items():
        if name.startswith('test_') and callable(func):
            (skipped if name in slow and not full else tests).append((name, func))
    return tests, skipped


def run_all_tests(full=False):
    """Run all tests."""
    print("\n" + "="*70)
    print(" "*15 + "MAJINDEX COMPREHENSIVE TEST SUITE")
    print("="*70)

    passed = 0
    failed = 0
    skipped = 0

    for number, (title, module_name) in enumerate(MODULES, start=1):
        print("\n" + "="*60)
        print(f"TEST {number}: {title}")
        print("="*60)
        tests, slow = collect_tests(module_name, full)
        skipped += len(slow)
        for test_name, test_func in tests:
            try:
                test_func()
                passed += 1
            except AssertionError as e:
                print(f"✗ {test_name} failed: {e}")
                failed += 1
            except Exception as e:
                print(f"✗ {test_name} error: {e}")
                failed += 1
        for test_name, _ in slow:
            print(f"- {test_name} skipped (use --full)")

    total = passed + failed
    print("\n" + "="*70)
    print(f"RESULTS: {passed} passed, {failed} failed out of {total} tests ({skipped} skipped)")
    print("="*70 + "\n")

    return failed == 0


if __name__ == '__main__':
    success = run_all_tests(full='--full' in sys.argv)
    sys.exit(0 if success else 1)
