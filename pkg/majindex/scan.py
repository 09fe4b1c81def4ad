"""
Sweeps that check theorems and conjectures over ranges of shapes.

Theorem sweeps check the engine against its own oracles; a violation there
is a bug. Conjecture sweeps look for counterexamples to open statements;
a violation there is a mathematical finding, reported but never raised.
"""

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .config import workers as configured_workers
from .fakedeg import maj_gf_block_diagonal, maj_gf_hook_formula, support_classification, zero_pattern
from .limits import check_hook_bounds
from .moments import cumulant_formula, mean_formula, moments_from_gf
from .qpoly import coefficient_shape, q_factorial
from .rotation import verify_ranked_increment
from .shapes import Partition, block_diagonal_shapes, corner_count, partitions
from .tableaux import brute_force_maj_gf

logger = logging.getLogger(__name__)

THEOREM = 'theorem'
CONJECTURE = 'conjecture'


@dataclass(frozen=True)
class SweepReport:
    scope: str
    kind: str
    checked: int
    violations: tuple
    elapsed: float

    @property
    def passed(self):
        return not self.violations

    def to_json(self, timing=False):
        """Deterministic JSON form; ``timing`` adds the wall-clock seconds."""
        out = {
            'scope': self.scope,
            'kind': self.kind,
            'checked': self.checked,
            'passed': self.passed,
            'violations': list(self.violations),
        }
        if timing:
            out['elapsed'] = round(self.elapsed, 3)
        return out


def _violation_key(violation):
    return (violation['n'], violation['shape'], json.dumps(violation['detail'], sort_keys=True))


def _run_sweep(scope, kind, check, shapes, workers=None):
    """
    Apply ``check`` to every shape and collect the violations.

    ``check`` returns a list of detail dicts, empty when the shape passes.
    Violations are sorted so the report does not depend on ``workers``.
    """
    shapes = list(shapes)
    workers = configured_workers() if workers is None else max(1, workers)
    start = time.perf_counter()
    if workers > 1 and len(shapes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check, shapes, chunksize=max(1, len(shapes) // (4 * workers))))
    else:
        results = [check(shape) for shape in shapes]
    violations = [
        {'shape': str(shape), 'n': shape.n, 'detail': detail}
        for shape, details in zip(shapes, results)
        for detail in details
    ]
    violations.sort(key=_violation_key)
    elapsed = time.perf_counter() - start
    logger.info("Sweep %s: %d shapes, %d violations, %.2fs", scope, len(shapes), len(violations), elapsed)
    if violations:
        logger.warning("Sweep %s found %d violations", scope, len(violations))
    return SweepReport(scope, kind, len(shapes), tuple(violations), elapsed)


def _partitions_up_to(n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        yield from partitions(n)


def _check_zeros(partition):
    poly = maj_gf_hook_formula(partition)
    support = support_classification(partition)
    found = {'min': poly.min_degree, 'max': poly.degree, 'gaps': sorted(zero_pattern(poly))}
    if found != support.to_json():
        return [{'expected': support.to_json(), 'found': found}]
    return []


def sweep_zeros_theorem(n_max, workers=None):
    """
    Compare the zeros of every fake-degree polynomial with the prediction.

    Args:
        n_max (int): Largest size swept
        workers (int): Process count (configured default if None)

    Returns:
        SweepReport: One violation per shape whose zero pattern disagrees
    """
    return _run_sweep(f"zeros n<={n_max}", THEOREM, _check_zeros, _partitions_up_to(n_max), workers)


def _check_unimodal(partition):
    if not coefficient_shape(maj_gf_hook_formula(partition)).unimodal:
        return [{'property': 'unimodal'}]
    return []


def sweep_unimodality_conjecture(n_max, workers=None):
    """Unimodality of every λ ⊢ n <= n_max with at least four corners."""
    shapes = (p for p in _partitions_up_to(n_max) if corner_count(p) >= 4)
    return _run_sweep(f"unimodal corners>=4 n<={n_max}", CONJECTURE, _check_unimodal, shapes, workers)


def _check_parity(partition):
    if not coefficient_shape(maj_gf_hook_formula(partition)).parity_unimodal:
        return [{'property': 'parity-unimodal'}]
    return []


def sweep_parity_unimodality(n_max, catalan_n_max=0, workers=None):
    """
    Parity-unimodality of all λ ⊢ n <= n_max, then of the two-row squares.

    SYT((m, m)) for m <= catalan_n_max gives the q-Catalan polynomials up
    to a shift.

    Args:
        n_max (int): Largest size for the full sweep
        catalan_n_max (int): Largest m for the (m, m) shapes
        workers (int): Process count

    Returns:
        SweepReport: Shapes whose even or odd subsequence is not unimodal
    """
    shapes = list(_partitions_up_to(n_max))
    seen = set(shapes)
    shapes.extend(p for p in (Partition((m, m)) for m in range(1, catalan_n_max + 1)) if p not in seen)
    scope = f"parity n<={n_max} catalan<={catalan_n_max}"
    return _run_sweep(scope, CONJECTURE, _check_parity, shapes, workers)


def _check_oracle(partition, max_d=6):
    details = []
    formula = maj_gf_hook_formula(partition)
    brute = brute_force_maj_gf(partition, cap=partition.n)
    if formula != brute:
        details.append({'check': 'hook-formula', 'formula': formula.to_json(), 'brute_force': brute.to_json()})
    table = moments_from_gf(brute, max_d)
    if mean_formula(partition) != table.mean:
        details.append({'check': 'mean', 'formula': str(mean_formula(partition)), 'oracle': str(table.mean)})
    for d in range(2, max_d + 1):
        value = cumulant_formula(partition, d)
        if value != table.cumulant(d):
            details.append({'check': f'cumulant-{d}', 'formula': str(value), 'oracle': str(table.cumulant(d))})
    return details


def sweep_formula_vs_oracle(n_max, max_d=6, workers=None):
    """
    Hook formula against enumeration, and cumulant formula against exact moments.

    Args:
        n_max (int): Largest size; every shape is enumerated in full
        max_d (int): Highest cumulant order compared
        workers (int): Process count

    Returns:
        SweepReport: Any disagreement, with both values
    """
    check = partial(_check_oracle, max_d=max_d)
    return _run_sweep(f"oracle n<={n_max} d<={max_d}", THEOREM, check, _partitions_up_to(n_max), workers)


def _check_bounds(partition, degrees=(1, 2, 3, 4)):
    details = []
    for d in degrees:
        report = check_hook_bounds(partition, d)
        if report.applicable and not report.holds:
            details.append(report.to_json())
    return details


def sweep_hook_bounds(n_max, n_min=10, degrees=(1, 2, 3, 4), workers=None):
    """Both hook-bracket lemmas for every λ ⊢ n with n_min <= n <= n_max."""
    check = partial(_check_bounds, degrees=tuple(degrees))
    scope = f"hook-bounds {n_min}<=n<={n_max} d in {list(degrees)}"
    return _run_sweep(scope, THEOREM, check, _partitions_up_to(n_max, n_min), workers)


def _check_rotation(partition):
    report = verify_ranked_increment(partition, cap=partition.n)
    return list(report.failures)


def sweep_rotation(n_max, workers=None):
    """maj(φ(T)) = maj(T) + 1 on every non-fixed T of every λ ⊢ n <= n_max."""
    return _run_sweep(f"rotation n<={n_max}", THEOREM, _check_rotation, _partitions_up_to(n_max), workers)


def _check_block(shape):
    formula = maj_gf_block_diagonal(shape, m=1)
    brute = brute_force_maj_gf(shape, cap=shape.n)
    details = []
    if formula != brute:
        details.append({'check': 'block-formula', 'formula': formula.to_json(), 'brute_force': brute.to_json()})
    if all(b.n == 1 for b in shape.blocks) and formula != q_factorial(shape.n):
        details.append({'check': 'singletons', 'formula': formula.to_json()})
    return details


def sweep_block_diagonal(max_cells, max_blocks=3, workers=None):
    """
    Block diagonal formula (m = 1) against enumeration of the stacked shape.

    Args:
        max_cells (int): Largest total number of cells
        max_blocks (int): Largest number of blocks
        workers (int): Process count

    Returns:
        SweepReport: Shapes where the formula and the oracle disagree
    """
    shapes = block_diagonal_shapes(max_blocks, max_cells)
    scope = f"block-diagonal blocks<={max_blocks} n<={max_cells}"
    return _run_sweep(scope, THEOREM, _check_block, shapes, workers)
