#!/usr/bin/env python3
"""
Command-line interface for the majindex package.

Exit status: 0 success, 1 engine error or failed theorem sweep,
2 invalid arguments, 3 conjecture violation.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

import pandas as pd

from .config import log_level
from .errors import ConfigurationError, MajIndexError
from .fakedeg import maj_gf, maj_gf_block_diagonal, support_classification, wreath_fake_degrees, zero_pattern
from .limits import ReferenceLaw, diagnose_family, gaussian_overlay, local_limit_deviation
from .moments import formula_moments
from .rotation import (
    negative_rotations,
    phi,
    phi_graph_dot,
    positive_rotations,
    rotation_fixed_points,
    verify_ranked_increment,
)
from .scan import (
    CONJECTURE,
    sweep_block_diagonal,
    sweep_formula_vs_oracle,
    sweep_hook_bounds,
    sweep_parity_unimodality,
    sweep_rotation,
    sweep_unimodality_conjecture,
    sweep_zeros_theorem,
)
from .shapes import BlockDiagonalShape, parse_shape, shape_from_json
from .tableaux import StandardTableau, brute_force_maj_gf, descent_data, verify_rsyt_hook_bound

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ENGINE = 1
EXIT_USAGE = 2
EXIT_CONJECTURE = 3

FORMATS = ('json', 'csv', 'dot')

# formats each command can emit; the first is the default
COMMAND_FORMATS = {
    'gf': ('json', 'csv'),
    'support': ('json',),
    'check-zeros': ('json',),
    'moments': ('json',),
    'rotate': ('json',),
    'fixed-points': ('json',),
    'verify-ranked': ('json', 'dot'),
    'limit-diagnose': ('csv', 'json'),
    'local-limit': ('json',),
    'hist': ('csv', 'json'),
    'sweep': ('json',),
    'wreath-gf': ('json', 'csv'),
    'block-gf': ('json', 'csv'),
    'rsyt-bound': ('json',),
}

SWEEPS = ('zeros', 'unimodal', 'parity', 'oracle', 'bounds', 'rotation', 'blocks')


@dataclass
class CommandConfig:
    command: str
    shape: object = None
    tableau: object = None
    shapes: list = field(default_factory=list)
    law: object = None
    sweep: str = None
    n: int = None
    catalan: int = 0
    max_d: int = 4
    m: int = 1
    d: int = 1
    brute: bool = False
    count_only: bool = False
    gaussian: bool = False
    workers: int = None
    fmt: str = 'json'
    out: str = None


def validate_format(command, fmt):
    """
    Check that a command can emit the requested format.

    Returns:
        tuple: (is_valid, error_message)
    """
    allowed = COMMAND_FORMATS[command]
    if fmt not in allowed:
        return False, f"Error: '{command}' supports --format {', '.join(allowed)}; got '{fmt}'"
    return True, "OK"


def validate_sweep(sweep, n):
    if sweep not in SWEEPS:
        return False, f"Error: Unknown sweep '{sweep}'; choose from {', '.join(SWEEPS)}"
    if n is None or n < 1:
        return False, "Error: sweep needs --n with a positive value"
    return True, "OK"


def read_shapes_file(path):
    """Read one shape per line: a JSON array or a shape string such as ``50,2``."""
    shapes = []
    with open(path, 'r', encoding='utf-8') as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith('['):
                shapes.append(shape_from_json(json.loads(line)))
            else:
                shapes.append(parse_shape(json.loads(line) if line.startswith('"') else line))
    return shapes


def _dumps(obj):
    return json.dumps(obj, separators=(',', ':'))


def _poly_csv(poly):
    ks = list(range(poly.min_degree, poly.degree + 1))
    return pd.DataFrame({'k': ks, 'coefficient': [str(poly[k]) for k in ks]}).to_csv(index=False)


def _emit_poly(poly, fmt):
    return _poly_csv(poly) if fmt == 'csv' else _dumps(poly.to_json())


def emit_histogram(shape, fmt='csv', gaussian=False):
    """
    Rows (k, #{T : maj(T) = k}) over the support range of maj.

    With ``gaussian`` a third column holds the Gaussian approximation
    total·φ((k - μ)/σ)/σ, written with 17 significant digits.
    """
    frame = gaussian_overlay(shape)
    if not gaussian:
        frame = frame[['k', 'count']]
    if fmt == 'json':
        return _dumps(frame.to_dict(orient='records'))
    return frame.to_csv(index=False, float_format='%.17g')


def _sweep_report(config):
    n = config.n
    if config.sweep == 'zeros':
        return sweep_zeros_theorem(n, workers=config.workers)
    if config.sweep == 'unimodal':
        return sweep_unimodality_conjecture(n, workers=config.workers)
    if config.sweep == 'parity':
        return sweep_parity_unimodality(n, config.catalan, workers=config.workers)
    if config.sweep == 'oracle':
        return sweep_formula_vs_oracle(n, max_d=max(config.max_d, 2), workers=config.workers)
    if config.sweep == 'bounds':
        return sweep_hook_bounds(n, workers=config.workers)
    if config.sweep == 'rotation':
        return sweep_rotation(n, workers=config.workers)
    return sweep_block_diagonal(n, workers=config.workers)


def _require_straight(config):
    if isinstance(config.shape, BlockDiagonalShape):
        raise MajIndexError(f"Error: '{config.command}' needs a straight shape, got {config.shape}")
    return config.shape


def _require_blocks(config):
    shape = config.shape
    if not isinstance(shape, BlockDiagonalShape):
        shape = BlockDiagonalShape((shape,))
    return shape


def _dispatch(config):
    command = config.command
    if command == 'gf':
        poly = brute_force_maj_gf(config.shape) if config.brute else maj_gf(config.shape)
        return EXIT_OK, _emit_poly(poly, config.fmt)
    if command == 'support':
        return EXIT_OK, _dumps(support_classification(_require_straight(config)).to_json())
    if command == 'check-zeros':
        if config.shape is None:
            report = sweep_zeros_theorem(config.n, workers=config.workers)
            return (EXIT_OK if report.passed else EXIT_ENGINE), _dumps(report.to_json())
        partition = _require_straight(config)
        poly = maj_gf(partition)
        expected = support_classification(partition).to_json()
        found = {'min': poly.min_degree, 'max': poly.degree, 'gaps': sorted(zero_pattern(poly))}
        agrees = expected == found
        return (EXIT_OK if agrees else EXIT_ENGINE), _dumps(
            {'shape': str(partition), 'expected': expected, 'found': found, 'agrees': agrees})
    if command == 'moments':
        return EXIT_OK, _dumps(formula_moments(config.shape, max(config.max_d, 2)).to_json())
    if command == 'rotate':
        tableau = config.tableau
        return EXIT_OK, _dumps({
            'maj': descent_data(tableau).maj,
            'phi': phi(tableau).to_json(),
            'positive': [w.to_json() for w in positive_rotations(tableau)],
            'negative': [w.to_json() for w in negative_rotations(tableau)],
        })
    if command == 'fixed-points':
        fixed = rotation_fixed_points(_require_straight(config))
        if config.count_only:
            return EXIT_OK, str(len(fixed))
        return EXIT_OK, _dumps([t.to_json() for t in fixed])
    if command == 'verify-ranked':
        partition = _require_straight(config)
        if config.fmt == 'dot':
            return EXIT_OK, phi_graph_dot(partition)
        report = verify_ranked_increment(partition)
        return (EXIT_OK if report.valid else EXIT_ENGINE), _dumps(report.to_json())
    if command == 'limit-diagnose':
        frame = diagnose_family(config.shapes, config.law)
        if config.fmt == 'json':
            return EXIT_OK, _dumps(frame.to_dict(orient='records'))
        return EXIT_OK, frame.to_csv(index=False, float_format='%.17g')
    if command == 'local-limit':
        return EXIT_OK, _dumps(local_limit_deviation(config.shape).to_json())
    if command == 'hist':
        return EXIT_OK, emit_histogram(config.shape, config.fmt, config.gaussian)
    if command == 'sweep':
        report = _sweep_report(config)
        if report.passed:
            status = EXIT_OK
        elif report.kind == CONJECTURE:
            status = EXIT_CONJECTURE
        else:
            status = EXIT_ENGINE
        return status, _dumps(report.to_json())
    if command == 'wreath-gf':
        return EXIT_OK, _emit_poly(wreath_fake_degrees(_require_blocks(config), d=config.d), config.fmt)
    if command == 'block-gf':
        return EXIT_OK, _emit_poly(maj_gf_block_diagonal(_require_blocks(config), m=config.m), config.fmt)
    if command == 'rsyt-bound':
        report = verify_rsyt_hook_bound(config.shape, degrees=range(1, max(config.max_d, 1) + 1))
        return (EXIT_OK if report.holds else EXIT_ENGINE), _dumps(report.to_json())
    raise MajIndexError(f"Error: Unknown command '{command}'")


def run(config):
    """
    Execute one command.

    Args:
        config (CommandConfig): Parsed command

    Returns:
        tuple: (exit_status, output_text); output is None after an engine error
    """
    try:
        status, output = _dispatch(config)
    except ConfigurationError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE, None
    except MajIndexError as e:
        message = str(e)
        print(message if message.startswith('Error') else f"Error: {message}", file=sys.stderr)
        return EXIT_ENGINE, None
    if not output.endswith('\n'):
        output += '\n'
    return status, output


def build_parser():
    parser = argparse.ArgumentParser(
        prog='majindex-cli',
        description='Major index statistics on standard Young tableaux.',
        epilog='Shapes: "5,4,4,2" (straight) or "3,1/2/1,1" (block diagonal).',
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='fmt', choices=FORMATS, default=None, help='Output format')
    common.add_argument('--out', default=None, help='Write output to this file instead of stdout')
    common.add_argument('--workers', type=int, default=None, help='Process count for sweeps')

    sub = parser.add_subparsers(dest='command', required=True)

    def shape_command(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument('shape', help='Shape such as 5,4,4,2 or 3,1/2/1,1')
        return p

    shape_command('gf', 'maj generating function').add_argument(
        '--brute', action='store_true', help='Enumerate tableaux instead of using the hook formula')
    shape_command('support', 'Predicted support and gaps of the fake degrees')
    p = sub.add_parser('check-zeros', parents=[common], help='Compare zeros with the prediction')
    p.add_argument('shape', nargs='?', default=None)
    p.add_argument('--n', type=int, default=None, help='Sweep every partition of size <= N instead')
    shape_command('moments', 'Exact mean, variance and cumulants').add_argument(
        '--max-d', type=int, default=4, dest='max_d')
    shape_command('rotate', 'Rotations and φ of one tableau').add_argument(
        '--tableau', required=True, help='Rows as JSON, e.g. [[1,3],[2]]')
    p = shape_command('fixed-points', 'Tableaux with no rotation')
    p.add_argument('--count-only', action='store_true', dest='count_only')
    shape_command('verify-ranked', 'Check maj(φ(T)) = maj(T) + 1 over SYT(λ)')
    p = sub.add_parser('limit-diagnose', parents=[common], help='Kolmogorov distance along a family')
    p.add_argument('--shapes', required=True, help='File with one shape per line')
    p.add_argument('--law', default='normal', help="'normal' or 'ih:M'")
    shape_command('local-limit', 'Deviation from the Gaussian density')
    p = shape_command('hist', 'Histogram of maj')
    p.add_argument('--csv', action='store_true', help='Same as --format csv')
    p.add_argument('--gaussian', action='store_true', help='Add the Gaussian approximation column')
    p = sub.add_parser('sweep', parents=[common], help='Theorem and conjecture sweeps')
    p.add_argument('sweep', choices=SWEEPS)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--catalan', type=int, default=0)
    p.add_argument('--max-d', type=int, default=6, dest='max_d')
    shape_command('wreath-gf', 'Fake degrees with m = number of blocks').add_argument('--d', type=int, default=1)
    shape_command('block-gf', 'Block diagonal generating function').add_argument('--m', type=int, default=1)
    shape_command('rsyt-bound', 'Check T_c >= h_c over every reverse tableau').add_argument(
        '--max-d', type=int, default=4, dest='max_d')
    return parser


def build_config(args):
    """
    Turn parsed arguments into a CommandConfig.

    Returns:
        tuple: (config or None, error_message)
    """
    fmt = args.fmt
    if getattr(args, 'csv', False):
        fmt = 'csv'
    if fmt is None:
        fmt = COMMAND_FORMATS[args.command][0]
    is_valid, message = validate_format(args.command, fmt)
    if not is_valid:
        return None, message
    config = CommandConfig(command=args.command, fmt=fmt, out=args.out, workers=args.workers)
    try:
        if getattr(args, 'shape', None) is not None:
            config.shape = parse_shape(args.shape)
        if args.command == 'rotate':
            config.tableau = StandardTableau.from_json(json.loads(args.tableau), shape=config.shape)
        if args.command == 'limit-diagnose':
            config.shapes = read_shapes_file(args.shapes)
            config.law = ReferenceLaw.parse(args.law)
    except (MajIndexError, json.JSONDecodeError) as e:
        return None, str(e) if str(e).startswith('Error') else f"Error: {e}"
    except OSError as e:
        return None, f"Error: File '{e.filename}' could not be read"
    if args.command == 'check-zeros' and config.shape is None and args.n is None:
        return None, "Error: check-zeros needs a shape or --n"
    if args.command == 'sweep':
        is_valid, message = validate_sweep(args.sweep, args.n)
        if not is_valid:
            return None, message
        config.sweep = args.sweep
        config.catalan = args.catalan
    for name in ('n', 'max_d', 'm', 'd', 'brute', 'count_only', 'gaussian'):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(config, name, getattr(args, name))
    return config, "OK"


def main(argv=None):
    """Entry point for CLI."""
    try:
        level = log_level()
    except ConfigurationError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    config, message = build_config(args)
    if config is None:
        print(message, file=sys.stderr)
        return EXIT_USAGE
    status, output = run(config)
    if output is None:
        return status
    if config.out:
        with open(config.out, 'w', encoding='utf-8') as fh:
            fh.write(output)
        print(f"Results saved to '{config.out}'")
    else:
        sys.stdout.write(output)
    return status


if __name__ == '__main__':
    sys.exit(main())
