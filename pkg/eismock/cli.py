# -*- coding: utf-8 -*-
"""The eismock command line interface"""

import sys
import csv
import json
import argparse
from fractions import Fraction

import numpy
import mpmath

from . import logger as eismock_logger
from .chars import character_group, character_label, character_from_label
from .coeffs import EisSpec, eisenstein_coefficients, mock_coefficients, weight_one_symmetry_report
from .config import PrecisionConfig, BITS, N_MAX, SEED
from .forms import (shadow_report, harmonicity_report, modularity_report, lattice_report, omega_report,
                    quasi_modular_report, LATTICE_BOUND)
from .lfun import LValueRequest
from .exceptions import ConsistencyError
from .oracles import (hecke_comparison, hecke_R, hecke_Rplus, theta_power_report, theta_two_chain,
                      class_number_one_theta, normalized_level_one, normalization_audit, class_number)

# Setup logging
import logging
logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv')
COEFFICIENT_FIELDS = ['n', 're', 'im']
SAMPLE_POINTS = 5
MODULARITY_ELEMENTS = 10


#==============================
#  Serialization
#==============================

def _format_real(value, digits):
    return mpmath.nstr(mpmath.mpf(value), digits)


def _format_value(value, digits):
    """Render a report value: numbers at full precision as decimal strings, the rest as is."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, numpy.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, mpmath.mpf)):
        return _format_real(value, digits)
    if isinstance(value, (complex, mpmath.mpc)):
        value = mpmath.mpc(value)
        imag = _format_real(abs(value.imag), digits)
        return '{}{}{}j'.format(_format_real(value.real, digits), '-' if value.imag < 0 else '+', imag)
    return str(value)


def emit_report(rows, fmt='json', stream=None, fields=None, digits=None):
    """Serialize report rows, one JSON object per line or a CSV table.

    Args:
        rows(list): the report rows, as dictionaries.
        fmt(str): json or csv.
        stream: where to write. Defaults to stdout.
        fields(list): the CSV columns. Defaults to the keys of the first row.
        digits(int): significant digits of numeric values. Defaults to the working precision.
    """
    stream = sys.stdout if stream is None else stream
    digits = mpmath.mp.dps if digits is None else digits
    if fmt not in FORMATS:
        raise ValueError('Sorry, unknown format "{}" (choose from {})'.format(fmt, ', '.join(FORMATS)))
    rows = [{key: _format_value(value, digits) for key, value in row.items()} for row in rows]
    if fmt == 'json':
        for row in rows:
            stream.write(json.dumps(row, sort_keys=True) + '\n')
        return
    if fields is None:
        fields = list(rows[0].keys()) if rows else []
    writer = csv.DictWriter(stream, fieldnames=fields, lineterminator='\n', extrasaction='ignore')
    if fields:
        writer.writeheader()
    for row in rows:
        writer.writerow({key: ('true' if value is True else 'false' if value is False else value) for key, value in row.items()})


def coefficient_rows(series):
    return [{'n': n, 're': mpmath.re(c), 'im': mpmath.im(c)} for n, c in enumerate(series.coefficients)]


#==============================
#  Subcommands
#==============================

def _spec(args):
    return EisSpec(args.k, character_from_label(args.psi), character_from_label(args.rho), args.t)


def cmd_characters(args, config):
    rows = []
    for chi in character_group(args.modulus):
        label = character_label(chi)
        rows.append({'modulus': label['modulus'], 'exponents': ','.join(str(e) for e in label['exponents']),
                     'conductor': label['conductor'], 'order': chi.order, 'parity': chi.parity,
                     'primitive': chi.is_primitive()})
    return rows, None


def cmd_eisenstein(args, config):
    return coefficient_rows(eisenstein_coefficients(_spec(args), config.n_max)), COEFFICIENT_FIELDS


def cmd_mock(args, config):
    return coefficient_rows(mock_coefficients(_spec(args), config.n_max)), COEFFICIENT_FIELDS


def cmd_verify(args, config):
    check = args.check
    points = args.points
    if points is None:
        points = MODULARITY_ELEMENTS if check == 'modularity' else SAMPLE_POINTS
    if check == 'shadow':
        return shadow_report(_spec(args), config, points), None
    if check == 'laplacian':
        return harmonicity_report(_spec(args), config, points), None
    if check == 'modularity':
        return modularity_report(_spec(args), config, points), None
    if check == 'lattice':
        return lattice_report([_spec(args)], config, bound=args.lattice_bound), None
    if check == 'omega':
        return omega_report(config), None
    if check == 'quasi':
        return quasi_modular_report(config, points), None
    if check == 'symmetry':
        return weight_one_symmetry_report(character_from_label(args.psi), character_from_label(args.rho),
                                          args.t, config.n_max, config.tol), None
    if check == 'audit':
        return normalization_audit(args.power, config, points), None
    raise ValueError('Sorry, unknown check "{}"'.format(check))


def cmd_hecke(args, config):
    if args.compare:
        return hecke_comparison(args.D, config.n_max), None
    rows = []
    for n in range(config.n_max + 1):
        rows.append({'n': n, 'R': hecke_R(args.D, n) if n else class_number(args.D).h_over_u,
                     'Rplus': hecke_Rplus(args.D, n)})
    return rows, None


def cmd_theta(args, config):
    if args.power == 2 and args.chain:
        return theta_two_chain(config.n_max), None
    return theta_power_report(args.power, config.n_max, config), None


def cmd_theta_d(args, config):
    return class_number_one_theta(args.D, config.n_max), None


def cmd_level_one(args, config):
    normalized, mock = normalized_level_one(args.k, config.n_max)
    rows = [{'n': n, 'E': mpmath.re(normalized[n]), 'mock_re': mpmath.re(mock[n]), 'mock_im': mpmath.im(mock[n])}
            for n in range(config.n_max + 1)]
    return rows, ['n', 'E', 'mock_re', 'mock_im']


def cmd_lfun(args, config):
    chi = character_from_label(args.psi)
    value = LValueRequest(chi, args.s, 1 if args.derivative else 0).evaluate()
    return [{'s': args.s, 'derivative': args.derivative, 're': mpmath.re(value), 'im': mpmath.im(value)}], None


#==============================
#  Parser
#==============================

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n-max', type=int, default=N_MAX, dest='n_max', help='Truncation order (default: {}).'.format(N_MAX))
    common.add_argument('--bits', type=int, default=BITS, help='Working precision in bits (default: {}).'.format(BITS))
    common.add_argument('--tol', type=float, default=None, help='Report tolerance (default: 2^(-bits/3)).')
    common.add_argument('--seed', type=int, default=SEED, help='Seed of the pseudorandom sampling (default: {}).'.format(SEED))
    common.add_argument('--format', choices=FORMATS, default='json', help='Output format (default: json).')
    common.add_argument('--output', default=None, help='Output file (default: stdout).')
    common.add_argument('--loglevel', default=None, help='Force the log level.')

    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument('--k', type=int, default=4, help='The weight (default: 4).')
    spec.add_argument('--psi', default='trivial:1', help='Label of the character psi (default: trivial:1).')
    spec.add_argument('--rho', default='trivial:1', help='Label of the character rho (default: trivial:1).')
    spec.add_argument('--t', type=int, default=1, help='The scaling integer t (default: 1).')

    parser = argparse.ArgumentParser(prog='eismock', description='Eisenstein series, their mock modular pre-images and numerical checks.')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    sub = commands.add_parser('characters', parents=[common], help='List the Dirichlet characters of a modulus.')
    sub.add_argument('--modulus', '-N', type=int, required=True)
    sub.set_defaults(handler=cmd_characters)

    sub = commands.add_parser('eisenstein', parents=[common, spec], help='Fourier coefficients of E_k^{psi,rho,t}.')
    sub.set_defaults(handler=cmd_eisenstein)

    sub = commands.add_parser('mock', parents=[common, spec], help='Holomorphic coefficients of the pre-image.')
    sub.set_defaults(handler=cmd_mock)

    sub = commands.add_parser('verify', parents=[common, spec], help='Run a verification suite.')
    sub.add_argument('check', choices=['shadow', 'laplacian', 'modularity', 'lattice', 'omega', 'quasi', 'symmetry', 'audit'])
    sub.add_argument('--points', type=int, default=None,
                     help='Number of sample points, or of matrices for modularity (default: {}, or {} for modularity).'.format(SAMPLE_POINTS, MODULARITY_ELEMENTS))
    sub.add_argument('--lattice-bound', type=int, default=LATTICE_BOUND, dest='lattice_bound',
                     help='Half side of the summed lattice square (default: {}).'.format(LATTICE_BOUND))
    sub.add_argument('--power', type=int, default=8, choices=[4, 6, 8], help='Theta power of the audit (default: 8).')
    sub.set_defaults(handler=cmd_verify)

    sub = commands.add_parser('hecke', parents=[common], help="Hecke's coefficients R_D(n) and R+_D(n).")
    sub.add_argument('-D', type=int, required=True, dest='D')
    sub.add_argument('--compare', action='store_true', help='Compare both formulas with the coefficient engine.')
    sub.set_defaults(handler=cmd_hecke)

    sub = commands.add_parser('theta', parents=[common], help='Theta power identities.')
    sub.add_argument('--power', type=int, default=4, choices=[2, 4, 6, 8])
    sub.add_argument('--chain', action='store_true', help='For power 2, compare the pre-image with its closed form.')
    sub.set_defaults(handler=cmd_theta)

    sub = commands.add_parser('theta-d', parents=[common], help='Theta series of class number one fields.')
    sub.add_argument('-D', type=int, required=True, dest='D')
    sub.set_defaults(handler=cmd_theta_d)

    sub = commands.add_parser('level-one', parents=[common], help='Normalized level one E_k and its pre-image.')
    sub.add_argument('--k', type=int, default=4)
    sub.set_defaults(handler=cmd_level_one)

    sub = commands.add_parser('lfun', parents=[common], help='Dirichlet L-values and derivatives.')
    sub.add_argument('--psi', default='trivial:1')
    sub.add_argument('--s', type=int, default=0)
    sub.add_argument('--derivative', action='store_true')
    sub.set_defaults(handler=cmd_lfun)

    return parser


def run(argv=None, stream=None):
    """Run the command line and return the exit status: 0 on success, 1 if a check
    failed or two routes to a value disagreed, 2 on usage or domain errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.loglevel:
        eismock_logger.setup(args.loglevel, force=True)
    else:
        eismock_logger.setup()

    try:
        config = PrecisionConfig(bits=args.bits, n_max=args.n_max, tol=args.tol, seed=args.seed)
        with config.precision():
            rows, fields = args.handler(args, config)
            if args.output:
                with open(args.output, 'w', newline='') as f:
                    emit_report(rows, args.format, f, fields, config.decimal_digits)
            else:
                emit_report(rows, args.format, stream, fields, config.decimal_digits)
    except ValueError as e:
        sys.stderr.write('eismock: error: {}\n'.format(e))
        return 2
    except ConsistencyError as e:
        sys.stderr.write('eismock: check failed: {}\n'.format(e))
        return 1

    failed = [row for row in rows if row.get('pass') is False]
    if failed:
        logger.warning('%s of %s checks failed', len(failed), len(rows))
        return 1
    return 0


def main():
    sys.exit(run())
