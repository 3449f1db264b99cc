# -*- coding: utf-8 -*-

import os
import io
import json
import tempfile
import unittest
from unittest import mock
from fractions import Fraction
import numpy
import mpmath
from ..cli import run, emit_report, _format_value
from ..lfun import zeta_value
from ..exceptions import ConsistencyError

# Setup logging
from .. import logger
logger.setup()


def _json_rows(text):
    return [json.loads(line) for line in text.splitlines() if line]


class TestSerialization(unittest.TestCase):

    def test_format_value(self):
        self.assertIs(_format_value(True, 5), True)
        self.assertIsNone(_format_value(None, 5))
        self.assertEqual(_format_value(3, 5), 3)
        self.assertEqual(_format_value(numpy.int64(7), 5), 7)
        self.assertEqual(_format_value(Fraction(3, 2), 5), '3/2')
        self.assertEqual(_format_value(mpmath.mpf(1), 3), '1.0')
        self.assertEqual(_format_value(mpmath.mpc(1, -2), 3), '1.0-2.0j')
        self.assertEqual(_format_value(complex(0, 1), 3), '0.0+1.0j')
        self.assertEqual(_format_value('combination', 3), 'combination')

    def test_emit_json(self):
        stream = io.StringIO()
        emit_report([{'n': 1, 'pass': True, 'value': mpmath.mpf(2)}], 'json', stream, digits=5)
        self.assertEqual(_json_rows(stream.getvalue()), [{'n': 1, 'pass': True, 'value': '2.0'}])

    def test_emit_csv(self):
        stream = io.StringIO()
        emit_report([], 'csv', stream, ['n', 're', 'im'])
        self.assertEqual(stream.getvalue(), 'n,re,im\n')

        stream = io.StringIO()
        emit_report([{'n': 0, 'pass': False}], 'csv', stream)
        self.assertEqual(stream.getvalue(), 'n,pass\n0,false\n')

        stream = io.StringIO()
        emit_report([], 'csv', stream)
        self.assertEqual(stream.getvalue(), '')

        with self.assertRaises(ValueError):
            emit_report([], 'xml', io.StringIO())


class TestCommandLine(unittest.TestCase):

    def test_mock(self):
        stream = io.StringIO()
        self.assertEqual(run(['mock', '--k', '4', '--n-max', '3'], stream=stream), 0)
        rows = _json_rows(stream.getvalue())
        self.assertEqual([row['n'] for row in rows], [0, 1, 2, 3])
        with mpmath.workprec(128):
            expected = -mpmath.pi * zeta_value(3) / 12
            self.assertLess(abs(mpmath.mpf(rows[0]['re']) - expected), 1e-30)
            self.assertLess(abs(mpmath.mpf(rows[1]['re']) + mpmath.pi / 12), 1e-30)

        # As many significant digits as the precision carries
        digits = rows[0]['re'].lstrip('-').replace('.', '').lstrip('0')
        self.assertLessEqual(len(digits), 38)
        self.assertGreater(len(digits), 30)

    def test_csv_output_file(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'eisenstein.csv')
            self.assertEqual(run(['eisenstein', '--k', '4', '--n-max', '2', '--format', 'csv', '--output', path]), 0)
            with open(path) as f:
                lines = f.read().splitlines()
        self.assertEqual(lines[0], 'n,re,im')
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[1].split(',')[0], '0')

    def test_characters(self):
        stream = io.StringIO()
        self.assertEqual(run(['characters', '-N', '5'], stream=stream), 0)
        rows = _json_rows(stream.getvalue())
        self.assertEqual(len(rows), 4)
        self.assertEqual(sorted(row['order'] for row in rows), [1, 2, 4, 4])

    def test_lfun(self):
        stream = io.StringIO()
        self.assertEqual(run(['lfun', '--psi', 'kronecker:-4', '--s', '1'], stream=stream), 0)
        row = _json_rows(stream.getvalue())[0]
        self.assertIs(row['derivative'], False)
        with mpmath.workprec(128):
            self.assertLess(abs(mpmath.mpf(row['re']) - mpmath.pi / 4), 1e-30)

    def test_lfun_derivative_even(self):
        stream = io.StringIO()
        self.assertEqual(run(['lfun', '--psi', '5:2', '--s', '1', '--derivative', '--bits', '64'], stream=stream), 0)
        row = _json_rows(stream.getvalue())[0]
        self.assertIs(row['derivative'], True)
        with mpmath.workprec(256):
            expected = mpmath.dirichlet(1 + mpmath.mpf(2)**-64, [0, 1, -1, -1, 1], 1)
            self.assertLess(abs(mpmath.mpf(row['re']) - expected), 1e-8)

    def test_disagreement(self):
        stream = io.StringIO()
        with mock.patch('eismock.cli.LValueRequest.evaluate', side_effect=ConsistencyError('routes disagree')):
            self.assertEqual(run(['lfun', '--psi', 'kronecker:5', '--s', '1', '--derivative'], stream=stream), 1)
        self.assertEqual(stream.getvalue(), '')

    def test_verify_counts(self):
        with mock.patch('eismock.cli.modularity_report', return_value=[]) as report:
            self.assertEqual(run(['verify', 'modularity'], stream=io.StringIO()), 0)
        self.assertEqual(report.call_args[0][2], 10)
        with mock.patch('eismock.cli.modularity_report', return_value=[]) as report:
            self.assertEqual(run(['verify', 'modularity', '--points', '3'], stream=io.StringIO()), 0)
        self.assertEqual(report.call_args[0][2], 3)
        with mock.patch('eismock.cli.shadow_report', return_value=[]) as report:
            self.assertEqual(run(['verify', 'shadow'], stream=io.StringIO()), 0)
        self.assertEqual(report.call_args[0][2], 5)

    def test_checks(self):
        self.assertEqual(run(['hecke', '-D', '-4', '--compare', '--n-max', '10'], stream=io.StringIO()), 0)
        self.assertEqual(run(['verify', 'omega'], stream=io.StringIO()), 0)
        self.assertEqual(run(['theta', '--power', '4', '--n-max', '10'], stream=io.StringIO()), 0)

    def test_errors(self):
        # Weight and parity mismatch
        self.assertEqual(run(['mock', '--k', '3'], stream=io.StringIO()), 2)
        self.assertEqual(run(['eisenstein', '--psi', 'foo:1'], stream=io.StringIO()), 2)
        self.assertEqual(run(['hecke', '-D', '-12'], stream=io.StringIO()), 2)
        self.assertEqual(run(['mock', '--n-max', '-1'], stream=io.StringIO()), 2)
        self.assertEqual(run(['frobnicate'], stream=io.StringIO()), 2)
        self.assertEqual(run([], stream=io.StringIO()), 2)
