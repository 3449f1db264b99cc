# -*- coding: utf-8 -*-

import math
import logging
import unittest
import mpmath
from ..config import PrecisionConfig
from ..exceptions import TruncationError, DomainError, ParityError

# Setup logging
from .. import logger
logger.setup()


class TestPrecisionConfig(unittest.TestCase):

    def test_defaults(self):
        config = PrecisionConfig(bits=128, n_max=64, y_min=0.5, seed=0)
        self.assertEqual(config.bits, 128)
        self.assertEqual(config.n_max, 64)
        self.assertAlmostEqual(config.tol, 2.0 ** (-128 / 3.0))
        self.assertAlmostEqual(config.derivative_tol, 2.0 ** (-128 / 3.0))
        self.assertEqual(config.decimal_digits, 38)

        config = PrecisionConfig(bits=128, tol=1e-20)
        self.assertEqual(config.tol, 1e-20)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            PrecisionConfig(bits=32)
        with self.assertRaises(ValueError):
            PrecisionConfig(n_max=0)
        with self.assertRaises(ValueError):
            PrecisionConfig(tol=0)
        with self.assertRaises(ValueError):
            PrecisionConfig(y_min=-1)

    def test_replace(self):
        config = PrecisionConfig(bits=96, n_max=10, seed=3)
        other = config.replace(y_min=0.1)
        self.assertEqual(other.bits, 96)
        self.assertEqual(other.n_max, 10)
        self.assertEqual(other.seed, 3)
        self.assertEqual(other.y_min, 0.1)
        self.assertEqual(config.y_min, PrecisionConfig().y_min)

    def test_terms_and_steps(self):
        config = PrecisionConfig(bits=128)
        n = config.terms_for(1, tol=1e-20)
        self.assertLess(math.exp(-2 * math.pi * n), 1e-20)
        self.assertGreaterEqual(math.exp(-2 * math.pi * (n - 1)), 1e-20)

        # Growth of the coefficients requires more terms
        self.assertGreater(config.terms_for(1, tol=1e-20, growth=3), n)

        with self.assertRaises(ValueError):
            config.terms_for(0)

        with config.precision():
            self.assertEqual(mpmath.mp.prec, 128)
            self.assertEqual(config.step(1), mpmath.mpf(2) ** -32)


class TestExceptionsAndLogger(unittest.TestCase):

    def test_exceptions(self):
        error = TruncationError('too short', 120)
        self.assertEqual(error.required_n_max, 120)
        self.assertTrue(issubclass(TruncationError, ValueError))
        self.assertTrue(issubclass(ParityError, DomainError))
        self.assertTrue(issubclass(DomainError, ValueError))

    def test_logger(self):
        eismock_logger = logger.setup()
        self.assertEqual(eismock_logger.name, 'eismock')
        handlers = [h for h in eismock_logger.handlers if h.get_name() == 'eismock_handler']
        self.assertEqual(len(handlers), 1)

        # Reconfiguring with force sets the new level, and does not add handlers
        level = logging.getLevelName(handlers[0].level)
        logger.setup('DEBUG', force=True)
        self.assertEqual(handlers[0].level, logging.DEBUG)
        logger.setup(level, force=True)
        self.assertEqual(len([h for h in eismock_logger.handlers if h.get_name() == 'eismock_handler']), 1)
