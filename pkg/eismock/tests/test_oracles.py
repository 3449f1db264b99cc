# -*- coding: utf-8 -*-

import unittest
from fractions import Fraction
import mpmath
from ..config import PrecisionConfig
from ..forms import modularity_report, summarize
from ..lfun import l_derivative, zeta_value
from ..oracles import (sum_of_squares_table, sum_of_squares_count, reduced_forms, class_number, ImaginaryQuadraticData,
                       CLASS_NUMBER_ONE, hecke_R, hecke_Rplus, hecke_E1, mock_e1d, hecke_comparison, theta_series_count,
                       class_number_one_theta, mock_theta_d, log_shifted_mock_e1d, normalized_level_one, theta_combination,
                       theta_shadow, theta_preimage, closed_form_theta_mock, theta_two_chain, theta_power_report,
                       normalization_audit)
from ..utils import is_fundamental_discriminant
from ..exceptions import DomainError

# Setup logging
from .. import logger
logger.setup()

CONFIG = PrecisionConfig(bits=128, n_max=64, seed=0)


class TestSumsOfSquares(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(sum_of_squares_count(5, 2), 8)
        self.assertEqual(sum_of_squares_count(3, 2), 0)
        self.assertEqual(sum_of_squares_count(2, 4), 24)
        self.assertEqual(sum_of_squares_count(1, 6), 12)
        self.assertEqual(sum_of_squares_count(2, 6), 60)
        self.assertEqual(sum_of_squares_count(2, 8), 112)
        self.assertEqual(list(sum_of_squares_table(10, 2)), [1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8])
        self.assertEqual(sum_of_squares_count(0, 8), 1)

        with self.assertRaises(ValueError):
            sum_of_squares_table(-1, 2)
        with self.assertRaises(ValueError):
            sum_of_squares_table(10, 0)


class TestImaginaryQuadratic(unittest.TestCase):

    def test_class_numbers(self):
        self.assertEqual(class_number(-4).h, 1)
        self.assertEqual(class_number(-4).u, 4)
        self.assertEqual(class_number(-3).u, 6)
        self.assertEqual(class_number(-23).h, 3)
        self.assertEqual(class_number(-163).h, 1)
        self.assertEqual(class_number(-20).h, 2)
        self.assertEqual(class_number(-23).h_over_u, Fraction(3, 2))
        self.assertEqual(reduced_forms(-23), [(1, 1, 6), (2, -1, 3), (2, 1, 3)])

        with self.assertRaises(DomainError):
            class_number(-12)
        with self.assertRaises(DomainError):
            ImaginaryQuadraticData(5)

    def test_class_number_one(self):
        found = tuple(D for D in range(-200, 0) if is_fundamental_discriminant(D) and class_number(D).is_class_number_one())
        self.assertEqual(tuple(sorted(found, reverse=True)), CLASS_NUMBER_ONE)

    def test_class_number_formula(self):
        for D in range(-150, 0):
            if is_fundamental_discriminant(D):
                self.assertTrue(class_number(D).class_number_formula_holds(), D)


class TestHecke(unittest.TestCase):

    def setUp(self):
        mpmath.mp.prec = 128

    def tearDown(self):
        mpmath.mp.prec = 53

    def test_R(self):
        self.assertEqual(hecke_R(-4, 5), 2)
        self.assertEqual(hecke_R(-4, 3), 0)
        self.assertEqual(hecke_R(-4, 9), 1)
        counts = sum_of_squares_table(100, 2)
        for n in range(1, 101):
            self.assertEqual(4 * hecke_R(-4, n), counts[n])
        with self.assertRaises(ValueError):
            hecke_R(-4, 0)

    def test_Rplus(self):
        self.assertEqual(hecke_Rplus(-4, 1), 0)
        for method in ('definitional', 'factorization'):
            self.assertLess(abs(hecke_Rplus(-4, 3, method) + 2 * mpmath.log(3)), 1e-35)
            self.assertLess(abs(hecke_Rplus(-4, 9, method)), 1e-35)

        for D in (-3, -4, -7, -8, -15, -23):
            for n in range(0, 40):
                definitional = hecke_Rplus(D, n, 'definitional')
                factorization = hecke_Rplus(D, n, 'factorization')
                self.assertLess(abs(definitional - factorization), 1e-30 * max(1, abs(definitional)), (D, n))

        self.assertEqual(hecke_Rplus(-7, 12, 'proposition'), hecke_Rplus(-7, 12, 'factorization'))

    def test_Rplus_methods_agree(self):
        for D in (-3, -4, -7, -8, -11, -15, -20, -23):
            for n in range(1, 501):
                definitional = hecke_Rplus(D, n, 'definitional')
                factorization = hecke_Rplus(D, n, 'factorization')
                self.assertLess(abs(definitional - factorization), 1e-25 * max(1, abs(definitional)), (D, n))

        with self.assertRaises(ValueError):
            hecke_Rplus(-4, 3, 'guess')
        with self.assertRaises(ValueError):
            hecke_Rplus(-4, -1)

    def test_series(self):
        series = hecke_E1(-23, 10)
        self.assertLess(abs(series[0] - mpmath.mpf(3) / 2), 1e-35)
        for n in range(1, 11):
            self.assertLess(abs(series[n] - hecke_R(-23, n)), 1e-30)

        form = mock_e1d(-4, 10)
        self.assertEqual(form.weight, 1)
        self.assertLess(abs(form.shadow[0] - mpmath.mpf(1) / 4), 1e-35)
        self.assertLess(abs(form.holo[3] + 2 * mpmath.log(3)), 1e-30)

    def test_comparison(self):
        for D in (-4, -7, -20):
            rows = hecke_comparison(D, 30)
            self.assertEqual(len(rows), 31)
            self.assertTrue(summarize(rows), D)

    def test_mock_e1d_modularity(self):
        rows = modularity_report(None, CONFIG, count=3, build=lambda n_max: mock_e1d(-7, n_max))
        self.assertTrue(summarize(rows))

    def test_log_shifted(self):
        D = -7
        form = log_shifted_mock_e1d(D, 5)
        base = mock_e1d(D, 5)
        self.assertLess(abs(form.holo[0] - base.holo[0] + mpmath.log(7) / 2), 1e-30)
        self.assertLess(abs(form.holo[2] - base.holo[2] + mpmath.log(7) * hecke_R(D, 2)), 1e-30)


class TestThetaSeries(unittest.TestCase):

    def setUp(self):
        mpmath.mp.prec = 128

    def tearDown(self):
        mpmath.mp.prec = 53

    def test_counts(self):
        self.assertEqual(theta_series_count(-4, 10), [1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8])
        self.assertEqual(theta_series_count(-3, 4), [1, 6, 0, 6, 6])

    def test_class_number_one(self):
        for D in CLASS_NUMBER_ONE:
            rows = class_number_one_theta(D, 60)
            self.assertTrue(summarize(rows), D)
        with self.assertRaises(DomainError):
            class_number_one_theta(-23, 10)
        with self.assertRaises(DomainError):
            mock_theta_d(-23, 10)

    def test_mock_theta(self):
        form = mock_theta_d(-4, 10)
        self.assertLess(abs(form.shadow[0] - 1), 1e-35)
        self.assertLess(abs(form.shadow[5] - 8), 1e-30)
        psi = class_number(-4).character
        expected = 2 * mpmath.log(2) + mpmath.log(mpmath.pi) + mpmath.euler - 4 * l_derivative(psi, 0)
        self.assertLess(abs(form.holo[0] - expected), 1e-30)

    def test_theta_two_chain(self):
        rows = theta_two_chain(30)
        self.assertEqual(len(rows), 32)
        self.assertTrue(summarize(rows))


class TestLevelOne(unittest.TestCase):

    def setUp(self):
        mpmath.mp.prec = 128

    def tearDown(self):
        mpmath.mp.prec = 53

    def test_normalized(self):
        normalized, mock = normalized_level_one(4, 6)
        self.assertEqual(normalized[0], 1)
        self.assertEqual(normalized[1], 240)
        self.assertEqual(normalized[2], 240 * 9)
        self.assertLess(abs(mock[0] + mpmath.pi * zeta_value(3) / (12 * zeta_value(4))), 1e-35)

        normalized, mock = normalized_level_one(6, 3)
        self.assertEqual(normalized[1], -504)
        normalized, mock = normalized_level_one(12, 2)
        self.assertLess(abs(normalized[1] - mpmath.mpf(65520) / 691), 1e-30)

        with self.assertRaises(DomainError):
            normalized_level_one(2, 5)
        with self.assertRaises(DomainError):
            normalized_level_one(5, 5)


class TestThetaPowers(unittest.TestCase):

    def test_combinations(self):
        with CONFIG.precision():
            self.assertEqual([len(theta_combination(p)) for p in (2, 4, 6, 8)], [1, 1, 2, 3])
            with self.assertRaises(DomainError):
                theta_combination(3)
            with self.assertRaises(DomainError):
                closed_form_theta_mock(2, 5)

    def test_identities(self):
        for power in (2, 4, 6, 8):
            rows = theta_power_report(power, 40, CONFIG)
            self.assertEqual(len(rows), 41)
            self.assertTrue(summarize(rows), power)
        with self.assertRaises(ValueError):
            theta_power_report(4, 0, CONFIG)

    def test_shadow_and_preimage(self):
        with CONFIG.precision():
            shadow = theta_shadow(8, 5)
            self.assertEqual(shadow.level, 4)
            self.assertLess(abs(shadow[2] - 112), 1e-30)
            form = theta_preimage(4, 5)
            self.assertEqual(form.level, 4)
            self.assertEqual(form.weight, 0)
            self.assertLess(abs(form.shadow[1] - 8), 1e-30)

            # The closed form of Theta^6 matches the combination
            closed_form = closed_form_theta_mock(6, 8)
            form = theta_preimage(6, 8)
            for n in range(9):
                self.assertLess(abs(closed_form[n] - form.holo[n]), 1e-30)

    def test_audit_theta4(self):
        rows = normalization_audit(4, CONFIG, count=3)
        combination, closed_form = rows
        self.assertTrue(combination['modular'])
        self.assertFalse(closed_form['modular'])
        self.assertFalse(combination['agrees'])
        self.assertLess(abs(combination['ratio_n1'] - mpmath.mpf(1) / 2), 1e-30)
        self.assertLess(abs(combination['constant_ratio'] - mpmath.mpf(1) / 2), 1e-30)
        self.assertEqual(combination['verdict'], 'combination')
        self.assertTrue(summarize(rows))

    def test_audit_theta6(self):
        rows = normalization_audit(6, CONFIG, count=3)
        self.assertTrue(all(row['modular'] for row in rows))
        self.assertTrue(rows[0]['agrees'])
        self.assertEqual(rows[0]['verdict'], 'both')
        self.assertTrue(summarize(rows))

    def test_audit_theta8(self):
        rows = normalization_audit(8, CONFIG, count=3)
        combination, closed_form = rows
        self.assertTrue(combination['modular'])
        self.assertFalse(closed_form['modular'])
        self.assertLess(abs(combination['ratio_n1'] - 2), 1e-30)
        self.assertLess(abs(combination['constant_ratio'] - 1), 1e-30)
        self.assertEqual(closed_form['verdict'], 'combination')
        self.assertTrue(summarize(rows))
