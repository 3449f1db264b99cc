# -*- coding: utf-8 -*-

import unittest
import mpmath
from ..chars import trivial_character, kronecker_character
from ..coeffs import EisSpec, eisenstein_coefficients
from ..config import PrecisionConfig
from ..forms import (UpperHalfPoint, GammaZeroElement, HarmonicMaassForm, sample_gamma0, sample_point, sample_points,
                     assemble_harmonic, assemble_for, beta_integral, omega_function, evaluate, required_terms, tail_bound,
                     nonholomorphic_fourier, preimage_fourier, lattice_eisenstein, lattice_preimage, lattice_tail_bound,
                     xi_numeric, laplacian_numeric, modularity_residual, shadow_report, harmonicity_report,
                     modularity_report, lattice_report, omega_report, quasi_modular_report, summarize, default_specs)
from ..exceptions import DomainError, TruncationError

# Setup logging
from .. import logger
logger.setup()

ONE = trivial_character(1)
PSI = kronecker_character(-4)
CONFIG = PrecisionConfig(bits=128, n_max=64, seed=0)


class TestPointsAndMatrices(unittest.TestCase):

    def test_points(self):
        point = UpperHalfPoint(0.5, 2)
        self.assertEqual(point.z, mpmath.mpc(0.5, 2))
        self.assertEqual(UpperHalfPoint.from_complex(1 + 3j).y, 3)
        with self.assertRaises(DomainError):
            UpperHalfPoint(0, 0)
        with self.assertRaises(DomainError):
            UpperHalfPoint.from_complex(1 - 1j)

    def test_gamma_zero(self):
        S = GammaZeroElement(0, -1, 1, 0)
        self.assertLess(abs(S.apply(1j) - 1j), 1e-15)
        self.assertEqual(S.automorphy(2j), 2j)
        self.assertEqual(S.as_list(), [0, -1, 1, 0])

        GammaZeroElement(1, 0, 4, 1, level=4)
        with self.assertRaises(DomainError):
            GammaZeroElement(1, 0, 1, 1, level=2)
        with self.assertRaises(DomainError):
            GammaZeroElement(1, 1, 1, 1)
        with self.assertRaises(DomainError):
            GammaZeroElement(1.0, 0, 0, 1)

    def test_sampling(self):
        elements = sample_gamma0(4, 10, seed=0)
        self.assertEqual(len(elements), 10)
        for gamma in elements:
            self.assertEqual(gamma.c % 4, 0)
            self.assertNotEqual(gamma.c, 0)
            self.assertEqual(gamma.a * gamma.d - gamma.b * gamma.c, 1)

        # Deterministic for a given seed
        self.assertEqual([g.as_list() for g in sample_gamma0(4, 10, seed=0)], [g.as_list() for g in elements])

        # Above the bound the lower left entry is plus or minus the level
        for level in (24, 25):
            large = sample_gamma0(level, 6, seed=1, bound=20)
            self.assertEqual(len(large), 6)
            for gamma in large:
                self.assertEqual(abs(gamma.c), level)
                self.assertEqual(gamma.a * gamma.d - gamma.b * gamma.c, 1)
                self.assertLessEqual(abs(gamma.d), 20)

        # Both the point and its image sit at height about 1/|c|
        for gamma in elements:
            point = sample_point(gamma)
            image = UpperHalfPoint.from_complex(gamma.apply(point))
            self.assertAlmostEqual(float(point.y), 1.0 / abs(gamma.c))
            self.assertGreater(float(image.y), 0.9 / abs(gamma.c))

        for point in sample_points(10, seed=3):
            self.assertTrue(0.8 <= point.y <= 2)
            self.assertTrue(-0.5 <= point.x <= 0.5)


class TestSpecialFunctions(unittest.TestCase):

    def setUp(self):
        mpmath.mp.prec = 128

    def tearDown(self):
        mpmath.mp.prec = 53

    def test_beta(self):
        y = mpmath.mpf('1.5')
        self.assertLess(abs(beta_integral(-2, 0, y) + y**3 / 3), 1e-35)
        self.assertLess(abs(beta_integral(0, 0, y) + y), 1e-35)
        self.assertLess(abs(beta_integral(1, 0, y) + mpmath.log(y)), 1e-35)

        # Weight zero: Gamma(1, x) = exp(-x)
        x = 4 * mpmath.pi * 3
        self.assertLess(abs(beta_integral(0, 3, y) - mpmath.exp(-x * y) / x), 1e-40)

        with self.assertRaises(DomainError):
            beta_integral(3, 1, y)
        with self.assertRaises(DomainError):
            beta_integral(-2, 1, 0)
        with self.assertRaises(DomainError):
            beta_integral(-2, -1, y)

    def test_omega(self):
        for y in (mpmath.mpf('0.7'), mpmath.mpf(3)):
            self.assertLess(abs(omega_function(y, 2, 0) - 1), 1e-35)
            left = omega_function(y, mpmath.mpf('-0.5'), mpmath.mpf('0.5'))
            right = omega_function(y, mpmath.mpf('0.5'), mpmath.mpf('1.5'))
            self.assertLess(abs(left - right), 1e-25)
            quadrature = omega_function(y, 3, 1)
            hypergeometric = omega_function(y, 3, 1, method='hypergeometric')
            self.assertLess(abs(quadrature - hypergeometric), 1e-25)

        with self.assertRaises(DomainError):
            omega_function(0, 1, 1)
        with self.assertRaises(DomainError):
            omega_function(1, 1, -1)
        with self.assertRaises(ValueError):
            omega_function(1, 1, 1, method='guess')

    def test_omega_report(self):
        rows = omega_report(CONFIG)
        self.assertTrue(summarize(rows))
        checks = set(row['check'] for row in rows)
        self.assertEqual(checks, {'zero', 'symmetry', 'methods', 'bridge'})


class TestEvaluation(unittest.TestCase):

    def test_level_one_values(self):
        with CONFIG.precision():
            E4 = eisenstein_coefficients(EisSpec(4, ONE, ONE), 64)
            E6 = eisenstein_coefficients(EisSpec(6, ONE, ONE), 64)
            expected = 3 * mpmath.gamma(mpmath.mpf(1) / 4)**8 / (2 * mpmath.pi)**6 * mpmath.pi**4 / 90
        value = evaluate(E4, 1j, CONFIG)
        self.assertLess(abs(value - expected), 1e-30)
        self.assertLess(abs(evaluate(E6, 1j, CONFIG)), 1e-30)

        value, bound = evaluate(E4, 1j, CONFIG, with_bound=True)
        self.assertLess(bound, CONFIG.tol)

    def test_truncation(self):
        with CONFIG.precision():
            E4 = eisenstein_coefficients(EisSpec(4, ONE, ONE), 3)
        with self.assertRaises(TruncationError) as context:
            evaluate(E4, 0.6j, CONFIG)
        self.assertGreater(context.exception.required_n_max, 3)

        with self.assertRaises(DomainError):
            evaluate(E4, 0.1j, CONFIG)

        with CONFIG.precision():
            form = assemble_harmonic(EisSpec(4, ONE, ONE), 10)
            self.assertGreater(required_terms(form, 0.5, CONFIG), required_terms(form, 2, CONFIG))
            self.assertLess(tail_bound(form, 2), tail_bound(form, 1))
            form = assemble_for(EisSpec(4, ONE, ONE), mpmath.mpf('0.3'), CONFIG)
            self.assertGreaterEqual(form.n_max, required_terms(form, mpmath.mpf('0.3'), CONFIG))

    def test_harmonic_form(self):
        with CONFIG.precision():
            form = assemble_harmonic(EisSpec(3, PSI, ONE), 20)
            self.assertEqual(form.weight, -1)
            self.assertEqual(form.level, 4)
            self.assertEqual(form.n_max, 20)
            scaled = form.scale(mpmath.mpc(0, 2))
            self.assertLess(abs(scaled.holo[1] - 2j * form.holo[1]), 1e-30)
            self.assertLess(abs(scaled.shadow[1] + 2j * form.shadow[1]), 1e-30)
            total = form + form
            self.assertLess(abs(total.shadow[3] - 2 * form.shadow[3]), 1e-30)
            with self.assertRaises(ValueError):
                HarmonicMaassForm(form.holo, eisenstein_coefficients(EisSpec(4, ONE, ONE), 5))


class TestNonHolomorphicEisenstein(unittest.TestCase):

    def test_holomorphic_limit(self):
        z = mpmath.mpc('0.1', '1.1')
        with CONFIG.precision():
            E4 = eisenstein_coefficients(EisSpec(4, ONE, ONE), 64)
            E3 = eisenstein_coefficients(EisSpec(3, ONE, PSI), 64)
        value = nonholomorphic_fourier(z, 0, 4, ONE, ONE, n_max=64, config=CONFIG)
        self.assertLess(abs(value - evaluate(E4, z, CONFIG)), 1e-30)

        # y^0 E_3(4z, 0, 1, psi) is the series with rho conjugated, psi real
        value = nonholomorphic_fourier(z, 0, 3, ONE, PSI, n_max=64, config=CONFIG)
        self.assertLess(abs(value - evaluate(E3, z, CONFIG)), 1e-30)

    def test_preimage(self):
        z = mpmath.mpc('0.2', '1.1')
        for spec in (EisSpec(4, ONE, ONE), EisSpec(3, PSI, ONE), EisSpec(4, ONE, ONE, 2)):
            with CONFIG.precision():
                form = assemble_harmonic(spec, 64)
            value = evaluate(form, z, CONFIG)
            self.assertLess(abs(preimage_fourier(spec, z, n_max=64, config=CONFIG) - value), 1e-25 * max(1, abs(value)))

        with self.assertRaises(DomainError):
            preimage_fourier(EisSpec(2, ONE, ONE, 2), z)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            nonholomorphic_fourier(1j, 0, 2, ONE, ONE)
        with self.assertRaises(DomainError):
            nonholomorphic_fourier(1j, -1, 6, ONE, ONE)
        with self.assertRaises(DomainError):
            nonholomorphic_fourier(1j, 0.5, 4, ONE, ONE)


class TestLattice(unittest.TestCase):

    def test_holomorphic(self):
        z = mpmath.mpc('0.1', '1.1')
        with CONFIG.precision():
            E4 = eisenstein_coefficients(EisSpec(4, ONE, ONE), 64)
            expected = evaluate(E4, z, CONFIG)
        value = lattice_eisenstein(z, 0, 4, ONE, ONE, bound=200)
        self.assertLess(abs(value - expected), 1e-8 * abs(expected))

        # Without extrapolation the truncation error is of the order of the tail bound
        plain = lattice_eisenstein(z, 0, 4, ONE, ONE, bound=200, richardson=False)
        self.assertGreater(abs(plain - expected), abs(value - expected))
        self.assertLess(abs(plain - expected), lattice_tail_bound(z, 4, 200))

    def test_preimage(self):
        z = mpmath.mpc(mpmath.mpf(1) / 3, mpmath.mpf(6) / 5)
        spec = EisSpec(4, ONE, ONE)
        with CONFIG.precision():
            form = assemble_harmonic(spec, 64)
            value = evaluate(form, z, CONFIG)
        self.assertLess(abs(lattice_preimage(spec, z, bound=200) - value), 1e-8)

    def test_report(self):
        rows = lattice_report(config=CONFIG)
        self.assertEqual(len(rows), 8)
        self.assertTrue(summarize(rows))
        # Level one weight six is among the defaults
        self.assertEqual(sum(row['spec'].startswith('k=6 psi=1:') for row in rows), 2)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            lattice_eisenstein(1j, 0, 2, ONE, ONE)
        with self.assertRaises(DomainError):
            lattice_tail_bound(1j, 2, 100)
        with self.assertRaises(DomainError):
            lattice_eisenstein(1j, 0, 4, PSI, ONE, bound=8)
        with self.assertRaises(DomainError):
            lattice_preimage(EisSpec(2, ONE, ONE, 2), 1j)


class TestDifferentialOperators(unittest.TestCase):

    def test_xi_of_beta_term(self):
        # xi_{-1} of beta_{-1}(1, y) q^{-1} is -q
        def f(w):
            return beta_integral(-1, 1, mpmath.im(w)) * mpmath.exp(-2 * mpmath.pi * mpmath.mpc(0, 1) * w)

        z = mpmath.mpc('0.1', '1')
        with CONFIG.precision():
            expected = -mpmath.exp(2 * mpmath.pi * mpmath.mpc(0, 1) * z)
            value = xi_numeric(f, z, -1, config=CONFIG)
            self.assertLess(abs(value - expected), CONFIG.derivative_tol * abs(expected))

            # Holomorphic functions are annihilated
            self.assertLess(abs(xi_numeric(lambda w: w**3, z, 2, config=CONFIG)), CONFIG.derivative_tol)

        with self.assertRaises(DomainError):
            xi_numeric(f, z, -1, h=0.6, config=CONFIG)

    def test_laplacian(self):
        z = mpmath.mpc('0.1', '1.2')
        with CONFIG.precision():
            E4 = eisenstein_coefficients(EisSpec(4, ONE, ONE), 64)
            self.assertLess(abs(laplacian_numeric(E4, z, 4, config=CONFIG)), CONFIG.derivative_tol * abs(evaluate(E4, z, CONFIG)))

            # y^s is an eigenfunction of the weight zero Laplacian with eigenvalue s(s-1)
            value = laplacian_numeric(lambda w: mpmath.im(w)**3, z, 0, config=CONFIG)
            self.assertLess(abs(value - 6 * mpmath.im(z)**3), CONFIG.derivative_tol * 10)

    def test_modularity_residual(self):
        with CONFIG.precision():
            E4 = eisenstein_coefficients(EisSpec(4, ONE, ONE), 64)
            S = GammaZeroElement(0, -1, 1, 0)
            z = mpmath.mpc('0.1', '1.1')
            self.assertLess(modularity_residual(E4, S, z, config=CONFIG), CONFIG.tol)

            E4_at_4 = eisenstein_coefficients(EisSpec(4, ONE, ONE, 4), 64)
            with self.assertRaises(DomainError):
                modularity_residual(E4_at_4, S, z, config=CONFIG)
            with self.assertRaises(DomainError):
                modularity_residual(E4, [0, -1, 1, 0], z, config=CONFIG)


class TestReports(unittest.TestCase):

    def test_default_specs(self):
        specs = default_specs()
        self.assertEqual([spec.k for spec in specs], [4, 3, 3, 2, 2, 1, 1])
        self.assertEqual([spec.t for spec in specs], [1, 1, 1, 4, 2, 1, 1])
        self.assertEqual([spec.psi.modulus for spec in specs], [1, 4, 1, 1, 1, 4, 3])
        self.assertEqual([spec.rho.modulus for spec in specs], [1, 1, 4, 1, 1, 1, 1])

    def test_shadow_and_harmonicity(self):
        for spec in default_specs():
            rows = shadow_report(spec, CONFIG, points=2)
            self.assertEqual(len(rows), 2)
            self.assertTrue(summarize(rows), spec)
            rows = harmonicity_report(spec, CONFIG, points=2)
            self.assertTrue(summarize(rows), spec)

    def test_modularity(self):
        for spec in default_specs():
            rows = modularity_report(spec, CONFIG, count=3)
            self.assertEqual(len(rows), 3)
            self.assertTrue(summarize(rows), spec)

    def test_holomorphic_part_alone_is_not_modular(self):
        spec = EisSpec(4, ONE, ONE)
        rows = modularity_report(spec, CONFIG, count=3, build=lambda n_max: assemble_harmonic(spec, n_max).holo)
        self.assertFalse(any(row['pass'] for row in rows))

    def test_quasi_modular(self):
        rows = quasi_modular_report(CONFIG, points=2)
        self.assertEqual(len(rows), 4)
        self.assertTrue(summarize(rows))
        self.assertEqual([row['modular'] for row in rows], [True, False, True, False])
