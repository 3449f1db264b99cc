# -*- coding: utf-8 -*-
"""Exact number-theoretic oracles, theta series and their mock pre-images"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

import numpy
import mpmath

from .chars import kronecker_character, trivial_character, induce
from .coeffs import (EisSpec, FourierSeries, SIDE_MOCK, eisenstein_coefficients, mock_coefficients,
                     sigma_twisted_exact, sigma_twisted, _mp)
from .forms import HarmonicMaassForm, assemble_harmonic, modularity_report
from .lfun import l_value, l_derivative, l_zero_exact, bernoulli, zeta_value, lambda_log_derivative, constant
from .utils import divisors, factorize, is_fundamental_discriminant, check_positive_integer
from .config import PrecisionConfig
from .exceptions import DomainError

# Setup logging
import logging
logger = logging.getLogger(__name__)

CLASS_NUMBER_ONE = (-3, -4, -7, -8, -11, -19, -43, -67, -163)


#==============================
#  Sums of squares
#==============================

def sum_of_squares_table(n_max, two_k):
    """r_{2k}(n) for 0 <= n <= n_max, by repeated convolution of the r_1 histogram.

    Returns:
        numpy.ndarray: the exact counts, as int64.
    """
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 0:
        raise ValueError('Sorry, n_max must be a non-negative integer (got "{}")'.format(n_max))
    check_positive_integer(two_k, 'two_k')
    single = numpy.zeros(n_max + 1, dtype=numpy.int64)
    single[0] = 1
    for x in range(1, isqrt(n_max) + 1):
        single[x * x] = 2
    table = single
    for _ in range(two_k - 1):
        table = numpy.convolve(table, single)[:n_max + 1]
    return table


def sum_of_squares_count(n, two_k):
    """The number of integer vectors of length two_k whose squares sum to n."""
    return int(sum_of_squares_table(n, two_k)[n])


#==============================
#  Imaginary quadratic fields
#==============================

def unit_count(D):
    """The number of units of the ring of integers of Q(sqrt(D))."""
    return {-3: 6, -4: 4}.get(D, 2)


def reduced_forms(D):
    """The reduced forms (a, b, c) of discriminant D: |b| <= a <= c, b >= 0 when |b| = a or a = c."""
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            numerator = b * b - D
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            forms.append((a, b, c))
        a += 1
    return forms


class ImaginaryQuadraticData(object):
    """The class number h and unit count u of the imaginary quadratic field of discriminant D.

    Args:
        D (:obj:`int`): a negative fundamental discriminant.
    """

    def __init__(self, D):
        if isinstance(D, bool) or not isinstance(D, int) or D >= 0 or not is_fundamental_discriminant(D):
            raise DomainError('Sorry, {} is not a negative fundamental discriminant'.format(D))
        self.D = D
        self.forms = reduced_forms(D)
        self.h = len(self.forms)
        self.u = unit_count(D)
        self.character = kronecker_character(D)

    def __repr__(self):
        return 'ImaginaryQuadraticData(D={}, h={}, u={})'.format(self.D, self.h, self.u)

    def is_class_number_one(self):
        return self.h == 1

    @property
    def h_over_u(self):
        return Fraction(self.h, self.u)

    def class_number_formula_holds(self):
        """L(0, psi_D) = 2h/u, both sides exact."""
        return l_zero_exact(self.character).rational_value() == 2 * self.h_over_u


@lru_cache(maxsize=256)
def class_number(D):
    """The class number data of Q(sqrt(D)), by enumeration of reduced forms."""
    return ImaginaryQuadraticData(D)


#==============================
#  Hecke's coefficients
#==============================

def hecke_R(D, n):
    """R_D(n), the number of integral ideals of norm n: Sum_{0<c|n} psi_D(c)."""
    check_positive_integer(n)
    psi = class_number(D).character
    return sum(psi.real_value(c) for c in divisors(n))


def hecke_Rplus(D, n, method='definitional'):
    """The coefficient R+_D(n) of the mock form whose shadow is E_{1,D}.

    The "definitional" method uses R_D(n) log(n) - 2 Sum_{0<c|n} psi_D(n/c) log(c), and
    (2 log 2 + log pi + gamma) h/u - L'(0, psi_D) at n = 0. The "factorization" method uses
    the prime factorization of n, and (2h/u)(Lambda'(1)/Lambda(1) + log|D|) at n = 0. It is
    also accepted under the name "proposition".
    """
    data = class_number(D)
    psi = data.character
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError('Sorry, n must be a non-negative integer (got "{}")'.format(n))
    h_over_u = mpmath.mpf(data.h) / data.u

    if method == 'definitional':
        if n == 0:
            shift = 2 * constant('log2') + constant('log_pi') + constant('euler')
            return shift * h_over_u - mpmath.re(l_derivative(psi, 0))
        total = hecke_R(D, n) * mpmath.log(n)
        for c in divisors(n):
            if c > 1:
                total -= 2 * psi.real_value(n // c) * mpmath.log(c)
        return total

    if method in ('factorization', 'proposition'):
        if n == 0:
            return 2 * h_over_u * (mpmath.re(lambda_log_derivative(psi)) + mpmath.log(-D))
        total = mpmath.mpf(0)
        r = hecke_R(D, n)
        for p, e in factorize(n):
            value = psi.real_value(p)
            if value == 0:
                total -= r * mpmath.log(p) * e
            elif value == -1:
                total -= mpmath.log(p) * (e + 1) * hecke_R(D, n // p)
        return total

    raise ValueError('Unknown method "{}"'.format(method))


def hecke_E1(D, n_max):
    """Hecke's series E_{1,D} = h/u + Sum R_D(n) q^n, as the rescaled Eisenstein series (i/2pi) E_1^{psi_D,1,1}."""
    spec = EisSpec(1, class_number(D).character, trivial_character(1))
    return eisenstein_coefficients(spec, n_max).scale(mpmath.mpc(0, 1) / (2 * constant('pi')))


def mock_e1d(D, n_max):
    """The harmonic form with holomorphic part (2 pi i)^{-1} G_1 + (log pi + gamma) E_{1,D} and shadow E_{1,D}."""
    spec = EisSpec(1, class_number(D).character, trivial_character(1))
    base = assemble_harmonic(spec, n_max).scale(1 / (mpmath.mpc(0, 2) * constant('pi')))
    shift = constant('log_pi') + constant('euler')
    holo = base.holo + hecke_E1(D, n_max).scale(shift)
    holo = FourierSeries(holo.coefficients, 1, spec.level, spec.mock_character, SIDE_MOCK, spec)
    return HarmonicMaassForm(holo, base.shadow, spec)


def hecke_comparison(D, n_max):
    """Rows comparing R+_D(n) by both formulas and with the mock coefficient engine."""
    tol = mpmath.mpf(2)**(-mpmath.mp.prec // 2)
    form = mock_e1d(D, n_max)
    rows = []
    for n in range(n_max + 1):
        definitional = hecke_Rplus(D, n, 'definitional')
        factorization = hecke_Rplus(D, n, 'factorization')
        engine = mpmath.re(form.holo[n])
        residual = max(abs(definitional - factorization), abs(definitional - engine))
        rows.append({'n': n, 'R': hecke_R(D, n) if n else class_number(D).h_over_u,
                     'Rplus_definitional': definitional, 'Rplus_factorization': factorization, 'Rplus_engine': engine,
                     'residual': residual, 'tol': tol, 'pass': bool(residual < tol * max(1, abs(definitional)))})
    return rows


#==============================
#  Theta series of imaginary quadratic fields
#==============================

def theta_series_count(D, n_max):
    """The coefficients of theta_D = Sum_{x in O_D} q^{N(x)} up to n_max, by enumerating the principal norm form."""
    class_number(D)
    if n_max < 0:
        raise ValueError('Sorry, n_max must be non-negative (got "{}")'.format(n_max))
    y_bound = isqrt(4 * n_max // -D) + 1
    x_bound = isqrt(n_max) + y_bound + 1
    x = numpy.arange(-x_bound, x_bound + 1, dtype=numpy.int64)[:, None]
    y = numpy.arange(-y_bound, y_bound + 1, dtype=numpy.int64)[None, :]
    if D % 4 == 1:
        norms = x * x + x * y + ((1 - D) // 4) * y * y
    else:
        norms = x * x + (-D // 4) * y * y
    norms = norms[norms <= n_max]
    return [int(v) for v in numpy.bincount(norms, minlength=n_max + 1)]


def class_number_one_theta(D, n_max):
    """Check theta_D = u(D) E_{1,D} coefficient-wise, for a class number one discriminant."""
    data = class_number(D)
    if not data.is_class_number_one():
        raise DomainError('Sorry, D={} has class number {}, theta_D is not an Eisenstein series'.format(D, data.h))
    counts = theta_series_count(D, n_max)
    rows = []
    for n in range(n_max + 1):
        expected = data.u * (data.h_over_u if n == 0 else hecke_R(D, n))
        rows.append({'n': n, 'theta': counts[n], 'eisenstein': int(expected), 'pass': counts[n] == expected})
    return rows


def mock_theta_d(D, n_max):
    """The harmonic form u(D) E~_{1,D} whose shadow is theta_D, for class number one discriminants."""
    data = class_number(D)
    if not data.is_class_number_one():
        raise DomainError('Sorry, D={} has class number {}, theta_D is not an Eisenstein series'.format(D, data.h))
    return mock_e1d(D, n_max).scale(data.u)


def log_shifted_mock_e1d(D, n_max):
    """The harmonic form E~_{1,D} - log|D| E_{1,D}, with shadow E_{1,D}."""
    form = mock_e1d(D, n_max)
    holo = form.holo + hecke_E1(D, n_max).scale(-mpmath.log(-D))
    holo = FourierSeries(holo.coefficients, 1, form.holo.level, form.holo.character, SIDE_MOCK, form.spec)
    return HarmonicMaassForm(holo, form.shadow, form.spec)


#==============================
#  Level one
#==============================

def normalized_level_one(k, n_max):
    """The normalized E_k = 1 - (2k/B_k) Sum sigma_{k-1}(n) q^n and its pre-image E~_k = G_{2-k}/zeta(k)."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 4 or k % 2:
        raise DomainError('Sorry, the level one normalization needs an even k >= 4 (got {})'.format(k))
    one = trivial_character(1)
    factor = -Fraction(2 * k) / bernoulli(k)
    coefficients = [mpmath.mpc(1)] + [mpmath.mpc(_mp(factor * sigma_twisted_exact(k - 1, n, one, one).rational_value()))
                                      for n in range(1, n_max + 1)]
    spec = EisSpec(k, one, one)
    normalized = FourierSeries(coefficients, k, 1, one, spec=spec)
    mock = mock_coefficients(spec, n_max).scale(1 / zeta_value(k))
    return normalized, mock


#==============================
#  Theta powers
#==============================

def _psi4():
    return kronecker_character(-4)


def theta_combination(power):
    """The pairs (b, spec) with Theta^power = Sum b E^spec."""
    pi = constant('pi')
    one, psi = trivial_character(1), _psi4()
    if power == 2:
        return [(4 * mpmath.mpc(0, 1) / (2 * pi), EisSpec(1, psi, one))]
    if power == 4:
        return [(-2 / pi**2, EisSpec(2, one, one, 4))]
    if power == 6:
        return [(mpmath.mpc(0, -4) / pi**3, EisSpec(3, psi, one)),
                (32 / pi**3, EisSpec(3, one, psi))]
    if power == 8:
        return [(96 / pi**4, EisSpec(4, one, one, 4)),
                (-12 / pi**4, EisSpec(4, one, one, 2)),
                (6 / pi**4, EisSpec(4, one, one, 1))]
    raise DomainError('Sorry, Theta^{} is not a combination of Eisenstein series (powers 2, 4, 6, 8 are)'.format(power))


def _with_level_character(series, level, character):
    return FourierSeries(series.coefficients, series.weight, level, induce(character, level),
                         series.side, None, series.quasi_term, series.growth)


def theta_shadow(power, n_max):
    """Theta^power as the Eisenstein combination."""
    total = None
    for b, spec in theta_combination(power):
        term = eisenstein_coefficients(spec, n_max).scale(b)
        total = term if total is None else total + term
    return _with_level_character(total, 4, total.character)


def theta_preimage(power, n_max):
    """The harmonic form with shadow Theta^power: the pre-images combined with conjugated scalars."""
    total = None
    for b, spec in theta_combination(power):
        term = assemble_harmonic(spec, n_max).scale(mpmath.conj(b))
        total = term if total is None else total + term
    holo = _with_level_character(total.holo, 4, total.holo.character)
    return HarmonicMaassForm(holo, theta_shadow(power, n_max))


def closed_form_theta_mock(power, n_max):
    """The closed forms of the pre-images of Theta^4, Theta^6 and Theta^8 in terms of r_{2k}(n)."""
    pi = constant('pi')
    one, psi = trivial_character(1), _psi4()
    counts = sum_of_squares_table(n_max, power)
    coefficients = [mpmath.mpc(0)] * (n_max + 1)
    if power == 4:
        head, coefficients[0] = -1 / (8 * pi), 16 * constant('log2')
        for n in range(1, n_max + 1):
            coefficients[n] = mpmath.mpf(int(counts[n])) / n
    elif power == 6:
        head, coefficients[0] = -1 / (16 * pi**2), 16 * l_value(psi, 2)
        for n in range(1, n_max + 1):
            coefficients[n] = (int(counts[n]) + 8 * sigma_twisted(2, n, one, psi)) / mpmath.mpf(n)**2
    elif power == 8:
        head, coefficients[0] = -1 / (16 * pi**3), 8 * zeta_value(3)
        for n in range(1, n_max + 1):
            coefficients[n] = mpmath.mpf(int(counts[n])) / mpmath.mpf(n)**3
    else:
        raise DomainError('Sorry, no closed form pre-image for Theta^{}'.format(power))
    reference = theta_combination(power)[0][1]
    return FourierSeries([head * c for c in coefficients], 2 - power // 2, 4, induce(reference.mock_character, 4), SIDE_MOCK)


def _rankin_identity(power, n):
    """r_{power}(n) from the divisor sum identities, exactly."""
    one, psi = trivial_character(1), _psi4()

    def sigma(k_minus_1, m, left=one, right=one):
        value = sigma_twisted_exact(k_minus_1, m, left, right).rational_value()
        return value if value is not None else Fraction(0)

    if power == 2:
        return 4 * hecke_R(-4, n)
    if power == 4:
        return 8 * (sigma(1, n) - 4 * sigma(1, Fraction(n, 4)))
    if power == 6:
        return 4 * (4 * sigma(2, n, psi, one) - sigma(2, n, one, psi))
    if power == 8:
        return 16 * (sigma(3, n) - 2 * sigma(3, Fraction(n, 2)) + 16 * sigma(3, Fraction(n, 4)))
    raise DomainError('Sorry, no divisor sum identity for r_{}'.format(power))


def theta_two_chain(n_max):
    """Compare u(-4) E~_{1,-4} with the closed form of the pre-image of Theta^2,
    2 log 2 + log pi + gamma - 4 L'(0, psi_{-4}) + Sum (r_2(n) log n - 8 Sum_{c|n} psi_{-4}(n/c) log c) q^n."""
    psi = _psi4()
    form = mock_theta_d(-4, n_max)
    counts = sum_of_squares_table(n_max, 2)
    tol = mpmath.mpf(2)**(-mpmath.mp.prec // 2)
    rows = []
    for n in range(n_max + 1):
        if n == 0:
            closed = 2 * constant('log2') + constant('log_pi') + constant('euler') - 4 * mpmath.re(l_derivative(psi, 0))
        else:
            closed = int(counts[n]) * mpmath.log(n)
            for c in divisors(n):
                if c > 1:
                    closed -= 8 * psi.real_value(n // c) * mpmath.log(c)
        residual = abs(form.holo[n] - closed)
        rows.append({'n': n, 'engine': form.holo[n], 'closed_form': closed, 'residual': residual,
                     'tol': tol, 'pass': bool(residual < tol * max(1, abs(closed)))})
    gamma_quotient = mpmath.log(mpmath.gamma(mpmath.mpf(1) / 4) / mpmath.gamma(mpmath.mpf(3) / 4)) - constant('log2')
    residual = abs(mpmath.re(l_derivative(psi, 0)) - gamma_quotient)
    rows.append({'n': "L'(0)", 'engine': l_derivative(psi, 0), 'closed_form': gamma_quotient, 'residual': residual,
                 'tol': tol, 'pass': bool(residual < tol)})
    return rows


def theta_power_report(power, n_max, config=None):
    """Compare r_power(n) by brute force with the divisor sum identity and with the Eisenstein combination."""
    config = PrecisionConfig() if config is None else config
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 1:
        raise ValueError('Sorry, n_max must be a positive integer (got "{}")'.format(n_max))
    rows = []
    with config.precision():
        counts = sum_of_squares_table(n_max, power)
        shadow = theta_shadow(power, n_max)
        for n in range(n_max + 1):
            count = int(counts[n])
            identity = 1 if n == 0 else _rankin_identity(power, n)
            residual = abs(shadow[n] - count)
            rows.append({'n': n, 'brute_force': count, 'identity': int(identity), 'eisenstein': shadow[n],
                         'residual': residual, 'tol': config.tol,
                         'pass': bool(identity == count and residual < config.tol * max(1, count))})
    logger.info('Theta^%s identities: %s/%s coefficients passed', power, sum(r['pass'] for r in rows), len(rows))
    return rows


def normalization_audit(power, config=None, count=6):
    """Arbitrate between the pre-image of Theta^power derived from the Eisenstein combination
    and its closed form, by pairing both with the same shadow and checking modularity."""
    config = PrecisionConfig() if config is None else config
    rows = []
    with config.precision():

        def build_combination(n_max):
            return theta_preimage(power, n_max)

        def build_closed_form(n_max):
            return HarmonicMaassForm(closed_form_theta_mock(power, n_max), theta_shadow(power, n_max))

        combination = build_combination(8)
        closed_form = build_closed_form(8)
        ratios = [closed_form.holo[n] / combination.holo[n] for n in range(1, 9) if combination.holo[n]]
        agrees = all(abs(r - 1) < config.tol for r in ratios)
        constant_ratio = closed_form.holo[0] / combination.holo[0] if combination.holo[0] else None

        for name, build in (('combination', build_combination), ('closed_form', build_closed_form)):
            report = modularity_report(None, config, count, build=build)
            residual = max(r['residual'] for r in report)
            modular = all(r['pass'] for r in report)
            rows.append({'power': power, 'candidate': name, 'max_residual': residual, 'modular': modular,
                         'ratio_n1': ratios[0], 'constant_ratio': constant_ratio, 'agrees': agrees})

        combination_row, closed_form_row = rows
        combination_row['pass'] = combination_row['modular']
        closed_form_row['pass'] = closed_form_row['modular'] == agrees
        verdict = 'combination' if not closed_form_row['modular'] else ('both' if agrees else 'closed_form')
        for row in rows:
            row['verdict'] = verdict
    logger.info('Normalization audit for Theta^%s: modular candidate is %s', power, verdict)
    return rows
