# -*- coding: utf-8 -*-
"""Fourier coefficient engines for Eisenstein series and their mock pre-images"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

import mpmath

from .chars import CyclotomicSum, DirichletCharacter, mobius, gauss_sum, multiply, induce, conjugate, root_of_unity
from .lfun import l_value, l_derivative, bernoulli, constant
from .utils import divisors, prime_divisors, lcm
from .exceptions import ParityError, ConsistencyError, DomainError

# Setup logging
import logging
logger = logging.getLogger(__name__)

SIDE_EISENSTEIN = 'holomorphic-eisenstein'
SIDE_MOCK = 'mock'


#==============================
#  Helpers
#==============================

def _i_power(n):
    """i^n, exactly."""
    return (mpmath.mpc(1), mpmath.mpc(0, 1), mpmath.mpc(-1), mpmath.mpc(0, -1))[n % 4]


def _index(n):
    """Return n as a positive integer, or None when the arithmetic convention sends f(n) to zero."""
    if isinstance(n, bool):
        return None
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return None
        n = n.numerator
    if not isinstance(n, int) or n < 1:
        return None
    return n


def euler_product(N):
    """Prod_{p | N} (1 - 1/p), as an exact fraction."""
    result = Fraction(1)
    for p in prime_divisors(N):
        result *= Fraction(p - 1, p)
    return result


def _mp(fraction):
    return mpmath.mpf(fraction.numerator) / fraction.denominator


def is_unit_character(chi):
    """True for the character 1_1 mod one."""
    return chi.modulus == 1


#==============================
#  Twisted divisor sums
#==============================

@lru_cache(maxsize=8192)
def _inner_sum(c, rho):
    """Sum_{0<d | gcd(l_rho, c)} d mu(l_rho/d) conj(rho0)(l_rho/d) rho0(c/d), exactly."""
    ell = rho.ell
    core = rho.primitive
    total = CyclotomicSum()
    for d in divisors(gcd(ell, c)):
        mu = mobius(ell // d)
        if not mu:
            continue
        left = core.angle(ell // d)
        right = core.angle(c // d)
        if left is None or right is None:
            continue
        total.add(right - left, d * mu)
    return total


def sigma_twisted_exact(k_minus_1, n, psi, rho):
    """The twisted divisor sum sigma^{psi,rho}_{k-1}(n) as an exact cyclotomic sum."""
    if isinstance(k_minus_1, bool) or not isinstance(k_minus_1, int) or k_minus_1 < 0:
        raise ValueError('Sorry, the divisor power must be a non-negative integer (got "{}")'.format(k_minus_1))
    total = CyclotomicSum()
    n = _index(n)
    if n is None:
        return total
    for c in divisors(n):
        outer = psi.angle(n // c)
        if outer is None:
            continue
        power = c ** k_minus_1
        for angle, weight in _inner_sum(c, rho).terms.items():
            total.add(outer + angle, power * weight)
    return total


def sigma_twisted(k_minus_1, n, psi, rho):
    """The twisted divisor sum

        sigma^{psi,rho}_{k-1}(n) = Sum_{0<c|n} psi(n/c) c^{k-1} Sum_{0<d|gcd(l_rho,c)} d mu(l_rho/d) conj(rho0)(l_rho/d) rho0(c/d)

    at the working precision. Non positive or non integral n give zero. For psi = rho = 1_1
    this is the classical sigma_{k-1}(n).
    """
    return sigma_twisted_exact(k_minus_1, n, psi, rho).render()


def sigma_log_twisted(n, psi, rho):
    """Sum_{0<c|n} conj(psi)(n/c) log(c) Sum_{0<d|gcd(l_rho,c)} d mu(l_rho/d) rho0(l_rho/d) conj(rho0)(c/d)."""
    n = _index(n)
    total = mpmath.mpc(0)
    if n is None:
        return total
    rho_bar = conjugate(rho)
    for c in divisors(n):
        if c == 1:
            continue
        outer = psi.angle(n // c)
        if outer is None:
            continue
        inner = _inner_sum(c, rho_bar)
        if inner.terms:
            total += root_of_unity(-outer) * inner.render() * mpmath.log(c)
    return total


def a_coeff(s, k, n, psi, rho):
    """The coefficient a_k(s; n, psi, rho) of the non-holomorphic Eisenstein series,
    Sum_{0<c|n} psi(n/c) c^(2s+k-1) Sum_{0<d|gcd(l_rho,c)} d mu(l_rho/d) rho0(l_rho/d) conj(rho0)(c/d)."""
    n = _index(n)
    total = mpmath.mpc(0)
    if n is None:
        return total
    exponent = 2 * mpmath.mpf(s) + k - 1
    rho_bar = conjugate(rho)
    for c in divisors(n):
        value = psi.evaluate(n // c)
        if not value:
            continue
        inner = _inner_sum(c, rho_bar)
        if inner.terms:
            total += value * mpmath.power(c, exponent) * inner.render()
    return total


#==============================
#  Specs and series
#==============================

class EisSpec(object):
    """The data (k, psi, rho, t) selecting one Eisenstein series E_k^{psi,rho,t} and its pre-image.

    Args:
        k (:obj:`int`): the weight, at least one.
        psi (:obj:`DirichletCharacter`): the character mod L.
        rho (:obj:`DirichletCharacter`): the character mod M.
        t (:obj:`int`): the scaling integer. Defaults to 1.
    """

    def __init__(self, k, psi, rho, t=1):
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise ValueError('Sorry, the weight must be a positive integer (got "{}")'.format(k))
        if isinstance(t, bool) or not isinstance(t, int) or t < 1:
            raise ValueError('Sorry, t must be a positive integer (got "{}")'.format(t))
        if not isinstance(psi, DirichletCharacter) or not isinstance(rho, DirichletCharacter):
            raise TypeError('Both psi and rho must be DirichletCharacter objects')
        if psi.parity * rho.parity != (-1)**k:
            raise ParityError('Sorry, psi(-1)rho(-1) = {} but (-1)^k = {} for k={}: the space is zero'.format(psi.parity * rho.parity, (-1)**k, k))
        self.k = k
        self.psi = psi
        self.rho = rho
        self.t = t

    def __repr__(self):
        return 'EisSpec(k={}, psi={}, rho={}, t={})'.format(self.k, self.psi, self.rho, self.t)

    @property
    def L(self):
        return self.psi.modulus

    @property
    def M(self):
        return self.rho.modulus

    @property
    def level(self):
        return self.t * self.L * self.M

    @property
    def character(self):
        """The nebentypus psi*rho of the Eisenstein series, as a character mod the level."""
        return induce(multiply(self.psi, self.rho), self.level)

    @property
    def mock_character(self):
        """The character conj(psi*rho) of the pre-image."""
        return self.character.conjugate()

    def is_trivial_pair(self):
        """True in the quasi-modular regime k=2, (psi, rho) = (1_L, 1_M)."""
        return self.k == 2 and self.psi.is_trivial() and self.rho.is_trivial()

    def is_level_one(self):
        return self.level == 1


class FourierSeries(object):
    """A truncated q-expansion Sum_{n=0}^{n_max} a(n) q^n, plus an optional multiple of 1/y.

    Args:
        coefficients (:obj:`list`): the coefficients a(0), ..., a(n_max).
        weight (:obj:`int`): the weight.
        level (:obj:`int`): the level.
        character (:obj:`DirichletCharacter`): the character of the transformation law.
        side (:obj:`str`): holomorphic-eisenstein or mock.
        spec (:obj:`EisSpec`): the spec the series was built from, if any.
        quasi_term: the coefficient of 1/y. Defaults to zero.
        growth (:obj:`int`): the polynomial growth exponent of the coefficients, used for tail bounds.
    """

    def __init__(self, coefficients, weight, level, character, side=SIDE_EISENSTEIN, spec=None, quasi_term=0, growth=None):
        self.coefficients = tuple(mpmath.mpc(c) for c in coefficients)
        self.weight = weight
        self.level = level
        self.character = character
        self.side = side
        self.spec = spec
        self.quasi_term = mpmath.mpc(quasi_term)
        if growth is None:
            growth = max(weight - 1, 1) if side == SIDE_EISENSTEIN else 1
        self.growth = growth

    def __repr__(self):
        return 'FourierSeries(side={}, weight={}, level={}, n_max={})'.format(self.side, self.weight, self.level, self.n_max)

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, n):
        return self.coefficients[n]

    @property
    def n_max(self):
        return len(self.coefficients) - 1

    def truncate(self, n_max):
        if n_max > self.n_max:
            raise ValueError('Sorry, cannot extend a series with n_max={} to {}'.format(self.n_max, n_max))
        return FourierSeries(self.coefficients[:n_max + 1], self.weight, self.level, self.character,
                             self.side, self.spec, self.quasi_term, self.growth)

    def scale(self, factor):
        factor = mpmath.mpc(factor)
        return FourierSeries([factor * c for c in self.coefficients], self.weight, self.level, self.character,
                             self.side, None, self.quasi_term * factor, self.growth)

    def __add__(self, other):
        if self.weight != other.weight:
            raise ValueError('Sorry, cannot add series of weights {} and {}'.format(self.weight, other.weight))
        n_max = min(self.n_max, other.n_max)
        return FourierSeries([self[n] + other[n] for n in range(n_max + 1)], self.weight, lcm(self.level, other.level),
                             self.character, self.side, None, self.quasi_term + other.quasi_term,
                             max(self.growth, other.growth))

    def scale_term(self):
        """max |a(n)| / n^growth over the stored non-constant coefficients."""
        scale = mpmath.mpf(0)
        for n in range(1, len(self.coefficients)):
            scale = max(scale, abs(self.coefficients[n]) / mpmath.power(n, self.growth))
        return scale

    def rows(self):
        return [{'n': n, 'value': c} for n, c in enumerate(self.coefficients)]


#==============================
#  Holomorphic Eisenstein series
#==============================

def _check_n_max(n_max):
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 0:
        raise ValueError('Sorry, n_max must be a non-negative integer (got "{}")'.format(n_max))


def eisenstein_constant(spec):
    """C_k(psi, rho), plus D(psi, rho) in weight one."""
    psi, rho = spec.psi, spec.rho
    value = mpmath.mpc(0)
    if is_unit_character(psi):
        value += l_value(conjugate(rho), spec.k)
    if spec.k == 1 and rho.is_trivial():
        value += -mpmath.mpc(0, 1) * constant('pi') * l_value(psi, 0) * _mp(euler_product(spec.M))
    return value


def eisenstein_leading_factor(spec):
    """(-2 pi i / M)^k W(conj(rho0)) / (k-1)!"""
    k = spec.k
    return (mpmath.mpc(0, -2) * constant('pi') / spec.M)**k * gauss_sum(conjugate(spec.rho.primitive)) / factorial(k - 1)


def eisenstein_coefficients(spec, n_max):
    """The coefficients of E_k^{psi,rho,t} up to n_max.

    Args:
        spec(EisSpec): the series.
        n_max(int): the truncation order.

    Returns:
        FourierSeries: the holomorphic Eisenstein side, with a vanishing quasi term.
    """
    _check_n_max(n_max)
    k, psi, rho, t, M = spec.k, spec.psi, spec.rho, spec.t, spec.M
    coefficients = [mpmath.mpc(0)] * (n_max + 1)

    if spec.is_trivial_pair():
        # E_2(z) - t E_2(tz): the quasi-modular terms cancel
        c2 = l_value(rho, 2) if is_unit_character(psi) else mpmath.mpc(0)
        coefficients[0] = (1 - t) * c2
        factor = -4 * constant('pi')**2 / M**2
        for n in range(1, n_max + 1):
            value = sigma_twisted(1, n, psi, rho)
            if n % t == 0:
                value -= t * sigma_twisted(1, n // t, psi, rho)
            coefficients[n] = factor * value
    else:
        coefficients[0] = eisenstein_constant(spec)
        factor = eisenstein_leading_factor(spec)
        for n in range(t, n_max + 1, t):
            coefficients[n] = factor * sigma_twisted(k - 1, n // t, psi, rho)

    logger.debug('Computed %s Eisenstein coefficients for %s', n_max + 1, spec)
    return FourierSeries(coefficients, k, spec.level, spec.character, SIDE_EISENSTEIN, spec)


def quasi_modular_series(L, M, n_max):
    """The quasi-modular building block E_2^{1_L,1_M}(z), including its -pi/(2My) term."""
    _check_n_max(n_max)
    one_l, one_m = DirichletCharacter(L), DirichletCharacter(M)
    product = euler_product(L) * euler_product(M)
    coefficients = [mpmath.mpc(0)] * (n_max + 1)
    coefficients[0] = l_value(one_m, 2) if L == 1 else mpmath.mpc(0)
    factor = -4 * constant('pi')**2 / M**2
    for n in range(1, n_max + 1):
        coefficients[n] = factor * sigma_twisted(1, n, one_l, one_m)
    quasi_term = -constant('pi') / (2 * M) * _mp(product)
    return FourierSeries(coefficients, 2, L * M, DirichletCharacter(L * M), SIDE_EISENSTEIN, quasi_term=quasi_term)


#==============================
#  Mock coefficients
#==============================

def _general_weight_coefficients(spec, n_max):
    k, psi, rho, t, M = spec.k, spec.psi, spec.rho, spec.t, spec.M
    pi = constant('pi')
    head = mpmath.mpf(2)**(2 - k) * pi * _i_power(k - 2) / (k - 1)
    coefficients = [mpmath.mpc(0)] * (n_max + 1)
    if rho.is_trivial():
        coefficients[0] = head / mpmath.power(t * M, k - 1) * l_value(conjugate(psi), k - 1) * _mp(euler_product(M))
    factor = head / mpmath.power(M, k) * gauss_sum(rho.primitive)
    psi_bar, rho_bar = conjugate(psi), conjugate(rho)
    for n in range(t, n_max + 1, t):
        coefficients[n] = factor * mpmath.power(n, 1 - k) * sigma_twisted(k - 1, n // t, psi_bar, rho_bar)
    return coefficients


def _trivial_pair_coefficients(spec, n_max):
    psi, rho, t, L, M = spec.psi, spec.rho, spec.t, spec.L, spec.M
    pi = constant('pi')
    coefficients = [mpmath.mpc(0)] * (n_max + 1)
    coefficients[0] = pi * mpmath.log(t) / M * _mp(euler_product(L) * euler_product(M))
    for n in range(1, n_max + 1):
        value = sigma_twisted(1, n, psi, rho)
        if n % t == 0:
            value -= t * sigma_twisted(1, n // t, psi, rho)
        coefficients[n] = pi / M**2 * value / n
    return coefficients


def _weight_one_coefficients(spec, n_max):
    psi, rho, t, M = spec.psi, spec.rho, spec.t, spec.M
    pi = constant('pi')
    two_pi_i = mpmath.mpc(0, 2) * pi
    coefficients = [mpmath.mpc(0)] * (n_max + 1)

    if is_unit_character(psi) and rho.is_trivial():
        raise ConsistencyError('The weight one constant cases psi=1_1 and rho=1_M overlap for {}'.format(spec))
    if is_unit_character(psi):
        coefficients[0] = 2 * l_derivative(rho, 1)
    elif rho.is_trivial():
        psi_bar = conjugate(psi)
        coefficients[0] = (two_pi_i * (mpmath.log(2 * t * M) * l_value(psi_bar, 0) - l_derivative(psi_bar, 0))
                           * _mp(euler_product(M)))

    factor = -two_pi_i / M * gauss_sum(rho.primitive)
    shift = mpmath.log(pi / M**2) + constant('euler')
    psi_bar, rho_bar = conjugate(psi), conjugate(rho)
    for n in range(t, n_max + 1, t):
        m = n // t
        value = sigma_twisted(0, m, psi_bar, rho_bar) * (shift - mpmath.log(n)) + 2 * sigma_log_twisted(m, psi, rho)
        coefficients[n] = factor * value
    return coefficients


def mock_coefficients(spec, n_max):
    """The holomorphic coefficients c+(n) of the pre-image of E_k^{psi,rho,t}, up to n_max.

    Dispatches on the weight: k > 2 (or k = 2 off the trivial pair) uses the general
    weight formula, the trivial pair in weight two the logarithmic constant, and weight one
    the L-derivative constants and the log-weighted divisor sums.

    Returns:
        FourierSeries: the mock side, of weight 2-k and character conj(psi*rho).
    """
    _check_n_max(n_max)
    if spec.k == 1:
        coefficients = _weight_one_coefficients(spec, n_max)
    elif spec.is_trivial_pair():
        coefficients = _trivial_pair_coefficients(spec, n_max)
    else:
        coefficients = _general_weight_coefficients(spec, n_max)
    logger.debug('Computed %s mock coefficients for %s', n_max + 1, spec)
    return FourierSeries(coefficients, 2 - spec.k, spec.level, spec.mock_character, SIDE_MOCK, spec)


#==============================
#  Checks
#==============================

def weight_one_symmetry_report(psi, rho, t=1, n_max=50, tol=None):
    """Compare (M/W(conj rho)) E_1^{psi,rho,t} with (L/W(conj psi)) E_1^{rho,psi,t} coefficient by coefficient.

    Both characters must be primitive with psi(-1)rho(-1) = -1.
    """
    if not (psi.is_primitive() and rho.is_primitive()):
        raise DomainError('Sorry, the weight one symmetry needs primitive characters (got {} and {})'.format(psi, rho))
    tol = mpmath.mpf(2)**(-mpmath.mp.prec // 2) if tol is None else tol
    left = eisenstein_coefficients(EisSpec(1, psi, rho, t), n_max).scale(rho.modulus / gauss_sum(conjugate(rho)))
    right = eisenstein_coefficients(EisSpec(1, rho, psi, t), n_max).scale(psi.modulus / gauss_sum(conjugate(psi)))
    rows = []
    for n in range(n_max + 1):
        residual = abs(left[n] - right[n])
        rows.append({'n': n, 'left': left[n], 'right': right[n], 'residual': residual,
                     'tol': tol, 'pass': bool(residual < tol * max(1, abs(left[n])))})
    return rows


def bol_expansion(spec, n_max):
    """The q-expansion of D^{k-1} F for the assembled pre-image F, D = (2 pi i)^{-1} d/dz."""
    if spec.k < 2:
        raise DomainError('Sorry, the Bol image is only defined here for k >= 2 (got k={})'.format(spec.k))
    k = spec.k
    holo = mock_coefficients(spec, n_max)
    shadow_constant = eisenstein_coefficients(spec, 0)[0]
    coefficients = [holo[n] * mpmath.power(n, k - 1) for n in range(n_max + 1)]
    coefficients[0] = -mpmath.conj(shadow_constant) * factorial(k - 1) * (-1 / (4 * constant('pi')))**(k - 1) / (1 - k)
    return coefficients


def bol_constant_check(spec, n_max=10, tol=None):
    """Check that D^{k-1} F is proportional to the normalized Eisenstein series E_k, for level one specs."""
    if not spec.is_level_one() or spec.k < 4:
        raise DomainError('Sorry, the Bol check compares with the level one E_k, k >= 4 (got {})'.format(spec))
    tol = mpmath.mpf(2)**(-mpmath.mp.prec // 2) if tol is None else tol
    image = bol_expansion(spec, n_max)
    normalized = -Fraction(2 * spec.k) / bernoulli(spec.k)
    residual = mpmath.mpf(0)
    for n in range(1, n_max + 1):
        expected = image[0] * _mp(normalized) * sigma_twisted(spec.k - 1, n, spec.psi, spec.rho)
        residual = max(residual, abs(image[n] - expected) / max(1, abs(image[n])))
    return {'spec': spec, 'constant': image[0], 'first': image[1], 'ratio': image[0] / image[1],
            'expected_ratio': 1 / _mp(normalized), 'residual': residual, 'tol': tol, 'pass': bool(residual < tol)}
