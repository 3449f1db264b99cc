# -*- coding: utf-8 -*-
"""Dirichlet L-values, derivatives, zeta values and Bernoulli numbers"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath

from .chars import CyclotomicSum, DirichletCharacter
from .utils import prime_divisors
from .exceptions import ConsistencyError, DomainError

# Setup logging
import logging
logger = logging.getLogger(__name__)

# Exact rationals
RationalNumber = Fraction


#==============================
#  Constants
#==============================

@lru_cache(maxsize=16)
def _constants(prec):
    with mpmath.workprec(prec):
        return {'pi': +mpmath.pi,
                'euler': +mpmath.euler,
                'log2': +mpmath.ln2,
                'log_pi': mpmath.log(mpmath.pi),
                'log_2pi': mpmath.log(2 * mpmath.pi)}


def constant(name):
    """A transcendental constant (pi, euler, log2, log_pi, log_2pi) at the working precision."""
    return _constants(mpmath.mp.prec)[name]


def digamma_constants():
    """Return the pair (Gamma'(1), Gamma'(1/2)), from the digamma kernel."""
    gamma_prime_one = mpmath.gamma(1) * mpmath.digamma(1)
    gamma_prime_half = mpmath.gamma(mpmath.mpf(1) / 2) * mpmath.digamma(mpmath.mpf(1) / 2)
    return gamma_prime_one, gamma_prime_half


def duplication_residual(k):
    """The residual of Legendre's duplication formula Gamma((k-1)/2) Gamma(k/2) = 2^(2-k) sqrt(pi) Gamma(k-1)."""
    left = mpmath.gamma(mpmath.mpf(k - 1) / 2) * mpmath.gamma(mpmath.mpf(k) / 2)
    right = mpmath.mpf(2) ** (2 - k) * mpmath.sqrt(mpmath.pi) * mpmath.gamma(k - 1)
    return abs(left - right)


#==============================
#  Bernoulli numbers and zeta
#==============================

@lru_cache(maxsize=256)
def bernoulli(k):
    """The k-th Bernoulli number as an exact rational, with B_1 = -1/2."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValueError('Sorry, Bernoulli numbers are indexed by non-negative integers (got "{}")'.format(k))
    numerator, denominator = mpmath.bernfrac(k)
    return Fraction(int(numerator), int(denominator))


def zeta_value(k, method='auto'):
    """The Riemann zeta value zeta(k) for an integer k >= 2.

    Even k are computed in closed form, zeta(k) = -B_k (2 pi i)^k / (2 k!), unless the
    method is set to "series", in which case the Euler-Maclaurin summation is used for every k.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise DomainError('Sorry, zeta values are served for integers k >= 2 (got "{}")'.format(k))
    if method not in ('auto', 'series'):
        raise ValueError('Unknown zeta method "{}"'.format(method))
    if k % 2 == 0 and method == 'auto':
        b = bernoulli(k)
        sign = 1 if (k // 2) % 2 else -1
        # -B_k (2 pi i)^k / (2 k!) with i^k = (-1)^(k/2)
        return sign * (2 * constant('pi'))**k * b.numerator / (2 * factorial(k) * mpmath.mpf(b.denominator))
    return mpmath.zeta(k)


def zeta_value_alternating(k):
    """zeta(k) from the accelerated alternating series of the Dirichlet eta function."""
    return mpmath.altzeta(k) / (1 - mpmath.mpf(2)**(1 - k))


#==============================
#  L-functions
#==============================

def _check_character(chi):
    if not isinstance(chi, DirichletCharacter):
        raise TypeError('Expected a DirichletCharacter, got "{}"'.format(chi.__class__.__name__))


def _primitive_l(chi0, s):
    """L(s, chi0) for a primitive character and a real s != 1, via the Hurwitz decomposition
    L(s, chi0) = m^(-s) Sum_{a=1}^{m} chi0(a) zeta(s, a/m)."""
    m = chi0.modulus
    total = mpmath.mpc(0)
    for a in range(1, m + 1):
        value = chi0.evaluate(a)
        if value:
            total += value * mpmath.zeta(s, mpmath.mpf(a) / m)
    return total * mpmath.power(m, -s)


def _euler_factor(chi, s):
    """The imprimitivity factor E(s) = Prod_{p | N, p !| m} (1 - chi0(p) p^(-s)) and its derivative E'(s)."""
    chi0 = chi.primitive
    terms = [(p, chi0.evaluate(p)) for p in prime_divisors(chi.modulus) if chi0.modulus % p]
    value = mpmath.mpc(1)
    for p, a in terms:
        value *= 1 - a * mpmath.power(p, -s)
    derivative = mpmath.mpc(0)
    for j, (p, a) in enumerate(terms):
        term = a * mpmath.log(p) * mpmath.power(p, -s)
        for i, (q, b) in enumerate(terms):
            if i != j:
                term *= 1 - b * mpmath.power(q, -s)
        derivative += term
    return value, derivative


def l_value(chi, s):
    """The Dirichlet L-value L(s, chi) at a non-negative integer s.

    The value is computed for the primitive core and multiplied by the imprimitivity Euler
    factors. At s = 0 the Bernoulli-type sum L(0, chi0) = -(1/m) Sum chi0(a) a is used, at
    s = 1 the digamma form L(1, chi0) = -(1/m) Sum chi0(a) psi(a/m), and above the Hurwitz
    decomposition.

    Args:
        chi(DirichletCharacter): the character.
        s(int): the point, a non-negative integer.

    Returns:
        mpc: the value at the working precision.
    """
    _check_character(chi)
    if isinstance(s, bool) or not isinstance(s, int) or s < 0:
        raise DomainError('Sorry, L-values are served at non-negative integers (got "{}")'.format(s))
    chi0 = chi.primitive
    m = chi0.modulus

    if s == 0:
        if chi0.is_trivial():
            primitive_value = mpmath.mpc(-0.5)
        else:
            primitive_value = -sum((a * chi0.evaluate(a) for a in range(1, m + 1)), mpmath.mpc(0)) / m
    elif s == 1:
        if chi0.is_trivial():
            raise DomainError('Sorry, L(s, {}) has a pole at s=1'.format(chi))
        primitive_value = -sum((chi0.evaluate(a) * mpmath.digamma(mpmath.mpf(a) / m) for a in range(1, m + 1)), mpmath.mpc(0)) / m
    else:
        primitive_value = _primitive_l(chi0, s)

    factor, _ = _euler_factor(chi, s)
    return primitive_value * factor


def l_zero_exact(chi):
    """L(0, chi) as an exact cyclotomic sum (Bernoulli-type sum times the Euler factors at s=0)."""
    _check_character(chi)
    chi0 = chi.primitive
    m = chi0.modulus
    result = CyclotomicSum()
    if chi0.is_trivial():
        result.add(0, Fraction(-1, 2))
    else:
        for a in range(1, m + 1):
            angle = chi0.angle(a)
            if angle is not None:
                result.add(angle, Fraction(-a, m))
    for p in prime_divisors(chi.modulus):
        if m % p:
            factor = CyclotomicSum().add(0, 1).add(chi0.angle(p) + Fraction(1, 2), 1)
            result = result * factor
    return result


def _agreement_tolerance(value):
    return mpmath.mpf(2) ** (-mpmath.mp.prec // 2) * max(1, abs(value))


def _check_agreement(name, first, second):
    delta = abs(first - second)
    logger.debug('Dual-method agreement for %s: delta=%s', name, mpmath.nstr(delta, 5))
    if delta > _agreement_tolerance(first):
        raise ConsistencyError('The two routes for {} disagree: {} vs {}'.format(name, mpmath.nstr(first, 20), mpmath.nstr(second, 20)))


def _primitive_l_derivative_zero(chi0, check=True):
    m = chi0.modulus
    if chi0.is_trivial():
        # zeta'(0) = zeta'(0, 1) = log Gamma(1) - log(2 pi) / 2
        value = -constant('log_2pi') / 2
        if check:
            _check_agreement("zeta'(0)", value, mpmath.zeta(0, 1, 1))
        return mpmath.mpc(value)
    l_zero = l_value(chi0, 0)
    value = -mpmath.log(m) * l_zero
    for a in range(1, m + 1):
        chi_a = chi0.evaluate(a)
        if chi_a:
            value += chi_a * mpmath.loggamma(mpmath.mpf(a) / m)
    if check:
        hurwitz = -mpmath.log(m) * l_zero
        for a in range(1, m + 1):
            chi_a = chi0.evaluate(a)
            if chi_a:
                hurwitz += chi_a * mpmath.zeta(0, mpmath.mpf(a) / m, 1)
        _check_agreement("L'(0, {})".format(chi0), value, hurwitz)
    return value


def _hurwitz_derivative_near_one(chi0):
    """L'(s, chi0) at s = 1 + eps, from the Hurwitz zeta derivatives at four times the working
    precision. The pole terms cancel since the values of chi0 sum to zero."""
    step = mpmath.eps
    with mpmath.workprec(4 * mpmath.mp.prec):
        values = [chi0.evaluate(a) for a in range(chi0.modulus)]
        value = mpmath.dirichlet(1 + step, values, 1)
    return +value


def _primitive_l_derivative_one(chi0, check=True):
    m = chi0.modulus
    l_one = l_value(chi0, 1)
    # Laurent expansion zeta(s, a) = 1/(s-1) - psi(a) - gamma_1(a) (s-1) + ...
    value = -mpmath.log(m) * l_one
    for a in range(1, m + 1):
        chi_a = chi0.evaluate(a)
        if chi_a:
            value -= chi_a * mpmath.stieltjes(1, mpmath.mpf(a) / m) / m
    if check:
        if chi0.parity == -1:
            conjugate = chi0.conjugate()
            other = l_one * (-mpmath.log(mpmath.mpf(m) / constant('pi'))
                             - (mpmath.digamma(1) + mpmath.digamma(mpmath.mpf(1) / 2)) / 2
                             - _primitive_l_derivative_zero(conjugate, check=False) / l_value(conjugate, 0))
        else:
            other = _hurwitz_derivative_near_one(chi0)
        _check_agreement("L'(1, {})".format(chi0), value, other)
    return value


def l_derivative(chi, s, check=True):
    """The first derivative L'(s, chi) at s = 0 or s = 1.

    Primitive characters are handled in closed form (log-gamma sum at s=0, Stieltjes
    constants at s=1), imprimitive ones by the product rule on the Euler factors. Unless
    check is disabled, each primitive value is confirmed by an independent second route
    (Hurwitz derivative at s=0; functional equation for odd and
    Hurwitz derivatives just right of the pole for even characters at s=1)
    before being served.

    Args:
        chi(DirichletCharacter): the character.
        s(int): 0 or 1.
        check(bool): if to run the dual-method agreement check. Defaults to True.
    """
    _check_character(chi)
    if s not in (0, 1):
        raise DomainError('Sorry, L-derivatives are only supported at s=0 and s=1 (got "{}")'.format(s))
    chi0 = chi.primitive
    if s == 0:
        primitive_value = _primitive_l_derivative_zero(chi0, check)
    else:
        if chi0.is_trivial():
            raise DomainError("Sorry, L'(s, {}) is not defined at the pole s=1".format(chi))
        primitive_value = _primitive_l_derivative_one(chi0, check)
    factor, factor_derivative = _euler_factor(chi, s)
    if factor_derivative == 0:
        return primitive_value * factor
    primitive_l = l_value(chi0, s)
    return primitive_value * factor + primitive_l * factor_derivative


class LValueRequest(object):
    """A request for L(s, chi) or L'(s, chi).

    Args:
        character(DirichletCharacter): the character.
        s(int): the point, a non-negative integer.
        derivative_order(int): 0 for the value, 1 for the first derivative (s in {0, 1} only).
    """

    def __init__(self, character, s, derivative_order=0):
        _check_character(character)
        if derivative_order not in (0, 1):
            raise DomainError('Sorry, only values and first derivatives are supported (got order {})'.format(derivative_order))
        if isinstance(s, bool) or not isinstance(s, int) or s < 0:
            raise DomainError('Sorry, L-values are served at non-negative integers (got "{}")'.format(s))
        if derivative_order == 1 and s not in (0, 1):
            raise DomainError('Sorry, first derivatives are only supported at s=0 and s=1 (got s={})'.format(s))
        if derivative_order == 0 and s == 1 and character.primitive.is_trivial():
            raise DomainError('Sorry, L(s, {}) has a pole at s=1'.format(character))
        self.character = character
        self.s = s
        self.derivative_order = derivative_order

    def evaluate(self):
        if self.derivative_order:
            return l_derivative(self.character, self.s)
        return l_value(self.character, self.s)


#==============================
#  Completed L-functions
#==============================

def _l_at_real(chi, s):
    s = mpmath.mpf(s)
    if s == int(s) and s >= 0:
        return l_value(chi, int(s))
    factor, _ = _euler_factor(chi, s)
    return _primitive_l(chi.primitive, s) * factor


def _check_kronecker(psi):
    _check_character(psi)
    if not (psi.is_primitive() and psi.order == 2 and psi.parity == -1):
        raise DomainError('Sorry, the completed L-function is defined here for odd real primitive characters (got {})'.format(psi))


def completed_lambda(psi, s):
    """Lambda(s, psi_D) = pi^(-(s+1)/2) Gamma((s+1)/2) L(s, psi_D), for the odd real primitive character psi_D."""
    _check_kronecker(psi)
    s = mpmath.mpf(s)
    return mpmath.power(constant('pi'), -(s + 1) / 2) * mpmath.gamma((s + 1) / 2) * _l_at_real(psi, s)


def functional_equation_residual(psi, s):
    """|Lambda(1-s) - (i |D|^s / W(psi_D)) Lambda(s)|."""
    from .chars import gauss_sum
    _check_kronecker(psi)
    s = mpmath.mpf(s)
    factor = mpmath.mpc(0, 1) * mpmath.power(psi.modulus, s) / gauss_sum(psi)
    return abs(completed_lambda(psi, 1 - s) - factor * completed_lambda(psi, s))


def lambda_log_derivative(psi, method='direct'):
    """Lambda'(1, psi_D) / Lambda(1, psi_D).

    The "direct" method differentiates the Gamma factor and uses L'(1)/L(1); the
    "functional" method goes through the functional equation, using L'(0)/L(0) and
    -Gamma'(1/2)/Gamma(1/2) = 2 log 2 + gamma.
    """
    _check_kronecker(psi)
    if method == 'direct':
        return -constant('log_pi') / 2 + mpmath.digamma(1) / 2 + l_derivative(psi, 1) / l_value(psi, 1)
    elif method == 'functional':
        _, gamma_prime_half = digamma_constants()
        return (constant('log_pi') - gamma_prime_half / mpmath.sqrt(constant('pi'))
                - 2 * l_derivative(psi, 0) / l_value(psi, 0)) / 2 - mpmath.log(psi.modulus)
    raise ValueError('Unknown method "{}"'.format(method))
