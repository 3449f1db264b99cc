# -*- coding: utf-8 -*-
"""Dirichlet characters, Gauss sums and exact cyclotomic sums"""

import json
import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath
import sympy

from .utils import factorize, divisors, euler_phi, lcm, is_fundamental_discriminant, check_positive_integer
from .exceptions import ConsistencyError, DomainError

# Setup logging
import logging
logger = logging.getLogger(__name__)

# Moduli above this bound are not supported
MAX_MODULUS = 10**6


#==============================
#  Integer helpers
#==============================

@lru_cache(maxsize=None)
def mobius(n):
    """The Moebius function of a positive integer."""
    check_positive_integer(n)
    return int(sympy.mobius(n))


def kronecker_symbol(a, n):
    """The Kronecker symbol (a/n) for an integer a and a positive integer n."""
    check_positive_integer(n)
    e = int(sympy.multiplicity(2, n))
    if e and a % 2 == 0:
        return 0
    result = -1 if e % 2 and a % 8 in (3, 5) else 1
    return result * int(sympy.jacobi_symbol(a % (n >> e), n >> e))


def _crt_lift(local, prime_power, modulus):
    """Lift a residue mod prime_power to the residue mod modulus that is 1 on the complementary part."""
    cofactor = modulus // prime_power
    if cofactor == 1:
        return local % modulus
    lifted = local * cofactor * pow(cofactor, -1, prime_power) + prime_power * pow(prime_power, -1, cofactor)
    return lifted % modulus


def _prime_power_root(p, a):
    """The smallest primitive root g mod p, moved to g + p when it fails to generate mod p^2."""
    g = int(sympy.primitive_root(p))
    if a > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@lru_cache(maxsize=256)
def generator_basis(N):
    """Return the canonical generators of (Z/NZ)* as (generator, order) pairs.

    Generators are built prime power by prime power and lifted by CRT: a primitive root
    for odd prime powers, -1 for 4, and the pair {-1, 5} for 2^a with a >= 3.
    """
    check_positive_integer(N, 'N')
    if N > MAX_MODULUS:
        raise DomainError('Sorry, moduli above {} are not supported (got {})'.format(MAX_MODULUS, N))
    basis = []
    for p, a in factorize(N):
        prime_power = p**a
        if p == 2:
            if a >= 2:
                basis.append((_crt_lift(-1, prime_power, N), 2))
            if a >= 3:
                basis.append((_crt_lift(5, prime_power, N), 2**(a - 2)))
        else:
            basis.append((_crt_lift(_prime_power_root(p, a), prime_power, N), euler_phi(prime_power)))
    return tuple(basis)


@lru_cache(maxsize=64)
def _unit_logs(N):
    """Map every unit mod N to its exponent vector on the canonical basis."""
    basis = generator_basis(N)
    logs = {}
    for exponents in itertools.product(*[range(order) for _, order in basis]):
        unit = 1 % N
        for (g, _), a in zip(basis, exponents):
            unit = unit * pow(g, a, N) % N
        logs[unit] = exponents
    if len(logs) != euler_phi(N):
        raise ConsistencyError('The basis of (Z/{}Z)* does not generate the unit group'.format(N))
    return logs


#==============================
#  Exact cyclotomic sums
#==============================

@lru_cache(maxsize=128)
def cyclotomic_polynomial(n):
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    check_positive_integer(n)
    coefficients = sympy.cyclotomic_poly(n, polys=True).all_coeffs()
    return tuple(int(c) for c in reversed(coefficients))


class CyclotomicSum(object):
    """An exact sum of weighted roots of unity, Sum w * exp(2*pi*i*f), with each angle f a
    fraction in [0, 1). Weights are integers or fractions for exact use; floating weights
    are accepted too, in which case only rendering is meaningful."""

    def __init__(self):
        self.terms = {}

    def add(self, angle, weight=1):
        """Add weight * exp(2*pi*i*angle), the angle being a Fraction."""
        if weight == 0:
            return self
        angle = Fraction(angle) % 1
        self.terms[angle] = self.terms.get(angle, 0) + weight
        return self

    def __iadd__(self, other):
        for angle, weight in other.terms.items():
            self.add(angle, weight)
        return self

    def __mul__(self, other):
        product = CyclotomicSum()
        for angle, weight in self.terms.items():
            for other_angle, other_weight in other.terms.items():
                product.add(angle + other_angle, weight * other_weight)
        return product

    def conductor(self):
        """The smallest m such that every angle lies in (1/m)Z."""
        m = 1
        for angle in self.terms:
            m = lcm(m, angle.denominator)
        return m

    def is_exact(self):
        return all(isinstance(weight, (int, Fraction)) for weight in self.terms.values())

    def _reduced(self):
        """Coordinates on the power basis 1, z, ..., z^(deg-1) of the m-th cyclotomic field, z = exp(2*pi*i/m)."""
        if not self.is_exact():
            raise TypeError('Exact arithmetic requires integer or rational weights')
        m = self.conductor()
        poly = [0] * m
        for angle, weight in self.terms.items():
            poly[int(angle * m)] += weight
        phi = cyclotomic_polynomial(m)
        degree = len(phi) - 1
        for i in range(m - 1, degree - 1, -1):
            coefficient = poly[i]
            if coefficient:
                for j, c in enumerate(phi):
                    poly[i - degree + j] -= coefficient * c
        return poly[:degree]

    def is_zero(self):
        """Exact zero test, by reduction modulo the cyclotomic polynomial."""
        return all(c == 0 for c in self._reduced())

    def rational_value(self):
        """The value as a Fraction, or None if the sum is not rational."""
        reduced = self._reduced()
        if any(c != 0 for c in reduced[1:]):
            return None
        return Fraction(reduced[0]) if reduced else Fraction(0)

    def render(self):
        """The value at the working precision."""
        total = mpmath.mpc(0)
        for angle, weight in self.terms.items():
            if isinstance(weight, Fraction):
                weight = mpmath.mpf(weight.numerator) / weight.denominator
            total += weight * root_of_unity(angle)
        return total


def root_of_unity(angle):
    """exp(2*pi*i*angle) for a rational angle, exact for quarter turns."""
    angle = Fraction(angle) % 1
    if angle == 0:
        return mpmath.mpc(1)
    if angle == Fraction(1, 2):
        return mpmath.mpc(-1)
    if angle == Fraction(1, 4):
        return mpmath.mpc(0, 1)
    if angle == Fraction(3, 4):
        return mpmath.mpc(0, -1)
    return mpmath.expjpi(mpmath.mpf(2 * angle.numerator) / angle.denominator)


#==============================
#  Dirichlet characters
#==============================

class DirichletCharacter(object):
    """A Dirichlet character mod N, held exactly by its exponents on the canonical
    generator basis of (Z/NZ)*: the i-th generator g_i of order o_i is sent to exp(2*pi*i*e_i/o_i).

    Values are exact angles (see :meth:`angle`) and are rendered as complex numbers at the
    working precision only on request. Conductor and primitive core are computed lazily.

    Args:
        modulus (:obj:`int`): the modulus N.
        exponents (:obj:`list`): the exponents e_i, one per basis generator. Defaults to the trivial character.
    """

    def __init__(self, modulus, exponents=None):
        check_positive_integer(modulus, 'modulus')
        self.modulus = modulus
        self.generator_basis = generator_basis(modulus)
        if exponents is None:
            exponents = [0] * len(self.generator_basis)
        if len(exponents) != len(self.generator_basis):
            raise ValueError('Sorry, a character mod {} needs {} exponents, got {}'.format(modulus, len(self.generator_basis), len(exponents)))
        self.exponents = tuple(int(e) % order for e, (_, order) in zip(exponents, self.generator_basis))
        self._conductor = None
        self._core = None

    def __repr__(self):
        return 'DirichletCharacter(modulus={}, exponents={})'.format(self.modulus, list(self.exponents))

    def __eq__(self, other):
        return isinstance(other, DirichletCharacter) and self.modulus == other.modulus and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __call__(self, n):
        return self.evaluate(n)

    def angle(self, n):
        """The exact angle f with chi(n) = exp(2*pi*i*f), or None when chi(n) = 0."""
        n = n % self.modulus
        if gcd(n, self.modulus) != 1:
            return None
        logs = _unit_logs(self.modulus)[n]
        angle = Fraction(0)
        for a, e, (_, order) in zip(logs, self.exponents, self.generator_basis):
            angle += Fraction(a * e, order)
        return angle % 1

    def evaluate(self, n):
        """The value chi(n) at the working precision (exact for values in {0, 1, -1, i, -i})."""
        angle = self.angle(n)
        if angle is None:
            return mpmath.mpc(0)
        return root_of_unity(angle)

    def real_value(self, n):
        """The value chi(n) as an integer, for characters of order at most two."""
        angle = self.angle(n)
        if angle is None:
            return 0
        if angle == 0:
            return 1
        if angle == Fraction(1, 2):
            return -1
        raise ValueError('Sorry, the character {} takes the non real value at {}'.format(self, n))

    @property
    def order(self):
        result = 1
        for e, (_, o) in zip(self.exponents, self.generator_basis):
            result = lcm(result, o // gcd(e, o))
        return result

    @property
    def parity(self):
        """The value chi(-1), as +1 or -1."""
        return 1 if self.angle(-1) == 0 else -1

    def is_trivial(self):
        return all(e == 0 for e in self.exponents)

    def is_real(self):
        return self.order <= 2

    @property
    def conductor(self):
        """The conductor m_chi: the smallest divisor m of N such that chi is trivial on the units congruent to 1 mod m."""
        if self._conductor is None:
            units = _unit_logs(self.modulus)
            for m in divisors(self.modulus):
                if all(self.angle(n) == 0 for n in units if n % m == 1 % m):
                    self._conductor = m
                    break
        return self._conductor

    @property
    def ell(self):
        """The index N/m_chi."""
        return self.modulus // self.conductor

    def is_primitive(self):
        return self.conductor == self.modulus

    @property
    def primitive(self):
        """The primitive character chi^0 mod m_chi inducing chi."""
        if self._core is None:
            if self.is_primitive():
                self._core = self
            else:
                m = self.conductor

                def lifted_angle(h):
                    n = h
                    while gcd(n, self.modulus) != 1:
                        n += m
                    return self.angle(n)

                self._core = character_from_angles(m, lifted_angle)
                logger.debug('Primitive core of %s is %s', self, self._core)
        return self._core

    def conjugate(self):
        return DirichletCharacter(self.modulus, [-e for e in self.exponents])

    def values(self):
        """The values chi(1), ..., chi(N) at the working precision."""
        return [self.evaluate(n) for n in range(1, self.modulus + 1)]


def character_from_angles(N, angle_of):
    """Build the character mod N whose value at each canonical generator has the angle
    returned by angle_of (a function of the generator, returning a Fraction)."""
    exponents = []
    for g, order in generator_basis(N):
        exponent = Fraction(angle_of(g)) * order
        if exponent.denominator != 1:
            raise ConsistencyError('The angle {} is not an {}-th root of unity angle'.format(angle_of(g), order))
        exponents.append(int(exponent) % order)
    return DirichletCharacter(N, exponents)


def trivial_character(N=1):
    """The principal character 1_N."""
    return DirichletCharacter(N)


def character_group(N):
    """Return all the phi(N) characters mod N, the trivial one first, ordered lexicographically by exponents."""
    check_positive_integer(N, 'N')
    basis = generator_basis(N)
    return [DirichletCharacter(N, list(exponents)) for exponents in itertools.product(*[range(order) for _, order in basis])]


def conductor_and_core(chi):
    """Return the conductor m_chi and the primitive core chi^0 of a character."""
    return chi.conductor, chi.primitive


def conjugate(chi):
    return chi.conjugate()


def induce(chi, N):
    """Return the character mod N (a multiple of the modulus of chi) agreeing with chi on the units mod N."""
    if N % chi.modulus:
        raise ValueError('Sorry, cannot induce a character mod {} to modulus {}'.format(chi.modulus, N))
    return character_from_angles(N, lambda g: chi.angle(g))


def multiply(chi1, chi2):
    """The product character, taken mod the lcm of the two moduli."""
    N = lcm(chi1.modulus, chi2.modulus)
    return character_from_angles(N, lambda g: chi1.angle(g) + chi2.angle(g))


def gauss_sum_exact(chi0):
    """The Gauss sum of a primitive character as an exact cyclotomic sum."""
    if not chi0.is_primitive():
        raise DomainError('Sorry, Gauss sums are only defined here for primitive characters ({} has conductor {})'.format(chi0, chi0.conductor))
    m = chi0.modulus
    total = CyclotomicSum()
    for n in range(1, m + 1):
        angle = chi0.angle(n)
        if angle is not None:
            total.add(angle + Fraction(n, m))
    return total


@lru_cache(maxsize=1024)
def _gauss_sum(chi0, prec):
    return gauss_sum_exact(chi0).render()


def gauss_sum(chi0):
    """The Gauss sum W(chi^0) = Sum_{n=1}^{m} chi^0(n) exp(2*pi*i*n/m) at the working precision."""
    return _gauss_sum(chi0, mpmath.mp.prec)


def kronecker_character(D):
    """The real primitive character n -> (D/n) attached to the fundamental discriminant D < 0."""
    if isinstance(D, bool) or not isinstance(D, int):
        raise TypeError('The discriminant must be of integer type, got "{}"'.format(D.__class__.__name__))
    if D >= 0:
        raise DomainError('Sorry, only negative (imaginary quadratic) discriminants are supported (got {})'.format(D))
    if not is_fundamental_discriminant(D):
        raise DomainError('Sorry, {} is not a fundamental discriminant'.format(D))
    return character_from_angles(-D, lambda g: Fraction(0) if kronecker_symbol(D, g) == 1 else Fraction(1, 2))


#==============================
#  Labels
#==============================

def character_label(chi):
    """The canonical label of a character, as a dictionary."""
    return {'modulus': chi.modulus, 'exponents': list(chi.exponents), 'conductor': chi.conductor}


def character_from_label(label):
    """Parse a character label: "trivial:N", "kronecker:D", "N:e1,e2,..." or the JSON
    object form {"modulus": N, "exponents": [...], "conductor": m}."""
    if isinstance(label, dict):
        data = label
    else:
        label = str(label).strip()
        if label.startswith('{'):
            try:
                data = json.loads(label)
            except ValueError:
                raise DomainError('Unknown character label "{}"'.format(label)) from None
        else:
            kind, _, rest = label.partition(':')
            try:
                if kind == 'trivial':
                    return trivial_character(int(rest) if rest else 1)
                if kind == 'kronecker':
                    return kronecker_character(int(rest))
                if kind.isdigit():
                    exponents = [int(e) for e in rest.split(',')] if rest else []
                    return DirichletCharacter(int(kind), exponents)
            except (ValueError, TypeError) as e:
                raise DomainError('Bad character label "{}": {}'.format(label, e)) from None
            raise DomainError('Unknown character label "{}"'.format(label))
    try:
        chi = DirichletCharacter(int(data['modulus']), [int(e) for e in data.get('exponents', [])])
    except (KeyError, ValueError, TypeError) as e:
        raise DomainError('Bad character label "{}": {}'.format(label, e)) from None
    if 'conductor' in data and int(data['conductor']) != chi.conductor:
        raise DomainError('The label "{}" declares conductor {} but the character has conductor {}'.format(label, data['conductor'], chi.conductor))
    return chi
