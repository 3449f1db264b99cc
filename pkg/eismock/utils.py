# -*- coding: utf-8 -*-
"""Integer arithmetic utilities"""

from functools import lru_cache
from math import gcd

import sympy

import logging
logger = logging.getLogger(__name__)


def check_positive_integer(n, name='n'):
    """Check that the argument is a positive integer, raise otherwise."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError('The argument "{}" must be of integer type, got "{}"'.format(name, n.__class__.__name__))
    if n < 1:
        raise ValueError('Sorry, the argument "{}" must be a positive integer (got "{}")'.format(name, n))


@lru_cache(maxsize=None)
def factorize(n):
    """Factorize a positive integer.

    Args:
        n(int): the integer to factorize.

    Returns:
        tuple: the (prime, exponent) pairs, ordered by prime.
    """
    check_positive_integer(n)
    return tuple((int(p), int(e)) for p, e in sorted(sympy.factorint(n).items()))


def prime_divisors(n):
    """Return the primes dividing n, in increasing order."""
    return tuple(p for p, _ in factorize(n))


@lru_cache(maxsize=4096)
def divisors(n):
    """Return the positive divisors of n in increasing order. Non positive or
    non integer arguments have no divisors."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        return ()
    return tuple(int(d) for d in sympy.divisors(n))


def euler_phi(n):
    """Euler's totient function."""
    return int(sympy.totient(n))


def ord_p(n, p):
    """The p-adic order of the non zero integer n."""
    if n == 0:
        raise ValueError('Sorry, the p-adic order of zero is not defined')
    return int(sympy.multiplicity(p, abs(n)))


def lcm(a, b):
    """Least common multiple of two positive integers."""
    return a // gcd(a, b) * b


def exact_quotient(n, t):
    """Return n/t if t divides n, None otherwise (arithmetic functions vanish off the integers)."""
    if n % t:
        return None
    return n // t


def is_fundamental_discriminant(D):
    """Check if D is a fundamental discriminant (of either sign, D = 1 excluded)."""
    if isinstance(D, bool) or not isinstance(D, int) or D in (0, 1):
        return False
    if D % 4 == 1:
        return is_squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False


def is_squarefree(n):
    """Check if the positive integer n is square-free."""
    return sympy.mobius(n) != 0
