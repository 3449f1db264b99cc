# -*- coding: utf-8 -*-
"""Precision and truncation settings"""

import os
import math
import mpmath

# Setup logging
import logging
logger = logging.getLogger(__name__)

BITS = int(os.environ.get('EISMOCK_BITS', 128))
N_MAX = int(os.environ.get('EISMOCK_N_MAX', 64))
Y_MIN = float(os.environ.get('EISMOCK_Y_MIN', 0.5))
SEED = int(os.environ.get('EISMOCK_SEED', 0))


class PrecisionConfig(object):
    """The numeric settings every computation of the library is governed by.

    The tolerance defaults to 2^(-bits/3), which leaves room for the cancellation in finite
    differences and in alternating character sums. The same value is used as the derivative
    tolerance of the shadow and Laplacian checks.

    Args:
        bits (:obj:`int`): the working precision, in bits. Must be at least 64. Defaults to 128.
        n_max (:obj:`int`): the q-expansion truncation order. Defaults to 64.
        tol (:obj:`float`): the report tolerance. Defaults to 2^(-bits/3).
        y_min (:obj:`float`): the minimal imaginary part accepted for evaluation. Defaults to 0.5.
        seed (:obj:`int`): the seed of the pseudorandom Gamma_0(N) sampling. Defaults to 0.
    """

    def __init__(self, bits=BITS, n_max=N_MAX, tol=None, y_min=Y_MIN, seed=SEED):

        if int(bits) != bits or bits < 64:
            raise ValueError('Sorry, the working precision must be an integer number of bits >= 64 (got "{}")'.format(bits))
        if int(n_max) != n_max or n_max < 1:
            raise ValueError('Sorry, the truncation order must be a positive integer (got "{}")'.format(n_max))
        if tol is not None and not tol > 0:
            raise ValueError('Sorry, the tolerance must be positive (got "{}")'.format(tol))
        if not y_min > 0:
            raise ValueError('Sorry, y_min must be positive (got "{}")'.format(y_min))

        self.bits = int(bits)
        self.n_max = int(n_max)
        self.tol = float(tol) if tol is not None else 2.0 ** (-self.bits / 3.0)
        self.y_min = float(y_min)
        self.seed = int(seed)

    def __repr__(self):
        return 'PrecisionConfig(bits={}, n_max={}, tol={:.3e}, y_min={}, seed={})'.format(self.bits, self.n_max, self.tol, self.y_min, self.seed)

    @property
    def derivative_tol(self):
        """The tolerance of the numerical xi and Laplacian checks."""
        return 2.0 ** (-self.bits / 3.0)

    @property
    def decimal_digits(self):
        """The number of significant decimal digits carried by the working precision."""
        return int(math.floor(self.bits * math.log10(2)))

    def step(self, y):
        """The finite-difference step for a point with imaginary part y."""
        return mpmath.mpf(y) * mpmath.mpf(2) ** (-self.bits // 4)

    def terms_for(self, y, tol=None, growth=0):
        """The smallest truncation order n with n^growth * exp(-2*pi*y*n) below the tolerance,
        where growth is the polynomial growth exponent of the coefficients."""
        tol = self.tol if tol is None else tol
        if not y > 0:
            raise ValueError('Sorry, the imaginary part must be positive (got "{}")'.format(y))
        rate = 2 * math.pi * float(y)
        n = max(1, int(math.ceil(-math.log(tol) / rate)))
        while growth * math.log(n) - rate * n >= math.log(tol):
            n += 1
        return n

    def activate(self):
        """Set the mpmath working precision to the configured number of bits."""
        mpmath.mp.prec = self.bits
        logger.debug('Working precision set to %s bits', self.bits)
        return self

    def precision(self):
        """Return a context manager running its block at the configured precision."""
        return mpmath.workprec(self.bits)

    def replace(self, **kwargs):
        """Return a copy of the configuration with the given fields replaced."""
        fields = dict(bits=self.bits, n_max=self.n_max, tol=self.tol, y_min=self.y_min, seed=self.seed)
        fields.update(kwargs)
        return PrecisionConfig(**fields)
