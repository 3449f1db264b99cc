# -*- coding: utf-8 -*-
"""Points, harmonic Maass forms and the numerical checks on them"""

import random
from math import gcd

import numpy
import mpmath

from .chars import DirichletCharacter, conjugate, gauss_sum, character_from_label
from .coeffs import (EisSpec, FourierSeries, eisenstein_coefficients, mock_coefficients,
                     quasi_modular_series, a_coeff, is_unit_character, euler_product, _i_power, _mp)
from .lfun import l_value, constant
from .utils import lcm
from .config import PrecisionConfig
from .exceptions import DomainError, TruncationError

# Setup logging
import logging
logger = logging.getLogger(__name__)

# Share of the tolerance a truncation tail may take
TAIL_FRACTION = 1e-3

# Entries of the sampled Gamma_0(N) elements are bounded by this
SAMPLE_BOUND = 20

# Lattice sums are compared with the Fourier expansion at this tolerance
LATTICE_TOL = 1e-8
LATTICE_BOUND = 400


#==============================
#  Points and matrices
#==============================

class UpperHalfPoint(object):
    """A point z = x + iy of the upper half plane.

    Args:
        x: the real part.
        y: the imaginary part, strictly positive.
    """

    def __init__(self, x, y):
        self.x = mpmath.mpf(x)
        self.y = mpmath.mpf(y)
        if not self.y > 0:
            raise DomainError('Sorry, a point of the upper half plane needs y > 0 (got y={})'.format(y))

    @classmethod
    def from_complex(cls, z):
        z = mpmath.mpc(z)
        return cls(z.real, z.imag)

    @property
    def z(self):
        return mpmath.mpc(self.x, self.y)

    def __repr__(self):
        return 'UpperHalfPoint({}, {})'.format(mpmath.nstr(self.x, 8), mpmath.nstr(self.y, 8))

    def __str__(self):
        return mpmath.nstr(self.z, 10)


def as_point(z):
    """Turn a complex number (or a point) into an UpperHalfPoint."""
    if isinstance(z, UpperHalfPoint):
        return z
    return UpperHalfPoint.from_complex(z)


class GammaZeroElement(object):
    """A matrix (a b; c d) of SL_2(Z) with c = 0 mod N.

    Args:
        a, b, c, d (:obj:`int`): the entries.
        level (:obj:`int`): the level N. Defaults to 1.
    """

    def __init__(self, a, b, c, d, level=1):
        for entry in (a, b, c, d, level):
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise DomainError('Sorry, the entries of a Gamma_0(N) element must be integers (got {})'.format((a, b, c, d, level)))
        if level < 1:
            raise DomainError('Sorry, the level must be positive (got {})'.format(level))
        if a * d - b * c != 1:
            raise DomainError('Sorry, ({} {}; {} {}) has determinant {}, not 1'.format(a, b, c, d, a * d - b * c))
        if c % level:
            raise DomainError('Sorry, ({} {}; {} {}) is not in Gamma_0({})'.format(a, b, c, d, level))
        self.a, self.b, self.c, self.d = a, b, c, d
        self.level = level

    def __repr__(self):
        return 'GammaZeroElement({}, {}, {}, {}, level={})'.format(self.a, self.b, self.c, self.d, self.level)

    def __str__(self):
        return '({} {}; {} {})'.format(self.a, self.b, self.c, self.d)

    def apply(self, z):
        """The Moebius transformation (az+b)/(cz+d)."""
        z = as_point(z).z
        return (self.a * z + self.b) / (self.c * z + self.d)

    def automorphy(self, z):
        """The factor cz+d."""
        return self.c * as_point(z).z + self.d

    def as_list(self):
        return [self.a, self.b, self.c, self.d]


def sample_gamma0(level, count, seed, bound=SAMPLE_BOUND):
    """Draw count pseudorandom elements of Gamma_0(level) with entries of size about bound.

    The lower left entry is always a non zero multiple of the level, equal to plus or minus
    the level itself when the level exceeds the bound.
    """
    generator = random.Random(seed)
    multiples = max(1, bound // level)
    if level > bound:
        logger.debug('Level %s above the sampling bound %s, drawing c = +-%s', level, bound, level)
    elements = []
    while len(elements) < count:
        c = level * generator.choice([j for j in range(-multiples, multiples + 1) if j])
        d = generator.randint(-bound, bound)
        if gcd(c, d) != 1 or (d == 0 and abs(c) != 1):
            continue
        a = pow(d, -1, abs(c)) if abs(c) > 1 else 0
        b = (a * d - 1) // c
        elements.append(GammaZeroElement(a, b, c, d, level))
    return elements


def sample_point(gamma, generator=None):
    """A point z with Im(z) and Im(gamma z) both of the order of 1/|c|, for gamma = (a b; c d)."""
    offset = mpmath.mpf(generator.uniform(-0.2, 0.2)) if generator else mpmath.mpf('0.1')
    if gamma.c == 0:
        return UpperHalfPoint(offset, 1)
    scale = mpmath.mpf(1) / abs(gamma.c)
    return UpperHalfPoint(mpmath.mpf(-gamma.d) / gamma.c + offset * scale, scale)


def sample_points(count, seed):
    """Pseudorandom points with |x| <= 1/2 and 0.8 <= y <= 2."""
    generator = random.Random(seed)
    return [UpperHalfPoint(generator.uniform(-0.5, 0.5), generator.uniform(0.8, 2.0)) for _ in range(count)]


#==============================
#  Harmonic Maass forms
#==============================

class HarmonicMaassForm(object):
    """A harmonic Maass form of weight 2-k given by its holomorphic part and its shadow,

        F(z) = Sum_{n>=0} c+(n) q^n - Sum_{n>=0} conj(c(n)) beta_{2-k}(n, y) q^{-n},

    with xi_{2-k} F = Sum_{n>=0} c(n) q^n.

    Args:
        holo (:obj:`FourierSeries`): the coefficients c+(n), of weight 2-k.
        shadow (:obj:`FourierSeries`): the coefficients c(n), of weight k.
        spec (:obj:`EisSpec`): the spec the form was assembled from, if any.
    """

    def __init__(self, holo, shadow, spec=None):
        if holo.weight != 2 - shadow.weight:
            raise ValueError('Sorry, a shadow of weight {} does not match a holomorphic part of weight {}'.format(shadow.weight, holo.weight))
        self.holo = holo
        self.shadow = shadow
        self.spec = spec

    def __repr__(self):
        return 'HarmonicMaassForm(weight={}, level={}, n_max={})'.format(self.weight, self.level, self.n_max)

    @property
    def weight(self):
        return self.holo.weight

    @property
    def weight_2mk(self):
        return self.holo.weight

    @property
    def level(self):
        return lcm(self.holo.level, self.shadow.level)

    @property
    def character(self):
        return self.holo.character

    @property
    def n_max(self):
        return min(self.holo.n_max, self.shadow.n_max)

    def scale(self, factor):
        """The form a*F: the holomorphic part scales by a, the shadow by conj(a)."""
        factor = mpmath.mpc(factor)
        return HarmonicMaassForm(self.holo.scale(factor), self.shadow.scale(mpmath.conj(factor)))

    def __add__(self, other):
        return HarmonicMaassForm(self.holo + other.holo, self.shadow + other.shadow)


def assemble_harmonic(spec, n_max):
    """Pair the mock coefficients of a spec with its Eisenstein series as shadow."""
    return HarmonicMaassForm(mock_coefficients(spec, n_max), eisenstein_coefficients(spec, n_max), spec)


def beta_integral(two_minus_k, n, y):
    """beta_{2-k}(n, y): Gamma(k-1, 4 pi n y) / (4 pi n)^(k-1) for n > 0, y^(k-1)/(1-k) for n = 0
    (and -log y when k = 1)."""
    k = 2 - two_minus_k
    if k < 1:
        raise DomainError('Sorry, beta is defined here for weights 2-k with k >= 1 (got 2-k={})'.format(two_minus_k))
    y = mpmath.mpf(y)
    if not y > 0:
        raise DomainError('Sorry, beta needs y > 0 (got {})'.format(y))
    if n < 0:
        raise DomainError('Sorry, beta needs n >= 0 (got {})'.format(n))
    if n == 0:
        if k == 1:
            return -mpmath.log(y)
        return mpmath.power(y, k - 1) / (1 - k)
    x = 4 * constant('pi') * n
    return mpmath.gammainc(k - 1, x * y) / mpmath.power(x, k - 1)


def omega_function(y, alpha, beta, method='quadrature'):
    """omega(y; alpha, beta) = y^beta / Gamma(beta) * Int_0^oo exp(-y u) (u+1)^(alpha-1) u^(beta-1) du.

    The "quadrature" method integrates numerically (Re(beta) > 0); the "hypergeometric" method
    uses omega = y^beta U(beta, alpha+beta, y), which also covers beta = 0.
    """
    y = mpmath.mpf(y)
    if not y > 0:
        raise DomainError('Sorry, omega needs y > 0 (got {})'.format(y))
    if method == 'hypergeometric' or beta == 0:
        return mpmath.power(y, beta) * mpmath.hyperu(beta, alpha + beta, y)
    if method != 'quadrature':
        raise ValueError('Unknown method "{}"'.format(method))
    if not mpmath.re(beta) > 0:
        raise DomainError('Sorry, the omega integral needs Re(beta) > 0 (got {})'.format(beta))
    integral = mpmath.quad(lambda u: mpmath.exp(-y * u) * mpmath.power(u + 1, alpha - 1) * mpmath.power(u, beta - 1),
                           [0, 1, mpmath.inf])
    return mpmath.power(y, beta) * mpmath.rgamma(beta) * integral


#==============================
#  Evaluation
#==============================

def _tail_parts(obj, y):
    """(scale, growth) pairs bounding the terms of obj at imaginary part y by scale * n^growth * exp(-2 pi n y)."""
    if isinstance(obj, FourierSeries):
        return [(obj.scale_term(), obj.growth)]
    if isinstance(obj, HarmonicMaassForm):
        # beta(n, y) exp(4 pi n y) stays below max(1, y^(k-2))
        k = obj.shadow.weight
        factor = max(mpmath.mpf(1), mpmath.power(y, k - 2))
        return [(obj.holo.scale_term(), obj.holo.growth), (obj.shadow.scale_term() * factor, obj.shadow.growth)]
    raise TypeError('Cannot evaluate objects of type "{}"'.format(obj.__class__.__name__))


def required_terms(obj, y, config, tol=None):
    """The truncation order needed for the tail of obj at imaginary part y to stay below
    TAIL_FRACTION times the tolerance."""
    tol = config.tol if tol is None else tol
    y = mpmath.mpf(y)
    ratio = 1 - mpmath.exp(-2 * constant('pi') * y)
    n = 0
    for scale, growth in _tail_parts(obj, y):
        if not scale:
            continue
        target = float(tol * TAIL_FRACTION * ratio / scale)
        n = max(n, config.terms_for(y, tol=target, growth=growth))
    return n


def tail_bound(obj, y):
    """A heuristic bound of the omitted terms of obj at imaginary part y."""
    y = mpmath.mpf(y)
    n = obj.n_max + 1
    rate = 2 * constant('pi') * y
    bound = mpmath.mpf(0)
    for scale, growth in _tail_parts(obj, y):
        bound += scale * mpmath.power(n, growth) * mpmath.exp(-rate * n) / (1 - mpmath.exp(-rate))
    return bound


def _series_value(series, z):
    q = mpmath.exp(2 * mpmath.pi * mpmath.mpc(0, 1) * z)
    value = mpmath.mpc(0)
    power = mpmath.mpc(1)
    for c in series.coefficients:
        if c:
            value += c * power
        power *= q
    if series.quasi_term:
        value += series.quasi_term / z.imag
    return value


def _harmonic_value(form, z):
    y = z.imag
    two_minus_k = form.holo.weight
    value = _series_value(form.holo.truncate(form.n_max), z)
    q_inverse = mpmath.exp(-2 * mpmath.pi * mpmath.mpc(0, 1) * z)
    power = mpmath.mpc(1)
    for n in range(form.n_max + 1):
        c = form.shadow[n]
        if c:
            value -= mpmath.conj(c) * beta_integral(two_minus_k, n, y) * power
        power *= q_inverse
    return value


def _evaluate(obj, point, config):
    required = required_terms(obj, point.y, config)
    if required > obj.n_max:
        raise TruncationError('Sorry, {} needs n_max >= {} at y={} (has {})'.format(obj, required, mpmath.nstr(point.y, 6), obj.n_max),
                              required)
    if isinstance(obj, HarmonicMaassForm):
        return _harmonic_value(obj, point.z)
    return _series_value(obj, point.z)


def evaluate(obj, z, config=None, with_bound=False):
    """Evaluate a truncated q-expansion or a harmonic Maass form at a point.

    Args:
        obj(FourierSeries or HarmonicMaassForm): what to evaluate.
        z(UpperHalfPoint or complex): the point, with imaginary part at least config.y_min.
        config(PrecisionConfig): the settings. Defaults to PrecisionConfig().
        with_bound(bool): also return the tail bound.

    Returns:
        the value, or the pair (value, tail bound).

    Raises:
        DomainError: if the point lies below y_min.
        TruncationError: if the series is too short for the point at the configured tolerance.
    """
    config = PrecisionConfig() if config is None else config
    point = as_point(z)
    with config.precision():
        if point.y < config.y_min:
            raise DomainError('Sorry, the point {} lies below y_min={}'.format(point, config.y_min))
        value = _evaluate(obj, point, config)
        if with_bound:
            return value, tail_bound(obj, point.y)
        return value


def assemble_for(spec, y, config):
    """Assemble the pre-image of a spec with enough terms to be evaluated down to imaginary part y."""
    return build_for(lambda n_max: assemble_harmonic(spec, n_max), y, config)


def build_for(build, y, config):
    """Call build(n_max) with growing n_max until the result can be evaluated down to imaginary part y."""
    n_max = config.n_max
    for _ in range(5):
        form = build(n_max)
        required = required_terms(form, y, config)
        if required <= n_max:
            return form
        logger.debug('Rebuilding %s with n_max=%s (was %s)', form, required + 2, n_max)
        n_max = required + 2
    raise TruncationError('Sorry, could not reach the truncation order needed at y={}'.format(y), n_max)


#==============================
#  Non-holomorphic Eisenstein series
#==============================

def _check_nonholomorphic_args(s, k):
    if isinstance(s, bool) or not isinstance(s, int) or s < 0:
        raise DomainError('Sorry, s must be a non-negative integer (got "{}")'.format(s))
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError('Sorry, the weight must be an integer (got "{}")'.format(k))
    if k + 2 * s < 3:
        raise DomainError('Sorry, k+2s must be at least 3 (got k={}, s={})'.format(k, s))


def nonholomorphic_coefficients(s, k, psi, rho):
    """The constants (A, B, C, D) of the expansion of y^s E_k(Mz, s, psi, rho)."""
    pi = constant('pi')
    M = rho.modulus
    w = gauss_sum(rho.primitive)
    A = mpmath.power(2, k) * mpmath.power(pi, s + k) * _i_power(-k) * w / mpmath.power(M, s + k) * mpmath.rgamma(s + k)
    B = mpmath.power(2, -k) * mpmath.power(pi, s) * _i_power(-k) * rho.parity * w / mpmath.power(M, s) * mpmath.rgamma(s)
    C = l_value(rho, 2 * s + k) if is_unit_character(psi) else mpmath.mpc(0)
    D = mpmath.mpc(0)
    if rho.is_trivial() and s > 0:
        D = (mpmath.sqrt(pi) * _i_power(-k) * mpmath.gamma(mpmath.mpf(2 * s + k - 1) / 2) * mpmath.gamma(mpmath.mpf(2 * s + k) / 2)
             * mpmath.rgamma(s) * mpmath.rgamma(s + k) * l_value(psi, 2 * s + k - 1) * _mp(euler_product(M)))
    return A, B, C, D


def nonholomorphic_fourier(z, s, k, psi, rho, n_max=None, config=None):
    """y^s E_k(Mz, s, psi, rho) from its Fourier expansion, for integers s >= 0 with k+2s >= 3.

    Args:
        z(UpperHalfPoint or complex): the point.
        s(int): the spectral parameter.
        k(int): the weight, possibly negative.
        psi(DirichletCharacter): the character mod L.
        rho(DirichletCharacter): the character mod M.
        n_max(int): the truncation order. Defaults to the order needed at z.
        config(PrecisionConfig): the settings.
    """
    config = PrecisionConfig() if config is None else config
    _check_nonholomorphic_args(s, k)
    point = as_point(z)
    with config.precision():
        y = point.y
        M = rho.modulus
        pi = constant('pi')
        if n_max is None:
            n_max = config.terms_for(y, tol=config.tol * TAIL_FRACTION, growth=max(s + k - 1, 0) + 1)
        A, B, C, D = nonholomorphic_coefficients(s, k, psi, rho)

        value = mpmath.power(y, s) * C + mpmath.power(y, -s - k + 1) * mpmath.power(M, -2 * s - k + 1) * D
        q = mpmath.exp(2 * pi * mpmath.mpc(0, 1) * point.z)
        q_bar = mpmath.exp(-2 * pi * mpmath.mpc(0, 1) * mpmath.conj(point.z))
        first, second = mpmath.mpc(0), mpmath.mpc(0)
        power, power_bar = mpmath.mpc(1), mpmath.mpc(1)
        for n in range(1, n_max + 1):
            power *= q
            power_bar *= q_bar
            a = a_coeff(s, k, n, psi, rho)
            if not a:
                continue
            Y = 4 * pi * n * y
            if A:
                first += a * mpmath.power(n, -s) * power * omega_function(Y, k + s, s, method='hypergeometric')
            if B:
                second += a * mpmath.power(n, -s - k) * power_bar * omega_function(Y, s, k + s, method='hypergeometric')
        value += A * mpmath.power(M, -s) * first
        value += mpmath.power(y, -k) * B * mpmath.power(M, -k - s) * second
        return value


def preimage_fourier(spec, z, n_max=None, config=None):
    """The pre-image (k-1)^{-1} y^(k-1) E_{2-k}(tMz, k-1, conj(psi), rho) from the non-holomorphic expansion, k > 2."""
    if spec.k <= 2:
        raise DomainError('Sorry, the Eisenstein pre-image is defined here for k > 2 (got k={})'.format(spec.k))
    point = as_point(z)
    t, k = spec.t, spec.k
    value = nonholomorphic_fourier(UpperHalfPoint(t * point.x, t * point.y), k - 1, 2 - k, conjugate(spec.psi), spec.rho, n_max, config)
    return value / (mpmath.power(t, k - 1) * (k - 1))


#==============================
#  Lattice sums
#==============================

def _character_table(chi):
    return numpy.array([complex(chi.evaluate(r)) for r in range(chi.modulus)], dtype=numpy.complex128)


def _trapezoid_sum(grid, center, b):
    """The trapezoid weighted sum of grid over the square of half side b around center."""
    square = grid[center - b:center + b + 1, center - b:center + b + 1]
    edges = square[0, :].sum() + square[-1, :].sum() + square[:, 0].sum() + square[:, -1].sum()
    corners = square[0, 0] + square[0, -1] + square[-1, 0] + square[-1, -1]
    return square.sum() - edges / 2 + corners / 4


def lattice_tail_bound(z, sigma, bound):
    """Bound of (1/2) Sum |mz+n|^(-sigma) over the lattice points outside the square of half side bound."""
    if sigma <= 2:
        raise DomainError('Sorry, the lattice sum diverges for k+2s = {} <= 2'.format(sigma))
    point = as_point(z)
    x, y = float(point.x), float(point.y)
    form = numpy.array([[x * x + y * y, x], [x, 1.0]])
    smallest = numpy.linalg.eigvalsh(form)[0]
    return numpy.pi * smallest ** (-sigma / 2.0) * (bound - 1) ** (2.0 - sigma) / (sigma - 2.0)


def lattice_eisenstein(z, s, k, psi, rho, bound=LATTICE_BOUND, richardson=True):
    """E_k(z, s, psi, rho) = (1/2) Sum'_{m,n} psi(m) rho(n) (mz+n)^(-k) |mz+n|^(-2s) by direct summation.

    The square |m|, |n| <= bound is summed with trapezoid weights. With richardson set, the
    sums over four nested squares are fitted to S + c1 B^(2-sigma) + c2 B^(1-sigma) + c3 B^(-sigma),
    sigma = k+2s, and the limit S is returned. Works in double precision.
    """
    sigma = k + 2 * s
    if sigma <= 2:
        raise DomainError('Sorry, the lattice sum diverges for k+2s = {} <= 2'.format(sigma))
    point = as_point(z)
    period = lcm(psi.modulus, rho.modulus)
    levels = sorted(set(period * max(1, int(round(bound * j / (4.0 * period)))) for j in range(1, 5)))
    if richardson and len(levels) < 4:
        raise DomainError('Sorry, the bound {} is too small for characters of period {}'.format(bound, period))
    bound = levels[-1]

    w_z = complex(point.z)
    m = numpy.arange(-bound, bound + 1)
    lattice = m[:, None] * w_z + m[None, :]
    lattice[bound, bound] = 1
    weights = _character_table(psi)[m % psi.modulus][:, None] * _character_table(rho)[m % rho.modulus][None, :]
    grid = weights * lattice ** (-k) * numpy.abs(lattice) ** (-2.0 * s)
    grid[bound, bound] = 0

    if not richardson:
        return mpmath.mpc(_trapezoid_sum(grid, bound, bound) / 2)

    sums = numpy.array([_trapezoid_sum(grid, bound, b) for b in levels])
    system = numpy.array([[1.0, b ** (2.0 - sigma), b ** (1.0 - sigma), b ** (-float(sigma))] for b in levels])
    solution = numpy.linalg.solve(system, sums)
    logger.debug('Lattice sums %s at levels %s extrapolate to %s', sums, levels, solution[0])
    return mpmath.mpc(solution[0] / 2)


def lattice_preimage(spec, z, bound=LATTICE_BOUND):
    """The pre-image (k-1)^{-1} y^(k-1) E_{2-k}(tMz, k-1, conj(psi), rho) from the lattice sum, k > 2."""
    if spec.k <= 2:
        raise DomainError('Sorry, the Eisenstein pre-image is defined here for k > 2 (got k={})'.format(spec.k))
    point = as_point(z)
    k = spec.k
    w = UpperHalfPoint(spec.t * spec.M * point.x, spec.t * spec.M * point.y)
    value = lattice_eisenstein(w, k - 1, 2 - k, conjugate(spec.psi), spec.rho, bound)
    return mpmath.power(point.y, k - 1) / (k - 1) * value


#==============================
#  Differential operators
#==============================

def _as_function(f, config):
    if isinstance(f, (FourierSeries, HarmonicMaassForm)):
        return lambda w: _evaluate(f, as_point(w), config)
    if callable(f):
        return lambda w: mpmath.mpc(f(w))
    raise TypeError('Cannot differentiate objects of type "{}"'.format(f.__class__.__name__))


def _stencil_step(point, h, config):
    h = config.step(point.y) if h is None else mpmath.mpf(h)
    if not 0 < h < point.y / 2:
        raise DomainError('Sorry, the step {} is not small with respect to y={}'.format(h, point.y))
    return h


def xi_numeric(f, z, weight, h=None, config=None):
    """xi_w f = 2i y^w conj(d f / d zbar) by central differences, Richardson extrapolated over h and h/2.

    Args:
        f: a FourierSeries, a HarmonicMaassForm or a function of a complex variable.
        z(UpperHalfPoint or complex): the point.
        weight(int): the weight w of f.
        h: the step. Defaults to config.step(y).
        config(PrecisionConfig): the settings.
    """
    config = PrecisionConfig() if config is None else config
    point = as_point(z)
    with config.precision():
        h = _stencil_step(point, h, config)
        F = _as_function(f, config)
        z0 = point.z
        i = mpmath.mpc(0, 1)

        def dzbar(step):
            fx = (F(z0 + step) - F(z0 - step)) / (2 * step)
            fy = (F(z0 + i * step) - F(z0 - i * step)) / (2 * step)
            return (fx + i * fy) / 2

        derivative = (4 * dzbar(h / 2) - dzbar(h)) / 3
        return 2 * i * mpmath.power(point.y, weight) * mpmath.conj(derivative)


def laplacian_numeric(f, z, weight, h=None, config=None):
    """Delta_w f = y^2 (f_xx + f_yy) - i w y (f_x + i f_y) by five point stencils, Richardson
    extrapolated over h and h/2."""
    config = PrecisionConfig() if config is None else config
    point = as_point(z)
    with config.precision():
        h = _stencil_step(point, h, config)
        F = _as_function(f, config)
        z0 = point.z
        y = point.y
        i = mpmath.mpc(0, 1)
        center = F(z0)

        def delta(step):
            east, west = F(z0 + step), F(z0 - step)
            north, south = F(z0 + i * step), F(z0 - i * step)
            second = (east + west + north + south - 4 * center) / step**2
            fx = (east - west) / (2 * step)
            fy = (north - south) / (2 * step)
            return y**2 * second - i * weight * y * (fx + i * fy)

        return (4 * delta(h / 2) - delta(h)) / 3


def modularity_residual(f, gamma, z, weight=None, chi=None, config=None):
    """|f(gamma z) - chi(d) (cz+d)^w f(z)|, where weight and character default to those of f."""
    residual, _ = _modularity_terms(f, gamma, z, weight, chi, config)
    return residual


def _modularity_terms(f, gamma, z, weight=None, chi=None, config=None):
    config = PrecisionConfig() if config is None else config
    if not isinstance(gamma, GammaZeroElement):
        raise DomainError('Sorry, expected a GammaZeroElement (got {})'.format(gamma))
    weight = f.weight if weight is None else weight
    chi = f.character if chi is None else chi
    level = getattr(f, 'level', 1)
    if gamma.c % level:
        raise DomainError('Sorry, {} is not in Gamma_0({})'.format(gamma, level))
    point = as_point(z)
    with config.precision():
        image = as_point(gamma.apply(point))
        for p in (point, image):
            if p.y < config.y_min:
                raise DomainError('Sorry, the point {} lies below y_min={}'.format(p, config.y_min))
        F = _as_function(f, config)
        left = F(image.z)
        right = chi.evaluate(gamma.d) * mpmath.power(gamma.automorphy(point), weight) * F(point.z)
        return abs(left - right), max(abs(left), abs(right))


#==============================
#  Reports
#==============================

def spec_label(spec):
    return 'k={} psi={}:{} rho={}:{} t={}'.format(spec.k, spec.psi.modulus, list(spec.psi.exponents),
                                                  spec.rho.modulus, list(spec.rho.exponents), spec.t)


def _spec(k, psi, rho, t=1):
    return EisSpec(k, character_from_label(psi), character_from_label(rho), t)


def default_specs():
    """The specs the verification suites run on by default."""
    return [_spec(4, 'trivial:1', 'trivial:1'),
            _spec(3, 'kronecker:-4', 'trivial:1'),
            _spec(3, 'trivial:1', 'kronecker:-4'),
            _spec(2, 'trivial:1', 'trivial:1', 4),
            _spec(2, 'trivial:1', 'trivial:1', 2),
            _spec(1, 'kronecker:-4', 'trivial:1'),
            _spec(1, 'kronecker:-3', 'trivial:1')]


def _passed(residual, tol, size=1):
    return bool(residual < tol * max(1, size))


def shadow_report(spec, config=None, points=5):
    """Compare xi_{2-k} F with the Eisenstein series at pseudorandom points."""
    config = PrecisionConfig() if config is None else config
    rows = []
    with config.precision():
        sample = sample_points(points, config.seed)
        form = assemble_for(spec, min(p.y for p in sample) / 2, config)
        tol = config.derivative_tol
        for point in sample:
            xi = xi_numeric(form, point, form.weight, config=config)
            expected = _evaluate(form.shadow, point, config)
            residual = abs(xi - expected)
            rows.append({'spec': spec_label(spec), 'z': point.z, 'xi': xi, 'shadow': expected,
                         'residual': residual, 'tol': tol, 'pass': _passed(residual, tol, abs(expected))})
    logger.info('Shadow check of %s: %s/%s points passed', spec, sum(r['pass'] for r in rows), len(rows))
    return rows


def harmonicity_report(spec, config=None, points=5):
    """Check that the Laplacian of weight 2-k annihilates F at pseudorandom points."""
    config = PrecisionConfig() if config is None else config
    rows = []
    with config.precision():
        sample = sample_points(points, config.seed + 1)
        form = assemble_for(spec, min(p.y for p in sample) / 2, config)
        tol = config.derivative_tol
        for point in sample:
            value = _evaluate(form, point, config)
            residual = abs(laplacian_numeric(form, point, form.weight, config=config))
            rows.append({'spec': spec_label(spec), 'z': point.z, 'value': value, 'residual': residual,
                         'tol': tol, 'pass': _passed(residual, tol, abs(value))})
    logger.info('Harmonicity check of %s: %s/%s points passed', spec, sum(r['pass'] for r in rows), len(rows))
    return rows


def modularity_report(spec, config=None, count=10, build=None):
    """Check F(gamma z) = chi(d) (cz+d)^(2-k) F(z) on pseudorandom elements of Gamma_0(tLM).

    Points are placed at imaginary part about 1/|c|, and the truncation order is raised
    until the series converge there.
    """
    config = PrecisionConfig() if config is None else config
    rows = []
    if build is None:
        build = lambda n_max: assemble_harmonic(spec, n_max)
    level = build(0).level
    with config.precision():
        elements = sample_gamma0(level, count, config.seed)
        generator = random.Random(config.seed)
        points = [sample_point(gamma, generator) for gamma in elements]
        y_low = min(min(p.y, as_point(g.apply(p)).y) for p, g in zip(points, elements))
        local = config.replace(y_min=float(y_low) / 2)
        form = build_for(build, y_low, local)
        for gamma, point in zip(elements, points):
            residual, size = _modularity_terms(form, gamma, point, config=local)
            rows.append({'spec': spec_label(spec) if spec else '', 'gamma': str(gamma), 'z': point.z,
                         'residual': residual, 'tol': config.tol, 'pass': _passed(residual, config.tol, size)})
    logger.info('Modularity check of %s: %s/%s elements passed', spec, sum(r['pass'] for r in rows), len(rows))
    return rows


def lattice_report(specs=None, config=None, points=None, bound=LATTICE_BOUND, tol=LATTICE_TOL):
    """Compare the assembled pre-image with its lattice sum, for specs with k > 2.

    By default, the default specs of weight above two and the level one spec of weight six.
    """
    config = PrecisionConfig() if config is None else config
    if specs is None:
        specs = [s for s in default_specs() if s.k > 2] + [_spec(6, 'trivial:1', 'trivial:1')]
    points = [UpperHalfPoint(0, 1), UpperHalfPoint(mpmath.mpf(1) / 3, mpmath.mpf(6) / 5)] if points is None else [as_point(p) for p in points]
    rows = []
    with config.precision():
        for spec in specs:
            form = assemble_for(spec, min(p.y for p in points), config)
            for point in points:
                value = _evaluate(form, point, config)
                lattice = lattice_preimage(spec, point, bound)
                residual = abs(value - lattice)
                rows.append({'spec': spec_label(spec), 'z': point.z, 'harmonic': value, 'lattice': lattice,
                             'residual': residual, 'tol': tol, 'pass': _passed(residual, tol, abs(value))})
    return rows


def omega_report(config=None, ys=(0.5, 1.3, 4.0), parameters=((2, 1), (3, 1), (1.5, 0.5), (0.5, 1.5), (-1, 2))):
    """Check omega(y; alpha, 0) = 1, omega(y; 1-beta, 1-alpha) = omega(y; alpha, beta) and the
    incomplete Gamma bridge y^(k-2) omega(4 pi n y; k-1, 1) = 4 pi n exp(4 pi n y) beta_{2-k}(n, y)."""
    config = PrecisionConfig() if config is None else config
    rows = []
    with config.precision():
        tol = config.tol
        for y in ys:
            y = mpmath.mpf(y)
            for alpha, beta in parameters:
                alpha, beta = mpmath.mpf(alpha), mpmath.mpf(beta)
                residual = abs(omega_function(y, alpha, 0) - 1)
                rows.append({'check': 'zero', 'y': y, 'alpha': alpha, 'beta': 0,
                             'residual': residual, 'tol': tol, 'pass': _passed(residual, tol)})
                if alpha < 1:
                    left = omega_function(y, 1 - beta, 1 - alpha)
                    right = omega_function(y, alpha, beta)
                    residual = abs(left - right)
                    rows.append({'check': 'symmetry', 'y': y, 'alpha': alpha, 'beta': beta,
                                 'residual': residual, 'tol': tol, 'pass': _passed(residual, tol, abs(right))})
                residual = abs(omega_function(y, alpha, beta, 'quadrature') - omega_function(y, alpha, beta, 'hypergeometric'))
                rows.append({'check': 'methods', 'y': y, 'alpha': alpha, 'beta': beta,
                             'residual': residual, 'tol': tol, 'pass': _passed(residual, tol)})
            for k in (3, 4, 6):
                n = 1
                x = 4 * constant('pi') * n
                left = mpmath.power(y, k - 2) * omega_function(x * y, k - 1, 1)
                right = x * mpmath.exp(x * y) * beta_integral(2 - k, n, y)
                residual = abs(left - right)
                rows.append({'check': 'bridge', 'y': y, 'alpha': k - 1, 'beta': 1,
                             'residual': residual, 'tol': tol, 'pass': _passed(residual, tol, abs(right))})
    return rows


def quasi_modular_report(config=None, points=3, n_max=None):
    """Check the S-transformation of E_2^{1,1} with and without its 1/y term: only the
    completed function is modular."""
    config = PrecisionConfig() if config is None else config
    rows = []
    with config.precision():
        sample = [UpperHalfPoint(p.x / 4, 1 + (p.y - mpmath.mpf('0.8')) / 4) for p in sample_points(points, config.seed)]
        n_max = n_max or config.terms_for(mpmath.mpf('0.4'), tol=config.tol * TAIL_FRACTION, growth=2)
        completed = quasi_modular_series(1, 1, n_max)
        bare = FourierSeries(completed.coefficients, 2, 1, DirichletCharacter(1))
        local = config.replace(y_min=0.3)
        gamma = GammaZeroElement(0, -1, 1, 0)
        for point in sample:
            for name, series in (('completed', completed), ('holomorphic', bare)):
                residual, size = _modularity_terms(series, gamma, point, config=local)
                modular = _passed(residual, config.tol, size)
                rows.append({'series': name, 'z': point.z, 'residual': residual, 'tol': config.tol,
                             'modular': modular, 'pass': modular == (name == 'completed')})
    return rows


def summarize(rows):
    """True if every row of a report passed."""
    failed = [row for row in rows if not row['pass']]
    if failed:
        logger.warning('%s of %s checks failed', len(failed), len(rows))
    return not failed
