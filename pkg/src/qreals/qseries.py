"""Power series in x over Laurent series in q.

The main clients are the two q-deformed binomial series.  With braces
{a}_q = 1 + (q-1)[a]_q, the deformation of (1+x)^a is

    sum_k q^(k(k-1)/2) binom(a, k)_q x^k
        = (1 + x)(1 + qx)(1 + q^2 x)... / (1 + {a}x)(1 + {a+1}x)...

and the deformation of 1/(1-x)^a is

    sum_k binom(a+k-1, k)_q x^k
        = (1 - {a}x)(1 - {a+1}x)... / (1 - x)(1 - qx)(1 - q^2 x)...

Both hold coefficientwise in x as identities of Laurent series, for any
real a, and both specialize at q = 1 to the classical binomial series.

An XSeries keeps a fixed number of x-coefficients (math.inf for exact
polynomials in x, where every higher coefficient is known to vanish)
and one shared q-precision; all arithmetic tracks what remains known.
"""

import math
from fractions import Fraction

from .errors import InsufficientPrecisionError
from .polynomial import IntPolynomial
from .qbinomial import q_binomial, q_factorial_poly
from .qcore import (DEFAULT_PRECISION, RealSpec, q_brace_series,
                    q_real_series)
from .ratfun import QRationalFunction
from .series import LaurentSeries, series, series_from_ratfun


def _coerce_coeff(c):
    if isinstance(c, LaurentSeries):
        return c
    if isinstance(c, (int, Fraction, IntPolynomial)):
        return LaurentSeries.from_polynomial(c) if isinstance(
            c, IntPolynomial) else LaurentSeries.constant(c)
    raise TypeError(f'cannot use {type(c).__name__} as a coefficient')


class XSeries:
    """Truncated power series in x with Laurent series coefficients."""

    __slots__ = ('_coeffs', '_xlength', '_precision')

    def __init__(self, coeffs, xlength, precision):
        self._coeffs = coeffs
        self._xlength = xlength
        self._precision = precision

    @property
    def xlength(self):
        """Number of known x-coefficients (math.inf when exact in x)."""
        return self._xlength

    @property
    def precision(self):
        """Shared q-precision of the coefficients."""
        return self._precision

    @classmethod
    def one(cls):
        return cls((LaurentSeries.one(),), math.inf, math.inf)

    @property
    def is_zero(self):
        return self._xlength == math.inf and not self._coeffs

    def coefficient(self, j):
        if j < 0:
            raise IndexError(f'negative x-exponent {j}')
        if j >= self._xlength:
            raise InsufficientPrecisionError(
                f'coefficient of x^{j} is not known (length {self._xlength})')
        if j >= len(self._coeffs):
            return LaurentSeries.zero(math.inf)
        return self._coeffs[j]

    def coefficients(self, count=None):
        if count is None:
            count = len(self._coeffs)
        return tuple(self.coefficient(j) for j in range(count))

    def _known_valuation(self):
        # exactly-zero x-prefix; a coefficient that merely has no known
        # terms may still hide content below its precision
        for j, c in enumerate(self._coeffs):
            if not (c.is_zero and c.precision == math.inf):
                return j
        return self._xlength

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        return (self._xlength == other._xlength
                and self._precision == other._precision
                and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self._coeffs, self._xlength, self._precision))

    def agrees_with(self, other, xbelow, qbelow=None):
        """Coefficientwise agreement below x^xbelow (and q^qbelow)."""
        if xbelow > min(self._xlength, other._xlength):
            raise InsufficientPrecisionError(
                f'cannot compare through x^{xbelow - 1}')
        if qbelow is None:
            qbelow = min(self._precision, other._precision)
        return all(self.coefficient(j).agrees_with(other.coefficient(j),
                                                   qbelow)
                   for j in range(xbelow))

    def __add__(self, other):
        other = _coerce_operand(other)
        if other is None:
            return NotImplemented
        length = min(self._xlength, other._xlength)
        if length == math.inf:
            n = max(len(self._coeffs), len(other._coeffs))
        else:
            n = length
        coeffs = tuple(self.coefficient(j) + other.coefficient(j)
                       for j in range(n))
        return _normalize(coeffs, length)

    __radd__ = __add__

    def __neg__(self):
        return XSeries(tuple(-c for c in self._coeffs), self._xlength,
                       self._precision)

    def __sub__(self, other):
        other = _coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_operand(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_operand(other)
        if other is None:
            return NotImplemented
        v1, v2 = self._known_valuation(), other._known_valuation()
        length = min(self._xlength + v2, other._xlength + v1)
        if length == math.inf:
            if self.is_zero or other.is_zero:
                return XSeries((), math.inf, math.inf)
            n = len(self._coeffs) + len(other._coeffs) - 1
        else:
            n = length
        coeffs = []
        for k in range(n):
            acc = None
            lo = max(v1, k - (len(other._coeffs) - 1)) if other._coeffs else 0
            hi = min(k - v2, len(self._coeffs) - 1)
            for j in range(lo, hi + 1):
                term = self._coeffs[j] * other._coeffs[k - j]
                acc = term if acc is None else acc + term
            if acc is None:
                acc = LaurentSeries.zero(math.inf)
            coeffs.append(acc)
        return _normalize(tuple(coeffs), length)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_operand(other)
        if other is None:
            return NotImplemented
        if not other._coeffs:
            raise ZeroDivisionError('division by the zero series')
        if other._xlength == math.inf and len(other._coeffs) == 1:
            scalar = other._coeffs[0]
            return _normalize(tuple(c / scalar for c in self._coeffs),
                              self._xlength)
        length = min(self._xlength, other._xlength)
        if length == math.inf:
            raise InsufficientPrecisionError(
                'division of exact series may not terminate; '
                'truncate in x first')
        lead = other._coeffs[0]
        out = []
        for k in range(length):
            acc = self.coefficient(k)
            for j in range(1, min(k, len(other._coeffs) - 1) + 1):
                acc = acc - other._coeffs[j] * out[k - j]
            out.append(acc / lead)
        return _normalize(tuple(out), length)

    def substitute_x(self, c):
        """Substitute x -> c*x for a scalar c (a series in q)."""
        c = _coerce_coeff(c)
        coeffs = []
        power = LaurentSeries.one()
        for a in self._coeffs:
            coeffs.append(a * power)
            power = power * c
        return _normalize(tuple(coeffs), self._xlength)

    def truncate_x(self, n):
        if n == self._xlength:
            return self
        if n > self._xlength:
            raise InsufficientPrecisionError(
                f'only {self._xlength} x-coefficients are known')
        if self._xlength == math.inf:
            pad = (LaurentSeries.zero(math.inf),) * (n - len(self._coeffs))
            return _normalize((self._coeffs + pad)[:n], n)
        return _normalize(self._coeffs[:n], n)

    def truncate_q(self, precision):
        if precision >= self._precision:
            return self
        return _normalize(self._coeffs, self._xlength, precision)

    def to_json(self):
        return {
            'xlength': None if self._xlength == math.inf else self._xlength,
            'precision': None if self._precision == math.inf
                         else self._precision,
            'coefficients': [c.to_json() for c in self._coeffs],
        }

    def __str__(self):
        lines = [f'[x^{j}]  {c}' for j, c in enumerate(self._coeffs)]
        if self._xlength != math.inf:
            lines.append(f'+ O(x^{self._xlength})')
        elif not self._coeffs:
            lines.append('0')
        return '\n'.join(lines)

    def __repr__(self):
        return (f'XSeries(xlength={self._xlength}, '
                f'precision={self._precision}, terms={len(self._coeffs)})')


def _normalize(coeffs, xlength, precision=None):
    if xlength == math.inf:
        while coeffs and coeffs[-1].is_zero \
                and coeffs[-1].precision == math.inf:
            coeffs = coeffs[:-1]
    if precision is None:
        precision = math.inf
        for c in coeffs:
            precision = min(precision, c.precision)

    def align(c):
        if c.precision <= precision:
            return c
        if c.is_zero and c.precision == math.inf:
            return c  # exact zeros stay exact
        return c.truncate(precision)

    return XSeries(tuple(align(c) for c in coeffs), xlength, precision)


def _coerce_operand(other):
    if isinstance(other, XSeries):
        return other
    try:
        c = _coerce_coeff(other)
    except TypeError:
        return None
    if c.is_zero and c.precision == math.inf:
        return XSeries((), math.inf, math.inf)
    return XSeries((c,), math.inf, c.precision)


def xseries(coeffs, xlength=None):
    """Build an XSeries from explicit coefficients.

    With xlength=None the series is exact in x (a polynomial whose
    higher coefficients are known to vanish); pass the known length
    explicitly for a truncated series.
    """
    coeffs = tuple(_coerce_coeff(c) for c in coeffs)
    if xlength is None:
        xlength = math.inf
    elif xlength < len(coeffs):
        raise ValueError('more coefficients than the known length')
    else:
        coeffs = coeffs + (LaurentSeries.zero(math.inf),) * (
            xlength - len(coeffs))
    return _normalize(coeffs, xlength)


def _is_rational_input(value):
    if isinstance(value, (int, Fraction)):
        return True
    return isinstance(value, RealSpec) and value.is_rational


def _as_fraction(value):
    return Fraction(value) if isinstance(value, (int, Fraction)) \
        else value.value


def _qint_series(n):
    if n == 0:
        return LaurentSeries.zero(math.inf)
    if n > 0:
        return series(0, (1,) * n)
    return series(n, (-1,) * (-n))


def _factorial_series(k):
    return LaurentSeries.from_polynomial(q_factorial_poly(k))


def binomial_coefficients(r, count):
    """Exact x-coefficients of the deformed (1+x)^r, for rational r.

    The k-th coefficient is q^(k(k-1)/2) binom(r, k)_q.
    """
    r = Fraction(r)
    return tuple(QRationalFunction.q_power(k * (k - 1) // 2)
                 * q_binomial(r, k) for k in range(count))


def negative_binomial_coefficients(r, count):
    """Exact x-coefficients of the deformed 1/(1-x)^r: binom(r+k-1, k)_q."""
    r = Fraction(r)
    return tuple(q_binomial(r + k - 1, k) for k in range(count))


def _sum_form(value, xdeg, precision, offset, weight, kwargs):
    # all factors [value + n] come from one stabilized series for
    # [value] through the integer shift law [value + n] = [n] + q^n [value]
    pad = xdeg + xdeg * (xdeg + 1) // 2 + 4
    while True:
        top = q_real_series(value, precision + pad, **kwargs)
        coeffs = []
        for k in range(xdeg + 1):
            n = offset(k)
            acc = LaurentSeries.one()
            for j in range(k):
                acc = acc * (_qint_series(n - j) + top.shift(n - j))
            c = (acc / _factorial_series(k)).shift(weight(k))
            if c.precision < precision:
                break
            coeffs.append(c.truncate(precision))
        else:
            return _normalize(tuple(coeffs), xdeg + 1, precision)
        if pad > 64 * (xdeg + 1) * (precision + 1):
            raise InsufficientPrecisionError(
                f'series for {value} will not reach precision {precision}')
        pad *= 2


def binomial_series(value, xdeg=8, precision=DEFAULT_PRECISION, **kwargs):
    """Deformation of (1+x)^value as a sum over binomials.

    The x^k coefficient is q^(k(k-1)/2) binom(value, k)_q; value may be
    a rational or any real specification accepted by q_real_series.
    """
    if _is_rational_input(value):
        exact = binomial_coefficients(_as_fraction(value), xdeg + 1)
        return _normalize(tuple(series_from_ratfun(c, precision)
                                for c in exact), xdeg + 1, precision)
    return _sum_form(value, xdeg, precision, offset=lambda k: 0,
                     weight=lambda k: k * (k - 1) // 2, kwargs=kwargs)


def negative_binomial_series(value, xdeg=8, precision=DEFAULT_PRECISION,
                             **kwargs):
    """Deformation of 1/(1-x)^value; x^k coefficient binom(value+k-1, k)_q."""
    if _is_rational_input(value):
        exact = negative_binomial_coefficients(_as_fraction(value), xdeg + 1)
        return _normalize(tuple(series_from_ratfun(c, precision)
                                for c in exact), xdeg + 1, precision)
    return _sum_form(value, xdeg, precision, offset=lambda k: k - 1,
                     weight=lambda k: 0, kwargs=kwargs)


def _product_form(value, xdeg, precision, sign, braces_on_top, kwargs):
    pad = 4
    while True:
        work = precision + pad
        brace = q_brace_series(value, work, **kwargs)
        # factor j deviates from 1 by q-order at least j + min(0, ord),
        # so factors beyond that bound are invisible at this precision
        factors = work + max(0, -brace.order) + 1
        out = XSeries.one().truncate_x(xdeg + 1).truncate_q(work)
        for j in range(factors):
            power_factor = xseries([1, sign * LaurentSeries.q_power(j)])
            brace_factor = xseries([1, sign * brace.shift(j)])
            if braces_on_top:  # {value + j} = q^j {value}
                out = out * brace_factor / power_factor
            else:
                out = out * power_factor / brace_factor
        if out.precision >= precision:
            return out.truncate_q(precision)
        if pad > 64 * (xdeg + 1) * (precision + 1):
            raise InsufficientPrecisionError(
                f'product for {value} will not reach precision {precision}')
        pad *= 2


def binomial_product(value, xdeg=8, precision=DEFAULT_PRECISION, **kwargs):
    """Product route to the deformed (1+x)^value:

        (1 + x)(1 + qx)(1 + q^2 x)... / (1 + {a}x)(1 + {a+1}x)...
    """
    return _product_form(value, xdeg, precision, 1, False, kwargs)


def negative_binomial_product(value, xdeg=8, precision=DEFAULT_PRECISION,
                              **kwargs):
    """Product route to the deformed 1/(1-x)^value:

        (1 - {a}x)(1 - {a+1}x)... / (1 - x)(1 - qx)(1 - q^2 x)...
    """
    return _product_form(value, xdeg, precision, -1, True, kwargs)


def generalized_pochhammer(value, xdeg=8, precision=DEFAULT_PRECISION,
                           **kwargs):
    """(x; q)_value, the Pochhammer symbol with real length:

        (1 - x)(1 - qx)... / (1 - {a}x)(1 - {a+1}x)...

    Restricts to the ordinary (x; q)_n for positive integers, and is
    the reciprocal of the deformed 1/(1-x)^value.
    """
    return _product_form(value, xdeg, precision, -1, False, kwargs)


def q_derivative(f):
    """The difference quotient (f(qx) - f(x)) / ((q-1)x).

    Expanding coefficientwise, the x^j coefficient of the quotient is
    exactly [j+1]_q times the x^(j+1) coefficient of f, so the result
    loses one known x-coefficient and no q-precision.
    """
    if f.xlength == math.inf:
        n = len(f.coefficients())
        length = math.inf
    else:
        n = f.xlength
        length = max(f.xlength - 1, 0)
    coeffs = tuple(f.coefficient(j) * IntPolynomial((1,) * j)
                   for j in range(1, n))
    return _normalize(coeffs, length)

