"""Laurent series in q with explicit precision tracking.

A series stores rational coefficients for exponents order..precision-1;
everything at or above `precision` is unknown.  precision may be math.inf
(every coefficient is known, i.e. the value is an exact Laurent
polynomial).  A series with no known nonzero coefficient has order
math.inf and no stored coefficients; with finite precision that means
"zero as far as we can see", with infinite precision it is exactly zero.

Stored coefficients always start and end with a nonzero value, so `order`
is the true q-adic order whenever the series is nonzero.  Arithmetic
propagates precision pessimistically:

    add:  min(p1, p2)
    mul:  min(p1 + ord2, p2 + ord1)      (unknown tails shift by the
                                          other factor's order)
    div:  min(p1 - ord2, p2 - 2*ord2 + ord1)

where a series with no known coefficient contributes its precision in
place of its order.  Division of two exact series is refused unless the
divisor is a monomial, since the quotient would in general need
infinitely many terms; truncate() an operand first.
"""

import math
from fractions import Fraction

from .errors import InsufficientPrecisionError
from .polynomial import IntPolynomial, format_terms


class LaurentSeries:
    __slots__ = ('_order', '_coeffs', '_precision')

    def __init__(self, order, coeffs, precision):
        self._order = order
        self._coeffs = coeffs
        self._precision = precision

    @classmethod
    def zero(cls, precision=math.inf):
        return cls(math.inf, (), precision)

    @classmethod
    def one(cls):
        return cls(0, (Fraction(1),), math.inf)

    @classmethod
    def constant(cls, c):
        return series(0, [c])

    @classmethod
    def q_power(cls, k, coefficient=1):
        return series(k, [coefficient])

    @classmethod
    def from_polynomial(cls, p):
        return series(0, p.coeffs)

    @property
    def order(self):
        return self._order

    @property
    def precision(self):
        return self._precision

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def is_zero(self):
        """No known nonzero coefficient.  Exactly zero iff also exact."""
        return not self._coeffs

    @property
    def is_exact(self):
        return self._precision == math.inf

    def _eff_order(self):
        # order for precision propagation: unknown-zero series behave
        # like q**precision * (unknown)
        return self._order if self._coeffs else self._precision

    def coefficient(self, k):
        if k >= self._precision:
            raise InsufficientPrecisionError(
                f'coefficient of q^{k} unknown at precision {self._precision}')
        if not self._coeffs or k < self._order:
            return Fraction(0)
        i = k - self._order
        if i >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[i]

    def coefficients(self, start, stop):
        """Coefficients of q^start .. q^(stop-1) as a list."""
        return [self.coefficient(k) for k in range(start, stop)]

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self._order == other._order and self._coeffs == other._coeffs
                and self._precision == other._precision)

    def __hash__(self):
        return hash((self._order, self._coeffs, self._precision))

    def agrees_with(self, other, below):
        """True when both series have the same coefficients below q^below."""
        if below > min(self._precision, other._precision):
            raise InsufficientPrecisionError(
                f'cannot compare below q^{below} at precisions '
                f'{self._precision}, {other._precision}')
        if below == math.inf:
            # both exact; agreement everywhere means identical terms
            return (self._order, self._coeffs) == (other._order, other._coeffs)
        start = min(self._order, other._order, below)
        if start == math.inf:
            return True
        return all(self.coefficient(k) == other.coefficient(k)
                   for k in range(start, below))

    def __neg__(self):
        return LaurentSeries(self._order, tuple(-c for c in self._coeffs),
                             self._precision)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = min(self._precision, other._precision)
        lo = min(self._order, other._order)
        if lo == math.inf:
            return LaurentSeries.zero(p)
        hi = max(self._support_end(), other._support_end())
        if hi > p:
            hi = p
        return series(lo, [self.coefficient(k) + other.coefficient(k)
                           for k in range(lo, hi)], p)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = min(self._precision + other._eff_order(),
                other._precision + self._eff_order())
        if not self._coeffs or not other._coeffs:
            return LaurentSeries.zero(p)
        o = self._order + other._order
        n = min(len(self._coeffs) + len(other._coeffs) - 1, p - o)
        acc = [Fraction(0)] * n
        for i, a in enumerate(self._coeffs):
            if i >= n:
                break
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if i + j >= n:
                    break
                acc[i + j] += a * b
        return series(o, acc, p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._coeffs:
            if other.is_exact:
                raise ZeroDivisionError('division by exact zero series')
            raise InsufficientPrecisionError(
                f'divisor has no known nonzero coefficient below '
                f'q^{other._precision}')
        o2 = other._order
        p = min(self._precision - o2,
                other._precision - 2 * o2 + self._eff_order())
        if not self._coeffs:
            return LaurentSeries.zero(p)
        o = self._order - o2
        if p == math.inf:
            if len(other._coeffs) == 1:
                return series(o, [c / other._coeffs[0] for c in self._coeffs])
            raise InsufficientPrecisionError(
                'division of exact series would need infinitely many terms; '
                'truncate() an operand to a finite precision first')
        b = other._coeffs
        out = []
        for n in range(p - o):
            s = self.coefficient(self._order + n)
            for j in range(1, min(n, len(b) - 1) + 1):
                cj = out[n - j]
                if cj:
                    s -= b[j] * cj
            out.append(s / b[0])
        return series(o, out, p)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        result = LaurentSeries.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by q**k."""
        if not self._coeffs:
            return LaurentSeries.zero(self._precision + k)
        return LaurentSeries(self._order + k, self._coeffs,
                             self._precision + k)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return LaurentSeries.zero(self._precision)
        return LaurentSeries(self._order, tuple(c * a for a in self._coeffs),
                             self._precision)

    def truncate(self, precision):
        """Forget coefficients at or above q**precision."""
        if precision >= self._precision:
            return self
        kept = self._coeffs
        if self._order != math.inf and self._order + len(kept) > precision:
            kept = kept[:max(precision - self._order, 0)]
        return series(self._order if kept else math.inf, kept, precision)

    def _support_end(self):
        if not self._coeffs:
            return -math.inf
        return self._order + len(self._coeffs)

    def to_json(self):
        return {
            'order': None if self._order == math.inf else self._order,
            'precision': (None if self._precision == math.inf
                          else self._precision),
            'coeffs': [[c.numerator, c.denominator] for c in self._coeffs],
        }

    def __str__(self):
        body = format_terms(
            ((self._order + i, c) for i, c in enumerate(self._coeffs)))
        if self._precision == math.inf:
            return body
        tail = f'O(q^{self._precision})'
        return tail if body == '0' else f'{body} + {tail}'

    def __repr__(self):
        return (f'LaurentSeries(order={self._order}, coeffs={self._coeffs},'
                f' precision={self._precision})')


def _coerce(x):
    if isinstance(x, LaurentSeries):
        return x
    if isinstance(x, (int, Fraction)):
        if x == 0:
            return LaurentSeries.zero()
        return LaurentSeries(0, (Fraction(x),), math.inf)
    if isinstance(x, IntPolynomial):
        return LaurentSeries.from_polynomial(x)
    return NotImplemented


def series(order, coeffs, precision=math.inf):
    """Normalize into a LaurentSeries, stripping zero fringes."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        order += 1
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        return LaurentSeries.zero(precision)
    if order + len(coeffs) > precision:
        raise ValueError(
            f'coefficients reach q^{order + len(coeffs) - 1} but precision '
            f'is {precision}')
    return LaurentSeries(order, tuple(coeffs), precision)


def series_from_ratfun(rf, precision):
    """Expand an exact rational function at q=0 to the given precision.

    The zero function expands to the exact zero series regardless of the
    requested precision.
    """
    if rf.is_zero:
        return LaurentSeries.zero()
    n = precision - rf.e
    if n <= 0:
        return LaurentSeries.zero(precision)
    num, den = rf.num.coeffs, rf.den.coeffs
    d0 = den[0]
    out = []
    for k in range(n):
        s = Fraction(num[k] if k < len(num) else 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            cj = out[k - j]
            if cj:
                s -= den[j] * cj
        out.append(s / d0)
    return series(rf.e, out, precision)
