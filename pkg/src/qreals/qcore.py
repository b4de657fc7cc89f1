"""q-deformations of integers, rationals, and reals.

The deformation of a rational r > 1 is defined through its even-length
regular continued fraction [a1, a2, ..., a_2m]:

    [r]_q = [a1]_q + q^a1 / ([a2]_q' + q^-a2 / ([a3]_q + ... / [a_2m]_q'))

where [a]_q = 1 + q + ... + q^(a-1), and [a]_q' denotes [a] evaluated at
1/q, i.e. q^-(a-1) [a]_q.  Odd levels contribute bridges q^+a, even
levels q^-a.  Rationals r <= 1 are reached through the shift law
[r + n]_q = [n]_q + q^n [r]_q, applied with the smallest n making the
argument land in (1, 2].

A real number is handled through a sequence of rational approximations:
the Taylor coefficients of the approximants' deformations stabilize, and
the stabilized series is the deformation of the real.  Convergents of
the regular continued fraction of the target are the canonical choice of
approximants, but any sequence converging to the target works.

Two evaluation modes coexist.  The exact mode produces a canonical
QRationalFunction and is cached; the series mode runs the same tower in
truncated Laurent arithmetic, whose cost is polynomial in the precision
rather than in the size of the fraction, which is what makes deep
convergents (Pell numerators grow exponentially) tractable.
"""

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NonConvergenceError
from .polynomial import IntPolynomial
from .ratfun import QRationalFunction, ratfun
from .series import LaurentSeries, series_from_ratfun

# Above this numerator/denominator size, rational deformations are
# expanded through the truncated tower instead of exact arithmetic.
_EXACT_LIMIT = 10 ** 6

DEFAULT_PRECISION = 32
STABLE_WINDOW = 3
CONVERGENT_BUDGET = 64


def _qint_poly(n):
    """1 + q + ... + q^(n-1) for n >= 0."""
    return IntPolynomial((1,) * n)


def q_integer(n):
    """[n]_q = (1 - q^n)/(1 - q) as a rational function, any integer n."""
    if n >= 0:
        return QRationalFunction.from_polynomial(_qint_poly(n))
    return ratfun(n, -_qint_poly(-n), 1, reduced=True)


def _qint_inverse(a):
    """[a] at 1/q, which is q^-(a-1) [a]_q, for a >= 1."""
    return QRationalFunction(-(a - 1), _qint_poly(a), IntPolynomial.one())


class ContinuedFraction:
    """Even-length regular continued fraction of a rational greater than 1.

    Terms are positive integers; odd-length expansions are canonicalized
    by [..., a] -> [..., a-1, 1].
    """

    __slots__ = ('_terms',)

    def __init__(self, terms):
        terms = tuple(int(a) for a in terms)
        if not terms or len(terms) % 2:
            raise DomainError(f'need an even number of terms, got {len(terms)}')
        if any(a < 1 for a in terms):
            raise DomainError(f'terms must be positive: {terms}')
        self._terms = terms

    @classmethod
    def from_rational(cls, r):
        r = Fraction(r)
        if r <= 1:
            raise DomainError(f'continued fractions here require value > 1, got {r}')
        num, den = r.numerator, r.denominator
        terms = []
        while den:
            a, rem = divmod(num, den)
            terms.append(a)
            num, den = den, rem
        if len(terms) % 2:
            if terms[-1] > 1:
                terms[-1] -= 1
                terms.append(1)
            else:
                terms.pop()
                terms[-1] += 1
        return cls(terms)

    @property
    def terms(self):
        return self._terms

    def value(self):
        v = Fraction(self._terms[-1])
        for a in reversed(self._terms[:-1]):
            v = a + 1 / v
        return v

    def __eq__(self, other):
        if not isinstance(other, ContinuedFraction):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return '[' + ', '.join(str(a) for a in self._terms) + ']'

    def __repr__(self):
        return f'ContinuedFraction({list(self._terms)})'


def _tower_exact(terms):
    # bottom level is even, [a]' with no bridge below it
    acc = _qint_inverse(terms[-1])
    for i in range(len(terms) - 2, -1, -1):
        a = terms[i]
        if i % 2 == 0:  # odd 1-based position, plain [a]_q, bridge q^+a
            acc = q_integer(a) + QRationalFunction.q_power(a) / acc
        else:
            acc = _qint_inverse(a) + QRationalFunction.q_power(-a) / acc
    return acc


def _tower_series(terms, precision):
    acc = series_from_ratfun(_qint_inverse(terms[-1]), precision)
    for i in range(len(terms) - 2, -1, -1):
        a = terms[i]
        if i % 2 == 0:
            head = LaurentSeries.from_polynomial(_qint_poly(a))
            acc = head.truncate(precision) + LaurentSeries.q_power(a) / acc
        else:
            head = series_from_ratfun(_qint_inverse(a), precision)
            acc = head + LaurentSeries.q_power(-a) / acc
    return acc


def _shift_amount(r):
    """Smallest n >= 0 with r + n in (1, 2], zero when r > 1 already."""
    if r > 1:
        return 0
    return math.floor(2 - r)


@lru_cache(maxsize=None)
def _q_rational_cached(num, den):
    r = Fraction(num, den)
    if den == 1:
        return q_integer(num)
    m = _shift_amount(r)
    if m == 0:
        return _tower_exact(ContinuedFraction.from_rational(r).terms)
    shifted = _q_rational_cached(num + m * den, den)
    return (shifted - q_integer(m)) * QRationalFunction.q_power(-m)


def q_rational(r):
    """[r]_q as a canonical rational function, for any rational r."""
    r = Fraction(r)
    return _q_rational_cached(r.numerator, r.denominator)


def q_rational_series(r, precision):
    """[r]_q as a Laurent series known below q^precision.

    Runs the continued-fraction tower in truncated arithmetic, so the
    cost scales with the precision and the number of terms, not with
    the size of the numerator.
    """
    r = Fraction(r)
    if max(abs(r.numerator), r.denominator) <= _EXACT_LIMIT:
        return series_from_ratfun(q_rational(r), precision)
    m = _shift_amount(r)
    if m == 0:
        s = _tower_series(ContinuedFraction.from_rational(r).terms, precision)
    else:
        up = _tower_series(
            ContinuedFraction.from_rational(r + m).terms, precision + m)
        s = (up - IntPolynomial((1,) * m)).shift(-m)
    return s.truncate(precision)


def q_brace(r):
    """{r}_q = 1 + (q - 1)[r]_q, the q-deformed fractional bracket."""
    return 1 + IntPolynomial((-1, 1)) * q_rational(r)


_Q_MINUS_ONE = LaurentSeries.from_polynomial(IntPolynomial((-1, 1)))


class RealSpec:
    """A real number given in a form the deformation machinery accepts."""

    def convergents(self):
        raise NotImplementedError

    @property
    def is_rational(self):
        return False


@dataclass(frozen=True)
class RationalValue(RealSpec):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'value', Fraction(self.value))

    def convergents(self):
        return iter((self.value,))

    @property
    def is_rational(self):
        return True

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class PeriodicContinuedFraction(RealSpec):
    """Quadratic irrational [h1, ..., hk; (p1, ..., pj) repeating]."""

    head: tuple
    period: tuple

    def __post_init__(self):
        head = tuple(int(a) for a in self.head)
        period = tuple(int(a) for a in self.period)
        if not period:
            raise DomainError('empty period; use a plain rational instead')
        if any(a < 1 for a in head + period):
            raise DomainError('continued fraction terms must be positive')
        object.__setattr__(self, 'head', head)
        object.__setattr__(self, 'period', period)

    def terms(self):
        yield from self.head
        yield from itertools.cycle(self.period)

    def convergents(self):
        p_prev, p = 0, 1
        q_prev, q = 1, 0
        for a in self.terms():
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
            yield Fraction(p, q)

    def __str__(self):
        head = ','.join(str(a) for a in self.head)
        period = ','.join(str(a) for a in self.period)
        return f'[{head};({period})]'


class ConvergentSequence(RealSpec):
    """A real number given by a factory of rational approximations.

    The factory is any zero-argument callable returning a fresh iterator
    of Fractions converging to the target.
    """

    def __init__(self, factory, label='convergent sequence'):
        self._factory = factory
        self._label = label

    def convergents(self):
        return iter(self._factory())

    def __str__(self):
        return self._label


_PERIODIC_RE = re.compile(r'^\[([0-9,\s]*);\s*\(([0-9,\s]+)\)\s*\]$')
_LIST_RE = re.compile(r'^\[([0-9,\s]+)\]$')


def parse_real_spec(text):
    """Parse 'p/q', '3', '[2,3,1,5]' (finite cf), or '[1;(2)]' (periodic)."""
    text = text.strip()
    m = _PERIODIC_RE.match(text)
    if m:
        head = [int(a) for a in m.group(1).split(',') if a.strip()]
        period = [int(a) for a in m.group(2).split(',') if a.strip()]
        return PeriodicContinuedFraction(tuple(head), tuple(period))
    m = _LIST_RE.match(text)
    if m:
        terms = [int(a) for a in m.group(1).split(',') if a.strip()]
        cf = ContinuedFraction(terms)
        return RationalValue(cf.value())
    try:
        return RationalValue(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise DomainError(f'cannot parse real spec: {text!r}')


def q_real_series(value, precision=DEFAULT_PRECISION, window=STABLE_WINDOW,
                  budget=CONVERGENT_BUDGET):
    """Deformation of a real number as a stabilized Laurent series.

    Expands successive approximants until `window` consecutive ones give
    identical coefficients below q^precision, and returns that series.
    Raises NonConvergenceError when `budget` approximants are exhausted
    first.
    """
    if isinstance(value, (int, Fraction)):
        value = RationalValue(Fraction(value))
    if value.is_rational:
        return q_rational_series(value.value, precision)
    run = 0
    last = None
    for i, c in enumerate(value.convergents()):
        if i >= budget:
            break
        s = q_rational_series(c, precision)
        if last is not None and s.agrees_with(last, precision):
            run += 1
        else:
            run = 1
        if run >= window:
            return s
        last = s
    raise NonConvergenceError(
        f'no run of {window} agreeing approximants below q^{precision} '
        f'within {budget} terms for {value}')


def q_brace_series(value, precision=DEFAULT_PRECISION, **kwargs):
    """{x}_q = 1 + (q - 1)[x]_q for a real x, as a stabilized series."""
    s = q_real_series(value, precision, **kwargs)
    return 1 + _Q_MINUS_ONE * s


def order_at_zero(value, precision=DEFAULT_PRECISION):
    """q-adic order of the deformation of a rational or real number.

    Exact for rationals.  For irrationals this is the order of the
    stabilized series, which the stabilization theorem makes exact as
    long as the order lies below the precision.
    """
    if isinstance(value, (int, Fraction)):
        return q_rational(Fraction(value)).order
    if value.is_rational:
        return q_rational(value.value).order
    return q_real_series(value, precision).order
