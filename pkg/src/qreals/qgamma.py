"""A Gamma function for the deformed rationals.

For arguments >= 1 the definition is the product of two pieces: the
alternating kernel

    sum_k (-1)^k q^(k(k+1)/2) binom(a - 1, k)_q

(the binomial series evaluated at x = -q, regrouped by q-order) and the
classical power series for (1-q)^(1-a).  Each kernel term sits at q-order
k(k+1)/2 + ord(binom(a-1, k)), which grows strictly once k passes
floor(a-1), so finitely many terms settle any finite precision.
Arguments below 1 are reached through gamma(a) = gamma(a+1) / [a]_q,
which leaves poles at the nonpositive integers.

The Gamma values of non-integer rationals are full Laurent series with
unbounded rational coefficients, yet the reflection product
gamma(a) gamma(1-a) and the power gamma(a/b)^b collapse to integer
coefficients; the helpers here assert that collapse and raise
IntegralityError if it ever fails, since a violation can only mean an
arithmetic bug.
"""

import math
from fractions import Fraction

from .errors import DomainError, InsufficientPrecisionError, IntegralityError
from .qcore import DEFAULT_PRECISION, q_brace, q_rational
from .qbinomial import binomial_order, q_binomial
from .series import LaurentSeries, series, series_from_ratfun


def scalar_binomial_series(value, precision):
    """(1-q)^(1-value) as a power series with exact rational coefficients.

    The coefficient of q^n is the classical (not deformed) binomial
    coefficient binom(value + n - 2, n), built by the falling-factorial
    product formula.
    """
    r = Fraction(value)
    coeffs = []
    c = Fraction(1)
    for n in range(max(precision, 0)):
        if n:
            c = c * (r + n - 2) / n
        coeffs.append(c)
    return series(0, coeffs, precision)


def gamma_convergence_report(value, count=8):
    """Whether the kernel sum for gamma(value) is a genuine series.

    Returns (ok, orders) where orders[k] is the q-order of the k-th
    kernel term, k(k+1)/2 + ord(binom(value-1, k)).  For value >= 1 the
    orders increase strictly beyond floor(value - 1); below 1 they
    plateau (half-integers down to 0) or run off to -infinity, so the
    sum does not converge coefficientwise and the recursion is used
    instead.
    """
    a = Fraction(value) - 1
    orders = tuple(k * (k + 1) // 2 + binomial_order(a, k)
                   for k in range(count))
    return a >= 0, orders


def _kernel_series(a, precision):
    # sum over k of (-1)^k q^(k(k+1)/2) binom(a, k)_q, for a >= 0; terms
    # whose order passes precision are dropped, and once k > floor(a)
    # the orders only grow, so the loop is finite.  The binomial is
    # advanced one factor at a time as a series: exact rational-function
    # binomials would force huge polynomial gcds here.
    n = math.floor(a)
    pad = 4
    while True:
        work = precision + pad
        total = LaurentSeries.zero(precision)
        run = LaurentSeries.one().truncate(work)
        k = 0
        starved = False
        while True:
            o = binomial_order(a, k)
            if o == math.inf:
                break
            shift = k * (k + 1) // 2
            if shift + o < precision:
                if run.precision < precision - shift:
                    starved = True
                    break
                term = run.truncate(precision - shift).shift(shift)
                total = total + (-term if k % 2 else term)
            elif k > n:
                break
            # binom(a, k) -> binom(a, k+1): multiply by [a-k], divide by
            # [k+1]; expansion precisions are sized so the running series
            # loses only what the factor orders force it to
            f = q_rational(a - k)
            if f.is_zero:
                run = LaurentSeries.zero()
            else:
                o_next = binomial_order(a, k + 1)
                p_mul = max(run.precision + f.order - o, f.order) + 2
                run = run * series_from_ratfun(f, p_mul)
                p_div = max(run.precision - o_next, 0) + 2
                run = run / series_from_ratfun(q_rational(k + 1), p_div)
            k += 1
        if not starved:
            return total
        if pad > 64 * (precision + 1):
            raise InsufficientPrecisionError(
                f'kernel series at {a} will not reach precision {precision}')
        pad *= 2


def q_gamma(value, precision=DEFAULT_PRECISION):
    """The deformed Gamma of a rational argument, as a Laurent series.

    gamma(1) = 1, gamma(a+1) = [a]_q gamma(a), and gamma(n+1) = [n]_q!
    for nonnegative integers n.  Nonpositive integers are poles.
    """
    r = Fraction(value)
    if r.denominator == 1 and r <= 0:
        raise DomainError(f'gamma has a pole at the nonpositive integer {r}')
    if r >= 1:
        kernel = _kernel_series(r - 1, precision)
        return (kernel * scalar_binomial_series(r, precision)) \
            .truncate(precision)
    # climb to [1, 2) and divide by the skipped factors; their combined
    # q-order fixes how much extra precision the division consumes
    m = math.ceil(1 - r)
    den = q_rational(r)
    for j in range(1, m):
        den = den * q_rational(r + j)
    o = den.order
    top = q_gamma(r + m, precision + max(0, o))
    bottom = series_from_ratfun(den, precision + max(0, 2 * o))
    return (top / bottom).truncate(precision)


def pochhammer_at_q(value, precision):
    """The infinite Pochhammer product evaluated at x = q.

    Expands prod_{j>=1} (1 - q^j) / (1 - q^j {value}_q) to the given
    precision.  Both factor families tend to 1, the denominator at rate
    j + ord({value}_q), so only finitely many factors matter.  For
    nonnegative integers the product telescopes to (1-q)(1-q^2)...;
    negative integers make a denominator factor vanish identically.
    """
    r = Fraction(value)
    if r.denominator == 1 and r < 0:
        raise DomainError(
            f'Pochhammer product at q diverges for negative integer {r}')
    brace_rf = q_brace(r)
    o = brace_rf.order
    pad = 2 * max(0, -o) + 2
    while True:
        work = precision + pad
        brace = series_from_ratfun(brace_rf, work)
        out = LaurentSeries.one().truncate(work)
        j = 1
        while j < work - min(0, o):
            out = out * (1 - LaurentSeries.q_power(j))
            out = out / (1 - brace.shift(j))
            j += 1
        if out.precision >= precision:
            return out.truncate(precision)
        if pad > 64 * (precision + 1):
            raise InsufficientPrecisionError(
                f'Pochhammer product at q for {value} will not reach '
                f'precision {precision}')
        pad *= 2


def gamma_reflection(value, precision=DEFAULT_PRECISION):
    """gamma(value) gamma(1 - value), checked to have integer coefficients.

    The two factors separately have unbounded rational coefficients;
    their product collapsing to integers is the point, so any
    non-integer coefficient is reported as an error rather than
    returned.
    """
    r = Fraction(value)
    if r.denominator == 1:
        raise DomainError(
            f'reflection at integer {r} hits a pole of one factor')
    pad = 2
    while True:
        left = q_gamma(r, precision + pad)
        right = q_gamma(1 - r, precision + pad)
        out = left * right
        if out.precision >= precision:
            break
        pad *= 2
    out = out.truncate(precision)
    _require_integer_coefficients(out, f'reflection product at {r}')
    return out


def gamma_power(a, b, precision=DEFAULT_PRECISION):
    """gamma(a/b)^b, checked to have integer coefficients."""
    if b < 1:
        raise DomainError(f'power denominator must be positive, got {b}')
    r = Fraction(a, b)
    if r.denominator == 1 and r <= 0:
        raise DomainError(f'gamma has a pole at the nonpositive integer {r}')
    pad = 2
    while True:
        base = q_gamma(r, precision + pad)
        out = base ** b
        if out.precision >= precision:
            break
        pad *= 2
    out = out.truncate(precision)
    _require_integer_coefficients(out, f'gamma({a}/{b})^{b}')
    return out


def _require_integer_coefficients(s, what):
    for i, c in enumerate(s.coeffs):
        if c.denominator != 1:
            raise IntegralityError(
                f'{what}: coefficient of q^{s.order + i} is {c}, '
                f'not an integer')
