"""
The two binomial series and their product forms
===============================================

B_r(q, x) deforms (1 + x)^r and b_r(q, x) deforms 1/(1 - x)^r.  Both
live in x with Laurent-series coefficients in q.  Summing binomials
and multiplying shifted geometric factors give the same answers.
"""

from fractions import Fraction

from qreals import (LaurentSeries, binomial_product, binomial_series,
                    negative_binomial_product, negative_binomial_series,
                    parse_real_spec, q_brace, q_derivative, q_rational,
                    series_from_ratfun, xseries)

half = Fraction(1, 2)

B = binomial_series(half, xdeg=4, precision=10)
print('B_(1/2)(q, x):')
print(B)
print()

b = negative_binomial_series(half, xdeg=4, precision=10)
print('b_(1/2)(q, x):')
print(b)
print()

# the product route: B is a quotient of shifted (1 + q^j x) factors,
# b the reciprocal arrangement.  truncated consistently, the two
# routes agree coefficient for coefficient
same = binomial_product(half, xdeg=4, precision=10).agrees_with(B, 5, 10)
print('sum form == product form for B:', same)
same = negative_binomial_product(half, 4, 10).agrees_with(b, 5, 10)
print('sum form == product form for b:', same)
print()

# B and b are one substitution apart: B_r(q, x) b_r(q, -x) = 1
product = B * negative_binomial_series(half, 4, 10).substitute_x(
    LaurentSeries.one() * -1)
print('B_(1/2)(q, x) * b_(1/2)(q, -x) == 1:',
      product.agrees_with(xseries([1]), 5, 10))
print()

# the q-derivative lowers B's index and raises b's
lhs = q_derivative(B)
rhs = series_from_ratfun(q_rational(half), 10) * binomial_series(
    half - 1, 4, 10).substitute_x(LaurentSeries.q_power(1))
print('D_q B_(1/2) = [1/2]_q B_(-1/2)(q, qx):',
      lhs.agrees_with(rhs, 4, 9))
lhs = q_derivative(b)
rhs = series_from_ratfun(q_rational(half), 10) * \
    negative_binomial_series(half + 1, 4, 10)
print('D_q b_(1/2) = [1/2]_q b_(3/2)(q, x): ',
      lhs.agrees_with(rhs, 4, 9))
print()

# shifting the index by one multiplies by a single linear factor whose
# x-coefficient is the brace {1/2}_q
shifted = binomial_series(half + 1, 3, 10)
factor = xseries([1, series_from_ratfun(q_brace(half), 10)])
print('B_(3/2) = (1 + {1/2}_q x) B_(1/2):',
      shifted.agrees_with(binomial_series(half, 4, 10) * factor, 4, 10))

# irrational indices work the same way, through stabilized series
silver = parse_real_spec('[2;(2)]')
print()
print('B_(sqrt(2)+1)(q, x), x-degree 2:')
print(binomial_series(silver, 2, 8))
