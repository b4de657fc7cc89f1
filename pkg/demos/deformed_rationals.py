"""
Deforming rationals and reals into q
====================================

A rational r becomes a rational function [r]_q of a formal variable q;
an irrational becomes a Laurent series.  Setting q = 1 always recovers
the number you started with.
"""

from fractions import Fraction

from qreals import (QRationalFunction, order_at_zero, parse_real_spec,
                    q_brace, q_integer, q_rational, q_real_series)

# integers first: [n]_q is the classical q-integer 1 + q + ... + q^(n-1)
for n in range(1, 6):
    print(f'[{n}]_q = {q_integer(n)}')
print()

# a general rational goes through its even-length continued fraction.
# both numerator and denominator come out with positive coefficients
r = Fraction(52, 23)
print(f'[{r}]_q = {q_rational(r)}')
print(f'value at q=1: {q_rational(r).num(1)}/{q_rational(r).den(1)}')
print()

# negative rationals pick up a negative power of q out front
print(f'[-3/2]_q = {q_rational(Fraction(-3, 2))}')
print(f'order of [-3/2]_q: {order_at_zero(Fraction(-3, 2))}')
print(f'order of [1/5]_q:  {order_at_zero(Fraction(1, 5))}')
print()

# the brace {r}_q = 1 + (q-1)[r]_q plays the role of q^r: for integers
# it literally is q^n, and it turns addition into multiplication
print(f'{{3}}_q   = {q_brace(Fraction(3))}')
print(f'{{1/2}}_q = {q_brace(Fraction(1, 2))}')
print(f'{{5/2}}_q = {q_brace(Fraction(5, 2))}')
print('{1/2 + 2}_q == q^2 {1/2}_q:',
      q_brace(Fraction(5, 2)) ==
      QRationalFunction.q_power(2) * q_brace(Fraction(1, 2)))
print()

# reals enter as convergent sequences; the coefficients stabilize, so a
# quadratic irrational like the silver ratio has a well-defined series
pell = parse_real_spec('[2;(2)]')
print(f'[sqrt(2)+1]_q = {q_real_series(pell, 14)}')

# successive convergents agree with it to higher and higher order
for depth in (Fraction(5, 2), Fraction(29, 12), Fraction(169, 70)):
    s = q_real_series(depth, 14)
    matching = 0
    target = q_real_series(pell, 14)
    while matching < 14 and s.coefficient(matching) == \
            target.coefficient(matching):
        matching += 1
    print(f'  [{depth}]_q matches through q^{matching - 1}')
