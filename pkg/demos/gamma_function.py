"""
A Gamma function for the deformation
====================================

gamma(n + 1) recovers the q-factorial of n, the shift law
gamma(a + 1) = [a]_q gamma(a) holds everywhere, and two families of
products collapse to integer coefficients even though gamma itself has
genuinely fractional ones.
"""

from fractions import Fraction

from qreals import (gamma_convergence_report, gamma_power,
                    gamma_reflection, q_factorial, q_gamma, q_rational,
                    series_from_ratfun)

# at integers: gamma(n + 1) = [n]_q!
for n in range(1, 5):
    same = q_gamma(n + 1, 12) == series_from_ratfun(q_factorial(n), 12)
    print(f'gamma({n + 1}) == [{n}]_q!  {same}')
print()

# at half-integers the coefficients leave the integers
print('gamma(3/2) =', q_gamma(Fraction(3, 2), 8))
print('gamma(1/2) =', q_gamma(Fraction(1, 2), 7))
print()

# the shift law has no exceptional points, unlike the classical
# q-Gamma, which needs its argument above zero
for a in (Fraction(1, 2), Fraction(-5, 3), Fraction(7, 4)):
    lhs = q_gamma(a + 1, 10)
    rhs = (series_from_ratfun(q_rational(a), 16) * q_gamma(a, 16))
    print(f'gamma({a} + 1) == [{a}]_q gamma({a}):',
          lhs == rhs.truncate(10))
print()

# reflection: gamma(a) gamma(1 - a) clears every denominator.  the
# analogue of pi = gamma(1/2)^2 is an integer Laurent series
print('gamma(1/2)^2 =', gamma_reflection(Fraction(1, 2), 8))

# and gamma(a/b)^b does the same
print('gamma(2/3)^3 =', gamma_power(2, 3, 6))
print()

# why the definition needs two regimes: the defining sum only
# converges coefficientwise when the argument is at least 1.  the
# report shows the term orders; below 1 they stop climbing
ok, orders = gamma_convergence_report(Fraction(5, 2))
print(f'term orders for gamma(5/2): {orders} -> converges: {ok}')
ok, orders = gamma_convergence_report(Fraction(1, 2))
print(f'term orders for gamma(1/2): {orders} -> converges: {ok}')
print('(below 1 the value is defined through the shift law instead)')
