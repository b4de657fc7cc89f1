"""
Binomial coefficients with fractional upper index, and their paths
==================================================================

binom(r, k)_q makes sense for any rational r: replace each factor in
the falling factorial by its deformation.  For r between 1 and 6 the
same function counts lattice paths on a snake-shaped strip of cells,
weighted by the area under the path.
"""

from fractions import Fraction

from qreals import (QRationalFunction, SnakeGraph, binomial_order,
                    q_binomial, q_factorial, ratfun)

# the Gaussian binomials sit inside as the integer case
print('binom(4, 2)_q =', q_binomial(4, 2))
print('binom(5/2, 2)_q =', q_binomial(Fraction(5, 2), 2))
print('binom(5/3, 3)_q =', q_binomial(Fraction(5, 3), 3))
print()

# the Pascal rule survives deformation, with a q-weight on one branch
r, k = Fraction(7, 3), 2
lhs = q_binomial(r, k)
rhs = (QRationalFunction.q_power(k) * q_binomial(r - 1, k)
       + q_binomial(r - 1, k - 1))
print(f'Pascal at ({r}, {k}):', lhs == rhs)

# orders are predictable without computing the whole coefficient
for r in (Fraction(5, 3), Fraction(1, 2), Fraction(-7, 4)):
    print(f'order of binom({r}, 3)_q = {binomial_order(r, 3)} '
          f'(computed: {q_binomial(r, 3).order})')
print()

# now the combinatorial model.  a rational between 1 and 6 draws a
# snake of unit cells; north-east paths across it, weighted by the
# number of enclosed cells, reproduce the numerator of [r]_q
g = SnakeGraph(Fraction(5, 2))
print(g.ascii_art())
for p in g.paths:
    print(f'  {p.steps}  area {p.weight}')
print('area generating function:', g.numerator_polynomial())
print('matches numerator of [5/2]_q:',
      ratfun(0, g.numerator_polynomial(), g.denominator_polynomial())
      == q_binomial(Fraction(5, 2), 1))
print()

# k-tuples of paths, where entries after the first must start with an
# up step, give the numerators of the higher binomials
k = 2
tuples = g.tuple_polynomial(k)
print(f'{k}-tuples weighted by total area: {tuples}')
claim = ratfun(-(k * (k - 1) // 2), tuples, 1)
expansion = q_binomial(Fraction(5, 2), k) * q_factorial(k)
for _ in range(k):
    expansion = expansion * g.denominator_polynomial()
print('enumeration identity holds:', claim == expansion)

# the same machinery applied to a long snake
g = SnakeGraph(Fraction(52, 23))
print()
print(f'G_(52/23): {len(g.cells)} cells, {len(g.paths)} paths, '
      f'word {g.word!r}')
print('R(1), S(1) =', g.numerator_polynomial()(1),
      g.denominator_polynomial()(1))
