"""
The identity catalog
====================

Every named identity the library claims is checkable by machine: exact
rational-function equality where possible, high-precision series
agreement otherwise.  Two catalog entries are deliberate inequalities;
the suite passes only when they come out unequal.
"""

from fractions import Fraction

from qreals import CATALOG, IDENTITIES, run_suite, verify_identity

print(f'{len(IDENTITIES)} identities in the catalog:')
for name in IDENTITIES:
    print(f'  {name:16s} {CATALOG[name].summary}')
print()

# one identity, one binding, exact arithmetic
case = verify_identity('CHU_VANDERMONDE',
                       {'alpha': Fraction(5, 3), 'n': 2, 'k': 2})
print(case.describe())

# the same check in series mode truncates both sides instead
case = verify_identity('PASCAL_A', {'alpha': Fraction(5, 2), 'k': 2},
                       mode='series', precision=16)
print(case.describe())
print()

# a seeded batch over random bindings; the same seed always visits the
# same parameter values
report = run_suite(['PASCAL_A', 'SHIFT_B', 'GAMMA_SHIFT',
                    'BRACE_NON_ADD'], trials=5, seed=11)
print(report)
