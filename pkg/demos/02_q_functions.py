"""Walkthrough: q-Pochhammer symbols, infinite products, phi series.

Finite products are exact polynomials; infinite ones are truncated at a
working order, multiplying only the finitely many factors that touch the
window. Square roots never appear: the paired very-well-poised parameters
are handled through (1 - k q^{2n})/(1 - k).
"""

from fractions import Fraction as F

from qident import (
    QMonomial,
    phi_rs,
    poch_finite,
    poch_infinite,
    series_mul,
    vwp_factor,
)

q = QMonomial.of(1, 1)

print("(q; q)_3        =", poch_finite(q, q, 3))
print("(1/2; q)_2      =", poch_finite(F(1, 2), q, 2))

# Euler's pentagonal pattern appears in the infinite product
euler = poch_infinite(q, q, 26)
print("(q; q)_inf      =", euler)

# the very-well-poised factor, computed without square roots
print("vwp k=q^2, n=1  =", vwp_factor(QMonomial.of(1, 2), 1, 10))

# the q-Gauss summation: series side vs product side
a, b, c = QMonomial.of(1, 2), QMonomial.of(1, 3), QMonomial.of(1, 7)
z = c / (a * b)
lhs = phi_rs([a, b], [c], q, z, 24)
rhs = series_mul(
    poch_infinite(c / a, q, 24) * poch_infinite(c / b, q, 24),
    (poch_infinite(c, q, 24) * poch_infinite(z, q, 24)).invert(), cap=24)
print("q-Gauss LHS     =", lhs)
print("q-Gauss match   =", lhs.compare(rhs.truncate(24), 24) is None)
