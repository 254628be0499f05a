"""
Exact truncated power series
============================

The whole package runs on one primitive: a power series truncated at an
explicit order, with big-rational coefficients and no floating point.
This demo walks through the ring operations, the formal exp/log pair and
compositional inversion.
"""

from fractions import Fraction

from nodepoly import PSeries

# A series carries its truncation order; arithmetic truncates to the
# smaller order of the two operands.
geometric = PSeries([1, -1], order=8).inverse()
print("1/(1-q)      =", geometric)

# log and exp are mutually inverse on their domains.
log_one_plus = PSeries([1, 1], order=8).log()
print("log(1+q)     =", log_one_plus)
print("exp(log(1+q)) =", log_one_plus.exp())

# Formal powers accept integers, rationals and (later) polynomials.
half = PSeries([1, -24, 252, -1472], order=3) ** Fraction(1, 2)
print("sqrt(1-24q+...) =", half)
print("squared back    =", half * half)

# Compositional inversion: the series g with f(g) = g(f) = q.
f = PSeries([0, 1, 1], order=8)       # q + q^2
g = f.reversion()
print("rev(q+q^2)   =", g)            # signed Catalan numbers
print("f(g)         =", f.compose(g))

# The operator D = q d/dq, which the quasi-modular forms live under.
print("D(q^2+q^5)   =", PSeries([0, 0, 1, 0, 0, 1]).qderiv())
