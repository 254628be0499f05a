"""
Recovering Riemann-Roch from four surfaces
==========================================

chi(L) is a universal degree-one polynomial in the four Chern numbers
c1(M)^2, c2(M), c1(M).c1(L), c1(L)^2.  Once existence is granted, the four
coefficients are pinned down by four classical surfaces: the structure
sheaf on K3 and on the plane, the hyperplane class on the plane, and a
principal polarization type on the abelian surface.
"""

from nodepoly import (K3, P2, T4, rr_example_pairs, solve_rr_coefficients)

pairs = rr_example_pairs()
for surface, chi in pairs:
    print(f"{surface.name:6s}  (L2,LK,K2,c2) = {surface.chern_tuple()}"
          f"   chi(L) = {chi}")

coeffs = solve_rr_coefficients(pairs)
print()
print(f"A1 = {coeffs.A1}, A2 = {coeffs.A2}, A3 = {coeffs.A3}, A4 = {coeffs.A4}")
print("=> chi(L) = (c1(M)^2 + c2)/12 + (c1(L)^2 - c1(L).c1(K))/2")

# The solved form reproduces chi(L) on surfaces outside the solving set.
print()
for s in [P2(3), P2(5), K3(4), T4(6)]:
    print(f"cross-check {s.name:6s}: solved form gives {coeffs.chi(s)}, "
          f"direct chi(L) = {s.chi_L()}, dim|L| = {s.dim_linear_system()}")

# Blowing up a point keeps chi(O) and drops chi(L) by exactly one.
s = P2(3)
b = s.blowup()
print()
print(f"blowup {s.name} -> {b.chern_tuple()}, "
      f"chi(O) {s.chi_O()} -> {b.chi_O()}, chi(L) {s.chi_L()} -> {b.chi_L()}")
