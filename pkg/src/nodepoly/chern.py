"""Chern-number bookkeeping for polarized algebraic surfaces.

A :class:`SurfaceClass` stores the four integers that the universal node
polynomials consume, in the canonical-class basis:

    L2 = c1(L)^2,  LK = c1(L).c1(K),  K2 = c1(K)^2,  c2 = c2(M).

Two integrality constraints are enforced at construction: K2 + c2 must be
divisible by 12 (Noether) and L2 - LK must be even (so chi(L) is an
integer).  The Riemann-Roch solver works in the anticanonical basis
c1(M) = -c1(K), where chi(L) = A1*c1(M)^2 + A2*c2 + A3*c1(M).c1(L)
+ A4*c1(L)^2; the stored data convert via c1(M).c1(L) = -LK and
c1(M)^2 = K2.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SurfaceClass:
    name: str
    L2: int
    LK: int
    K2: int
    c2: int

    def __post_init__(self):
        if (self.K2 + self.c2) % 12 != 0:
            raise ValueError(
                f"{self.name}: K2 + c2 = {self.K2 + self.c2} is not divisible "
                "by 12 (Noether integrality fails)")
        if (self.L2 - self.LK) % 2 != 0:
            raise ValueError(
                f"{self.name}: L2 - LK = {self.L2 - self.LK} is odd "
                "(chi(L) would not be an integer)")

    def chi_O(self):
        """Holomorphic Euler characteristic of the structure sheaf."""
        return Fraction(self.K2 + self.c2, 12)

    def chi_L(self):
        """chi(L) = chi(O) + (L2 - LK)/2, an integer by construction."""
        return int(self.chi_O() + Fraction(self.L2 - self.LK, 2))

    def dim_linear_system(self):
        """Expected projective dimension of |L|, i.e. chi(L) - 1."""
        return self.chi_L() - 1

    def blowup(self):
        """Blow up one point, polarizing by pullback minus the exceptional
        curve: (L2, LK, K2, c2) -> (L2-1, LK+1, K2-1, c2+1).

        chi(O) is preserved and chi(L) drops by exactly 1.
        """
        return SurfaceClass(f"Bl({self.name})",
                            self.L2 - 1, self.LK + 1, self.K2 - 1, self.c2 + 1)

    def chern_tuple(self):
        return (self.L2, self.LK, self.K2, self.c2)


@dataclass(frozen=True)
class RRCoefficients:
    """Coefficients of c1(M)^2, c2(M), c1(M).c1(L), c1(L)^2 in chi(L)."""
    A1: Fraction
    A2: Fraction
    A3: Fraction
    A4: Fraction

    def chi(self, s):
        """Evaluate the solved linear form on a surface."""
        return (self.A1 * s.K2 + self.A2 * s.c2
                + self.A3 * (-s.LK) + self.A4 * s.L2)


def _solve4(rows, rhs):
    """Exact Gaussian elimination for a 4x4 rational system."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system: the surface catalog does not "
                             "determine the coefficients")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def solve_rr_coefficients(pairs):
    """Identify (A1, A2, A3, A4) from four surface / chi(L) pairs.

    Each pair contributes one linear equation in the anticanonical basis;
    the four surfaces must make the system nonsingular.
    """
    pairs = list(pairs)
    if len(pairs) != 4:
        raise ValueError("exactly four surface/chi pairs are required")
    rows = [(s.K2, s.c2, -s.LK, s.L2) for s, _ in pairs]
    rhs = [chi for _, chi in pairs]
    a1, a2, a3, a4 = _solve4(rows, rhs)
    return RRCoefficients(a1, a2, a3, a4)


# -- built-in surface constructors ------------------------------------------

def P2(d):
    """The projective plane polarized by H^d (K = -3H, so LK = -3d)."""
    if d < 0:
        raise ValueError("P2 degree must be >= 0")
    return SurfaceClass(f"P2:{d}", d * d, -3 * d, 9, 3)


def K3(l2):
    """A K3 surface (trivial K, c2 = 24) with a class of self-intersection l2."""
    return SurfaceClass(f"K3:{l2}", l2, 0, 0, 24)


def T4(l2):
    """An abelian surface (trivial K, c2 = 0) with self-intersection l2."""
    return SurfaceClass(f"T4:{l2}", l2, 0, 0, 0)


def builtin_catalog():
    """Name -> constructor map for the surfaces addressable as NAME:PARAM."""
    return {"P2": P2, "K3": K3, "T4": T4}


def parse_surface(spec):
    """Parse "P2:3" / "K3:4" / "T4:2" or explicit "L2,LK,K2,c2" data."""
    if ":" in spec:
        name, _, arg = spec.partition(":")
        catalog = builtin_catalog()
        if name not in catalog:
            raise ValueError(f"unknown surface family {name!r}; "
                             f"choices: {', '.join(sorted(catalog))}")
        return catalog[name](int(arg))
    parts = spec.split(",")
    if len(parts) != 4:
        raise ValueError("explicit surface needs four integers L2,LK,K2,c2")
    l2, lk, k2, c2 = (int(p) for p in parts)
    return SurfaceClass(f"custom({spec})", l2, lk, k2, c2)


def rr_example_pairs():
    """The four classical surface/chi pairs that pin down the coefficients:
    O on K3, O on P2, the hyperplane class on P2, and a (1,1)-type class
    on the abelian surface."""
    return [(K3(0), 2), (P2(0), 1), (P2(1), 3), (T4(2), 1)]
