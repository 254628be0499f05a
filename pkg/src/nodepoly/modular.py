"""q-expansions of the quasi-modular ingredients of the closed formula.

Everything here is an exact ``PSeries`` over ``Fraction``:

* ``g2_series``         -1/24 + sum_k sigma_1(k) q^k
* ``dg2_series``        its image under D = q d/dq, i.e. sum k*sigma_1(k) q^k
* ``d2g2_series``       sum k^2*sigma_1(k) q^k
* ``delta_series``      the discriminant cusp form q*prod(1-q^n)^24
* ``partition_power_series``   prod(1-q^k)^(-e)

The derivative series are computed directly from divisor sums rather than
through ``qderiv`` so the identity dg2 = D(g2) stays a two-route check.
"""

from fractions import Fraction

from .series import PSeries


def sigma1(k):
    """Sum of the positive divisors of k."""
    if k < 1:
        raise ValueError("sigma1 needs k >= 1")
    total = 0
    d = 1
    while d * d <= k:
        if k % d == 0:
            total += d
            if d != k // d:
                total += k // d
        d += 1
    return total


def g2_series(order):
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [Fraction(-1, 24)]
    coeffs.extend(sigma1(k) for k in range(1, order + 1))
    return PSeries(coeffs)


def dg2_series(order):
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [0]
    coeffs.extend(k * sigma1(k) for k in range(1, order + 1))
    return PSeries(coeffs, order=order)


def d2g2_series(order):
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [0]
    coeffs.extend(k * k * sigma1(k) for k in range(1, order + 1))
    return PSeries(coeffs, order=order)


def euler_product(order):
    """prod_{k>=1} (1 - q^k) truncated at the given order."""
    result = PSeries.one(order)
    for k in range(1, order + 1):
        factor = [0] * (k + 1)
        factor[0], factor[k] = 1, -1
        result = result * PSeries(factor, order=order)
    return result


def delta_series(order):
    """q * prod_{n>=1} (1 - q^n)^24, the weight-12 discriminant form.

    The leading coefficient sits at q^1, so the order must be >= 1.
    """
    if order < 1:
        raise ValueError("delta needs order >= 1")
    return (euler_product(order - 1) ** 24).shift_up(1)


def partition_power_series(e, order):
    """prod_{k>=1} (1 - q^k)^(-e); e = 1 generates the partition numbers."""
    if e < 1:
        raise ValueError("exponent must be a positive integer")
    if order < 0:
        raise ValueError("order must be >= 0")
    return euler_product(order).inverse() ** e


class ModularCatalog:
    """Named, cached q-expansions at one fixed truncation order.

    The cache is a plain dict of pure recomputable values: a race at worst
    recomputes the identical series, so concurrent readers always agree.
    """

    def __init__(self, order):
        if order < 1:
            raise ValueError("catalog order must be >= 1")
        self.order = order
        self._cache = {}

    def _memo(self, key, build):
        value = self._cache.get(key)
        if value is None:
            value = build()
            self._cache[key] = value
        return value

    @property
    def g2(self):
        return self._memo("G2", lambda: g2_series(self.order))

    @property
    def dg2(self):
        return self._memo("DG2", lambda: dg2_series(self.order))

    @property
    def d2g2(self):
        return self._memo("D2G2", lambda: d2g2_series(self.order))

    @property
    def delta(self):
        return self._memo("DELTA", lambda: delta_series(self.order))

    def partition_power(self, e):
        return self._memo(f"PARTITION_POWER({e})",
                          lambda: partition_power_series(e, self.order))

    def get(self, name):
        """Look up a series by name, e.g. "DG2" or "PARTITION_POWER(24)"."""
        key = name.upper()
        if key in ("G2", "DG2", "D2G2", "DELTA"):
            return getattr(self, key.lower())
        if key.startswith("PARTITION_POWER(") and key.endswith(")"):
            e = int(key[len("PARTITION_POWER("):-1])
            return self.partition_power(e)
        raise KeyError(f"unknown series name {name!r}")
