"""Subsets of [n] and [n-1] classified by element sum modulo n.

Elements live in 1..n internally; ``n`` stands for the residue class of 0.
The 0-based rendering (n shown as 0) is an output option only.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import combinations

from .arith import (
    IntPolynomial,
    binomial,
    divisors,
    euler_phi,
    exact_div,
    one_minus_neg_x_pow,
    poly_divide_exact,
    poly_scale_exact,
    prime_factors,
    ramanujan_sum,
)
from .errors import NotCoprime, SearchExhausted, ZNotCoprime


class Universe(enum.Enum):
    FULL = "full"    # subsets of [n]
    SHORT = "short"  # subsets of [n-1]


@dataclass(frozen=True, order=True)
class ResidueSubset:
    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if any(not 1 <= a <= self.modulus for a in els):
            raise ValueError(f"elements must lie in 1..{self.modulus}: {els}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")

    @classmethod
    def of(cls, modulus: int, elements) -> "ResidueSubset":
        """Build from any iterable of integers, reducing each into 1..n."""
        elements = list(elements)
        reduced = sorted({(a - 1) % modulus + 1 for a in elements})
        if len(reduced) != len(elements):
            raise ValueError(f"elements collide modulo {modulus}: {elements}")
        return cls(modulus, tuple(reduced))

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def residue(self) -> int:
        return sum(self.elements) % self.modulus

    def render(self, zero_based: bool = False) -> str:
        els = self.elements
        if zero_based:
            els = sorted(a % self.modulus for a in els)
        return "{" + ",".join(map(str, els)) + "}"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class BezoutTriple:
    x: int
    y: int
    z: int
    n: int
    k: int
    r: int

    def is_valid(self) -> bool:
        return (self.n * self.x + self.k * self.y + self.r * self.z == 1
                and math.gcd(self.z, self.n) == 1)


def _check(n: int, k: int, r: int | None = None, short: bool = False) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    top = n - 1 if short else n
    if not 0 <= k <= top:
        raise ValueError(f"need 0 <= k <= {top}, got k={k}")
    if r is not None and not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got n={n}, r={r}")


def _residue(r: int, n: int) -> int:
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    return r % n


def enumerate_subsets(n: int, k: int, r: int, universe: Universe = Universe.FULL) -> list[ResidueSubset]:
    """k-subsets of [n] (FULL) or [n-1] (SHORT) summing to r mod n, lex order."""
    universe = Universe(universe)
    _check(n, k, r, short=universe is Universe.SHORT)
    top = n if universe is Universe.FULL else n - 1
    return [ResidueSubset(n, c) for c in combinations(range(1, top + 1), k) if sum(c) % n == r]


def count_subsets_dp(n: int, k: int, r: int, universe: Universe = Universe.FULL) -> int:
    """Second counting oracle: dynamic programme over (size, residue)."""
    universe = Universe(universe)
    top = n if universe is Universe.FULL else n - 1
    if k > top or k < 0:
        return 0
    r = _residue(r, n)
    table = [[0] * n for _ in range(k + 1)]
    table[0][0] = 1
    for a in range(1, top + 1):
        for size in range(min(k, a), 0, -1):
            prev, cur = table[size - 1], table[size]
            for res in range(n):
                if prev[res]:
                    cur[(res + a) % n] += prev[res]
    return table[k][r]


def count_sbar(n: int, k: int, r: int) -> int:
    """|S̄_r(n, k)| by the Ramanujan-sum formula with sign (-1)^(k/d + k)."""
    _check(n, k)
    r = _residue(r, n)
    total = 0
    for d in divisors(math.gcd(n, k)):
        sign = -1 if (k // d + k) % 2 else 1
        total += sign * binomial(n // d, k // d) * ramanujan_sum(d, r)
    return exact_div(total, n)


def count_s_short(n: int, k: int, r: int) -> int:
    """|S_r(n, k)| as the alternating sum of |S̄_r(n, i)|, i = 0..k."""
    _check(n, k, short=True)
    return sum((-1) ** (k - i) * count_sbar(n, i, r) for i in range(k + 1))


def sbar_generating_poly(n: int, r: int) -> IntPolynomial:
    """sum_k |S̄_r(n, k)| x^k = (1/n) sum_{d|n} (1 - (-x)^d)^(n/d) c_d(r)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    r = _residue(r, n)
    acc = IntPolynomial()
    for d in divisors(n):
        c = ramanujan_sum(d, r)
        if c:
            acc = acc + one_minus_neg_x_pow(d) ** (n // d) * c
    return poly_scale_exact(acc, n)


def s1_short_poly(n: int) -> IntPolynomial:
    """sum_k |S_1(n, k-1)| x^(k-1), via the roots-of-unity filter on [n-1].

    The filter weight for gcd class d is the Ramanujan sum c_d(1); the
    product over [n-1] is the product over [n] divided by (1 + x).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    r = 1 % n
    acc = IntPolynomial()
    for d in divisors(n):
        c = ramanujan_sum(d, r)
        if c:
            acc = acc + one_minus_neg_x_pow(d) ** (n // d) * c
    acc = poly_divide_exact(acc, IntPolynomial([1, 1]))
    return poly_scale_exact(acc, n)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with a*s + b*t == g == gcd(a, b) >= 0."""
    old_r, rr = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while rr:
        q = old_r // rr
        old_r, rr = rr, old_r - q * rr
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bezout_solve(n: int, k: int, r: int) -> BezoutTriple:
    """Integers with n*x + k*y + r*z == 1 and gcd(z, n) == 1.

    Solve k*y0 + r*z0 = g, then n*x + g*t = 1, and shift (y, z) by
    (-r*j, k*j) for j = 0, 1, ... until z is a unit mod n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if math.gcd(n, math.gcd(k, r)) != 1:
        raise NotCoprime(f"gcd({n}, {k}, {r}) != 1")
    g, y0, z0 = _ext_gcd(k, r)
    g2, x, t = _ext_gcd(n, g)
    assert g2 == 1
    y, z = y0 * t, z0 * t
    limit = n * len(prime_factors(n)) + 1
    for j in range(limit):
        zj = z + k * j
        if math.gcd(zj, n) == 1:
            triple = BezoutTriple(x, y - r * j, zj, n, k, r)
            assert triple.is_valid()
            return triple
    raise SearchExhausted(f"no unit shift found for (n, k, r) = ({n}, {k}, {r})")


def affine_bijection(subset: ResidueSubset, y: int, z: int) -> ResidueSubset:
    """a -> (z*a + y) mod n elementwise, residue 0 written as n."""
    n = subset.modulus
    if math.gcd(z, n) != 1:
        raise ZNotCoprime(f"gcd({z}, {n}) != 1")
    return ResidueSubset(n, tuple(sorted((z * a + y - 1) % n + 1 for a in subset.elements)))


def split_by_top(subset: ResidueSubset) -> tuple[str, ResidueSubset]:
    """The trivial splitting of S̄_r(n, k) into S_r(n, k) and S_r(n, k-1).

    Returns ("k", A) when n is absent, ("k-1", A minus n) when present.
    """
    n = subset.modulus
    if subset.elements and subset.elements[-1] == n:
        return "k-1", ResidueSubset(n, subset.elements[:-1])
    return "k", subset


def count_stanley_total(n: int) -> int:
    """(1/n) sum over odd d | n of phi(d) 2^(n/d)."""
    return exact_div(sum(euler_phi(d) * 2 ** (n // d) for d in divisors(n) if d % 2), n)


def sbar_total(n: int, r: int) -> int:
    """|S̄_r(n)| = (1/n) sum_{d|n} (1 - (-1)^d)^(n/d) c_d(r)."""
    r = _residue(r, n)
    return exact_div(sum((1 - (-1) ** d) ** (n // d) * ramanujan_sum(d, r) for d in divisors(n)), n)

