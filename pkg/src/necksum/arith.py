"""Exact integer arithmetic: divisor sums, Ramanujan sums, integer polynomials.

Python ints are arbitrary precision, so every count here is exact.  Roots of
unity never appear; each roots-of-unity filter is evaluated through the
integer divisor-sum form of the Ramanujan sum.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable

from .errors import NonExactDivision

INFINITY = math.inf


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return tuple(small + large[::-1])


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order (trial division)."""
    _check_positive(n)
    return list(_divisors(n))


@lru_cache(maxsize=4096)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of ``n``, ascending."""
    _check_positive(n)
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return tuple(primes)


@lru_cache(maxsize=4096)
def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


@lru_cache(maxsize=4096)
def moebius(n: int) -> int:
    _check_positive(n)
    m = n
    sign = 1
    for p in prime_factors(n):
        m //= p
        if m % p == 0:
            return 0
        sign = -sign
    return sign


def nu2(m: int) -> int | float:
    """2-adic valuation of ``m``; ``INFINITY`` for ``m == 0``."""
    if m < 0:
        raise ValueError(f"nu2 expects a non-negative integer, got {m}")
    if m == 0:
        return INFINITY
    return (m & -m).bit_length() - 1


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever ``k`` falls outside ``[0, n]``."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    return q


@lru_cache(maxsize=65536)
def ramanujan_sum(d: int, r: int) -> int:
    """c_d(r), the sum of r-th powers of the primitive d-th roots of unity.

    Evaluated as sum_{j | gcd(r, d)} j * mu(d / j) and checked against the
    closed form mu(d/g) * phi(d) / phi(d/g).  ``gcd(0, d) == d``, so
    ``c_d(0) == phi(d)``.
    """
    _check_positive(d, "d")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    g = math.gcd(r, d)
    value = sum(j * moebius(d // j) for j in _divisors(g))
    closed = ramanujan_sum_closed(d, r)
    if value != closed:
        raise AssertionError(f"Ramanujan sum forms disagree at d={d}, r={r}: {value} != {closed}")
    return value


def ramanujan_sum_closed(d: int, r: int) -> int:
    """c_d(r) = mu(d/g) * phi(d) / phi(d/g) with g = gcd(r, d)."""
    _check_positive(d, "d")
    m = d // math.gcd(r, d)
    return moebius(m) * exact_div(euler_phi(d), euler_phi(m))


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of x**i.  Trailing zeros are trimmed, so
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPolynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def _as_poly(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    return IntPolynomial(p)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return IntPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return IntPolynomial(out)


def poly_divide_exact(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Quotient ``s`` with ``p == q * s``; raises NonExactDivision otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return IntPolynomial()
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.coeffs[-1]
    if len(rem) - 1 < dq:
        raise NonExactDivision(f"{p} is not divisible by {q}")
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1 - dq, -1, -1):
        c = rem[i + dq]
        if c == 0:
            continue
        if c % lead:
            raise NonExactDivision(f"{p} is not divisible by {q}")
        t = c // lead
        quot[i] = t
        for j, cq in enumerate(q.coeffs):
            rem[i + j] -= t * cq
    if any(rem):
        raise NonExactDivision(f"{p} is not divisible by {q}")
    return IntPolynomial(quot)


def poly_scale_exact(p: IntPolynomial, n: int) -> IntPolynomial:
    """Divide every coefficient of ``p`` by ``n``, which must divide each one."""
    _check_positive(n)
    return IntPolynomial(exact_div(c, n) for c in p.coeffs)


def one_minus_neg_x_pow(d: int) -> IntPolynomial:
    """The polynomial 1 - (-x)**d."""
    return IntPolynomial([1] + [0] * (d - 1) + [-((-1) ** d)])
