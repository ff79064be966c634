"""V-shaped and cyclic permutations, and the counts of CVP(n, k)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .arith import (
    IntPolynomial,
    binomial,
    divisors,
    exact_div,
    moebius,
    one_minus_neg_x_pow,
    poly_divide_exact,
    poly_scale_exact,
)
from .words import count_lplus


@dataclass(frozen=True, order=True)
class Permutation:
    oneline: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.oneline) != list(range(1, len(self.oneline) + 1)):
            raise ValueError(f"not a permutation of 1..n: {self.oneline}")

    @classmethod
    def from_str(cls, s: str) -> "Permutation":
        """Parse "54213" (digits, n <= 9) or "10 9 1 2 ..." / "5,4,2,1,3"."""
        s = s.strip()
        if " " in s or "," in s:
            parts = s.replace(",", " ").split()
            return cls(tuple(int(p) for p in parts))
        return cls(tuple(int(c) for c in s))

    @classmethod
    def from_cycle(cls, cycle: Sequence[int]) -> "Permutation":
        """The permutation with the single cycle (c_1, c_2, ..., c_n)."""
        n = len(cycle)
        image = [0] * n
        for i, a in enumerate(cycle):
            image[a - 1] = cycle[(i + 1) % n]
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle form, each cycle starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_from(self, start: int = 1) -> tuple[int, ...]:
        """The cycle through ``start``, beginning at ``start``."""
        cyc = [start]
        nxt = self(start)
        while nxt != start:
            cyc.append(nxt)
            nxt = self(nxt)
        return tuple(cyc)

    def cycle_notation(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())

    def reverse_complement(self) -> "Permutation":
        n = self.n
        return Permutation(tuple(n + 1 - v for v in reversed(self.oneline)))

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.oneline))
        return " ".join(map(str, self.oneline))


def _as_perm(p) -> Permutation:
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return Permutation.from_str(p)
    return Permutation(tuple(p))


def is_v_shaped(p) -> int | None:
    """1-based position of the minimum if p decreases strictly to it and then
    increases strictly; None otherwise."""
    s = _as_perm(p).oneline
    m = s.index(min(s))
    if all(s[i] > s[i + 1] for i in range(m)) and all(s[i] < s[i + 1] for i in range(m, len(s) - 1)):
        return m + 1
    return None


def is_cyclic(p) -> bool:
    p = _as_perm(p)
    return len(p.cycle_from(1)) == p.n


def enumerate_cvp(n: int, k: int) -> list[Permutation]:
    """Cyclic V-shaped permutations of [n] with the minimum at position k.

    Candidates come from choosing the k-1 values of the descending prefix out
    of {2, ..., n}; the value 1 sits at position k.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    out = []
    rest = range(2, n + 1)
    for prefix in combinations(rest, k - 1):
        chosen = set(prefix)
        suffix = [v for v in rest if v not in chosen]
        perm = Permutation(tuple(sorted(prefix, reverse=True)) + (1,) + tuple(suffix))
        if is_cyclic(perm):
            out.append(perm)
    out.sort()
    return out


def thibon_poly(n: int) -> IntPolynomial:
    """sum_k |CVP(n, k)| x^(k-1) = 1/(n(1+x)) sum_{d|n} mu(d) (1 - (-x)^d)^(n/d)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    acc = IntPolynomial()
    for d in divisors(n):
        mu = moebius(d)
        if mu:
            acc = acc + one_minus_neg_x_pow(d) ** (n // d) * mu
    acc = poly_scale_exact(acc, n)
    return poly_divide_exact(acc, IntPolynomial([1, 1]))


def count_cvp(n: int, k: int) -> int:
    """|CVP(n, k)| = sum_{i<k} (-1)^(k-1-i) |L+(n, i)|; zero for k = 0 or k = n+1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k == 0 or k == n + 1:
        return 0
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return sum((-1) ** (k - 1 - i) * count_lplus(n, i) for i in range(k))


def count_cvp_closed(n: int, k: int) -> int:
    """(1/n) sum_{d|n} mu(d) sum_{j <= (k-1)/d} (-1)^(k+j-1) C(n/d, j)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    total = 0
    for d in divisors(n):
        mu = moebius(d)
        if mu:
            total += mu * sum((-1) ** (k + j - 1) * binomial(n // d, j) for j in range((k - 1) // d + 1))
    return exact_div(total, n)


def count_cvp_pair(n: int, k: int) -> int:
    """|CVP(n, k)| + |CVP(n, k+1)|."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return count_cvp(n, k) + count_cvp(n, k + 1)


def count_cvp_total(n: int) -> int:
    """(1/(2n)) sum over odd d | n of mu(d) 2^(n/d)."""
    return exact_div(sum(moebius(d) * 2 ** (n // d) for d in divisors(n) if d % 2), 2 * n)
