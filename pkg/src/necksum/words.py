"""Binary words, necklaces, co-periods and Lyndon words.

A necklace is stored through its canonical representative, the
lexicographically smallest rotation (with 0 < 1).  Enumeration has two
engines that must agree: a fixed-density FKM generator (fast path) and a
filter over all C(n, k) words (oracle).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .arith import binomial, divisors, euler_phi, exact_div, moebius, ramanujan_sum


@dataclass(frozen=True, order=True)
class BinaryWord:
    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"not a binary word: {self.bits!r}")

    @classmethod
    def from_str(cls, s: str) -> "BinaryWord":
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls(tuple(int(c) for c in s))

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def rotate(self, i: int) -> "BinaryWord":
        i %= len(self.bits)
        return BinaryWord(self.bits[i:] + self.bits[:i])

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass(frozen=True, order=True)
class Necklace:
    canonical: BinaryWord
    coperiod: int = field(compare=False)

    @property
    def length(self) -> int:
        return self.canonical.length

    @property
    def weight(self) -> int:
        return self.canonical.weight

    @property
    def is_primitive(self) -> bool:
        return self.coperiod == 1

    def __str__(self):
        return str(self.canonical)


def _as_word(w) -> BinaryWord:
    if isinstance(w, BinaryWord):
        return w
    if isinstance(w, str):
        return BinaryWord.from_str(w)
    return BinaryWord(tuple(w))


def _min_rotation(bits: tuple) -> tuple:
    return min(bits[i:] + bits[:i] for i in range(len(bits)))


def _coperiod(bits: tuple) -> int:
    n = len(bits)
    for p in divisors(n):
        if bits[p:] + bits[:p] == bits:
            return n // p
    raise AssertionError("unreachable: p = n always works")


def co_period(w) -> int:
    """Largest j with w == v**j; equivalently n over the smallest period."""
    w = _as_word(w)
    if not w.bits:
        raise ValueError("empty word")
    return _coperiod(w.bits)


def canonical_form(w) -> Necklace:
    w = _as_word(w)
    if not w.bits:
        raise ValueError("empty word")
    bits = _min_rotation(w.bits)
    return Necklace(BinaryWord(bits), _coperiod(bits))


def is_lyndon(w) -> bool:
    """Primitive and strictly smaller than every other rotation.

    Words of length 1 count as Lyndon.
    """
    w = _as_word(w)
    bits = w.bits
    if not bits:
        raise ValueError("empty word")
    return all(bits < bits[i:] + bits[:i] for i in range(1, len(bits)))


def _fkm(n: int, k: int, lyndon_only: bool) -> Iterator[tuple[int, tuple]]:
    """Fixed-density FKM: prenecklaces extended in lex order, pruned on weight.

    Yields (p, bits) where p is the length of the longest Lyndon prefix; the
    word is a necklace iff p divides n and a Lyndon word iff p == n.
    """
    a = [0] * (n + 1)

    def gen(t: int, p: int, ones: int):
        if t > n:
            if ones == k and (p == n if lyndon_only else n % p == 0):
                yield p, tuple(a[1:])
            return
        lo = a[t - p]
        for v in range(lo, 2):
            o = ones + v
            if o > k or o + (n - t) < k:
                continue
            a[t] = v
            yield from gen(t + 1, p if v == lo else t, o)

    yield from gen(1, 1, 0)


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def _check_r(n: int, r: int) -> None:
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got n={n}, r={r}")


def enumerate_necklaces(n: int, k: int) -> list[Necklace]:
    _check_nk(n, k)
    return [Necklace(BinaryWord(bits), n // p) for p, bits in _fkm(n, k, False)]


def enumerate_necklaces_baseline(n: int, k: int) -> list[Necklace]:
    """Oracle: every weight-k word that is its own smallest rotation."""
    _check_nk(n, k)
    out = []
    for ones in combinations(range(n), k):
        bits = [0] * n
        for i in ones:
            bits[i] = 1
        bits = tuple(bits)
        if _min_rotation(bits) == bits:
            out.append(Necklace(BinaryWord(bits), _coperiod(bits)))
    out.sort()
    return out


def enumerate_lyndon(n: int, k: int) -> list[BinaryWord]:
    _check_nk(n, k)
    return [BinaryWord(bits) for _, bits in _fkm(n, k, True)]


def enumerate_lyndon_baseline(n: int, k: int) -> list[BinaryWord]:
    return [nk.canonical for nk in enumerate_necklaces_baseline(n, k) if nk.coperiod == 1]


def divides(j: int, r: int) -> bool:
    """j | r, with every positive j dividing 0."""
    return r % j == 0


def enumerate_coperiod_div(n: int, k: int, r: int) -> list[Necklace]:
    _check_nk(n, k)
    _check_r(n, r)
    return [nk for nk in enumerate_necklaces(n, k) if divides(nk.coperiod, r)]


def enumerate_lplus(n: int, k: int) -> list[BinaryWord]:
    """L(n, k), plus L(n/2, k/2) when n is even and k = 2 mod 4."""
    words = enumerate_lyndon(n, k)
    if n % 2 == 0 and k % 4 == 2:
        words += enumerate_lyndon(n // 2, k // 2)
    return words


def _gcd_divisors(n: int, k: int) -> list[int]:
    return divisors(math.gcd(n, k))


def count_necklaces(n: int, k: int) -> int:
    _check_nk(n, k)
    total = sum(euler_phi(d) * binomial(n // d, k // d) for d in _gcd_divisors(n, k))
    return exact_div(total, n)


def count_necklaces_total(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return exact_div(sum(euler_phi(d) * 2 ** (n // d) for d in divisors(n)), n)


def count_lyndon(n: int, k: int) -> int:
    _check_nk(n, k)
    total = sum(moebius(d) * binomial(n // d, k // d) for d in _gcd_divisors(n, k))
    return exact_div(total, n)


def count_lyndon_total(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return exact_div(sum(moebius(d) * 2 ** (n // d) for d in divisors(n)), n)


def count_coperiod_div(n: int, k: int, r: int) -> int:
    """|N_r(n, k)|: necklaces of length n, weight k, co-period dividing r.

    Only r mod n matters, so any non-negative r is accepted.
    """
    _check_nk(n, k)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    r %= n
    total = sum(binomial(n // d, k // d) * ramanujan_sum(d, r) for d in _gcd_divisors(n, k))
    return exact_div(total, n)


def count_lplus(n: int, k: int) -> int:
    _check_nk(n, k)
    count = count_lyndon(n, k)
    if n % 2 == 0 and k % 4 == 2:
        count += count_lyndon(n // 2, k // 2)
    return count


def rotations(w) -> Iterable[BinaryWord]:
    w = _as_word(w)
    return (w.rotate(i) for i in range(w.length))
