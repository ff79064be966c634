"""Independent brute-force oracles shared by the tests.

Nothing here imports the package; each function works straight from the
definitions with itertools and floating-point roots of unity.
"""

import cmath
import math
from itertools import combinations, permutations, product


def rotations(word):
    return {word[i:] + word[:i] for i in range(len(word))}


def coperiod(word):
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return n // p


def necklace_classes(n, k):
    """dict canonical string -> co-period, over all weight-k binary words."""
    out = {}
    for word in ("".join(bits) for bits in product("01", repeat=n)):
        if word.count("1") == k:
            out.setdefault(min(rotations(word)), coperiod(word))
    return out


def lyndon_words(n, k):
    return sorted(w for w, j in necklace_classes(n, k).items() if j == 1)


def lplus_words(n, k):
    words = lyndon_words(n, k)
    if n % 2 == 0 and k % 4 == 2:
        words += lyndon_words(n // 2, k // 2)
    return words


def subsets_mod(n, k, r, top=None):
    top = n if top is None else top
    return [c for c in combinations(range(1, top + 1), k) if sum(c) % n == r % n]


def ramanujan_numeric(d, r):
    total = sum(cmath.exp(2j * math.pi * a * r / d) for a in range(1, d + 1) if math.gcd(a, d) == 1)
    return round(total.real)


def cycle_of(perm, start=1):
    cyc = [start]
    nxt = perm[start - 1]
    while nxt != start:
        cyc.append(nxt)
        nxt = perm[nxt - 1]
    return cyc


def cvp(n, k):
    """Cyclic V-shaped permutations of [n], minimum at position k, by scanning all n!."""
    out = []
    for p in permutations(range(1, n + 1)):
        if p[k - 1] != 1:
            continue
        if all(p[i] > p[i + 1] for i in range(k - 1)) and all(p[i] < p[i + 1] for i in range(k - 1, n - 1)):
            if len(cycle_of(p)) == n:
                out.append("".join(map(str, p)) if n <= 9 else " ".join(map(str, p)))
    return sorted(out)
