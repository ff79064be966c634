"""q-ary generalisation: bounded multisets of [n] by sum residue, and q-ary
necklaces by entry sum and co-period.

Nothing here asserts the open equality question.  The scanner records counts
and flags; mismatches outside proved territory are data.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .errors import GcdNotOne
from .identities import equality_conditions, predict_equality


@dataclass(frozen=True, order=True)
class BoundedMultiset:
    """Multiplicities of 1..n, each below ``bound``."""

    modulus: int
    bound: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicities) != self.modulus:
            raise ValueError("one multiplicity per element of [n] is required")
        if any(not 0 <= c < self.bound for c in self.multiplicities):
            raise ValueError(f"multiplicities must lie in 0..{self.bound - 1}")

    @property
    def size(self) -> int:
        return sum(self.multiplicities)

    @property
    def residue(self) -> int:
        return sum(i * c for i, c in enumerate(self.multiplicities, 1)) % self.modulus

    def elements(self) -> list[int]:
        return [i for i, c in enumerate(self.multiplicities, 1) for _ in range(c)]

    def __str__(self):
        return "{" + ",".join(map(str, self.elements())) + "}"


@dataclass(frozen=True, order=True)
class QaryWord:
    symbols: tuple[int, ...]
    q: int = field(compare=False)
    coperiod: int = field(compare=False, default=1)

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def entry_sum(self) -> int:
        return sum(self.symbols)

    def __str__(self):
        if self.q <= 10:
            return "".join(map(str, self.symbols))
        return ",".join(map(str, self.symbols))


def _check(n: int, q: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got n={n}, r={r}")


def _multiplicity_vectors(n: int, k: int, q: int) -> Iterator[tuple[int, ...]]:
    """Vectors in [0, q)^n with coordinate sum k, in lexicographic order."""
    vec = [0] * n

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                yield tuple(vec)
            return
        room = (q - 1) * (n - i - 1)
        for c in range(max(0, left - room), min(q - 1, left) + 1):
            vec[i] = c
            yield from rec(i + 1, left - c)

    yield from rec(0, k)


def enumerate_multisets(n: int, k: int, r: int, q: int) -> list[BoundedMultiset]:
    _check(n, q, r)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    out = []
    for vec in _multiplicity_vectors(n, k, q):
        if sum(i * c for i, c in enumerate(vec, 1)) % n == r:
            out.append(BoundedMultiset(n, q, vec))
    return out


def multiset_counts(n: int, q: int) -> list[list[int]]:
    """table[k][r] = |S̄_r^q(n, k)| for all k in 0..n(q-1), by dynamic programming."""
    kmax = n * (q - 1)
    table = [[0] * n for _ in range(kmax + 1)]
    table[0][0] = 1
    filled = 0
    for a in range(1, n + 1):
        new = [row[:] for row in table]
        for c in range(1, q):
            shift = a * c % n
            for size in range(filled + 1):
                src = table[size]
                dst = new[size + c]
                for res in range(n):
                    if src[res]:
                        dst[(res + shift) % n] += src[res]
        table = new
        filled += q - 1
    return table


def _fkm_qary(n: int, q: int, k: int | None) -> Iterator[tuple[int, tuple]]:
    """FKM over {0..q-1}, optionally pruned to entry sum k; yields (period, word)."""
    a = [0] * (n + 1)
    top = q - 1

    def gen(t: int, p: int, s: int):
        if t > n:
            if n % p == 0 and (k is None or s == k):
                yield p, tuple(a[1:])
            return
        lo = a[t - p]
        for v in range(lo, q):
            ns = s + v
            if k is not None and (ns > k or ns + top * (n - t) < k):
                continue
            a[t] = v
            yield from gen(t + 1, p if v == lo else t, ns)

    yield from gen(1, 1, 0)


def enumerate_qary_necklaces(n: int, k: int, r: int, q: int) -> list[QaryWord]:
    """Canonical q-ary necklaces with entry sum k whose co-period divides r."""
    _check(n, q, r)
    if not 0 <= k <= n * (q - 1):
        raise ValueError(f"need 0 <= k <= n(q-1), got k={k}")
    out = []
    for p, word in _fkm_qary(n, q, k):
        j = n // p
        if r % j == 0:
            out.append(QaryWord(word, q, j))
    return out


def necklace_tally(n: int, q: int) -> dict[tuple[int, int], int]:
    """Counts of q-ary necklaces of length n keyed by (entry sum, co-period)."""
    tally: dict[tuple[int, int], int] = {}
    for p, word in _fkm_qary(n, q, None):
        key = (sum(word), n // p)
        tally[key] = tally.get(key, 0) + 1
    return tally


def necklace_counts(n: int, q: int) -> list[list[int]]:
    """table[k][r] = |N_r^q(n, k)|."""
    tally = necklace_tally(n, q)
    kmax = n * (q - 1)
    table = [[0] * n for _ in range(kmax + 1)]
    for (k, j), c in tally.items():
        for r in range(n):
            if r % j == 0:
                table[k][r] += c
    return table


@dataclass(frozen=True)
class ScanRow:
    n: int
    q: int
    k: int | str
    r: int
    count_multisets: int
    count_necklaces: int
    conditions: str

    @property
    def equal(self) -> bool:
        return self.count_multisets == self.count_necklaces


@dataclass
class ScanResult:
    rows: list[ScanRow] = field(default_factory=list)
    # r = 0, gcd(q, n) = 1 cells with unequal counts (refined-equality evidence)
    counterexamples: list[ScanRow] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "q", "k", "r", "count_multisets", "count_necklaces", "equal", "conditions"])
        for row in self.rows:
            w.writerow([row.n, row.q, row.k, row.r, row.count_multisets, row.count_necklaces,
                        "true" if row.equal else "false", row.conditions])
        return buf.getvalue()


def _scan_cell(args: tuple[int, int, int | None]) -> list[ScanRow]:
    n, q, k_max = args
    ms = multiset_counts(n, q)
    nk = necklace_counts(n, q)
    top = n * (q - 1) if k_max is None else min(k_max, n * (q - 1))
    rows = []
    for k in range(top + 1):
        for r in range(n):
            rows.append(ScanRow(n, q, k, r, ms[k][r], nk[k][r], "".join(equality_conditions(n, k, r))))
    for r in range(n):
        rows.append(ScanRow(n, q, "total", r,
                            sum(ms[k][r] for k in range(len(ms))),
                            sum(nk[k][r] for k in range(len(nk))), ""))
    return rows


def scan_equality(n_max: int, q_max: int, k_max: int | None = None, jobs: int = 1) -> ScanResult:
    """Counts for every n in 1..n_max, q in 2..q_max, k, r; CSV-ready."""
    if n_max < 2 or q_max < 2 or (k_max is not None and k_max < 2):
        raise ValueError("scan bounds must be at least 2")
    cells = [(n, q, k_max) for n in range(1, n_max + 1) for q in range(2, q_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_cell, cells))
    else:
        chunks = [_scan_cell(c) for c in cells]
    result = ScanResult()
    for chunk in chunks:
        for row in chunk:
            result.rows.append(row)
            if row.r == 0 and row.k != "total" and math.gcd(row.q, row.n) == 1 and not row.equal:
                result.counterexamples.append(row)
    return result


def binary_slice_mismatches(result: ScanResult) -> list[ScanRow]:
    """q = 2 rows whose equality flag disagrees with the binary theorem."""
    bad = []
    for row in result.rows:
        if row.q == 2 and row.k != "total":
            if row.equal != predict_equality(row.n, row.k, row.r).predicted_equal:
                bad.append(row)
    return bad


@dataclass(frozen=True)
class ChanReport:
    n: int
    q: int
    multisets: int
    necklaces: int

    @property
    def ok(self) -> bool:
        return self.multisets == self.necklaces


def chan_total_check(n: int, q: int) -> ChanReport:
    """|S̄_0^q(n)| vs |N_0^q(n)| for gcd(q, n) = 1, both by enumeration."""
    if math.gcd(q, n) != 1:
        raise GcdNotOne(f"gcd({q}, {n}) != 1")
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    # one list entry per multiset of {1..a}: its sum residue
    residues = [0]
    for a in range(1, n + 1):
        steps = [a * c % n for c in range(q)]
        residues = [(x + s) % n for x in residues for s in steps]
    multisets = residues.count(0)
    necklaces = sum(1 for _ in _fkm_qary(n, q, None))
    return ChanReport(n, q, multisets, necklaces)
