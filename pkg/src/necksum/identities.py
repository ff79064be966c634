"""Equality and difference between |N_r(n, k)| and |S̄_r(n, k)|, the
special-case corollaries, and the two difference tables."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import divisors, exact_div, nu2, ramanujan_sum
from .subsets import count_sbar
from .words import count_coperiod_div, count_lplus, count_lyndon, count_necklaces

CONDITION_LABELS = "abcde"


def equality_conditions(n: int, k: int, r: int) -> tuple[str, ...]:
    """Labels of the conditions (a)-(e) that hold for (n, k, r).

    (a) n odd; (b) k odd; (c) nu2(n) < nu2(k); (d) nu2(k) - nu2(r) >= 2;
    (e) k == n even and r not in {0, n/2}.  Also used on q-ary parameters,
    so k > n is tolerated.
    """
    vn, vk, vr = nu2(n), nu2(k), nu2(r)
    held = []
    if n % 2:
        held.append("a")
    if k % 2:
        held.append("b")
    if vn < vk:
        held.append("c")
    # nu2(0) - nu2(0) is undefined; condition (c) covers k == 0 anyway
    if not (k == 0 and r == 0) and vk - vr >= 2:
        held.append("d")
    if k == n and n % 2 == 0 and r not in (0, n // 2):
        held.append("e")
    return tuple(held)


@dataclass(frozen=True)
class EqualityVerdict:
    n: int
    k: int
    r: int
    predicted_equal: bool
    matched_conditions: tuple[str, ...]
    predicted_difference: int
    sign: int

    def conditions_str(self) -> str:
        return "".join(self.matched_conditions)


def _check(n: int, k: int, r: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    return r % n


def predict_equality(n: int, k: int, r: int) -> EqualityVerdict:
    r = _check(n, k, r)
    held = equality_conditions(n, k, r)
    if held:
        return EqualityVerdict(n, k, r, True, held, 0, 0)
    m = nu2(k)
    sign = -1 if m - nu2(r) == 1 else 1
    magnitude = count_coperiod_div(n >> m, k >> m, r)
    return EqualityVerdict(n, k, r, False, held, sign * magnitude, sign)


def difference(n: int, k: int, r: int) -> int:
    """|N_r(n, k)| - |S̄_r(n, k)| as predicted by the characterisation theorem."""
    return predict_equality(n, k, r).predicted_difference


def formula_difference(n: int, k: int, r: int) -> int:
    return count_coperiod_div(n, k, r % n) - count_sbar(n, k, r % n)


def aggregate_difference(n: int, r: int) -> int:
    """(1/n) sum over even d | n of 2^(n/d) c_d(r)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    r %= n
    return exact_div(sum(2 ** (n // d) * ramanujan_sum(d, r) for d in divisors(n) if d % 2 == 0), n)


def _grid_row(args: tuple[int, int]) -> list[int]:
    m, r = args
    return [difference(2 * m, 2 * k, r) for k in range(m + 1)]


def _sum_row(n: int) -> list[int]:
    return [aggregate_difference(n, r % n) for r in range(n + 1)]


def _map(fn, items, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def table_diff_grid(r: int = 2, m_max: int = 19, jobs: int = 1) -> list[list[int]]:
    """Row m (1..m_max) holds |N_r(2m, 2k)| - |S̄_r(2m, 2k)| for k = 0..m."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    return _map(_grid_row, [(m, r) for m in range(1, m_max + 1)], jobs)


def table_diff_sum(n_max: int = 20, jobs: int = 1) -> list[list[int]]:
    """Row n (1..n_max) holds |N_r(n)| - |S̄_r(n)| for r = 0..n (r = n repeats r = 0)."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return _map(_sum_row, range(1, n_max + 1), jobs)


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def expect(self, cond: bool, msg: str) -> None:
        self.checked += 1
        if not cond:
            self.violations.append(msg)


def sequence_a001840_check(m_from: int = 4, m_to: int = 12) -> Report:
    """|N_2(2m, 6)| - |S̄_2(2m, 6)| against |N_2(m, 3)| and |L(m, 3)|."""
    if m_from <= 3:
        raise ValueError("m_from must exceed 3")
    report = Report("A001840")
    for m in range(m_from, m_to + 1):
        diff = difference(2 * m, 6, 2)
        report.rows.append((m, diff))
        report.expect(diff == formula_difference(2 * m, 6, 2), f"m={m}: theorem vs formula")
        report.expect(diff == count_coperiod_div(m, 3, 2), f"m={m}: {diff} != |N_2({m},3)|")
        report.expect(diff == count_lyndon(m, 3), f"m={m}: {diff} != |L({m},3)|")
    return report


def s0_plus_count(n: int, k: int) -> int:
    """|S_0^+(n, k)|: S̄_0(n, k), joined with S̄_0(n', k') outside the equality range."""
    count = count_sbar(n, k, 0)
    if n % 2 == 0 and k % 2 == 0 and k and nu2(n) >= nu2(k):
        m = nu2(k)
        count += count_sbar(n >> m, k >> m, 0)
    return count


def corollary_reports(n_max: int) -> Report:
    """The r = 0 and r = 1 specialisations, checked for all n <= n_max and all k."""
    report = Report("corollaries")
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            sbar0 = count_sbar(n, k, 0)
            neck = count_necklaces(n, k)
            eq0 = n % 2 == 1 or k % 2 == 1 or nu2(n) < nu2(k)
            report.expect((sbar0 == neck) == eq0, f"r=0 equality mismatch at n={n}, k={k}")
            if not eq0:
                m = nu2(k)
                report.expect(neck - sbar0 == count_necklaces(n >> m, k >> m) == count_sbar(n >> m, k >> m, 0),
                              f"r=0 difference mismatch at n={n}, k={k}")
            report.expect(s0_plus_count(n, k) == neck, f"|S0+({n},{k})| != |N({n},{k})|")
            if n >= 2:
                sbar1 = count_sbar(n, k, 1)
                lyn = count_lyndon(n, k)
                report.expect(sbar1 == count_lplus(n, k), f"|S̄_1({n},{k})| != |L+({n},{k})|")
                eq1 = (n % 2 == 1 or k % 2 == 1 or nu2(n) < nu2(k) or k % 4 == 0
                       or (k == n and n % 2 == 0 and n > 2))
                report.expect((sbar1 == lyn) == eq1, f"r=1 equality mismatch at n={n}, k={k}")
                if n % 2 == 0 and k % 4 == 2:
                    report.expect(lyn - sbar1 == -count_lyndon(n // 2, k // 2),
                                  f"r=1 difference mismatch at n={n}, k={k}")
    return report
