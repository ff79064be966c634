"""Exhaustive verification sweeps behind ``necksum verify``.

Each suite returns a :class:`~necksum.identities.Report`.  The fast tier
compares closed forms against each other; ``deep`` adds brute-force
enumeration on the small end of the range.
"""

from __future__ import annotations

import math

from .bijection import corollary_partition_check, verify_bijection
from .identities import Report, corollary_reports, formula_difference, predict_equality, sequence_a001840_check
from .perms import count_cvp, count_cvp_total, enumerate_cvp, thibon_poly
from .qary import chan_total_check
from .subsets import Universe, count_s_short, count_stanley_total, count_sbar, enumerate_subsets, s1_short_poly
from .words import enumerate_coperiod_div

ENUMERATION_CAP = 12
SUITES = ("theorem", "s1cvp", "bijection", "corollaries", "chan")


def theorem(max_n: int, deep: bool = False) -> Report:
    report = Report("theorem")
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            for r in range(n):
                pred = predict_equality(n, k, r)
                formula = formula_difference(n, k, r)
                report.expect(pred.predicted_difference == formula,
                              f"(n,k,r)=({n},{k},{r}): predicted {pred.predicted_difference}, formula {formula}")
                report.expect(pred.predicted_equal == (formula == 0),
                              f"(n,k,r)=({n},{k},{r}): verdict {pred.predicted_equal} vs formula {formula}")
                if deep and n <= ENUMERATION_CAP:
                    enum = len(enumerate_coperiod_div(n, k, r)) - len(enumerate_subsets(n, k, r))
                    report.expect(enum == formula,
                                  f"(n,k,r)=({n},{k},{r}): enumeration {enum}, formula {formula}")
    return report


def s1cvp(max_n: int, deep: bool = False) -> Report:
    report = Report("s1cvp")
    for n in range(1, max_n + 1):
        poly = thibon_poly(n)
        report.expect(poly == s1_short_poly(n), f"n={n}: generating polynomials differ")
        for k in range(1, n + 1):
            lhs = count_s_short(n, k - 1, 1 % n)
            rhs = count_cvp(n, k)
            report.expect(lhs == rhs == poly.coeff(k - 1), f"(n,k)=({n},{k}): |S_1|={lhs}, |CVP|={rhs}")
            if deep and n <= ENUMERATION_CAP:
                e_s = len(enumerate_subsets(n, k - 1, 1 % n, Universe.SHORT)) if k - 1 <= n - 1 else 0
                e_c = len(enumerate_cvp(n, k))
                report.expect(e_s == e_c == rhs, f"(n,k)=({n},{k}): enumeration {e_s} vs {e_c}")
        report.expect(sum(count_cvp(n, k) for k in range(1, n + 1)) == count_cvp_total(n),
                      f"n={n}: CVP total")
        report.expect(sum(count_sbar(n, k, 0) for k in range(n + 1)) == count_stanley_total(n),
                      f"n={n}: S̄_0 total")
    return report


def bijection(max_n: int, deep: bool = False) -> Report:
    report = Report("bijection")
    for n in range(1, max_n + 1):
        rep = verify_bijection(n)
        report.checked += rep.checked
        report.violations.extend(f"n={n}: {v}" for v in rep.violations)
        part = corollary_partition_check(n)
        report.checked += 1
        report.violations.extend(f"n={n}: {v}" for v in part.violations)
    return report


def corollaries(max_n: int, deep: bool = False) -> Report:
    report = corollary_reports(max_n)
    seq = sequence_a001840_check(4, max(4, max_n))
    report.checked += seq.checked
    report.violations.extend(seq.violations)
    return report


def chan(max_n: int, deep: bool = False, max_product: int = 40) -> Report:
    report = Report("chan")
    for n in range(1, max_n + 1):
        for q in range(2, max_product // n + 1):
            if math.gcd(n, q) != 1:
                continue
            rep = chan_total_check(n, q)
            report.expect(rep.ok, f"(n,q)=({n},{q}): multisets {rep.multisets}, necklaces {rep.necklaces}")
    return report


def run(suite: str, max_n: int, deep: bool = False) -> list[Report]:
    names = SUITES if suite == "all" else (suite,)
    return [globals()[name](max_n, deep) for name in names]
