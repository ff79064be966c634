"""The map Psi from CVP(n, k) u CVP(n, k+1) onto L+(n, k), and its inverse.

Forward: write the permutation as one n-cycle (a_1, ..., a_n) and mark each
a_i <= k with a 1.  The resulting necklace is primitive, or of the form
(vv) with v primitive, in which case the image is (v).

Inverse: rank the cyclic shifts of the word by their partial-sum parity
words, largest first; the ranks (a_1, ..., a_n) are the cycle.  For a
half-length word v the doubled word vv produces tied pairs of shifts j and
j + n/2; their relative order is propagated from one pair to the next and
flipped whenever the letter between them is a 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AmbiguousAnchor, NotCyclic, NotInDomain, ShapeViolation, UnexpectedCoperiod
from .perms import Permutation, _as_perm, enumerate_cvp, is_cyclic
from .words import BinaryWord, Necklace, _as_word, canonical_form, enumerate_lplus, enumerate_lyndon


@dataclass(frozen=True)
class RankedShift:
    index: int
    shifted: BinaryWord
    partial_sum: BinaryWord
    rank: int


def partial_sums(bits) -> tuple[int, ...]:
    out = []
    acc = 0
    for b in bits:
        acc ^= b
        out.append(acc)
    return tuple(out)


def has_threshold_shape(p: Permutation, k: int) -> bool:
    """sigma_1 > ... > sigma_k and sigma_{k+1} < ... < sigma_n."""
    s = p.oneline
    return (all(s[i] > s[i + 1] for i in range(k - 1))
            and all(s[i] < s[i + 1] for i in range(k, len(s) - 1)))


def cycle_word(p, k: int, start: int = 1) -> BinaryWord:
    """The cycle of p read from ``start``, each entry <= k written as 1."""
    p = _as_perm(p)
    return BinaryWord(tuple(1 if a <= k else 0 for a in p.cycle_from(start)))


def psi(p, k: int, start: int = 1) -> Necklace:
    p = _as_perm(p)
    n = p.n
    if not 0 <= k <= n:
        raise ShapeViolation(f"threshold k={k} outside 0..{n}")
    if not is_cyclic(p):
        raise NotCyclic(f"{p} is not a single n-cycle")
    if not has_threshold_shape(p, k):
        raise ShapeViolation(f"{p} is not in CVP({n},{k}) u CVP({n},{k + 1})")
    word = cycle_word(p, k, start)
    nk = canonical_form(word)
    if nk.coperiod == 1:
        return nk
    if nk.coperiod == 2:
        half = BinaryWord(word.bits[: n // 2])
        if n % 2 or k % 4 != 2 or half.weight % 2 == 0:
            raise UnexpectedCoperiod(f"(vv) form with n={n}, k={k}, |v|_1={half.weight}")
        return canonical_form(half)
    raise UnexpectedCoperiod(f"co-period {nk.coperiod} for {p} at k={k}")


def _shift_table(word: tuple[int, ...]) -> list[tuple[tuple, tuple]]:
    n = len(word)
    out = []
    for j in range(n):
        shifted = word[j:] + word[:j]
        out.append((shifted, partial_sums(shifted)))
    return out


def _ranks(word: tuple[int, ...], anchor: bool | None) -> list[int]:
    """Ranks a_1..a_n (1 = largest partial-sum word).

    With ``anchor`` set, ``word`` is vv and tied pairs (j, j + n/2) are ordered
    by the propagation rule, starting from a_1 < a_{1+n/2} iff anchor.
    """
    n = len(word)
    table = _shift_table(word)
    sums = [s for _, s in table]
    above = [sum(1 for t in sums if t > s) for s in sums]
    if anchor is None:
        return [b + 1 for b in above]
    h = n // 2
    ranks = [0] * n
    first_smaller = anchor
    for j in range(h):
        lo, hi = above[j] + 1, above[j] + 2
        ranks[j], ranks[j + h] = (lo, hi) if first_smaller else (hi, lo)
        if word[j] == 1:
            first_smaller = not first_smaller
    return ranks


def _classify(w: BinaryWord, n: int, k: int) -> bool:
    """True for a full-length word, False for the halved case; NotInDomain otherwise."""
    m = w.length
    nk = canonical_form(w) if m else None
    if m == n and nk.coperiod == 1 and w.weight == k:
        return True
    if (m and 2 * m == n and k % 4 == 2 and nk.coperiod == 1 and 2 * w.weight == k):
        return False
    raise NotInDomain(f"{w} is not in L+({n},{k})")


def psi_inverse_detail(w, n: int, k: int) -> tuple[Permutation, list[RankedShift]]:
    w = _as_word(w)
    full = _classify(w, n, k)
    word = w.bits if full else w.bits * 2
    table = _shift_table(word)
    anchors = [None] if full else [True, False]
    results = {}
    for anchor in anchors:
        ranks = _ranks(word, anchor)
        perm = Permutation.from_cycle(ranks)
        if is_cyclic(perm) and has_threshold_shape(perm, k):
            results.setdefault(perm, ranks)
    if len(results) != 1:
        if full:
            raise AssertionError(f"inverse construction left the domain for {w}, n={n}, k={k}")
        raise AmbiguousAnchor(f"{len(results)} valid anchor assignments for {w}, n={n}, k={k}")
    (perm, ranks), = results.items()
    rows = [RankedShift(j + 1, BinaryWord(sh), BinaryWord(ps), ranks[j])
            for j, (sh, ps) in enumerate(table)]
    return perm, rows


def psi_inverse(w, n: int, k: int) -> Permutation:
    return psi_inverse_detail(w, n, k)[0]


def cvp_pair(n: int, k: int) -> list[Permutation]:
    """CVP(n, k) u CVP(n, k+1), with the empty conventions at k = 0 and k = n."""
    out = []
    for pos in (k, k + 1):
        if 1 <= pos <= n:
            out.extend(enumerate_cvp(n, pos))
    return sorted(out)


@dataclass
class BijectionReport:
    n: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_bijection(n: int) -> BijectionReport:
    """Exhaustive check of Psi on CVP(n, k) u CVP(n, k+1) for every 0 <= k <= n."""
    report = BijectionReport(n)
    for k in range(n + 1):
        domain = cvp_pair(n, k)
        target = {str(w) for w in enumerate_lplus(n, k)}
        images = {}
        for p in domain:
            report.checked += 1
            try:
                img = psi(p, k)
            except Exception as exc:  # report, keep sweeping
                report.violations.append(f"psi({p},{k}) raised {exc}")
                continue
            images.setdefault(str(img), []).append(p)
            try:
                back = psi_inverse(img.canonical, n, k)
            except Exception as exc:
                report.violations.append(f"psi_inverse({img},{n},{k}) raised {exc}")
                continue
            if back != p:
                report.violations.append(f"round trip {p} -> {img} -> {back} at k={k}")
        for img, pre in images.items():
            if len(pre) > 1:
                report.violations.append(f"k={k}: {img} hit by {[str(p) for p in pre]}")
        if set(images) != target:
            report.violations.append(
                f"k={k}: image {sorted(images)} != L+({n},{k}) {sorted(target)}")
        for w in target:
            report.checked += 1
            try:
                p = psi_inverse(w, n, k)
                img = psi(p, k)
            except Exception as exc:
                report.violations.append(f"inverse side {w} at k={k} raised {exc}")
                continue
            if str(img) != w:
                report.violations.append(f"round trip {w} -> {p} -> {img} at k={k}")
    return report


@dataclass
class PartitionReport:
    n: int
    cvp_total: int
    odd_image_size: int
    even_image_size: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def corollary_partition_check(n: int) -> PartitionReport:
    """Psi over odd k is a bijection onto the odd-weight Lyndon words of length n;
    over even k onto the union of L+(n, k) for even k."""
    cvp_all = [p for k in range(1, n + 1) for p in enumerate_cvp(n, k)]
    sizes = {}
    violations = []
    for parity in (1, 0):
        images = []
        for k in range(parity, n + 1, 2):
            for p in cvp_pair(n, k):
                img = psi(p, k)
                images.append((img.length, str(img)))
        if parity:
            target = {(n, str(w)) for k in range(1, n + 1, 2) for w in enumerate_lyndon(n, k)}
        else:
            target = {(len(w), str(w)) for k in range(0, n + 1, 2) for w in enumerate_lplus(n, k)}
        label = "odd" if parity else "even"
        if len(images) != len(cvp_all):
            violations.append(f"{label}: domain size {len(images)} != |CVP({n})| = {len(cvp_all)}")
        if len(set(images)) != len(images):
            violations.append(f"{label}: Psi not injective")
        if set(images) != target:
            violations.append(f"{label}: image differs from target set")
        sizes[label] = len(set(images))
    return PartitionReport(n, len(cvp_all), sizes["odd"], sizes["even"], violations)
