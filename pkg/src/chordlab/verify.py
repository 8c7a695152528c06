"""Verification suites cross-checking recurrences, enumeration, series and bijections.

Every suite runs its recurrence-level identities up to ``n_max`` and its
enumeration-level identities up to ``min(n_max, cap)``; the report states
the range actually covered.  Reports contain no timings, so they are
byte-identical for any thread count.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, factorial

from . import triangles
from .analysis import is_log_concave, is_unimodal, kurtz_hypothesis_check, trim_zeros
from .bijections import (MarkedDiagram, dyck_paths, dyck_to_matching, marked_diagrams, matching_to_dyck, phi,
                         rewrap, unwrap)
from .diagram import parse_chord, parse_diagram
from .enumeration import DiagramStream, Filter, catalan, count, double_factorial
from .errors import ValidationError
from .powerseries import (egf_L_column, riordan_short_chord_total, short_chord_total_closed_form,
                          sqrt_one_minus_2t, RationalSeries)
from .statistics import Statistic, histogram, lr_pairs, short_chords

__all__ = ["SUITES", "Check", "run_suite", "render_report", "UNWRAP_N3"]

SUITES = ("recurrence", "egf", "bijection", "rowsum", "expectation", "narayana-transport", "reversal")

# Every marked short chord on three chords and the diagram it unwraps to.
UNWRAP_N3 = [
    ("(1,6)(2,5)(3,4)", "(3,4)", "(1,4)(2,6)(3,5)"),
    ("(1,6)(2,3)(4,5)", "(2,3)", "(1,3)(2,6)(4,5)"),
    ("(1,6)(2,3)(4,5)", "(4,5)", "(1,5)(2,6)(3,4)"),
    ("(1,4)(2,3)(5,6)", "(2,3)", "(1,3)(2,4)(5,6)"),
    ("(1,4)(2,3)(5,6)", "(5,6)", "(1,6)(2,5)(3,4)"),
    ("(1,2)(3,6)(4,5)", "(1,2)", "(1,2)(3,6)(4,5)"),
    ("(1,2)(3,6)(4,5)", "(4,5)", "(1,5)(2,3)(4,6)"),
    ("(1,2)(3,4)(5,6)", "(1,2)", "(1,2)(3,4)(5,6)"),
    ("(1,2)(3,4)(5,6)", "(3,4)", "(1,4)(2,3)(5,6)"),
    ("(1,2)(3,4)(5,6)", "(5,6)", "(1,6)(2,3)(4,5)"),
    ("(1,3)(2,4)(5,6)", "(5,6)", "(1,6)(2,4)(3,5)"),
    ("(1,2)(3,5)(4,6)", "(1,2)", "(1,2)(3,5)(4,6)"),
    ("(1,5)(2,6)(3,4)", "(3,4)", "(1,4)(2,5)(3,6)"),
    ("(1,3)(2,6)(4,5)", "(4,5)", "(1,5)(2,4)(3,6)"),
    ("(1,5)(2,3)(4,6)", "(2,3)", "(1,3)(2,5)(4,6)"),
]


@dataclass(frozen=True)
class Check:
    name: str
    scope: str
    passed: bool
    counterexample: str | None = None


def _scope(lo, hi):
    return f"n = {lo}..{hi}" if hi >= lo else "n = (empty range)"


def _first_failure(cases):
    """``cases`` yields ``(label, ok)``; returns the first failing label or None."""
    for label, ok in cases:
        if not ok:
            return label
    return None


def _check(name, scope, cases):
    bad = _first_failure(cases)
    return Check(name, scope, bad is None, bad)


def _dense_row(hist, lo, hi):
    return [hist.counts.get(v, 0) for v in range(lo, hi + 1)]


def _suite_recurrence(n_max, m, threads):
    out = []

    def l_vs_enum():
        for n in range(0, m + 1):
            got = _dense_row(histogram(n, Filter.all(), Statistic.sc(1), threads), 0, n)
            want = triangles.row("L", n)
            yield f"n={n}: recurrence {want} != enumeration {got}", got == want
    out.append(_check("L(n,s) equals the enumerated short-chord distribution", _scope(0, m), l_vs_enum()))

    def t_vs_enum():
        for n in range(1, m + 1):
            got = _dense_row(histogram(n, Filter.all(), Statistic.lr(), threads), 1, n)
            want = triangles.row("T", n)
            yield f"n={n}: recurrence {want} != enumeration {got}", got == want
    out.append(_check("T(n,k) equals the enumerated LR-pair distribution", _scope(1, m), t_vs_enum()))

    def minlen_polys():
        for n in range(1, m + 1):
            for k in range(1, min(n, 3) + 1):
                h = histogram(n, Filter.min_length(k), Statistic.sc(k), threads)
                total = triangles.sullivan(n, k, cap=m)
                yield f"n={n}, k={k}: polynomial at q=1 is {h.total}, count is {total}", h.total == total
    out.append(_check("L_n^k(1) equals the number of diagrams with all chords >= k (k <= 3)",
                      _scope(1, m), minlen_polys()))

    def subdiagonal():
        for n in range(1, n_max + 1):
            yield f"n={n}: L(n,n-1)={triangles.L(n, n - 1)}", triangles.L(n, n - 1) == comb(n, 2)
    out.append(_check("L(n,n-1) = C(n,2)", _scope(1, n_max), subdiagonal()))

    def diagonal():
        for n in range(0, n_max + 1):
            yield f"n={n}: L(n,n)={triangles.L(n, n)}", triangles.L(n, n) == 1
    out.append(_check("L(n,n) = 1", _scope(0, n_max), diagonal()))

    def e_boundary():
        for n in range(1, n_max + 1):
            yield f"n={n}: E(n,0)={triangles.E(n, 0)}", triangles.E(n, 0) == 1
    out.append(_check("E(n,0) = 1", _scope(1, n_max), e_boundary()))
    return out


def _suite_rowsum(n_max, m, threads):
    out = []
    out.append(_check("sum_s L(n,s) = (2n-1)!!", _scope(0, n_max), (
        (f"n={n}: row sum {sum(triangles.row('L', n))}", sum(triangles.row("L", n)) == double_factorial(n))
        for n in range(0, n_max + 1))))
    out.append(_check("sum_k T(n,k) = (2n-1)!!", _scope(1, n_max), (
        (f"n={n}: row sum {sum(triangles.row('T', n))}", sum(triangles.row("T", n)) == double_factorial(n))
        for n in range(1, n_max + 1))))
    out.append(_check("sum_k E(n,k) = (2n-1)!!", _scope(1, n_max), (
        (f"n={n}: row sum {sum(triangles.row('E', n))}", sum(triangles.row("E", n)) == double_factorial(n))
        for n in range(1, n_max + 1))))

    def enum_total():
        for n in range(0, m + 1):
            total = histogram(n, Filter.all(), Statistic.lr(), threads).total
            yield f"n={n}: enumerated {total}", total == double_factorial(n) == count(n)
    out.append(_check("number of enumerated diagrams = (2n-1)!!", _scope(0, m), enum_total()))

    def catalan_counts():
        for n in range(0, m + 1):
            nc, nn = count(n, Filter.noncrossing()), count(n, Filter.nonnesting())
            yield f"n={n}: noncrossing {nc}, nonnesting {nn}, Catalan {catalan(n)}", nc == nn == catalan(n)
    out.append(_check("noncrossing and nonnesting counts = Catalan", _scope(0, m), catalan_counts()))
    return out


def _suite_expectation(n_max, m, threads):
    out = []

    def weighted():
        for n in range(0, n_max + 1):
            total = sum(s * v for s, v in enumerate(triangles.row("L", n)))
            yield f"n={n}: sum_s s*L(n,s) = {total}", total == (double_factorial(n) if n else 0)
    out.append(_check("sum_s s*L(n,s) = (2n-1)!!", _scope(0, n_max), weighted()))

    def weighted_enum():
        for n in range(1, m + 1):
            h = histogram(n, Filter.all(), Statistic.sc(1), threads)
            total = sum(s * c for s, c in h.counts.items())
            yield f"n={n}: enumerated short chords {total}", total == double_factorial(n)
    out.append(_check("total short chords over all diagrams = (2n-1)!!", _scope(1, m), weighted_enum()))

    def unimodal():
        for n in range(0, n_max + 1):
            yield f"n={n}: row {triangles.row('L', n)}", is_unimodal(trim_zeros(triangles.row("L", n))).unimodal
    out.append(_check("L rows unimodal", _scope(0, n_max), unimodal()))

    def injections():
        for n in range(1, n_max + 1):
            r = triangles.row("L", n)
            yield f"n={n}: L(n,0)={r[0]} > L(n,1)={r[1]}", r[0] <= r[1]
            for j in range(1, n):
                yield f"n={n}: L(n,{j})={r[j]} < L(n,{j + 1})={r[j + 1]}", r[j] >= r[j + 1]
    out.append(_check("L(n,0) <= L(n,1) and L(n,j) >= L(n,j+1) for j >= 1", _scope(1, n_max), injections()))
    return out


def _unwrap_images(stream):
    return [unwrap(md) for md in marked_diagrams(stream)]


def _suite_bijection(n_max, m, threads):
    out = []

    def unwrap_bijective():
        for n in range(1, m + 1):
            parts = DiagramStream(n).split(2 * n - 1)
            if threads > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    chunks = list(pool.map(_unwrap_images, parts))
            else:
                chunks = [_unwrap_images(p) for p in parts]
            images = Counter(d for chunk in chunks for d in chunk)
            everything = list(DiagramStream(n))
            dup = next((d for d, c in sorted(images.items()) if c > 1), None)
            yield f"n={n}: {dup} is hit twice", dup is None
            missing = next((d for d in everything if d not in images), None)
            yield f"n={n}: {missing} is not hit", missing is None
            yield f"n={n}: {len(images)} images for {len(everything)} diagrams", len(images) == len(everything)
    out.append(_check("unwrap: (diagram, short chord) -> diagram is a bijection", _scope(1, m), unwrap_bijective()))

    def round_trips():
        for n in range(1, m + 1):
            for d in DiagramStream(n):
                md = rewrap(d)
                yield f"unwrap(rewrap({d})) = {unwrap(md)}", unwrap(md) == d
                for c in d.chords():
                    if c.length == 1:
                        md = MarkedDiagram(d, c)
                        back = rewrap(unwrap(md))
                        yield f"rewrap(unwrap({md})) = {back}", back == md
    out.append(_check("rewrap is a two-sided inverse of unwrap", _scope(1, m), round_trips()))

    def golden():
        if m < 3:
            return
        for src, mark, dst in UNWRAP_N3:
            md = MarkedDiagram(parse_diagram(src), parse_chord(mark))
            got = unwrap(md)
            yield f"unwrap({src}, {mark}) = {got}, expected {dst}", got.to_text() == dst
        images = sorted(dst for _, _, dst in UNWRAP_N3)
        yield "reference table does not cover all 15 diagrams", images == sorted(d.to_text() for d in DiagramStream(3))
    out.append(_check("unwrap reproduces the n=3 reference table", "n = 3" if m >= 3 else "skipped", golden()))

    def injective_phi():
        for n in range(1, m + 1):
            by_class: dict[int, list] = {}
            for d in DiagramStream(n):
                by_class.setdefault(short_chords(d), []).append(d)
            for j, members in sorted(by_class.items()):
                if j == 1:
                    continue
                target = 1 if j == 0 else j - 1
                images = [phi(d, j) for d in members]
                bad = next((d for d, im in zip(members, images) if short_chords(im) != target), None)
                yield f"n={n}, j={j}: phi({bad}) has the wrong number of short chords", bad is None
                yield f"n={n}, j={j}: phi is not injective", len(set(images)) == len(images)
    out.append(_check("phi_j is injective into the expected short-chord class", _scope(1, m), injective_phi()))

    def dyck_round_trip():
        for n in range(0, m + 1):
            for d in DiagramStream(n, Filter.nonnesting()):
                back = dyck_to_matching(matching_to_dyck(d))
                yield f"{d} -> {matching_to_dyck(d)} -> {back}", back == d
            for p in dyck_paths(n):
                back = matching_to_dyck(dyck_to_matching(p))
                yield f"{p} -> {dyck_to_matching(p)} -> {back}", back == p
    out.append(_check("Dyck path <-> nonnesting diagram round trips", _scope(0, m), dyck_round_trip()))
    return out


def _suite_narayana(n_max, m, threads):
    out = []

    def transport():
        for n in range(1, m + 1):
            want = triangles.row("narayana", n)
            peaks = Counter(p.peaks for p in dyck_paths(n))
            peak_row = [peaks.get(k, 0) for k in range(1, n + 1)]
            lr = _dense_row(histogram(n, Filter.nonnesting(), Statistic.lr(), threads), 1, n)
            yield f"n={n}: peaks {peak_row}, nonnesting LR {lr}, Narayana {want}", peak_row == lr == want
            mapped = Counter(dyck_to_matching(p).partner for p in dyck_paths(n))
            yield f"n={n}: Dyck map is not injective", len(mapped) == catalan(n)
    out.append(_check("Dyck peaks = nonnesting LR pairs = Narayana row", _scope(1, m), transport()))

    def peaks_to_lr():
        for n in range(1, m + 1):
            for p in dyck_paths(n):
                d = dyck_to_matching(p)
                yield f"{p}: {p.peaks} peaks but {d} has {lr_pairs(d)} LR pairs", p.peaks == lr_pairs(d)
    out.append(_check("each Dyck path's peaks equal its matching's LR pairs", _scope(1, m), peaks_to_lr()))

    def noncrossing():
        for n in range(1, m + 1):
            got = _dense_row(histogram(n, Filter.noncrossing(), Statistic.sc(1), threads), 1, n)
            want = triangles.row("narayana", n)
            yield f"n={n}: noncrossing short chords {got}, Narayana {want}", got == want
    out.append(_check("noncrossing short-chord distribution = Narayana row", _scope(1, m), noncrossing()))
    return out


def _suite_reversal(n_max, m, threads):
    out = []

    def reversal():
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                yield f"T({n},{k})={triangles.T(n, k)} but E({n},{n - k})={triangles.E(n, n - k)}", \
                    triangles.T(n, k) == triangles.E(n, n - k)
    out.append(_check("T(n,k) = E(n,n-k)", _scope(1, n_max), reversal()))
    out.append(_check("T(n,1) = n!", _scope(1, n_max), (
        (f"T({n},1)={triangles.T(n, 1)}", triangles.T(n, 1) == factorial(n)) for n in range(1, n_max + 1))))
    out.append(_check("T rows log-concave", _scope(1, n_max), (
        (f"n={n}: first violation at column {is_log_concave(triangles.row('T', n)).violation}",
         is_log_concave(triangles.row("T", n)).log_concave) for n in range(1, n_max + 1))))
    out.append(_check("Kurtz hypotheses hold for (1,1,-1,1,-1,1)", "coefficients",
                      [("(1,1,-1,1,-1,1) rejected", kurtz_hypothesis_check(1, 1, -1, 1, -1, 1))]))

    def kurtz_form():
        # T(n,k) = (a1 n + a2 k + a3) T(n-1,k) + (b1 n + b2 k + b3) T(n-1,k-1)
        for n in range(2, n_max + 1):
            for k in range(1, n + 1):
                prev_k = triangles.T(n - 1, k) if k <= n - 1 else 0
                prev_k1 = triangles.T(n - 1, k - 1) if k >= 2 else 0
                rhs = (n + k - 1) * prev_k + (n - k + 1) * prev_k1
                if k == 1:
                    continue  # boundary T(n,1) = n! is checked separately
                yield f"T({n},{k})={triangles.T(n, k)} vs {rhs}", triangles.T(n, k) == rhs
    out.append(_check("T satisfies the Kurtz-form recurrence with those coefficients", _scope(2, n_max),
                      kurtz_form()))
    return out


def _suite_egf(n_max, m, threads):
    out = []
    order = n_max

    def columns():
        for s in range(0, 7):
            values = egf_L_column(s, order).egf_values()
            for n, v in enumerate(values):
                yield f"s={s}, n={n}: n![t^n] = {v}, L = {triangles.L(n, s)}", \
                    v.denominator == 1 and v == triangles.L(n, s)
    out.append(_check("n![t^n] of column EGF s equals L(n,s) for s <= 6", _scope(0, order), columns()))

    def product():
        prod = riordan_short_chord_total(order)
        closed = short_chord_total_closed_form(order)
        yield f"product {prod} != closed form {closed}", prod == closed
        for n, v in enumerate(prod.egf_values()):
            want = double_factorial(n) if n else 0
            yield f"n={n}: n![t^n] = {v}, expected {want}", v == want
    out.append(_check("g*f*exp(f) = 1/sqrt(1-2t) - 1 with coefficients (2n-1)!!", _scope(0, order), product()))

    def square():
        root = sqrt_one_minus_2t(order)
        target = RationalSeries([1, -2], order)
        yield f"sqrt(1-2t)^2 = {root * root}", root * root == target
    out.append(_check("sqrt(1-2t)^2 = 1-2t", f"order {order}", square()))
    return out


_RUNNERS = {
    "recurrence": _suite_recurrence,
    "egf": _suite_egf,
    "bijection": _suite_bijection,
    "rowsum": _suite_rowsum,
    "expectation": _suite_expectation,
    "narayana-transport": _suite_narayana,
    "reversal": _suite_reversal,
}


def run_suite(suite: str, n_max: int, threads: int = 1, cap: int | None = None) -> list[Check]:
    if suite not in _RUNNERS:
        raise ValidationError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if n_max < 0:
        raise ValidationError(f"n_max must be >= 0, got {n_max}")
    if n_max > triangles.RECURRENCE_LIMIT:
        raise ValidationError(f"n_max must be <= {triangles.RECURRENCE_LIMIT}")
    cap = triangles.enumeration_cap() if cap is None else cap
    return _RUNNERS[suite](n_max, min(n_max, cap), max(1, threads))


def render_report(suite: str, checks: list[Check]) -> str:
    lines = [f"suite: {suite}"]
    for c in checks:
        lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name} ({c.scope})")
        if not c.passed:
            lines.append(f"       first counterexample: {c.counterexample}")
    passed = sum(c.passed for c in checks)
    verdict = "PASS" if passed == len(checks) else "FAIL"
    lines.append(f"result: {verdict} ({passed}/{len(checks)} checks)")
    return "\n".join(lines) + "\n"
