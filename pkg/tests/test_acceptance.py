"""One test per acceptance criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed even
without ``-s``).
"""

import io
import random
import time
from math import gcd

import pytest

from monorees.adjoint import (
    constraint_rank,
    dim_adjoint_pencils,
    dim_ker_degree_one,
    gaps_brute_force,
    is_adjoint,
    nu,
    nu_bound,
    pencil_in_adjoints,
    quotient_dimension,
    random_pencil,
    representation_unique,
    sylvester_gap_count,
)
from monorees.cli import run
from monorees.euclid import InputPair, coprime_pairs, euclid_data, sers_data
from monorees.oracle import cross_check
from monorees.polyengine import InducedOrder, Polynomial, parse_module_element
from monorees.reesfamilies import (
    build_resolution,
    context,
    euler_characteristic_failures,
    f0_family,
    f0_family_recursive,
)

import test_euclid
import test_reesfamilies as golden


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def _cli(*argv):
    out = io.StringIO()
    start = time.perf_counter()
    code = run(list(argv), out, io.StringIO())
    return code, out.getvalue(), time.perf_counter() - start


def test_criterion_01_golden_generators(report):
    code, out, secs = _cli("generators", "10", "3")
    expected = "".join(line + "\n" for line in golden.GENERATORS_10_3)
    report(1, "golden (10,3) generators, byte-identical, < 1 s",
           code == 0 and out == expected and secs < 1.0, f"{secs:.3f}s")


def test_criterion_02_golden_syzygies(report):
    code1, out1, s1 = _cli("syzygies", "10", "3", "--level", "1")
    code2, out2, s2 = _cli("syzygies", "10", "3", "--level", "2")
    ctx = context(10, 3)
    _, _, f1, _ = build_resolution(ctx)
    level1 = [parse_module_element(line, 7) for line in out1.splitlines()]
    level2 = [parse_module_element(line, 10) for line in out2.splitlines()]
    want1 = [parse_module_element(t, 7) for t in golden.SYZ1_10_3.values()]
    want2 = [golden._from_labels(entries, f1.labels) for entries in golden.SYZ2_10_3]
    ok = code1 == code2 == 0 and level1 == want1 and level2 == want2 and max(s1, s2) < 1.0
    report(2, "golden (10,3) first and second syzygies, < 1 s", ok, f"{s1:.3f}s/{s2:.3f}s")


def test_criterion_03_golden_twists(report):
    res, _, _, _ = build_resolution(context(10, 3))
    f1 = [(0, 10), (1, 3), (1, 7), (2, 4), (3, 1), (4, 2), (7, 1)]
    f2 = [(1, 10), (2, 7), (3, 4), (4, 3), (7, 2)] * 2
    f3 = [(2, 10), (3, 7), (4, 4), (7, 3)]
    ok = [sorted(t) for t in res.twists[1:]] == [sorted(f1), sorted(f2), sorted(f3)]
    report(3, "golden (10,3) twists", ok)


def test_criterion_04_worked_example_14_3(report):
    pair = InputPair(14, 3)
    s = sers_data(pair, euclid_data(pair))
    sers_ok = [(s.b(n), s.c(n)) for n in range(1, 8)] == [
        (11, 3), (8, 3), (5, 3), (3, 2), (2, 1), (1, 1), (1, 0)]
    ext_ok = [s.tuple4(n) for n in range(1, 8)] == [
        (0, 1, 1, 0), (-1, 1, 1, 0), (-2, 1, 1, 0), (1, 0, -3, 1),
        (-3, 1, 4, -1), (-7, 2, 4, -1), (4, -1, -11, 3)]
    ctx = context(14, 3)
    _, f0, f1, f2 = build_resolution(ctx)
    gen_ok = [(g.to_text(ctx.order), b) for g, b in zip(f0.elements, f0.bidegrees)] == golden.GENERATORS_14_3
    syz1_ok = list(f1.elements) == [parse_module_element(t, 8) for t in golden.SYZ1_14_3.values()]
    syz2_ok = list(f2.elements) == [golden._from_labels(x, f1.labels) for x in golden.SYZ2_14_3]
    parts = dict(sers=sers_ok, extended=ext_ok, generators=gen_ok, first=syz1_ok, second=syz2_ok)
    report(4, "worked example (14,3)", all(parts.values()),
           ", ".join(k for k, v in parts.items() if not v))


def test_criterion_05_oracle_sweep(report):
    start = time.perf_counter()
    failures, count = [], 0
    for pair in coprime_pairs(30):
        ctx = context(*pair)
        _, f0, f1, f2 = build_resolution(ctx)
        r = cross_check(ctx.pair, list(f0.elements), list(f1.elements), list(f2.elements))
        count += 1
        if not r.ok:
            failures.append((tuple(pair), [k for k, v in r.flags().items() if not v]))
    secs = time.perf_counter() - start
    report(5, "oracle equivalence for every pair with d <= 30, < 10 min",
           not failures and secs < 600,
           f"{count} pairs, {len(failures)} failures, {secs:.0f}s" + (f" {failures[:3]}" if failures else ""))


def test_criterion_06_resolution_sanity(report):
    failures = []
    for pair in coprime_pairs(40):
        ctx = context(*pair)
        res, *_ = build_resolution(ctx)
        q = ctx.q
        ok = res.ranks == (1, q + 2, 2 * q, q - 1)
        ok = ok and all(c.apply(list(res.phi1)).is_zero() for c in res.phi2)
        ok = ok and all(c.apply(list(res.phi2)).is_zero() for c in res.phi3)
        ok = ok and not any(e.has_constant_term() for k in (1, 2, 3)
                            for row in res.matrix(k) for e in row)
        ok = ok and not euler_characteristic_failures(ctx.pair, 2 * ctx.d, 4)
        if not ok:
            failures.append(tuple(pair))
    report(6, "resolution sanity for d <= 40", not failures, f"failures {failures[:5]}" if failures else "")


def test_criterion_07_adjoint_numbers(report):
    checks = {}
    r10, r14 = nu(InputPair(10, 3)), nu(InputPair(14, 3))
    parts10 = sorted(x for x in r10.breakdown if x)
    parts14 = sorted(x for x in r14.breakdown if x)
    checks["nu(10,3) = 17"] = (r10.value == 17, r10.value)
    checks["breakdown(10,3) = 1+4+12"] = (parts10 == [1, 4, 12], "+".join(map(str, parts10)))
    checks["nu(14,3) = 33"] = (r14.value == 33, r14.value)
    checks["breakdown(14,3) = 4+6+23"] = (parts14 == [4, 6, 23], "+".join(map(str, parts14)))
    p14, p10 = InputPair(14, 3), InputPair(10, 3)
    bad = [ell for ell in range(12, 21) if dim_adjoint_pencils(p14, ell) != ell * ell + 3 * ell - 154]
    checks["dim Adj(14,3)"] = (not bad, bad)
    bad = [ell for ell in range(12, 21) if dim_ker_degree_one(p14, ell) != ell * ell - 11 * ell + 34]
    checks["dim ker(14,3)"] = (not bad, bad)
    bad = [(ell, dim_ker_degree_one(p10, ell)) for ell in range(5, 16)
           if dim_ker_degree_one(p10, ell) != ell * ell - 5 * ell + 10]
    checks["dim ker(10,3) = l^2-5l+10"] = (not bad, bad[:3])
    failed = [f"{k}: got {v[1]}" for k, v in checks.items() if not v[0]]
    report(7, "adjoint numbers", not failed, "; ".join(failed))


def test_criterion_08_adjoint_properties(report):
    problems = []
    for pair in coprime_pairs(60, umin=2):
        r = nu(pair)
        if len(set(r.per_ell.values())) != 1 or not 1 <= r.value <= nu_bound(pair):
            problems.append(("nu", tuple(pair)))
        if not representation_unique(pair):
            problems.append(("unique", tuple(pair)))
    for a in range(1, 51):
        for b in range(1, 51):
            if gcd(a, b) == 1 and sylvester_gap_count(a, b) != gaps_brute_force(a, b):
                problems.append(("sylvester", a, b))
    for k in range(3, 13):
        if nu(InputPair(2 * k - 1, 2)).value < (k - 2) * (k - 3) // 2:
            problems.append(("u=2", k))
    report(8, "adjoint properties sweep", not problems, f"{problems[:5]}" if problems else "")


def _t_parts(f):
    c0, c1 = {}, {}
    for m, c in f.terms.items():
        x = (0, 0) + m[2:]
        (c0 if m[0] else c1)[x] = c
    return Polynomial(c0), Polynomial(c1)


def test_criterion_09_linear_algebra(report):
    problems = []
    for d, u in [(5, 2), (7, 2), (7, 3), (10, 3)]:
        pair = InputPair(d, u)
        s = sers_data(pair, euclid_data(pair))
        f0 = f0_family(pair, s)
        fq, fq1 = f0.elements[s.q - 1], f0.elements[s.q]
        for ell in (d - 2, d):
            if quotient_dimension(pair, ell) != constraint_rank(pair, ell):
                problems.append(("rank", d, u, ell))
        rng = random.Random(1000 * d + u)
        outcomes = set()
        for _ in range(1000):
            ell = rng.choice([d - 2, d])
            A, B = random_pencil(pair, ell, rng, keep_forbidden=0.05)
            c0, c1 = _t_parts(A * fq + B * fq1)
            direct = is_adjoint(pair, c0) and is_adjoint(pair, c1)
            got = pencil_in_adjoints(pair, A, B)
            outcomes.add(got)
            if got != direct:
                problems.append(("pencil", d, u))
                break
        if outcomes != {True, False}:
            problems.append(("one-sided sample", d, u))
    report(9, "linear-algebra cross-check", not problems, f"{problems[:5]}" if problems else "")


def test_criterion_10_property_suites(report):
    problems = []
    for pair in coprime_pairs(40):
        ctx = context(*pair)
        if f0_family(ctx.pair, ctx.sers).elements != f0_family_recursive(ctx.pair, ctx.sers).elements:
            problems.append(("recursion", tuple(pair)))
        _, f0, f1, f2 = build_resolution(ctx)
        order1 = InducedOrder(f0.elements, ctx.order)
        try:
            golden._leading_terms_follow_schreyer(f1.elements, f0.elements, ctx.order, order1, f1.labels)
            if f2.elements:
                order2 = InducedOrder(f1.elements, order1)
                golden._leading_terms_follow_schreyer(f2.elements, f1.elements, order1, order2)
        except AssertionError:
            problems.append(("leading term", tuple(pair)))
    for pair in coprime_pairs(60):
        try:
            test_euclid._check_sers_invariants(pair)
            test_euclid._check_gap_growth_and_minimal_solutions(pair)
        except AssertionError:
            problems.append(("euclid", tuple(pair)))
    report(10, "property suites", not problems, f"{problems[:5]}" if problems else "")
