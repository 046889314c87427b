import time

import pytest

from monorees.errors import DeadlineExceeded, NonTermination, NotGroebner
from monorees.euclid import InputPair
from monorees.oracle import (
    cross_check,
    kernel_by_elimination,
    kernel_by_saturation,
    linear_relations,
    pair_order,
    syzygies_from_scratch,
)
from monorees.polyengine import parse_polynomial
from monorees.reesfamilies import build_resolution, context

from test_reesfamilies import GENERATORS_10_3


def _families(d, u):
    ctx = context(d, u)
    _, f0, f1, f2 = build_resolution(ctx)
    return ctx.pair, list(f0.elements), list(f1.elements), list(f2.elements)


def test_elimination_finds_golden_kernel():
    pair = InputPair(10, 3)
    order = pair_order(pair)
    got = [g.to_text(order) for g in kernel_by_elimination(pair).reduced_gb]
    assert sorted(got) == sorted(GENERATORS_10_3)


def test_saturation_finds_golden_kernel():
    pair = InputPair(10, 3)
    order = pair_order(pair)
    result = kernel_by_saturation(pair)
    assert sorted(g.to_text(order) for g in result.reduced_gb) == sorted(GENERATORS_10_3)
    assert result.iterations >= 2


def test_linear_relations_are_in_kernel():
    pair, f0, _, _ = _families(10, 3)
    rel = linear_relations(pair)
    assert rel[0] == parse_polynomial("T0^7*X2 - T1^7*X1")
    assert rel[1] == parse_polynomial("T0^3*X1 - T1^3*X0")


def test_saturation_iteration_cap():
    with pytest.raises(NonTermination):
        kernel_by_saturation(InputPair(10, 3), max_iterations=1)


def test_deadline_is_enforced():
    with pytest.raises(DeadlineExceeded):
        kernel_by_elimination(InputPair(25, 1), deadline=time.monotonic() - 1)


def test_syzygies_from_scratch_needs_groebner_basis():
    pair, f0, _, _ = _families(10, 3)
    with pytest.raises(NotGroebner):
        syzygies_from_scratch([f0[0], f0[2] + f0[5]], pair_order(pair))


@pytest.mark.parametrize("pair", [(3, 1), (5, 2), (7, 3), (10, 3), (11, 4), (14, 3), (13, 5), (17, 1)])
def test_cross_check_small_pairs(pair):
    report = cross_check(*_families(*pair))
    assert report.ok, report.flags()


def test_cross_check_detects_wrong_generators():
    pair, f0, f1, f2 = _families(10, 3)
    tampered = f0[:-1]
    report = cross_check(pair, tampered, f1, f2)
    assert not report.elimination_matches_f0
    assert not report.ok


def test_cross_check_detects_wrong_syzygy():
    pair, f0, f1, f2 = _families(14, 3)
    f1 = list(f1)
    f1[0] = f1[0] + f1[1]
    f1[1] = f1[1].scale(2)
    bad_f1 = f1[:-1]
    report = cross_check(pair, f0, bad_f1, f2)
    assert not report.syz_f0_spans_f1
