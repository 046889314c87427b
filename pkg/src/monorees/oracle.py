"""Independent recomputation of the kernel and its syzygy modules.

Nothing here uses the closed forms.  The kernel of
X0 -> Z T0^d, X1 -> Z T0^(d-u) T1^u, X2 -> Z T1^d is found twice: by
eliminating Z from the graph ideal, and by saturating the ideal of the two
obvious linear relations with respect to T0*T1.  Syzygy modules come from
Schreyer's construction applied to whatever basis the caller hands in.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import NonTermination, NotGroebner
from .euclid import InputPair, euclid_data, sers_data
from .polyengine import (
    ELIMINATION_Z,
    InducedOrder,
    Polynomial,
    TermOrder,
    buchberger,
    is_groebner,
    lex_order,
    module_equal,
    reduce_basis,
    syzygy_basis,
)
from .polyengine.monomial import Z, mono


@dataclass(frozen=True)
class KernelResult:
    reduced_gb: tuple[Polynomial, ...]
    raw_gb: tuple[Polynomial, ...]
    iterations: int = 0


def pair_order(pair: InputPair) -> TermOrder:
    """The lex order on T, X matching the sign of sigma_q for this pair."""
    s = sers_data(pair, euclid_data(pair))
    return lex_order(s.sigma(s.q))


def _free_of_aux(g: Polynomial) -> bool:
    return all(m[Z] == 0 for m in g.terms)


def kernel_by_elimination(pair: InputPair, deadline: float | None = None) -> KernelResult:
    d, u = pair
    base = pair_order(pair)
    elim = TermOrder(ELIMINATION_Z, base)
    gens = [
        Polynomial.binomial(mono(X0=1), mono(Z=1, T0=d)),
        Polynomial.binomial(mono(X1=1), mono(Z=1, T0=d - u, T1=u)),
        Polynomial.binomial(mono(X2=1), mono(Z=1, T1=d)),
    ]
    raw = buchberger(gens, elim, deadline)
    kept = [g for g in raw if _free_of_aux(g)]
    return KernelResult(tuple(reduce_basis(kept, base, check=False)), tuple(raw))


def linear_relations(pair: InputPair) -> list[Polynomial]:
    """The two relations of bidegree (., 1) that every such kernel contains."""
    d, u = pair
    return [
        Polynomial.binomial(mono(T0=d - u, X2=1), mono(T1=d - u, X1=1)),
        Polynomial.binomial(mono(T0=u, X1=1), mono(T1=u, X0=1)),
    ]


def colon_by_monomial(ideal: list[Polynomial], w: tuple, order: TermOrder,
                      deadline: float | None = None) -> list[Polynomial]:
    """Reduced GB of ideal : w for a monomial w in T, X.

    Uses ideal : w = (ideal intersect <w>) / w, with the intersection
    computed as <A*g, (1-A)*w> eliminated in an auxiliary variable A (stored
    in the sixth exponent slot).
    """
    elim = TermOrder(ELIMINATION_Z, order)
    aux = Polynomial.monomial(mono(Z=1))
    wpoly = Polynomial.monomial(w)
    gens = [aux * g for g in ideal] + [wpoly - aux * wpoly]
    raw = buchberger(gens, elim, deadline)
    meet = [g for g in raw if _free_of_aux(g)]
    quotient = []
    for g in meet:
        terms = {}
        for m, c in g.terms.items():
            terms[tuple(a - b for a, b in zip(m, w))] = c
        quotient.append(Polynomial(terms))
    return reduce_basis(quotient, order, check=False)


def kernel_by_saturation(pair: InputPair, deadline: float | None = None,
                         max_iterations: int | None = None) -> KernelResult:
    """Saturate the two linear relations by T0*T1, one colon at a time."""
    d, _ = pair
    order = pair_order(pair)
    cap = d * d if max_iterations is None else max_iterations
    current = reduce_basis(buchberger(linear_relations(pair), order, deadline), order, check=False)
    w = mono(T0=1, T1=1)
    for it in range(1, cap + 1):
        nxt = colon_by_monomial(current, w, order, deadline)
        if nxt == current:
            return KernelResult(tuple(current), tuple(current), it)
        current = nxt
    raise NonTermination(f"saturation did not stabilise within {cap} colon steps")


def syzygies_from_scratch(family: list, order) -> list:
    """Reduced Groebner basis of the syzygy module of ``family``.

    ``family`` must be a Groebner basis under ``order``; the Schreyer
    syzygies then form a Groebner basis under the induced order, which is
    reduced before returning.
    """
    family = list(family)
    if not is_groebner(family, order):
        raise NotGroebner("syzygies_from_scratch needs a Groebner basis")
    raw = syzygy_basis(family, order)
    if not raw:
        return []
    return reduce_basis(raw, InducedOrder(family, order), check=True)


@dataclass
class OracleReport:
    pair: InputPair
    elimination_matches_f0: bool = False
    saturation_matches_f0: bool = False
    elimination_equals_saturation: bool = False
    f0_is_reduced_gb: bool = False
    syz_f0_spans_f1: bool = False
    syz_f1_spans_f2: bool = False
    syz_f2_is_zero: bool = False
    saturation_steps: int = 0
    seconds: dict = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {k: v for k, v in self.__dict__.items() if isinstance(v, bool)}

    @property
    def ok(self) -> bool:
        return all(self.flags().values())


def cross_check(pair: InputPair, f0: list, f1: list, f2: list,
                deadline: float | None = None) -> OracleReport:
    """Compare the supplied families against independently computed ones."""
    report = OracleReport(pair)
    order = pair_order(pair)
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        report.seconds[name] = round(now - clock, 3)
        clock = now

    elim = kernel_by_elimination(pair, deadline)
    lap("elimination")
    sat = kernel_by_saturation(pair, deadline)
    report.saturation_steps = sat.iterations
    lap("saturation")
    monic_f0 = sorted((g.monic(order) for g in f0), key=str)
    report.elimination_matches_f0 = sorted(elim.reduced_gb, key=str) == monic_f0
    report.saturation_matches_f0 = sorted(sat.reduced_gb, key=str) == monic_f0
    report.elimination_equals_saturation = (
        module_equal(list(elim.reduced_gb), list(sat.reduced_gb), order, deadline)
        and module_equal(list(elim.reduced_gb), f0, order, deadline)
    )
    try:
        report.f0_is_reduced_gb = is_groebner(f0, order) and (
            reduce_basis(f0, order, check=False) == sorted(
                monic_f0, key=lambda g: order.key(*g.leading_term(order)[1]), reverse=True))
    except NotGroebner:
        report.f0_is_reduced_gb = False
    lap("f0_check")
    if not report.f0_is_reduced_gb:
        return report
    order1 = InducedOrder(f0, order)
    syz0 = syzygies_from_scratch(f0, order)
    report.syz_f0_spans_f1 = module_equal(syz0, f1, order1, deadline)
    lap("syz_f0")
    try:
        syz1 = syzygies_from_scratch(f1, order1)
    except NotGroebner:
        return report
    order2 = InducedOrder(f1, order1)
    report.syz_f1_spans_f2 = module_equal(syz1, f2, order2, deadline)
    lap("syz_f1")
    if f2:
        try:
            report.syz_f2_is_zero = not syzygies_from_scratch(f2, order2)
        except NotGroebner:
            report.syz_f2_is_zero = False
    else:
        report.syz_f2_is_zero = True
    lap("syz_f2")
    return report
