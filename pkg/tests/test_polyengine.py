from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monorees.errors import NotGroebner, NotHomogeneous, RankMismatch, ZeroElement
from monorees.polyengine import (
    ELIMINATION_Z,
    LEX_SIGMA_NONPOSITIVE,
    LEX_SIGMA_POSITIVE,
    InducedOrder,
    ModuleElement,
    Polynomial,
    TermOrder,
    buchberger,
    compare,
    is_groebner,
    module_equal,
    mono,
    normal_form,
    parse_module_element,
    parse_polynomial,
    reduce,
    reduce_basis,
    s_polynomial,
    syzygy_basis,
)
from monorees.polyengine.monomial import NVARS, divides, lcm, mul

POS = TermOrder(LEX_SIGMA_POSITIVE)
NONPOS = TermOrder(LEX_SIGMA_NONPOSITIVE)
ORDERS = [POS, NONPOS, TermOrder(ELIMINATION_Z, NONPOS)]

monomials = st.tuples(*[st.integers(0, 3)] * 5, st.just(0))
orders = st.sampled_from(ORDERS)
coeffs = st.integers(-4, 4).filter(bool)
polys = st.dictionaries(monomials, coeffs, max_size=5).map(Polynomial)


def P(text):
    return parse_polynomial(text)


# --- monomial orders ---


@given(monomials, monomials, monomials, orders)
def test_order_is_monomial_order(a, b, c, order):
    ka, kb = order.key(a), order.key(b)
    assert (ka == kb) == (a == b)
    if ka < kb:
        assert order.key(mul(a, c)) < order.key(mul(b, c))
    assert order.key(mul(a, c)) >= order.key(a)


@given(monomials, monomials, monomials, orders)
def test_order_transitive(a, b, c, order):
    if compare(a, b, order) < 0 and compare(b, c, order) < 0:
        assert compare(a, c, order) < 0


def test_lex_priorities():
    x0, x1 = mono(X0=1), mono(X1=1)
    assert compare(x0, x1, POS) == 1
    assert compare(x0, x1, NONPOS) == -1
    assert compare(mono(T1=1), mono(X0=5), POS) == 1
    elim = TermOrder(ELIMINATION_Z, POS)
    assert compare(mono(Z=1), mono(T0=9), elim) == 1
    with pytest.raises(ValueError):
        TermOrder("Grevlex")


def test_module_order_position_tiebreak():
    m = mono(X1=1)
    assert compare((m, 0), (m, 1), POS) == 1
    fam = [P("T0^3*X1 - T1^3*X0"), P("T0*X0^2*X2 - T1*X1^3")]
    ind = InducedOrder(fam, POS)
    # X0*e1 -> T0^3*X0*X1 ; T0^2*e2 -> T0^3*X0^2*X2 ; lex with T first ties on T, X0 decides
    assert compare((mono(X0=1), 0), (mono(T0=2), 1), ind) == -1
    with pytest.raises(RankMismatch):
        ind.key(m, 2)


# --- arithmetic, parsing and formatting ---


def test_format_canonical():
    f = P("-T1^7*X1 + T0^7*X2")
    assert f.to_text(POS) == "T0^7*X2 - T1^7*X1"
    assert Polynomial().to_text() == "0"
    assert P("2*X0 - 1/2*X1").to_text(POS) == "2*X0 - 1/2*X1"
    assert P("3").to_text() == "3"
    v = parse_module_element("X0*e1 - T0^3*e2", 3)
    assert v.to_text(POS) == "-T0^3*e2 + X0*e1"
    assert v.component(1) == P("-T0^3")


def test_parse_rejects_garbage():
    for bad in ("T0^", "X3", "T0 T1", "X0*e1 + X1", "X0*e1*e2"):
        with pytest.raises(ValueError):
            parse_module_element(bad, 3) if "e" in bad else parse_polynomial(bad)
    with pytest.raises(RankMismatch):
        parse_module_element("X0*e4", 3)


@given(polys, orders)
def test_parse_format_round_trip(f, order):
    assert parse_polynomial(f.to_text(order)) == f


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


def test_bidegree_and_substitute():
    f = P("T0^7*X2 - T1^7*X1")
    assert f.bidegree(10) == (7, 1)
    with pytest.raises(NotHomogeneous):
        P("T0 + X0").bidegree(10)
    images = {2: Polynomial.monomial(mono(Z=1, T0=10)),
              3: Polynomial.monomial(mono(Z=1, T0=7, T1=3)),
              4: Polynomial.monomial(mono(Z=1, T1=10))}
    assert f.substitute(images).is_zero()
    assert Polynomial.monomial(mono(Z=1)).bidegree(10) == (-10, 1)


def test_module_apply():
    fam = [P("T0^3*X1 - T1^3*X0"), P("X0"), P("X1")]
    v = ModuleElement.from_components([P("1"), P("T1^3"), P("-T0^3")])
    assert v.apply(fam).is_zero()
    with pytest.raises(RankMismatch):
        v.apply(fam[:2])


# --- division and Groebner machinery ---


@given(polys, st.lists(polys.filter(bool), min_size=1, max_size=3), orders)
def test_division_identity(f, basis, order):
    r, quots = reduce(f, basis, order)
    total = r
    for qq, b in zip(quots, basis):
        total = total + qq * b
    assert total == f
    leads = [b.leading_term(order)[1][0] for b in basis]
    for (m, _), _c in r.items():
        assert not any(divides(lm, m) for lm in leads)


def test_division_by_zero_rejected():
    with pytest.raises(ZeroElement):
        reduce(P("X0"), [Polynomial()], POS)


def test_s_polynomial_cancels_leads():
    f, g = P("T0^3*X1 - T1^3*X0"), P("T0*X0^2*X2 - T1*X1^3")
    s = s_polynomial(f, g, POS)
    L = lcm(f.leading_term(POS)[1][0], g.leading_term(POS)[1][0])
    assert (L, 0) not in dict(s.items())


def test_buchberger_twisted_cubic():
    gens = [P("X0*X2 - X1^2"), P("T0*X1 - T1*X0"), P("T0*X2 - T1*X1")]
    gb = buchberger(gens, POS)
    assert is_groebner(gb, POS)
    red = reduce_basis(gb, POS)
    assert all(normal_form(g, red, POS).is_zero() for g in gens)
    assert module_equal(gens, red, POS)
    assert not module_equal(gens[:2], red, POS)


small_monomials = st.tuples(st.just(0), st.just(0), *[st.integers(0, 2)] * 3, st.just(0))
small_polys = st.dictionaries(small_monomials, coeffs, min_size=1, max_size=3).map(Polynomial)


@given(st.lists(small_polys, min_size=1, max_size=3), st.sampled_from([POS, NONPOS]))
def test_buchberger_properties(gens, order):
    gb = buchberger(gens, order)
    assert is_groebner(gb, order)
    assert all(normal_form(g, gb, order).is_zero() for g in gens)
    red = reduce_basis(gb, order)
    assert red == reduce_basis(buchberger(red, order), order)
    for g in red:
        assert g.leading_term(order)[0] == 1


def test_reduce_basis_check_flag():
    with pytest.raises(NotGroebner):
        reduce_basis([P("X0 - X1"), P("X0 - X2")], POS)


def test_schreyer_syzygies_annihilate():
    gens = [P("X0*X2 - X1^2"), P("T0*X1 - T1*X0"), P("T0*X2 - T1*X1")]
    gb = reduce_basis(buchberger(gens, POS), POS)
    for s in syzygy_basis(gb, POS):
        assert s.apply(gb).is_zero()


def test_module_groebner():
    e = [ModuleElement.basis_vector(i, 2) for i in range(2)]
    x0, x1 = P("X0"), P("X1")
    gens = [x0 * e[0] + x1 * e[1], x1 * e[0]]
    gb = buchberger(gens, POS)
    assert is_groebner(gb, POS)
    assert all(normal_form(g, gb, POS).is_zero() for g in gens)


def test_exact_rational_coefficients():
    f = P("2*X0 - 3*X1")
    assert f.monic(POS) == P("X0 - 3/2*X1")
    assert dict(f.monic(POS).items())[(mono(X1=1), 0)] == Fraction(-3, 2)


def test_monomial_width():
    assert len(mono(T0=1)) == NVARS
    with pytest.raises(ValueError):
        mono(T0=-1)
