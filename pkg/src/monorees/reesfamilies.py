"""Explicit generators and syzygies for the Rees algebra of <T0^d, T0^(d-u)T1^u, T1^d>.

The map sends X0 -> Z*T0^d, X1 -> Z*T0^(d-u)*T1^u, X2 -> Z*T1^d.  Its kernel
is generated by q+2 binomials F_n read off the slow Euclidean sequence, and
the minimal bigraded resolution

    0 -> S^(q-1) -> S^(2q) -> S^(q+2) -> S

has closed-form maps.  Everything here is built directly from the integer
data in ``euclid``; the ``oracle`` module recomputes the same objects from
scratch for comparison.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import ConsistencyError, SigmaQZero
from .euclid import InputPair, SersData, ell_of, euclid_data, m_of, rho_of, sers_data, validate
from .polyengine import (
    InducedOrder,
    ModuleElement,
    Polynomial,
    TermOrder,
    is_groebner,
    lex_order,
    mono,
    reduce_basis,
    syzygy_basis,
)
from .polyengine.monomial import ONE, X0, X1, X2, Z, bidegree
from .polyengine.monomial import mono as _mono

Bideg = tuple[int, int]


@dataclass(frozen=True)
class PairContext:
    """A validated pair with its integer data and the lex order it calls for."""

    pair: InputPair
    sers: SersData

    @property
    def d(self) -> int:
        return self.pair.d

    @property
    def u(self) -> int:
        return self.pair.u

    @property
    def q(self) -> int:
        return self.sers.q

    @property
    def order(self) -> TermOrder:
        return lex_order(self.sers.sigma(self.q))


def context(d: int, u: int, allow_swap: bool = False) -> PairContext:
    pair = validate(d, u, allow_swap)
    return PairContext(pair, sers_data(pair, euclid_data(pair)))


@dataclass(frozen=True)
class GeneratorFamily:
    pair: InputPair
    elements: tuple[Polynomial, ...]
    bidegrees: tuple[Bideg, ...]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SyzygyFamilyOne:
    elements: tuple[ModuleElement, ...]
    labels: tuple[tuple[int, int], ...]
    twists: tuple[Bideg, ...]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SyzygyFamilyTwo:
    elements: tuple[ModuleElement, ...]
    labels: tuple[tuple[int, int, int], ...]
    twists: tuple[Bideg, ...]

    def __len__(self) -> int:
        return len(self.elements)


def _x(e0: int = 0, e1: int = 0, e2: int = 0, t0: int = 0, t1: int = 0) -> tuple:
    if min(e0, e1, e2, t0, t1) < 0:
        raise ConsistencyError(f"negative exponent in closed form: {(t0, t1, e0, e1, e2)}")
    return (t0, t1, e0, e1, e2, 0)


def _sigma_q(s: SersData) -> int:
    sq = s.sigma(s.q)
    if sq == 0:
        raise SigmaQZero("sigma_q = 0: the term order is undefined for this pair")
    return sq


def generator(n: int, pair: InputPair, s: SersData) -> Polynomial:
    """F_n for 1 <= n <= q+2 in closed form."""
    d, u = pair
    if n == s.q + 2:
        a, b = _x(e0=d - u, e2=u), _x(e1=d)
        return Polynomial.binomial(a, b) if _sigma_q(s) > 0 else Polynomial.binomial(b, a)
    b, sg, t = s.b(n), s.sigma(n), s.tau(n)
    if sg <= 0:
        return Polynomial.binomial(_x(e0=-sg, e2=t, t0=b), _x(e1=t - sg, t1=b))
    return Polynomial.binomial(_x(e1=sg - t, t0=b), _x(e0=sg, e2=-t, t1=b))


def _bidegrees(pair: InputPair, s: SersData) -> tuple[Bideg, ...]:
    return tuple((s.b(n), s.gap(n)) for n in range(1, s.q + 2)) + ((0, pair.d),)


def f0_family(pair: InputPair, sers: SersData) -> GeneratorFamily:
    _sigma_q(sers)
    elements = tuple(generator(n, pair, sers) for n in range(1, sers.q + 3))
    return GeneratorFamily(pair, elements, _bidegrees(pair, sers))


def _split(f: Polynomial) -> tuple[tuple, tuple]:
    """X-exponents of the T0-term and of the T1-term of T0^b X^a - T1^b X^c."""
    plus = [m for m, c in f.terms.items() if c > 0]
    minus = [m for m, c in f.terms.items() if c < 0]
    (mp,), (mm,) = plus, minus
    return mp[2:5], mm[2:5]


def _combine(b: int, top: tuple, bottom: tuple) -> Polynomial:
    return Polynomial.binomial(
        _x(top[0], top[1], top[2], t0=b), _x(bottom[0], bottom[1], bottom[2], t1=b)
    )


def _add3(a: tuple, b: tuple) -> tuple:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def f0_family_recursive(pair: InputPair, sers: SersData) -> GeneratorFamily:
    """The generators obtained by walking the slow sequence.

    Start from F_1 = T0^(d-u) X2 - T1^(d-u) X1 and F_{m_1} = T0^u X1 - T1^u X0.
    For n = 1..q, writing F_n = T0^(b_n) X^a - T1^(b_n) X^b and
    F_{m_ell(n)} = T0^(c_n) X^a' - T1^(c_n) X^b', the next generator is
    F_rho(n) = T0^(b_n - c_n) X^(a+b') - T1^(b_n - c_n) X^(b+a').
    The last one (b = 0) is normalised so that X1^d has sign +1 exactly when
    sigma_q < 0.
    """
    d, u = pair
    q = sers.q
    sq = _sigma_q(sers)
    F: dict[int, Polynomial] = {
        1: Polynomial.binomial(_x(e2=1, t0=d - u), _x(e1=1, t1=d - u)),
        sers.m_seq[1]: Polynomial.binomial(_x(e1=1, t0=u), _x(e0=1, t1=u)),
    }
    for n in range(1, q + 1):
        m, r = m_of(n, sers), rho_of(n, sers)
        a, b = _split(F[n])
        a2, b2 = _split(F[m])
        F[r] = _combine(sers.b(n) - sers.c(n), _add3(a, b2), _add3(b, a2))
    last = F[q + 2]
    x1d = _x(e1=d)
    if (last.terms.get(x1d, 0) > 0) != (sq < 0):
        last = -last
    F[q + 2] = last
    elements = tuple(F[n] for n in range(1, q + 3))
    return GeneratorFamily(pair, elements, _bidegrees(pair, sers))


def _natural_last_sign(pair: InputPair, s: SersData, f0: GeneratorFamily) -> int:
    """+1 or -1 relating the stored F_{q+2} to the one the recursion produces."""
    q = s.q
    a, b = _split(f0.elements[q - 1])
    a2, b2 = _split(f0.elements[q])
    natural = Polynomial.binomial(_x(*_add3(a, b2)), _x(*_add3(b, a2)))
    stored = f0.elements[q + 1]
    if natural == stored:
        return 1
    if natural == -stored:
        return -1
    raise ConsistencyError("last generator does not match the recursion up to sign")


class _Builder:
    """Accumulates c * X^mono * e_k terms for a fixed rank (k is 1-based)."""

    def __init__(self, rank: int):
        self.rank = rank
        self.terms: dict = {}

    def add(self, k: int, m: tuple, c: int = 1) -> "_Builder":
        key = (m, k - 1)
        self.terms[key] = self.terms.get(key, 0) + c
        return self

    def build(self) -> ModuleElement:
        return ModuleElement(self.terms, self.rank)


def _first_syzygies_at(n: int, pair: InputPair, s: SersData, eps: int) -> dict:
    """Both syzygies attached to index n <= q, keyed by their (n, k) labels.

    ``eps`` rescales the coefficient of e_{q+2}, compensating for the sign
    convention of F_{q+2}.
    """
    q = s.q
    m, r = m_of(n, s), rho_of(n, s)
    sg, t = s.sigma(n), s.tau(n)
    sm, tm = s.sigma(m), s.tau(m)
    bm, br = s.b(m), s.b(r)
    scale = {q + 2: eps}

    def c(k):
        return scale.get(k, 1)

    rank = q + 2
    if sg <= 0:
        s_rho = (_Builder(rank).add(n, _x(e0=sm, e2=-tm))
                 .add(r, _x(t0=bm), -c(r))
                 .add(m, _x(e1=t - sg, t1=br), -c(m)))
        s_m = (_Builder(rank).add(n, _x(e1=sm - tm))
               .add(m, _x(e0=-sg, e2=t, t0=br), -c(m))
               .add(r, _x(t1=bm), -c(r)))
    else:
        s_rho = (_Builder(rank).add(n, _x(e1=tm - sm))
                 .add(r, _x(t0=bm), -c(r))
                 .add(m, _x(e0=sg, e2=-t, t1=br), -c(m)))
        s_m = (_Builder(rank).add(n, _x(e0=-sm, e2=tm))
               .add(m, _x(e1=sg - t, t0=br), -c(m))
               .add(r, _x(t1=bm), -c(r)))
    return {(n, r): s_rho.build(), (n, m): s_m.build()}


def _last_syzygy(pair: InputPair, s: SersData) -> ModuleElement:
    """s_{q+1,q+2}, relating F_q, F_{q+1} and F_{q+2}."""
    d, u = pair
    q = s.q
    s1, t1 = s.sigma(q + 1), s.tau(q + 1)
    sq, tq = s.sigma(q), s.tau(q)
    b = _Builder(q + 2)
    if s1 <= 0:
        b.add(q + 1, _x(e0=d - u + s1, e2=u - t1)).add(q + 2, _x(t0=1), -1).add(q, _x(e1=t1 - s1), -1)
    else:
        b.add(q + 1, _x(e1=tq - sq)).add(q + 2, _x(t0=1), -1).add(q, _x(e0=s1, e2=-t1), -1)
    return b.build()


def _twist_one(n: int, s: SersData) -> Bideg:
    return (s.b(n), s.gap(n) + s.gap(m_of(n, s)))


def f1_family(pair: InputPair, sers: SersData, f0: GeneratorFamily) -> SyzygyFamilyOne:
    """The 2q first syzygies, ordered by their labels (n, k)."""
    q = sers.q
    eps = _natural_last_sign(pair, sers, f0)
    found: dict = {}
    for n in range(1, q):
        found.update(_first_syzygies_at(n, pair, sers, eps))
    at_q = _first_syzygies_at(q, pair, sers, eps)
    found[(q, q + 1)] = at_q[(q, q + 1)]
    found[(q + 1, q + 2)] = _last_syzygy(pair, sers)
    labels = tuple(sorted(found))
    twists = tuple(_twist_one(min(n, q), sers) for n, _ in labels)
    return SyzygyFamilyOne(tuple(found[k] for k in labels), labels, twists)


def redundant_first_syzygy(pair: InputPair, sers: SersData, f0: GeneratorFamily) -> ModuleElement:
    """The n = q instance of the generic pattern for s_{n,rho(n)}.

    It is not part of the family: it coincides with +-s_{q+1,q+2}.
    """
    eps = _natural_last_sign(pair, sers, f0)
    return _first_syzygies_at(sers.q, pair, sers, eps)[(sers.q, sers.q + 2)]


def _label_map(pair: InputPair, sers: SersData, f0: GeneratorFamily, f1: SyzygyFamilyOne) -> dict:
    """Map every label (n, k) used by the second syzygies to (coefficient, F1 index).

    The label (q, q+2) does not name a member of F1; the corresponding
    syzygy equals c * s_{q+1,q+2} with c = +-1, which is substituted.
    """
    q = sers.q
    table = {lab: (1, i) for i, lab in enumerate(f1.labels)}
    extra = redundant_first_syzygy(pair, sers, f0)
    last_index = table[(q + 1, q + 2)][1]
    last = f1.elements[last_index]
    if extra == last:
        table[(q, q + 2)] = (1, last_index)
    elif extra == -last:
        table[(q, q + 2)] = (-1, last_index)
    else:
        raise ConsistencyError("s_{q,q+2} pattern is not +-s_{q+1,q+2}")
    return table


def f2_family(pair: InputPair, sers: SersData, f1: SyzygyFamilyOne,
              f0: GeneratorFamily | None = None) -> SyzygyFamilyTwo:
    """The q-1 second syzygies s_{n,rho(n),ell(n)}, n = 1..q-1."""
    q = sers.q
    f0 = f0 or f0_family(pair, sers)
    table = _label_map(pair, sers, f0, f1)
    rank = 2 * q
    elements, labels, twists = [], [], []
    for n in range(1, q):
        m, r = m_of(n, sers), rho_of(n, sers)
        sm, tm = sers.sigma(m), sers.tau(m)
        n1 = n + 1
        r1 = rho_of(n1, sers) if n1 <= q else q + 2
        terms: dict = {}

        def put(label, mono_, coeff):
            c, idx = table[label]
            key = (mono_, idx)
            terms[key] = terms.get(key, 0) + c * coeff

        if sers.sigma(n) <= 0:
            x_rho, x_m = _x(e1=sm - tm), _x(e0=sm, e2=-tm)
        else:
            x_rho, x_m = _x(e0=-sm, e2=tm), _x(e1=tm - sm)
        if r == n + 1:
            put((n, r), x_rho, 1)
            put((n, m), x_m, -1)
            put((r, m), _x(t0=sers.b(m)), 1)
            put((r, r1), _x(t1=sers.b(m_of(n1, sers))), -1)
        else:
            put((n, m), x_m, 1)
            put((n, r), x_rho, -1)
            put((n1, r), _x(t0=sers.b(r)), 1)
            put((n1, r1), _x(t1=sers.b(r)), -1)
        elements.append(ModuleElement(terms, rank))
        labels.append((n, r, ell_of(n, sers)))
        twists.append((sers.b(n), sers.gap(n) + 2 * sers.gap(m)))
    return SyzygyFamilyTwo(tuple(elements), tuple(labels), tuple(twists))


# ---------------------------------------------------------------------------
# Resolution


@dataclass(frozen=True)
class Resolution:
    pair: InputPair
    twists: tuple[tuple[Bideg, ...], ...]     # positions 0..3
    phi1: tuple[Polynomial, ...]              # the generators, a 1 x (q+2) row
    phi2: tuple[ModuleElement, ...]           # columns over rank q+2
    phi3: tuple[ModuleElement, ...]           # columns over rank 2q
    f1_labels: tuple[tuple[int, int], ...] = field(default=())
    f2_labels: tuple[tuple[int, int, int], ...] = field(default=())

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.twists)

    def matrix(self, k: int) -> list[list[Polynomial]]:
        """Phi_k as a row-major list of polynomial entries."""
        if k == 1:
            return [list(self.phi1)]
        cols = self.phi2 if k == 2 else self.phi3
        comps = [c.components() for c in cols]
        rows = len(self.twists[k - 1])
        return [[comps[j][i] for j in range(len(cols))] for i in range(rows)]


def _check_columns(columns, source: tuple, target: tuple, d: int) -> None:
    for col, tw in zip(columns, target):
        for (m, i), _ in col.items():
            b = bidegree(m, d)
            if (b[0] + source[i][0], b[1] + source[i][1]) != tw:
                raise ConsistencyError(f"column with twist {tw} is not bihomogeneous")


def build_resolution(ctx: PairContext) -> tuple[Resolution, GeneratorFamily, SyzygyFamilyOne, SyzygyFamilyTwo]:
    f0 = f0_family(ctx.pair, ctx.sers)
    f1 = f1_family(ctx.pair, ctx.sers, f0)
    f2 = f2_family(ctx.pair, ctx.sers, f1, f0)
    twists = (((0, 0),), f0.bidegrees, f1.twists, f2.twists)
    d = ctx.d
    for g, tw in zip(f0.elements, f0.bidegrees):
        if g.bidegree(d) != tw:
            raise ConsistencyError(f"generator {g} does not have bidegree {tw}")
    _check_columns(f1.elements, f0.bidegrees, f1.twists, d)
    _check_columns(f2.elements, f1.twists, f2.twists, d)
    res = Resolution(ctx.pair, twists, f0.elements, f1.elements, f2.elements, f1.labels, f2.labels)
    return res, f0, f1, f2


def resolution(pair: InputPair) -> Resolution:
    return build_resolution(PairContext(pair, sers_data(pair, euclid_data(pair))))[0]


def betti_numbers(pair: InputPair) -> list[dict[Bideg, int]]:
    """Per homological position, the multiplicity of each twist."""
    return [dict(sorted(Counter(t).items())) for t in resolution(pair).twists]


# ---------------------------------------------------------------------------
# Verification


def _extended_images(d: int, u: int) -> dict:
    return {
        X0: Polynomial.monomial(_mono(Z=1, T0=d)),
        X1: Polynomial.monomial(_mono(Z=1, T0=d - u, T1=u)),
        X2: Polynomial.monomial(_mono(Z=1, T1=d)),
    }


def verify_kernel_membership(f0: GeneratorFamily) -> bool:
    """Each element maps to zero under X0 -> Z T0^d, X1 -> Z T0^(d-u) T1^u, X2 -> Z T1^d."""
    images = _extended_images(f0.pair.d, f0.pair.u)
    return all(g.substitute(images).is_zero() for g in f0.elements)


def is_reduced_groebner(family, order) -> bool:
    if not is_groebner(family, order):
        return False
    mine = {g.monic(order) for g in family}
    return len(mine) == len(family) and mine == set(reduce_basis(family, order, check=False))


@dataclass
class VerificationReport:
    pair: InputPair
    rank_pattern: bool = False
    f0_kernel_membership: bool = False
    f0_is_reduced_gb: bool = False
    f1_annihilates_f0: bool = False
    f1_is_gb_under_induced: bool = False
    f2_annihilates_f1: bool = False
    f2_is_gb: bool = False
    f2_linearly_independent: bool = False
    phi1_minimal: bool = False
    phi2_minimal: bool = False
    phi3_minimal: bool = False
    bihomogeneous: bool = False

    def flags(self) -> dict[str, bool]:
        return {k: v for k, v in self.__dict__.items() if isinstance(v, bool)}

    @property
    def ok(self) -> bool:
        return all(self.flags().values())


def _minimal(entries) -> bool:
    return not any(e.has_constant_term() for e in entries)


def verify_resolution(pair: InputPair, deadline: float | None = None) -> VerificationReport:
    ctx = PairContext(pair, sers_data(pair, euclid_data(pair)))
    report = VerificationReport(pair)
    try:
        res, f0, f1, f2 = build_resolution(ctx)
    except ConsistencyError:
        return report
    report.bihomogeneous = True
    q = ctx.q
    report.rank_pattern = res.ranks == (1, q + 2, 2 * q, q - 1)
    lo = ctx.order
    report.f0_kernel_membership = verify_kernel_membership(f0)
    report.f0_is_reduced_gb = is_reduced_groebner(list(f0.elements), lo)
    report.f1_annihilates_f0 = all(s.apply(list(f0.elements)).is_zero() for s in f1.elements)
    order1 = InducedOrder(f0.elements, lo)
    report.f1_is_gb_under_induced = is_groebner(list(f1.elements), order1, deadline)
    if f2.elements:
        report.f2_annihilates_f1 = all(s.apply(list(f1.elements)).is_zero() for s in f2.elements)
        order2 = InducedOrder(f1.elements, order1)
        report.f2_is_gb = is_groebner(list(f2.elements), order2, deadline)
        report.f2_linearly_independent = not syzygy_basis(list(f2.elements), order2)
    else:
        report.f2_annihilates_f1 = report.f2_is_gb = report.f2_linearly_independent = True
    report.phi1_minimal = _minimal(f0.elements)
    report.phi2_minimal = _minimal(c for col in f1.elements for c in col.components())
    report.phi3_minimal = _minimal(c for col in f2.elements for c in col.components())
    return report


def euler_characteristic_check(pair: InputPair, k_max: int, n_max: int) -> bool:
    """Compare the alternating sum of twisted dimensions with a direct count.

    dim S_(k,n) = (k+1) * C(n+2, 2).  The Rees side counts monomials
    T0^i T1^j of degree k + d*n divisible by some product of n generators of
    the ideal; those products are T0^(d*a + (d-u)*b) T1^(u*b + d*c).
    """
    return not euler_characteristic_failures(pair, k_max, n_max)


def _union_length(intervals) -> int:
    """Number of integers covered by a list of closed intervals [lo, hi]."""
    count, reach = 0, None
    for lo, hi in sorted(iv for iv in intervals if iv[0] <= iv[1]):
        if reach is not None and lo <= reach:
            lo = reach + 1
        if lo <= hi:
            count += hi - lo + 1
            reach = hi
    return count


def euler_characteristic_failures(pair: InputPair, k_max: int, n_max: int) -> list[Bideg]:
    d, u = pair
    twists = resolution(pair).twists

    def dim_s(k, n):
        if k < 0 or n < 0:
            return 0
        return (k + 1) * (n + 1) * (n + 2) // 2

    bad = []
    for n in range(n_max + 1):
        gens = [(d * a + (d - u) * b, u * b + d * (n - a - b))
                for a in range(n + 1) for b in range(n + 1 - a)]
        for k in range(k_max + 1):
            alt = sum((-1) ** pos * sum(dim_s(k - tk, n - tn) for tk, tn in tw)
                      for pos, tw in enumerate(twists))
            total = k + d * n
            count = _union_length([(e0, total - e1) for e0, e1 in gens])
            if alt != count:
                bad.append((k, n))
    return bad


def prior_index_set(j: int, s: SersData) -> set[int]:
    """Indices k whose generator bidegree is componentwise <= that of F_j."""
    degs = {n: (s.b(n), s.gap(n)) for n in range(1, s.q + 2)}
    bj = degs[j]
    return {k for k, bk in degs.items() if bk[0] <= bj[0] and bk[1] <= bj[1]}


__all__ = [
    "GeneratorFamily",
    "PairContext",
    "Resolution",
    "SyzygyFamilyOne",
    "SyzygyFamilyTwo",
    "VerificationReport",
    "betti_numbers",
    "build_resolution",
    "context",
    "euler_characteristic_check",
    "f0_family",
    "f0_family_recursive",
    "f1_family",
    "f2_family",
    "generator",
    "redundant_first_syzygy",
    "resolution",
    "verify_kernel_membership",
    "verify_resolution",
]
