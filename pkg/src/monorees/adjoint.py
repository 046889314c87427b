"""Adjoint conditions for the monomial curve X1^d = X0^(d-u) X2^u.

The curve (1 : t^u : t^d) has two singular points, (1:0:0) and (0:0:1),
each with a single branch.  A form C in X0, X1, X2 is adjoint exactly when
its order along the branch at (1:0:0) is at least (d-1)(u-1) and its order
along the branch at (0:0:1) is at least (d-1)(d-u-1); for a monomial X^a
these orders are u*a1 + d*a2 and d*a0 + (d-u)*a1.

Most quantities here are integer counts over exponent triples.  The one
piece of linear algebra, the rank of the coefficient conditions on a pencil
A*F_q + B*F_{q+1}, uses sympy for exact rank computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb, gcd

from .errors import (
    ConsistencyError,
    DegreeMismatch,
    NonCoprime,
    NotHomogeneous,
    RequiresUGreaterOne,
    StabilityViolation,
)
from .euclid import InputPair, SersData, euclid_data, sers_data
from .polyengine import Polynomial
from .polyengine.monomial import X0, X1, X2
from .reesfamilies import f0_family

Triple = tuple[int, int, int]


def _require_u(pair: InputPair) -> None:
    if pair.u <= 1:
        raise RequiresUGreaterOne(f"adjoint computations need u > 1, got u = {pair.u}")


def _sers(pair: InputPair) -> SersData:
    return sers_data(pair, euclid_data(pair))


def thresholds(pair: InputPair) -> tuple[int, int]:
    """Minimal branch orders an adjoint must reach at (1:0:0) and at (0:0:1)."""
    d, u = pair
    return (d - 1) * (u - 1), (d - 1) * (d - u - 1)


def triples(total: int):
    """All (a0, a1, a2) of nonnegative integers summing to ``total``."""
    if total < 0:
        return
    for a0 in range(total, -1, -1):
        for a1 in range(total - a0, -1, -1):
            yield (a0, a1, total - a0 - a1)


# ---------------------------------------------------------------------------
# Singular points


def curve_equation(pair: InputPair) -> Polynomial:
    return f0_family(pair, _sers(pair)).elements[-1]


def chart_multiplicity(form: Polynomial, point: int) -> int:
    """Multiplicity of the coordinate point where only X_point is nonzero.

    Dehomogenise by X_point = 1 and return the lowest total degree of the
    surviving terms in the other two X variables (0 when the point is off
    the curve).
    """
    xs = (X0, X1, X2)
    if point not in xs:
        raise ValueError("point must be one of X0, X1, X2")
    local: dict = {}
    for m, c in form.terms.items():
        key = tuple(m[v] for v in xs if v != point)
        local[key] = local.get(key, 0) + c
    degrees = [sum(k) for k, c in local.items() if c != 0]
    return min(degrees) if degrees else 0


def singular_points(pair: InputPair) -> list[tuple[Triple, int]]:
    _require_u(pair)
    d, u = pair
    expected = [((1, 0, 0), u), ((0, 0, 1), d - u)]
    f = curve_equation(pair)
    found = []
    for point, var in (((1, 0, 0), X0), ((0, 1, 0), X1), ((0, 0, 1), X2)):
        mult = chart_multiplicity(f, var)
        if mult > 1:
            found.append((point, mult))
    if found != expected:
        raise ConsistencyError(f"chart multiplicities {found} differ from {expected}")
    return expected


# ---------------------------------------------------------------------------
# Numerical semigroup counts


def sylvester_gap_count(a: int, b: int) -> int:
    """Number of nonnegative integers not of the form a*x + b*y with x, y >= 0."""
    if a <= 0 or b <= 0:
        raise ValueError("sylvester_gap_count needs positive integers")
    if gcd(a, b) != 1:
        raise NonCoprime(f"gcd({a}, {b}) != 1")
    return (a - 1) * (b - 1) // 2


def representable(a: int, b: int, limit: int) -> set[int]:
    """All j < limit of the form a*x + b*y with x, y >= 0 (brute force)."""
    out = set()
    for x in range(limit // a + 1):
        for y in range((limit - a * x) // b + 1):
            j = a * x + b * y
            if j < limit:
                out.add(j)
    return out


def gaps_brute_force(a: int, b: int) -> int:
    conductor = (a - 1) * (b - 1)
    return conductor - len(representable(a, b, conductor))


def representation_unique(pair: InputPair) -> bool:
    """Below each threshold, a value is reached by at most one exponent pair."""
    d, u = pair
    t0, t1 = thresholds(pair)
    for (p, r), top in (((u, d), t0), ((d, d - u), t1)):
        seen: set[int] = set()
        for x in range(top // p + 1):
            for y in range((top - p * x) // r + 1):
                j = p * x + r * y
                if j in seen:
                    return False
                seen.add(j)
    return True


# ---------------------------------------------------------------------------
# Adjoint pencils


def is_forbidden(pair: InputPair, a: Triple) -> bool:
    d, u = pair
    t0, t1 = thresholds(pair)
    return u * a[1] + d * a[2] < t0 or d * a[0] + (d - u) * a[1] < t1


def forbidden_exponents(pair: InputPair, ell: int) -> set[Triple]:
    """Exponents of degree ell whose monomial fails one of the branch conditions."""
    _require_u(pair)
    return {a for a in triples(ell) if is_forbidden(pair, a)}


def forbidden_in_both(pair: InputPair, ell: int) -> set[Triple]:
    d, u = pair
    t0, t1 = thresholds(pair)
    return {a for a in triples(ell)
            if u * a[1] + d * a[2] < t0 and d * a[0] + (d - u) * a[1] < t1}


def dim_adjoint_pencils(pair: InputPair, ell: int) -> int:
    """Dimension of the pencils T0*C0 + T1*C1 of X-degree ell with C0, C1 adjoint.

    Zero below d-2, where no nonzero adjoint of degree ell exists.
    """
    _require_u(pair)
    d, _ = pair
    if ell < d - 2:
        return 0
    return (ell + 2) * (ell + 1) - (d - 1) * (d - 2)


def dim_adjoint_pencils_by_count(pair: InputPair, ell: int) -> int:
    return 2 * (comb(ell + 2, 2) - len(forbidden_exponents(pair, ell)))


def _binom2(a: int) -> int:
    return comb(a, 2) if a >= 2 else 0


def dim_ker_degree_one(pair: InputPair, ell: int) -> int:
    """Dimension of the kernel in bidegree (1, ell): two free K[X]-summands."""
    s = _sers(pair)
    q = s.q
    return _binom2(ell - s.gap(q) + 2) + _binom2(ell - s.gap(q + 1) + 2)


def dim_ker_degree_one_direct(pair: InputPair, ell: int) -> int:
    """The same dimension as 2*C(ell+2, 2) minus the size of the image.

    The image in bidegree (1, ell) is spanned by the distinct T-monomials
    T0^i T1^(1+d*ell-i) divisible by some product of ell generators of the
    ideal, so this count does not use any generator formulas.
    """
    d, u = pair
    exps = {d * a + (d - u) * b for a in range(ell + 1) for b in range(ell + 1 - a)}
    # A product of ell generators is T0^e T1^(d*ell - e); multiplying by T1
    # or by T0 gives T0-exponent e or e + 1.
    image = exps | {e + 1 for e in exps}
    return 2 * comb(ell + 2, 2) - len(image)


@dataclass(frozen=True)
class PencilConditions:
    """Coefficients of A and B that must vanish for the pencil to be adjoint."""

    ell: int
    alpha: frozenset
    beta: frozenset
    breakdown: tuple[int, int, int, int]      # alpha-A, alpha-B, beta-A, beta-B
    overlaps: tuple[int, int]                 # triples meeting both branches

    @property
    def count(self) -> int:
        return len(self.alpha) + len(self.beta)


def pencil_conditions(pair: InputPair, ell: int) -> PencilConditions:
    """Exponents a of A (degree ell - |sigma_q - tau_q|) and b of B
    (degree ell - |sigma_{q+1} - tau_{q+1}|) whose coefficients are forced to 0.
    """
    _require_u(pair)
    d, u = pair
    s = _sers(pair)
    q = s.q
    t0, t1 = thresholds(pair)
    gq, gq1 = s.gap(q), s.gap(q + 1)
    a_lim = (t0 - d * abs(s.tau(q)), t1 - (d - u) * gq)
    b_lim = (t0 - u * gq1, t1 - d * abs(s.sigma(q + 1)))

    def split(total, lims):
        first, second = set(), set()
        for a in triples(total):
            if u * a[1] + d * a[2] < lims[0]:
                first.add(a)
            if d * a[0] + (d - u) * a[1] < lims[1]:
                second.add(a)
        return first, second

    aA, aB = split(ell - gq, a_lim)
    bA, bB = split(ell - gq1, b_lim)
    return PencilConditions(
        ell,
        frozenset(aA | aB),
        frozenset(bA | bB),
        (len(aA), len(aB), len(bA), len(bB)),
        (len(aA & aB), len(bA & bB)),
    )


def value_count(p: int, r: int, limit: int, total: int) -> int:
    """How many j < limit equal p*x + r*y with x + y <= total, x, y >= 0."""
    vals = set()
    for x in range(total + 1):
        for y in range(total + 1 - x):
            j = p * x + r * y
            if j < limit:
                vals.add(j)
    return len(vals)


def breakdown_by_values(pair: InputPair, ell: int) -> tuple[int, int, int, int]:
    """Branch counts obtained by counting attainable values below each bound."""
    d, u = pair
    s = _sers(pair)
    q = s.q
    t0, t1 = thresholds(pair)
    gq, gq1 = s.gap(q), s.gap(q + 1)
    na, nb = ell - gq, ell - gq1
    out = []
    for n, (l0, l1) in ((na, (t0 - d * abs(s.tau(q)), t1 - (d - u) * gq)),
                        (nb, (t0 - u * gq1, t1 - d * abs(s.sigma(q + 1))))):
        if n < 0:
            out += [0, 0]
            continue
        out.append(value_count(u, d, l0, n))
        out.append(value_count(d, d - u, l1, n))
    return tuple(out)


STABILITY_OFFSETS = (-2, -1, 0, 5)


@dataclass(frozen=True)
class NuResult:
    value: int
    breakdown: tuple[int, int, int, int]
    overlaps: tuple[int, int]
    per_ell: dict = field(default_factory=dict)


def nu(pair: InputPair) -> NuResult:
    """Number of coefficient conditions, evaluated at ell = d-2 and checked for
    independence of ell at d-1, d and d+5."""
    _require_u(pair)
    d = pair.d
    per_ell = {}
    for off in STABILITY_OFFSETS:
        per_ell[d + off] = pencil_conditions(pair, d + off)
    base = per_ell[d - 2]
    counts = {ell: c.count for ell, c in per_ell.items()}
    if len(set(counts.values())) != 1:
        raise StabilityViolation(f"condition count depends on ell: {counts}")
    return NuResult(base.count, base.breakdown, base.overlaps, counts)


def nu_bound(pair: InputPair) -> int:
    d = pair.d
    return d * d - 6 * d + 6


# ---------------------------------------------------------------------------
# Adjointness of forms and pencils


def _x_degree(form: Polynomial) -> int | None:
    degs = set()
    for m in form.terms:
        if m[0] or m[1] or m[5]:
            raise NotHomogeneous("form must only involve X0, X1, X2")
        degs.add(m[2] + m[3] + m[4])
    if len(degs) > 1:
        raise NotHomogeneous(f"form mixes degrees {sorted(degs)}")
    return degs.pop() if degs else None


def _branch_order(form: Polynomial, weights: tuple[int, int, int]) -> float:
    acc: dict = {}
    for m, c in form.terms.items():
        j = weights[0] * m[2] + weights[1] * m[3] + weights[2] * m[4]
        acc[j] = acc.get(j, 0) + c
    nonzero = [j for j, c in acc.items() if c != 0]
    return min(nonzero) if nonzero else float("inf")


def is_adjoint(pair: InputPair, form: Polynomial) -> bool:
    """Branch-order test, confirmed against the forbidden-exponent test."""
    _require_u(pair)
    d, u = pair
    _x_degree(form)
    t0, t1 = thresholds(pair)
    by_order = (_branch_order(form, (0, u, d)) >= t0
                and _branch_order(form, (d, d - u, 0)) >= t1)
    by_support = not any(is_forbidden(pair, m[2:5]) for m in form.terms)
    if by_order != by_support:
        raise ConsistencyError("branch orders and forbidden exponents disagree")
    return by_order


def _pencil_parts(pair: InputPair):
    s = _sers(pair)
    f0 = f0_family(pair, s)
    q = s.q
    return s, f0.elements[q - 1], f0.elements[q]


def _t_coefficients(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """C0, C1 with f = T0*C0 + T1*C1 for f of T-degree one."""
    c0, c1 = {}, {}
    for m, c in f.terms.items():
        x = (0, 0) + tuple(m[2:])
        if m[0] == 1 and m[1] == 0:
            c0[x] = c
        elif m[1] == 1 and m[0] == 0:
            c1[x] = c
        else:
            raise DegreeMismatch("pencil is not of T-degree one")
    return Polynomial(c0), Polynomial(c1)


def pencil_degree(pair: InputPair, A: Polynomial, B: Polynomial) -> int | None:
    s = _sers(pair)
    q = s.q
    da, db = _x_degree(A), _x_degree(B)
    ells = set()
    if da is not None:
        ells.add(da + s.gap(q))
    if db is not None:
        ells.add(db + s.gap(q + 1))
    if len(ells) > 1:
        raise DegreeMismatch(f"A and B give different values of ell: {sorted(ells)}")
    return ells.pop() if ells else None


def pencil_in_adjoints(pair: InputPair, A: Polynomial, B: Polynomial) -> bool:
    """Whether A*F_q + B*F_{q+1} has both T-coefficients adjoint."""
    _require_u(pair)
    ell = pencil_degree(pair, A, B)
    if ell is None:
        return True
    if ell < pair.d - 2:
        raise DegreeMismatch(f"ell = {ell} is below d-2 = {pair.d - 2}")
    cond = pencil_conditions(pair, ell)
    by_conditions = (not any(m[2:5] in cond.alpha for m in A.terms)
                     and not any(m[2:5] in cond.beta for m in B.terms))
    _, fq, fq1 = _pencil_parts(pair)
    c0, c1 = _t_coefficients(A * fq + B * fq1)
    by_forms = is_adjoint(pair, c0) and is_adjoint(pair, c1)
    if by_conditions != by_forms:
        raise ConsistencyError("coefficient conditions and adjointness of C0, C1 disagree")
    return by_forms


def random_pencil(pair: InputPair, ell: int, rng: random.Random,
                  keep_forbidden: float = 0.1) -> tuple[Polynomial, Polynomial]:
    """A random pencil of degree ell; forced-zero coefficients survive with
    probability ``keep_forbidden`` so both outcomes occur."""
    s = _sers(pair)
    q = s.q
    cond = pencil_conditions(pair, ell)

    def draw(total, forced):
        terms = {}
        for a in triples(total):
            if a in forced and rng.random() >= keep_forbidden:
                continue
            c = rng.randint(-3, 3)
            if c:
                terms[(0, 0) + a + (0,)] = c
        return Polynomial(terms)

    return draw(ell - s.gap(q), cond.alpha), draw(ell - s.gap(q + 1), cond.beta)


def constraint_rank(pair: InputPair, ell: int) -> int:
    """Rank of the linear conditions making A*F_q + B*F_{q+1} an adjoint pencil.

    Unknowns are the coefficients of A and B; each forbidden monomial of C0
    and of C1 gives one equation.  The rank is the codimension of the
    adjoint pencils inside the kernel in bidegree (1, ell).
    """
    from sympy import Matrix

    _require_u(pair)
    s, fq, fq1 = _pencil_parts(pair)
    q = s.q
    a_exps = list(triples(ell - s.gap(q)))
    b_exps = list(triples(ell - s.gap(q + 1)))
    n = len(a_exps) + len(b_exps)
    if n == 0:
        return 0
    cols = {("a", e): i for i, e in enumerate(a_exps)}
    cols.update({("b", e): len(a_exps) + i for i, e in enumerate(b_exps)})
    rows: dict = {}
    for tag, f in (("a", fq), ("b", fq1)):
        for m, c in f.terms.items():
            comp = 0 if m[0] else 1
            for e in (a_exps if tag == "a" else b_exps):
                gamma = (e[0] + m[2], e[1] + m[3], e[2] + m[4])
                if not is_forbidden(pair, gamma):
                    continue
                row = rows.setdefault((comp, gamma), [0] * n)
                row[cols[(tag, e)]] += c
    if not rows:
        return 0
    return Matrix(list(rows.values())).rank()


def quotient_dimension(pair: InputPair, ell: int, verify: bool = False) -> int:
    """Codimension of the adjoint pencils in the kernel in bidegree (1, ell)."""
    _require_u(pair)
    if ell < pair.d - 2:
        raise DegreeMismatch(f"ell = {ell} is below d-2 = {pair.d - 2}")
    value = nu(pair).value
    if verify and constraint_rank(pair, ell) != value:
        raise ConsistencyError("condition count differs from the rank of the linear system")
    return value


@dataclass(frozen=True)
class AdjointReport:
    pair: InputPair
    ell: int
    dim_adj: int
    dim_ker_1: int
    nu: int
    breakdown: tuple[int, int, int, int]
    forbidden_alpha: frozenset
    forbidden_beta: frozenset
    bound: int
    singular: tuple
    below_threshold: bool


def adjoint_report(pair: InputPair, ell: int | None = None) -> AdjointReport:
    _require_u(pair)
    ell = pair.d if ell is None else ell
    below = ell < pair.d - 2
    result = nu(pair)
    cond = pencil_conditions(pair, ell)
    return AdjointReport(
        pair=pair,
        ell=ell,
        dim_adj=dim_adjoint_pencils(pair, ell),
        dim_ker_1=dim_ker_degree_one(pair, ell),
        nu=result.value,
        breakdown=result.breakdown,
        forbidden_alpha=cond.alpha,
        forbidden_beta=cond.beta,
        bound=nu_bound(pair),
        singular=tuple(singular_points(pair)),
        below_threshold=below,
    )
