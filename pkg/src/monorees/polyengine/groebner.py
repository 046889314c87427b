"""Division, S-polynomials, Buchberger's algorithm and Schreyer syzygies.

Everything operates on the shared term layout of ``elements`` so the same
code handles ideals (rank one) and submodules of free modules.  The only
pair-skipping rule is the coprime-lcm criterion, and it is used only in
the ideal case where it is valid.
"""

from __future__ import annotations

import heapq
import time

from ..errors import DeadlineExceeded, NotGroebner, RankMismatch, ZeroElement
from .elements import (
    ModuleElement,
    Polynomial,
    divide,
    leading_term_terms,
    normalize,
    wrap_terms,
)
from .monomial import coprime, div, divides, divmask, lcm, mul


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise DeadlineExceeded("deadline passed during Groebner computation")


def _lead(t, order):
    c, (m, i) = leading_term_terms(t, order)
    return m, i, c, divmask(m)


def _sub_multiple(p: dict, g: dict, factor, coef):
    """p -= coef * factor * g, in place."""
    for (m, i), c in g.items():
        k = (mul(m, factor), i)
        w = p.get(k, 0) - coef * c
        if w:
            p[k] = w
        else:
            p.pop(k, None)


class _DivisorIndex:
    """Lead terms of a growing basis with a memo of divisor lookups.

    Elements are only ever appended, so a lookup that found basis element j
    stays valid (new elements have larger indices and the lowest index wins),
    and a failed lookup only needs to scan the elements added since.
    """

    def __init__(self, leads):
        self.leads = list(leads)
        self._memo: dict = {}

    def append(self, lead):
        self.leads.append(lead)

    def find(self, m, i) -> int:
        hit = self._memo.get((m, i))
        if hit is not None:
            j, upto = hit
            if j >= 0:
                return j
            start = upto
        else:
            start = 0
        leads = self.leads
        if start < len(leads):
            mm = ~divmask(m)
            for j in range(start, len(leads)):
                lm, li, _, mask = leads[j]
                if not (mask & mm) and li == i and divides(lm, m):
                    self._memo[(m, i)] = (j, 0)
                    return j
        self._memo[(m, i)] = (-1, len(leads))
        return -1


def _reduce_terms(f: dict, basis: list, index: _DivisorIndex, order, track: bool, full: bool = True):
    """Core division of f by basis.

    ``index`` holds the lead data (monomial, coordinate, coefficient, divmask)
    of each basis element.  With ``full`` false the loop stops at the first
    irreducible leading term, which is enough to decide whether f reduces to
    zero.
    """
    key = order.key
    leads = index.leads
    p = dict(f)
    rem: dict = {}
    quots = [dict() for _ in basis] if track else None
    while p:
        t = max(p, key=lambda k: key(k[0], k[1]))
        c = p[t]
        m, i = t
        j = index.find(m, i)
        if j >= 0:
            lm, _, lc, _ = leads[j]
            factor = div(m, lm)
            coef = divide(c, lc)
            _sub_multiple(p, basis[j], factor, coef)
            if track:
                qj = quots[j]
                w = qj.get(factor, 0) + coef
                if w:
                    qj[factor] = normalize(w)
                else:
                    qj.pop(factor, None)
        else:
            if not full:
                rem.update(p)
                break
            rem[t] = normalize(c)
            del p[t]
    for k in rem:
        rem[k] = normalize(rem[k])
    return rem, quots


def _leads(basis_terms, order):
    return _DivisorIndex(_lead(g, order) for g in basis_terms)


def reduce(f, basis: list, order):
    """Divide f by basis: returns (remainder, quotients) with f = sum q_j*b_j + r.

    The basis element with the lowest index wins when several leading terms
    divide the current term.
    """
    for b in basis:
        if not b:
            raise ZeroElement("cannot divide by zero")
        if b.rank != f.rank:
            raise RankMismatch("dividend and divisors have different ranks")
    terms = [b._t for b in basis]
    rem, quots = _reduce_terms(f._t, terms, _leads(terms, order), order, track=True)
    quotients = [Polynomial({m: c for m, c in q.items()}) for q in quots]
    return wrap_terms(rem, f), quotients


def normal_form(f, basis: list, order):
    terms = [b._t for b in basis]
    rem, _ = _reduce_terms(f._t, terms, _leads(terms, order), order, track=False)
    return wrap_terms(rem, f)


def _spoly_terms(f, g, lf, lg):
    """S-polynomial of two term dicts given their leads; None when lcm is zero."""
    mf, i_f, cf = lf[:3]
    mg, i_g, cg = lg[:3]
    if i_f != i_g:
        return None, None
    L = lcm(mf, mg)
    uf, ug = div(L, mf), div(L, mg)
    out: dict = {}
    for (m, i), c in f.items():
        out[(mul(m, uf), i)] = divide(c, cf)
    for (m, i), c in g.items():
        k = (mul(m, ug), i)
        w = out.get(k, 0) - divide(c, cg)
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return {k: normalize(v) for k, v in out.items()}, L


def s_polynomial(f, g, order):
    """lcm/lt(f)*f - lcm/lt(g)*g; zero when leading terms sit in different coordinates."""
    if not f or not g:
        raise ZeroElement("S-polynomial of a zero element")
    if f.rank != g.rank:
        raise RankMismatch("S-polynomial of elements of different rank")
    t, _ = _spoly_terms(f._t, g._t, _lead(f._t, order), _lead(g._t, order))
    return wrap_terms(t or {}, f)


def _is_module(elements) -> bool:
    return any(isinstance(e, ModuleElement) for e in elements)


def _pair_skippable(li, lj, module: bool) -> bool:
    if li[1] != lj[1]:
        return True
    return not module and coprime(li[0], lj[0])


def buchberger(gens: list, order, deadline: float | None = None) -> list:
    """Groebner basis of the span of ``gens`` (monic, in generation order).

    S-pairs are processed in ascending order of their lcm; ties fall back to
    the pair indices so the output is fully deterministic.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    like = gens[0]
    if any(g.rank != like.rank for g in gens):
        raise RankMismatch("generators of different rank")
    module = _is_module(gens)
    basis = [g.monic(order)._t for g in gens]
    index = _leads(basis, order)
    leads = index.leads
    heap: list = []

    def push(i, j):
        li, lj = leads[i], leads[j]
        if _pair_skippable(li, lj, module):
            return
        L = lcm(li[0], lj[0])
        heapq.heappush(heap, (order.key(L, li[1]), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    while heap:
        _check_deadline(deadline)
        _, i, j = heapq.heappop(heap)
        s, _ = _spoly_terms(basis[i], basis[j], leads[i], leads[j])
        if not s:
            continue
        h, _ = _reduce_terms(s, basis, index, order, track=False, full=False)
        if not h:
            continue
        lh = _lead(h, order)
        h = {k: divide(v, lh[2]) for k, v in h.items()}
        basis.append(h)
        index.append((lh[0], lh[1], 1, lh[3]))
        n = len(basis) - 1
        for i2 in range(n):
            push(i2, n)
    return [wrap_terms(b, like) for b in basis]


def is_groebner(basis: list, order, deadline: float | None = None) -> bool:
    """True when every S-pair of ``basis`` reduces to zero modulo ``basis``."""
    basis = [b for b in basis if b]
    if not basis:
        return True
    module = _is_module(basis)
    terms = [b._t for b in basis]
    index = _leads(terms, order)
    leads = index.leads
    for j in range(len(terms)):
        for i in range(j):
            _check_deadline(deadline)
            if _pair_skippable(leads[i], leads[j], module):
                continue
            s, _ = _spoly_terms(terms[i], terms[j], leads[i], leads[j])
            if s:
                h, _ = _reduce_terms(s, terms, index, order, track=False, full=False)
                if h:
                    return False
    return True


def reduce_basis(gb: list, order, check: bool = True) -> list:
    """The reduced Groebner basis spanned by ``gb``, sorted by descending lead.

    With ``check`` the input is first verified to be a Groebner basis and
    NotGroebner is raised otherwise.
    """
    gb = [g for g in gb if g]
    if check and not is_groebner(gb, order):
        raise NotGroebner("reduce_basis input fails the S-pair criterion")
    if not gb:
        return []
    like = gb[0]
    items = [(g.leading_term(order), g) for g in gb]
    items.sort(key=lambda it: order.key(*it[0][1]))
    kept = []
    for (c, (m, i)), g in items:
        if any(li == i and divides(lm, m) for (_, (lm, li)), _ in kept):
            continue
        kept.append(((c, (m, i)), g))
    monic = [g.monic(order)._t for _, g in kept]
    leads = _leads(monic, order).leads
    out = []
    for n, g in enumerate(monic):
        lead_key = (leads[n][0], leads[n][1])
        tail = {k: v for k, v in g.items() if k != lead_key}
        others = monic[:n] + monic[n + 1:]
        other_index = _DivisorIndex(leads[:n] + leads[n + 1:])
        rem, _ = _reduce_terms(tail, others, other_index, order, track=False)
        rem[lead_key] = 1
        out.append(wrap_terms(rem, like))
    out.sort(key=lambda g: order.key(*g.leading_term(order)[1]), reverse=True)
    return out


def syzygy_basis(gb: list, order, check: bool = True) -> list:
    """Schreyer syzygies s_ij for i < j with leading terms in one coordinate.

    s_ij = X_ij/lt(g_i) e_i - X_ij/lt(g_j) e_j - sum_k q_k e_k where the q_k
    come from dividing S(g_i, g_j) by gb.  Returned in (i, j) order; use
    ``syzygy_pairs`` to get the (i, j) labels as well.
    """
    return [s for _, s in syzygy_pairs(gb, order, check)]


def syzygy_pairs(gb: list, order, check: bool = True) -> list:
    """List of ((i, j), s_ij); a nonzero remainder raises NotGroebner when ``check``."""
    if any(not g for g in gb):
        raise ZeroElement("syzygies of a family containing zero")
    terms = [g._t for g in gb]
    index = _leads(terms, order)
    leads = index.leads
    r = len(gb)
    out = []
    for i in range(r):
        for j in range(i + 1, r):
            s, L = _spoly_terms(terms[i], terms[j], leads[i], leads[j])
            if s is None:
                continue
            rem, quots = _reduce_terms(s, terms, index, order, track=True)
            if rem:
                if check:
                    raise NotGroebner(f"S-pair ({i}, {j}) has nonzero remainder")
                continue
            t: dict = {}
            t[(div(L, leads[i][0]), i)] = divide(1, leads[i][2])
            k = (div(L, leads[j][0]), j)
            t[k] = t.get(k, 0) - divide(1, leads[j][2])
            for kk, q in enumerate(quots):
                for m, c in q.items():
                    key = (m, kk)
                    w = t.get(key, 0) - c
                    if w:
                        t[key] = w
                    else:
                        t.pop(key, None)
            out.append(((i, j), ModuleElement({k2: v for k2, v in t.items()}, r)))
    return out


def module_equal(A: list, B: list, order, deadline: float | None = None) -> bool:
    """True iff A and B span the same ideal or submodule."""
    A = [a for a in A if a]
    B = [b for b in B if b]
    ranks = {x.rank for x in A + B}
    if len(ranks) > 1:
        raise RankMismatch("module_equal on elements of different rank")
    if not A or not B:
        return not A and not B
    GA = buchberger(A, order, deadline)
    GB = buchberger(B, order, deadline)
    return all(not normal_form(a, GB, order) for a in A) and all(
        not normal_form(b, GA, order) for b in B
    )
