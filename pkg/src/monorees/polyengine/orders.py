"""Term orders on monomials and on free-module monomials (mono, index).

Every order exposes ``key(mono, idx)`` returning a tuple whose natural
Python ordering is the term order.  Larger key means larger monomial.
"""

from __future__ import annotations

from ..errors import RankMismatch, ZeroElement
from .monomial import NVARS, T0, T1, X0, X1, X2, Z, mul

LEX_SIGMA_POSITIVE = "LexSigmaPositive"
LEX_SIGMA_NONPOSITIVE = "LexSigmaNonpositive"
ELIMINATION_Z = "EliminationZ"

# Variable priorities, most significant first.
_PRIORITY = {
    LEX_SIGMA_POSITIVE: (T0, T1, X0, X1, X2, Z),
    LEX_SIGMA_NONPOSITIVE: (T0, T1, X1, X0, X2, Z),
}


class TermOrder:
    """Lexicographic order on the six variables.

    ``EliminationZ`` puts the auxiliary variable first and then follows the
    priority of ``base``.  Module monomials are compared term-over-position
    with the lower basis index winning ties.
    """

    def __init__(self, variant: str, base: "TermOrder | None" = None):
        if variant == ELIMINATION_Z:
            base = base or TermOrder(LEX_SIGMA_POSITIVE)
            rest = tuple(v for v in base.priority if v != Z)
            self.priority = (Z,) + rest
        elif variant in _PRIORITY:
            self.priority = _PRIORITY[variant]
        else:
            raise ValueError(f"unknown term order {variant!r}")
        self.variant = variant
        self.base = base
        self.rank = None
        self._cache: dict = {}

    def __repr__(self) -> str:
        if self.base is not None:
            return f"TermOrder({self.variant!r}, base={self.base!r})"
        return f"TermOrder({self.variant!r})"

    def mono_key(self, m) -> tuple:
        k = self._cache.get(m)
        if k is None:
            k = tuple(m[i] for i in self.priority)
            self._cache[m] = k
        return k

    def key(self, m, idx: int = 0) -> tuple:
        return (self.mono_key(m), -idx)


class InducedOrder:
    """Order on the free module with basis indexed like ``family``.

    m*e_i is compared through lm(m*f_i) under ``base``; when those agree the
    smaller index is the larger module monomial.
    """

    def __init__(self, family, base):
        from .elements import as_terms, leading_term_terms

        self.base = base
        self.family = list(family)
        self.rank = len(self.family)
        self.leads = []
        for f in self.family:
            t = as_terms(f)
            if not t:
                raise ZeroElement("induced order needs a family of nonzero elements")
            _, (m, i) = leading_term_terms(t, base)
            self.leads.append((m, i))
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"InducedOrder(rank={self.rank}, base={self.base!r})"

    def key(self, m, idx: int = 0) -> tuple:
        k = self._cache.get((m, idx))
        if k is None:
            if not 0 <= idx < self.rank:
                raise RankMismatch(f"basis index {idx} outside rank {self.rank}")
            lm, li = self.leads[idx]
            k = (self.base.key(mul(m, lm), li), -idx)
            self._cache[(m, idx)] = k
        return k


def lex_order(sigma_q: int) -> TermOrder:
    """The lexicographic order used for a pair, chosen by the sign of sigma_q."""
    return TermOrder(LEX_SIGMA_POSITIVE if sigma_q > 0 else LEX_SIGMA_NONPOSITIVE)


def compare(a, b, order) -> int:
    """-1, 0 or 1 as module monomial a is smaller, equal or larger than b.

    Plain monomials are accepted and treated as sitting in coordinate 0.
    """
    a = _as_module_monomial(a)
    b = _as_module_monomial(b)
    rank = getattr(order, "rank", None)
    if rank is not None and (a[1] >= rank or b[1] >= rank):
        raise RankMismatch("basis index outside the rank of the order")
    ka, kb = order.key(*a), order.key(*b)
    return (ka > kb) - (ka < kb)


def _as_module_monomial(x):
    if len(x) == 2 and isinstance(x[0], tuple):
        return x
    if len(x) != NVARS:
        raise ValueError(f"not a monomial: {x!r}")
    return (tuple(x), 0)
