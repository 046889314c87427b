"""Exact polynomials and free-module elements.

Both classes keep their terms in a dict keyed by module monomials
``(exponent_tuple, basis_index)``; a Polynomial is the rank-one case where
every index is 0.  Sharing the layout lets the Groebner code treat ideals
and submodules uniformly.  Coefficients are ints, or Fractions when a
division produced a non-integer.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import NotHomogeneous, RankMismatch, ZeroElement
from .monomial import NVARS, ONE, VARS, bidegree, mul

Coefficient = "int | Fraction"


def normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def divide(a, b):
    """Exact a / b that stays an int whenever possible."""
    if b == 1:
        return a
    if b == -1:
        return -a
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return normalize(Fraction(a) / b)


def _clean(terms: dict) -> dict:
    return {k: normalize(v) for k, v in terms.items() if v != 0}


class _TermMap:
    __slots__ = ("_t", "rank", "_hash")

    def __init__(self, t: dict, rank: int):
        self._t = t
        self.rank = rank
        self._hash = None

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.rank == other.rank and self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.rank, frozenset(self._t.items())))
        return self._hash

    def _new(self, t: dict):
        return type(self)._raw(t, self.rank)

    @classmethod
    def _raw(cls, t: dict, rank: int):
        obj = cls.__new__(cls)
        _TermMap.__init__(obj, t, rank)
        return obj

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank} differ")

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        self._check_rank(other)
        t = dict(self._t)
        for k, v in other._t.items():
            w = t.get(k, 0) + v
            if w:
                t[k] = normalize(w)
            else:
                t.pop(k, None)
        return self._new(t)

    def __neg__(self):
        return self._new({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return self._new({})
        return self._new({k: normalize(v * c) for k, v in self._t.items()})

    def mul_monomial(self, m, c=1):
        """Multiply by the term c*m."""
        if c == 0:
            return self._new({})
        return self._new({(mul(k[0], m), k[1]): normalize(v * c) for k, v in self._t.items()})

    def mul_poly(self, p: "Polynomial"):
        out: dict = {}
        for (pm, _), pc in p._t.items():
            for (m, i), c in self._t.items():
                k = (mul(m, pm), i)
                w = out.get(k, 0) + pc * c
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return self._new(_clean(out))

    def leading_term(self, order):
        """(coefficient, (monomial, index)) of the largest term under order."""
        return leading_term_terms(self._t, order)

    def items(self):
        return self._t.items()

    def bidegrees(self, d: int) -> set:
        return {bidegree(m, d) for (m, _) in self._t}

    def monic(self, order):
        c, _ = self.leading_term(order)
        return self.scale(divide(1, c)) if c != 1 else self

    def has_constant_term(self) -> bool:
        return any(m == ONE for (m, _) in self._t)


class Polynomial(_TermMap):
    """Element of Q[T0, T1, X0, X1, X2, Z]."""

    __slots__ = ()

    def __init__(self, terms: dict | None = None):
        t = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != NVARS or any(x < 0 for x in m):
                raise ValueError(f"bad exponent vector {m!r}")
            t[(m, 0)] = t.get((m, 0), 0) + c
        super().__init__(_clean(t), 1)

    @classmethod
    def monomial(cls, m, c=1) -> "Polynomial":
        return cls({m: c})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def binomial(cls, m1, m2) -> "Polynomial":
        """m1 - m2."""
        return cls({m1: 1}) - cls({m2: 1})

    @property
    def terms(self) -> dict:
        return {m: c for (m, _), c in self._t.items()}

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.mul_poly(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def bidegree(self, d: int) -> tuple[int, int]:
        degs = self.bidegrees(d)
        if len(degs) != 1:
            raise NotHomogeneous(f"not bihomogeneous: {sorted(degs)}")
        return degs.pop()

    def substitute(self, images: dict) -> "Polynomial":
        """Replace variable indices by polynomials; unlisted variables stay put."""
        powers: dict = {}

        def power(v, k):
            key = (v, k)
            if key not in powers:
                powers[key] = images[v] ** k
            return powers[key]

        out = Polynomial()
        for (m, _), c in self._t.items():
            kept = tuple(0 if v in images else m[v] for v in range(NVARS))
            term = Polynomial.monomial(kept, c)
            for v, img in images.items():
                if m[v]:
                    term = term * power(v, m[v])
            out = out + term
        return out

    def to_text(self, order=None) -> str:
        return format_terms(self._t, order, module=False)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


class ModuleElement(_TermMap):
    """Element of the free module of the given rank over the polynomial ring."""

    __slots__ = ()

    def __init__(self, terms: dict | None = None, rank: int = 1):
        t = {}
        for (m, i), c in (terms or {}).items():
            m = tuple(m)
            if not 0 <= i < rank:
                raise RankMismatch(f"basis index {i} outside rank {rank}")
            t[(m, i)] = t.get((m, i), 0) + c
        super().__init__(_clean(t), rank)

    @classmethod
    def from_components(cls, comps) -> "ModuleElement":
        t = {}
        for i, p in enumerate(comps):
            for (m, _), c in p._t.items():
                t[(m, i)] = c
        return cls._raw(t, len(comps))

    @classmethod
    def basis_vector(cls, i: int, rank: int, poly: Polynomial | None = None) -> "ModuleElement":
        poly = poly if poly is not None else Polynomial.constant(1)
        return cls({(m, i): c for (m, _), c in poly._t.items()}, rank)

    def component(self, i: int) -> Polynomial:
        if not 0 <= i < self.rank:
            raise RankMismatch(f"basis index {i} outside rank {self.rank}")
        return Polynomial._raw({(m, 0): c for (m, j), c in self._t.items() if j == i}, 1)

    def components(self) -> list:
        comps = [dict() for _ in range(self.rank)]
        for (m, i), c in self._t.items():
            comps[i][(m, 0)] = c
        return [Polynomial._raw(t, 1) for t in comps]

    def support(self) -> list:
        return sorted({i for (_, i) in self._t})

    def __rmul__(self, other):
        if isinstance(other, Polynomial):
            return self.mul_poly(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        return self.__rmul__(other)

    def apply(self, family):
        """Sum of component_i * family_i; family entries share a type."""
        if len(family) != self.rank:
            raise RankMismatch(f"element of rank {self.rank} applied to {len(family)} entries")
        t: dict = {}
        for (m, i), c in self._t.items():
            for (fm, fi), fc in family[i]._t.items():
                k = (mul(m, fm), fi)
                w = t.get(k, 0) + c * fc
                if w:
                    t[k] = w
                else:
                    t.pop(k, None)
        return type(family[0])._raw(_clean(t), family[0].rank)

    def to_text(self, order=None) -> str:
        return format_terms(self._t, order, module=True)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"ModuleElement({self.to_text()!r}, rank={self.rank})"


def as_terms(f) -> dict:
    return f._t


def wrap_terms(t: dict, like):
    return type(like)._raw(t, like.rank)


def leading_term_terms(t: dict, order):
    if not t:
        raise ZeroElement("the zero element has no leading term")
    key = order.key
    best = max(t, key=lambda k: key(k[0], k[1]))
    return t[best], best


def leading_term(f, order):
    return leading_term_terms(f._t, order)


# ---------------------------------------------------------------------------
# Canonical text form

def _default_order():
    from .orders import LEX_SIGMA_POSITIVE, TermOrder

    return TermOrder(LEX_SIGMA_POSITIVE)


def monomial_text(m) -> str:
    parts = []
    for name, k in zip(VARS, m):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_terms(t: dict, order=None, module: bool = False) -> str:
    if not t:
        return "0"
    order = order or _default_order()
    keys = sorted(t, key=lambda k: order.key(k[0], k[1]), reverse=True)
    out = []
    for n, k in enumerate(keys):
        c = t[k]
        m, i = k
        factors = []
        mag = abs(c)
        body = monomial_text(m)
        if body:
            factors.append(body)
        if module:
            factors.append(f"e{i + 1}")
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        text = "*".join(factors)
        if n == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(\d+(?:/\d+)?)|(T0|T1|X0|X1|X2|Z)(?:\^(\d+))?|e\{?(\d+)\}?)$")


def _parse(text: str):
    text = text.strip()
    if text == "0":
        return {}, False
    pos, t, module = 0, {}, None
    while pos < len(text):
        mt = _TERM_RE.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        if pos > 0 and mt.group(1) is None:
            raise ValueError(f"missing sign in {text!r} at {pos}")
        pos = mt.end()
        sign = -1 if mt.group(1) == "-" else 1
        coeff, exps, idx = Fraction(sign), [0] * NVARS, None
        for factor in mt.group(2).strip().split("*"):
            mf = _FACTOR_RE.match(factor.strip())
            if not mf:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            num, var, exp, basis = mf.groups()
            if num is not None:
                coeff *= Fraction(num)
            elif var is not None:
                exps[VARS.index(var)] += int(exp) if exp else 1
            else:
                if idx is not None:
                    raise ValueError(f"two basis vectors in one term of {text!r}")
                idx = int(basis) - 1
        has_index = idx is not None
        if module is None:
            module = has_index
        elif module != has_index:
            raise ValueError(f"mixed polynomial and module terms in {text!r}")
        k = (tuple(exps), idx or 0)
        t[k] = t.get(k, 0) + coeff
    return _clean(t), bool(module)


def parse_polynomial(text: str) -> Polynomial:
    t, module = _parse(text)
    if module:
        raise ValueError(f"{text!r} is a module element, not a polynomial")
    return Polynomial._raw(t, 1)


def parse_module_element(text: str, rank: int) -> ModuleElement:
    t, module = _parse(text)
    if t and not module:
        raise ValueError(f"{text!r} has no basis vectors")
    for (_, i) in t:
        if not 0 <= i < rank:
            raise RankMismatch(f"basis index {i + 1} outside rank {rank}")
    return ModuleElement._raw(t, rank)
