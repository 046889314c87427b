"""Integer sequences attached to a pair (d, u).

Two flavours of the Euclidean algorithm on (d-u, u) are computed here:

* the classical remainder sequence a_0, a_1, ..., a_p with quotients q_i and
  Bezout-type coefficients (s_i, t_i);
* the slow variant, which only ever subtracts, producing pairs (b_n, c_n)
  and the 4-tuples (sigma_n, tau_n, alpha_n, beta_n) with
  sigma_n*u + tau_n*(d-u) = b_n and alpha_n*u + beta_n*(d-u) = c_n.

Indices follow the usual mathematical convention: slow-sequence entries are
numbered from 1, classical ones from 0.  Accessor methods take those
1-based/0-based indices directly so callers never do the offset arithmetic.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import gcd

from .errors import IndexOutOfRange, NonCoprime, NoSolution, OutOfRange


@dataclass(frozen=True)
class InputPair:
    d: int
    u: int

    def __iter__(self):
        yield self.d
        yield self.u


def validate(d: int, u: int, allow_swap: bool = False) -> InputPair:
    """Check that (d, u) is admissible and return it as an InputPair.

    With ``allow_swap`` a pair with d/2 < u < d is mapped to (d, d-u), which
    corresponds to exchanging T0 with T1 and X0 with X2.
    """
    if isinstance(d, bool) or isinstance(u, bool) or not isinstance(d, int) or not isinstance(u, int):
        raise OutOfRange(f"d and u must be integers, got {d!r}, {u!r}")
    if d < 3:
        raise OutOfRange(f"d must be at least 3, got {d}")
    if u <= 0 or u >= d:
        raise OutOfRange(f"u must satisfy 0 < u < d, got u={u}, d={d}")
    if gcd(d, u) != 1:
        raise NonCoprime(f"gcd({d}, {u}) = {gcd(d, u)} != 1")
    if 2 * u >= d:
        if not allow_swap:
            raise OutOfRange(f"need 2u < d, got d={d}, u={u} (use allow_swap to map u -> d-u)")
        u = d - u
    return InputPair(d, u)


@dataclass(frozen=True)
class EuclidData:
    a_seq: tuple[int, ...]   # a_0 .. a_p
    q_seq: tuple[int, ...]   # q_1 .. q_{p-1}
    p: int
    q: int
    s_seq: tuple[int, ...]   # s_0 .. s_p
    t_seq: tuple[int, ...]   # t_0 .. t_p

    def quotient(self, i: int) -> int:
        """q_i for 1 <= i <= p-1."""
        if not 1 <= i <= self.p - 1:
            raise IndexOutOfRange(f"quotient index {i} outside 1..{self.p - 1}")
        return self.q_seq[i - 1]


def euclid_data(pair: InputPair) -> EuclidData:
    d, u = pair
    a = [d - u, u]
    quotients = []
    while a[-1] != 0:
        qi, r = divmod(a[-2], a[-1])
        quotients.append(qi)
        a.append(r)
    p = len(a) - 1
    s = [0, 1]
    t = [1, 0]
    for qi in quotients:
        s.append(s[-2] - qi * s[-1])
        t.append(t[-2] - qi * t[-1])
    q_seq = tuple(quotients)
    return EuclidData(tuple(a), q_seq, p, sum(q_seq), tuple(s), tuple(t))


@dataclass(frozen=True)
class SersData:
    """Slow Euclidean remainder sequence with its extended companion.

    All per-index sequences are stored 0-based; use the accessor methods with
    the 1-based index n in 1..q+1.
    """

    b_seq: tuple[int, ...]
    c_seq: tuple[int, ...]
    sigma_seq: tuple[int, ...]
    tau_seq: tuple[int, ...]
    alpha_seq: tuple[int, ...]
    beta_seq: tuple[int, ...]
    m_seq: tuple[int, ...]   # m_0 .. m_p

    @property
    def q(self) -> int:
        return len(self.b_seq) - 1

    def _check(self, n: int) -> int:
        if not 1 <= n <= len(self.b_seq):
            raise IndexOutOfRange(f"index {n} outside 1..{len(self.b_seq)}")
        return n - 1

    def b(self, n: int) -> int:
        """b_n, with the convention b_{q+2} = 0."""
        if n == self.q + 2:
            return 0
        return self.b_seq[self._check(n)]

    def c(self, n: int) -> int:
        return self.c_seq[self._check(n)]

    def sigma(self, n: int) -> int:
        return self.sigma_seq[self._check(n)]

    def tau(self, n: int) -> int:
        return self.tau_seq[self._check(n)]

    def alpha(self, n: int) -> int:
        return self.alpha_seq[self._check(n)]

    def beta(self, n: int) -> int:
        return self.beta_seq[self._check(n)]

    def tuple4(self, n: int) -> tuple[int, int, int, int]:
        i = self._check(n)
        return (self.sigma_seq[i], self.tau_seq[i], self.alpha_seq[i], self.beta_seq[i])

    def gap(self, n: int) -> int:
        """|sigma_n - tau_n|, the X-degree of the n-th generator."""
        return abs(self.sigma(n) - self.tau(n))


def sers_data(pair: InputPair, e: EuclidData) -> SersData:
    d, u = pair
    b, c = [d - u], [u]
    sig, tau, alp, bet = [0], [1], [1], [0]
    for _ in range(e.q):
        bn, cn = b[-1], c[-1]
        s, t, a, be = sig[-1], tau[-1], alp[-1], bet[-1]
        if bn - cn >= cn:
            b.append(bn - cn)
            c.append(cn)
            sig.append(s - a)
            tau.append(t - be)
            alp.append(a)
            bet.append(be)
        else:
            b.append(cn)
            c.append(bn - cn)
            sig.append(a)
            tau.append(be)
            alp.append(s - a)
            bet.append(t - be)
    assert (b[-1], c[-1]) == (1, 0), (b, c)
    m = [1]
    for qi in e.q_seq:
        m.append(m[-1] + qi)
    m.append(e.q + 2)
    return SersData(tuple(b), tuple(c), tuple(sig), tuple(tau), tuple(alp), tuple(bet), tuple(m))


def ell_of(n: int, s: SersData) -> int:
    """The unique ell with m_{ell-1} <= n < m_ell, for 1 <= n <= q+1."""
    if not 1 <= n <= s.q + 1:
        raise IndexOutOfRange(f"ell_of needs 1 <= n <= {s.q + 1}, got {n}")
    return bisect_right(s.m_seq, n)


def m_of(n: int, s: SersData) -> int:
    """Shorthand for m_{ell(n)}."""
    return s.m_seq[ell_of(n, s)]


def rho_of(n: int, s: SersData) -> int:
    """n+1 when n+1 < m_{ell(n)}, otherwise m_{ell(n)+1}; defined for 1 <= n <= q."""
    if not 1 <= n <= s.q:
        raise IndexOutOfRange(f"rho_of needs 1 <= n <= {s.q}, got {n}")
    ell = ell_of(n, s)
    if n + 1 < s.m_seq[ell]:
        return n + 1
    return s.m_seq[ell + 1]


def minimal_solution(a: int, b: int, c: int) -> tuple[int, int]:
    """Nonnegative (gamma, delta) with a = b*gamma - c*delta and gamma+delta minimal.

    Since gamma + delta = gamma + (b*gamma - a)/c grows with gamma, the answer
    is the smallest admissible gamma with b*gamma >= a.
    """
    if a <= 0 or b <= 0 or c <= 0:
        raise OutOfRange("minimal_solution expects positive integers")
    g = gcd(b, c)
    if a % g:
        raise NoSolution(f"gcd({b}, {c}) = {g} does not divide {a}")
    modulus = c // g
    if modulus == 1:
        residue = 0
    else:
        residue = (a // g) * pow(b // g, -1, modulus) % modulus
    lower = -(-a // b)
    gamma = lower + (residue - lower) % modulus
    delta = (b * gamma - a) // c
    return gamma, delta


def coprime_pairs(dmax: int, dmin: int = 3, umin: int = 1):
    """All admissible (d, u) with dmin <= d <= dmax, in increasing (d, u) order."""
    for d in range(max(dmin, 3), dmax + 1):
        for u in range(umin, (d + 1) // 2):
            if gcd(d, u) == 1 and 2 * u < d:
                yield InputPair(d, u)
