"""Exponent-vector helpers.

A monomial is a plain tuple of six nonnegative integers holding the
exponents of T0, T1, X0, X1, X2 and one auxiliary variable.  The auxiliary
slot is the Z of the extended ring (bidegree (-d, 1)) in elimination runs,
and doubles as a scratch variable for ideal quotients.
"""

from __future__ import annotations

VARS = ("T0", "T1", "X0", "X1", "X2", "Z")
NVARS = len(VARS)
T0, T1, X0, X1, X2, Z = range(NVARS)
ONE = (0,) * NVARS

Monomial = tuple


def mono(**exponents: int) -> Monomial:
    """Build a monomial from keyword exponents, e.g. ``mono(T0=3, X1=1)``."""
    e = [0] * NVARS
    for name, k in exponents.items():
        if k < 0:
            raise ValueError(f"negative exponent for {name}")
        e[VARS.index(name)] = k
    return tuple(e)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4], a[5] + b[5])


def div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4], a[5] - b[5])


def divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return (a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]
            and a[3] <= b[3] and a[4] <= b[4] and a[5] <= b[5])


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def degree(a: Monomial) -> int:
    return sum(a)


def bidegree(a: Monomial, d: int) -> tuple[int, int]:
    """Bidegree with T of degree (1,0), X of degree (0,1) and Z of degree (-d,1)."""
    return (a[T0] + a[T1] - d * a[Z], a[X0] + a[X1] + a[X2] + a[Z])


_THRESHOLDS = (1, 2, 4, 8, 16, 32, 64)


def divmask(a: Monomial) -> int:
    """Bit signature with divmask(a) & ~divmask(b) == 0 whenever a divides b."""
    bits, pos = 0, 0
    for e in a:
        for thr in _THRESHOLDS:
            if e >= thr:
                bits |= 1 << pos
            pos += 1
    return bits
