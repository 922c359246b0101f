"""Countability bijections and the rational open-interval topology of the line.

Open subsets of the line are represented as finite unions of rational
open intervals, which is enough to exercise connected components,
topological-basis indexing, and second-countability witnesses exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import InvalidIndex, InvalidInterval
from .xreal import XReal

OPEN = "open"
CLOSED = "closed"
CLOSED_OPEN = "closed-open"


def pair_encode(n1: int, n2: int) -> int:
    """Cantor pairing: a bijection from pairs of naturals to naturals."""
    s = n1 + n2
    return s * (s + 1) // 2 + n2


def pair_decode(n: int) -> tuple[int, int]:
    w = (isqrt(8 * n + 1) - 1) // 2
    n2 = n - w * (w + 1) // 2
    return w - n2, n2


def nat_to_z(n: int) -> int:
    """Zig-zag bijection: 0, 1, -1, 2, -2, ..."""
    return (n + 1) // 2 if n % 2 else -(n // 2)


def z_to_nat(z: int) -> int:
    return 2 * z - 1 if z > 0 else -2 * z


def _cw_rational(k: int) -> Fraction:
    # Calkin-Wilf tree walk: the binary digits of k below the leading 1
    # pick left (0) or right (1) children starting from 1/1.
    num, den = 1, 1
    for bit in bin(k)[3:]:
        if bit == "1":
            num += den
        else:
            den += num
    return Fraction(num, den)

def _cw_index(q: Fraction) -> int:
    num, den = q.numerator, q.denominator
    bits = []
    while (num, den) != (1, 1):
        if num > den:
            bits.append("1")
            num -= den
        else:
            bits.append("0")
            den -= num
    return int("1" + "".join(reversed(bits)), 2)


def nat_to_q(n: int) -> Fraction:
    """Bijection from naturals onto all rationals (zero, then +-Calkin-Wilf)."""
    if n == 0:
        return Fraction(0)
    if n % 2:
        return _cw_rational((n + 1) // 2)
    return -_cw_rational(n // 2)


def q_to_nat(q) -> int:
    q = Fraction(q)
    if q == 0:
        return 0
    if q > 0:
        return 2 * _cw_index(q) - 1
    return 2 * _cw_index(-q)


def nat_to_q2(n: int) -> tuple[Fraction, Fraction]:
    i, j = pair_decode(n)
    return nat_to_q(i), nat_to_q(j)


def q2_to_nat(pair) -> int:
    a, b = pair
    return pair_encode(q_to_nat(Fraction(a)), q_to_nat(Fraction(b)))


@dataclass(frozen=True)
class RatInterval:
    """An interval with rational endpoints: open, closed, or closed-open."""

    lo: Fraction
    hi: Fraction
    kind: str = OPEN

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.kind not in (OPEN, CLOSED, CLOSED_OPEN):
            raise ValueError(f"unknown interval kind {self.kind!r}")

    @property
    def is_empty(self) -> bool:
        if self.kind == CLOSED:
            return self.lo > self.hi
        return self.lo >= self.hi

    def contains(self, x) -> bool:
        x = Fraction(x)
        if self.kind == OPEN:
            return self.lo < x < self.hi
        if self.kind == CLOSED:
            return self.lo <= x <= self.hi
        return self.lo <= x < self.hi


@dataclass(frozen=True)
class OpenSetFU:
    """A finite union of rational open intervals."""

    parts: tuple[RatInterval, ...]

    def __init__(self, parts=()):
        parts = tuple(parts)
        for p in parts:
            if p.kind != OPEN:
                raise ValueError("parts must be open intervals")
        object.__setattr__(self, "parts", parts)

    def contains(self, x) -> bool:
        return any(p.contains(x) for p in self.parts)

    def components(self) -> tuple[RatInterval, ...]:
        """Maximal disjoint open intervals of the union, sorted by lower end.

        Only strictly overlapping intervals merge: (0,1) and (1,2) stay
        apart since their union misses the point 1.
        """
        live = sorted((p for p in self.parts if not p.is_empty),
                      key=lambda p: (p.lo, p.hi))
        merged: list[list[Fraction]] = []
        for p in live:
            if merged and p.lo < merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], p.hi)
            else:
                merged.append([p.lo, p.hi])
        return tuple(RatInterval(lo, hi, OPEN) for lo, hi in merged)

    def normalized(self) -> "OpenSetFU":
        return OpenSetFU(self.components())

    def same_set(self, other: "OpenSetFU") -> bool:
        return self.components() == other.components()


def topo_basis_r(n: int) -> RatInterval:
    """The n-th rational open interval of the countable basis (may be empty)."""
    q1, q2 = nat_to_q2(n)
    return RatInterval(q1, q2, OPEN)


def topo_basis_r2(n: int) -> tuple[RatInterval, RatInterval]:
    """The n-th open box of the plane basis, as a pair of factor intervals."""
    i, j = pair_decode(n)
    return topo_basis_r(i), topo_basis_r(j)


def connected_component(a: OpenSetFU, x) -> tuple[XReal, XReal]:
    """Bounds of the largest interval inside the set containing x.

    For x outside the set the component degenerates to (x, x).
    """
    x = Fraction(x)
    for part in a.components():
        if part.contains(x):
            return XReal.finite(part.lo), XReal.finite(part.hi)
    return XReal.finite(x), XReal.finite(x)


def second_countable_witness(a: OpenSetFU) -> frozenset[int]:
    """Basis indices whose union reproduces the set exactly."""
    return frozenset(q2_to_nat((p.lo, p.hi)) for p in a.components())


def reconstruct_from_witness(indices) -> OpenSetFU:
    return OpenSetFU([topo_basis_r(n) for n in sorted(indices)])


def cc_as_nested_open(a, b, k: int) -> RatInterval:
    """The k-th open interval (a - 1/k, b + 1/k) enclosing the closed [a, b].

    The family shrinks as k grows and its intersection is [a, b].
    """
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise InvalidInterval(f"need a <= b, got {a} > {b}")
    if k < 1:
        raise InvalidIndex("k must be at least 1")
    step = Fraction(1, k)
    return RatInterval(a - step, b + step, OPEN)
