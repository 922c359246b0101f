"""Exact extended-real arithmetic over rationals.

An extended real is a reduced rational, +inf, or -inf.  Addition and
multiplication are total: inf + (-inf) = 0 and 0 * (+-inf) = 0.  List
sums fold to the right, which makes the order of mixed infinities
observable (a sum like [inf, -inf, inf] is not reorderable).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UndefinedTail

_NEG, _FIN, _POS = -1, 0, 1


class XReal:
    """A rational, +inf, or -inf, totally ordered by -inf < q < +inf."""

    __slots__ = ("kind", "q")

    def __init__(self, kind: int, q: Fraction | None = None):
        if kind == _FIN:
            if not isinstance(q, Fraction):
                raise TypeError("finite XReal needs a Fraction")
        elif q is not None:
            raise TypeError("infinite XReal carries no rational part")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("XReal is immutable")

    @staticmethod
    def finite(value) -> "XReal":
        return XReal(_FIN, Fraction(value))

    @staticmethod
    def parse(text: str) -> "XReal":
        """Parse "p/q", "p", "inf" or "-inf"."""
        s = text.strip()
        if s == "inf":
            return POS_INF
        if s == "-inf":
            return NEG_INF
        return XReal.finite(Fraction(s))

    @property
    def is_finite(self) -> bool:
        return self.kind == _FIN

    @property
    def is_pos_inf(self) -> bool:
        return self.kind == _POS

    @property
    def is_neg_inf(self) -> bool:
        return self.kind == _NEG

    def rational(self) -> Fraction:
        if self.kind != _FIN:
            raise ValueError("not a finite value")
        return self.q

    def _key(self):
        return (self.kind, self.q if self.kind == _FIN else 0)

    def __eq__(self, other):
        if not isinstance(other, XReal):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        if self.kind != other.kind:
            return self.kind < other.kind
        if self.kind == _FIN:
            return self.q < other.q
        return False

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return other < self

    def __ge__(self, other):
        return other <= self

    def __add__(self, other):
        return xadd(self, other)

    def __mul__(self, other):
        return xmul(self, other)

    def __neg__(self):
        return xneg(self)

    def __str__(self):
        if self.kind == _POS:
            return "inf"
        if self.kind == _NEG:
            return "-inf"
        return str(self.q)

    def __repr__(self):
        return f"XReal({self})"


POS_INF = XReal(_POS)
NEG_INF = XReal(_NEG)
ZERO = XReal.finite(0)
ONE = XReal.finite(1)


def fin(value) -> XReal:
    """Shorthand for a finite extended real."""
    return XReal.finite(value)


def xadd(a: XReal, b: XReal) -> XReal:
    """Total addition: opposite infinities cancel to 0."""
    if a.kind == _FIN and b.kind == _FIN:
        return XReal.finite(a.q + b.q)
    if a.kind == _POS:
        return ZERO if b.kind == _NEG else POS_INF
    if a.kind == _NEG:
        return ZERO if b.kind == _POS else NEG_INF
    return b


def xadd_legal(a: XReal, b: XReal) -> bool:
    """False exactly when the operands are opposite infinities."""
    return not (a.kind == -b.kind and a.kind != _FIN)


def xmul(a: XReal, b: XReal) -> XReal:
    """Total multiplication with the measure-theoretic convention 0 * inf = 0."""
    if a.kind == _FIN and b.kind == _FIN:
        return XReal.finite(a.q * b.q)
    if (a.kind == _FIN and a.q == 0) or (b.kind == _FIN and b.q == 0):
        return ZERO
    sign_a = a.kind if a.kind != _FIN else (1 if a.q > 0 else -1)
    sign_b = b.kind if b.kind != _FIN else (1 if b.q > 0 else -1)
    return POS_INF if sign_a * sign_b > 0 else NEG_INF


def xneg(a: XReal) -> XReal:
    if a.kind == _POS:
        return NEG_INF
    if a.kind == _NEG:
        return POS_INF
    return XReal.finite(-a.q)


def xsub(a: XReal, b: XReal) -> XReal:
    return xadd(a, xneg(b))


def xmin(a: XReal, b: XReal) -> XReal:
    return a if a <= b else b


def xmax(a: XReal, b: XReal) -> XReal:
    return a if a >= b else b


def is_nonneg(a: XReal) -> bool:
    return ZERO <= a


def sum_xreal_list(values) -> XReal:
    """Right fold of xadd over the list, seeded with 0.

    The fold direction is part of the contract: with mixed infinities the
    result depends on it, e.g. [inf, -inf, inf] sums to inf because the
    tail -inf + inf cancels first.
    """
    acc = ZERO
    for v in reversed(list(values)):
        acc = xadd(v, acc)
    return acc


def sum_xreal_map(items, f) -> XReal:
    """sum_xreal_list applied to the image of the list under f."""
    return sum_xreal_list([f(x) for x in items])


CONSTANT_AFTER_PREFIX = "constant-after-prefix"
UNDEFINED = "undefined"


class TaggedSeq:
    """A sequence given by a finite prefix plus a tail tag.

    Under the constant tag, every term past the prefix equals the last
    prefix element, so suprema and inferior limits are computable from
    the prefix alone.  An undefined tail blocks any operation that would
    need terms beyond the prefix.
    """

    __slots__ = ("prefix", "tail")

    def __init__(self, prefix, tail: str = CONSTANT_AFTER_PREFIX):
        prefix = tuple(prefix)
        if tail not in (CONSTANT_AFTER_PREFIX, UNDEFINED):
            raise ValueError(f"unknown tail tag {tail!r}")
        if tail == CONSTANT_AFTER_PREFIX and not prefix:
            raise ValueError("constant tail needs a non-empty prefix")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    def __setattr__(self, name, value):
        raise AttributeError("TaggedSeq is immutable")

    def __eq__(self, other):
        if not isinstance(other, TaggedSeq):
            return NotImplemented
        return self.prefix == other.prefix and self.tail == other.tail

    def __hash__(self):
        return hash((self.prefix, self.tail))

    def __repr__(self):
        return f"TaggedSeq({list(self.prefix)!r}, {self.tail!r})"

    @property
    def is_constant_after_prefix(self) -> bool:
        return self.tail == CONSTANT_AFTER_PREFIX

    def require_constant(self):
        if self.tail != CONSTANT_AFTER_PREFIX:
            raise UndefinedTail("operation needs a constant tail")

    def term(self, n: int):
        """The n-th term; past the prefix this is the constant tail value."""
        if n < 0:
            raise IndexError(n)
        if n < len(self.prefix):
            return self.prefix[n]
        self.require_constant()
        return self.prefix[-1]


def sup_seq(s: TaggedSeq) -> XReal:
    """Supremum of an eventually-constant sequence: the max of its prefix."""
    s.require_constant()
    return max(s.prefix)


def liminf_seq(s: TaggedSeq) -> XReal:
    """sup over m of (inf of terms from m on), exact for constant tails.

    Suffix infima are computed over the prefix extended by one tail
    term; their maximum is the inferior limit.
    """
    s.require_constant()
    tail_value = s.prefix[-1]
    best = tail_value  # the suffix starting past the prefix
    for m in range(len(s.prefix)):
        best = xmax(best, min(s.prefix[m:]))
    return best
