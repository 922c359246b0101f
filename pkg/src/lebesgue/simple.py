"""Simple functions with canonical value lists and their integral.

A simple function is rational-valued with measurable preimages.  Its
canonical list holds exactly the attained values, strictly sorted, so
equality of simple functions and the value of the integral never depend
on how the function was presented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    MissingValue,
    NegativeScalar,
    NegativeValue,
    PreimageNotMeasurable,
    SpaceMismatch,
    ValueNotInCanon,
)
from .measure import Measure
from .sigma import PointFn, SigmaAlgebra, SubsetMask, charac
from .xreal import XReal, fin, sum_xreal_map, xmul


def select(pred, items) -> list:
    """Elements satisfying the predicate, order preserved."""
    return [x for x in items if pred(x)]


def canonize(f: PointFn, values) -> list[Fraction]:
    """The unique strictly sorted list of values actually attained by f.

    Pipeline order is fixed: drop duplicates, drop values with no
    preimage, sort.  The input must cover every attained value.
    """
    if not f.is_finite_valued():
        raise ValueError("canonize needs a rational-valued function")
    values = [Fraction(v) for v in values]
    attained = {v.rational() for v in f.values}
    missing = attained.difference(values)
    if missing:
        raise MissingValue(f"attained values {sorted(missing)} not in the list")
    deduped: list[Fraction] = []
    for v in values:
        if v not in deduped:
            deduped.append(v)
    useful = select(lambda y: y in attained, deduped)
    return sorted(useful)


@dataclass(frozen=True)
class SimpleFunction:
    """A rational-valued function, its canonical values, and its sigma-algebra."""

    sa: SigmaAlgebra
    fn: PointFn
    canon: tuple[Fraction, ...]

    def preimage(self, y: Fraction) -> SubsetMask:
        return self.fn.preimage_of(fin(y))

    def value_at(self, label: str) -> Fraction:
        return self.fn.at(label).rational()

    def is_nonneg(self) -> bool:
        return all(y >= 0 for y in self.canon)


def make_sf(sa: SigmaAlgebra, f: PointFn, hint=None) -> SimpleFunction:
    """Build a simple function, checking preimage measurability.

    The hint is any list covering the attained values; the canonical
    list, and hence the result, does not depend on it.
    """
    if f.space != sa.space:
        raise SpaceMismatch("function over a different space")
    if not f.is_finite_valued():
        raise ValueError("simple functions are rational-valued")
    if hint is None:
        hint = [v.rational() for v in f.values]
    canon = canonize(f, hint)
    for y in canon:
        if not sa.is_measurable(f.preimage_of(fin(y))):
            raise PreimageNotMeasurable(f"preimage of {y} is not measurable")
    return SimpleFunction(sa, f, tuple(canon))


def sf_reconstruct(s: SimpleFunction, label: str) -> XReal:
    """Rebuild s(x) as the sum over canonical values of y * charac(preimage)."""
    return sum_xreal_map(
        s.canon, lambda y: xmul(fin(y), charac(s.preimage(y)).at(label))
    )


def integral_simple(m: Measure, s: SimpleFunction) -> XReal:
    """Integral of a nonnegative simple function: sum of y * mu(preimage of y)."""
    if s.sa != m.sa:
        raise SpaceMismatch("simple function over a different sigma-algebra")
    if not s.is_nonneg():
        raise NegativeValue("integral needs a nonnegative simple function")
    return sum_xreal_map(s.canon, lambda y: xmul(fin(y), m.of(s.preimage(y))))


def _pointwise(op, s: SimpleFunction, t: SimpleFunction) -> PointFn:
    vals = [
        fin(op(a.rational(), b.rational()))
        for a, b in zip(s.fn.values, t.fn.values)
    ]
    return PointFn(s.fn.space, vals)


def sf_add(s: SimpleFunction, t: SimpleFunction) -> SimpleFunction:
    """Pointwise sum; candidate values are all pairwise sums of the canons."""
    if s.sa != t.sa:
        raise SpaceMismatch("simple functions over different sigma-algebras")
    total = _pointwise(lambda a, b: a + b, s, t)
    pair_sums = [a + b for a in s.canon for b in t.canon]
    return make_sf(s.sa, total, pair_sums)


def sf_scale(a, s: SimpleFunction) -> SimpleFunction:
    """Pointwise nonnegative scaling with a re-canonized value list."""
    a = Fraction(a)
    if a < 0:
        raise NegativeScalar(f"scale factor {a} is negative")
    scaled = PointFn(s.fn.space, [fin(a * v.rational()) for v in s.fn.values])
    return make_sf(s.sa, scaled, [a * y for y in s.canon])


def check_change_of_variable(m: Measure, s: SimpleFunction, t: SimpleFunction,
                             y) -> bool:
    """Both sides of the change-of-variable identity behind additivity.

    For a fixed value y of s: summing (y+z) mu(s=y, t=z) over the values
    z of t must equal summing u mu(s=y, s+t=u) over the values u of s+t.
    """
    y = Fraction(y)
    if s.sa != m.sa or t.sa != m.sa:
        raise SpaceMismatch("simple function over a different sigma-algebra")
    if y not in s.canon:
        raise ValueNotInCanon(f"{y} is not a canonical value")
    total = sf_add(s, t)
    on_y = s.preimage(y)
    lhs = sum_xreal_map(
        t.canon, lambda z: xmul(fin(y + z), m.of(on_y.intersect(t.preimage(z))))
    )
    rhs = sum_xreal_map(
        total.canon, lambda u: xmul(fin(u), m.of(on_y.intersect(total.preimage(u))))
    )
    return lhs == rhs
