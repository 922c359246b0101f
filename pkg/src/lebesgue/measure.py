"""Measures on finite sigma-algebras, stored as one weight per atom.

The constructor validates nonnegativity once; additivity over atoms
then defines the measure of every measurable set, and the classical
consequences (continuity from below, Boole's inequality, negligibility)
become checkable identities.
"""

from __future__ import annotations

from .errors import (
    NegativeValue,
    NotConstantOnAtoms,
    NotDiscrete,
    NotDisjoint,
    NotMeasurable,
    NotNondecreasing,
    SpaceMismatch,
)
from .sigma import PointFn, SigmaAlgebra, SubsetMask
from .xreal import (
    ONE,
    POS_INF,
    TaggedSeq,
    XReal,
    ZERO,
    is_nonneg,
    sum_xreal_list,
    sup_seq,
)


class Measure:
    """A validated nonnegative additive set function on a sigma-algebra."""

    __slots__ = ("sa", "atom_weights")

    def __init__(self, sa: SigmaAlgebra, atom_weights):
        atom_weights = tuple(atom_weights)
        if len(atom_weights) != len(sa.atoms):
            raise ValueError("one weight per atom required")
        for w in atom_weights:
            if not is_nonneg(w):
                raise NegativeValue(f"atom weight {w} is negative")
        object.__setattr__(self, "sa", sa)
        object.__setattr__(self, "atom_weights", atom_weights)

    def __setattr__(self, name, value):
        raise AttributeError("Measure is immutable")

    def of(self, a: SubsetMask) -> XReal:
        """Measure of a measurable set: the sum of its atoms' weights."""
        if a.space != self.sa.space:
            raise SpaceMismatch("mask over a different space")
        if not self.sa.is_measurable(a):
            raise NotMeasurable(f"set {{{','.join(a.member_labels())}}} is not measurable")
        terms = []
        for atom, w in zip(self.sa.atoms, self.atom_weights):
            if atom.is_subset_of(a):
                terms.append(w)
        return sum_xreal_list(terms)


def measure_of(m: Measure, a: SubsetMask) -> XReal:
    return m.of(a)


def dirac(sa: SigmaAlgebra, label: str) -> Measure:
    """Unit mass at one point; a measure for any sigma-algebra on the space."""
    k = sa.atom_index_of(label)
    return Measure(sa, [ONE if i == k else ZERO for i in range(len(sa.atoms))])


def counting(sa: SigmaAlgebra) -> Measure:
    """Cardinality measure; needs every singleton measurable."""
    if not sa.is_discrete:
        raise NotDiscrete("counting measure needs the discrete sigma-algebra")
    return Measure(sa, [ONE] * len(sa.atoms))


def weighted(sa: SigmaAlgebra, point_weights) -> Measure:
    """Measure from per-point weights, which must be constant on each atom."""
    point_weights = tuple(point_weights)
    if len(point_weights) != sa.space.size:
        raise ValueError("one weight per point required")
    for w in point_weights:
        if not is_nonneg(w):
            raise NegativeValue(f"point weight {w} is negative")
    atom_weights = []
    for atom in sa.atoms:
        vals = {point_weights[i] for i in range(sa.space.size) if atom.bits[i]}
        if len(vals) != 1:
            raise NotConstantOnAtoms(
                f"weights differ inside atom {{{','.join(atom.member_labels())}}}"
            )
        atom_weights.append(vals.pop())
    return Measure(sa, atom_weights)


def _require_measurable(m: Measure, fam: TaggedSeq):
    for a in fam.prefix:
        if a.space != m.sa.space:
            raise SpaceMismatch("family mask over a different space")
        if not m.sa.is_measurable(a):
            raise NotMeasurable("family contains a non-measurable set")


def _partial_sums(values) -> list[XReal]:
    sums = []
    for k in range(len(values)):
        sums.append(sum_xreal_list(values[: k + 1]))
    return sums


def check_sigma_additivity(m: Measure, fam: TaggedSeq) -> bool:
    """Measure of the disjoint union vs supremum of partial weight sums."""
    fam.require_constant()
    _require_measurable(m, fam)
    if not fam.prefix[-1].is_empty:
        # a non-empty tail repeats forever and meets itself
        raise NotDisjoint("tail set must be empty")
    for i in range(len(fam.prefix)):
        for j in range(i + 1, len(fam.prefix)):
            if not fam.prefix[i].is_disjoint_from(fam.prefix[j]):
                raise NotDisjoint(f"sets {i} and {j} intersect")
    union = SubsetMask.empty(m.sa.space)
    for a in fam.prefix:
        union = union.union(a)
    sums = _partial_sums([m.of(a) for a in fam.prefix])
    return m.of(union) == sup_seq(TaggedSeq(sums))


def layers(fam: TaggedSeq) -> TaggedSeq:
    """Disjointification: first set, then each set minus its predecessor.

    The output prefix runs one step past the input's so that a constant
    input tail yields an explicitly empty output tail.
    """
    fam.require_constant()
    out = [fam.term(0)]
    for n in range(1, len(fam.prefix) + 1):
        out.append(fam.term(n).difference(fam.term(n - 1)))
    return TaggedSeq(out)


def partial_union(fam: TaggedSeq, n: int) -> SubsetMask:
    """Union of the first n+1 terms."""
    acc = fam.term(0)
    for i in range(1, n + 1):
        acc = acc.union(fam.term(i))
    return acc


def check_continuity_from_below(m: Measure, fam: TaggedSeq) -> bool:
    """Measure of the increasing union vs supremum of the measures."""
    fam.require_constant()
    _require_measurable(m, fam)
    for i in range(len(fam.prefix) - 1):
        if not fam.prefix[i].is_subset_of(fam.prefix[i + 1]):
            raise NotNondecreasing(f"set {i + 1} does not contain set {i}")
    union = partial_union(fam, len(fam.prefix) - 1)
    values = TaggedSeq([m.of(a) for a in fam.prefix])
    return m.of(union) == sup_seq(values)


def check_boole(m: Measure, fam: TaggedSeq) -> bool:
    """Subadditivity: measure of the union is at most the sum of measures."""
    fam.require_constant()
    _require_measurable(m, fam)
    union = partial_union(fam, len(fam.prefix) - 1)
    sums = _partial_sums([m.of(a) for a in fam.prefix])
    tail_weight = m.of(fam.prefix[-1])
    # partial sums are nondecreasing; a positive tail makes them diverge
    bound = POS_INF if tail_weight > ZERO else sums[-1]
    return m.of(union) <= bound


def zero_weight_union(m: Measure) -> SubsetMask:
    """The largest measurable set of measure zero."""
    acc = SubsetMask.empty(m.sa.space)
    for atom, w in zip(m.sa.atoms, m.atom_weights):
        if w == ZERO:
            acc = acc.union(atom)
    return acc


def is_negligible(m: Measure, a: SubsetMask) -> bool:
    """Containment in some measurable zero-measure set; a itself need not be measurable."""
    if a.space != m.sa.space:
        raise SpaceMismatch("mask over a different space")
    return a.is_subset_of(zero_weight_union(m))


def ae_eq(m: Measure, f: PointFn, g: PointFn) -> bool:
    """Equality almost everywhere: the disagreement set is negligible."""
    if f.space != m.sa.space or g.space != m.sa.space:
        raise SpaceMismatch("function over a different space")
    diff = SubsetMask(m.sa.space, [a != b for a, b in zip(f.values, g.values)])
    return is_negligible(m, diff)
