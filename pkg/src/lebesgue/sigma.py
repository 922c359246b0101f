"""Finite measurable spaces: subsets as bit masks and generated sigma-algebras.

On a finite universe the sigma-algebra generated by a family is exact:
two points fall in the same atom iff no generator separates them, and
the measurable sets are precisely the unions of atoms.  Countable
unions collapse to finite ones, so the closure is computable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import SpaceMismatch, UnknownLabel
from .xreal import ONE, XReal, ZERO, xadd, xadd_legal, xmul


@dataclass(frozen=True)
class FiniteSpace:
    """A non-empty universe of distinct labeled points, in fixed order."""

    labels: tuple[str, ...]

    def __init__(self, labels):
        labels = tuple(labels)
        if not labels:
            raise ValueError("space must be inhabited")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels")
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(label) from None


@dataclass(frozen=True)
class SubsetMask:
    """A subset of a finite space as one membership bit per point."""

    space: FiniteSpace
    bits: tuple[bool, ...]

    def __init__(self, space: FiniteSpace, bits):
        bits = tuple(bool(b) for b in bits)
        if len(bits) != space.size:
            raise ValueError("mask length differs from space size")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "bits", bits)

    @staticmethod
    def from_labels(space: FiniteSpace, labels) -> "SubsetMask":
        idx = {space.index(l) for l in labels}
        return SubsetMask(space, [i in idx for i in range(space.size)])

    @staticmethod
    def empty(space: FiniteSpace) -> "SubsetMask":
        return SubsetMask(space, [False] * space.size)

    @staticmethod
    def full(space: FiniteSpace) -> "SubsetMask":
        return SubsetMask(space, [True] * space.size)

    def _check(self, other: "SubsetMask"):
        if self.space != other.space:
            raise SpaceMismatch("masks over different spaces")

    @property
    def is_empty(self) -> bool:
        return not any(self.bits)

    @property
    def count(self) -> int:
        return sum(self.bits)

    def member_labels(self) -> tuple[str, ...]:
        return tuple(l for l, b in zip(self.space.labels, self.bits) if b)

    def union(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.space, [a or b for a, b in zip(self.bits, other.bits)])

    def intersect(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.space, [a and b for a, b in zip(self.bits, other.bits)])

    def difference(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.space, [a and not b for a, b in zip(self.bits, other.bits)])

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.space, [not b for b in self.bits])

    def is_subset_of(self, other: "SubsetMask") -> bool:
        self._check(other)
        return all(b <= c for b, c in zip(self.bits, other.bits))

    def is_disjoint_from(self, other: "SubsetMask") -> bool:
        self._check(other)
        return not any(a and b for a, b in zip(self.bits, other.bits))


@dataclass(frozen=True)
class PointFn:
    """An extended-real-valued function on a finite space, one value per point."""

    space: FiniteSpace
    values: tuple[XReal, ...]

    def __init__(self, space: FiniteSpace, values):
        values = tuple(values)
        if len(values) != space.size:
            raise ValueError("value count differs from space size")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "values", values)

    @staticmethod
    def constant(space: FiniteSpace, value: XReal) -> "PointFn":
        return PointFn(space, [value] * space.size)

    def at(self, label: str) -> XReal:
        return self.values[self.space.index(label)]

    def is_nonneg(self) -> bool:
        return all(ZERO <= v for v in self.values)

    def is_finite_valued(self) -> bool:
        return all(v.is_finite for v in self.values)

    def distinct_values(self) -> tuple[XReal, ...]:
        seen: list[XReal] = []
        for v in self.values:
            if v not in seen:
                seen.append(v)
        return tuple(seen)

    def preimage_of(self, value: XReal) -> SubsetMask:
        return SubsetMask(self.space, [v == value for v in self.values])


def charac(a: SubsetMask) -> PointFn:
    """Characteristic function: 1 on the subset, 0 elsewhere."""
    return PointFn(a.space, [ONE if b else ZERO for b in a.bits])


class SigmaAlgebra:
    """A generated sigma-algebra, stored as its atom partition.

    Measurable sets are exactly the unions of atoms; the generator is
    kept for extensionality checks.  Instances are immutable; build
    them with generate_sigma.
    """

    __slots__ = ("space", "generator", "atoms")

    def __init__(self, space: FiniteSpace, generator, atoms):
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "generator", tuple(generator))
        object.__setattr__(self, "atoms", tuple(atoms))

    def __setattr__(self, name, value):
        raise AttributeError("SigmaAlgebra is immutable")

    def __eq__(self, other):
        if not isinstance(other, SigmaAlgebra):
            return NotImplemented
        return self.space == other.space and frozenset(self.atoms) == frozenset(other.atoms)

    def __hash__(self):
        return hash((self.space, frozenset(self.atoms)))

    def __repr__(self):
        blocks = ["{" + ",".join(a.member_labels()) + "}" for a in self.atoms]
        return f"SigmaAlgebra(atoms={'|'.join(blocks)})"

    def _check_mask(self, a: SubsetMask):
        if a.space != self.space:
            raise SpaceMismatch("mask over a different space")

    def is_measurable(self, a: SubsetMask) -> bool:
        """True iff the mask is a union of atoms."""
        self._check_mask(a)
        for atom in self.atoms:
            inside = [a.bits[i] for i in range(self.space.size) if atom.bits[i]]
            if any(inside) and not all(inside):
                return False
        return True

    def members(self) -> list[SubsetMask]:
        """Every measurable set, materialized as all unions of atoms."""
        out = []
        for picks in product((False, True), repeat=len(self.atoms)):
            m = SubsetMask.empty(self.space)
            for pick, atom in zip(picks, self.atoms):
                if pick:
                    m = m.union(atom)
            out.append(m)
        return out

    def atom_of(self, label: str) -> SubsetMask:
        i = self.space.index(label)
        for atom in self.atoms:
            if atom.bits[i]:
                return atom
        raise AssertionError("atoms do not cover the space")

    def atom_index_of(self, label: str) -> int:
        i = self.space.index(label)
        for k, atom in enumerate(self.atoms):
            if atom.bits[i]:
                return k
        raise AssertionError("atoms do not cover the space")

    @property
    def is_discrete(self) -> bool:
        return all(a.count == 1 for a in self.atoms)


def generate_sigma(space: FiniteSpace, generator) -> SigmaAlgebra:
    """Smallest sigma-algebra containing the generator family.

    Two points share an atom iff no generator separates them; the
    members are then all unions of atoms, which is closed under
    complement and (finite, hence countable) union and contains the
    generator, and is minimal by construction.
    """
    generator = tuple(generator)
    for g in generator:
        if g.space != space:
            raise SpaceMismatch("generator mask over a different space")
    signatures: dict[tuple[bool, ...], list[int]] = {}
    order: list[tuple[bool, ...]] = []
    for i in range(space.size):
        sig = tuple(g.bits[i] for g in generator)
        if sig not in signatures:
            signatures[sig] = []
            order.append(sig)
        signatures[sig].append(i)
    atoms = []
    for sig in order:
        members = set(signatures[sig])
        atoms.append(SubsetMask(space, [i in members for i in range(space.size)]))
    return SigmaAlgebra(space, generator, atoms)


def sigma_equal_generated(sa1: SigmaAlgebra, sa2: SigmaAlgebra) -> bool:
    """Whether two generated sigma-algebras coincide.

    Computed both as atom-partition equality and as mutual measurability
    of generators; the two characterizations must agree.
    """
    if sa1.space != sa2.space:
        raise SpaceMismatch("sigma-algebras over different spaces")
    by_atoms = frozenset(sa1.atoms) == frozenset(sa2.atoms)
    by_generators = all(sa2.is_measurable(g) for g in sa1.generator) and all(
        sa1.is_measurable(g) for g in sa2.generator
    )
    assert by_atoms == by_generators
    return by_atoms


def product_space(space_e: FiniteSpace, space_f: FiniteSpace) -> FiniteSpace:
    """Product universe with E-major label order."""
    return FiniteSpace([f"({a},{b})" for a in space_e.labels for b in space_f.labels])


def product_generator(space_e: FiniteSpace, gen_e, space_f: FiniteSpace, gen_f):
    """Generator of the tensor-product sigma-algebra on E x F.

    Products of plain generators are not enough (E itself times a
    generator would be missed), so each factor family is extended by
    its full set before taking products.
    """
    prod = product_space(space_e, space_f)
    factors_e = list(gen_e) + [SubsetMask.full(space_e)]
    factors_f = list(gen_f) + [SubsetMask.full(space_f)]
    out: list[SubsetMask] = []
    for ae in factors_e:
        for af in factors_f:
            bits = []
            for i in range(space_e.size):
                for j in range(space_f.size):
                    bits.append(ae.bits[i] and af.bits[j])
            mask = SubsetMask(prod, bits)
            if mask not in out:
                out.append(mask)
    return prod, out


def product_mask(prod: FiniteSpace, ae: SubsetMask, af: SubsetMask) -> SubsetMask:
    """The rectangle AE x AF as a mask over the product space."""
    bits = []
    for i in range(ae.space.size):
        for j in range(af.space.size):
            bits.append(ae.bits[i] and af.bits[j])
    return SubsetMask(prod, bits)


def is_measurable_fn(sa: SigmaAlgebra, f: PointFn) -> bool:
    """Measurability of a finite-range function: every value preimage measurable.

    On a finite range the trace sigma-algebra of the extended-real Borel
    sets is discrete, so checking singleton preimages is exact.
    """
    if f.space != sa.space:
        raise SpaceMismatch("function over a different space")
    return all(sa.is_measurable(f.preimage_of(v)) for v in f.distinct_values())


def fn_add(f: PointFn, g: PointFn) -> tuple[PointFn, bool]:
    """Pointwise total sum, plus whether addition was legal at every point."""
    if f.space != g.space:
        raise SpaceMismatch("functions over different spaces")
    legal = all(xadd_legal(a, b) for a, b in zip(f.values, g.values))
    return PointFn(f.space, [xadd(a, b) for a, b in zip(f.values, g.values)]), legal


def fn_mul(f: PointFn, g: PointFn) -> PointFn:
    if f.space != g.space:
        raise SpaceMismatch("functions over different spaces")
    return PointFn(f.space, [xmul(a, b) for a, b in zip(f.values, g.values)])


def fn_scale(a: XReal, f: PointFn) -> PointFn:
    return PointFn(f.space, [xmul(a, v) for v in f.values])
