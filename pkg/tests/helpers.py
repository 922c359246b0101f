"""Shared test helpers: independent oracles and random object generators.

The oracles here deliberately recompute results along different paths
than the library (plain forward loops over atoms, bitmask closure,
exhaustive enumeration) so that agreement is meaningful.
"""

from fractions import Fraction
from itertools import product
from math import lcm

from lebesgue import (
    FiniteSpace,
    Measure,
    NEG_INF,
    PointFn,
    POS_INF,
    SubsetMask,
    ZERO,
    fin,
    generate_sigma,
    xadd,
    xmul,
)

SENTINELS = [NEG_INF, fin(-1), fin(0), fin(1), POS_INF]

WEIGHTS = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2), Fraction(5, 3)]
VALUES = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2),
          Fraction(3, 4), Fraction(7, 2)]


def rand_fraction(rng, nonneg=False):
    num = rng.randint(0 if nonneg else -8, 8)
    return Fraction(num, rng.randint(1, 8))


def rand_xreal(rng, nonneg=False, allow_inf=True):
    r = rng.random()
    if allow_inf and r < 0.1:
        return POS_INF
    if allow_inf and not nonneg and r < 0.2:
        return NEG_INF
    return fin(rand_fraction(rng, nonneg))


def rand_space(rng, max_size=6):
    size = rng.randint(1, max_size)
    return FiniteSpace([f"p{i}" for i in range(size)])


def rand_mask(rng, space):
    return SubsetMask(space, [rng.random() < 0.5 for _ in range(space.size)])


def rand_sigma(rng, space, max_gens=3):
    gens = [rand_mask(rng, space) for _ in range(rng.randint(0, max_gens))]
    return generate_sigma(space, gens)


def rand_measure(rng, sa, allow_inf=True):
    weights = []
    for _ in sa.atoms:
        if allow_inf and rng.random() < 0.12:
            weights.append(POS_INF)
        else:
            weights.append(fin(rng.choice(WEIGHTS)))
    return Measure(sa, weights)


def rand_measurable_fn(rng, sa, allow_inf=False, nonneg=True):
    """Random measurable function: one value per atom, expanded to points."""
    values = [None] * sa.space.size
    for atom in sa.atoms:
        if allow_inf and rng.random() < 0.15:
            v = POS_INF
        else:
            v = fin(rng.choice(VALUES) if nonneg else rand_fraction(rng))
        for i, b in enumerate(atom.bits):
            if b:
                values[i] = v
    return PointFn(sa.space, values)


def rand_measurable_mask(rng, sa):
    acc = SubsetMask.empty(sa.space)
    for atom in sa.atoms:
        if rng.random() < 0.5:
            acc = acc.union(atom)
    return acc


def atom_oracle(m, f):
    """Independent integral: forward sum of f(atom) * weight(atom)."""
    total = ZERO
    for atom, w in zip(m.sa.atoms, m.atom_weights):
        for i, inside in enumerate(atom.bits):
            if inside:
                total = xadd(total, xmul(f.values[i], w))
                break
    return total


def brute_force_sup(m, f, grid):
    """Max integral over every simple function with values on the grid
    dominated by f, enumerated exhaustively atom by atom.

    A dominated candidate is constant on atoms, so enumeration ranges
    over one grid choice per atom.  Finite contributions are scaled to
    a common denominator and enumerated as plain integers; a choosable
    infinite contribution makes the supremum infinite outright (every
    completion of such a choice sums to infinity).
    """
    per_atom = []
    inf_reachable = False
    for atom, w in zip(m.sa.atoms, m.atom_weights):
        rep = atom.bits.index(True)
        bound = f.values[rep]
        finite = []
        for v in grid:
            if not fin(v) <= bound:
                continue
            contrib = xmul(fin(v), w)
            if contrib.is_finite:
                finite.append(contrib.rational())
            else:
                inf_reachable = True
        per_atom.append(finite)
    if inf_reachable:
        return POS_INF
    den = lcm(*(c.denominator for row in per_atom for c in row))
    scaled = [[int(c * den) for c in row] for row in per_atom]
    best = max(map(sum, product(*scaled)))
    return fin(Fraction(best, den))


def mask_to_bits(mask):
    out = 0
    for i, b in enumerate(mask.bits):
        if b:
            out |= 1 << i
    return out


def closure_bits(n_points, gen_bits):
    """Least family containing the generators that holds the empty set and
    is closed under complement and pairwise union (bitmask fixpoint)."""
    full = (1 << n_points) - 1
    family = set(gen_bits)
    family.add(0)
    while True:
        new = {full & ~m for m in family}
        new.update(a | b for a in family for b in family)
        if new <= family:
            return frozenset(family)
        family |= new


def members_bits(sa):
    return frozenset(mask_to_bits(m) for m in sa.members())


def all_masks(space):
    return [SubsetMask(space, bits) for bits in product((False, True),
                                                        repeat=space.size)]
