"""Randomized measure-space cases and the theorem check battery.

Each random case is a complete SpecFile (so any failure can be printed
back out in loadable form), and the battery runs every identity the
library exposes as a check on that case.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .integral import check_beppo_levi, check_fatou, integral_identities
from .measure import (
    Measure,
    check_boole,
    check_continuity_from_below,
    check_sigma_additivity,
)
from .sigma import PointFn, SubsetMask, charac, fn_mul
from .simple import check_change_of_variable, make_sf
from .specfile import SpecFile
from .xreal import CONSTANT_AFTER_PREFIX, ONE, POS_INF, TaggedSeq, XReal, fin, xadd

_WEIGHT_POOL = [
    Fraction(0),
    Fraction(1),
    Fraction(1),
    Fraction(1, 2),
    Fraction(3, 2),
    Fraction(2),
    Fraction(5, 3),
]

_VALUE_POOL = [
    Fraction(0),
    Fraction(0),
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2),
    Fraction(3, 4),
    Fraction(7, 2),
]


def _rand_weight(rng: random.Random, allow_inf=True) -> XReal:
    if allow_inf and rng.random() < 0.12:
        return POS_INF
    return fin(rng.choice(_WEIGHT_POOL))


def _rand_value(rng: random.Random, allow_inf=False) -> XReal:
    if allow_inf and rng.random() < 0.15:
        return POS_INF
    return fin(rng.choice(_VALUE_POOL))


def _expand(space_size, atoms, per_atom):
    values = [None] * space_size
    for atom, v in zip(atoms, per_atom):
        for i, b in enumerate(atom.bits):
            if b:
                values[i] = v
    return tuple(values)


def random_specfile(rng: random.Random, size_cap: int = 6) -> SpecFile:
    """A random finite measure space with functions and sequences attached."""
    size = rng.randint(1, max(1, size_cap))
    labels = tuple(f"p{i}" for i in range(size))
    generators = []
    for _ in range(rng.randint(0, 3)):
        generators.append(
            tuple(l for l in labels if rng.random() < 0.5)
        )
    spec = SpecFile(labels, tuple(generators), ("counting",))
    sa = spec.sigma()
    atoms = sa.atoms

    roll = rng.random()
    if roll < 0.15:
        measure = ("dirac", rng.choice(labels))
    elif roll < 0.25 and sa.is_discrete:
        measure = ("counting",)
    else:
        per_atom = [_rand_weight(rng) for _ in atoms]
        measure = ("weights", _expand(size, atoms, per_atom))

    def measurable_fn(allow_inf):
        per_atom = [_rand_value(rng, allow_inf) for _ in atoms]
        return _expand(size, atoms, per_atom)

    functions = {
        "f": measurable_fn(False),
        "g": measurable_fn(False),
        "h": measurable_fn(True),
    }
    # nondecreasing chain: cumulative sums of nonnegative increments
    chain = list(measurable_fn(False))
    functions["s0"] = tuple(chain)
    for k in (1, 2):
        step = measurable_fn(k == 2)
        chain = [xadd(a, b) for a, b in zip(chain, step)]
        functions[f"s{k}"] = tuple(chain)
    sequences = {
        "mono": (CONSTANT_AFTER_PREFIX, ("s0", "s1", "s2")),
        "mix": (CONSTANT_AFTER_PREFIX, ("f", "g", "h")),
    }
    return SpecFile(labels, tuple(generators), measure, functions, sequences)


class _CorruptMeasure(Measure):
    """Debug-only: inflates the reported measure of the full set by one."""

    def of(self, a: SubsetMask) -> XReal:
        value = super().of(a)
        if all(a.bits):
            return xadd(value, ONE)
        return value


def run_battery(spec: SpecFile, corrupt: bool = False) -> list[tuple[str, bool]]:
    """Run every theorem check on one case; returns (property, ok) pairs."""
    sa = spec.sigma()
    m = spec.measure_on(sa)
    if corrupt:
        m = _CorruptMeasure(m.sa, m.atom_weights)
    space = sa.space
    empty = SubsetMask.empty(space)
    full = SubsetMask.full(space)
    results: list[tuple[str, bool]] = []

    atom_family = TaggedSeq(list(sa.atoms) + [empty])
    results.append(("sigma_additivity", check_sigma_additivity(m, atom_family)))

    overlapping = [g for g in sa.generator] or [sa.atoms[0]]
    results.append(("boole", check_boole(m, TaggedSeq(overlapping + [empty]))))

    unions, acc = [], empty
    for atom in sa.atoms:
        acc = acc.union(atom)
        unions.append(acc)
    results.append(
        ("continuity_from_below", check_continuity_from_below(m, TaggedSeq(unions)))
    )

    fns = {name: spec.function(name) for name in spec.functions}
    nonneg = {n: f for n, f in fns.items() if f.is_nonneg()}

    for name in spec.sequences:
        seq = spec.sequence(name)
        monotone = all(
            all(a <= b for a, b in zip(f.values, g.values))
            for f, g in zip(seq.prefix, seq.prefix[1:])
        )
        if monotone:
            results.append(("beppo_levi", check_beppo_levi(m, seq)))
        results.append(("fatou", check_fatou(m, seq)))

    # restrictions of a function to a growing union are always nondecreasing
    for f in list(nonneg.values())[:1]:
        family = TaggedSeq([fn_mul(f, charac(u)) for u in unions])
        results.append(("beppo_levi", check_beppo_levi(m, family)))
        results.append(("fatou", check_fatou(m, family)))

    region = sa.generator[0] if sa.generator else full
    pairs = [("f", "g"), ("f", "h"), ("g", "h")]
    for a, b in pairs:
        if a in nonneg and b in nonneg:
            for scale in (fin(2), POS_INF):
                report = integral_identities(m, nonneg[a], nonneg[b], scale, region)
                for prop, ok in report.items():
                    results.append((prop, ok))

    finite = {
        n: f for n, f in nonneg.items() if f.is_finite_valued()
    }
    for a, b in pairs:
        if a in finite and b in finite:
            s = make_sf(sa, finite[a])
            t = make_sf(sa, finite[b])
            for y in s.canon:
                results.append(
                    ("change_of_variable", check_change_of_variable(m, s, t, y))
                )
    return results
