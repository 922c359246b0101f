import random
from itertools import product

import pytest

from helpers import (
    all_masks,
    closure_bits,
    mask_to_bits,
    members_bits,
    rand_mask,
    rand_measurable_fn,
    rand_sigma,
    rand_space,
)
from lebesgue import (
    FiniteSpace,
    NEG_INF,
    POS_INF,
    PointFn,
    SubsetMask,
    ZERO,
    charac,
    fin,
    fn_add,
    fn_mul,
    fn_scale,
    generate_sigma,
    is_measurable_fn,
    product_generator,
    product_mask,
    product_space,
    sigma_equal_generated,
)
from lebesgue.errors import SpaceMismatch, UnknownLabel


def space_of(*labels):
    return FiniteSpace(labels)


def mask(space, *labels):
    return SubsetMask.from_labels(space, labels)


def test_space_validation():
    with pytest.raises(ValueError):
        FiniteSpace([])
    with pytest.raises(ValueError):
        FiniteSpace(["a", "a"])
    with pytest.raises(UnknownLabel):
        space_of("a").index("b")


def test_charac_examples():
    sp = space_of("p", "q", "r")
    assert charac(SubsetMask.empty(sp)).values == (ZERO, ZERO, ZERO)
    assert charac(SubsetMask.full(sp)).values == (fin(1), fin(1), fin(1))
    assert charac(mask(sp, "q")).values == (ZERO, fin(1), ZERO)


def test_generate_sigma_examples():
    sp = space_of("0", "1", "2")
    sa = generate_sigma(sp, [mask(sp, "0")])
    assert frozenset(sa.atoms) == {mask(sp, "0"), mask(sp, "1", "2")}
    assert {frozenset(m.member_labels()) for m in sa.members()} == {
        frozenset(),
        frozenset({"0"}),
        frozenset({"1", "2"}),
        frozenset({"0", "1", "2"}),
    }

    trivial = generate_sigma(sp, [])
    assert frozenset(trivial.atoms) == {SubsetMask.full(sp)}
    assert len(trivial.members()) == 2

    discrete = generate_sigma(sp, [mask(sp, l) for l in sp.labels])
    assert discrete.is_discrete
    assert len(discrete.members()) == 2 ** sp.size


def test_is_measurable_examples():
    sp = space_of("0", "1", "2")
    sa = generate_sigma(sp, [mask(sp, "0")])
    assert sa.is_measurable(mask(sp, "1", "2"))
    assert not sa.is_measurable(mask(sp, "1"))
    # constant subsets are measurable in every sigma-algebra
    for gen_count in range(3):
        rng = random.Random(gen_count)
        some = generate_sigma(sp, [rand_mask(rng, sp) for _ in range(gen_count)])
        assert some.is_measurable(SubsetMask.empty(sp))
        assert some.is_measurable(SubsetMask.full(sp))


def test_space_mismatch_rejected():
    sp1, sp2 = space_of("a"), space_of("b")
    with pytest.raises(SpaceMismatch):
        generate_sigma(sp1, [SubsetMask.full(sp2)])
    sa = generate_sigma(sp1, [])
    with pytest.raises(SpaceMismatch):
        sa.is_measurable(SubsetMask.full(sp2))


def test_sigma_equality_examples():
    sp = space_of("0", "1", "2")
    by_zero = generate_sigma(sp, [mask(sp, "0")])
    by_rest = generate_sigma(sp, [mask(sp, "1", "2")])
    assert sigma_equal_generated(by_zero, by_rest)

    by_one = generate_sigma(sp, [mask(sp, "1")])
    assert not sigma_equal_generated(by_zero, by_one)


def test_sigma_generation_idempotent():
    rng = random.Random(31)
    for _ in range(50):
        sa = rand_sigma(rng, rand_space(rng, 5))
        again = generate_sigma(sa.space, sa.members())
        assert sigma_equal_generated(sa, again)


def test_closure_matches_bitmask_oracle_exhaustively_small():
    for size in (1, 2, 3):
        sp = FiniteSpace([f"p{i}" for i in range(size)])
        candidates = all_masks(sp)
        for picks in product((False, True), repeat=len(candidates)):
            gen = [m for m, take in zip(candidates, picks) if take]
            sa = generate_sigma(sp, gen)
            oracle = closure_bits(size, [mask_to_bits(g) for g in gen])
            assert members_bits(sa) == oracle


def test_minimality_against_all_closed_families():
    # every complement/union-closed family containing the generator
    # also contains every member of the generated sigma-algebra
    size = 3
    sp = FiniteSpace([f"p{i}" for i in range(size)])
    full = (1 << size) - 1
    all_families = []
    subsets = list(range(full + 1))
    for picks in product((False, True), repeat=len(subsets)):
        family = frozenset(s for s, take in zip(subsets, picks) if take)
        if 0 not in family:
            continue
        if any((full & ~m) not in family for m in family):
            continue
        if any((a | b) not in family for a in family for b in family):
            continue
        all_families.append(family)

    rng = random.Random(32)
    candidates = all_masks(sp)
    for _ in range(40):
        gen = [m for m in candidates if rng.random() < 0.3]
        gen_bits = {mask_to_bits(g) for g in gen}
        members = members_bits(generate_sigma(sp, gen))
        for family in all_families:
            if gen_bits <= family:
                assert members <= family


def test_intersection_closure():
    rng = random.Random(33)
    for _ in range(100):
        sa = rand_sigma(rng, rand_space(rng))
        masks = [sa.atoms[rng.randrange(len(sa.atoms))] for _ in range(3)]
        unions = []
        for _ in range(3):
            u = SubsetMask.empty(sa.space)
            for a in sa.atoms:
                if rng.random() < 0.5:
                    u = u.union(a)
            unions.append(u)
        inter = unions[0]
        for u in unions[1:] + masks:
            inter = inter.intersect(u)
        assert sa.is_measurable(inter)


def test_product_generator_contains_padded_rectangles():
    e = space_of("0", "1")
    f = space_of("a")
    prod, gen = product_generator(e, [mask(e, "0")], f, [])
    assert product_mask(prod, mask(e, "0"), SubsetMask.full(f)) in gen
    assert product_mask(prod, SubsetMask.full(e), SubsetMask.full(f)) in gen


def test_product_measurability_of_rectangles():
    rng = random.Random(34)
    for _ in range(40):
        e, f = rand_space(rng, 3), rand_space(rng, 3)
        sae, saf = rand_sigma(rng, e, 2), rand_sigma(rng, f, 2)
        prod, gen = product_generator(e, sae.generator, f, saf.generator)
        sa2 = generate_sigma(prod, gen)
        for _ in range(5):
            ae = rand_mask(rng, e)
            af = rand_mask(rng, f)
            if sae.is_measurable(ae) and saf.is_measurable(af):
                assert sa2.is_measurable(product_mask(prod, ae, af))


def test_product_without_full_sets_is_too_small():
    # with generators {0} and {a} alone, {0} x F is not measurable
    e = space_of("0", "1")
    f = space_of("a", "b")
    prod = product_space(e, f)
    bare = generate_sigma(
        prod, [product_mask(prod, mask(e, "0"), mask(f, "a"))]
    )
    padded_gen = product_generator(e, [mask(e, "0")], f, [mask(f, "a")])[1]
    padded = generate_sigma(prod, padded_gen)
    target = product_mask(prod, mask(e, "0"), SubsetMask.full(f))
    assert not bare.is_measurable(target)
    assert padded.is_measurable(target)


def test_function_measurability_examples():
    sp = space_of("0", "1", "2")
    sa = generate_sigma(sp, [mask(sp, "0")])
    assert is_measurable_fn(sa, PointFn.constant(sp, fin(9)))
    assert not is_measurable_fn(sa, PointFn(sp, [fin(1), fin(2), fin(3)]))
    assert is_measurable_fn(sa, PointFn(sp, [fin(5), fin(7), fin(7)]))


def test_fn_add_identity_and_legality():
    sp = space_of("0", "1")
    f = PointFn(sp, [fin(3), POS_INF])
    total, legal = fn_add(f, PointFn.constant(sp, ZERO))
    assert total == f and legal

    g = PointFn(sp, [fin(1), NEG_INF])
    mixed, legal = fn_add(f, g)
    assert not legal
    assert mixed.values == (fin(4), ZERO)


def test_measurability_closed_under_algebra():
    rng = random.Random(35)
    for _ in range(80):
        sa = rand_sigma(rng, rand_space(rng))
        f = rand_measurable_fn(rng, sa, allow_inf=True, nonneg=False)
        g = rand_measurable_fn(rng, sa, allow_inf=True, nonneg=False)
        total, _ = fn_add(f, g)
        # holds whether or not the addition was legal everywhere
        assert is_measurable_fn(sa, total)
        assert is_measurable_fn(sa, fn_mul(f, g))
        assert is_measurable_fn(sa, fn_scale(fin(rng.randint(-3, 3)), f))
        assert is_measurable_fn(sa, fn_scale(POS_INF, f))


def test_restriction_by_charac_is_measurable():
    rng = random.Random(36)
    for _ in range(80):
        sa = rand_sigma(rng, rand_space(rng))
        g = rand_measurable_fn(rng, sa, allow_inf=True)
        region = SubsetMask.empty(sa.space)
        for a in sa.atoms:
            if rng.random() < 0.5:
                region = region.union(a)
        # f agrees with g on the region, is arbitrary elsewhere
        values = [
            gv if inside else fin(rng.randint(-5, 5))
            for gv, inside in zip(g.values, region.bits)
        ]
        f = PointFn(sa.space, values)
        assert is_measurable_fn(sa, fn_mul(f, charac(region)))
