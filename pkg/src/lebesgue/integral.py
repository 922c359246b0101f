"""The integral of nonnegative measurable functions.

On a finite space the supremum over dominated simple functions equals
the atom sum of f times the atom weight (with 0 * inf = 0), so the
integral is computed exactly from the atoms.  The dyadic adapted
sequence is kept observable as a convergence certificate.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .errors import NegativeValue, NotMeasurable, NotNondecreasing, SpaceMismatch
from .measure import Measure, ae_eq, dirac
from .sigma import (
    PointFn,
    SigmaAlgebra,
    SubsetMask,
    charac,
    fn_add,
    fn_mul,
    fn_scale,
    is_measurable_fn,
)
from .simple import SimpleFunction, integral_simple, make_sf
from .xreal import (
    TaggedSeq,
    XReal,
    ZERO,
    fin,
    is_nonneg,
    liminf_seq,
    sum_xreal_list,
    sup_seq,
    xadd,
    xmul,
    xsub,
)


def _require_valid(sa: SigmaAlgebra, f: PointFn):
    if f.space != sa.space:
        raise SpaceMismatch("function over a different space")
    if not f.is_nonneg():
        raise NegativeValue("function takes a negative value")
    if not is_measurable_fn(sa, f):
        raise NotMeasurable("function is not measurable")


def adapted_term(sa: SigmaAlgebra, f: PointFn, n: int) -> SimpleFunction:
    """The n-th dyadic lower approximation of f.

    Where f(x) < n the value is f(x) rounded down to a multiple of
    2^-n (exact integer arithmetic); everywhere else, including at
    f(x) = +inf, the value is capped at n.
    """
    _require_valid(sa, f)
    scale = 2 ** n
    cap = Fraction(n)
    vals = []
    for v in f.values:
        if v.is_finite and v.rational() < n:
            vals.append(fin(Fraction(floor(v.rational() * scale), scale)))
        else:
            vals.append(fin(cap))
    return make_sf(sa, PointFn(f.space, vals))


def integral(m: Measure, f: PointFn) -> XReal:
    """Integral of a nonnegative measurable function.

    Equals the supremum of integrals of dominated nonnegative simple
    functions; on a finite space that supremum is the exact atom sum
    of f times the atom weight.
    """
    _require_valid(m.sa, f)
    terms = []
    for atom, w in zip(m.sa.atoms, m.atom_weights):
        rep = atom.bits.index(True)
        terms.append(xmul(f.values[rep], w))
    return sum_xreal_list(terms)


def convergence_rows(m: Measure, f: PointFn, n_max: int):
    """Rows (n, integral of the n-th adapted term, gap to the integral of f)."""
    target = integral(m, f)
    rows = []
    for n in range(1, n_max + 1):
        v = integral_simple(m, adapted_term(m.sa, f, n))
        rows.append((n, v, xsub(target, v)))
    return rows


def _require_family(m: Measure, fam: TaggedSeq):
    fam.require_constant()
    for f in fam.prefix:
        _require_valid(m.sa, f)


def _pointwise_reduce(fam: TaggedSeq, reducer) -> PointFn:
    space = fam.prefix[0].space
    vals = []
    for i in range(space.size):
        vals.append(reducer(TaggedSeq([f.values[i] for f in fam.prefix])))
    return PointFn(space, vals)


def check_beppo_levi(m: Measure, fam: TaggedSeq) -> bool:
    """Monotone convergence: integral of the sup vs sup of the integrals."""
    _require_family(m, fam)
    for k in range(len(fam.prefix) - 1):
        f, g = fam.prefix[k], fam.prefix[k + 1]
        if not all(a <= b for a, b in zip(f.values, g.values)):
            raise NotNondecreasing(f"family decreases between terms {k} and {k + 1}")
    lhs = integral(m, _pointwise_reduce(fam, sup_seq))
    rhs = sup_seq(TaggedSeq([integral(m, f) for f in fam.prefix]))
    return lhs == rhs


def check_fatou(m: Measure, fam: TaggedSeq) -> bool:
    """Fatou: integral of the pointwise liminf is at most the liminf of integrals."""
    _require_family(m, fam)
    lhs = integral(m, _pointwise_reduce(fam, liminf_seq))
    rhs = liminf_seq(TaggedSeq([integral(m, f) for f in fam.prefix]))
    return lhs <= rhs


def integral_identities(m: Measure, f: PointFn, g: PointFn, a: XReal,
                        A: SubsetMask) -> dict[str, bool]:
    """Evaluate the standard integral identities on the given data.

    Unconditional identities (additivity, scaling, zero-integral
    characterization, decomposition) come back as plain equalities;
    conditional ones (monotonicity, a.e. compatibility, restriction
    extensionality) hold vacuously when their premise fails.
    """
    _require_valid(m.sa, f)
    _require_valid(m.sa, g)
    if not is_nonneg(a):
        raise NegativeValue("scale factor is negative")
    if not m.sa.is_measurable(A):
        raise NotMeasurable("restriction set is not measurable")

    int_f = integral(m, f)
    int_g = integral(m, g)
    total, _ = fn_add(f, g)
    zero_fn = PointFn.constant(f.space, ZERO)
    ind_a = charac(A)
    ind_ac = charac(A.complement())

    report = {
        "additivity": integral(m, total) == xadd(int_f, int_g),
        "scaling": integral(m, fn_scale(a, f)) == xmul(a, int_f),
        "ae_definite": (int_f == ZERO) == ae_eq(m, f, zero_fn),
        "decomposition": int_f
        == xadd(integral(m, fn_mul(f, ind_a)), integral(m, fn_mul(f, ind_ac))),
        "ae_eq_compat": (not ae_eq(m, f, g)) or int_f == int_g,
        "monotonicity": (
            not all(x <= y for x, y in zip(f.values, g.values)) or int_f <= int_g
        ),
        "restriction_ext": (
            not all(
                x == y
                for x, y, b in zip(f.values, g.values, A.bits)
                if b
            )
            or integral(m, fn_mul(f, ind_a)) == integral(m, fn_mul(g, ind_a))
        ),
    }
    return report


def integral_dirac(sa: SigmaAlgebra, label: str, f: PointFn) -> XReal:
    """Integral under the unit mass at a point; always equals f there."""
    value = integral(dirac(sa, label), f)
    assert value == f.at(label)
    return value
