"""Exact Lebesgue integration on finite measure spaces over rational arithmetic."""

from .borel import (
    OpenSetFU,
    RatInterval,
    cc_as_nested_open,
    connected_component,
    nat_to_q,
    nat_to_q2,
    nat_to_z,
    pair_decode,
    pair_encode,
    q2_to_nat,
    q_to_nat,
    reconstruct_from_witness,
    second_countable_witness,
    topo_basis_r,
    topo_basis_r2,
    z_to_nat,
)
from .errors import LebesgueError
from .integral import (
    adapted_term,
    check_beppo_levi,
    check_fatou,
    convergence_rows,
    integral,
    integral_dirac,
    integral_identities,
)
from .measure import (
    Measure,
    ae_eq,
    check_boole,
    check_continuity_from_below,
    check_sigma_additivity,
    counting,
    dirac,
    is_negligible,
    layers,
    measure_of,
    partial_union,
    weighted,
)
from .sigma import (
    FiniteSpace,
    PointFn,
    SigmaAlgebra,
    SubsetMask,
    charac,
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
from .simple import (
    SimpleFunction,
    canonize,
    check_change_of_variable,
    integral_simple,
    make_sf,
    select,
    sf_add,
    sf_reconstruct,
    sf_scale,
)
from .specfile import SpecFile, dump_spec, load_spec, parse_spec
from .xreal import (
    CONSTANT_AFTER_PREFIX,
    NEG_INF,
    ONE,
    POS_INF,
    TaggedSeq,
    UNDEFINED,
    XReal,
    ZERO,
    fin,
    liminf_seq,
    sum_xreal_list,
    sum_xreal_map,
    sup_seq,
    xadd,
    xadd_legal,
    xmul,
    xneg,
    xsub,
)
