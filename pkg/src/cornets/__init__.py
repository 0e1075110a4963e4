"""Exact rational cornets: ordered semigroups with an integer star action.

Three concrete universes are provided over polyhedral wedges in Q^d — plain
elements, finitely generated upper sets under Minkowski sum, and step
membership functions under sup-min convolution — together with generic law
checking, Archimedean analysis and the cancellation theorem machinery.
"""

from .core import (
    ArchFamily,
    CancellationRecord,
    CornetInstance,
    Horizon,
    LawReport,
    Verdict,
    VerdictRecord,
    ablation_hunt,
    cancellation_check,
    case_rng,
    check_A_continuity,
    check_cornet_laws,
    check_lemma_identities,
    closure_props_suite,
    convexity_semigroup_check,
    dot_mul,
    hull_props_check,
    is_A_bounded,
    is_archimedean,
    is_n_convex,
    is_nonnegative,
    merge_reports,
    n_continuity_probe,
    subcornet_closure_suite,
    verify_closure,
)
from .fuzzy import (
    FuzzyArchFamily,
    NoArchimedeanElements,
    StepFuzzy,
    chi,
    chi_embed,
    fuzzy_arch_family,
    fuzzy_closure,
    fuzzy_inf,
    is_n_quasiconcave,
    leq_fuzzy,
    level_cut,
    make_fuzzy_cornet,
    odot,
    oplus,
    support,
)
from .geometry import ConeH, DimensionMismatch, Rat, Vec, divide, lp_feasible, rat, vec
from .sets import (
    MultisetCapExceeded,
    Repr,
    SetArchFamily,
    UnsupportedOperation,
    UpperSet,
    WedgeMismatch,
    convex_hull,
    discrete,
    enumerate_z_subsets,
    finite_intersection,
    intersect,
    interval_z_subsets,
    is_n_convex_set,
    make_set_cornet,
    msum,
    order_convex_z,
    phi_embed,
    polytopic,
    set_arch_family,
    set_closure,
    set_eq,
    star_set,
    subset,
)
from .wedges import (
    NotPointedError,
    Wedge,
    elem_arch_family,
    interior_archimedean,
    leq_w,
    make_elem_cornet,
    wbounded_check,
)

__version__ = "0.1.0"
