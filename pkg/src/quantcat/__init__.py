"""quantcat: exact computations with quantale-enriched categories.

Quantale arithmetic (finite tables and the extended-rational carriers),
normed sets and maps, V-categories with distributor calculus and Isbell
conjugation, normed categories with the presentable-unit completeness
decision, and normed colimits of finitely presented sequences.
"""

from .common import (
    BudgetExceeded,
    CarrierMismatch,
    Check,
    ConstructionError,
    DEFAULT_BUDGET,
    PreconditionError,
    Report,
)
from .quantale import (
    INF,
    BUILTIN_QUANTALES,
    FiniteQuantale,
    LawvereQuantale,
    as_extended_rational,
    bool2,
    bool4,
    builtin_quantale,
    chain3,
    chain4,
    lawvere_plus,
    lawvere_times,
    totally_below,
    trivial,
    unit_approximated_from_totally_below,
    validate_quantale,
)
from .normed_set import (
    NormedMap,
    NormedSet,
    compose,
    curry,
    final_structure,
    i_embed,
    identity_map,
    initial_structure,
    internal_hom,
    map_norm,
    s_value,
    strict_part,
    tensor,
    unit_normed_set,
)
from .vcat import (
    LawvereVerdict,
    VCategory,
    VDistributor,
    VFunctor,
    VWeightPair,
    check_adjoint,
    compose_vdist,
    f_lower,
    f_upper,
    is_representable,
    isbell_conjugate_coweight,
    isbell_conjugate_weight,
    lawvere_complete_vcat,
    left_weight,
    object_lower,
    object_upper,
    right_weight,
    totally_compact_unit,
    unit_tensor_splits,
    unit_vcat,
    validate_vcat,
    validate_vdist,
    validate_vfunctor,
    vcat_from_matrix,
)
from .ncat import (
    AdjunctionCertificate,
    CoendClasses,
    NcatLawvereVerdict,
    NormedCategory,
    NormedDistributor,
    NormedFunctor,
    PlainCategory,
    check_adjunction_cert,
    check_normed_retract,
    coend_unit,
    has_presentable_unit,
    i_embed_cat,
    is_lawvere_complete_ncat,
    isbell_conjugate_ndist,
    nat_transformations,
    representable_contra,
    representable_cov,
    split_idempotents_check,
    strict_subcategory,
    sup_change_of_base,
    validate_ncat,
    validate_ndist,
    validate_nfunctor,
)
from .seqlim import (
    Cocone,
    LogNorm,
    MetricSequence,
    NormProfile,
    Sequence,
    cauchy_value,
    colimit_dset,
    colimit_nset,
    colimit_vlip,
    forward_cauchy_metric,
    forward_limit_metric,
    is_cauchy,
    lipschitz_norm,
    norm_profile,
    validate_sequence,
    verify_normed_colimit,
)

__all__ = [name for name in dir() if not name.startswith("_")]
