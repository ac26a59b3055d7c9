"""Exact module computations over solvable polynomial rings with PBW bases."""
from .bases import (
    BasisCertificate,
    ElementaryFactorization,
    StabilizationData,
    StabilizationHint,
    UnimodularWitness,
    compute_free_basis,
    elementary_reduce,
    stabilize,
    unimodular_witness,
)
from .errors import *  # noqa: F401,F403
from .groebner import GroebnerBasis, buchberger, divide, member, reduce_vector, same_module
from .homalg import (
    MinimalPresentation,
    PdReport,
    fold_resolution_step,
    is_stably_free,
    minimal_presentation,
    projective_dimension,
    projective_dimension_ffr,
    stably_free,
)
from .inverses import (
    InverseCertificate,
    left_inverse,
    right_inverse,
    right_inverse_involution,
    square_inverse,
)
from .module import (
    Cmp,
    ModuleOrder,
    ModuleTerm,
    PolyMatrix,
    compare_module_terms,
    matrix_apply,
    matrix_compose,
    right_apply,
    right_compose,
)
from .parsing import format_polynomial, load_ring, make_ring, parse_polynomial, ring_from_spec
from .ring import (
    Involution,
    MonomialOrder,
    Poly,
    RingPresentation,
    apply_involution,
    check_presentation,
    multiply,
    normalize_product,
    opposite,
    verify_involution,
)
from .syzygy import (
    FreeResolution,
    SyzygyBasis,
    cokernel_resolution,
    free_resolution,
    presentation,
    syzygies,
)

__version__ = "0.1.0"
