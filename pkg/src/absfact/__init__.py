"""Exact-arithmetic toolkit for absolute irreducibility testing and absolute
factorization of bivariate integer polynomials.

The irreducibility tests rest on a vertex-gcd condition of the Newton
polytope, applied to the polynomial itself or to well-chosen modular images;
the factorizer finds the minimal field Q[T]/q(T) of an absolute factor by
p-adic Hensel lifting plus LLL-based recognition of q, then rebuilds one
factor over that field.
"""

from .absfac import (
    AbsFacConfig,
    AbsFactorResult,
    Certificate,
    EvalPoint,
    PointCursor,
    PrimeChoice,
    abs_fac,
    bad_reduction_constant,
    choose_point,
    choose_prime,
    default_sample_set,
    norm_consistent,
    primitive_element_bound,
    reconstruct_interpolation,
    select_factor_subset,
    verify_result,
)
from .errors import AbsFactError
from .hensel import (
    LiftedFactorization,
    hensel_lift_linear,
    hensel_lift_quadratic,
    lift_root_qp,
    x_adic_lift,
)
from .irrtest import (
    IrrAnswer,
    Witness,
    newton_polytope_mod,
    newton_polytope_mod_chg_var,
    ragot_test,
    test_direct,
    verify_witness,
)
from .lattice import (
    CandidateMinPoly,
    LatticeBasis,
    accuracy_bound,
    build_minpoly_lattice,
    lll_reduce,
    min_poly_from_approx,
    recognition_check,
)
from .modfactor import FpFactorization, bi_factor_fp, bi_irreducible_fp, uni_factor_fp
from .numfield import (
    NFFactorization,
    QFactorization,
    bi_factor_q,
    bi_irreducible_q,
    is_irreducible_q,
    nf_factor,
    nf_norm,
    uni_factor_q,
)
from .poly import (
    BiPoly,
    UniPoly,
    discriminant_y,
    evaluate_x,
    resultant,
    squarefree_part,
    total_degree,
    uni_gcd,
)
from .polytope import NewtonPolytope, condition_c, factor_count_divisor, newton_polytope
from .rings import (
    QQ,
    ZZ,
    ModElem,
    NFElem,
    NumberField,
    Zmod,
    mod_inverse,
    nf_inverse,
    nf_reduce,
)

__version__ = "0.1.0"
