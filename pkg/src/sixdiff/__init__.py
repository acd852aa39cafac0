"""Exact generation and verification of integer solutions of X^6 - Y^6 = W^n - Z^n, n = 2, 3, 4."""

from .arith import UniPoly, as_rat, format_rat, is_square, poly_eval, sqrt_exact
from .claims import Claim, Verdict, builtin_claims, check_all, check_claim, render_report
from .curves import INFINITY, Point, WeierstrassCurve, q_isomorphic, weierstrass_invariants
from .errors import (
    DomainError,
    ExceptionalPointError,
    NonSquarefreeError,
    NotOnCurveError,
    SingularCurveError,
)
from .families import enumerate_family, generate, n2_factor_family, n2_method2, n3_method1
from .pipelines import (
    PIPELINE_IDS,
    PipelineConfig,
    default_config,
    n2_method3_quartic,
    n2_method3_solution,
    n3_method2_quartic,
    n3_method2_solution,
    n4_method1_conics,
    n4_method1_solution,
    n4_method2_quartic,
    n4_method2_solution,
    run_pipeline,
)
from .quartic import (
    Conic,
    QuarticCurve,
    QuarticInfinity,
    QuarticPoint,
    conic_parametrize,
    quartic_multiples,
    simultaneous_square_quartic,
    to_weierstrass,
    transfer,
)
from .search import SearchSpec, brute_search, contains
from .solution import (
    WEIGHTS,
    RationalSolution,
    Solution,
    canonicalize,
    clear_denominators,
    equivalent,
    normal_form,
    reduce_weighted_primitive,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
