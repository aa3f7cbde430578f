"""Exact computations with polynomial vector fields and their rank-one Lie algebras."""

from .classify import (
    Abelian,
    AlmostAbelian,
    HypothesisViolated,
    NotClosedOutcome,
    Sl2,
    classify_abstract,
    classify_rank_one,
    find_sl2_triple,
    verify_abelian_centralizers,
)
from .deriv import Derivation, RankOneReduction, apply, bracket, common_direction, is_reduced, reduce
from .errors import (
    DimensionMismatch,
    InvalidStructure,
    NotClosed,
    NotDivisible,
    NotRankOne,
    PreconditionError,
    RankOneError,
    ZeroInput,
)
from .poly import Poly, content, divide_exact, gcd, partial
from .span import SpannedAlgebra, center, centralizer, close_and_structure, derived, independent_basis, is_abelian, membership
from .textio import ParseError, parse_derivation, parse_poly, print_derivation, print_poly

__version__ = "0.1.0"
