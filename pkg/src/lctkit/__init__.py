"""lctkit: exact certified checks for logarithmic comparison conditions of
polynomial divisors and hyperplane arrangements."""

__version__ = "0.1.0"

from .polyring import (MonomialOrder, ParseError, Polynomial, PolynomialRing,
                       WeightSystem, euler_apply, is_weighted_homogeneous,
                       parse_polynomial, partial_derivative, weighted_degree)
from .groebner import (Budget, BudgetExceeded, Ideal, QuotientBasis,
                       buchberger, elimination_ideal, ideal_membership,
                       is_squarefree, krull_dimension, normal_form,
                       polynomial_gcd, quotient_basis)
from .syzygy import (LogDerivation, ModuleVector, Order1Operator,
                     SaitoCertificate, ann1_generators, anns1_generators,
                     log_derivations, saito_check, saito_search, syzygy_module)
from .diagnostics import (BernsteinRoots, WeightMultiset, bernstein_whis,
                          condition_B_whis, conormal_linear, euler_homogeneous,
                          find_weights, isolated_singularity_at_origin,
                          koszul_free, lct_verdict, lct_whis, milnor_tjurina,
                          weight_multiset)
from .arrangement import (Arrangement, FlatLattice, arrangement_to_polynomial,
                          betti, build_lattice, lct_arrangement_report,
                          nbc_betti, poincare_polynomial, terao_factorization)
from .verdicts import NO, UNKNOWN, YES, HypothesisError, Verdict

__all__ = [
    "__version__",
    "MonomialOrder", "ParseError", "Polynomial", "PolynomialRing",
    "WeightSystem", "euler_apply", "is_weighted_homogeneous",
    "parse_polynomial", "partial_derivative", "weighted_degree",
    "Budget", "BudgetExceeded", "Ideal", "QuotientBasis", "buchberger",
    "elimination_ideal", "ideal_membership", "is_squarefree",
    "krull_dimension", "normal_form", "polynomial_gcd", "quotient_basis",
    "LogDerivation", "ModuleVector", "Order1Operator", "SaitoCertificate",
    "ann1_generators", "anns1_generators", "log_derivations", "saito_check",
    "saito_search", "syzygy_module",
    "BernsteinRoots", "WeightMultiset", "bernstein_whis", "condition_B_whis",
    "conormal_linear", "euler_homogeneous", "find_weights",
    "isolated_singularity_at_origin", "koszul_free", "lct_verdict",
    "lct_whis", "milnor_tjurina", "weight_multiset",
    "Arrangement", "FlatLattice", "arrangement_to_polynomial", "betti",
    "build_lattice", "lct_arrangement_report", "nbc_betti",
    "poincare_polynomial", "terao_factorization",
    "NO", "UNKNOWN", "YES", "HypothesisError", "Verdict",
]
