"""gcdcensus: exact-gcd condition systems on integer tuples.

Decide whether a system of conditions of the form
gcd{n_i : i in T} == f(T) has any solution, construct the canonical
witness, count solutions in a box exactly, and evaluate the asymptotic
density constant as an Euler product with a certified truncation error.
"""

from .admissibility import AdmissibilityReport, brute_force_find, is_admissible, witness
from .counting import CountReport, convergence_table, count, empirical_report, nymann_count
from .density import (
    DensityResult,
    FactorPolynomial,
    constant,
    generic_factor_polynomial,
    local_factor,
    rwise_constant,
    toth_pairwise_constant,
)
from .errors import CutoffTooSmallError, InadmissibleError, ResourceLimitError
from .model import (
    Condition,
    ConditionSet,
    condition_set,
    delta,
    enumerate_independent_subsets,
    find_cover,
    is_cover,
    is_independent,
    isolated_indices,
    neighbors,
)
from .padic import LocalView, local_view, relevant_primes, valuations, z_set

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "Condition",
    "ConditionSet",
    "CountReport",
    "CutoffTooSmallError",
    "DensityResult",
    "FactorPolynomial",
    "InadmissibleError",
    "LocalView",
    "ResourceLimitError",
    "brute_force_find",
    "condition_set",
    "constant",
    "convergence_table",
    "count",
    "delta",
    "empirical_report",
    "enumerate_independent_subsets",
    "find_cover",
    "generic_factor_polynomial",
    "is_admissible",
    "is_cover",
    "is_independent",
    "isolated_indices",
    "local_factor",
    "local_view",
    "neighbors",
    "nymann_count",
    "relevant_primes",
    "rwise_constant",
    "toth_pairwise_constant",
    "valuations",
    "witness",
    "z_set",
]
