"""nullcert: restricted sumset/product-set bounds over prime fields.

A workbench for the Kemperman--Scherk circle of inequalities in GF(p):
exact set combinatorics, polynomial cover certificates that replay the
degree-counting proofs, and exhaustive verification sweeps.
"""

from .field import (
    FieldElement,
    PrimeField,
    element_order,
    find_prime_with_subgroup,
    primitive_root_of_unity,
)
from .sets import (
    ElementSet,
    GroupMode,
    Representation,
    dyson_transform,
    exceptional_square_set,
    full_combine,
    inverse_set,
    negate_set,
    representations,
    restricted_combine,
    symmetric_pair_elements,
    unique_rep_elements,
)
from .poly import (
    BivariatePolynomial,
    FeasibilityResult,
    line_product,
    min_degree_feasibility,
    top_coefficient_interpolation,
    vanishing_profile,
)
from .certify import (
    Certificate,
    TheoremContradictionError,
    additive_cover_certificate,
    hyperbola_cover_certificate,
    multiplicative_cover_certificate,
    symmetric_pair_certificate,
    symmetric_pair_summand,
    verify_certificate,
)
from .search import (
    Report,
    SweepConfig,
    TightExample,
    construct_tight_example,
    exhaustive_verify,
    hunt_counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "Certificate",
    "ElementSet",
    "FeasibilityResult",
    "FieldElement",
    "GroupMode",
    "PrimeField",
    "Report",
    "Representation",
    "SweepConfig",
    "TheoremContradictionError",
    "TightExample",
    "additive_cover_certificate",
    "construct_tight_example",
    "dyson_transform",
    "element_order",
    "exceptional_square_set",
    "exhaustive_verify",
    "find_prime_with_subgroup",
    "full_combine",
    "hunt_counterexample",
    "hyperbola_cover_certificate",
    "inverse_set",
    "line_product",
    "min_degree_feasibility",
    "multiplicative_cover_certificate",
    "negate_set",
    "primitive_root_of_unity",
    "representations",
    "restricted_combine",
    "symmetric_pair_certificate",
    "symmetric_pair_elements",
    "symmetric_pair_summand",
    "top_coefficient_interpolation",
    "unique_rep_elements",
    "vanishing_profile",
    "verify_certificate",
]
