"""Minimal generating sets of F2[x1..xk] over the mod-2 Steenrod algebra.

The package computes admissible-monomial bases of the quotient QP_k in a
given degree, either by one monolithic GF(2) elimination or blockwise along
the weight filtration, together with the structural maps (variable
insertion/merging homomorphisms, the halving squaring operation) used to
cross-check the results.
"""

from hitprob.errors import ArityError, CapacityError, SingerInapplicableError
from hitprob.monomials import (
    DegreeContext,
    compare_monomials,
    degree,
    is_spike,
    minimal_spike,
    mu,
    weight_vector,
)
from hitprob.polynomials import Polynomial
from hitprob.quotient import (
    AdmissibleBasis,
    compute_basis,
    is_hit,
    is_strictly_inadmissible,
    normal_form_poly,
    singer_filter,
    split_basis,
    wood_filter,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "CapacityError",
    "SingerInapplicableError",
    "DegreeContext",
    "Polynomial",
    "AdmissibleBasis",
    "compare_monomials",
    "compute_basis",
    "degree",
    "is_hit",
    "is_spike",
    "is_strictly_inadmissible",
    "minimal_spike",
    "mu",
    "normal_form_poly",
    "singer_filter",
    "split_basis",
    "weight_vector",
    "wood_filter",
]
