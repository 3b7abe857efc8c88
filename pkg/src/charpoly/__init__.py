"""Character polynomials of symmetric-group representations and their moments."""

from __future__ import annotations

from .characters import e_poly, h_poly, jacobi_trudi_e, jacobi_trudi_h, phi, phi_inverse, specht_poly, tau, weyl_poly
from .errors import ConsistencyError, FeasibilityError
from .moments import (
    CoeffTable,
    invariant_dim,
    invariant_dim_via_vp,
    kronecker_stable,
    mixed_moment,
    moment_n,
    restriction_coeff_at,
    restriction_coeff_stable,
    restriction_table,
    stable_moment,
    vector_partitions,
)
from .poly import Polynomial, X, format_polynomial, parse_polynomial, to_binomial_basis

__version__ = "0.1.0"
