"""Exact computation of π0 of the geometric fixed points of real THH.

For a ring with anti-involution (R, α) the group is

    (Q ⊗ Q) / I,   Q = R^α / N(R),  N(r) = r + α(r),

where I is generated by ``α(s) r s ⊗ t - r ⊗ s t α(s)``.
"""

from .errors import CrossCheckError, InputError, ThrfixError
from .geomfix import norm_quotient, pi0_geometric_fixed_points, product_defect
from .ring_inv import RingWithInvolution, validate

__version__ = "0.1.0"

__all__ = [
    "CrossCheckError",
    "InputError",
    "RingWithInvolution",
    "ThrfixError",
    "norm_quotient",
    "pi0_geometric_fixed_points",
    "product_defect",
    "validate",
]
