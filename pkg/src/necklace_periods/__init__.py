"""Binary necklaces, fixed-density rotation classes and Lyndon words.

Closed-form counts live in :mod:`counting`, brute-force ground truth in
:mod:`oracle`, and the sweeps that compare the two in :mod:`identities`.
"""

from .errors import DomainError, EnumerationLimitError, InvariantViolation
from .kernels import BACKEND
from .residues import ResidueSubset

__version__ = "0.1.0"

__all__ = ["BACKEND", "DomainError", "EnumerationLimitError", "InvariantViolation", "ResidueSubset"]
