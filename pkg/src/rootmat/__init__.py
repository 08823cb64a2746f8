"""Exact verification of automorphism groups of root-system matroids."""

from .errors import BudgetExceededError
from .verify import (
    VerificationReport,
    oracle_crosscheck,
    verify_table,
    verify_theorem,
    verify_wreath,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "VerificationReport",
    "oracle_crosscheck",
    "verify_table",
    "verify_theorem",
    "verify_wreath",
]
