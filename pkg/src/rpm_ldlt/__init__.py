"""Rank profile revealing symmetric PLDL^TP^T factorization over prime fields."""

from .densecore import (AntiDiag, AntiTri, BlockDiag, Factorization, Permutation, Scalar,
                        reconstruct)
from .field import PrimeField
from .plduq import PlduqFactorization, plduq, rpm_of_plduq
from .rpmtools import pivoting_matrix, rpm_bruteforce, strictify, verify_revealing
from .sytrf import SytrfConfig, ldlt, ldlt_base_crout, ldlt_zero_leading
from .trssyr2k import trssyr2k

__all__ = [
    "AntiDiag", "AntiTri", "BlockDiag", "Factorization", "Permutation", "Scalar",
    "PrimeField", "PlduqFactorization", "SytrfConfig",
    "ldlt", "ldlt_base_crout", "ldlt_zero_leading", "pivoting_matrix", "plduq",
    "reconstruct", "rpm_bruteforce", "rpm_of_plduq", "strictify", "trssyr2k",
    "verify_revealing",
]
__version__ = "0.1.0"
