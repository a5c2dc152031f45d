"""Cyclic codes over the 8-element chain ring GF(2)[u]/(u^3), their
reverse / reverse-complement (DNA) constraints, DNA codon mapping, and
Euclidean/Hermitian duals."""

from . import code, constraints, dual, polyf2, polyr, ring
from .code import CyclicCode, Presentation
from .constraints import (Verdict, check_rc_double, check_rc_single,
                          check_reversible_double, check_reversible_single)
from .dual import (check_dual_reversibility_equivalence, dual_brute, dual_code,
                   inner_euclidean, inner_hermitian, verify_dual_divisibility)
from .polyf2 import CapExceeded
from .polyr import RingWord

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CyclicCode",
    "Presentation",
    "RingWord",
    "Verdict",
    "check_dual_reversibility_equivalence",
    "check_rc_double",
    "check_rc_single",
    "check_reversible_double",
    "check_reversible_single",
    "code",
    "constraints",
    "dual",
    "dual_brute",
    "dual_code",
    "inner_euclidean",
    "inner_hermitian",
    "polyf2",
    "polyr",
    "ring",
    "verify_dual_divisibility",
]
