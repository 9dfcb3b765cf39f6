"""Certificate-checked proof of the Edwards curve group law, plus a small-field curve library."""

from .curve import AffineParams, AffinePoint, ProjParams, ProjPoint, Symmetry
from .field import FieldElement, PrimeField
from .identities import CATALOG, ENTRY_NAMES, VerificationReport, build_symbols, check_entry, run_all
from .polyring import LocalizedElement, Polynomial, PolyRing
from .reduce import AUDIT_PRIME, GroebnerBasis, MonomialOrder, ReductionCertificate, buchberger, verify_certificate

__all__ = [
    "AUDIT_PRIME",
    "AffineParams",
    "AffinePoint",
    "CATALOG",
    "ENTRY_NAMES",
    "FieldElement",
    "GroebnerBasis",
    "LocalizedElement",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "ProjParams",
    "ProjPoint",
    "ReductionCertificate",
    "Symmetry",
    "VerificationReport",
    "buchberger",
    "build_symbols",
    "check_entry",
    "run_all",
    "verify_certificate",
]
