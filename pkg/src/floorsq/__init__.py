"""Diophantine systems over the floor and ceiling analogs of the squares,
S(alpha) = {floor(alpha n^2)} and Sbar(alpha) = {ceil(alpha n^2)}."""
__version__ = "0.1.0"

from .exact import DomainError, mk_rational, parse_rational
from .membership import in_S, in_Sbar, verify_T_tuple, verify_Tbar_tuple
from .pell import pell, r_of

__all__ = [
    "DomainError",
    "in_S",
    "in_Sbar",
    "mk_rational",
    "parse_rational",
    "pell",
    "r_of",
    "verify_T_tuple",
    "verify_Tbar_tuple",
]
