"""Finite-field analogues of Gauss 2F1 and Appell F1, evaluated exactly.

Values are elements of Q(zeta_{q-1}) stored as :class:`CycVal`; identities
between them are checked by reduction modulo the cyclotomic polynomial, so
no verdict ever depends on floating point.
"""
from .appell import (
    f1_at_y1_rhs,
    f1_double,
    f1_single,
    genfun_lhs,
    genfun_rhs,
    genfun_terms,
    thm21_rhs,
    thm21_terms,
    thm31_rhs,
    thm32_rhs,
)
from .characters import binom, char_eval, char_sum, char_value, jacobi
from .cyclo import CycVal, cyclotomic_poly
from .errors import (
    ArityMismatch,
    CacheError,
    DomainRestriction,
    EmptyDomain,
    FFHyperError,
    IndexOutOfRange,
    LimitExceeded,
    NotAPrimePower,
    UnknownIdentity,
)
from .field import FieldCtx, build_field
from .hypergeometric import f21_charsum, f21_point, hyper_charsum
from .verify import REGISTRY, VerifyReport, explain_failure, get_identity, sweep

__version__ = "0.1.0"
