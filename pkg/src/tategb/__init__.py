"""Exact local and universal analytic Gröbner bases over p-adically valued Q."""
from .arith import ValuedField, val_p
from .fan import cone_of, groebner_fan, tropical_variety
from .gb import is_local_gb, local_gb, reduced_gb
from .io import parse_polynomial
from .order import TateOrder, leading_term
from .poly import Polynomial, Ring
from .polyhedral import PolyhedralDomain, local_gb_wnf, mora_wnf, terms_p_principal
from .uagb import test_uagb, uagb

__all__ = [
    "ValuedField", "val_p", "Ring", "Polynomial", "parse_polynomial", "TateOrder", "leading_term",
    "local_gb", "reduced_gb", "is_local_gb", "uagb", "test_uagb", "cone_of", "groebner_fan",
    "tropical_variety", "PolyhedralDomain", "mora_wnf", "local_gb_wnf", "terms_p_principal",
]
