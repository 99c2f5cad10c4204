"""Laurent polynomials and the bracket, Jones, HOMFLY-PT, Kauffman and Alexander polynomials."""

from __future__ import annotations

from .alexander import alexander
from .bracket import BudgetExceeded, bracket_state_sum, jones, kauffman_bracket
from .laurent import LaurentPoly, LaurentPoly2
from .skeintree import homfly, kauffman_poly
from .specialize import homfly_to_alexander, homfly_to_jones

__all__ = [
    "BudgetExceeded",
    "LaurentPoly",
    "LaurentPoly2",
    "alexander",
    "bracket_state_sum",
    "homfly",
    "homfly_to_alexander",
    "homfly_to_jones",
    "jones",
    "kauffman_bracket",
    "kauffman_poly",
]
