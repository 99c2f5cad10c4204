"""Specializations of the HOMFLY-PT polynomial.

With ``l^-1 P(L+) - l P(L-) = m P(L0)``:

* ``l = t``, ``m = t^(1/2) - t^(-1/2)`` gives the Jones polynomial;
* ``l = 1``, ``m = t^(1/2) - t^(-1/2)`` gives the Conway-normalized Alexander polynomial.

For knots only even powers of ``m`` occur, so ``m^2 = t - 2 + t^-1`` keeps
everything in integer powers of ``t``.
"""

from __future__ import annotations

from .laurent import LaurentPoly, LaurentPoly2

__all__ = ["homfly_to_jones", "homfly_to_alexander"]

_M2 = LaurentPoly({1: 1, 0: -2, -1: 1}, "t")


def _specialize(p: LaurentPoly2, l_to_t: bool) -> LaurentPoly:
    if any(b % 2 for (_, b) in p.terms):
        raise ValueError("odd powers of m occur; these specializations are implemented for knots")
    total = LaurentPoly({}, "t")
    for (a, b), c in p.terms.items():
        term = _M2 ** (b // 2) * c
        if l_to_t:
            term = term.shift(a)
        total = total + term
    return total


def homfly_to_jones(p: LaurentPoly2) -> LaurentPoly:
    return _specialize(p, True)


def homfly_to_alexander(p: LaurentPoly2) -> LaurentPoly:
    return _specialize(p, False)
