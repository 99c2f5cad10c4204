"""Jones-Wenzl projectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..skein.bracket import BudgetExceeded
from .tl import QFrac, TLElement, quantum_int

__all__ = ["JWProjector", "jw_projector", "loop_value", "DEFAULT_MAX_PROJECTOR"]

DEFAULT_MAX_PROJECTOR = 8


def loop_value(n: int) -> QFrac:
    """Closure of ``f_n``: ``Delta_n = (-1)^n [n+1]``."""
    return QFrac(quantum_int(n + 1) * (-1) ** n)


@dataclass(frozen=True)
class JWProjector:
    n: int
    element: TLElement

    def check(self, idempotence: bool | None = None) -> None:
        """Assert ``e_i f = f e_i = 0``, the trace identity and (for small ``n``) ``f^2 = f``."""
        f = self.element
        n = self.n
        for i in range(1, n):
            e = TLElement.generator(n, i)
            if (e * f).terms or (f * e).terms:
                raise ArithmeticError(f"e_{i} does not annihilate f_{n}")
        if f.trace() != loop_value(n):
            raise ArithmeticError(f"trace of f_{n} is not (-1)^n [n+1]")
        if idempotence is None:
            idempotence = n <= 6
        if idempotence and f * f != f:
            raise ArithmeticError(f"f_{n} is not idempotent")


@lru_cache(maxsize=None)
def _wenzl(n: int) -> TLElement:
    if n == 1:
        return TLElement.identity(1)
    prev = _wenzl(n - 1).tensor_id(1)
    e = TLElement.generator(n, n - 1)
    # f_n = f_{n-1} - (Delta_{n-2} / Delta_{n-1}) f_{n-1} e_{n-1} f_{n-1}
    #     = f_{n-1} + ([n-1] / [n]) f_{n-1} e_{n-1} f_{n-1}
    coeff = QFrac(quantum_int(n - 1), {n: 1})
    return prev + (prev * e * prev).scale(coeff)


def jw_projector(n: int, max_n: int = DEFAULT_MAX_PROJECTOR, check: bool = True) -> JWProjector:
    """The Jones-Wenzl idempotent ``f_n`` in ``TL_n`` (``f_0`` is not defined here)."""
    if n < 1:
        raise ValueError("projector width must be at least 1")
    if n > max_n:
        raise BudgetExceeded(f"projector width {n} exceeds the limit {max_n}")
    p = JWProjector(n, _wenzl(n))
    if check:
        p.check()
    return p
