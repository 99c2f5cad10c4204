"""Temperley-Lieb algebras over Z[A, A^-1] and its quantum-integer localization.

An element of ``TL_n`` is a linear combination of crossingless matchings
of ``2n`` points: bottom points ``0..n-1`` and top points ``n..2n-1``, each
row numbered left to right.  The product ``x * y`` stacks ``y`` on top of
``x``; every closed loop contributes ``delta = -A^2 - A^-2``.

Coefficients are :class:`QFrac` values, Laurent polynomials divided by
products of quantum integers ``[k] = (A^2k - A^-2k) / (A^2 - A^-2)``.
These are exactly the denominators met by Jones-Wenzl projectors, and
keeping them factored makes exact cancellation a matter of trial
division.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping

from ..skein.laurent import LaurentPoly

__all__ = ["quantum_int", "QFrac", "TLElement", "RationalTL", "DELTA", "matching_compose"]

Matching = tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def quantum_int(k: int) -> LaurentPoly:
    """``[k] = A^(2k-2) + A^(2k-6) + ... + A^(2-2k)``."""
    if k < 1:
        raise ValueError("quantum integers are indexed from 1")
    return LaurentPoly({2 * (k - 1) - 4 * j: 1 for j in range(k)}, "A")


DELTA = LaurentPoly({2: -1, -2: -1}, "A")


class QFrac:
    """``num / prod [k]^den[k]`` with ``num`` a Laurent polynomial in ``A``."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: Mapping[int, int] | None = None, reduce: bool = True):
        if isinstance(num, int):
            num = LaurentPoly.const(num, "A")
        self.num = num
        self.den = Counter({k: e for k, e in (den or {}).items() if e and k > 1})
        if reduce:
            self._reduce()

    def _reduce(self):
        if not self.num:
            self.den = Counter()
            return
        for k in sorted(self.den):
            q = quantum_int(k)
            while self.den[k]:
                quo, rem = self.num.divmod(q)
                if rem:
                    break
                self.num = quo
                self.den[k] -= 1
        self.den = Counter({k: e for k, e in self.den.items() if e})

    @property
    def denominator(self) -> LaurentPoly:
        out = LaurentPoly.const(1, "A")
        for k, e in self.den.items():
            out = out * quantum_int(k) ** e
        return out

    def is_polynomial(self) -> bool:
        return not self.den

    def __add__(self, other):
        other = _q(other)
        den = self.den | other.den  # max of exponents
        a = self.num
        for k, e in (den - self.den).items():
            a = a * quantum_int(k) ** e
        b = other.num
        for k, e in (den - other.den).items():
            b = b * quantum_int(k) ** e
        return QFrac(a + b, den)

    __radd__ = __add__

    def __neg__(self):
        return QFrac(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_q(other))

    def __mul__(self, other):
        other = _q(other)
        return QFrac(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a product of quantum integers (given as ``{k: e}``) or by a sign."""
        if isinstance(other, int) and other in (1, -1):
            return self * other
        if isinstance(other, Mapping):
            return QFrac(self.num, self.den + Counter(other))
        raise TypeError("QFrac only divides by quantum integers")

    def __eq__(self, other):
        other = _q(other)
        return (self - other).num.terms == {}

    def __hash__(self):
        return hash((self.num, tuple(sorted(self.den.items()))))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        if not self.den:
            return f"QFrac({self.num})"
        den = " ".join(f"[{k}]^{e}" if e > 1 else f"[{k}]" for k, e in sorted(self.den.items()))
        return f"QFrac(({self.num}) / {den})"


def _q(x) -> QFrac:
    if isinstance(x, QFrac):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return QFrac(x)
    raise TypeError(f"cannot use {type(x).__name__} as a TL coefficient")


def matching_compose(n: int, lower: Matching, upper: Matching) -> tuple[Matching, int]:
    """Stack ``upper`` on ``lower``; return the resulting matching and the loop count."""
    # points: lower 0..2n-1, upper shifted by 2n; lower top k is glued to upper bottom k
    partner = {}
    for a, b in lower:
        partner[a] = b
        partner[b] = a
    for a, b in upper:
        partner[a + 2 * n] = b + 2 * n
        partner[b + 2 * n] = a + 2 * n

    def glued(p):
        if n <= p < 2 * n:
            return p - n + 2 * n  # lower top -> upper bottom
        if 2 * n <= p < 3 * n:
            return p - 2 * n + n
        return None

    out = []
    seen = set()
    for start in list(range(n)) + list(range(3 * n, 4 * n)):
        if start in seen:
            continue
        p = start
        while True:
            seen.add(p)
            q = partner[p]
            seen.add(q)
            g = glued(q)
            if g is None:
                break
            p = g
        a = start if start < n else start - 2 * n
        b = q if q < n else q - 2 * n
        out.append((min(a, b), max(a, b)))
    loops = 0
    for p in range(n, 3 * n):
        if p in seen:
            continue
        loops += 1
        while p not in seen:
            seen.add(p)
            q = partner[p]
            seen.add(q)
            p = glued(q)
    return tuple(sorted(out)), loops


class TLElement:
    """A linear combination of matchings in ``TL_n``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Matching, object] | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Matching, QFrac] = {}
        for m, c in items:
            c = _q(c)
            m = tuple(sorted(tuple(sorted(p)) for p in m))
            acc[m] = acc[m] + c if m in acc else c
        self.terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls(n, {tuple((i, n + i) for i in range(n)): 1})

    @classmethod
    def generator(cls, n: int, i: int) -> TLElement:
        """``e_i`` (1-based): caps joining strands ``i`` and ``i+1`` at top and bottom."""
        if not 1 <= i < n:
            raise ValueError(f"e_{i} does not exist in TL_{n}")
        pairs = [(i - 1, i), (n + i - 1, n + i)]
        pairs += [(k, n + k) for k in range(n) if k not in (i - 1, i)]
        return cls(n, {tuple(pairs): 1})

    def __add__(self, other: TLElement) -> TLElement:
        self._same(other)
        return TLElement(self.n, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return TLElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TLElement:
        c = _q(c)
        return TLElement(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TLElement):
            return self.scale(other)
        self._same(other)
        delta_pow = [QFrac(1)]
        acc: dict[Matching, QFrac] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m, loops = matching_compose(self.n, m1, m2)
                while len(delta_pow) <= loops:
                    delta_pow.append(delta_pow[-1] * QFrac(DELTA))
                c = c1 * c2 * delta_pow[loops] if loops else c1 * c2
                acc[m] = acc[m] + c if m in acc else c
        return TLElement(self.n, acc)

    __rmul__ = scale

    def tensor_id(self, k: int = 1) -> TLElement:
        """Add ``k`` vertical strands on the right."""
        n, N = self.n, self.n + k

        def shift(p):
            return p if p < n else p + k

        out = {}
        for m, c in self.terms.items():
            pairs = [(shift(a), shift(b)) for a, b in m] + [(n + j, N + n + j) for j in range(k)]
            out[tuple(pairs)] = c
        return TLElement(N, out)

    def trace(self) -> QFrac:
        """Markov trace: close every top point to the bottom point below it."""
        n = self.n
        total = QFrac(0)
        for m, c in self.terms.items():
            partner = {}
            for a, b in m:
                partner[a] = b
                partner[b] = a
            seen = set()
            loops = 0
            for p in range(2 * n):
                if p in seen:
                    continue
                loops += 1
                q = p
                while q not in seen:
                    seen.add(q)
                    r = partner[q]
                    seen.add(r)
                    q = r - n if r >= n else r + n
            total = total + c * _delta_pow(loops)
        return total

    def coefficient(self, m: Matching) -> QFrac:
        return self.terms.get(tuple(sorted(m)), QFrac(0))

    def common_denominator(self) -> Counter:
        den: Counter = Counter()
        for c in self.terms.values():
            den |= c.den
        return den

    def _same(self, other):
        if other.n != self.n:
            raise ValueError(f"TL widths differ: {self.n} vs {other.n}")

    def __eq__(self, other):
        if not isinstance(other, TLElement) or other.n != self.n:
            return NotImplemented
        return not (self - other).terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TLElement(n={self.n}, {len(self.terms)} terms)"


def _delta_pow(k: int) -> QFrac:
    return QFrac(DELTA ** k)


# elements with rational coefficients are the same type
RationalTL = TLElement
