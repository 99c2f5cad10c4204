"""Sparse Laurent polynomials with exact integer coefficients.

``LaurentPoly`` is univariate, ``LaurentPoly2`` is bivariate.  Both are
immutable and hashable; zero coefficients are never stored.
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "LaurentPoly2"]

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _clean(terms: Iterable[tuple]) -> dict:
    out: dict = {}
    for e, c in terms:
        c = out.get(e, 0) + c
        if c:
            out[e] = c
        else:
            out.pop(e, None)
    return out


class LaurentPoly:
    """A Laurent polynomial in one variable with integer coefficients.

    >>> t = LaurentPoly.var("t")
    >>> (t + 1) * (t - 1)
    LaurentPoly('t^2 - 1')
    """

    __slots__ = ("terms", "variable", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), variable: str = "t"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms: dict[int, int] = _clean((int(e), int(c)) for e, c in items)
        self.variable = variable
        self._hash = None

    @classmethod
    def var(cls, name: str = "t") -> LaurentPoly:
        return cls({1: 1}, name)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, variable: str = "t") -> LaurentPoly:
        return cls({exponent: coefficient}, variable)

    @classmethod
    def const(cls, c: int, variable: str = "t") -> LaurentPoly:
        return cls({0: c}, variable)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.variable != self.variable and other.terms and self.terms:
                if not (other.is_constant() or self.is_constant()):
                    raise ValueError(f"variable mismatch: {self.variable} vs {other.variable}")
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, self.variable)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(list(self.terms.items()) + list(other.terms.items()), self.variable)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.variable)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.variable)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({e * k: c ** (-k)}, self.variable)
        result = LaurentPoly({0: 1}, self.variable)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- queries ----------------------------------------------------------
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def min_degree(self) -> int:
        return min(self.terms)

    def max_degree(self) -> int:
        return max(self.terms)

    def span(self) -> int:
        return self.max_degree() - self.min_degree() if self.terms else 0

    def coefficient(self, e: int) -> int:
        return self.terms.get(e, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items())

    def __call__(self, x):
        """Evaluate at ``x`` (int, Fraction or float)."""
        total = 0
        for e, c in self.terms.items():
            total += c * (x ** e)
        return total

    # -- transformations --------------------------------------------------
    def substitute(self, k: int, variable: str | None = None) -> LaurentPoly:
        """Return ``p(x^k)``; ``k=-1`` is the variable inversion."""
        return LaurentPoly({e * k: c for e, c in self.terms.items()}, variable or self.variable)

    def rescale(self, k: int, variable: str | None = None) -> LaurentPoly:
        """Return the polynomial in ``x^(1/k)``; every exponent must be divisible by k."""
        if any(e % k for e in self.terms):
            raise ValueError(f"exponents of {self} are not all divisible by {k}")
        return LaurentPoly({e // k: c for e, c in self.terms.items()}, variable or self.variable)

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.variable)

    def divmod(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Division after factoring out the lowest powers of both operands.

        Writes ``self = x^a P`` and ``other = x^b Q`` with ``P(0), Q(0) != 0`` and
        returns ``(x^(a-b) S, x^a R)`` where ``P = Q S + R``, ``deg R < deg Q``.
        The leading coefficient of ``other`` must be a unit.
        """
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return LaurentPoly({}, self.variable), LaurentPoly({}, self.variable)
        a, b = self.min_degree(), other.min_degree()
        num = [0] * (self.max_degree() - a + 1)
        for e, c in self.terms.items():
            num[e - a] = c
        den = [0] * (other.max_degree() - b + 1)
        for e, c in other.terms.items():
            den[e - b] = c
        lead = den[-1]
        if abs(lead) != 1:
            raise ValueError("divisor must have unit leading coefficient")
        dq = len(den) - 1
        quo = [0] * max(len(num) - dq, 0)
        for k in range(len(num) - 1, dq - 1, -1):
            c = num[k] * lead
            if c:
                quo[k - dq] = c
                for i, d in enumerate(den):
                    num[k - dq + i] -= c * d
        q = LaurentPoly({i + a - b: c for i, c in enumerate(quo) if c}, self.variable)
        r = LaurentPoly({i + a: c for i, c in enumerate(num) if c}, self.variable)
        return q, r

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {"variable": self.variable, "terms": [[e, c] for e, c in self.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> LaurentPoly:
        return cls(((e, c) for e, c in obj["terms"]), obj.get("variable", "t"))

    def format(self, unicode: bool = False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                if unicode:
                    power = "" if e == 1 else str(e).translate(_SUPERSCRIPT)
                else:
                    power = "" if e == 1 else f"^{e}"
                body = ("" if a == 1 else str(a)) + self.variable + power
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"

    @classmethod
    def parse(cls, text: str, variable: str = "t") -> LaurentPoly:
        """Parse strings such as ``"-t^-6 + t^-5 + 2 - t"``."""
        s = text.replace(" ", "").replace("−", "-").replace("**", "^")
        s = s.replace("{", "").replace("}", "")
        if not s:
            raise ValueError("empty polynomial")
        v = re.escape(variable)
        token = re.compile(rf"([+-]?)(\d*)\*?({v}(?:\^(-?\d+))?)?")
        pos = 0
        terms = []
        while pos < len(s):
            m = token.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            sign, digits, mono, power = m.groups()
            if not digits and not mono:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            e = 0 if not mono else (int(power) if power is not None else 1)
            terms.append((e, c))
            pos = m.end()
        return cls(terms, variable)


class LaurentPoly2:
    """A Laurent polynomial in two variables, e.g. HOMFLY-PT ``P(l, m)``.

    Exponent keys are ``(e1, e2)`` pairs for ``(variables[0], variables[1])``.
    """

    __slots__ = ("terms", "variables", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = (), variables: tuple[str, str] = ("l", "m")):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms: dict[tuple[int, int], int] = _clean(((int(e[0]), int(e[1])), int(c)) for e, c in items)
        self.variables = tuple(variables)
        self._hash = None

    @classmethod
    def const(cls, c: int, variables=("l", "m")) -> LaurentPoly2:
        return cls({(0, 0): c}, variables)

    @classmethod
    def monomial(cls, e1: int, e2: int, c: int = 1, variables=("l", "m")) -> LaurentPoly2:
        return cls({(e1, e2): c}, variables)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2({(0, 0): other}, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly2(list(self.terms.items()) + list(other.terms.items()), self.variables)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly2.const(1, self.variables)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, e1: int, e2: int) -> int:
        return self.terms.get((e1, e2), 0)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def substitute(self, k1: int = 1, k2: int = 1) -> LaurentPoly2:
        """Return ``p(x^k1, y^k2)``."""
        return LaurentPoly2({(a * k1, b * k2): c for (a, b), c in self.terms.items()}, self.variables)

    def specialize(self, x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
        """Substitute univariate Laurent polynomials for both variables.

        Negative powers are allowed only when the substituted value is a unit monomial.
        """
        total = LaurentPoly({}, x.variable)
        cache_x: dict[int, LaurentPoly] = {}
        cache_y: dict[int, LaurentPoly] = {}
        for (a, b), c in self.terms.items():
            if a not in cache_x:
                cache_x[a] = x ** a
            if b not in cache_y:
                cache_y[b] = y ** b
            total = total + cache_x[a] * cache_y[b] * c
        return total

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [[a, b, c] for (a, b), c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> LaurentPoly2:
        return cls((((a, b), c) for a, b, c in obj["terms"]), tuple(obj.get("variables", ("l", "m"))))

    def table(self) -> tuple[list[int], list[int], list[list[int]]]:
        """Return ``(column exponents, row exponents, cells)``.

        Columns index the first variable, rows the second; both run from the
        minimum to the maximum exponent with the gcd of the exponent gaps as step.
        """
        if not self.terms:
            return [], [], []
        cols = sorted({a for a, _ in self.terms})
        rows = sorted({b for _, b in self.terms})

        def steps(vals):
            g = 0
            for v in vals:
                g = gcd(g, v - vals[0])
            return list(range(vals[0], vals[-1] + 1, g or 1))

        cols, rows = steps(cols), steps(rows)
        cells = [[self.terms.get((a, b), 0) for a in cols] for b in rows]
        return cols, rows, cells

    def render_table(self, row_label_scale: int = 1) -> str:
        """Row/column coefficient table with zero cells left blank.

        ``row_label_scale=2`` prints row labels with doubled exponents, the
        layout used by published Kauffman polynomial tables.
        """
        cols, rows, cells = self.table()
        x, y = self.variables

        def label(v, e):
            return "1" if e == 0 else (v if e == 1 else f"{v}^{e}")

        head = [""] + [label(x, a) for a in cols]
        body = [[label(y, b * row_label_scale)] + [str(c) if c else "" for c in row]
                for b, row in zip(rows, cells)]
        width = max(len(s) for line in [head] + body for s in line)
        return "\n".join(" ".join(s.rjust(width) for s in line) for line in [head] + body)

    def format(self) -> str:
        if not self.terms:
            return "0"
        x, y = self.variables
        parts = []
        for (a, b), c in self.items():
            mono = ""
            if a:
                mono += x if a == 1 else f"{x}^{a}"
            if b:
                mono += ("*" if mono else "") + (y if b == 1 else f"{y}^{b}")
            body = (str(abs(c)) if (abs(c) != 1 or not mono) else "") + ("*" if abs(c) != 1 and mono else "") + mono
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly2({self.format()!r})"
