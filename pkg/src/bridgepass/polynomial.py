"""Integer Laurent polynomials in one variable ``A``."""

from __future__ import annotations

import re
from typing import Mapping

__all__ = ["LaurentPolynomial"]

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(A(?:\^(-?\d+))?)?")


class LaurentPolynomial:
    """Exact Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        self._c = {int(e): int(v) for e, v in (coefficients or {}).items() if v}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            if v not in (1, -1):
                raise ValueError("only unit monomials have integer inverses")
            return LaurentPolynomial({e * k: v ** -k})
        out = LaurentPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def invert_variable(self) -> "LaurentPolynomial":
        """Substitute ``A -> A^-1``."""
        return LaurentPolynomial({-e: v for e, v in self._c.items()})

    def degree_span(self) -> tuple[int, int]:
        return (min(self._c), max(self._c)) if self._c else (0, 0)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = f"A^{e}"
            else:
                body = f"{mag}*A^{e}"
            if not parts:
                parts.append(("-" if v < 0 else "") + body)
            else:
                parts.append(("- " if v < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        """Inverse of ``str``: terms like ``-A^-4``, ``+ 3*A^2``, ``1``."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        out: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign, coef, var, exp = m.groups()
            if not coef and not var:
                raise ValueError(f"cannot parse polynomial {text!r}")
            v = int(coef) if coef else 1
            if sign == "-":
                v = -v
            e = (int(exp) if exp is not None else 1) if var else 0
            out[e] = out.get(e, 0) + v
            pos = m.end()
        return cls(out)


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError(f"cannot combine LaurentPolynomial with {type(x).__name__}")
