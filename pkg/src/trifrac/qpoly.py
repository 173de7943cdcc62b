"""Dense univariate polynomials over the rationals, in the variable lambda.

Coefficients are stored constant term first as exact ``Fraction`` values.
The zero polynomial is the empty coefficient tuple and its degree is None;
everything else keeps a nonzero leading coefficient.  All degrees appearing
in this package are at most 3, so a dense representation is the right one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]


class RationalPoly:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @property
    def degree(self) -> int | None:
        """Index of the last nonzero coefficient; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RationalPoly(out)

    def scale(self, factor: Coeff) -> "RationalPoly":
        return RationalPoly(Fraction(factor) * c for c in self.coeffs)

    def eval(self, at: Coeff) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(at)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, at: Coeff) -> Fraction:
        return self.eval(at)

    def is_positive_integral(self) -> bool:
        """True iff nonzero and every stored coefficient is a positive integer."""
        if not self.coeffs:
            return False
        return all(c.denominator == 1 and c > 0 for c in self.coeffs)

    def to_coeff_strings(self) -> list[str]:
        """Serialize as coefficient strings, constant term first ("7" or "9/5")."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, items: Sequence[str]) -> "RationalPoly":
        return cls(Fraction(s) for s in items)

    def format_text(self, var: str = "λ") -> str:
        """Human-readable form like "7 + 16λ + 9λ^2"; "0" for the zero polynomial."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            coeff = str(mag) if mag.denominator == 1 else f"({mag})"
            if i == 0:
                term = coeff
            elif i == 1:
                term = f"{coeff}{var}"
            else:
                term = f"{coeff}{var}^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"RationalPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.format_text()


ZERO = RationalPoly()
ONE = RationalPoly([1])


def linear(c0: Coeff, c1: Coeff) -> RationalPoly:
    """The polynomial c0 + c1*lambda."""
    return RationalPoly([c0, c1])
