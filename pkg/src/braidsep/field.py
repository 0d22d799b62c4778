"""Exact arithmetic in the quadratic field Q(rho), rho a primitive cube root of unity.

Elements are stored on the basis {1, rho} with rational coordinates, and
rho^2 is always rewritten as -1 - rho.  The textual form is "a+br" with
reduced fractions, e.g. "-1092-7128r" or "1/3+1/2r".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


class ScalarParseError(ValueError):
    """Malformed scalar text; carries the offending position."""

    def __init__(self, text: str, pos: int, message: str) -> None:
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class EisensteinRational:
    """An immutable element re + rho_coef * rho of Q(rho)."""

    __slots__ = ("_re", "_rho")

    def __init__(self, re: Rational = 0, rho: Rational = 0) -> None:
        self._re = Fraction(re)
        self._rho = Fraction(rho)

    @property
    def re(self) -> Fraction:
        """Coefficient of 1."""
        return self._re

    @property
    def rho(self) -> Fraction:
        """Coefficient of rho."""
        return self._rho

    def __add__(self, other: EisensteinRational | Rational) -> EisensteinRational:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinRational(self._re + other._re, self._rho + other._rho)

    __radd__ = __add__

    def __sub__(self, other: EisensteinRational | Rational) -> EisensteinRational:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EisensteinRational(self._re - other._re, self._rho - other._rho)

    def __rsub__(self, other: Rational) -> EisensteinRational:
        return _coerce(other).__sub__(self)

    def __neg__(self) -> EisensteinRational:
        return EisensteinRational(-self._re, -self._rho)

    def __mul__(self, other: EisensteinRational | Rational) -> EisensteinRational:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._re, self._rho, other._re, other._rho
        # (a+br)(c+dr) with r^2 = -1-r
        return EisensteinRational(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: EisensteinRational | Rational) -> EisensteinRational:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Rational) -> EisensteinRational:
        return _coerce(other).__truediv__(self)

    def __pow__(self, exponent: int) -> EisensteinRational:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = EisensteinRational(other)
        if not isinstance(other, EisensteinRational):
            return NotImplemented
        return self._re == other._re and self._rho == other._rho

    def __hash__(self) -> int:
        return hash((self._re, self._rho))

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._rho)

    def __repr__(self) -> str:
        return f"EisensteinRational({self._re!s}, {self._rho!s})"

    def __str__(self) -> str:
        return render(self)

    def conjugate(self) -> EisensteinRational:
        """Image under rho -> rho^2, the nontrivial field automorphism."""
        return EisensteinRational(self._re - self._rho, -self._rho)

    def norm(self) -> Fraction:
        """Rational norm a^2 - a*b + b^2; zero only for the zero element."""
        a, b = self._re, self._rho
        return a * a - a * b + b * b

    def inverse(self) -> EisensteinRational:
        """Multiplicative inverse, computed as conjugate over norm."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in Q(rho)")
        return EisensteinRational((self._re - self._rho) / n, -self._rho / n)


def _coerce(value: object) -> EisensteinRational:
    if isinstance(value, EisensteinRational):
        return value
    if isinstance(value, (int, Fraction)):
        return EisensteinRational(value)
    return NotImplemented


ZERO = EisensteinRational(0, 0)
ONE = EisensteinRational(1, 0)
RHO = EisensteinRational(0, 1)


def render(value: EisensteinRational) -> str:
    """Canonical text: constant first, then the r term, e.g. "-1092-7128r"."""
    re, rho = value.re, value.rho
    if rho == 0:
        return str(re)
    if rho == 1:
        rho_part = "r"
    elif rho == -1:
        rho_part = "-r"
    else:
        rho_part = f"{rho}r"
    if re == 0:
        return rho_part
    sign = "+" if rho > 0 else ""
    return f"{re}{sign}{rho_part}"


def parse_scalar(text: str) -> EisensteinRational:
    """Parse "a+br" text (terms in either order) into a field element.

    Raises ScalarParseError with a position on malformed input.
    """
    pos = 0
    n = len(text)

    def skip_space(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_number(i: int) -> tuple[Fraction, int]:
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise ScalarParseError(text, start, "expected a digit")
        numerator = int(text[start:i])
        if i < n and text[i] == "/":
            i += 1
            dstart = i
            while i < n and text[i].isdigit():
                i += 1
            if i == dstart:
                raise ScalarParseError(text, dstart, "expected a digit after '/'")
            denominator = int(text[dstart:i])
            if denominator == 0:
                raise ScalarParseError(text, dstart, "zero denominator")
            return Fraction(numerator, denominator), i
        return Fraction(numerator), i

    const: Fraction | None = None
    rho_coef: Fraction | None = None
    pos = skip_space(pos)
    if pos == n:
        raise ScalarParseError(text, pos, "empty scalar")
    first = True
    while pos < n:
        term_start = pos
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_space(pos + 1)
        elif not first:
            raise ScalarParseError(text, pos, "expected '+' or '-'")
        if pos < n and text[pos] == "r":
            coef, pos = Fraction(1), pos + 1
            is_rho = True
        else:
            coef, pos = read_number(pos)
            if pos < n and text[pos] == "r":
                pos += 1
                is_rho = True
            else:
                is_rho = False
        if is_rho:
            if rho_coef is not None:
                raise ScalarParseError(text, term_start, "duplicate r term")
            rho_coef = sign * coef
        else:
            if const is not None:
                raise ScalarParseError(text, term_start, "duplicate constant term")
            const = sign * coef
        pos = skip_space(pos)
        first = False
    return EisensteinRational(const or 0, rho_coef or 0)
