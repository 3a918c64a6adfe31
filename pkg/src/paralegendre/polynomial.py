"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending: ``coeffs[i]`` multiplies ``x**i``. The zero
polynomial has no coefficients and degree ``None``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable

__all__ = [
    "Poly",
    "X",
    "ONE",
    "ZERO",
    "poly_add",
    "poly_mul",
    "parity_split",
    "poly_eval_exact",
    "poly_eval_float",
    "format_rational",
    "parse_rational",
    "format_coeffs",
    "parse_coeffs",
]


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        terms = [Fraction(c) for c in coeffs]
        while terms and terms[-1] == 0:
            terms.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(terms)

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        if n < 0:
            raise ValueError("monomial exponent must be non-negative")
        return cls([0] * n + [c])

    @property
    def degree(self) -> int | None:
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{format_coeffs(self)}])"

    def __str__(self):
        return pretty(self)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly(a * c for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = Fraction(other)
        return Poly(a / c for a in self.coeffs)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k (k >= 0) or divide by x**-k, which must be exact."""
        if k >= 0:
            return Poly([0] * k + list(self.coeffs)) if self.coeffs else ZERO
        if any(self.coeffs[: -k]):
            raise ValueError(f"polynomial is not divisible by x^{-k}")
        return Poly(self.coeffs[-k:])

    def reflect(self) -> "Poly":
        """f(-x), computed by flipping the sign of odd coefficients."""
        return Poly(-c if i % 2 else c for i, c in enumerate(self.coeffs))

    def derivative(self) -> "Poly":
        """Ordinary d/dx."""
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def is_even(self) -> bool:
        return not any(self.coeffs[1::2])

    def is_odd(self) -> bool:
        return not any(self.coeffs[0::2])

    def __call__(self, x0):
        if isinstance(x0, float):
            return poly_eval_float(self, x0)
        return poly_eval_exact(self, x0)


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def parity_split(f: Poly) -> tuple[Poly, Poly]:
    """Return ``(even_part, odd_part)`` with ``f == even_part + odd_part``."""
    even = Poly(c if i % 2 == 0 else 0 for i, c in enumerate(f.coeffs))
    odd = Poly(c if i % 2 else 0 for i, c in enumerate(f.coeffs))
    return even, odd


def poly_eval_exact(f: Poly, x0) -> Fraction:
    x0 = Fraction(x0)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x0 + c
    return acc


def poly_eval_float(f: Poly, x0: float) -> float:
    """Horner evaluation in double precision.

    Only the Fock-space comparison uses this; symbolic checks go through
    :func:`poly_eval_exact`.
    """
    x0 = float(x0)
    if not math.isfinite(x0):
        raise ValueError(f"evaluation point must be finite, got {x0}")
    acc = 0.0
    for c in reversed(f.coeffs):
        acc = acc * x0 + float(c)
    return acc


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    # accept the unicode minus sign as well as ASCII
    return Fraction(text.strip().replace("−", "-"))


def format_coeffs(f: Poly) -> str:
    """Canonical text form: comma-separated ascending coefficients, ``"0"`` for zero."""
    if f.is_zero():
        return "0"
    return ",".join(format_rational(c) for c in f.coeffs)


def parse_coeffs(text: str) -> Poly:
    text = text.strip()
    if not text:
        raise ValueError("empty coefficient list")
    return Poly(parse_rational(part) for part in text.split(","))


def pretty(f: Poly, var: str = "x") -> str:
    """Human-readable form, highest power first, e.g. ``2x^2 - 1``."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            if mag == 1:
                body = power
            elif mag.denominator == 1:
                body = f"{mag.numerator}{power}"
            else:
                body = f"({format_rational(mag)}){power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
