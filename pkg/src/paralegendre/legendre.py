"""Deformed Legendre polynomials P_n(x) for a parabose order p.

Three constructions are provided and must agree exactly: the closed
finite sum, the Rodrigues form (1/(2^n n!)) D^n (x^2 - 1)^n, and the
three-term recurrence. The recurrence is the production path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Literal

from .calculus import d_derivative, d_derivative_iter, d_integrate
from .numbers import as_parameter, bracket, bracket_factorial
from .polynomial import ONE, X, Poly

__all__ = [
    "LegendreFamily",
    "GENERATORS",
    "eigenvalue",
    "legendre",
    "legendre_explicit",
    "legendre_rodrigues",
    "legendre_recursion",
    "legendre_family",
    "ode_residual",
    "ode_residual_classical",
    "norm_squared",
    "inner_product",
    "moment_x",
    "moment_x_direct",
    "recursion_residuals",
]

Generator = Literal["explicit_sum", "rodrigues", "recursion"]
GENERATORS: tuple[str, ...] = ("explicit_sum", "rodrigues", "recursion")


@dataclass(frozen=True)
class LegendreFamily:
    """P_0..P_N for one p, tagged with the construction that produced it."""

    p: Fraction
    polys: tuple[Poly, ...]
    generator: str

    @property
    def N(self) -> int:
        return len(self.polys) - 1

    @property
    def eigenvalues(self) -> tuple[Fraction, ...]:
        return tuple(eigenvalue(n, self.p) for n in range(len(self.polys)))

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __len__(self):
        return len(self.polys)


def _check_n(n: int, name: str = "n") -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int")
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")


def eigenvalue(n: int, p) -> Fraction:
    """mu_n = [n][n+1]."""
    _check_n(n)
    return bracket(n, p) * bracket(n + 1, p)


def legendre_explicit(n: int, p) -> Poly:
    _check_n(n)
    p = as_parameter(p)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        num = (-1) ** k * bracket_factorial(2 * n - 2 * k, p)
        den = 2**n * factorial(k) * factorial(n - k) * bracket_factorial(n - 2 * k, p)
        coeffs[n - 2 * k] = num / den
    return Poly(coeffs)


def legendre_rodrigues(n: int, p) -> Poly:
    _check_n(n)
    p = as_parameter(p)
    seed = (X * X - 1) ** n
    return d_derivative_iter(seed, n, p) / (2**n * factorial(n))


@lru_cache(maxsize=256)
def _recursion_family(N: int, p: Fraction) -> tuple[Poly, ...]:
    polys = [ONE, X][: N + 1]
    for n in range(1, N):
        nxt = (X * polys[n] * bracket(2 * n + 1, p) - polys[n - 1] * bracket(n, p)) / bracket(n + 1, p)
        polys.append(nxt)
    return tuple(polys)


def legendre_recursion(N: int, p) -> LegendreFamily:
    """Build P_0..P_N from [n+1] P_{n+1} = [2n+1] x P_n - [n] P_{n-1}."""
    _check_n(N, "N")
    p = as_parameter(p)
    return LegendreFamily(p, _recursion_family(N, p), "recursion")


def legendre_family(N: int, p, generator: Generator = "recursion") -> LegendreFamily:
    _check_n(N, "N")
    p = as_parameter(p)
    if generator == "recursion":
        return legendre_recursion(N, p)
    if generator == "explicit_sum":
        build = legendre_explicit
    elif generator == "rodrigues":
        build = legendre_rodrigues
    else:
        raise ValueError(f"unknown generator {generator!r}; choose from {GENERATORS}")
    return LegendreFamily(p, tuple(build(n, p) for n in range(N + 1)), generator)


def legendre(n: int, p) -> Poly:
    """P_n via the cached recurrence."""
    _check_n(n)
    return legendre_recursion(n, p).polys[n]


_ONE_MINUS_X2 = Poly([1, 0, -1])


def ode_residual(n: int, p) -> Poly:
    """D((1 - x^2) D P_n) + [n][n+1] P_n, which should vanish identically.

    The outer D is taken on the product polynomial directly and, since
    1 - x^2 is even, also through the product rule; a mismatch between
    the two routes raises ``ArithmeticError``.
    """
    p = as_parameter(p)
    P = legendre(n, p)
    dP = d_derivative(P, p)
    mu = eigenvalue(n, p)
    direct = d_derivative(_ONE_MINUS_X2 * dP, p) + P * mu
    leibniz = d_derivative(_ONE_MINUS_X2, p) * dP + _ONE_MINUS_X2 * d_derivative(dP, p) + P * mu
    if direct != leibniz:
        raise ArithmeticError(f"product-rule mismatch in ODE residual for n={n}, p={p}")
    return direct


def ode_residual_classical(n: int, p) -> Poly:
    """x^2 times the ordinary-derivative form of the deformed Legendre equation.

    Expands to
    x^2 (1-x^2) f'' - (2x^3 - (p-1)(x - x^3)) f' - (p-1)/2 (1+x^2)(f - Rf) + mu x^2 f.
    """
    p = as_parameter(p)
    f = legendre(n, p)
    f1 = f.derivative()
    f2 = f1.derivative()
    x2 = Poly([0, 0, 1])
    drift = Poly([0, 0, 0, 2]) - Poly([0, 1, 0, -1]) * (p - 1)
    reflection = Poly([1, 0, 1]) * (f - f.reflect()) * ((p - 1) / 2)
    return x2 * _ONE_MINUS_X2 * f2 - drift * f1 - reflection + x2 * f * eigenvalue(n, p)


def norm_squared(n: int, p) -> Fraction:
    """Closed form 2/[2n+1]."""
    _check_n(n)
    return 2 / bracket(2 * n + 1, p)


def inner_product(n: int, m: int, p) -> Fraction:
    """Deformed integral of P_n P_m over [-1, 1], computed exactly."""
    _check_n(n)
    _check_n(m, "m")
    p = as_parameter(p)
    fam = legendre_recursion(max(n, m), p)
    return d_integrate(fam[n] * fam[m], -1, 1, p)


def moment_x(n: int, m: int, p) -> Fraction:
    """Closed form of the deformed integral of x P_m P_n over [-1, 1]."""
    _check_n(n)
    _check_n(m, "m")
    p = as_parameter(p)
    if m == n - 1:
        return 2 * bracket(n, p) / (bracket(2 * n - 1, p) * bracket(2 * n + 1, p))
    if m == n + 1:
        return 2 * bracket(n + 1, p) / (bracket(2 * n + 1, p) * bracket(2 * n + 3, p))
    return Fraction(0)


def moment_x_direct(n: int, m: int, p) -> Fraction:
    _check_n(n)
    _check_n(m, "m")
    p = as_parameter(p)
    fam = legendre_recursion(max(n, m), p)
    return d_integrate(X * fam[m] * fam[n], -1, 1, p)


def recursion_residuals(n: int, p) -> dict[str, Poly]:
    """Left-hand sides of the recurrence relations at index n (n >= 1).

    Keys name the relation; every value should be the zero polynomial.
    """
    _check_n(n)
    if n == 0:
        raise ValueError("recursion relations need n >= 1")
    p = as_parameter(p)
    fam = legendre_recursion(n + 1, p)
    prev, cur, nxt = fam[n - 1], fam[n], fam[n + 1]
    D = lambda f: d_derivative(f, p)  # noqa: E731
    b = lambda k: bracket(k, p)  # noqa: E731
    return {
        "three_term": nxt * b(n + 1) - X * cur * b(2 * n + 1) + prev * b(n),
        "raise": D(nxt) - X * D(cur) - cur * b(n + 1),
        "lower": X * D(cur) - D(prev) - cur * b(n),
        "derivative_gap": D(nxt) - D(prev) - cur * b(2 * n + 1),
        "weighted": Poly([-1, 0, 1]) * D(cur) - X * cur * b(n) + prev * b(n),
    }
