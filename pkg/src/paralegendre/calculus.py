"""Deformed derivative D and its inverse acting on exact polynomials.

On functions D = d/dx + (p - 1)/(2x) (1 - R) with R f(x) = f(-x). On
monomials this collapses to ``D x**n = [n] x**(n-1)``, which is what is
implemented; (1 - R) f is always odd so the 1/x never leaves the ring.
"""

from __future__ import annotations

from fractions import Fraction

from .numbers import as_parameter, bracket
from .polynomial import Poly, ZERO, poly_eval_exact

__all__ = [
    "d_derivative",
    "d_derivative_iter",
    "d_antiderivative",
    "d_integrate",
    "reflect",
]


def reflect(f: Poly) -> Poly:
    """The reflection operator R: f(x) -> f(-x)."""
    return f.reflect()


def d_derivative(f: Poly, p) -> Poly:
    """Apply D termwise: c x^n -> c [n] x^(n-1)."""
    p = as_parameter(p)
    return Poly(c * bracket(n, p) for n, c in enumerate(f.coeffs) if n)


def d_derivative_iter(f: Poly, k: int, p) -> Poly:
    if k < 0:
        raise ValueError(f"derivative order must be non-negative, got {k}")
    p = as_parameter(p)
    for _ in range(k):
        if f.is_zero():
            break
        f = d_derivative(f, p)
    return f


def d_antiderivative(f: Poly, p) -> Poly:
    """Right inverse of D with zero integration constant: c x^n -> c x^(n+1)/[n+1]."""
    p = as_parameter(p)
    if f.is_zero():
        return ZERO
    return Poly([0] + [c / bracket(n + 1, p) for n, c in enumerate(f.coeffs)])


def d_integrate(f: Poly, a, b, p) -> Fraction:
    """Deformed definite integral over [a, b] as F(b) - F(a), F the antiderivative.

    The iterated correction series this replaces only converges for small
    p - 1 on even integrands; where it does converge it agrees with this.
    """
    F = d_antiderivative(f, p)
    return poly_eval_exact(F, b) - poly_eval_exact(F, a)
