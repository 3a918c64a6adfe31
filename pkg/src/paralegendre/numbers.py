"""Deformed integers [n] and their factorials for paraquantization order p."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = ["as_parameter", "bracket", "bracket_factorial"]


def as_parameter(p) -> Fraction:
    """Coerce ``p`` to an exact positive rational.

    Accepts ints, Fractions and strings like ``"7/2"``. Floats are accepted
    only when they are exactly representable as the rational the caller
    meant, so prefer strings for non-integers.
    """
    if isinstance(p, bool):
        raise TypeError("p must be a number, not bool")
    try:
        value = Fraction(p)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"invalid deformation parameter {p!r}") from exc
    if value <= 0:
        raise ValueError(f"deformation parameter must be positive, got {value}")
    return value


def _check_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")


def bracket(n: int, p) -> Fraction:
    """[n]: n for even n, n + p - 1 for odd n.

    >>> bracket(3, 2)
    Fraction(4, 1)
    """
    _check_index(n)
    p = as_parameter(p)
    if n % 2 == 0:
        return Fraction(n)
    return n + p - 1


@lru_cache(maxsize=4096)
def _factorial(n: int, p: Fraction) -> Fraction:
    result = Fraction(1)
    for k in range(1, n + 1):
        result *= bracket(k, p)
    return result


def bracket_factorial(n: int, p) -> Fraction:
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    _check_index(n)
    return _factorial(n, as_parameter(p))
