"""Single-mode parabose oscillator on a truncated Fock basis.

The ladder operators act as a^dag|n> = sqrt([n+1]) |n+1> and
a|n> = sqrt([n]) |n-1>, with R|n> = (-1)^n |n>. Everything is real.
Matrix-vector products go through the banded helpers; the dense matrices
are only built when asked for (the algebra checks).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .numbers import as_parameter, bracket, bracket_factorial
from .legendre import legendre
from .polynomial import poly_eval_float

__all__ = [
    "TruncationError",
    "FockOperators",
    "FockState",
    "CommutatorReport",
    "DEFAULT_DIM",
    "MAX_DIM",
    "TAIL_TOL",
    "default_dim",
    "build_operators",
    "squeezed_vacuum",
    "squeezed_vacuum_expm",
    "excite",
    "numeric_norm",
    "converged_norm",
    "closed_form_norm",
    "norm_recurrence_check",
    "commutator_suite",
]

DEFAULT_DIM = 400
MAX_DIM = 8192
TAIL_TOL = 1e-14
STABILITY_TOL = 1e-12
DIM_ENV_VAR = "PARALEGENDRE_FOCK_DIM"


class TruncationError(RuntimeError):
    """The retained Fock block is too small for the requested accuracy."""


def default_dim() -> int:
    raw = os.environ.get(DIM_ENV_VAR)
    if raw is None:
        return DEFAULT_DIM
    dim = int(raw)
    if dim < 2:
        raise ValueError(f"{DIM_ENV_VAR} must be >= 2, got {dim}")
    return dim


@dataclass(frozen=True)
class FockOperators:
    p: Fraction
    dim: int
    # sqrt([n]) for n = 0..dim-1; a has these on the superdiagonal
    ladder: np.ndarray = field(repr=False)
    parity: np.ndarray = field(repr=False)

    @cached_property
    def a(self) -> np.ndarray:
        return np.diag(self.ladder[1:], 1)

    @cached_property
    def a_dag(self) -> np.ndarray:
        return np.diag(self.ladder[1:], -1)

    @cached_property
    def R(self) -> np.ndarray:
        return np.diag(self.parity)

    def apply_a_dag(self, v: np.ndarray) -> np.ndarray:
        out = np.zeros_like(v)
        out[1:] = self.ladder[1:] * v[:-1]
        return out

    def apply_a(self, v: np.ndarray) -> np.ndarray:
        out = np.zeros_like(v)
        out[:-1] = self.ladder[1:] * v[1:]
        return out

    def apply_R(self, v: np.ndarray) -> np.ndarray:
        return self.parity * v


def build_operators(p, dim: int) -> FockOperators:
    if dim < 2:
        raise ValueError(f"truncation dimension must be >= 2, got {dim}")
    p = as_parameter(p)
    n = np.arange(dim)
    # [n] = n for even n, n + p - 1 for odd n
    brackets = n + (float(p) - 1.0) * (n % 2)
    ladder = np.sqrt(brackets)
    parity = np.where(n % 2 == 0, 1.0, -1.0)
    ladder.flags.writeable = False
    parity.flags.writeable = False
    return FockOperators(p, dim, ladder, parity)


@dataclass(frozen=True)
class FockState:
    amps: np.ndarray
    p: Fraction

    def __post_init__(self):
        if not np.all(np.isfinite(self.amps)):
            raise ValueError("Fock amplitudes must be finite")

    @property
    def dim(self) -> int:
        return len(self.amps)

    def norm_squared(self) -> float:
        return float(np.dot(self.amps, self.amps))


def squeezed_vacuum(r: float, p, dim: int, tail_tol: float = TAIL_TOL) -> FockState:
    """(sech r)^(p/2) exp(tanh(r) (a^dag)^2 / 2) |0>, from its closed amplitudes.

    The amplitude on |2k> is (sech r)^(p/2) (tanh r / 2)^k sqrt([2k]!) / k!.
    Successive even amplitudes differ by tanh(r) sqrt([2k-1]/[2k]), which is
    how they are generated to stay clear of factorial overflow.
    """
    r = float(r)
    if not math.isfinite(r):
        raise ValueError(f"squeezing parameter must be finite, got {r}")
    if dim < 2:
        raise ValueError(f"truncation dimension must be >= 2, got {dim}")
    p = as_parameter(p)
    pf = float(p)
    t = math.tanh(r)
    amps = np.zeros(dim)
    amps[0] = (1.0 / math.cosh(r)) ** (pf / 2)
    for k in range(1, (dim - 1) // 2 + 1):
        amps[2 * k] = amps[2 * k - 2] * t * math.sqrt((2 * k - 1 + pf - 1) / (2 * k))
    last_even = amps[(dim - 1) // 2 * 2]
    if abs(last_even) > tail_tol:
        raise TruncationError(
            f"squeezed vacuum r={r}, p={p}: last retained amplitude {last_even:.3e} "
            f"exceeds {tail_tol:.0e} at dim={dim}"
        )
    return FockState(amps, p)


def squeezed_vacuum_expm(r: float, p, dim: int) -> FockState:
    """Matrix-exponential route to the squeezed vacuum (cross-check only).

    (a^dag)^2 is nilpotent on the truncated block, so expm is exact on
    every retained component.
    """
    from scipy.linalg import expm

    ops = build_operators(p, dim)
    gen = ops.a_dag @ ops.a_dag * (math.tanh(r) / 2)
    vac = np.zeros(dim)
    vac[0] = 1.0
    amps = (1.0 / math.cosh(r)) ** (float(ops.p) / 2) * (expm(gen) @ vac)
    return FockState(amps, ops.p)


def excite(state: FockState, m: int, ops: FockOperators, tail_tol: float = TAIL_TOL) -> FockState:
    """(a^dag)^m applied to ``state``; the result is not renormalized."""
    if m < 0:
        raise ValueError(f"excitation number must be non-negative, got {m}")
    if state.dim != ops.dim:
        raise ValueError(f"state dim {state.dim} does not match operator dim {ops.dim}")
    if m and np.max(np.abs(state.amps[ops.dim - m:])) > tail_tol:
        raise TruncationError(
            f"amplitude in the top {m} slots exceeds {tail_tol:.0e} at dim={ops.dim}"
        )
    v = state.amps.copy()
    for _ in range(m):
        v = ops.apply_a_dag(v)
    return FockState(v, state.p)


def numeric_norm(r: float, m: int, p, dim: int) -> float:
    """<r,m|r,m> by direct simulation at a fixed truncation."""
    ops = build_operators(p, dim)
    return excite(squeezed_vacuum(r, p, dim), m, ops).norm_squared()


def converged_norm(
    r: float,
    m: int,
    p,
    dim: int | None = None,
    max_dim: int = MAX_DIM,
    rtol: float = STABILITY_TOL,
) -> tuple[float, int]:
    """Double the truncation until the norm is stable; return (norm, dim used).

    The returned value is the one at the larger of the two agreeing
    truncations.
    """
    dim = default_dim() if dim is None else dim
    previous = None
    while dim <= max_dim:
        try:
            value = numeric_norm(r, m, p, dim)
        except TruncationError:
            previous = None
            dim *= 2
            continue
        if previous is not None and abs(value - previous) <= rtol * abs(value):
            return value, dim
        previous = value
        dim *= 2
    raise TruncationError(f"norm for r={r}, m={m}, p={p} not stable below dim={max_dim}")


def closed_form_norm(r: float, m: int, p) -> float:
    """[m]! cosh(r)^m P_m(cosh r), with P_m continued past x = 1."""
    if m < 0:
        raise ValueError(f"excitation number must be non-negative, got {m}")
    x = math.cosh(float(r))
    return float(bracket_factorial(m, p)) * x**m * poly_eval_float(legendre(m, p), x)


def norm_recurrence_check(r: float, m: int, p) -> tuple[float, float]:
    """Both sides of the two-step recurrence linking <r,m|r,m> to m-1 and m-2."""
    if m < 2:
        raise ValueError(f"recurrence needs m >= 2, got {m}")
    p = as_parameter(p)
    c2 = math.cosh(float(r)) ** 2
    b = float(bracket(m - 1, p))
    weight = 2 * b + 1 + (float(p) - 1) * (-1) ** (m - 1)
    lhs = closed_form_norm(r, m, p)
    rhs = -c2 * b**2 * closed_form_norm(r, m - 2, p) + c2 * weight * closed_form_norm(r, m - 1, p)
    return lhs, rhs


@dataclass
class CommutatorReport:
    p: Fraction
    dim: int
    # identity name -> max relative deviation on the retained block
    deviations: dict[str, float]

    def failures(self, tol: float = 1e-10) -> dict[str, float]:
        return {k: v for k, v in self.deviations.items() if not v < tol}

    def ok(self, tol: float = 1e-10) -> bool:
        return not self.failures(tol)


def _rel_dev(lhs: np.ndarray, rhs: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(rhs), initial=0.0)), 1.0)
    return float(np.max(np.abs(lhs - rhs), initial=0.0)) / scale


def commutator_suite(ops: FockOperators, r: float = 0.5, max_power: int = 6) -> CommutatorReport:
    """Check the R-deformed Heisenberg relations on the retained block.

    Columns (basis vectors) near the truncation edge are excluded per
    identity. Deviations are reported, never raised.
    """
    a, ad, R = ops.a, ops.a_dag, ops.R
    dim = ops.dim
    p = float(ops.p)
    eye = np.eye(dim)
    dev: dict[str, float] = {}

    keep = dim - 1
    comm = a @ ad - ad @ a
    dev["[a,a_dag] = 1 + (p-1)R"] = _rel_dev(comm[:, :keep], (eye + (p - 1) * R)[:, :keep])
    dev["{R,a} = 0"] = _rel_dev(R @ a + a @ R, np.zeros_like(a))
    dev["{R,a_dag} = 0"] = _rel_dev(R @ ad + ad @ R, np.zeros_like(a))
    dev["R^2 = 1"] = _rel_dev(R @ R, eye)
    dev["a a_dag |0> = p|0>"] = float(abs((a @ ad)[0, 0] - p)) / p

    power = eye
    for n in range(1, max_power + 1):
        lower = power
        power = power @ ad
        keep = dim - n - 1
        if keep <= 0:
            break
        lhs = a @ power - power @ a
        rhs = lower @ (n * eye + (p - 1) / 2 * (1 - (-1) ** n) * R)
        dev[f"[a,a_dag^{n}]"] = _rel_dev(lhs[:, :keep], rhs[:, :keep])

    psi = squeezed_vacuum(r, ops.p, dim).amps
    lhs = ops.apply_a(psi)[: dim - 1]
    rhs = math.tanh(r) * ops.apply_a_dag(psi)[: dim - 1]
    dev["a|r,0> = tanh(r) a_dag|r,0>"] = _rel_dev(lhs, rhs)
    return CommutatorReport(ops.p, dim, dev)
