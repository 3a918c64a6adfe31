"""Verification suites run by ``paralegendre check``.

Each suite yields :class:`CheckResult` rows in a fixed order so reports are
reproducible byte for byte for a given configuration and seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .calculus import d_antiderivative, d_derivative, d_integrate
from .fock import (
    TruncationError,
    build_operators,
    closed_form_norm,
    commutator_suite,
    converged_norm,
    default_dim,
    norm_recurrence_check,
    squeezed_vacuum,
)
from .legendre import (
    legendre_explicit,
    legendre_recursion,
    legendre_rodrigues,
    inner_product,
    moment_x,
    moment_x_direct,
    norm_squared,
    ode_residual,
    ode_residual_classical,
    recursion_residuals,
)
from .numbers import bracket, bracket_factorial
from .polynomial import Poly, format_rational, parity_split, poly_eval_exact

__all__ = ["SUITES", "CheckResult", "run_suites", "bracket_table", "CLASSICAL_LEGENDRE"]

SUITES = ("rodrigues", "ode", "ortho", "recursion", "calculus", "fock")
DEFAULT_P_GRID = (Fraction(1), Fraction(2), Fraction(3), Fraction(5), Fraction(7, 2))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


# Ordinary Legendre polynomials, ascending coefficients, scaled by a common
# denominator: P_n = coeffs / den.
CLASSICAL_LEGENDRE: dict[int, tuple[tuple[int, ...], int]] = {
    0: ((1,), 1),
    1: ((0, 1), 1),
    2: ((-1, 0, 3), 2),
    3: ((0, -3, 0, 5), 2),
    4: ((3, 0, -30, 0, 35), 8),
    5: ((0, 15, 0, -70, 0, 63), 8),
    6: ((-5, 0, 105, 0, -315, 0, 231), 16),
    7: ((0, -35, 0, 315, 0, -693, 0, 429), 16),
    8: ((35, 0, -1260, 0, 6930, 0, -12012, 0, 6435), 128),
    9: ((0, 315, 0, -4620, 0, 18018, 0, -25740, 0, 12155), 128),
    10: ((-63, 0, 3465, 0, -30030, 0, 90090, 0, -109395, 0, 46189), 256),
}


def bracket_table(n: int, p) -> Poly:
    """P_0..P_6 written out in bracket notation, term by term."""
    b = lambda k: bracket(k, p)  # noqa: E731
    table = {
        0: lambda: Poly([1]),
        1: lambda: Poly([0, 1]),
        2: lambda: Poly([-b(1), 0, b(3)]) / 2,
        3: lambda: Poly([0, -b(3), 0, b(5)]) / 2,
        4: lambda: Poly([b(1) * b(3), 0, -2 * b(3) * b(5), 0, b(5) * b(7)]) / 8,
        5: lambda: Poly([0, b(3) * b(5), 0, -2 * b(5) * b(7), 0, b(7) * b(9)]) / 8,
        6: lambda: Poly(
            [
                -b(1) * b(3) * b(5),
                0,
                3 * b(3) * b(5) * b(7),
                0,
                -3 * b(5) * b(7) * b(9),
                0,
                b(7) * b(9) * b(11),
            ]
        )
        / 48,
    }
    return table[n]()


def _p(p) -> str:
    return format_rational(p)


def _suite_rodrigues(ps, max_n) -> Iterator[CheckResult]:
    for p in ps:
        fam = legendre_recursion(max_n, p)
        bad = [n for n in range(max_n + 1) if not (legendre_explicit(n, p) == legendre_rodrigues(n, p) == fam[n])]
        yield CheckResult("rodrigues", f"generators agree p={_p(p)} n<={max_n}", not bad, f"mismatch at n={bad}" if bad else "")
        top = min(max_n, 6)
        bad = [n for n in range(top + 1) if bracket_table(n, p) != fam[n]]
        yield CheckResult("rodrigues", f"bracket table p={_p(p)} n<={top}", not bad, f"mismatch at n={bad}" if bad else "")
        bad = [n for n in range(max_n + 1) if poly_eval_exact(fam[n], 1) != 1]
        yield CheckResult("rodrigues", f"P_n(1)=1 p={_p(p)} n<={max_n}", not bad, f"fails at n={bad}" if bad else "")
        if p == 1:
            top = min(max_n, 10)
            bad = [
                n
                for n in range(top + 1)
                if fam[n] != Poly(CLASSICAL_LEGENDRE[n][0]) / CLASSICAL_LEGENDRE[n][1]
            ]
            yield CheckResult("rodrigues", f"classical table n<={top}", not bad, f"mismatch at n={bad}" if bad else "")


def _suite_ode(ps, max_n) -> Iterator[CheckResult]:
    for p in ps:
        bad = [n for n in range(max_n + 1) if not ode_residual(n, p).is_zero()]
        yield CheckResult("ode", f"D-form residual p={_p(p)} n<={max_n}", not bad, f"nonzero at n={bad}" if bad else "")
        bad = [n for n in range(max_n + 1) if not ode_residual_classical(n, p).is_zero()]
        yield CheckResult("ode", f"ordinary-form residual p={_p(p)} n<={max_n}", not bad, f"nonzero at n={bad}" if bad else "")


def _suite_ortho(ps, max_n) -> Iterator[CheckResult]:
    top = min(max_n, 15)
    mtop = min(max_n, 12)
    for p in ps:
        bad = [
            (n, m)
            for n in range(top + 1)
            for m in range(top + 1)
            if inner_product(n, m, p) != (norm_squared(n, p) if n == m else 0)
        ]
        yield CheckResult("ortho", f"inner products p={_p(p)} n,m<={top}", not bad, f"wrong at {bad[:5]}" if bad else "")
        bad = []
        for n in range(top + 1):
            lhs = d_integrate(Poly([-1, 0, 1]) ** n, -1, 1, p)
            rhs = Fraction((-1) ** n * 2 ** (2 * n + 1) * factorial(n) ** 2) / bracket_factorial(2 * n + 1, p)
            if lhs != rhs:
                bad.append(n)
        yield CheckResult("ortho", f"integral of (x^2-1)^n p={_p(p)} n<={top}", not bad, f"wrong at n={bad}" if bad else "")
        bad = [
            (n, m)
            for n in range(mtop + 1)
            for m in range(mtop + 1)
            if moment_x(n, m, p) != moment_x_direct(n, m, p)
        ]
        yield CheckResult("ortho", f"x-moments p={_p(p)} n,m<={mtop}", not bad, f"wrong at {bad[:5]}" if bad else "")


def _suite_recursion(ps, max_n) -> Iterator[CheckResult]:
    for p in ps:
        bad = []
        for n in range(1, max_n + 1):
            bad.extend((n, k) for k, v in recursion_residuals(n, p).items() if not v.is_zero())
        yield CheckResult("recursion", f"recurrence residuals p={_p(p)} 1<=n<={max_n}", not bad, f"nonzero {bad[:5]}" if bad else "")


def random_poly(rng: random.Random, max_degree: int = 6) -> Poly:
    deg = rng.randint(0, max_degree)
    return Poly(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(deg + 1))


def random_pairs(rng: random.Random, count: int) -> Iterator[tuple[Poly, Poly, Fraction, Fraction]]:
    """Pairs (f, g) where at least one factor is even, plus endpoints in [-2, 2]."""
    for i in range(count):
        f, g = random_poly(rng), random_poly(rng)
        even = parity_split(f)[0]
        f, g = (even, g) if i % 2 == 0 else (g, even)
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        b = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        a = max(min(a, Fraction(2)), Fraction(-2))
        b = max(min(b, Fraction(2)), Fraction(-2))
        yield f, g, a, b


def _suite_calculus(ps, seed, pairs) -> Iterator[CheckResult]:
    for p in ps:
        rng = random.Random(f"{seed}:{p}")
        bad_leibniz = bad_parts = bad_ftc = 0
        for f, g, a, b in random_pairs(rng, pairs):
            D = lambda h: d_derivative(h, p)  # noqa: E731
            if D(f * g) != D(f) * g + f * D(g):
                bad_leibniz += 1
            lhs = d_integrate(D(f) * g, a, b, p)
            fg = f * g
            rhs = poly_eval_exact(fg, b) - poly_eval_exact(fg, a) - d_integrate(f * D(g), a, b, p)
            if lhs != rhs:
                bad_parts += 1
            if D(d_antiderivative(f + g, p)) != f + g:
                bad_ftc += 1
        yield CheckResult("calculus", f"product rule p={_p(p)} pairs={pairs}", not bad_leibniz, f"{bad_leibniz} failures" if bad_leibniz else "")
        yield CheckResult("calculus", f"integration by parts p={_p(p)} pairs={pairs}", not bad_parts, f"{bad_parts} failures" if bad_parts else "")
        yield CheckResult("calculus", f"D inverts antiderivative p={_p(p)} pairs={pairs}", not bad_ftc, f"{bad_ftc} failures" if bad_ftc else "")
        bad = [
            m
            for m in range(1, 41)
            if 2 * bracket(m - 1, p) + 1 + (p - 1) * (-1) ** (m - 1) != bracket(2 * m - 1, p)
        ]
        yield CheckResult("calculus", f"bracket identity p={_p(p)} m<=40", not bad, f"fails at m={bad}" if bad else "")


def _suite_fock(ps, rs, max_m, dim, norm_tol=1e-9, vac_tol=1e-10, alg_tol=1e-10) -> Iterator[CheckResult]:
    for p in ps:
        for r in rs:
            worst = 0.0
            used = 0
            try:
                for m in range(max_m + 1):
                    value, used = converged_norm(r, m, p, dim)
                    worst = max(worst, abs(value / closed_form_norm(r, m, p) - 1))
                vac_err = abs(squeezed_vacuum(r, p, used).norm_squared() - 1)
            except TruncationError as exc:
                yield CheckResult("fock", f"norms p={_p(p)} r={r!r}", False, f"truncation: {exc}")
                continue
            yield CheckResult("fock", f"excitation norms p={_p(p)} r={r!r} m<={max_m}", worst < norm_tol, f"max rel err {worst:.3e} dim={used}")
            yield CheckResult("fock", f"vacuum normalization p={_p(p)} r={r!r}", vac_err < vac_tol, f"|norm-1| {vac_err:.3e}")
            worst = 0.0
            for m in range(2, max_m + 1):
                lhs, rhs = norm_recurrence_check(r, m, p)
                worst = max(worst, abs(lhs - rhs) / abs(lhs))
            yield CheckResult("fock", f"norm recurrence p={_p(p)} r={r!r} 2<=m<={max_m}", worst < alg_tol, f"max rel err {worst:.3e}")
        report = commutator_suite(build_operators(p, dim or default_dim()))
        fails = report.failures(alg_tol)
        worst = max(report.deviations.values())
        yield CheckResult("fock", f"oscillator algebra p={_p(p)} dim={report.dim}", not fails, f"max dev {worst:.3e}" + (f" failing {sorted(fails)}" if fails else ""))


def run_suites(
    suites: Sequence[str],
    ps: Sequence[Fraction] = DEFAULT_P_GRID,
    max_n: int = 20,
    seed: int = 0,
    pairs: int = 200,
    rs: Sequence[float] = (0.1, 0.5, 1.0, 2.0),
    max_m: int = 8,
    dim: int | None = None,
) -> Iterator[CheckResult]:
    for suite in SUITES:
        if suite not in suites:
            continue
        if suite == "rodrigues":
            yield from _suite_rodrigues(ps, max_n)
        elif suite == "ode":
            yield from _suite_ode(ps, max_n)
        elif suite == "ortho":
            yield from _suite_ortho(ps, max_n)
        elif suite == "recursion":
            if max_n >= 1:
                yield from _suite_recursion(ps, max_n)
        elif suite == "calculus":
            yield from _suite_calculus(ps, seed, pairs)
        elif suite == "fock":
            yield from _suite_fock(ps, rs, max_m, dim)
