import math
from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from paralegendre import fock
from paralegendre.fock import (
    FockState,
    TruncationError,
    build_operators,
    closed_form_norm,
    commutator_suite,
    converged_norm,
    excite,
    norm_recurrence_check,
    numeric_norm,
    squeezed_vacuum,
    squeezed_vacuum_expm,
)
from paralegendre.numbers import bracket_factorial


def basis(dim, n):
    v = np.zeros(dim)
    v[n] = 1.0
    return v


def test_classical_ladder_matrices():
    ops = build_operators(1, 6)
    expected = np.diag(np.sqrt(np.arange(1, 6)), 1)
    np.testing.assert_allclose(ops.a, expected)
    np.testing.assert_allclose(ops.a_dag, expected.T)


def test_operator_examples():
    ops = build_operators(3, 8)
    np.testing.assert_allclose(ops.a_dag @ basis(8, 0), math.sqrt(3) * basis(8, 1))
    np.testing.assert_allclose(ops.R @ basis(8, 5), -basis(8, 5))
    np.testing.assert_allclose(ops.a @ ops.a_dag @ basis(8, 0), 3 * basis(8, 0))


@pytest.mark.parametrize("p", [1, 2, Fraction(7, 2)])
def test_banded_apply_matches_dense(p):
    ops = build_operators(p, 12)
    v = np.random.default_rng(7).normal(size=12)
    np.testing.assert_allclose(ops.apply_a_dag(v), ops.a_dag @ v)
    np.testing.assert_allclose(ops.apply_a(v), ops.a @ v)
    np.testing.assert_allclose(ops.apply_R(v), ops.R @ v)


def test_build_rejects_small_dim():
    with pytest.raises(ValueError):
        build_operators(2, 1)


def test_squeezed_vacuum_at_zero_is_vacuum():
    np.testing.assert_array_equal(squeezed_vacuum(0.0, 3, 10).amps, basis(10, 0))


@pytest.mark.parametrize("p", [1, 2, 3, Fraction(7, 2)])
def test_squeezed_amplitudes_match_closed_form(p):
    r = 0.5
    amps = squeezed_vacuum(r, p, 120).amps
    pf = float(p)
    for k in range(15):
        ref = (
            (1 / math.cosh(r)) ** (pf / 2)
            * (math.tanh(r) / 2) ** k
            / factorial(k)
            * math.sqrt(float(bracket_factorial(2 * k, p)))
        )
        assert amps[2 * k] == pytest.approx(ref, rel=1e-13)
        assert amps[2 * k + 1] == 0.0


def test_classical_squeezed_vacuum():
    r = 0.5
    amps = squeezed_vacuum(r, 1, 120).amps
    for k in range(10):
        ref = math.sqrt(1 / math.cosh(r)) * (math.tanh(r) / 2) ** k * math.sqrt(factorial(2 * k)) / factorial(k)
        assert amps[2 * k] == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("p", [1, 2, Fraction(7, 2)])
def test_squeezed_vacuum_matches_matrix_exponential(p):
    dim = 60
    np.testing.assert_allclose(
        squeezed_vacuum(0.3, p, dim, tail_tol=1.0).amps,
        squeezed_vacuum_expm(0.3, p, dim).amps,
        rtol=1e-12,
        atol=1e-15,
    )


def test_squeezed_vacuum_normalized_p2():
    assert abs(squeezed_vacuum(0.5, 2, 400).norm_squared() - 1) < 1e-10


def test_squeezed_vacuum_truncation_signal():
    with pytest.raises(TruncationError):
        squeezed_vacuum(2.0, 2, 400)


def test_excite_examples():
    ops = build_operators(2, 400)
    state = squeezed_vacuum(0.5, 2, 400)
    assert excite(state, 0, ops).amps is not state.amps
    np.testing.assert_array_equal(excite(state, 0, ops).amps, state.amps)
    vac = FockState(basis(400, 0), Fraction(2))
    np.testing.assert_allclose(excite(vac, 1, ops).amps, math.sqrt(2) * basis(400, 1))
    assert excite(state, 2, ops).norm_squared() == pytest.approx(closed_form_norm(0.5, 2, 2), rel=1e-12)


def test_excite_signals_truncation():
    ops = build_operators(1, 10)
    top = FockState(basis(10, 9), Fraction(1))
    with pytest.raises(TruncationError):
        excite(top, 1, ops)
    with pytest.raises(ValueError):
        excite(top, 1, build_operators(1, 12))


def test_parity_support():
    ops = build_operators(3, 200)
    state = squeezed_vacuum(0.7, 3, 200)
    for m in range(5):
        amps = excite(state, m, ops).amps
        assert not np.any(amps[(m + 1) % 2::2])


def test_closed_form_examples():
    for p in (1, 2, Fraction(7, 2)):
        assert closed_form_norm(1.3, 0, p) == 1.0
        assert closed_form_norm(0.8, 1, p) == pytest.approx(float(p) * math.cosh(0.8) ** 2, rel=1e-14)
        for m in range(8):
            assert closed_form_norm(0.0, m, p) == pytest.approx(float(bracket_factorial(m, p)), rel=1e-14)


def test_closed_form_classical():
    from numpy.polynomial import legendre as L

    for m in range(8):
        x = math.cosh(0.6)
        ref = factorial(m) * x**m * L.legval(x, [0] * m + [1])
        assert closed_form_norm(0.6, m, 1) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize(
    "r,m,p,tol",
    [(0.3, 2, 1, 1e-12), (0.0, 2, 5, 1e-12), (1.0, 7, 3, 1e-10), (0.5, 5, Fraction(7, 2), 1e-10)],
)
def test_norm_recurrence(r, m, p, tol):
    lhs, rhs = norm_recurrence_check(r, m, p)
    assert abs(lhs - rhs) <= tol * abs(lhs)


def test_norm_recurrence_at_zero_squeezing():
    lhs, _ = norm_recurrence_check(0.0, 2, 3)
    assert lhs == pytest.approx(float(bracket_factorial(2, 3)))


def test_norm_recurrence_rejects_small_m():
    with pytest.raises(ValueError):
        norm_recurrence_check(0.5, 1, 2)


def test_end_to_end_norm():
    value, dim = converged_norm(0.5, 3, 2, 400)
    assert dim >= 400
    assert abs(value / closed_form_norm(0.5, 3, 2) - 1) < 1e-9


def test_truncation_stability():
    small = numeric_norm(1.0, 4, 3, 400)
    large = numeric_norm(1.0, 4, 3, 800)
    assert abs(small - large) <= 1e-12 * large


def test_converged_norm_hits_cap():
    with pytest.raises(TruncationError):
        converged_norm(2.0, 3, 2, dim=100, max_dim=400)


def test_env_var_sets_default_dim(monkeypatch):
    monkeypatch.setenv(fock.DIM_ENV_VAR, "64")
    assert fock.default_dim() == 64
    monkeypatch.delenv(fock.DIM_ENV_VAR)
    assert fock.default_dim() == fock.DEFAULT_DIM


@pytest.mark.parametrize("p", [1, 2, 4, Fraction(7, 2)])
def test_commutator_suite(p):
    report = commutator_suite(build_operators(p, 120), r=0.5)
    assert report.ok(1e-10), report.failures(1e-10)
    assert "[a,a_dag^6]" in report.deviations


def test_commutator_power_three_by_hand():
    p = 4.0
    ops = build_operators(4, 20)
    lhs = ops.a @ np.linalg.matrix_power(ops.a_dag, 3) - np.linalg.matrix_power(ops.a_dag, 3) @ ops.a
    ad2 = np.linalg.matrix_power(ops.a_dag, 2)
    for k in range(15):
        expected = (3 + (p - 1) * (-1) ** k) * (ad2 @ basis(20, k))
        np.testing.assert_allclose(lhs @ basis(20, k), expected, atol=1e-12)


def test_commutator_suite_reports_broken_operators():
    ops = build_operators(3, 120)
    # a trivial R with a parabose ladder breaks the anticommutators
    broken = fock.FockOperators(ops.p, ops.dim, ops.ladder, np.ones(120))
    report = commutator_suite(broken)
    assert not report.ok()
    assert "{R,a} = 0" in report.failures()


def test_operators_shareable_across_threads():
    from concurrent.futures import ThreadPoolExecutor

    ops = build_operators(2, 400)
    state = squeezed_vacuum(0.5, 2, 400)
    with ThreadPoolExecutor(4) as pool:
        norms = list(pool.map(lambda m: excite(state, m, ops).norm_squared(), range(8)))
    for m, v in enumerate(norms):
        assert v == pytest.approx(closed_form_norm(0.5, m, 2), rel=1e-12)
