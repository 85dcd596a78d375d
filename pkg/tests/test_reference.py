import io
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussft import reference as R
from gaussft.errors import QuadratureError
from gaussft.sampling import SampledFunction, TransformConfig
from gaussft.transform import EvaluationGrid, forward_harmonic

# sup-norms on nu in [-10, 10] (2001 points), frozen from figure_envelope
FIG6_MAX = (0.0023498565421789727, 0.002467146179431872)
FIG7_MAX = (6.878418182117152e-05, 7.245582130430833e-05)


def test_example_values():
    assert R.example_f(0) == 1 and R.example_even(0) == 1 and R.example_odd(0) == 0
    assert R.example_f(0.3) == pytest.approx(1.6)
    assert R.example_f(0.7) == 0
    # closed support: endpoint values kept
    assert R.example_even(0.5) == 1 and R.example_odd(-0.5) == -1
    assert R.example_f(np.array([-0.6, 0.0])).tolist() == [0.0, 1.0]


@given(st.floats(-2, 2))
def test_split_and_parity(t):
    assert R.example_f(t) == pytest.approx(R.example_even(t) + R.example_odd(t), abs=1e-15)
    assert R.example_even(-t) == R.example_even(t)
    assert R.example_odd(-t) == -R.example_odd(t)


def test_wavelet_kinds():
    t = np.linspace(-1, 1, 21)
    for kind, fn in [("full", R.example_f), ("even_part", R.example_even), ("odd_part", R.example_odd)]:
        assert np.array_equal(R.ExampleWavelet(kind)(t), fn(t))
    assert R.ExampleWavelet().support == (-0.5, 0.5)


def test_analytic_G():
    assert R.analytic_G(0) == 1
    assert abs(R.analytic_G(1)) < 1e-16
    assert R.analytic_G(0.5) == pytest.approx(2 / math.pi, rel=1e-15)


def test_analytic_H():
    assert R.analytic_H(0) == 0
    assert R.analytic_H(1) == pytest.approx(-1j / math.pi, rel=1e-15)
    nu = np.linspace(-5, 5, 1001)
    h = R.analytic_H(nu)
    assert np.all(h.real == 0)
    assert np.array_equal(R.analytic_H(-nu), -h)


def test_analytic_H_near_zero_is_smooth():
    # series branch and closed form agree across the switch point
    u = 1e-3
    for nu in [0.99 * u / math.pi, 1.01 * u / math.pi]:
        x = math.pi * nu
        assert R.analytic_H(nu).imag == pytest.approx(-x / 3 + x**3 / 30, rel=1e-9)


def test_figure_envelopes():
    e6 = R.figure_envelope("fig6")
    e7 = R.figure_envelope("fig7")
    assert (e6.max_abs_re, e6.max_abs_im) == pytest.approx(FIG6_MAX, rel=1e-9)
    assert (e7.max_abs_re, e7.max_abs_im) == pytest.approx(FIG7_MAX, rel=1e-9)
    assert e6.max_abs_re == np.max(np.abs(e6.delta_re))
    # N = 300 improves on N = 50 by more than a factor of 10
    assert e7.max_abs_re * 10 < e6.max_abs_re and e7.max_abs_im * 10 < e6.max_abs_im


def test_figure_bounds_hold_at_low_frequency():
    # the figure bounds hold near the origin; the error grows like
    # (1 - exp(-(pi c nu)^2)) |sinc|, crossing them at |nu| ~ 3.9 and 4.4
    grid = R.envelope_grid(-3.5, 3.5, 701)
    for name in ("fig6", "fig7"):
        env = R.figure_envelope(name, grid)
        bound = R.FIGURES[name].bound
        assert env.max_abs_re <= bound and env.max_abs_im <= bound


def test_envelope_at_zero_is_exact():
    cfg = TransformConfig.from_length(1.0, 50)
    env = R.delta_envelope(cfg, EvaluationGrid([0.0]))
    assert abs(env.delta_re[0]) < 1e-15 and env.delta_im[0] == 0


def test_envelope_length_check():
    with pytest.raises(ValueError):
        R.delta_envelope(R.FIGURES["fig6"].config, R.envelope_grid())
    with pytest.raises(ValueError):
        R.delta_envelope(TransformConfig(h=0.01, c=0.01, N=50), [0.0], length_tol=1e-3)
    R.delta_envelope(TransformConfig.from_length(1.0, 20), [0.0, 1.0])


def test_envelope_csv():
    env = R.delta_envelope(TransformConfig.from_length(1.0, 10), EvaluationGrid([-1.0, 0.0, 1.0]))
    buf = io.StringIO()
    env.to_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "nu,delta_re,delta_im"
    assert len(lines) == 4
    assert float(lines[1].split(",")[1]) == env.delta_re[0]


def test_ft_oracle_against_closed_forms():
    for nu in [0.0, 0.37, 1.0, 4.2, -7.5]:
        assert abs(R.quadrature_ft_oracle(R.example_even, nu) - R.analytic_G(nu)) <= 1e-10
        assert abs(R.quadrature_ft_oracle(R.example_odd, nu) - R.analytic_H(nu)) <= 1e-10


def test_ft_oracle_gaussian():
    g = lambda t: math.exp(-math.pi * t * t)
    for nu in [0.0, 0.5, 1.3, 2.0]:
        got = R.quadrature_ft_oracle(g, nu, 1e-10, support=(-8, 8))
        assert abs(got - math.exp(-math.pi * nu * nu)) <= 1e-8


def test_ft_oracle_complex_integrand():
    # f(t) = i f+(t) has transform i G
    got = R.quadrature_ft_oracle(lambda t: 1j * R.example_even(t), 0.8)
    assert abs(got - 1j * R.analytic_G(0.8)) <= 1e-10


def test_ft_oracle_fails_loudly():
    with pytest.raises(QuadratureError):
        R.quadrature_ft_oracle(lambda t: math.sin(1 / (t + 1e-9)), 3.0, 1e-10, budget=5)
    with pytest.raises(ValueError):
        R.quadrature_ft_oracle(R.example_f, 1.0, tol=1e-3)


def test_additivity():
    cfg = R.FIGURES["fig7"].config
    nu = np.linspace(-10, 10, 401)
    full = SampledFunction.from_function(R.example_f, cfg)
    even, odd = R.example_samples(cfg)
    gap = forward_harmonic(full, cfg, nu) - forward_harmonic(even, cfg, nu) - forward_harmonic(odd, cfg, nu)
    assert np.max(np.abs(gap)) <= 1e-12


def test_oracle_agreement_low_frequency():
    # the 5e-5 agreement holds for |nu| <= 5; see the acceptance module for the full range
    cfg = R.FIGURES["fig7"].config
    nu = np.linspace(-5, 5, 101)
    full = SampledFunction.from_function(R.example_f, cfg)
    ref = np.array([R.quadrature_ft_oracle(R.example_f, v) for v in nu])
    assert np.max(np.abs(forward_harmonic(full, cfg, nu) - ref)) <= 5e-5
