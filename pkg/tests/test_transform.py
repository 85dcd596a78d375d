import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussft import faddeeva as F
from gaussft import reference as R
from gaussft.sampling import SampledFunction, TransformConfig
from gaussft.transform import (
    FORMULATIONS,
    Direction,
    EvaluationGrid,
    Spectrum,
    WeightTable,
    alpha,
    forward_even,
    forward_harmonic,
    forward_odd,
    forward_truncated,
    forward_weighted,
    forward_with_table,
    inverse_harmonic,
    inverse_truncated,
    inverse_weighted,
    inverse_with_table,
    precompute_weights,
)

NU = np.linspace(-10, 10, 201)
FIG6 = TransformConfig(h=0.0099, c=0.0099, N=50)


def random_case(seed, complex_=False):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 65))
    h = float(rng.uniform(0.001, 0.3))
    vals = rng.normal(size=2 * n + 1)
    if complex_:
        vals = vals + 1j * rng.normal(size=2 * n + 1)
    cfg = TransformConfig(h=h, c=h, N=n, trunc_depth=min(3, n))
    return SampledFunction(h, vals), cfg


def impulse(cfg, at=0):
    vals = np.zeros(2 * cfg.N + 1)
    vals[cfg.N + at] = 1.0
    return SampledFunction(cfg.h, vals)


# -- grid and containers -----------------------------------------------------


def test_grid_validation():
    g = EvaluationGrid.linspace(-1, 1, 5)
    assert len(g) == 5
    with pytest.raises(ValueError):
        EvaluationGrid([0, 0])
    with pytest.raises(ValueError):
        EvaluationGrid([])
    with pytest.raises(ValueError):
        g.points[0] = 3
    with pytest.raises(ValueError):
        Spectrum(g, np.zeros(4))


# -- alpha ---------------------------------------------------------------------


def test_alpha():
    cfg = TransformConfig(h=0.1, c=0.1, N=5)
    ones = SampledFunction(0.1, np.ones(11))
    assert alpha(ones, cfg, 0) == 0.05
    for n in range(-5, 6):
        assert alpha(ones, cfg, n) == pytest.approx(0.05 * math.exp(-n * n), rel=1e-15)
    s = SampledFunction(0.1, np.arange(1.0, 12.0))
    assert alpha(s, cfg, -3) / alpha(s, cfg, 3) == pytest.approx(s[-3] / s[3], rel=1e-15)
    with pytest.raises(IndexError):
        alpha(s, cfg, 6)


# -- formulations ----------------------------------------------------------------


def test_zero_samples_everywhere(backend):
    cfg = TransformConfig(h=0.05, c=0.05, N=8)
    z = SampledFunction.zeros(cfg)
    for fwd, inv in FORMULATIONS.values():
        assert np.all(np.asarray(fwd(z, cfg, NU)) == 0)
        assert np.all(np.asarray(inv(z, cfg, NU)) == 0)


def test_impulse(backend):
    cfg = TransformConfig(h=0.02, c=0.03, N=10)
    s = impulse(cfg)
    expect = cfg.h * np.exp(-((np.pi * cfg.c * NU) ** 2))
    half_sum = cfg.h / 2 * (F.w(-np.pi * cfg.c * NU + 0j) + F.w(np.pi * cfg.c * NU + 0j))
    assert np.max(np.abs(half_sum - expect)) < 1e-15
    assert np.max(np.abs(forward_weighted(s, cfg, NU) - expect)) < 1e-15
    assert np.max(np.abs(inverse_weighted(s, cfg, NU) - expect)) < 1e-15


def test_weighted_equals_harmonic(backend):
    for seed in range(10):
        s, cfg = random_case(seed, complex_=seed % 2 == 1)
        a = forward_weighted(s, cfg, NU)
        b = forward_harmonic(s, cfg, NU)
        assert np.max(np.abs(a - b)) <= 1e-10
        a = inverse_weighted(s, cfg, NU)
        b = inverse_harmonic(s, cfg, NU)
        assert np.max(np.abs(a - b)) <= 1e-10


def test_weighted_large_n_over_c(backend):
    # nh/c up to 200: naive alpha_n * w would be 0 * inf
    cfg = TransformConfig(h=0.01, c=0.001, N=20)
    s = SampledFunction(0.01, np.linspace(-1, 1, 41))
    a = forward_weighted(s, cfg, NU)
    assert np.all(np.isfinite(a))
    assert np.max(np.abs(a - forward_harmonic(s, cfg, NU))) <= 1e-10


def test_truncated_equals_table(backend):
    for seed in range(5):
        s, cfg = random_case(100 + seed, complex_=True)
        g = EvaluationGrid(NU)
        a = forward_truncated(s, cfg, NU)
        b = forward_with_table(s, precompute_weights(cfg, g)).values
        assert np.max(np.abs(a - b)) <= 1e-13
        a = inverse_truncated(s, cfg, NU)
        b = inverse_with_table(s, precompute_weights(cfg, g, Direction.INVERSE)).values
        assert np.max(np.abs(a - b)) <= 1e-13


def test_truncated_full_depth_is_weighted(backend):
    s, cfg = random_case(9)
    full = TransformConfig(h=cfg.h, c=cfg.c, N=cfg.N, trunc_depth=cfg.N)
    assert np.array_equal(forward_truncated(s, full, NU), forward_weighted(s, full, NU))


def test_truncation_error_bound(backend):
    for seed in range(5):
        s, cfg = random_case(200 + seed)
        gap = np.max(np.abs(forward_truncated(s, cfg, NU) - forward_weighted(s, cfg, NU)))
        n = np.arange(cfg.trunc_depth + 1, cfg.N + 1)
        bound = np.sum(2 * np.exp(-((n * cfg.h / cfg.c) ** 2))) * cfg.h * np.max(np.abs(s.values))
        assert gap <= bound + 1e-15


def test_truncated_depth_check():
    cfg = TransformConfig(h=0.1, c=0.1, N=2, trunc_depth=3)
    s = SampledFunction.zeros(cfg)
    with pytest.raises(ValueError):
        forward_truncated(s, cfg, 0.0)
    with pytest.raises(ValueError):
        precompute_weights(cfg, EvaluationGrid([0.0]))


def test_fig6_window(backend):
    even, _ = R.example_samples(FIG6)
    assert abs(forward_weighted(even, FIG6, 0.0) - 1) <= 1e-3
    table = precompute_weights(FIG6, EvaluationGrid([0.0]))
    assert abs(forward_with_table(even, table).values[0] - 1) <= 1e-3
    gap = np.abs(forward_truncated(even, FIG6, NU) - forward_weighted(even, FIG6, NU))
    assert gap.max() <= 1e-6


def test_harmonic_at_zero(backend):
    s, cfg = random_case(11)
    assert forward_harmonic(s, cfg, 0.0) == pytest.approx(cfg.h * s.values.sum(), abs=1e-13)


def test_hermitian_symmetry(backend):
    s, cfg = random_case(12)
    a = forward_harmonic(s, cfg, NU)
    b = forward_harmonic(s, cfg, -NU)
    assert np.max(np.abs(a - b.conj())) <= 1e-12


def test_linearity(backend):
    s1, cfg = random_case(13)
    rng = np.random.default_rng(14)
    s2 = SampledFunction(cfg.h, rng.normal(size=2 * cfg.N + 1))
    comb = SampledFunction(cfg.h, 3 * s1.values - 2 * s2.values)
    for fwd, _ in FORMULATIONS.values():
        lhs = np.asarray(fwd(comb, cfg, NU))
        rhs = 3 * np.asarray(fwd(s1, cfg, NU)) - 2 * np.asarray(fwd(s2, cfg, NU))
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_damping_envelope(backend):
    for seed in range(5):
        s, cfg = random_case(300 + seed)
        env = cfg.h * np.exp(-((np.pi * cfg.c * NU) ** 2)) * np.sum(np.abs(s.values))
        assert np.all(np.abs(forward_harmonic(s, cfg, NU)) <= env * (1 + 1e-12))
    # non-periodic: at nu = 2/h the spectrum has decayed by at least exp(-(2 pi c/h)^2)
    cfg = TransformConfig(h=0.1, c=0.1, N=5)
    s = SampledFunction(0.1, np.ones(11))
    peak = abs(forward_harmonic(s, cfg, 0.0))
    assert abs(forward_harmonic(s, cfg, 2 / cfg.h)) <= peak * math.exp(-((2 * math.pi) ** 2))


def test_round_trip_gaussian():
    # e^{-pi t^2} sampled at h = c = 0.02, N = 250; spectrum samples F(nh) come
    # from the quadrature oracle instead of the method under test
    cfg = TransformConfig(h=0.02, c=0.02, N=250)
    gauss = lambda t: math.exp(-math.pi * t * t)
    spec = [R.quadrature_ft_oracle(gauss, nu, 1e-10, support=(-8, 8)) for nu in cfg.nodes]
    spec = SampledFunction(cfg.h, spec)
    t = cfg.nodes[::25]
    back = inverse_weighted(spec, cfg, t)
    assert np.max(np.abs(back - np.exp(-np.pi * t * t))) <= 1e-3


# -- even / odd --------------------------------------------------------------------


def test_even_odd_forms(backend):
    f_even, f_odd = R.example_samples(FIG6)
    full = SampledFunction.from_function(R.example_f, FIG6)
    ev = forward_even(f_even, FIG6, NU)
    od = forward_odd(f_odd, FIG6, NU)
    assert isinstance(forward_even(f_even, FIG6, 0.3), float)
    assert np.all(np.real(od) == 0)
    assert forward_odd(f_odd, FIG6, 0.0) == 0
    assert np.max(np.abs(ev + od - forward_harmonic(full, FIG6, NU))) <= 1e-12
    assert np.max(np.abs(np.imag(forward_harmonic(f_even, FIG6, NU)))) <= 1e-12
    assert np.max(np.abs(np.real(forward_harmonic(f_odd, FIG6, NU)))) <= 1e-12


def test_even_odd_symmetry_check():
    cfg = TransformConfig(h=0.1, c=0.1, N=2)
    with pytest.raises(ValueError):
        forward_even(SampledFunction(0.1, [1, 2, 3, 2, 1.1]), cfg, 0.0)
    with pytest.raises(ValueError):
        forward_odd(SampledFunction(0.1, [-1, -2, 0.5, 2, 1]), cfg, 0.0)
    with pytest.raises(ValueError):
        forward_even(SampledFunction(0.1, [1j, 0, 0, 0, 1j]), cfg, 0.0)


# -- weight tables ----------------------------------------------------------------


def test_table_entries(backend):
    cfg = TransformConfig(h=0.05, c=0.07, N=6)
    grid = EvaluationGrid(np.linspace(-4, 4, 9))
    tab = precompute_weights(cfg, grid)
    assert tab.rows.tolist() == list(range(-3, 7))
    x = grid.points
    assert np.max(np.abs(tab.beta1[3] - cfg.h / 2 * F.w(-np.pi * cfg.c * x + 0j))) <= 1e-15
    for n, k in [(-3, 0), (2, 4), (6, 8)]:
        a = n * cfg.h / cfg.c
        if a >= 0:
            b1 = cfg.h / 2 * F.w_weighted(-np.pi * cfg.c * x[k], a)
            b2 = cfg.h / 2 * F.w_weighted(np.pi * cfg.c * x[k], a)
        else:  # upper half-plane, plain product
            b1 = cfg.h / 2 * math.exp(-a * a) * F.w(complex(-np.pi * cfg.c * x[k], -a))
            b2 = cfg.h / 2 * math.exp(-a * a) * F.w(complex(np.pi * cfg.c * x[k], -a))
        assert abs(tab.entry(1, n, k) - b1) <= 1e-12
        assert abs(tab.entry(2, n, k) - b2) <= 1e-12
        naive = cfg.h / 2 * math.exp(-a * a) * F.w(complex(-np.pi * cfg.c * x[k], -a))
        assert abs(tab.entry(1, n, k) - naive) <= 1e-12


def test_table_direction_relation(backend):
    cfg = TransformConfig(h=0.05, c=0.07, N=6)
    grid = EvaluationGrid(np.linspace(-4, 4, 9))
    fwd = precompute_weights(cfg, grid, Direction.FORWARD)
    inv = precompute_weights(cfg, grid, Direction.INVERSE)
    assert np.array_equal(inv.beta1, fwd.beta2)
    assert np.array_equal(inv.beta2, fwd.beta1)
    s = SampledFunction.zeros(cfg)
    with pytest.raises(ValueError):
        forward_with_table(s, inv)
    with pytest.raises(ValueError):
        inverse_with_table(s, fwd)


def test_table_is_immutable():
    cfg = TransformConfig(h=0.05, c=0.07, N=6)
    tab = precompute_weights(cfg, EvaluationGrid([0.0, 1.0]))
    with pytest.raises(ValueError):
        tab.beta1[0, 0] = 1
    with pytest.raises(AttributeError):
        tab.config = None


def test_table_serialization_round_trip(tmp_path):
    cfg = TransformConfig(h=0.05, c=0.07, N=6, trunc_depth=2)
    tab = precompute_weights(cfg, EvaluationGrid(np.linspace(-3, 3, 13)), Direction.INVERSE)
    blob = tab.to_bytes()
    back = WeightTable.from_bytes(blob)
    assert back.to_bytes() == blob
    assert back.config == cfg and back.direction is Direction.INVERSE
    assert np.array_equal(back.beta1, tab.beta1) and np.array_equal(back.beta2, tab.beta2)
    path = tmp_path / "w.gft"
    tab.save(path)
    assert WeightTable.load(path).to_bytes() == blob
    with pytest.raises(ValueError):
        WeightTable.from_bytes(b"NOTATABL" + blob[8:])
    with pytest.raises(ValueError):
        WeightTable.from_bytes(blob[:-1])


# -- concurrency -------------------------------------------------------------------


def test_parallel_bit_identical(backend):
    s, cfg = random_case(21, complex_=True)
    grid = np.linspace(-10, 10, 1001)
    for fwd, inv in [
        (forward_weighted, inverse_weighted),
        (forward_truncated, inverse_truncated),
        (forward_harmonic, inverse_harmonic),
    ]:
        assert np.array_equal(fwd(s, cfg, grid), fwd(s, cfg, grid, workers=4))
        assert np.array_equal(inv(s, cfg, grid), inv(s, cfg, grid, workers=3))
    tab = precompute_weights(cfg, EvaluationGrid(grid))
    assert np.array_equal(forward_with_table(s, tab).values, forward_with_table(s, tab, workers=4).values)


@settings(max_examples=25, deadline=None)
@given(
    st.integers(1, 20),
    st.floats(0.001, 0.3),
    st.floats(0.5, 2.0),
    st.lists(st.floats(-1e3, 1e3), min_size=41, max_size=41),
)
def test_weighted_harmonic_property(n, h, c_ratio, raw):
    cfg = TransformConfig(h=h, c=h * c_ratio, N=n)
    vals = np.asarray(raw[: 2 * n + 1])
    s = SampledFunction(h, vals)
    scale = max(1.0, np.sum(np.abs(vals)) * h)
    gap = np.abs(forward_weighted(s, cfg, NU) - forward_harmonic(s, cfg, NU))
    assert gap.max() <= 1e-10 * scale
