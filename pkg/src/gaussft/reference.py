"""Worked example and analytic oracles.

The test wavelet is f(t) = 2t + 1 on [-1/2, 1/2] (zero elsewhere), split
into its even part (the unit box) and odd part 2t. Their transforms are
known in closed form:

    G(nu) = sin(pi nu) / (pi nu)
    H(nu) = i (pi nu cos(pi nu) - sin(pi nu)) / (pi nu)**2

which lets the cosine/sine sums be scored pointwise.
"""
import csv
import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from gaussft.errors import QuadratureError
from gaussft.sampling import SampledFunction, TransformConfig
from gaussft.transform import EvaluationGrid, forward_even, forward_odd

SUPPORT = (-0.5, 0.5)


def _inside(t):
    return (t >= SUPPORT[0]) & (t <= SUPPORT[1])


def _scalar_or_array(val, t):
    return float(val) if np.ndim(t) == 0 else val


def example_f(t):
    """2t + 1 on [-1/2, 1/2], else 0."""
    t = np.asarray(t, dtype=float)
    return _scalar_or_array(np.where(_inside(t), 2.0 * t + 1.0, 0.0), t)


def example_even(t):
    """1 on [-1/2, 1/2], else 0."""
    t = np.asarray(t, dtype=float)
    return _scalar_or_array(np.where(_inside(t), 1.0, 0.0), t)


def example_odd(t):
    """2t on [-1/2, 1/2], else 0."""
    t = np.asarray(t, dtype=float)
    return _scalar_or_array(np.where(_inside(t), 2.0 * t, 0.0), t)


class WaveletKind(enum.Enum):
    FULL = "full"
    EVEN_PART = "even_part"
    ODD_PART = "odd_part"


_KIND_FUNCS = {
    WaveletKind.FULL: example_f,
    WaveletKind.EVEN_PART: example_even,
    WaveletKind.ODD_PART: example_odd,
}


@dataclass(frozen=True)
class ExampleWavelet:
    kind: WaveletKind = WaveletKind.FULL
    support: tuple = SUPPORT

    def __call__(self, t):
        return _KIND_FUNCS[WaveletKind(self.kind)](t)


def analytic_G(nu):
    """sinc(pi nu), 1 at nu = 0."""
    nu = np.asarray(nu, dtype=float)
    return _scalar_or_array(np.sinc(nu), nu)


def analytic_H(nu):
    """i (pi nu cos(pi nu) - sin(pi nu)) / (pi nu)**2, 0 at nu = 0."""
    nu = np.asarray(nu, dtype=float)
    u = np.pi * nu
    small = np.abs(u) < 1e-3
    safe = np.where(small, 1.0, u)
    # series -u/3 + u^3/30 - u^5/840 avoids the cancellation near 0
    im = np.where(
        small,
        -u / 3 + u**3 / 30 - u**5 / 840,
        (safe * np.cos(safe) - np.sin(safe)) / (safe * safe),
    )
    val = 1j * im
    return complex(val) if nu.ndim == 0 else val


# -- error envelopes ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ErrorEnvelope:
    grid: EvaluationGrid
    delta_re: np.ndarray = field(repr=False)
    delta_im: np.ndarray = field(repr=False)
    max_abs_re: float
    max_abs_im: float

    def to_csv(self, fh):
        """Write columns nu, delta_re, delta_im (17 significant digits)."""
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["nu", "delta_re", "delta_im"])
        for row in zip(self.grid.points, self.delta_re, self.delta_im):
            writer.writerow([f"{v:.17g}" for v in row])


@dataclass(frozen=True)
class Figure:
    """A reference accuracy case: configuration with the rounded step h and its error bound."""

    name: str
    N: int
    h: float
    bound: float
    #: half a unit in the last digit of h, times 2N+1
    length_tol: float

    @property
    def config(self):
        return TransformConfig(h=self.h, c=self.h, N=self.N)


FIGURES = {
    "fig6": Figure("fig6", 50, 0.0099, 1e-3, 101 * 5e-5),
    "fig7": Figure("fig7", 300, 0.00166389, 3e-5, 601 * 5e-9),
}

#: nu range used for the figure envelopes (the plotted range is not stated).
ENVELOPE_GRID = (-10.0, 10.0, 2001)


def envelope_grid(lo=ENVELOPE_GRID[0], hi=ENVELOPE_GRID[1], count=ENVELOPE_GRID[2]):
    return EvaluationGrid.linspace(lo, hi, count)


def example_samples(cfg):
    """Even and odd parts of the example sampled at t = nh."""
    return (
        SampledFunction.from_function(example_even, cfg),
        SampledFunction.from_function(example_odd, cfg),
    )


def delta_envelope(cfg, grid, length_tol=1e-12):
    """Pointwise differences between the analytic transforms and the cosine/sine sums.

    delta_re = G(nu) - even-sum(nu), delta_im = Im H(nu) - Im odd-sum(nu).
    The config must cover the unit-length support: (2N+1) h = 1 to ``length_tol``.
    """
    if abs(cfg.length - 1.0) > length_tol:
        raise ValueError(f"(2N+1)h = {cfg.length!r} does not match the unit support (tol {length_tol:g})")
    if not isinstance(grid, EvaluationGrid):
        grid = EvaluationGrid(grid)
    even, odd = example_samples(cfg)
    d_re = analytic_G(grid.points) - forward_even(even, cfg, grid.points)
    d_im = np.imag(analytic_H(grid.points)) - np.imag(forward_odd(odd, cfg, grid.points))
    return ErrorEnvelope(
        grid,
        d_re,
        d_im,
        float(np.max(np.abs(d_re))),
        float(np.max(np.abs(d_im))),
    )


def figure_envelope(name, grid=None):
    fig = FIGURES[name]
    return delta_envelope(fig.config, grid if grid is not None else envelope_grid(), fig.length_tol)


# -- quadrature oracle -------------------------------------------------------


def _quad(g, lo, hi, weight, omega, eps, limit):
    if weight == "sin" and omega == 0.0:
        return 0.0, 0.0
    if omega == 0.0:
        return integrate.quad(g, lo, hi, epsabs=eps, epsrel=0.0, limit=limit)
    return integrate.quad(g, lo, hi, weight=weight, wvar=omega, epsabs=eps, epsrel=0.0, limit=limit)


def quadrature_ft_oracle(f, nu, tol=1e-10, support=SUPPORT, budget=200):
    """int f(t) exp(-2 pi i nu t) dt over ``support`` by adaptive quadrature.

    Oscillation is handled with QUADPACK's cos/sin weighted rule. Raises
    QuadratureError when the error estimate exceeds ``tol``.
    """
    if not (0.0 < tol <= 1e-6):
        raise ValueError("tol must lie in (0, 1e-6]")
    lo, hi = support
    omega = 2.0 * math.pi * float(nu)
    probe = complex(f(0.5 * (lo + hi)))
    parts = [lambda t: float(np.real(f(t)))]
    if probe.imag != 0.0:
        parts.append(lambda t: float(np.imag(f(t))))
    eps = tol / (2 * len(parts))
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            for g in parts:
                c, ec = _quad(g, lo, hi, "cos", omega, eps, budget)
                s, es = _quad(g, lo, hi, "sin", omega, eps, budget)
                if max(ec, es) > eps:
                    raise QuadratureError(
                        f"Fourier quadrature at nu={nu!r} reached error {max(ec, es):.2e} > {eps:.2e}"
                    )
                results.append((c, s))
        except integrate.IntegrationWarning as exc:
            raise QuadratureError(f"Fourier quadrature at nu={nu!r} failed: {exc}") from exc
    cr, sr = results[0]
    ci, si = results[1] if len(results) > 1 else (0.0, 0.0)
    return complex(cr + si, ci - sr)
