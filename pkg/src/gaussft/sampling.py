"""Gaussian sampling kernel and reconstruction from equidistant samples.

A function is approximated from samples f(nh), n = -N..N, as

    f(t) ~ h/(c sqrt(pi)) * sum_n exp(-((t - nh)/c)**2) f(nh)

where c is a free width parameter. The sinc series is kept alongside as a
comparison oracle.
"""
import math
from dataclasses import dataclass, field

import numpy as np

SQRT_PI = math.sqrt(math.pi)

#: Points per interval used by :func:`oscillation_metric`.
OSCILLATION_POINTS = 10_000


@dataclass(frozen=True)
class TransformConfig:
    """Sampling step ``h``, kernel width ``c``, half sample count ``N`` and
    the number of negative-index terms kept by the truncated transforms."""

    h: float
    c: float
    N: int
    trunc_depth: int = 3

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0):
            raise ValueError(f"h must be positive, got {self.h!r}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError(f"c must be positive, got {self.c!r}")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        if int(self.trunc_depth) != self.trunc_depth or self.trunc_depth < 0:
            raise ValueError(f"trunc_depth must be a non-negative integer, got {self.trunc_depth!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "trunc_depth", int(self.trunc_depth))

    @classmethod
    def from_length(cls, length, N, h=None, c=None, trunc_depth=3, tol=1e-12):
        """Config for a wavelet of effective length ``length`` = (2N+1) h.

        ``h`` defaults to length/(2N+1) and ``c`` to ``h``. An explicit ``h``
        must satisfy the length relation to ``tol``.
        """
        if h is None:
            h = length / (2 * N + 1)
        elif abs((2 * N + 1) * h - length) > tol:
            raise ValueError(
                f"(2N+1)h = {(2 * N + 1) * h!r} differs from the length {length!r} by more than {tol:g}"
            )
        return cls(h=h, c=h if c is None else c, N=N, trunc_depth=trunc_depth)

    @property
    def length(self):
        return (2 * self.N + 1) * self.h

    @property
    def indices(self):
        return np.arange(-self.N, self.N + 1)

    @property
    def nodes(self):
        return self.indices * self.h


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Samples f(nh) for n = -N..N; ``values[N]`` is f(0)."""

    step: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.array(self.values)
        if vals.ndim != 1 or len(vals) % 2 == 0:
            raise ValueError(f"need an odd number 2N+1 of samples, got shape {vals.shape}")
        if not np.issubdtype(vals.dtype, np.complexfloating):
            vals = vals.astype(float)
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, f, cfg):
        """Sample a callable at t = nh."""
        return cls(cfg.h, [f(t) for t in cfg.nodes])

    @classmethod
    def zeros(cls, cfg):
        return cls(cfg.h, np.zeros(2 * cfg.N + 1))

    @property
    def N(self):
        return (len(self.values) - 1) // 2

    @property
    def is_complex(self):
        return np.issubdtype(self.values.dtype, np.complexfloating)

    def __getitem__(self, n):
        """f(nh); n counts from -N."""
        if not -self.N <= n <= self.N:
            raise IndexError(f"sample index {n} outside -{self.N}..{self.N}")
        return self.values[n + self.N]

    def check(self, cfg):
        if self.N != cfg.N:
            raise ValueError(f"samples hold N={self.N} but the config has N={cfg.N}")
        if not math.isclose(self.step, cfg.h, rel_tol=1e-12):
            raise ValueError(f"sample step {self.step!r} differs from config h={cfg.h!r}")


def gaussian_kernel(t, cfg):
    """h exp(-(t/c)**2) / (c sqrt(pi))."""
    t = np.asarray(t, dtype=float)
    val = cfg.h * np.exp(-((t / cfg.c) ** 2)) / (cfg.c * SQRT_PI)
    return val.item() if val.ndim == 0 else val


def reconstruct(samples, cfg, t):
    """Gaussian-kernel series through the samples, evaluated at ``t``."""
    samples.check(cfg)
    t = np.asarray(t, dtype=float)
    acc = np.zeros(t.shape, dtype=samples.values.dtype)
    for n in range(-cfg.N, cfg.N + 1):
        acc = acc + np.exp(-(((t - n * cfg.h) / cfg.c) ** 2)) * samples[n]
    val = cfg.h / (cfg.c * SQRT_PI) * acc
    return val.item() if val.ndim == 0 else val


def _sinc_kernel(u):
    # sin(pi u)/(pi u) with integer u snapped so that the series interpolates exactly.
    k = np.round(u)
    on_node = np.abs(u - k) <= 1e-12 * np.maximum(1.0, np.abs(u))
    return np.where(on_node, np.where(k == 0, 1.0, 0.0), np.sinc(u))


def sinc_reconstruct(samples, cfg, t):
    """sum_n sinc(pi (t - nh)/h) f(nh); comparison oracle for :func:`reconstruct`."""
    samples.check(cfg)
    t = np.asarray(t, dtype=float)
    acc = np.zeros(t.shape, dtype=samples.values.dtype)
    for n in range(-cfg.N, cfg.N + 1):
        acc = acc + _sinc_kernel(t / cfg.h - n) * samples[n]
    return acc.item() if acc.ndim == 0 else acc


def oscillation_metric(cfg, interval, points=OSCILLATION_POINTS):
    """max |reconstruct(f = 1) - 1| over a uniform grid on ``interval``.

    The interval must lie inside the window |t| <= (2N+1)h/2.
    """
    a, b = interval
    half = cfg.length / 2
    if a > b or a < -half or b > half:
        raise ValueError(f"interval {interval!r} is not inside the window [{-half}, {half}]")
    t = np.array([a]) if a == b else np.linspace(a, b, points)
    ones = SampledFunction(cfg.h, np.ones(2 * cfg.N + 1))
    return float(np.max(np.abs(reconstruct(ones, cfg, t) - 1.0)))
