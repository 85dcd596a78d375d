"""The complex error function w(z) and functions built on it.

w(z) = exp(-z**2) * (1 + 2i/sqrt(pi) * integral_0^z exp(u**2) du)

Upper half-plane values come from the kernels in ``_ckernels``/``_pykernels``
(power series near the origin, Taylor expansion with continued-fraction
derivatives at moderate |z|, Laplace continued fraction far out). The lower
half-plane is always reached through w(z) = 2 exp(-z**2) - w(-z).

All public functions take a scalar or an array-like and return the same
shape (Python ``complex``/``float`` for scalars).
"""
import math
import warnings
from dataclasses import dataclass

import mpmath
import numpy as np
from scipy import integrate

from gaussft import _backend
from gaussft._pykernels import _two_prod
from gaussft.errors import FaddeevaOverflowError, QuadratureError

SQRT_PI = math.sqrt(math.pi)
SQRT2 = math.sqrt(2.0)
LOG_HALF_MAX = 709.0895657128241  # log(DBL_MAX / 2)
LOG_MAX = 709.782712893384

#: Absolute accuracy the kernels are validated to in the upper half-plane.
W_ACCURACY = 1e-10


def _as_complex(z):
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise ValueError("argument must be finite")
    return arr


def _as_real(x, name="x"):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def _out(arr, scalar):
    return arr.item() if scalar else arr


def w(z):
    """Faddeeva function over the whole complex plane.

    Raises FaddeevaOverflowError when Im z < 0 and 2 exp(-z**2) leaves the
    double range.
    """
    arr = _as_complex(z)
    flat = arr.ravel()
    re, im, bad = _backend.kernels.faddeeva(
        np.ascontiguousarray(flat.real), np.ascontiguousarray(flat.imag)
    )
    if bad >= 0:
        zb = complex(flat[bad])
        expo = (zb.imag - zb.real) * (zb.imag + zb.real)
        raise FaddeevaOverflowError(zb, (expo + math.log(2.0)) / math.log(10.0))
    out = (re + 1j * im).reshape(arr.shape)
    return _out(out, arr.ndim == 0)


def w_weighted(x, a):
    """exp(-a**2) * w(x - i a) for a >= 0, without intermediate overflow.

    Evaluated as 2 exp(-x**2) (cos 2xa + i sin 2xa) - exp(-a**2) w(-x + i a),
    every factor of which is bounded.
    """
    xa = _as_real(x)
    aa = _as_real(a, "a")
    if np.any(aa < 0):
        raise ValueError("a must be non-negative")
    xb, ab = np.broadcast_arrays(xa, aa)
    re, im = _backend.kernels.damped(
        np.ascontiguousarray(xb.ravel()), np.ascontiguousarray(ab.ravel())
    )
    out = (re + 1j * im).reshape(xb.shape)
    return _out(out, xb.ndim == 0)


def _exp_minus_square(z):
    """exp(-z**2) with the phase 2xy taken exactly; raises on overflow."""
    x, y = z.real, z.imag
    expo = (y - x) * (y + x)
    if np.any(expo > LOG_MAX):
        k = int(np.argmax(expo))
        zb = complex(z.ravel()[k]) if z.ndim else complex(z)
        raise FaddeevaOverflowError(zb, float(np.max(expo)) / math.log(10.0))
    p, e = _two_prod(2.0 * x, y)
    cs = np.cos(p) - e * np.sin(p)
    sn = np.sin(p) + e * np.cos(p)
    mag = np.exp(expo)
    return mag * cs - 1j * (mag * sn)


def _exp_checked(arg):
    if np.any(arg.real > LOG_MAX):
        raise FaddeevaOverflowError(complex(np.ravel(arg)[0]), float(np.max(arg.real)) / math.log(10.0))
    return np.exp(arg)


def erf_complex(z):
    """erf(z) = 1 - exp(-z**2) w(iz); odd symmetry keeps w in the upper half-plane."""
    arr = _as_complex(z)
    flip = arr.real < 0
    zz = np.where(flip, -arr, arr)
    val = 1.0 - _exp_minus_square(zz) * np.asarray(w(1j * zz))
    val = np.where(flip, -val, val)
    return _out(val, arr.ndim == 0)


def dawson(z):
    """Dawson's integral exp(-z**2) integral_0^z exp(u**2) du = sqrt(pi) (w(z) - exp(-z**2)) / 2i."""
    arr = _as_complex(z)
    flip = arr.imag < 0
    zz = np.where(flip, -arr, arr)
    val = SQRT_PI * (np.asarray(w(zz)) - _exp_minus_square(zz)) / 2j
    val = np.where(flip, -val, val)
    return _out(val, arr.ndim == 0)


def voigt(x, y):
    """Voigt function K(x, y) = Re w(x + iy), y >= 0; exactly exp(-x**2) at y = 0."""
    xa = _as_real(x)
    ya = _as_real(y, "y")
    if np.any(ya < 0):
        raise ValueError("voigt is defined for y >= 0")
    xb, yb = np.broadcast_arrays(xa, ya)
    val = np.real(np.asarray(w(xb + 1j * yb)))
    val = np.where(yb == 0.0, np.exp(-xb * xb), val)
    return _out(val, xb.ndim == 0)


def fresnel(z):
    """Fresnel integral integral_0^z exp(i pi u**2 / 2) du.

    F(z) = (1+i) [1 - exp(i pi z**2 / 2) w(sqrt(pi) (1+i) z / 2)] / 2
    """
    arr = _as_complex(z)
    zeta = SQRT_PI * (1 + 1j) * arr / 2
    flip = zeta.imag < 0
    zz = np.where(flip, -arr, arr)
    zeta = np.where(flip, -zeta, zeta)
    phase = _exp_checked(1j * (math.pi / 2) * zz * zz)
    val = (1 + 1j) * (1.0 - phase * np.asarray(w(zeta))) / 2
    val = np.where(flip, -val, val)
    return _out(val, arr.ndim == 0)


def normal_cdf(z):
    """Phi(z) = (1/sqrt(2 pi)) integral_0^z exp(-u**2/2) du = [1 - exp(-z**2/2) w(iz/sqrt2)] / 2.

    Note the lower limit 0: Phi(0) = 0 and Phi(+inf) = 1/2.
    """
    arr = _as_complex(z)
    flip = arr.real < 0
    zz = np.where(flip, -arr, arr) / SQRT2
    val = 0.5 * (1.0 - _exp_minus_square(zz) * np.asarray(w(1j * zz)))
    val = np.where(flip, -val, val)
    return _out(val, arr.ndim == 0)


# -- quadrature oracle -------------------------------------------------------


def _oracle_quadpack(x, y, tol, limit):
    # (2/sqrt(pi)) int_0^U exp(-u^2 - 2yu) [cos 2xu + i sin 2xu] du
    upper = math.sqrt(math.log(1e3 / tol)) + max(0.0, -y) * 2.0
    eps = 0.25 * tol * SQRT_PI

    def g(u):
        return math.exp(-u * u - 2.0 * y * u)

    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            if x == 0.0:
                re, err_re = integrate.quad(g, 0.0, upper, epsabs=eps, epsrel=0.0, limit=limit)
                im, err_im = 0.0, 0.0
            else:
                kw = dict(wvar=2.0 * x, epsabs=eps, epsrel=0.0, limit=limit)
                re, err_re = integrate.quad(g, 0.0, upper, weight="cos", **kw)
                im, err_im = integrate.quad(g, 0.0, upper, weight="sin", **kw)
        except integrate.IntegrationWarning as exc:
            raise QuadratureError(f"quadrature of w({complex(x, y)!r}) failed: {exc}") from exc
    if max(err_re, err_im) > eps:
        raise QuadratureError(
            f"quadrature of w({complex(x, y)!r}) reached error {max(err_re, err_im):.2e} > {eps:.2e}"
        )
    return complex(re, im) * (2.0 / SQRT_PI)


def _oracle_mpmath(x, y, tol, maxdegree):
    # Precision grows with the exp(y^2) cancellation of the lower half-plane.
    lost = y * y / math.log(10.0) if y < 0 else 0.0
    dps = 15 + math.ceil(-math.log10(tol)) + math.ceil(lost)
    tail = math.log(1e3 / tol)
    upper = (-y + math.sqrt(y * y + tail)) if y < 0 else math.sqrt(tail)
    step = min(1.0, math.pi / abs(x)) if x != 0.0 else 1.0
    pieces = max(1, math.ceil(upper / step))
    with mpmath.workdps(dps):
        xm, ym = mpmath.mpf(x), mpmath.mpf(y)
        nodes = [mpmath.mpf(upper) * k / pieces for k in range(pieces + 1)]
        val, err = mpmath.quad(
            lambda u: mpmath.exp(-u * u - 2 * ym * u + 2j * xm * u),
            nodes,
            error=True,
            maxdegree=maxdegree,
        )
        val = val * 2 / mpmath.sqrt(mpmath.pi)
        err = err * 2 / mpmath.sqrt(mpmath.pi)
    if err > tol:
        raise QuadratureError(
            f"quadrature of w({complex(x, y)!r}) reached error {float(err):.2e} > {tol:.2e}"
        )
    return complex(val)


def w_quadrature_oracle(z, tol=1e-12, method="auto", budget=None):
    """Reference w(z) by adaptive quadrature of

        w(x, y) = (2/sqrt(pi)) int_0^inf exp(-u^2) exp(-2yu) exp(2ixu) du

    Independent of the series/continued-fraction kernels. ``method``:
    ``"quadpack"`` (scipy QAWO, double precision; fine for y >= 0),
    ``"mpmath"`` (tanh-sinh at raised precision; required below the real
    axis, where the integrand reaches exp(y**2) while w stays O(1) near the
    diagonal), or ``"auto"``. ``budget`` caps subdivisions (quadpack) or the
    quadrature degree (mpmath). Raises QuadratureError instead of returning
    a value whose error estimate exceeds ``tol``.
    """
    if not (0.0 < tol <= 1e-6):
        raise ValueError("tol must lie in (0, 1e-6]")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("argument must be finite")
    if method == "auto":
        method = "quadpack" if z.imag >= 0 else "mpmath"
    if method == "quadpack":
        return _oracle_quadpack(z.real, z.imag, tol, budget or 500)
    if method == "mpmath":
        return _oracle_mpmath(z.real, z.imag, tol, budget or 8)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class AccuracyReport:
    max_abs_error: float
    mean_abs_error: float
    points_tested: int


def accuracy_report(points, tol=1e-12, scaled=False):
    """Compare w against the quadrature oracle, componentwise.

    With ``scaled`` each error is divided by max(1, |w|), which is the only
    meaningful measure where |w| is large enough that its spacing of
    doubles exceeds the target.
    """
    errs = []
    for z in np.ravel(np.asarray(points, dtype=complex)):
        ref = w_quadrature_oracle(z, tol)
        got = w(z)
        e = max(abs(got.real - ref.real), abs(got.imag - ref.imag))
        if scaled:
            e /= max(1.0, abs(ref))
        errs.append(e)
    errs = np.asarray(errs)
    return AccuracyReport(float(errs.max()), float(errs.mean()), len(errs))
