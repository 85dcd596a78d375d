# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Every function here has a twin with the same signature in ``_pykernels``;
the two must agree to rounding. All loops release the GIL so callers may
split an evaluation grid across threads.
"""
import numpy as np

from libc.math cimport exp, cos, sin, sqrt, fabs, fma, pow, M_PI

NAME = "compiled"

cdef double FACTOR = 1.12837916709551257388        # 2/sqrt(pi)
cdef double LOG_HALF_MAX = 709.0895657128241       # log(DBL_MAX / 2)


cdef void _wofz_upper(double x, double y, double *u_out, double *v_out) noexcept nogil:
    # w(x + iy) for y >= 0: power series near the origin, Taylor expansion with
    # continued-fraction derivatives in the middle, Laplace continued fraction far out.
    cdef double xabs = fabs(x)
    cdef double yabs = y
    cdef double xs = xabs / 6.3
    cdef double ys = yabs / 4.4
    cdef double qrho = xs * xs + ys * ys
    cdef double xquad, yquad, xsum, ysum, xaux, u1, v1, u2, v2, daux
    cdef double h, h2, qlambda, rx, ry, sx, sy, tx, ty, c, np1
    cdef double u, v
    cdef int n, i, kapn, nu

    if qrho < 0.085264:
        xquad = (xabs - yabs) * (xabs + yabs)
        yquad = 2.0 * xabs * yabs
        qrho = (1.0 - 0.85 * ys) * sqrt(qrho)
        n = <int>(6.0 + 72.0 * qrho + 0.5)
        xsum = 1.0 / (2.0 * n + 1.0)
        ysum = 0.0
        for i in range(n, 0, -1):
            xaux = (xsum * xquad - ysum * yquad) / i
            ysum = (xsum * yquad + ysum * xquad) / i
            xsum = xaux + 1.0 / (2.0 * i - 1.0)
        u1 = -FACTOR * (xsum * yabs + ysum * xabs) + 1.0
        v1 = FACTOR * (xsum * xabs - ysum * yabs)
        daux = exp(-xquad)
        u2 = daux * cos(yquad)
        v2 = -daux * sin(yquad)
        u = u1 * u2 - v1 * v2
        v = u1 * v2 + v1 * u2
    else:
        if qrho > 1.0:
            h = 0.0
            h2 = 0.0
            kapn = 0
            qrho = sqrt(qrho)
            nu = <int>(3.0 + 1442.0 / (26.0 * qrho + 77.0))
        else:
            qrho = (1.0 - ys) * sqrt(1.0 - qrho)
            h = 1.88 * qrho
            h2 = 2.0 * h
            kapn = <int>(7.0 + 34.0 * qrho + 0.5)
            nu = <int>(16.0 + 26.0 * qrho + 0.5)
        qlambda = pow(h2, <double>kapn) if h > 0.0 else 0.0
        rx = 0.0
        ry = 0.0
        sx = 0.0
        sy = 0.0
        for n in range(nu, -1, -1):
            np1 = n + 1.0
            tx = yabs + h + np1 * rx
            ty = xabs - np1 * ry
            c = 0.5 / (tx * tx + ty * ty)
            rx = c * tx
            ry = c * ty
            if h > 0.0 and n <= kapn:
                tx = qlambda + sx
                sx = rx * tx - ry * sy
                sy = ry * tx + rx * sy
                qlambda = qlambda / h2
        if h == 0.0:
            u = FACTOR * rx
            v = FACTOR * ry
        else:
            u = FACTOR * sx
            v = FACTOR * sy
        if yabs == 0.0:
            u = exp(-xabs * xabs)
    if x < 0.0:
        v = -v
    u_out[0] = u
    v_out[0] = v


cdef inline void _cis_exact(double a, double b, double *cs, double *sn) noexcept nogil:
    # cos and sin of the exact product a*b (error term recovered with fma).
    cdef double p = a * b
    cdef double e = fma(a, b, -p)
    cdef double cp = cos(p)
    cdef double sp = sin(p)
    cs[0] = cp - e * sp
    sn[0] = sp + e * cp


cdef int _w_full(double x, double y, double *u, double *v) noexcept nogil:
    # Whole plane; returns 1 when 2*exp(-z**2) would overflow.
    cdef double wr, wi, expo, big, cs, sn
    if y >= 0.0:
        _wofz_upper(x, y, u, v)
        return 0
    _wofz_upper(-x, -y, &wr, &wi)
    expo = (-y - x) * (-y + x)
    if expo > LOG_HALF_MAX:
        return 1
    big = 2.0 * exp(expo)
    _cis_exact(2.0 * x, y, &cs, &sn)
    u[0] = big * cs - wr
    v[0] = -big * sn - wi
    return 0


cdef void _damped(double x, double a, double *u, double *v) noexcept nogil:
    # exp(-a**2) * w(x - i a), bounded for every real a.
    cdef double wr, wi, g, ga, cs, sn
    if a <= 0.0:
        _wofz_upper(x, -a, &wr, &wi)
        g = exp(-a * a)
        u[0] = g * wr
        v[0] = g * wi
        return
    _wofz_upper(-x, a, &wr, &wi)
    ga = exp(-a * a)
    g = 2.0 * exp(-x * x)
    _cis_exact(2.0 * x, a, &cs, &sn)
    u[0] = g * cs - ga * wr
    v[0] = g * sn - ga * wi


def faddeeva(const double[::1] x, const double[::1] y):
    """w(x + iy) elementwise; returns (re, im, index of first overflow or -1)."""
    cdef Py_ssize_t m = x.shape[0], k
    cdef Py_ssize_t bad = -1
    re = np.empty(m)
    im = np.empty(m)
    cdef double[::1] re_v = re
    cdef double[::1] im_v = im
    with nogil:
        for k in range(m):
            if _w_full(x[k], y[k], &re_v[k], &im_v[k]):
                re_v[k] = 0.0
                im_v[k] = 0.0
                if bad < 0:
                    bad = k
    return re, im, bad


def damped(const double[::1] x, const double[::1] a):
    """exp(-a**2) * w(x - i a) elementwise; returns (re, im)."""
    cdef Py_ssize_t m = x.shape[0], k
    re = np.empty(m)
    im = np.empty(m)
    cdef double[::1] re_v = re
    cdef double[::1] im_v = im
    with nogil:
        for k in range(m):
            _damped(x[k], a[k], &re_v[k], &im_v[k])
    return re, im


def weighted_sum(const double[::1] f_re, const double[::1] f_im, double h, double c,
                 int n_lo, const double[::1] xs, double sign):
    """sum_{n=n_lo}^{N} [alpha_n w(s*pi*c*x, -nh/c) + alpha_-n w(-s*pi*c*x, -nh/c)]."""
    cdef Py_ssize_t m = xs.shape[0], k
    cdef int big_n = (f_re.shape[0] - 1) // 2
    cdef int n
    cdef double arg, a, d1r, d1i, d2r, d2i, p_re, p_im, q_re, q_im, acc_re, acc_im
    cdef double half_h = 0.5 * h
    out_re = np.empty(m)
    out_im = np.empty(m)
    cdef double[::1] o_re = out_re
    cdef double[::1] o_im = out_im
    with nogil:
        for k in range(m):
            arg = sign * M_PI * c * xs[k]
            acc_re = 0.0
            acc_im = 0.0
            for n in range(n_lo, big_n + 1):
                a = n * h / c
                _damped(arg, a, &d1r, &d1i)
                _damped(-arg, a, &d2r, &d2i)
                p_re = half_h * f_re[n + big_n]
                p_im = half_h * f_im[n + big_n]
                q_re = half_h * f_re[big_n - n]
                q_im = half_h * f_im[big_n - n]
                acc_re += (p_re * d1r - p_im * d1i) + (q_re * d2r - q_im * d2i)
                acc_im += (p_re * d1i + p_im * d1r) + (q_re * d2i + q_im * d2r)
            o_re[k] = acc_re
            o_im[k] = acc_im
    return out_re, out_im


def table_weights(double h, double c, int n_lo, int big_n, const double[::1] xs, double sign):
    """beta1, beta2 as (re, im) row-major arrays of shape (N - n_lo + 1, len(xs))."""
    cdef Py_ssize_t m = xs.shape[0], k
    cdef int rows = big_n - n_lo + 1
    cdef int n, r
    cdef double arg, a, dr, di
    cdef double half_h = 0.5 * h
    b1r = np.empty((rows, m))
    b1i = np.empty((rows, m))
    b2r = np.empty((rows, m))
    b2i = np.empty((rows, m))
    cdef double[:, ::1] v1r = b1r
    cdef double[:, ::1] v1i = b1i
    cdef double[:, ::1] v2r = b2r
    cdef double[:, ::1] v2i = b2i
    with nogil:
        for r in range(rows):
            n = n_lo + r
            a = n * h / c
            for k in range(m):
                arg = sign * M_PI * c * xs[k]
                _damped(arg, a, &dr, &di)
                v1r[r, k] = half_h * dr
                v1i[r, k] = half_h * di
                _damped(-arg, a, &dr, &di)
                v2r[r, k] = half_h * dr
                v2i[r, k] = half_h * di
    return b1r, b1i, b2r, b2i


def table_apply(const double[::1] f_re, const double[::1] f_im, int n_lo,
                const double[:, ::1] b1r, const double[:, ::1] b1i,
                const double[:, ::1] b2r, const double[:, ::1] b2i):
    """sum_n f(nh) beta1[n] + sum_n f(-nh) beta2[n], ascending n, beta1 sum first."""
    cdef Py_ssize_t m = b1r.shape[1], k
    cdef int rows = b1r.shape[0]
    cdef int big_n = (f_re.shape[0] - 1) // 2
    cdef int r, n
    cdef double fr, fi
    out_re = np.zeros(m)
    out_im = np.zeros(m)
    s2_re = np.zeros(m)
    s2_im = np.zeros(m)
    cdef double[::1] o_re = out_re
    cdef double[::1] o_im = out_im
    cdef double[::1] a_re = s2_re
    cdef double[::1] a_im = s2_im
    # row-outer so the table streams contiguously; per point the order is unchanged
    with nogil:
        for r in range(rows):
            n = n_lo + r
            fr = f_re[n + big_n]
            fi = f_im[n + big_n]
            for k in range(m):
                o_re[k] += fr * b1r[r, k] - fi * b1i[r, k]
                o_im[k] += fr * b1i[r, k] + fi * b1r[r, k]
        for r in range(rows):
            n = n_lo + r
            fr = f_re[big_n - n]
            fi = f_im[big_n - n]
            for k in range(m):
                a_re[k] += fr * b2r[r, k] - fi * b2i[r, k]
                a_im[k] += fr * b2i[r, k] + fi * b2r[r, k]
        for k in range(m):
            o_re[k] += a_re[k]
            o_im[k] += a_im[k]
    return out_re, out_im


def harmonic_sum(const double[::1] f_re, const double[::1] f_im, double h, double c,
                 const double[::1] xs, double sign):
    """h exp(-(pi c x)^2) sum_n f(nh) exp(s 2 pi i x n h)."""
    cdef Py_ssize_t m = xs.shape[0], k
    cdef int big_n = (f_re.shape[0] - 1) // 2
    cdef int n
    cdef double arg, damp, theta, ph, cs, sn, fr, fi, acc_re, acc_im, scale
    out_re = np.empty(m)
    out_im = np.empty(m)
    cdef double[::1] o_re = out_re
    cdef double[::1] o_im = out_im
    with nogil:
        for k in range(m):
            arg = M_PI * c * xs[k]
            damp = exp(-(arg * arg))
            theta = sign * 2.0 * M_PI * xs[k] * h
            acc_re = 0.0
            acc_im = 0.0
            for n in range(-big_n, big_n + 1):
                ph = n * theta
                cs = cos(ph)
                sn = sin(ph)
                fr = f_re[n + big_n]
                fi = f_im[n + big_n]
                acc_re += fr * cs - fi * sn
                acc_im += fr * sn + fi * cs
            scale = h * damp
            o_re[k] = scale * acc_re
            o_im[k] = scale * acc_im
    return out_re, out_im


def cosine_sum(const double[::1] f_pos, double f0, double h, double c, const double[::1] xs):
    """2h exp(-(pi c x)^2) (f0/2 + sum_{n>=1} f(nh) cos(2 pi x n h))."""
    cdef Py_ssize_t m = xs.shape[0], k
    cdef int big_n = f_pos.shape[0]
    cdef int n
    cdef double arg, damp, theta, acc
    out = np.empty(m)
    cdef double[::1] o = out
    with nogil:
        for k in range(m):
            arg = M_PI * c * xs[k]
            damp = exp(-(arg * arg))
            theta = 2.0 * M_PI * xs[k] * h
            acc = 0.5 * f0
            for n in range(1, big_n + 1):
                acc += f_pos[n - 1] * cos(n * theta)
            o[k] = 2.0 * h * damp * acc
    return out


def sine_sum(const double[::1] f_pos, double h, double c, const double[::1] xs):
    """-2h exp(-(pi c x)^2) sum_{n>=1} f(nh) sin(2 pi x n h)."""
    cdef Py_ssize_t m = xs.shape[0], k
    cdef int big_n = f_pos.shape[0]
    cdef int n
    cdef double arg, damp, theta, acc
    out = np.empty(m)
    cdef double[::1] o = out
    with nogil:
        for k in range(m):
            arg = M_PI * c * xs[k]
            damp = exp(-(arg * arg))
            theta = 2.0 * M_PI * xs[k] * h
            acc = 0.0
            for n in range(1, big_n + 1):
                acc += f_pos[n - 1] * sin(n * theta)
            o[k] = -2.0 * h * damp * acc
    return out
