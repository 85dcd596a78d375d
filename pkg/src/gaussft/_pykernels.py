"""Pure numpy twins of the compiled kernels in ``_ckernels.pyx``.

Loops that run over the sum index in the compiled code are vectorised over
the evaluation points here; the per-point arithmetic and its order are the
same, so the two backends agree to rounding of the libm calls.
"""
import numpy as np

NAME = "python"

FACTOR = 1.12837916709551257388  # 2/sqrt(pi)
LOG_HALF_MAX = 709.0895657128241  # log(DBL_MAX / 2)
_SPLIT = 134217729.0  # 2**27 + 1


def _two_prod(a, b):
    """Dekker's exact product: a*b == p + e."""
    p = a * b
    t = _SPLIT * a
    a_hi = t - (t - a)
    a_lo = a - a_hi
    t = _SPLIT * b
    b_hi = t - (t - b)
    b_lo = b - b_hi
    e = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, e


def _cis_exact(a, b):
    p, e = _two_prod(a, b)
    cp = np.cos(p)
    sp = np.sin(p)
    return cp - e * sp, sp + e * cp


def _wofz_upper(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xabs = np.abs(x)
    yabs = y
    xs = xabs / 6.3
    ys = yabs / 4.4
    qrho = xs * xs + ys * ys
    u = np.empty_like(xabs)
    v = np.empty_like(xabs)

    series = qrho < 0.085264
    if series.any():
        xa, ya, q, yy = xabs[series], yabs[series], qrho[series], ys[series]
        xquad = (xa - ya) * (xa + ya)
        yquad = 2.0 * xa * ya
        q = (1.0 - 0.85 * yy) * np.sqrt(q)
        nterm = np.floor(6.0 + 72.0 * q + 0.5).astype(int)
        xsum = 1.0 / (2.0 * nterm + 1.0)
        ysum = np.zeros_like(xa)
        for i in range(int(nterm.max()), 0, -1):
            live = i <= nterm
            xaux = (xsum * xquad - ysum * yquad) / i
            ysum = np.where(live, (xsum * yquad + ysum * xquad) / i, ysum)
            xsum = np.where(live, xaux + 1.0 / (2.0 * i - 1.0), xsum)
        u1 = -FACTOR * (xsum * ya + ysum * xa) + 1.0
        v1 = FACTOR * (xsum * xa - ysum * ya)
        daux = np.exp(-xquad)
        u2 = daux * np.cos(yquad)
        v2 = -daux * np.sin(yquad)
        u[series] = u1 * u2 - v1 * v2
        v[series] = u1 * v2 + v1 * u2

    frac = ~series
    if frac.any():
        xa, ya, q, yy = xabs[frac], yabs[frac], qrho[frac], ys[frac]
        far = q > 1.0
        with np.errstate(invalid="ignore"):
            q_far = np.sqrt(q)
            q_mid = (1.0 - yy) * np.sqrt(1.0 - q)
        h = np.where(far, 0.0, 1.88 * q_mid)
        h2 = 2.0 * h
        kapn = np.where(far, 0, np.floor(7.0 + 34.0 * q_mid + 0.5)).astype(int)
        nu = np.where(
            far,
            np.floor(3.0 + 1442.0 / (26.0 * q_far + 77.0)),
            np.floor(16.0 + 26.0 * q_mid + 0.5),
        ).astype(int)
        taylor = h > 0.0
        qlambda = np.where(taylor, np.power(h2, kapn.astype(float)), 0.0)
        rx = np.zeros_like(xa)
        ry = np.zeros_like(xa)
        sx = np.zeros_like(xa)
        sy = np.zeros_like(xa)
        with np.errstate(divide="ignore", invalid="ignore"):
            for n in range(int(nu.max()), -1, -1):
                live = n <= nu
                np1 = n + 1.0
                tx = ya + h + np1 * rx
                ty = xa - np1 * ry
                c = 0.5 / (tx * tx + ty * ty)
                rx = np.where(live, c * tx, rx)
                ry = np.where(live, c * ty, ry)
                acc = live & taylor & (n <= kapn)
                tx = qlambda + sx
                sx_new = rx * tx - ry * sy
                sy = np.where(acc, ry * tx + rx * sy, sy)
                sx = np.where(acc, sx_new, sx)
                qlambda = np.where(acc, qlambda / h2, qlambda)
        uu = np.where(taylor, FACTOR * sx, FACTOR * rx)
        vv = np.where(taylor, FACTOR * sy, FACTOR * ry)
        uu = np.where(ya == 0.0, np.exp(-xa * xa), uu)
        u[frac] = uu
        v[frac] = vv
    v = np.where(x < 0.0, -v, v)
    return u, v


def faddeeva(x, y):
    x = np.ascontiguousarray(x, dtype=float)
    y = np.ascontiguousarray(y, dtype=float)
    re = np.empty_like(x)
    im = np.empty_like(x)
    upper = y >= 0.0
    if upper.any():
        re[upper], im[upper] = _wofz_upper(x[upper], y[upper])
    bad = -1
    lower = ~upper
    if lower.any():
        xl, yl = x[lower], y[lower]
        wr, wi = _wofz_upper(-xl, -yl)
        expo = (-yl - xl) * (-yl + xl)
        over = expo > LOG_HALF_MAX
        with np.errstate(over="ignore"):
            big = 2.0 * np.exp(np.where(over, 0.0, expo))
        cs, sn = _cis_exact(2.0 * xl, yl)
        re[lower] = np.where(over, 0.0, big * cs - wr)
        im[lower] = np.where(over, 0.0, -big * sn - wi)
        if over.any():
            bad = int(np.flatnonzero(lower)[np.argmax(over)])
    return re, im, bad


def _damped(x, a):
    x, a = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(a, dtype=float))
    u = np.empty(x.shape)
    v = np.empty(x.shape)
    low = a <= 0.0
    if low.any():
        wr, wi = _wofz_upper(x[low], -a[low])
        g = np.exp(-a[low] * a[low])
        u[low] = g * wr
        v[low] = g * wi
    high = ~low
    if high.any():
        xh, ah = x[high], a[high]
        wr, wi = _wofz_upper(-xh, ah)
        ga = np.exp(-ah * ah)
        g = 2.0 * np.exp(-xh * xh)
        cs, sn = _cis_exact(2.0 * xh, ah)
        u[high] = g * cs - ga * wr
        v[high] = g * sn - ga * wi
    return u, v


def damped(x, a):
    return _damped(np.ascontiguousarray(x, dtype=float), np.ascontiguousarray(a, dtype=float))


def weighted_sum(f_re, f_im, h, c, n_lo, xs, sign):
    xs = np.asarray(xs, dtype=float)
    big_n = (len(f_re) - 1) // 2
    arg = sign * np.pi * c * xs
    half_h = 0.5 * h
    acc_re = np.zeros_like(xs)
    acc_im = np.zeros_like(xs)
    for n in range(n_lo, big_n + 1):
        a = n * h / c
        d1r, d1i = _damped(arg, a)
        d2r, d2i = _damped(-arg, a)
        p_re = half_h * f_re[n + big_n]
        p_im = half_h * f_im[n + big_n]
        q_re = half_h * f_re[big_n - n]
        q_im = half_h * f_im[big_n - n]
        acc_re = acc_re + ((p_re * d1r - p_im * d1i) + (q_re * d2r - q_im * d2i))
        acc_im = acc_im + ((p_re * d1i + p_im * d1r) + (q_re * d2i + q_im * d2r))
    return acc_re, acc_im


def table_weights(h, c, n_lo, big_n, xs, sign):
    xs = np.asarray(xs, dtype=float)
    rows = big_n - n_lo + 1
    arg = sign * np.pi * c * xs
    half_h = 0.5 * h
    b1r = np.empty((rows, len(xs)))
    b1i = np.empty_like(b1r)
    b2r = np.empty_like(b1r)
    b2i = np.empty_like(b1r)
    for r in range(rows):
        a = (n_lo + r) * h / c
        dr, di = _damped(arg, a)
        b1r[r], b1i[r] = half_h * dr, half_h * di
        dr, di = _damped(-arg, a)
        b2r[r], b2i[r] = half_h * dr, half_h * di
    return b1r, b1i, b2r, b2i


def table_apply(f_re, f_im, n_lo, b1r, b1i, b2r, b2i):
    rows, m = b1r.shape
    big_n = (len(f_re) - 1) // 2
    s1r = np.zeros(m)
    s1i = np.zeros(m)
    for r in range(rows):
        n = n_lo + r
        fr, fi = f_re[n + big_n], f_im[n + big_n]
        s1r = s1r + (fr * b1r[r] - fi * b1i[r])
        s1i = s1i + (fr * b1i[r] + fi * b1r[r])
    s2r = np.zeros(m)
    s2i = np.zeros(m)
    for r in range(rows):
        n = n_lo + r
        fr, fi = f_re[big_n - n], f_im[big_n - n]
        s2r = s2r + (fr * b2r[r] - fi * b2i[r])
        s2i = s2i + (fr * b2i[r] + fi * b2r[r])
    return s1r + s2r, s1i + s2i


def harmonic_sum(f_re, f_im, h, c, xs, sign):
    xs = np.asarray(xs, dtype=float)
    big_n = (len(f_re) - 1) // 2
    arg = np.pi * c * xs
    damp = np.exp(-(arg * arg))
    theta = sign * 2.0 * np.pi * xs * h
    acc_re = np.zeros_like(xs)
    acc_im = np.zeros_like(xs)
    for n in range(-big_n, big_n + 1):
        ph = n * theta
        cs = np.cos(ph)
        sn = np.sin(ph)
        fr, fi = f_re[n + big_n], f_im[n + big_n]
        acc_re = acc_re + (fr * cs - fi * sn)
        acc_im = acc_im + (fr * sn + fi * cs)
    scale = h * damp
    return scale * acc_re, scale * acc_im


def cosine_sum(f_pos, f0, h, c, xs):
    xs = np.asarray(xs, dtype=float)
    arg = np.pi * c * xs
    damp = np.exp(-(arg * arg))
    theta = 2.0 * np.pi * xs * h
    acc = np.full_like(xs, 0.5 * f0)
    for n in range(1, len(f_pos) + 1):
        acc = acc + f_pos[n - 1] * np.cos(n * theta)
    return 2.0 * h * damp * acc


def sine_sum(f_pos, h, c, xs):
    xs = np.asarray(xs, dtype=float)
    arg = np.pi * c * xs
    damp = np.exp(-(arg * arg))
    theta = 2.0 * np.pi * xs * h
    acc = np.zeros_like(xs)
    for n in range(1, len(f_pos) + 1):
        acc = acc + f_pos[n - 1] * np.sin(n * theta)
    return -2.0 * h * damp * acc
