"""Command line front end: ``gaussft <command> [flags]``.

Commands
--------
eval-w        w(z) for each row of a CSV with columns re,im
transform     forward transform of a samples CSV (n,value_re,value_im)
inverse       inverse transform of a spectrum-samples CSV (same layout)
window-demo   Gaussian sampling kernels and window reconstructions of f = 1
reproduce     error envelope of the worked example for fig6 or fig7

Every CSV carries a one-line header and numbers printed with 17 significant
digits. ``reproduce`` also writes a JSON summary next to the CSV (same path,
``.json`` suffix), or prints it when no ``--output`` is given.

Exit status: 0 success, 2 bad flags or malformed input, 3 I/O failure,
4 numerical failure (overflow, quadrature non-convergence).
"""
import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from gaussft import faddeeva, reference, sampling, transform
from gaussft.errors import NumericalError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4

SCHEMA_VERSION = 1
WINDOW_WIDTHS = (0.15, 0.2, 0.25)


class InputFormatError(ValueError):
    """Malformed flag value or input row."""


def _fmt(v):
    return f"{float(v):.17g}"


def _write_csv(path, header, columns):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in zip(*columns):
        writer.writerow([_fmt(v) for v in row])
    _emit(path, buf.getvalue())


def _emit(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _read_rows(path, header):
    """Rows of floats from a CSV whose first line must equal ``header``."""
    if path is None:
        raise InputFormatError("--input is required")
    with open(path, newline="") as fh:
        lines = list(csv.reader(fh))
    if not lines or [c.strip() for c in lines[0]] != header:
        got = ",".join(lines[0]) if lines else "<empty file>"
        raise InputFormatError(f"{path}: row 1: expected header {','.join(header)!r}, got {got!r}")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        if not line or all(not c.strip() for c in line):
            continue
        if len(line) != len(header):
            raise InputFormatError(f"{path}: row {i}: expected {len(header)} fields, got {len(line)}")
        try:
            vals = [float(c) for c in line]
        except ValueError:
            raise InputFormatError(f"{path}: row {i}: non-numeric field in {','.join(line)!r}") from None
        if not all(math.isfinite(v) for v in vals):
            raise InputFormatError(f"{path}: row {i}: non-finite value")
        rows.append(vals)
    return rows


def _read_samples(path):
    rows = _read_rows(path, ["n", "value_re", "value_im"])
    if not rows:
        raise InputFormatError(f"{path}: no sample rows")
    by_index = {}
    for i, (n, re, im) in enumerate(rows, start=2):
        if n != int(n):
            raise InputFormatError(f"{path}: row {i}: index n={n!r} is not an integer")
        if int(n) in by_index:
            raise InputFormatError(f"{path}: row {i}: duplicate index n={int(n)}")
        by_index[int(n)] = complex(re, im)
    big_n = max(abs(n) for n in by_index)
    missing = [n for n in range(-big_n, big_n + 1) if n not in by_index]
    if missing or big_n < 1:
        raise InputFormatError(f"{path}: indices must cover -N..N (N >= 1); missing n={missing[:5]}")
    vals = np.array([by_index[n] for n in range(-big_n, big_n + 1)])
    if not np.any(vals.imag):
        vals = vals.real
    return big_n, vals


def _positive(name):
    def conv(text):
        try:
            v = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} expects a number, got {text!r}") from None
        if not (math.isfinite(v) and v > 0):
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {text!r}")
        return v

    return conv


def _count(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _finite(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return v


def _grid(args, lo, hi, count):
    lo = lo if args.grid_min is None else args.grid_min
    hi = hi if args.grid_max is None else args.grid_max
    count = count if args.grid_count is None else args.grid_count
    if count > 1 and not lo < hi:
        raise InputFormatError(f"--grid-min ({lo!r}) must be below --grid-max ({hi!r})")
    if count == 1:
        return transform.EvaluationGrid([lo])
    return transform.EvaluationGrid.linspace(lo, hi, count)


def _config(args, big_n):
    if args.n is not None and args.n != big_n:
        raise InputFormatError(f"--n {args.n} disagrees with the input, which holds N={big_n}")
    h = args.h if args.h is not None else 1.0 / (2 * big_n + 1)
    c = args.c if args.c is not None else h
    depth = args.trunc_depth if args.trunc_depth is not None else min(3, big_n)
    if depth < 0:
        raise InputFormatError(f"--trunc-depth must be non-negative, got {depth}")
    if depth > big_n and args.formulation in ("truncated", "table"):
        raise InputFormatError(f"--trunc-depth {depth} exceeds N={big_n}")
    return sampling.TransformConfig(h=h, c=c, N=big_n, trunc_depth=min(depth, big_n))


# -- commands ----------------------------------------------------------------


def cmd_eval_w(args):
    rows = _read_rows(args.input, ["re", "im"])
    z = np.array([complex(re, im) for re, im in rows], dtype=complex)
    vals = np.asarray(faddeeva.w(z)) if len(z) else np.empty(0, dtype=complex)
    _write_csv(args.output, ["w_re", "w_im"], [vals.real, vals.imag])


def _cmd_transform(args, which):
    big_n, vals = _read_samples(args.input)
    cfg = _config(args, big_n)
    samples = sampling.SampledFunction(cfg.h, vals)
    grid = _grid(args, -10.0, 10.0, 2001)
    fn = transform.FORMULATIONS[args.formulation][which]
    out = np.asarray(fn(samples, cfg, grid.points))
    _write_csv(args.output, ["x", "re", "im"], [grid.points, out.real, out.imag])


def cmd_transform(args):
    _cmd_transform(args, 0)


def cmd_inverse(args):
    _cmd_transform(args, 1)


def cmd_window_demo(args):
    h = args.h if args.h is not None else 0.25
    big_n = args.n if args.n is not None else 10
    widths = (args.c,) if args.c is not None else WINDOW_WIDTHS
    grid = _grid(args, -4.0, 4.0, 801)
    ones = sampling.SampledFunction(h, np.ones(2 * big_n + 1))
    header, cols = ["t"], [grid.points]
    for c in widths:
        cfg = sampling.TransformConfig(h=h, c=c, N=big_n)
        header.append(f"kernel_c{c:g}")
        cols.append(sampling.gaussian_kernel(grid.points, cfg))
    for c in widths:
        cfg = sampling.TransformConfig(h=h, c=c, N=big_n)
        header.append(f"window_c{c:g}")
        cols.append(sampling.reconstruct(ones, cfg, grid.points))
    _write_csv(args.output, header, cols)


def cmd_reproduce(args):
    fig = reference.FIGURES[args.figure]
    grid = _grid(args, *reference.ENVELOPE_GRID)
    env = reference.delta_envelope(fig.config, grid, fig.length_tol)
    bound = args.tolerance if args.tolerance is not None else fig.bound
    summary = {
        "schema": SCHEMA_VERSION,
        "figure": fig.name,
        "N": fig.N,
        "h": fig.h,
        "c": fig.h,
        "grid": {"min": float(grid.points[0]), "max": float(grid.points[-1]), "count": len(grid)},
        "max_abs_re": env.max_abs_re,
        "max_abs_im": env.max_abs_im,
        "bound": bound,
        "pass": bool(env.max_abs_re <= bound and env.max_abs_im <= bound),
    }
    text = json.dumps(summary, sort_keys=True, indent=2) + "\n"
    if args.output is None:
        sys.stdout.write(text)
        return
    buf = io.StringIO()
    env.to_csv(buf)
    _emit(args.output, buf.getvalue())
    _emit(os.path.splitext(args.output)[0] + ".json", text)


# -- parser ------------------------------------------------------------------


def _add_io(p, needs_input):
    if needs_input:
        p.add_argument("--input", help="input CSV path")
    p.add_argument("--output", help="output CSV path (default: stdout)")


def _add_grid(p):
    p.add_argument("--grid-min", type=_finite)
    p.add_argument("--grid-max", type=_finite)
    p.add_argument("--grid-count", type=_count)


def _add_config(p):
    p.add_argument("--h", type=_positive("--h"), help="sampling step (default 1/(2N+1))")
    p.add_argument("--c", type=_positive("--c"), help="kernel width (default h)")
    p.add_argument("--n", type=_count, help="half sample count N (checked against the input)")
    p.add_argument("--trunc-depth", type=int, help="negative terms kept by 'truncated'/'table' (default 3)")


def build_parser():
    parser = argparse.ArgumentParser(prog="gaussft", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-w", help="evaluate w(z) on points from a CSV")
    _add_io(p, True)
    p.set_defaults(func=cmd_eval_w)

    for name, func, help_ in (
        ("transform", cmd_transform, "forward transform of a samples CSV"),
        ("inverse", cmd_inverse, "inverse transform of a spectrum-samples CSV"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_io(p, True)
        _add_config(p)
        _add_grid(p)
        p.add_argument("--formulation", choices=sorted(transform.FORMULATIONS), default="harmonic")
        p.set_defaults(func=func)

    p = sub.add_parser("window-demo", help="sampling kernels and window reconstructions")
    _add_io(p, False)
    p.add_argument("--h", type=_positive("--h"), help="sampling step (default 0.25)")
    p.add_argument("--c", type=_positive("--c"), help="single kernel width (default 0.15, 0.2, 0.25)")
    p.add_argument("--n", type=_count, help="half sample count (default 10)")
    _add_grid(p)
    p.set_defaults(func=cmd_window_demo)

    p = sub.add_parser("reproduce", help="error envelope of the worked example")
    p.add_argument("figure", choices=sorted(reference.FIGURES))
    _add_io(p, False)
    _add_grid(p)
    p.add_argument("--tolerance", type=_positive("--tolerance"), help="override the pass bound")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        args.func(args)
    except InputFormatError as exc:
        print(f"gaussft: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NumericalError as exc:
        print(f"gaussft: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"gaussft: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"gaussft: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
