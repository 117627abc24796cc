"""Command-line front end.

Reproduces the published tables and figure data, runs end-to-end transform
error experiments, and emits machine-readable CSV/JSON reports.

Exit codes: 0 all checks pass, 1 a domination or tolerance check failed,
2 usage error.  Output files are byte-identical for identical run
configurations (timings go to stderr, never into the report).
"""

import argparse
import io
import json
import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import __version__, reference_data
from .bounds import build_bound_report, gamma_const
from .error_analysis import EstimatorConfig, error_constant
from .nfft import make_plan, measured_error
from .quadrature import integrate
from .windows import Window, WindowKind, WindowParams, make_window

ALL_WINDOWS = tuple(k.value for k in WindowKind)
FIGURE_WINDOWS = ("ckb", "kb", "sinh", "cexp", "exp", "ccosh")
COMMANDS = ("table1", "table2", "figure71", "bounds-report",
            "error-constant", "nfft-demo", "self-check")

_DEMO_NODES = 1000


@dataclass(frozen=True)
class RunConfig:
    command: str
    sigma_list: tuple
    m_list: tuple
    N: int
    window_list: tuple
    output_format: str
    output_path: str
    seed: int
    r_max: int
    x_grid: int

    @property
    def estimator(self):
        return EstimatorConfig(r_max=self.r_max, x_grid=self.x_grid)


class UsageError(ValueError):
    pass


def _parse_m_list(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError("empty m list")
    return tuple(out)


def _parse_sigma_list(text):
    out = tuple(float(part) for part in text.split(",") if part.strip())
    if not out:
        raise UsageError("empty sigma list")
    return out


def _parse_windows(text):
    out = []
    for part in text.split(","):
        part = part.strip().lower()
        if not part:
            continue
        if part not in ALL_WINDOWS:
            raise UsageError(f"unknown window {part!r}; choose from "
                             f"{','.join(ALL_WINDOWS)}")
        out.append(part)
    if not out:
        raise UsageError("empty window list")
    return tuple(out)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nfftlab",
        description="window error constants, bounds, and NFFT experiments")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--sigma", default=None,
                        help="comma list of oversampling factors")
    parser.add_argument("--m", default="2..6",
                        help="comma list or lo..hi range of truncation parameters")
    parser.add_argument("--N", type=int, default=128, help="bandwidth (even)")
    parser.add_argument("--windows", default=None, help="comma list of windows")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--rmax", type=int, default=64)
    parser.add_argument("--xgrid", type=int, default=2048)
    return parser


def _config_from_args(args):
    if args.sigma is None:
        sigma = (2.0,) if args.command in ("table1", "table2") else (1.25, 1.5, 2.0)
    else:
        sigma = _parse_sigma_list(args.sigma)
    if args.windows is None:
        windows = FIGURE_WINDOWS if args.command == "figure71" else ALL_WINDOWS
    else:
        windows = _parse_windows(args.windows)
    if args.N < 8 or args.N % 2:
        raise UsageError("--N must be an even integer >= 8")
    return RunConfig(
        command=args.command,
        sigma_list=sigma,
        m_list=_parse_m_list(args.m),
        N=args.N,
        window_list=windows,
        output_format=args.format,
        output_path=args.out,
        seed=args.seed,
        r_max=args.rmax,
        x_grid=args.xgrid,
    )


# -- output helpers -----------------------------------------------------------


def _fmt(value):
    if isinstance(value, float):
        return repr(float(value))  # shortest round-trip representation
    return str(value)


def _metadata_line(cfg):
    return (f"# nfftlab={__version__} N={cfg.N} r_max={cfg.r_max} "
            f"x_grid={cfg.x_grid}")


def _emit_table(cfg, header, rows, path=None):
    """Write rows as CSV (with metadata comment) or JSON."""
    buf = io.StringIO()
    if cfg.output_format == "csv":
        buf.write(_metadata_line(cfg) + "\n")
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
    else:
        payload = [dict(zip(header, row)) for row in rows]
        buf.write(json.dumps(payload, indent=2) + "\n")
    _write_out(buf.getvalue(), path if path is not None else cfg.output_path)


def _write_out(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _companion_path(path):
    if path is None:
        return None
    stem, dot, ext = path.rpartition(".")
    return f"{stem}_ref.{ext}" if dot else f"{path}_ref"


# -- commands -----------------------------------------------------------------


def cmd_table1(cfg):
    rows = []
    for sigma in cfg.sigma_list:
        for m in cfg.m_list:
            beta = 2.0 * math.pi * m * (1.0 - 1.0 / (2.0 * sigma))
            rows.append((m, sigma, beta, math.exp(-beta)))
    _emit_table(cfg, ("m", "sigma", "beta", "exp_minus_beta"), rows)
    return 0


def cmd_table2(cfg):
    rows = []
    for sigma in cfg.sigma_list:
        for m in cfg.m_list:
            params = WindowParams(m=m, sigma=sigma, N=cfg.N)
            rows.append((m, sigma, params.beta, gamma_const(params)))
    _emit_table(cfg, ("m", "sigma", "beta", "gamma"), rows)
    return 0


def _estimates(cfg, windows=None):
    """Error-constant estimates over the (window, sigma, m) grid, in order."""
    out = {}
    for kind in windows or cfg.window_list:
        for sigma in cfg.sigma_list:
            for m in cfg.m_list:
                window = make_window(kind, m=m, sigma=sigma, N=cfg.N)
                out[(kind, sigma, m)] = error_constant(window, cfg.estimator)
    return out


def cmd_figure71(cfg):
    estimates = _estimates(cfg)
    rows = [(kind, sigma, m, cfg.N, est.value, est.tail_slack)
            for (kind, sigma, m), est in estimates.items()]
    _emit_table(cfg, ("window", "sigma", "m", "N", "estimate", "tail_slack"),
                rows)

    ref_rows = []
    worst = 0.0
    for sigma, curves in reference_data.FIGURE_ERROR_CONSTANTS.items():
        if sigma not in cfg.sigma_list:
            continue
        for curve, values in curves.items():
            rep = reference_data.CURVE_WINDOWS[curve]
            if rep not in cfg.window_list:
                continue
            for m, ref in values.items():
                if m not in cfg.m_list:
                    continue
                est = estimates[(rep, sigma, m)].value
                dev = est / ref - 1.0
                worst = max(worst, abs(dev))
                ref_rows.append((curve, rep, sigma, m, ref, est, dev))
    _emit_table(cfg, ("curve", "window", "sigma", "m", "reference",
                      "estimate", "rel_deviation"),
                ref_rows, path=_companion_path(cfg.output_path))
    return 0 if worst <= reference_data.FIGURE_RTOL else 1


def cmd_error_constant(cfg):
    estimates = _estimates(cfg)
    rows = [(kind, sigma, m, cfg.N, est.value, est.tail_slack, est.n_argmax)
            for (kind, sigma, m), est in estimates.items()]
    _emit_table(cfg, ("window", "sigma", "m", "N", "estimate", "tail_slack",
                      "n_argmax"), rows)
    return 0


def cmd_bounds_report(cfg):
    reports = []
    for kind in cfg.window_list:
        for sigma in cfg.sigma_list:
            for m in cfg.m_list:
                window = make_window(kind, m=m, sigma=sigma, N=cfg.N)
                reports.append(build_bound_report(window, cfg=cfg.estimator))
    payload = [vars(r) for r in reports]
    _write_out(json.dumps(payload, indent=2) + "\n", cfg.output_path)
    return 0 if all(r.dominated for r in reports) else 1


def cmd_nfft_demo(cfg):
    rows = []
    all_ok = True
    for kind in cfg.window_list:
        for sigma in cfg.sigma_list:
            for m in cfg.m_list:
                window = make_window(kind, m=m, sigma=sigma, N=cfg.N)
                rng = np.random.default_rng(cfg.seed)
                c = rng.standard_normal(cfg.N) + 1j * rng.standard_normal(cfg.N)
                nodes = rng.uniform(-0.5, 0.5, _DEMO_NODES)
                start = time.perf_counter()
                plan = make_plan(window, nodes)
                err = measured_error(plan, c)
                elapsed = time.perf_counter() - start
                est = error_constant(window, cfg.estimator)
                bound = (est.value + est.tail_slack) * float(np.sum(np.abs(c)))
                ok = err <= bound
                all_ok = all_ok and ok
                print(f"nfft-demo {kind} sigma={sigma} m={m}: "
                      f"{elapsed:.3f}s", file=sys.stderr)
                rows.append((kind, sigma, m, cfg.N, _DEMO_NODES, cfg.seed,
                             err, bound, int(ok)))
    _emit_table(cfg, ("window", "sigma", "m", "N", "M", "seed",
                      "measured_error", "error_bound", "ok"), rows)
    return 0 if all_ok else 1


def cmd_self_check(cfg):
    from .error_analysis import error_constant_rect_bracket
    from .nfft import fft, ifft

    checks = []

    rng = np.random.default_rng(0)
    x = rng.standard_normal(192) + 1j * rng.standard_normal(192)
    roundtrip = np.max(np.abs(ifft(fft(x)) - x)) / np.max(np.abs(x))
    checks.append(("fft roundtrip", roundtrip < 1e-13))

    val, _ = integrate(lambda t: np.ones_like(t), 0.0, 1.0)
    checks.append(("quadrature constant", abs(val - 1.0) < 1e-14))
    val, _ = integrate(lambda t: np.cos(math.pi * t), 0.0, 1.0)
    checks.append(("quadrature odd cosine", abs(val) < 1e-13))

    w = make_window("cexp", m=3, sigma=2.0, N=64)
    split = Window(WindowKind.CEXP, w.params, "split")
    v = float(w.params.N // 2)
    checks.append(("cexp split consistency", abs(w.ft(v) - split.ft(v)) < 1e-10))

    try:
        error_constant_rect_bracket(WindowParams(m=3, sigma=2.0, N=64),
                                    cfg.estimator)
        checks.append(("rect bracket", True))
    except Exception:
        checks.append(("rect bracket", False))

    ok = True
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
        ok = ok and passed
    return 0 if ok else 1


_DISPATCH = {
    "table1": cmd_table1,
    "table2": cmd_table2,
    "figure71": cmd_figure71,
    "bounds-report": cmd_bounds_report,
    "error-constant": cmd_error_constant,
    "nfft-demo": cmd_nfft_demo,
    "self-check": cmd_self_check,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except (UsageError, ValueError) as exc:
        print(f"nfftlab: {exc}", file=sys.stderr)
        return 2
    try:
        return _DISPATCH[cfg.command](cfg)
    except (UsageError,) as exc:
        print(f"nfftlab: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"nfftlab: invalid configuration: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
