"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
3 numeric domain error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

from . import analysis, report, verification
from .errors import PZetaError
from .primes import sieve
from .primezeta import Method, check_domain, evaluate

log = logging.getLogger("pzeta")

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3

# figure defaults follow the published captions (x = 1e4); the printed
# script in the same source sets x = 1e3, pass --x 1000 to match it
DEFAULT_X = 1e4
MIN_X = 1e2
DEFAULT_N_MAX = 1000
DEFAULT_SIGMA = 0.75
DEFAULT_T = (0.1, 50.0)
FIG1_RANGE = (0.5001, 2.0, 0.001)


class ConfigError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Accept '2', '0.75+2i', '0.75+2j', '-3i'."""
    t = text.strip().replace(" ", "").replace("I", "j").replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _methods(values, default):
    return [Method(v) for v in (values or default)]


def _add_common(p, methods_default):
    p.add_argument("--x", type=float, default=DEFAULT_X, help="limit variable (>= 100)")
    p.add_argument("--prime-limit", type=int, default=None,
                   help="prime table size (default max(x, 1e6))")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="Moebius truncation")
    p.add_argument("--method", dest="methods", action="append",
                   choices=[m.value for m in Method],
                   help=f"repeatable; default {','.join(methods_default)}")
    p.set_defaults(methods_default=methods_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pzeta", description="Prime zeta function P(s) for Re(s) > 1/2.")
    parser.add_argument("--quiet", action="store_true", help="suppress progress messages")
    quiet = argparse.ArgumentParser(add_help=False)
    quiet.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                       help="suppress progress messages")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[quiet], **kw)

    p = add("eval", help="evaluate P(s) at one point")
    p.add_argument("--s", type=parse_complex, required=True)
    _add_common(p, ["rh"])

    for name, helptext in (("scan", "scan along real s"), ("vline", "scan along s = sigma + it")):
        p = add(name, help=helptext)
        if name == "scan":
            p.add_argument("--s-min", type=float, default=FIG1_RANGE[0])
            p.add_argument("--s-max", type=float, default=FIG1_RANGE[1])
            p.add_argument("--step", type=float, default=FIG1_RANGE[2])
        else:
            p.add_argument("--sigma", type=float, default=DEFAULT_SIGMA)
            p.add_argument("--t-min", type=float, default=DEFAULT_T[0])
            p.add_argument("--t-max", type=float, default=DEFAULT_T[1])
            p.add_argument("--step", type=float, default=0.1)
        _add_common(p, ["mobius", "rh"])
        p.add_argument("--out", type=Path, default=None, help="CSV path (default stdout)")

    p = add("converge", help="deviation of the RH route versus x")
    p.add_argument("--s", type=parse_complex, required=True)
    p.add_argument("--x-values", type=float, nargs="+", default=[1e2, 1e3, 1e4])
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)

    p = add("verify", help="run the self-check suites")
    p.add_argument("--suite", action="append", choices=list(verification.SUITES))

    p = add("figures", help="write fig1.csv, fig2.csv, fig3.csv")
    p.add_argument("--out", type=Path, default=Path("."))
    p.add_argument("--x", type=float, default=DEFAULT_X)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--sigma", type=float, default=DEFAULT_SIGMA)
    p.add_argument("--fig1-step", type=float, default=FIG1_RANGE[2])
    p.add_argument("--fig23-step", type=float, default=0.1)
    p.add_argument("--plot", dest="emit_plot", action="store_true",
                   help="also write matplotlib scripts next to the CSVs")
    return parser


def _validate(args) -> None:
    x = getattr(args, "x", None)
    if x is not None and not (math.isfinite(x) and x >= MIN_X):
        raise ConfigError(f"--x must be >= {MIN_X:g}")
    if getattr(args, "n_max", 1) < 1:
        raise ConfigError("--n-max must be >= 1")
    if getattr(args, "prime_limit", None) is not None and x is not None and args.prime_limit < x:
        raise ConfigError("--prime-limit must be >= --x")
    step = getattr(args, "step", None)
    if step is not None and not step > 0:
        raise ConfigError("--step must be positive")
    if args.command == "scan" and not 0.5 < args.s_min <= args.s_max:
        raise ConfigError("need 1/2 < s-min <= s-max")
    if args.command in ("vline", "figures") and not args.sigma > 0.5:
        raise ConfigError("--sigma must exceed 1/2")
    if args.command == "vline" and not 0 < args.t_min <= args.t_max:
        raise ConfigError("need 0 < t-min <= t-max")
    if args.command == "converge" and any(v < MIN_X for v in args.x_values):
        raise ConfigError(f"--x-values must be >= {MIN_X:g}")


def _table(args):
    limit = args.prime_limit or max(int(math.ceil(args.x)), 10**6)
    log.info("sieving primes up to %d", limit)
    return sieve(limit)


def _cmd_eval(args, out) -> int:
    methods = _methods(args.methods, args.methods_default)
    check_domain(args.s)
    table = _table(args) if any(m is not Method.MOBIUS for m in methods) else None
    for m in methods:
        ev = evaluate(m, args.s, x=args.x, table=table, n_max=args.n_max)
        out.write(
            f"method={ev.method.value} s={args.s!r} value={ev.value.real:.15g}{ev.value.imag:+.15g}i "
            f"error_bound={ev.error_bound:.3e} truncation={ev.truncation:g} on_cut={ev.on_cut}\n"
        )
        for note in ev.notes:
            out.write(f"  note: {note}\n")
    return EXIT_OK


def _emit(table, path, out):
    if path is None:
        out.write(report.scan_to_csv(table))
    else:
        report.write_scan_csv(table, path)
        log.info("wrote %s", path)


def _cmd_scan(args, out) -> int:
    methods = _methods(args.methods, args.methods_default)
    table = _table(args) if any(m is not Method.MOBIUS for m in methods) else None
    if args.command == "scan":
        res = analysis.scan_real(args.s_min, args.s_max, args.step, args.x, methods,
                                 table=table, n_max=args.n_max)
    else:
        res = analysis.scan_vertical(args.sigma, args.t_min, args.t_max, args.step, args.x,
                                     methods, table=table, n_max=args.n_max)
    _emit(res, args.out, out)
    failures = sum(1 for r in res.rows if r.errors)
    if failures:
        log.warning("%d samples had evaluator errors (empty CSV fields)", failures)
    return EXIT_OK


def _cmd_converge(args, out) -> int:
    from .primezeta import prime_zeta_mobius

    ref = prime_zeta_mobius(args.s, args.n_max)
    rows = analysis.convergence_study(args.s, args.x_values, ref)
    out.write("x,abs_error,bound,exceeds\n")
    for r in rows:
        out.write(f"{r.x:.15g},{r.abs_error:.15g},{r.bound:.15g},{int(r.exceeds)}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    results = verification.run_checks(args.suite)
    for r in results:
        out.write(r.line() + "\n")
    failed = [r for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_figures(args, out) -> int:
    args.out.mkdir(parents=True, exist_ok=True)
    table = sieve(max(int(math.ceil(args.x)), 10**6))
    log.info("figure 1: real scan")
    fig1 = analysis.scan_real(FIG1_RANGE[0], FIG1_RANGE[1], args.fig1_step, args.x,
                              table=table, n_max=args.n_max)
    log.info("figures 2-3: vertical scan at sigma=%g", args.sigma)
    fig23 = analysis.scan_vertical(args.sigma, DEFAULT_T[0], DEFAULT_T[1], args.fig23_step,
                                   args.x, table=table, n_max=args.n_max)
    outputs = [("fig1", fig1, "re"), ("fig2", fig23, "re"), ("fig3", fig23, "im")]
    for stem, res, component in outputs:
        report.write_scan_csv(res, args.out / f"{stem}.csv")
        if args.emit_plot:
            script = report.plot_script(f"{stem}.csv", res, component)
            (args.out / f"{stem}_plot.py").write_text(script)
    out.write(f"fig1 max |Re diff| = {fig1.max_pairwise_diff():.3e}\n")
    out.write(f"fig2/3 max |diff| = {fig23.max_pairwise_diff():.3e}\n")
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "scan": _cmd_scan,
    "vline": _cmd_scan,
    "converge": _cmd_converge,
    "verify": _cmd_verify,
    "figures": _cmd_figures,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(message)s", stream=sys.stderr)
    try:
        _validate(args)
    except ConfigError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    try:
        return _COMMANDS[args.command](args, out)
    except PZetaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
