"""Command-line interface: sweep, figure, verify, selfcheck.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter
validation error, 3 numerical domain error (invalid kinematics or
overflow-guarded width).
"""

from __future__ import annotations

import argparse
import cmath
import math
import sys
from dataclasses import replace

import numpy as np

from . import __version__, algebra, oracles, sweep as sweep_mod
from .errors import NonPositiveRootArgument, OverflowGuard, TunnelTimesError
from .kinematics import BarrierSpec, Regime
from .times import times, wide_limit

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

_REGIMES = {r.value: r for r in Regime}

FIGURES = {
    # tag -> (regime, u, mu_ratio, wide, balanced spin-down)
    "fig2": (Regime.RELATIVISTIC, 2.0 * math.pi, 0.98, True, False),
    "fig3": (Regime.NONRELATIVISTIC, 2.0 * math.pi, 0.98, True, False),
    "fig4": (Regime.SUPERRELATIVISTIC, 2.0 * math.pi, 0.98, True, True),
}


def _parse_eps_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"eps range must be start:end:steps, got {text!r}"
        )
    try:
        start, end, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return start, end, steps


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line missing '=': {line!r}")
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tunneltimes",
        description="Tunneling times for a relativistic rectangular barrier",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="times over an energy grid, CSV output")
    sw.add_argument("--regime", choices=sorted(_REGIMES), default="rel")
    sw.add_argument("--u", type=float, default=2.0 * math.pi)
    sw.add_argument("--mu", type=float, default=0.98, help="mass ratio parameter")
    sw.add_argument(
        "--eps",
        type=_parse_eps_range,
        default=(0.05, 0.95, 181),
        metavar="START:END:STEPS",
    )
    sw.add_argument("--wide", action="store_true", help="use wide-barrier limits")
    sw.add_argument("--bprime-mag", type=float, default=0.0)
    sw.add_argument("--bprime-phase", type=float, default=0.0)
    sw.add_argument("--output", default="-", help="output path, '-' for stdout")
    sw.add_argument("--config", help="key=value file; flags override it")
    sw.add_argument(
        "--reproducible",
        action="store_true",
        help="omit timestamps so identical runs are byte-identical",
    )

    fig = sub.add_parser("figure", help="canonical datasets behind the figures")
    fig.add_argument("tag", choices=sorted(FIGURES))
    fig.add_argument("--output", default="-")
    fig.add_argument("--reproducible", action="store_true")

    ver = sub.add_parser("verify", help="run the numerical invariant suite")
    ver.add_argument("--level", choices=["fast", "full"], default="fast")

    sub.add_parser("selfcheck", help="matrix-algebra consistency only")
    return p


def _apply_config(args: argparse.Namespace, argv: list[str]) -> argparse.Namespace:
    """Fill sweep settings from --config for flags not given explicitly."""
    if not getattr(args, "config", None):
        return args
    cfg = _read_config(args.config)
    given = {a.split("=", 1)[0] for a in argv if a.startswith("--")}
    if "regime" in cfg and "--regime" not in given:
        args.regime = cfg["regime"]
        if args.regime not in _REGIMES:
            raise ValueError(f"unknown regime {args.regime!r} in config")
    if "u" in cfg and "--u" not in given:
        args.u = float(cfg["u"])
    if "mu" in cfg and "--mu" not in given:
        args.mu = float(cfg["mu"])
    if "eps" in cfg and "--eps" not in given:
        args.eps = _parse_eps_range(cfg["eps"])
    if "wide" in cfg and "--wide" not in given:
        args.wide = cfg["wide"].lower() in ("1", "true", "yes")
    if "bprime_mag" in cfg and "--bprime-mag" not in given:
        args.bprime_mag = float(cfg["bprime_mag"])
    if "bprime_phase" in cfg and "--bprime-phase" not in given:
        args.bprime_phase = float(cfg["bprime_phase"])
    return args


def _emit(result: sweep_mod.SweepResult, output: str) -> None:
    if output == "-":
        sweep_mod.write_csv(result, sys.stdout)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            sweep_mod.write_csv(result, fh)


def cmd_sweep(args: argparse.Namespace) -> int:
    start, end, steps = args.eps
    bprime = args.bprime_mag * cmath.exp(1j * args.bprime_phase)
    req = sweep_mod.SweepRequest(
        regime=_REGIMES[args.regime],
        u=args.u,
        mu_ratio=args.mu,
        eps_start=start,
        eps_end=end,
        steps=steps,
        wide=args.wide,
        bprime=bprime,
        reproducible=args.reproducible,
    )
    _emit(sweep_mod.run_sweep(req), args.output)
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    regime, u, mu, wide, balanced = FIGURES[args.tag]
    req = sweep_mod.SweepRequest(
        regime=regime,
        u=u,
        mu_ratio=mu,
        wide=wide,
        bprime=None if balanced else 0j,
        reproducible=args.reproducible,
    )
    result = sweep_mod.run_sweep(req)
    result.metadata["figure"] = args.tag
    _emit(result, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suite


def _check_algebra() -> tuple[bool, str]:
    res = algebra.algebra_selfcheck()
    worst = max(res, key=res.get)
    return max(res.values()) < algebra.MATRIX_ATOL, f"max residual {res[worst]:.3g} ({worst})"


def _check_unitarity() -> tuple[bool, str]:
    worst = 0.0
    for regime in Regime:
        for e in np.linspace(0.05, 0.95, 181):
            from .scattering import solve

            c = solve(BarrierSpec(eps=float(e), regime=regime))
            worst = max(worst, abs(c.mag2_t + c.mag2_r - 1.0))
    return worst < 1e-12, f"max |T2+R2-1| = {worst:.3g}"


def _check_matching() -> tuple[bool, str]:
    from .scattering import solve

    worst = 0.0
    for regime in Regime:
        for e in (0.15, 0.4, 0.75):
            spec = BarrierSpec(eps=e, regime=regime)
            a, b = solve(spec), oracles.matching_solve(spec)
            fields = (
                ("aprime", "c", "cprime", "f")
                if regime is Regime.SUPERRELATIVISTIC
                else ("b", "c", "d", "f")
            )
            for f in fields:
                num = abs(getattr(a, f) - getattr(b, f))
                worst = max(worst, num / max(abs(getattr(a, f)), 1e-30))
    return worst < 1e-10, f"max coefficient mismatch = {worst:.3g}"


def _check_decomposition() -> tuple[bool, str]:
    worst = 0.0
    for regime in (Regime.RELATIVISTIC, Regime.NONRELATIVISTIC):
        for e in np.linspace(0.05, 0.95, 61):
            t = times(BarrierSpec(eps=float(e), regime=regime))
            worst = max(worst, abs(t.tau_g - (t.tau_d + t.tau_i)) / abs(t.tau_g))
    for e in np.linspace(0.05, 0.95, 61):
        t = times(BarrierSpec(eps=float(e), regime=Regime.SUPERRELATIVISTIC), bprime=None)
        worst = max(
            worst, abs(t.tau_g - (t.tau_d_up + t.tau_d_down + t.tau_i)) / abs(t.tau_g)
        )
        worst = max(worst, abs(t.tau_g_up - (t.tau_d_up + t.tau_i)) / abs(t.tau_g_up))
    return worst < 1e-12, f"max identity violation = {worst:.3g}"


def _check_dwell_oracle() -> tuple[bool, str]:
    worst = 0.0
    for e in np.linspace(0.1, 0.9, 9):
        for regime in (Regime.RELATIVISTIC, Regime.NONRELATIVISTIC):
            spec = BarrierSpec(eps=float(e), regime=regime)
            t = times(spec)
            q = oracles.dwell_integral(spec)
            worst = max(worst, abs(q - t.tau_d) / abs(t.tau_d))
    return worst < 1e-8, f"max dwell mismatch = {worst:.3g}"


def _check_phase_oracle() -> tuple[bool, str]:
    worst = 0.0
    for regime in Regime:
        for e in (0.2, 0.5, 0.8):
            spec = BarrierSpec(eps=e, regime=regime)
            fd = oracles.group_time_composed(spec)
            an = oracles.group_time_composed_analytic(spec)
            worst = max(worst, abs(fd - an) / max(abs(an), 1e-30))
    return worst < 1e-4, f"max FD-vs-analytic mismatch = {worst:.3g}"


def _check_current() -> tuple[bool, str]:
    worst = 0.0
    for regime in Regime:
        aud = oracles.current_audit(BarrierSpec(eps=0.4, regime=regime))
        worst = max(worst, abs(aud["max_rel_dev"]))
    return worst < 1e-9, f"max current deviation = {worst:.3g}"


def _check_hartman() -> tuple[bool, str]:
    worst = 0.0
    for regime in Regime:
        spec = BarrierSpec(u=40.0 * math.pi, eps=0.4, regime=regime)
        fin = times(spec, bprime=None)
        wid = wide_limit(spec)
        fields = (
            ("tau_d_up", "tau_d_down", "tau_i", "tau_g", "tau_g_up")
            if regime is Regime.SUPERRELATIVISTIC
            else ("tau_d", "tau_i", "tau_g")
        )
        for f in fields:
            worst = max(
                worst, abs(getattr(fin, f) - getattr(wid, f)) / abs(getattr(wid, f))
            )
    return worst < 1e-6, f"max saturation gap = {worst:.3g}"


FAST_CHECKS = [
    ("algebra", _check_algebra),
    ("unitarity", _check_unitarity),
    ("matching-oracle", _check_matching),
    ("decomposition", _check_decomposition),
]

FULL_CHECKS = FAST_CHECKS + [
    ("dwell-oracle", _check_dwell_oracle),
    ("phase-oracle", _check_phase_oracle),
    ("current-audit", _check_current),
    ("hartman-saturation", _check_hartman),
]


def cmd_verify(args: argparse.Namespace) -> int:
    checks = FAST_CHECKS if args.level == "fast" else FULL_CHECKS
    failed = False
    for name, fn in checks:
        ok, detail = fn()
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
        failed = failed or not ok
    if args.level == "full":
        # informational: model-level gap, not a build defect
        rep = oracles.sensitivity_residual(BarrierSpec(eps=0.5))
        print(f"info sensitivity-identity: residual = {rep.residual:.3g} (model-level)")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_selfcheck(_args: argparse.Namespace) -> int:
    ok, detail = _check_algebra()
    print(f"{'ok  ' if ok else 'FAIL'} algebra: {detail}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            args = _apply_config(args, argv)
            return cmd_sweep(args)
        if args.command == "figure":
            return cmd_figure(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_selfcheck(args)
    except (NonPositiveRootArgument, OverflowGuard) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError, TunnelTimesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
