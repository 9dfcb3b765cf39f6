"""Command line: the identity verifier, a curve calculator and the brute-force oracles.

Exit codes: 0 every requested check passed, 1 some check failed, 2 bad usage
or parameters outside the proved range.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import curve as C
from . import oracle as O
from .identities import ENTRY_NAMES, build_symbols, check_entry, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    action: str | None = None
    p: int | None = None
    c: int | None = None
    d: int | None = None
    t: int | None = None
    complete: bool = False
    entries: tuple[str, ...] = ()
    emit_certs: str | None = None
    skip_tform: bool = False
    seed: int = 0
    trials: int = 100
    cap: int = O.DEFAULT_CAP
    fmt: str = "json"
    timings: bool = False
    n: int | None = None
    points: tuple[str, ...] = ()
    repeat: int = 5

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "CliConfig":
        return cls(
            command=ns.command,
            action=getattr(ns, "action", None),
            p=getattr(ns, "p", None),
            c=getattr(ns, "c", None),
            d=getattr(ns, "d", None),
            t=getattr(ns, "t", None),
            complete=getattr(ns, "complete", False),
            entries=tuple(getattr(ns, "entry", None) or ()),
            emit_certs=getattr(ns, "emit_certs", None),
            skip_tform=getattr(ns, "skip_tform", False),
            seed=getattr(ns, "seed", 0),
            trials=getattr(ns, "trials", 100),
            cap=getattr(ns, "cap", O.DEFAULT_CAP),
            fmt=getattr(ns, "format", "json"),
            timings=getattr(ns, "timings", False),
            n=getattr(ns, "n", None),
            points=tuple(getattr(ns, "points", None) or ()),
            repeat=getattr(ns, "repeat", 5),
        )


def _curve_args(sp: argparse.ArgumentParser):
    sp.add_argument("-p", type=int, required=True, help="odd prime modulus")
    sp.add_argument("-c", type=int, help="c of x^2 + c y^2 = 1 + d x^2 y^2")
    sp.add_argument("-d", type=int, help="d of x^2 + c y^2 = 1 + d x^2 y^2")
    sp.add_argument("-t", type=int, help="t of the t-form curve x^2 + y^2 = 1 + t^2 x^2 y^2")
    sp.add_argument("--complete", action="store_true", help="require c square and d not a nonzero square")
    sp.add_argument("--cap", type=int, default=O.DEFAULT_CAP, help="largest p for enumeration")
    sp.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edwardsproof", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity catalog")
    v.add_argument("--entry", action="append", choices=ENTRY_NAMES, help="run only this entry (repeatable)")
    v.add_argument("--emit-certs", metavar="DIR", help="write each reduction certificate as JSON")
    v.add_argument("--skip-tform", action="store_true", help="skip t-form entries")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=100, help="random evaluations per certificate")
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--timings", action="store_true", help="include wall times (output is then not reproducible)")

    cv = sub.add_parser("curve", help="curve arithmetic")
    csub = cv.add_subparsers(dest="action", required=True)
    for name, helptext in (
        ("points", "list all points"),
        ("add", "add two points"),
        ("mul", "scalar multiple n*P"),
        ("check", "validate parameters and sweep the group axioms"),
    ):
        sp = csub.add_parser(name, help=helptext)
        _curve_args(sp)
        if name == "add":
            sp.add_argument("points", nargs=2, metavar="POINT", help="(x,y) or [(x,y),i]")
        if name == "mul":
            sp.add_argument("n", type=int)
            sp.add_argument("points", nargs=1, metavar="POINT")

    ov = sub.add_parser("oracle", help="brute-force oracles")
    osub = ov.add_subparsers(dest="action", required=True)
    for name, helptext in (
        ("sweep", "exhaustive axiom sweep plus side checks"),
        ("dichotomy", "classify every pair of affine points"),
        ("wellformed", "covering and well-definedness of the glued addition"),
    ):
        _curve_args(osub.add_parser(name, help=helptext))

    b = sub.add_parser("bench", help="time the generic associativity entry")
    b.add_argument("--repeat", type=int, default=5)
    b.add_argument("--format", choices=("json", "text"), default="text")
    return ap


def make_params(cfg: CliConfig):
    if cfg.t is not None:
        if cfg.c is not None or cfg.d is not None:
            raise UsageError("give either -c/-d or -t, not both")
        return C.ProjParams.make(cfg.p, cfg.t)
    if cfg.c is None or cfg.d is None:
        raise UsageError("curve parameters need -c and -d, or -t")
    params = C.AffineParams.make(cfg.p, cfg.c, cfg.d)
    if cfg.complete:
        params.require_complete()
    return params


def _emit(cfg: CliConfig, data, text: str | None = None):
    if cfg.fmt == "json" or text is None:
        print(json.dumps(data, indent=2, default=str))
    else:
        print(text)


def cmd_verify(cfg: CliConfig) -> int:
    names = set(cfg.entries) if cfg.entries else None
    report = run_all(include_tform=not cfg.skip_tform, names=names, trials=cfg.trials, seed=cfg.seed)
    if cfg.emit_certs:
        out = Path(cfg.emit_certs)
        out.mkdir(parents=True, exist_ok=True)
        for entry, label, cert in report.certificates():
            slug = re.sub(r"[^A-Za-z0-9_.+-]+", "_", label).strip("_")
            (out / f"{entry}__{slug}.json").write_text(cert.to_json())
    if cfg.fmt == "json":
        print(report.to_json(cfg.timings))
    else:
        for e in report.entries:
            tail = f" {e.wall_time:.3f}s" if cfg.timings else ""
            print(f"{e.status} {e.name} ({len(e.certificates)} certificates){tail}")
        print(report.status)
    return EXIT_OK if report.status == "PASS" else EXIT_FAIL


def cmd_curve(cfg: CliConfig) -> int:
    params = make_params(cfg)
    if cfg.action == "points":
        proj = isinstance(params, C.ProjParams)
        pts = O.enumerate_proj_points(params, cfg.cap) if proj else O.enumerate_points(params, cfg.cap)
        _emit(cfg, [str(P) for P in pts], "\n".join(map(str, pts)))
        return EXIT_OK
    if cfg.action == "check":
        if isinstance(params, C.AffineParams):
            params.require_complete()
        report = O.exhaustive_axiom_check(params, cap=cfg.cap)
        lines = [f"{k}: {'PASS' if a.passed else 'FAIL'}" for k, a in report.axioms.items()]
        _emit(cfg, report.to_dict(), f"{params} {report.counts}\n" + "\n".join(lines))
        return EXIT_OK if report.passed else EXIT_FAIL
    pts = [_point(params, s) for s in cfg.points]
    if cfg.action == "add":
        P, Q = pts
        if isinstance(params, C.ProjParams):
            P, Q = (X if isinstance(X, C.ProjPoint) else C.proj_point(params, X) for X in (P, Q))
            R = C.proj_add(params, P, Q)
        elif params.complete:
            R = C.affine_complete_add(params, P, Q)
        else:
            R = C.add_delta0(params, P, Q)
        _emit(cfg, {"sum": str(R)}, str(R))
        return EXIT_OK
    if cfg.action == "mul":
        if isinstance(params, C.AffineParams):
            params.require_complete()
        R = C.scalar_mul(params, cfg.n, pts[0])
        _emit(cfg, {"product": str(R)}, str(R))
        return EXIT_OK
    raise UsageError(f"unknown curve action {cfg.action}")


def _point(params, text: str):
    P = C.parse_point(params, text)
    if not C.on_curve(params, P):
        raise UsageError(f"{text} is not on the curve {params}")
    return P


def _require_tform(params, what: str):
    if not isinstance(params, C.ProjParams):
        raise UsageError(f"{what} needs a t-form curve (-t)")


def cmd_oracle(cfg: CliConfig) -> int:
    params = make_params(cfg)
    if cfg.action == "sweep":
        if isinstance(params, C.ProjParams):
            out = O.projective_suite(params, cfg.cap)
        else:
            params.require_complete()
            out = O.affine_suite(params, cfg.cap)
    elif cfg.action == "dichotomy":
        _require_tform(params, "the dichotomy oracle")
        out = O.dichotomy_sweep(params, cfg.cap)
    else:
        _require_tform(params, "the covering oracle")
        out = O.well_defined_covering_check(params, cfg.cap)
    _emit(cfg, out, f"{params}: {'PASS' if out['passed'] else 'FAIL'}")
    return EXIT_OK if out["passed"] else EXIT_FAIL


def cmd_bench(cfg: CliConfig) -> int:
    cd, tf = build_symbols("cd"), build_symbols("t")
    times, status = [], "PASS"
    for _ in range(max(1, cfg.repeat)):
        t0 = time.perf_counter()
        res = check_entry("generic-associativity", cd, tf)
        times.append(time.perf_counter() - t0)
        if not res.passed:
            status = "FAIL"
    out = {"entry": "generic-associativity", "status": status, "best": min(times), "runs": times}
    _emit(cfg, out, f"generic-associativity {status} best {min(times):.4f}s over {len(times)} runs")
    return EXIT_OK if status == "PASS" else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "curve": cmd_curve, "oracle": cmd_oracle, "bench": cmd_bench}


def run_cli(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CliConfig.from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except C.HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, O.CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (C.DeltaVanishes, C.ZeroCoordinate, C.Inconsistent) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
