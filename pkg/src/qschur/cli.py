"""Command line front end: basis listings, resolution checks and full sweeps.

Exit codes: 0 when every claimed check passes, 1 when a mathematical check
fails, 2 on usage errors.  Reports are deterministic unless ``--timings`` is
given, in which case wall-clock times go into a separate ``timing`` block.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import List, Optional, Sequence

from . import checks as ck
from . import combin as cb
from .exactalg import VERIFICATION_RINGS, RingSpec
from .hecke import hecke_algebra
from .homology import build_bar_plus, build_weyl, to_json
from .schur import schur_algebra

REPORT_SCHEMA = "qschur-report"
REPORT_VERSION = 1


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    r: Optional[int] = None
    lam: Optional[tuple] = None
    ring: RingSpec = field(default_factory=RingSpec.generic)
    output: Optional[str] = None
    flags: dict = field(default_factory=dict)


def load_schema() -> dict:
    return json.loads(resources.files("qschur").joinpath("report_schema.json").read_text())


def parse_lambda(s: str) -> tuple:
    try:
        lam = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise UsageError(f"bad --lambda {s!r}; expected a comma list of integers")
    if any(x < 0 for x in lam):
        raise UsageError("--lambda entries must be non-negative")
    return lam


def _ring(s: str) -> RingSpec:
    try:
        return RingSpec.parse(s)
    except ValueError as e:
        raise UsageError(str(e))


def make_report(cfg: RunConfig, checks: List[dict], data: dict, timing: Optional[dict] = None) -> dict:
    inputs = {"n": cfg.n, "r": cfg.r, "ring": str(cfg.ring)}
    if cfg.lam is not None:
        inputs["lambda"] = list(cfg.lam)
    inputs.update(cfg.flags)
    rep = {
        "schema": REPORT_SCHEMA,
        "version": REPORT_VERSION,
        "command": cfg.command,
        "input": inputs,
        "passed": all(c["passed"] for c in checks if c["claimed"]),
        "checks": checks,
        "data": data,
    }
    if timing is not None:
        rep["timing"] = {k: round(v, 3) for k, v in timing.items()}
    return rep


def render(rep: dict) -> str:
    return json.dumps(rep, sort_keys=True, indent=2)


# commands ------------------------------------------------------------------------

def cmd_basis(cfg: RunConfig):
    n, r, which = cfg.n, cfg.r, cfg.flags["which"]
    if which == "hecke":
        H = hecke_algebra(r)
        rows = [{"perm": list(p), "length": H.lengths[p]} for p in H.perms]
    else:
        S = schur_algebra(n, r)
        basis = {"schur": S.basis, "plus": S.plus_basis(), "minus": S.minus_basis()}[which]
        rows = [{"i": list(i), "j": list(j)} for i, j in basis]
    data = {"which": which, "size": len(rows), "basis": rows}
    return [], data, None


def _check_lambda(cfg: RunConfig):
    lam = cfg.lam
    if len(lam) > cfg.n:
        raise UsageError(f"lambda {lam} has more than n={cfg.n} parts")
    if sum(lam) != cfg.r:
        raise UsageError(f"lambda {lam} does not sum to r={cfg.r}")
    cfg.lam = lam + (0,) * (cfg.n - len(lam))


def cmd_resolve(cfg: RunConfig):
    _check_lambda(cfg)
    which = {"plus": ("plus",), "weyl": ("weyl",), "both": ("plus", "weyl")}[cfg.flags["complex"]]
    t0 = time.perf_counter()
    cell = ck.resolve_cell(cfg.n, cfg.r, cfg.lam, cfg.ring, which)
    checks = cell["checks"]
    mode = cfg.flags["check"]
    if mode == "none":
        checks = [dict(c, claimed=False) for c in checks]
    elif mode == "dsq":
        checks = [dict(c, claimed=c["claimed"] and c["name"].endswith("d_squared_zero")) for c in checks]
    export = cfg.flags.get("export_complex")
    if export:
        build = build_weyl if "weyl" in which else build_bar_plus
        with open(export, "w") as fh:
            json.dump(to_json(build(cfg.n, cfg.r, cfg.lam, cfg.ring)), fh, sort_keys=True)
    return checks, cell["data"], {"total_seconds": time.perf_counter() - t0}


def cmd_bm(cfg: RunConfig):
    _check_lambda(cfg)
    if not cb.is_partition(cfg.lam):
        raise UsageError(f"lambda {cfg.lam} is not a partition")
    if cfg.n < cfg.r:
        raise UsageError(f"need n >= r for the Schur functor (n={cfg.n}, r={cfg.r})")
    t0 = time.perf_counter()
    cell = ck.bm_cell(cfg.n, cfg.r, cfg.lam, cfg.ring)
    return cell["checks"], cell["data"], {"total_seconds": time.perf_counter() - t0}


def cmd_verify_all(cfg: RunConfig, rings: Sequence[RingSpec], log=None):
    nmax, rmax, bm_rmax = cfg.flags["nmax"], cfg.flags["rmax"], cfg.flags["bm_rmax"]
    checks, cells = [], []
    t0 = time.perf_counter()

    def add(tag, cell_checks):
        bad = [c["name"] for c in cell_checks if c["claimed"] and not c["passed"]]
        for c in cell_checks:
            checks.append(dict(c, name=f"{tag}:{c['name']}"))
        cells.append({"cell": tag, "passed": not bad, "failed": bad})
        if log:
            log(f"{'PASS' if not bad else 'FAIL'} {tag}")

    for ring in rings:
        for n in range(1, nmax + 1):
            for r in range(1, rmax + 1):
                for lam in cb.compositions(n, r):
                    tag = f"resolve n={n} r={r} lam={','.join(map(str, lam))} ring={ring}"
                    add(tag, ck.resolve_cell(n, r, lam, ring)["checks"])
                    if not ring.is_generic:
                        add(f"basechange n={n} r={r} lam={','.join(map(str, lam))} ring={ring}",
                            ck.base_change_checks(n, r, lam, ring))
        for r in range(1, bm_rmax + 1):
            for lam in cb.partitions(r, r):
                lam = tuple(lam) + (0,) * (r - len(lam))
                tag = f"bm r={r} lam={','.join(map(str, lam))} ring={ring}"
                add(tag, ck.bm_cell(r, r, lam, ring)["checks"])
    return checks, {"cells": cells}, {"total_seconds": time.perf_counter() - t0}


# argument parsing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qschur", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, sizes=True, lam=False, ring=True):
        if sizes:
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--r", type=int, required=True)
        if lam:
            sp.add_argument("--lambda", dest="lam", required=True, help="comma list, e.g. 2,1")
        if ring:
            sp.add_argument("--ring", default="generic", help="generic | Q:<q> | F<p>:<q>")
        sp.add_argument("--output", help="write the JSON report here")
        sp.add_argument("--json", action="store_true", help="print the JSON report on stdout")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings")

    sp = sub.add_parser("basis", help="list a basis in its canonical order")
    common(sp, ring=False)
    sp.add_argument("--which", choices=["schur", "plus", "minus", "hecke"], default="schur")

    sp = sub.add_parser("resolve", help="build B+ and/or the induced complex and check them")
    common(sp, lam=True)
    sp.add_argument("--complex", choices=["plus", "weyl", "both"], default="both")
    sp.add_argument("--check", choices=["exact", "dsq", "none"], default="exact")
    sp.add_argument("--export-complex", dest="export_complex", metavar="PATH")

    sp = sub.add_parser("bm", help="compare F(B) with the dual permutation complex through tau")
    sp.add_argument("--n", type=int)
    sp.add_argument("--r", type=int)
    common(sp, sizes=False, lam=True)

    sp = sub.add_parser("verify-all", help="sweep the full verification matrix")
    sp.add_argument("--nmax", type=int, default=3)
    sp.add_argument("--rmax", type=int, default=3)
    sp.add_argument("--bm-rmax", dest="bm_rmax", type=int, default=4)
    sp.add_argument("--rings", default=",".join(str(x) for x in VERIFICATION_RINGS))
    common(sp, sizes=False, ring=False)
    return p


def _config(args) -> RunConfig:
    cmd = args.command
    cfg = RunConfig(cmd, output=args.output)
    if cmd in ("basis", "resolve"):
        cfg.n, cfg.r = args.n, args.r
    if cmd in ("resolve", "bm"):
        cfg.lam = parse_lambda(args.lam)
    if getattr(args, "ring", None):
        cfg.ring = _ring(args.ring)
    if cmd == "bm":
        cfg.r = args.r if args.r is not None else sum(cfg.lam)
        cfg.n = args.n if args.n is not None else cfg.r
    if cmd == "basis":
        cfg.flags["which"] = args.which
    if cmd == "resolve":
        cfg.flags.update(complex=args.complex, check=args.check)
        if args.export_complex:
            cfg.flags["export_complex"] = args.export_complex
    if cmd == "verify-all":
        cfg.flags.update(nmax=args.nmax, rmax=args.rmax, bm_rmax=args.bm_rmax)
    for key in ("n", "r", "nmax", "rmax", "bm_rmax"):
        v = getattr(cfg, key, None) if key in ("n", "r") else cfg.flags.get(key)
        if v is not None and v < (0 if key == "bm_rmax" else 1):
            raise UsageError(f"--{key.replace('_', '-')} must be positive")
    return cfg


def _print_human(rep: dict, out):
    data = rep["data"]
    if rep["command"] == "basis":
        for k, row in enumerate(data["basis"]):
            print(k, *(f"{key}={val}" for key, val in row.items()), file=out)
        print(f"# {data['size']} rows", file=out)
        return
    for name, summary in sorted(data.items()):
        if isinstance(summary, dict) and "dims" in summary:
            print(f"{name}: dims {summary['dims']} betti {summary['betti']}", file=out)
    for c in rep["checks"]:
        if rep["command"] == "verify-all" and c["passed"]:
            continue
        tag = "PASS" if c["passed"] else ("FAIL" if c["claimed"] else "info")
        print(f"{tag:5} {c['name']} {json.dumps(c['detail'], sort_keys=True) if c['detail'] else ''}".rstrip(),
              file=out)
    if rep["command"] == "verify-all":
        cells = data["cells"]
        print(f"{sum(c['passed'] for c in cells)}/{len(cells)} cells pass", file=out)
    print("PASS" if rep["passed"] else "FAIL", file=out)


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _config(args)
        if cfg.command == "basis":
            result = cmd_basis(cfg)
        elif cfg.command == "resolve":
            result = cmd_resolve(cfg)
        elif cfg.command == "bm":
            result = cmd_bm(cfg)
        else:
            rings = [_ring(s) for s in args.rings.split(",")]
            log = None if args.json else (lambda line: print(line, file=sys.stderr))
            result = cmd_verify_all(cfg, rings, log)
    except (UsageError, ValueError) as e:
        print(f"qschur: error: {e}", file=sys.stderr)
        return 2
    checks, data, timing = result
    rep = make_report(cfg, checks, data, timing if args.timings else None)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(render(rep) + "\n")
    if args.json:
        print(render(rep), file=out)
    else:
        _print_human(rep, out)
    return 0 if rep["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
