"""Per-cell verification routines shared by the command line and the scripts.

Every routine returns a list of check records ``{"name", "claimed", "passed",
"detail"}``.  ``claimed`` separates statements that must hold (a failure is a
bug) from observations recorded for out-of-scope inputs.
"""

from __future__ import annotations

from typing import List

from . import combin as cb
from .exactalg import GENERIC, RingSpec
from .homology import (
    ChainComplex,
    apply_F,
    build_bar_plus,
    build_bm,
    build_weyl,
    dumps,
    homology_ranks,
    specialize_complex,
    tau_iso,
)


def check(name: str, passed: bool, claimed: bool = True, **detail) -> dict:
    return {"name": name, "claimed": claimed, "passed": bool(passed), "detail": detail}


def summarize(c: ChainComplex) -> dict:
    res = c.d_squared_residuals()
    return {
        "kind": c.kind,
        "dims": c.dims(),
        "betti": homology_ranks(c),
        "d_squared_residual_nnz": [res[k] for k in sorted(res)],
    }


def bar_plus_checks(c: ChainComplex, summary: dict) -> List[dict]:
    betti = summary["betti"]
    return [
        check("bar_plus.d_squared_zero", not any(summary["d_squared_residual_nnz"])),
        check("bar_plus.exact_positive", not any(betti[1:]), betti=betti),
        check("bar_plus.betti0_is_one", betti[0] == 1, betti0=betti[0]),
    ]


def weyl_checks(c: ChainComplex, summary: dict) -> List[dict]:
    betti = summary["betti"]
    out = [check("weyl.d_squared_zero", not any(summary["d_squared_residual_nnz"]))]
    dominant = cb.is_partition(c.lam)
    out.append(check("weyl.tor_vanishes", not any(betti[1:]), claimed=dominant, betti=betti))
    if dominant:
        expected = cb.ssyt_count(c.lam, c.n)
        out.append(check("weyl.betti0_ssyt", betti[0] == expected, betti0=betti[0], ssyt=expected))
    return out


def resolve_cell(n: int, r: int, lam, ring: RingSpec, which=("plus", "weyl")) -> dict:
    data, checks = {}, []
    if "plus" in which:
        c = build_bar_plus(n, r, lam, ring)
        s = summarize(c)
        data["bar_plus"] = s
        checks += bar_plus_checks(c, s)
    if "weyl" in which:
        c = build_weyl(n, r, lam, ring)
        s = summarize(c)
        data["weyl"] = s
        checks += weyl_checks(c, s)
    return {"data": data, "checks": checks}


def bm_cell(n: int, r: int, lam, ring: RingSpec) -> dict:
    fb = apply_F(build_weyl(n, r, lam, ring))
    bm = build_bm(n, r, lam, ring)
    tau = tau_iso(fb, bm)
    sq = tau.square_residuals()
    s_fb, s_bm = summarize(fb), summarize(bm)
    syt = cb.syt_count(lam)
    betti = s_bm["betti"]
    checks = [
        check("schur_functor.d_squared_zero", not any(s_fb["d_squared_residual_nnz"])),
        check("bm.d_squared_zero", not any(s_bm["d_squared_residual_nnz"])),
        check("bm.exact_positive", not any(betti[1:]), betti=betti),
        check("bm.betti0_syt", betti[0] == syt, betti0=betti[0], syt=syt),
        check("tau.squares_commute", not any(sq.values()),
              residual_nnz=[sq[k] for k in sorted(sq)]),
        check("tau.invertible", tau.invertible()),
    ]
    return {"data": {"schur_functor": s_fb, "bm": s_bm}, "checks": checks}


def base_change_checks(n: int, r: int, lam, ring: RingSpec) -> List[dict]:
    """Generic complexes specialised at ``t = q`` against the native builds."""
    out = []
    for name, build in (("bar_plus", build_bar_plus), ("weyl", build_weyl)):
        native = build(n, r, lam, ring)
        moved = specialize_complex(build(n, r, lam, GENERIC), ring)
        out.append(check(f"{name}.base_change", dumps(native) == dumps(moved)))
    return out
