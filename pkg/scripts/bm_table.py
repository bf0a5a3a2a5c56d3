"""Betti numbers of the dual permutation complex against SYT counts, with the tau check."""

import argparse
import time
from dataclasses import dataclass

from qschur import combin as cb
from qschur.exactalg import RingSpec
from qschur.homology import apply_F, build_bm, build_weyl, homology_ranks, tau_iso


@dataclass(frozen=True)
class BMConfig:
    rmax: int = 4
    rings: tuple = ("generic", "Q:1", "Q:-1", "Q:2", "F5:2")


def run(cfg: BMConfig):
    for ring_s in cfg.rings:
        ring = RingSpec.parse(ring_s)
        for r in range(1, cfg.rmax + 1):
            for lam in cb.partitions(r, r):
                t0 = time.perf_counter()
                bm = build_bm(r, r, lam, ring)
                tau = tau_iso(apply_F(build_weyl(r, r, lam, ring)), bm)
                ok = tau.commutes() and tau.invertible()
                yield ring_s, lam, bm.dims(), homology_ranks(bm), cb.syt_count(lam), ok, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=4)
    ap.add_argument("--rings", default="generic,Q:1,Q:-1,Q:2,F5:2")
    a = ap.parse_args()
    cfg = BMConfig(a.rmax, tuple(a.rings.split(",")))
    print(f"{'ring':<8} {'lambda':<10} {'dims':<20} {'betti':<16} {'syt':>4}  tau   secs")
    for ring, lam, dims, betti, syt, ok, secs in run(cfg):
        lam_s = ",".join(str(x) for x in lam if x)
        print(f"{ring:<8} {lam_s:<10} {str(dims):<20} {str(betti):<16} {syt:>4}  {'ok' if ok else 'BAD':<5} {secs:.2f}")


if __name__ == "__main__":
    main()
