"""Time the exact rank computations behind each homology check, per ring."""

import argparse
import time
from dataclasses import dataclass

from qschur import combin as cb
from qschur.exactalg import RingSpec, rank
from qschur.homology import build_weyl


@dataclass(frozen=True)
class TimingConfig:
    n: int = 3
    r: int = 3
    rings: tuple = ("generic", "Q:2", "F5:2")
    repeats: int = 3


def time_ranks(cfg: TimingConfig):
    for ring_s in cfg.rings:
        ring = RingSpec.parse(ring_s)
        for lam in cb.compositions(cfg.n, cfg.r):
            c = build_weyl(cfg.n, cfg.r, lam, ring)
            for k in sorted(c.diffs):
                m = c.d(k)
                best = min(_once(m, ring) for _ in range(cfg.repeats))
                yield ring_s, lam, k, m.rows, m.cols, m.nnz(), rank(m, ring), best


def _once(m, ring):
    t0 = time.perf_counter()
    rank(m, ring)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--rings", default="generic,Q:2,F5:2")
    ap.add_argument("--repeats", type=int, default=3)
    a = ap.parse_args()
    cfg = TimingConfig(a.n, a.r, tuple(a.rings.split(",")), a.repeats)
    print(f"{'ring':<8} {'lambda':<8} {'k':>2} {'shape':>11} {'nnz':>6} {'rank':>5} {'ms':>8}")
    for ring, lam, k, rows, cols, nnz, rk, secs in time_ranks(cfg):
        print(f"{ring:<8} {','.join(map(str, lam)):<8} {k:>2} {f'{rows}x{cols}':>11} {nnz:>6} {rk:>5} {secs * 1e3:>8.1f}")


if __name__ == "__main__":
    main()
