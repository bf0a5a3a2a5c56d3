"""Tabulate module sizes and Betti numbers of the bar-type complexes.

    python scripts/resolution_table.py --nmax 3 --rmax 3 --ring F5:2
"""

import argparse
from dataclasses import dataclass

from qschur import combin as cb
from qschur.exactalg import RingSpec
from qschur.homology import build_bar_plus, build_weyl, homology_ranks


@dataclass(frozen=True)
class TableConfig:
    nmax: int = 3
    rmax: int = 3
    ring: str = "generic"
    dominant_only: bool = False


def rows(cfg: TableConfig):
    ring = RingSpec.parse(cfg.ring)
    for n in range(1, cfg.nmax + 1):
        for r in range(1, cfg.rmax + 1):
            for lam in cb.compositions(n, r):
                dominant = cb.is_partition(lam)
                if cfg.dominant_only and not dominant:
                    continue
                plus, weyl = build_bar_plus(n, r, lam, ring), build_weyl(n, r, lam, ring)
                yield {
                    "n": n, "r": r, "lam": lam, "dominant": dominant,
                    "plus_dims": plus.dims(), "plus_betti": homology_ranks(plus),
                    "weyl_dims": weyl.dims(), "weyl_betti": homology_ranks(weyl),
                    "ssyt": cb.ssyt_count(lam, n) if dominant else None,
                }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--rmax", type=int, default=3)
    ap.add_argument("--ring", default="generic")
    ap.add_argument("--dominant-only", action="store_true")
    cfg = TableConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    header = f"{'n':>2} {'r':>2} {'lambda':<10} {'dom':<4} {'B+ dims':<16} {'B+ betti':<14} " \
             f"{'B dims':<22} {'B betti':<18} ssyt"
    print(f"# ring {cfg.ring}")
    print(header)
    for row in rows(cfg):
        print(f"{row['n']:>2} {row['r']:>2} {','.join(map(str, row['lam'])):<10} "
              f"{'yes' if row['dominant'] else 'no':<4} {str(row['plus_dims']):<16} {str(row['plus_betti']):<14} "
              f"{str(row['weyl_dims']):<22} {str(row['weyl_betti']):<18} {row['ssyt'] if row['ssyt'] is not None else '-'}")


if __name__ == "__main__":
    main()
