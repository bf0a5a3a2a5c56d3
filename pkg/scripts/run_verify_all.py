"""Run the full verification sweep and write the JSON report.

    python scripts/run_verify_all.py --out verify_all.json
"""

import argparse
import sys
from dataclasses import dataclass

from qschur.cli import main as cli_main


@dataclass(frozen=True)
class SweepConfig:
    nmax: int = 3
    rmax: int = 3
    bm_rmax: int = 4
    rings: str = "generic,Q:1,Q:-1,Q:2,F5:2"
    out: str = "verify_all.json"

    def argv(self):
        return ["verify-all", "--nmax", str(self.nmax), "--rmax", str(self.rmax),
                "--bm-rmax", str(self.bm_rmax), "--rings", self.rings, "--output", self.out, "--timings"]


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    sys.exit(cli_main(cfg.argv()))
