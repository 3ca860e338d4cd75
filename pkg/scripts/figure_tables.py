"""Write the data behind the psi and modulus figures as CSV files.

    python scripts/figure_tables.py --out results/
"""

import argparse
import csv
from pathlib import Path

import numpy as np

from rectmod import modulus, psimu
from rectmod.report import GridSpec


def psi_table(n):
    for r in GridSpec(1e-3, 1 - 1e-3, n, "endpoint_refined").points():
        r = float(r)
        bp = psimu.psi_bounds(r)
        yield r, bp.lower, psimu.psi(r), bp.upper, psimu.mu(r)


def modulus_table(n):
    for b in GridSpec(1e-3, 1e3, n, "logarithmic").points():
        b = float(b)
        mb = modulus.modulus_bounds(b)
        yield b, mb.lower_relaxed, mb.lower, modulus.exterior_modulus(b), mb.upper, mb.upper_relaxed


def gap_table(n):
    for r in np.logspace(-2, 6, n):
        yield float(r), modulus.comparison_gap(float(r))


TABLES = {
    "psi.csv": (("r", "lower", "psi", "upper", "mu"), psi_table),
    "modulus.csv": (("b", "lower_relaxed", "lower", "exterior", "upper", "upper_relaxed"), modulus_table),
    "comparison_gap.csv": (("r", "gap"), gap_table),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("-n", type=int, default=400)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, (header, rows) in TABLES.items():
        path = args.out / name
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for row in rows(args.n):
                w.writerow([f"{v:.15g}" for v in row])
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
