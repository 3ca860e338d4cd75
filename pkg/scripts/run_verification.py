"""Run the whole claim registry on the default grids and save a JSON-lines report.

    python scripts/run_verification.py --out results/verify.jsonl
"""

import argparse
import time
from pathlib import Path

from rectmod import verify
from rectmod.report import to_jsonl


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Path("results/verify.jsonl"))
    ap.add_argument("--prefix", default="")
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = verify.run_all(prefix=args.prefix)
    elapsed = time.perf_counter() - t0
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(to_jsonl(reports))

    passed, failed = verify.summarize(reports)
    for rep in reports:
        if not rep.passed:
            print(f"FAIL {rep.claim_id}: margin {rep.worst_margin:.4g} at {rep.worst_point}  ({rep.detail})")
    print(f"{passed} passed, {failed} failed, {elapsed:.1f}s; report in {args.out}")


if __name__ == "__main__":
    main()
