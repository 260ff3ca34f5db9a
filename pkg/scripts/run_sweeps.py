"""Run every identity sweep over a grid of ranks and length bounds.

    python scripts/run_sweeps.py --ks 2 3 4 --L 6 --out results/sweeps.json
"""

import argparse
import json
import time
from pathlib import Path

from nilcox.cli import all_sweeps


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ks", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--L", type=int, default=6)
    ap.add_argument("--out", type=Path, default=Path("results/sweeps.json"))
    args = ap.parse_args()

    rows = []
    for k in args.ks:
        # k = 4 at L = 6 is the slowest corner; keep the bound one lower there
        L = args.L if k < 4 else min(args.L, 5)
        for name, sweep in all_sweeps().items():
            start = time.perf_counter()
            rep = sweep(k, L)
            seconds = time.perf_counter() - start
            row = rep.to_json() | {"name": name, "k": k, "L": L, "seconds": round(seconds, 2)}
            rows.append(row)
            print(f"{'PASS' if rep.passed else 'FAIL'}  k={k} L={L}  {name:<20} checked={rep.checked_count:<6} {seconds:6.2f}s")

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(rows, indent=1))
    failed = [r for r in rows if not r["passed"]]
    print(f"{len(rows) - len(failed)}/{len(rows)} sweeps passed; results in {args.out}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
