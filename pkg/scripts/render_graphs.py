"""Regenerate the k = 2 weak and strong graphs truncated at length 4 as DOT files,
and diff every stored example against a fresh computation.

    python scripts/render_graphs.py --out results/
"""

import argparse
from pathlib import Path

from nilcox.cli import load_golden, reproduce
from nilcox.strip_graphs import strong_graph, to_dot, truncated_vertices, weak_graph


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("-k", type=int, default=2)
    ap.add_argument("-L", type=int, default=4)
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    verts = truncated_vertices(args.k, args.L)
    for which in ("weak", "strong"):
        path = args.out / f"{which}_k{args.k}_L{args.L}.dot"
        path.write_text(to_dot(verts, which))
        print(f"wrote {path}")
    print(f"{len(verts)} vertices, {len(weak_graph(verts))} weak edges, {len(strong_graph(verts))} strong edges")

    results = reproduce(load_golden())
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + ("" if ok else f": {detail}"))
    raise SystemExit(0 if all(ok for _, ok, _ in results) else 1)


if __name__ == "__main__":
    main()
