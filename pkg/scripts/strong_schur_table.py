"""Tabulate skew k-Schur functions Strong_{mu/nu} for Grassmannian pairs.

Each row shows the F-, m- and k-Schur expansions side by side.

    python scripts/strong_schur_table.py -k 2 --max-degree 4
"""

import argparse

from nilcox.combinat import k_bounded_partitions
from nilcox.symfunc import strong_schur_partitions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-k", type=int, default=2)
    ap.add_argument("--max-degree", type=int, default=4)
    args = ap.parse_args()
    k = args.k
    for a in range(1, args.max_degree + 1):
        for mu in k_bounded_partitions(a, k):
            for b in range(a):
                for nu in k_bounded_partitions(b, k):
                    ks = strong_schur_partitions(mu, nu, k, "kschur")
                    if not ks.coeffs:
                        continue
                    F = strong_schur_partitions(mu, nu, k, "F")
                    m = strong_schur_partitions(mu, nu, k, "m")
                    print(f"{str(mu):>12} / {str(nu):<10} kschur: {ks.pretty():<28} m: {m.pretty():<36} F: {F.pretty()}")


if __name__ == "__main__":
    main()
