#!/usr/bin/env python3
"""Least prime m-th power residues against the ell^{(m-1)/4 + eps} scale."""

import argparse

from avsieve.residues import elliott_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ms", default="2,3,4,6,8")
    ap.add_argument("--hi", type=int, default=10**5)
    ap.add_argument("--eps", type=float, default=0.1)
    ap.add_argument("--top", type=int, default=5, help="worst rows to show per m")
    args = ap.parse_args()

    for m in map(int, args.ms.split(",")):
        scan = elliott_scan(m, 3, args.hi, args.eps)
        worst = sorted(scan.rows, key=lambda r: -r.ratio)[: args.top]
        print(f"m={m}: {len(scan.rows)} primes, max ratio {scan.max_ratio:.4f}")
        for r in worst:
            print(f"    ell={r.ell:>7}  p_min={r.p_min:>4}  ratio={r.ratio:.4f}")


if __name__ == "__main__":
    main()
