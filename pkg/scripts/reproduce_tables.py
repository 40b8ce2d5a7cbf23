#!/usr/bin/env python3
"""Rebuild the small-genus sieve tables and the M'(n) values from scratch."""

import argparse

from avsieve.cli import render_survivor_table
from avsieve.decomp import c_chain_violations, sieve
from avsieve.glorders import gl_gcd_oracle, m_prime


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gmax", type=int, default=4)
    ap.add_argument("--nmax", type=int, default=8)
    args = ap.parse_args()

    print("M'(n) with the GL_n gcd check")
    for n in range(1, args.nmax + 1):
        f = m_prime(n)
        oracle = gl_gcd_oracle(n)
        print(f"  n={n}: {f}  oracle {'agrees' if oracle == f.value else f'DISAGREES ({oracle})'}")

    for g in range(1, args.gmax + 1):
        res = sieve(g)
        print(f"\ng = {g}: {len(res.survivors)} survivors, {len(res.exceptions)} profiles reach the C8 stage")
        if res.survivors:
            for line in render_survivor_table(res):
                print("  " + line)
        elif g == 3:
            for p in res.exceptions:
                print("  exception:", p.table_label())

    print("\nC-chain violations (d <= 60, ell <= 200):", len(c_chain_violations()))


if __name__ == "__main__":
    main()
