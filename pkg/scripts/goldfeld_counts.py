#!/usr/bin/env python3
"""Count primes ell in N'(K) for small quadratic fields and cross-check the Goldfeld conditions.

Only counts are reported; nothing here bounds the sets.
"""

import argparse

from avsieve.arith import primes_up_to
from avsieve.residues import QuadraticField, ell_star, fundamental_discriminants, goldfeld_check, nprime_member


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--disc-bound", type=int, default=40)
    ap.add_argument("--limit", type=int, default=10**4)
    args = ap.parse_args()

    ells = [l for l in primes_up_to(args.limit) if l > 2]
    print(f"{'disc':>5}  {'#N_prime':>8}  {'largest':>8}  mismatches")
    for D in fundamental_discriminants(args.disc_bound):
        K = QuadraticField(D)
        members = [l for l in ells if nprime_member(l, K)]
        bad = sum(nprime_member(l, K) != goldfeld_check(-ell_star(l), K).member for l in ells)
        print(f"{D:>5}  {len(members):>8}  {max(members, default=0):>8}  {bad}")


if __name__ == "__main__":
    main()
