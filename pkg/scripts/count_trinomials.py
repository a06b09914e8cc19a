"""Count a, b in GF(2^n)* making x^4 + b x^2 + a x a permutation, against the closed count.

    python3 scripts/count_trinomials.py --max-n 10 [--brute-force-n 6]
"""

import argparse
import time

from ppinv.closed_forms import count_trinomial_pps
from ppinv.field import make_field
from ppinv.inverse import is_permutation
from ppinv.poly import Poly


def brute_force(n):
    spec = make_field(2, n)
    return sum(is_permutation(Poly.from_terms(spec, {4: spec.one, 2: b, 1: a}))
               for a in spec.nonzero() for b in spec.nonzero())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--brute-force-n", type=int, default=6, help="also evaluate every trinomial up to this n")
    args = ap.parse_args()
    print("n\tcount\tformula\tbrute\ttime")
    mismatches = 0
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        count, formula = count_trinomial_pps(n)
        brute = brute_force(n) if n <= args.brute_force_n else "-"
        mismatches += count != formula or (brute != "-" and brute != count)
        print(f"{n}\t{count}\t{formula}\t{brute}\t{time.perf_counter() - start:.2f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
