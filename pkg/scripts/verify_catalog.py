"""Check every catalog row over a list of fields and print a per-row summary.

    python3 scripts/verify_catalog.py --fields 4 5 7 8 9 13 16 25 27 32 125 625
"""

import argparse
import time
from collections import Counter

from ppinv.catalog import table1_catalog
from ppinv.field import parse_field
from ppinv.inverse import verify_inverse


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fields", nargs="+", default=["4", "5", "7", "8", "9", "13", "16", "25", "27", "32", "125", "625"])
    args = ap.parse_args()
    start = time.perf_counter()
    ok, bad = Counter(), Counter()
    for text in args.fields:
        spec = parse_field(text)
        for row in table1_catalog():
            for params in row.parameter_space(spec):
                f, g = row.instantiate(spec, params)
                (ok if verify_inverse(f, g) else bad)[row.id, spec.q] += 1
    for row in table1_catalog():
        cells = [f"q={q}:{ok[row.id, q]}" + (f"!{bad[row.id, q]}" if bad[row.id, q] else "")
                 for q in sorted({q for rid, q in ok | bad if rid == row.id})]
        print(f"{row.id:24s} {' '.join(cells) or '-'}")
    print(f"instances={sum(ok.values()) + sum(bad.values())} failures={sum(bad.values())} "
          f"time={time.perf_counter() - start:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
