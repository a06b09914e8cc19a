"""Run the mod-5 binomial congruence checks for n = 1..N with timings.

    python3 scripts/congruence_sweep.py --max-n 5
"""

import argparse
import time

from ppinv.binom import congruence_suite, theorem_predicate_equivalences


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    total = 0
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        suite = congruence_suite(n)
        equiv = theorem_predicate_equivalences(n)
        for line in suite.lines() + equiv.lines():
            print(line)
        failures = suite.failures + equiv.failures
        total += failures
        print(f"# n={n} failures={failures} time={time.perf_counter() - start:.1f}s")
    return 1 if total else 0


if __name__ == "__main__":
    raise SystemExit(main())
