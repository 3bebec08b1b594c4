#!/usr/bin/env python3
"""Rebuild the headline tables from closed forms and confirm them by census.

Prints the per-class zero-permanent table for n = 3, 5, 7, 9, 11, 13 and the
seven-row zero-pattern case table for the odd primes up to 13, marking each
row with whether the exhaustive oracle reproduces it.
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from gl3census import closed_form, oracle
from gl3census.matrices import CLASS_LABELS
from gl3census.modring import factorize


def class_table(moduli, threads):
    print("per-class zero-permanent counts")
    print(f"{'n':>3} {'perm0':>12} " + " ".join(f"{lab.name.lower():>12}" for lab in CLASS_LABELS) + "  oracle")
    for n in moduli:
        p, k = factorize(n).factors[0]
        closed = [closed_form.count_prime_power_zero(p, k)]
        closed += [closed_form.class_count_prime_power_zero(p, k, lab) for lab in CLASS_LABELS]
        t0 = time.perf_counter()
        census = oracle.class_census(p, k, threads=threads)
        observed = [sum(census.counts[0])] + [census.count(0, lab) for lab in CLASS_LABELS]
        verdict = "agrees" if observed == closed else "DISAGREES"
        print(
            f"{n:>3} " + " ".join(f"{v:>12}" for v in closed)
            + f"  {verdict} ({time.perf_counter() - t0:.1f}s)"
        )


def case_table(primes, threads):
    print("\nzero-pattern case census")
    for p in primes:
        rows = closed_form.case_rows(p)
        observed = oracle.case_census(p, threads=threads)
        print(f"p = {p}  (branch: {closed_form.qr_branch(p)})")
        for want, got in zip(rows, observed.rows):
            verdict = "agrees" if want.count == got.count else "DISAGREES"
            label = want.condition if not want.subcondition else f"{want.condition} / {want.subcondition}"
            print(f"  {label:<70} {want.count:>12}  {verdict}")
        total = sum(r.count for r in rows)
        print(f"  {'total':<70} {total:>12}  "
              + ("agrees" if total == observed.total() else "DISAGREES"))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--max-n", type=int, default=13)
    args = parser.parse_args()
    moduli = [n for n in (3, 5, 7, 9, 11, 13) if n <= args.max_n]
    primes = [p for p in (3, 5, 7, 11, 13) if p <= args.max_n]
    class_table(moduli, args.threads)
    case_table(primes, args.threads)


if __name__ == "__main__":
    main()
