"""Sweep the search depth and count agreement failures for both embeddings.

For each depth, bounded body derivability under ClassicalVars is compared with
truth tables, and bounded stoup derivability under BotOnly with bounded LJ
search.  The smallest depth with zero disagreements on both sides is the
lower bound for the default in ``SearchConfig``.
"""

import argparse
import csv
import sys
import time

from mixed.calculus import PSequent
from mixed.formula import BOT, ZERO, BotOnly, ClassicalVars, Var
from mixed.oracle import LJSearch, MLPSearch, classical_valid, formulas_up_to


def lk_disagreements(formulas, depth):
    search = MLPSearch(ClassicalVars())
    return sum(search.prove(search.state_of(PSequent((), (f,), None)), depth) != classical_valid(f)
               for f in formulas)


def lj_disagreements(formulas, depth):
    mixed, lj = MLPSearch(BotOnly()), LJSearch()
    return sum(mixed.prove(mixed.state_of(PSequent((), (), f)), depth)
               != lj.prove((frozenset(), f), depth) for f in formulas)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depths", type=int, nargs="+", default=list(range(4, 13)))
    ap.add_argument("--max-symbols", type=int, default=7)
    ap.add_argument("--csv", help="also write the table to this file")
    args = ap.parse_args(argv)

    classical = formulas_up_to([Var("x_c"), Var("y_c"), BOT], args.max_symbols)
    intuitionistic = formulas_up_to([Var("p"), Var("q"), ZERO], args.max_symbols)
    rows = []
    print(f"{len(classical)} classical and {len(intuitionistic)} intuitionistic formulas")
    print(f"{'depth':>5} {'LK bad':>7} {'LK s':>7} {'LJ bad':>7} {'LJ s':>7}")
    for depth in args.depths:
        t0 = time.perf_counter()
        lk_bad = lk_disagreements(classical, depth)
        t1 = time.perf_counter()
        lj_bad = lj_disagreements(intuitionistic, depth)
        t2 = time.perf_counter()
        rows.append((depth, lk_bad, round(t1 - t0, 2), lj_bad, round(t2 - t1, 2)))
        print(f"{depth:>5} {lk_bad:>7} {t1 - t0:>7.2f} {lj_bad:>7} {t2 - t1:>7.2f}", flush=True)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["depth", "lk_disagreements", "lk_seconds",
                             "lj_disagreements", "lj_seconds"])
            writer.writerows(rows)
    exact = [r[0] for r in rows if r[1] == 0 and r[3] == 0]
    print(f"smallest exact depth: {min(exact) if exact else 'none in range'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
