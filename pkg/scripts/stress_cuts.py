"""Normalize random (optionally nested) cuts and audit every reduction step.

Each instance is reduced one cut at a time; the multiset degree must drop at
every step, the result must be cut-free, valid, conclusion-identical and
satisfy the subformula property, and the input must translate to a valid LL
proof.
"""

import argparse
import random
import sys
import time
from collections import Counter

from mixed.calculus import check_derivation, is_cut_free
from mixed.cutelim import (derivation_degree, multiset_greater, reduce_once,
                           verify_subformula_property)
from mixed.formula import parse_policy
from mixed.generators import CutGenerator
from mixed.linear import check_ll, translate_derivation


def audit(d, policy) -> int:
    steps, out = 0, d
    while not is_cut_free(out):
        nxt = reduce_once(out, policy)
        assert multiset_greater(derivation_degree(out), derivation_degree(nxt)), "degree"
        out, steps = nxt, steps + 1
    assert check_derivation(out, policy).ok, "normal form invalid"
    assert out.conclusion == d.conclusion, "conclusion changed"
    assert verify_subformula_property(out), "subformula property"
    assert check_ll(translate_derivation(d, policy)).ok, "LL translation"
    return steps


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=300, help="instances per policy")
    ap.add_argument("--policies", nargs="+", default=["cvars", "bot", "all"])
    ap.add_argument("--depth", type=int, default=7, help="search depth for premises")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    failures = 0
    for spec in args.policies:
        policy = parse_policy(spec)
        gen = CutGenerator(policy, random.Random(args.seed), depth=args.depth)
        rules, steps, start = Counter(), 0, time.perf_counter()
        for _ in range(args.count):
            d = gen.instance()
            rules[d.rule] += 1
            try:
                steps += audit(d, policy)
            except AssertionError as exc:
                failures += 1
                print(f"FAIL [{spec}] {d.conclusion}: {exc}", file=sys.stderr)
        print(f"{spec:>6}: {args.count} instances ({dict(rules)}), {steps} reductions, "
              f"{time.perf_counter() - start:.1f}s")
    print("failures:", failures)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
