"""Write every formula over the given atoms up to a symbol bound, one per line."""

import argparse
import sys

from mixed.formula import parse_formula, print_formula
from mixed.oracle import formulas_up_to


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("atoms", nargs="+", help="atoms such as p q 0 or x_c y_c bot")
    ap.add_argument("--max-symbols", type=int, default=7)
    ap.add_argument("-o", "--output", help="output file (default stdout)")
    args = ap.parse_args(argv)

    atoms = [parse_formula(a) for a in args.atoms]
    lines = "".join(print_formula(f) + "\n" for f in formulas_up_to(atoms, args.max_symbols))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
