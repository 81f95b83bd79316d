"""Write the built-in fixture and cut corpora as proof files, plus an index."""

import argparse
import sys
from pathlib import Path

from mixed.calculus import write_derivation
from mixed.corpus import cut_corpus, imp3_fixture, rule_fixtures


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("directory", type=Path)
    args = ap.parse_args(argv)

    args.directory.mkdir(parents=True, exist_ok=True)
    index = []
    for fx in rule_fixtures() + [imp3_fixture()] + cut_corpus():
        name = fx.name.replace("/", "__") + ".mlp"
        (args.directory / name).write_text(write_derivation(fx.derivation), encoding="utf-8")
        index.append(f"{name}\t{fx.policy}\t{fx.derivation.conclusion}")
    (args.directory / "INDEX.tsv").write_text("\n".join(index) + "\n", encoding="utf-8")
    print(f"wrote {len(index)} proofs to {args.directory}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
