"""``mixed`` command-line front end.

Exit status: 0 success, 1 invalid proof (or ``prove`` found nothing within the
bound), 2 violated precondition, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from .calculus import (RULES, ProofError, PSequent, check_derivation, format_path, is_cut_free,
                       parse_sequent, read_derivation, write_derivation)
from .cutelim import NormalizationBudgetExceeded, normalize
from .embeddings import (PreconditionError, check_lj, check_lk, lj_to_mlp,
                         lk_to_mlp, mlp_to_lj, mlp_to_lk, read_lj, read_lk, write_proof)
from .formula import (BOT, ZERO, FormulaSyntaxError, is_stable, p_member, parse_formula,
                      parse_policy, read_formula_lines, show)
from .linear import (LL_RULES, LLSyntaxError, check_ll, read_ll, translate_derivation,
                     translate_sequent, write_ll)
from .oracle import SearchConfig, prove_bounded
from .sexpr import SexprError, read_tree

EXIT_OK, EXIT_INVALID, EXIT_PRECONDITION, EXIT_IO = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {output}: {exc.strerror}") from exc


def _parsed(reader: Callable, text: str, what: str):
    try:
        return reader(text)
    except (SexprError, FormulaSyntaxError, LLSyntaxError, ValueError) as exc:
        raise _Fail(EXIT_IO, f"cannot parse {what}: {exc}") from exc


def _require_valid(report, what: str) -> None:
    if not report.ok:
        raise _Fail(EXIT_INVALID, f"{what} is invalid:\n{report.describe()}")


def _policy(args):
    try:
        return parse_policy(args.policy)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read policy file: {exc.strerror}") from exc
    except ValueError as exc:
        raise _Fail(EXIT_IO, str(exc)) from exc


def _mixed_proof(args, policy):
    d = _parsed(read_derivation, _read(args.input), args.input)
    _require_valid(check_derivation(d, policy), "input proof")
    return d


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    text = _read(args.input)
    tag = _parsed(read_tree, text, args.input).tag
    if tag.startswith("lk."):
        report = check_lk(_parsed(read_lk, text, args.input))
    elif tag.startswith("lj."):
        report = check_lj(_parsed(read_lj, text, args.input))
    elif tag in LL_RULES and tag not in RULES:
        report = check_ll(_parsed(read_ll, text, args.input))
    else:
        report = check_derivation(_parsed(read_derivation, text, args.input), _policy(args))
    if not report.ok:
        print(report.describe(), file=sys.stderr)
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def _degrees(ds) -> str:
    return "{" + ", ".join(map(str, ds)) + "}"


def _print_step(path, before, after) -> None:
    print(f"{format_path(path)}: {_degrees(before)} -> {_degrees(after)}", file=sys.stderr)


def cmd_normalize(args) -> int:
    policy = _policy(args)
    d = _mixed_proof(args, policy)
    try:
        out = normalize(d, policy, trace=_print_step if args.trace else None)
    except NormalizationBudgetExceeded as exc:
        raise _Fail(EXIT_INVALID, str(exc)) from exc
    _require_valid(check_derivation(out, policy), "normal form")
    assert is_cut_free(out) and out.conclusion == d.conclusion
    _emit(write_derivation(out), args.output)
    return EXIT_OK


def cmd_translate_ll(args) -> int:
    policy = _policy(args)
    d = _mixed_proof(args, policy)
    try:
        out = translate_derivation(d, policy)
    except (ProofError, ValueError, AssertionError) as exc:
        raise _Fail(EXIT_INVALID, f"translation failed: {exc}") from exc
    report = check_ll(out)
    if not report.ok or out.conclusion != translate_sequent(d.conclusion, policy):
        raise _Fail(EXIT_INVALID, f"refusing to write an unchecked LL proof:\n{report.describe()}")
    _emit(write_ll(out), args.output)
    return EXIT_OK


def cmd_embed_lk(args) -> int:
    policy = _policy(args)
    d = _parsed(read_lk, _read(args.input), args.input)
    _require_valid(check_lk(d), "input LK proof")
    out = lk_to_mlp(d, policy)
    _require_valid(check_derivation(out, policy), "embedded proof")
    _emit(write_derivation(out), args.output)
    return EXIT_OK


def cmd_extract_lk(args) -> int:
    policy = _policy(args)
    out = mlp_to_lk(_mixed_proof(args, policy), policy)
    _require_valid(check_lk(out), "extracted LK proof")
    _emit(write_proof(out), args.output)
    return EXIT_OK


def cmd_embed_lj(args) -> int:
    policy = _policy(args)
    d = _parsed(read_lj, _read(args.input), args.input)
    _require_valid(check_lj(d), "input LJ proof")
    out = lj_to_mlp(d, policy)
    _require_valid(check_derivation(out, policy), "embedded proof")
    _emit(write_derivation(out), args.output)
    return EXIT_OK


def cmd_extract_lj(args) -> int:
    policy = _policy(args)
    out = mlp_to_lj(_mixed_proof(args, policy), policy)
    _require_valid(check_lj(out), "extracted LJ proof")
    _emit(write_proof(out), args.output)
    return EXIT_OK


def _goal(text: str) -> PSequent:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise ValueError(f"expected exactly one sequent or formula, found {len(lines)} lines")
    if "|-" in lines[0]:
        return parse_sequent(lines[0])
    return PSequent((), (), parse_formula(lines[0]))


def cmd_prove(args) -> int:
    policy = _policy(args)
    goal = _parsed(_goal, _read(args.input), args.input)
    try:
        cfg = SearchConfig(depth=args.depth, mult_cap=args.mult_cap)
    except ValueError as exc:
        raise _Fail(EXIT_IO, str(exc)) from exc
    found = prove_bounded(goal, policy, cfg)
    if found is None:
        print("unknown (bound reached)")
        return EXIT_INVALID
    _emit(write_derivation(found), args.output)
    return EXIT_OK


def _violations(forms: frozenset, policy) -> dict:
    lk, lj = [], []
    if not is_stable(forms):
        lk.append("set is not stable")
        lj.append("set is not stable")
    if ZERO in forms:
        lk.append("0 is in the set")
    if BOT in forms:
        lj.append("bot is in the set")
    for f in sorted(forms, key=show):
        if p_member(policy, f):
            lj.append(f"{show(f)} is in P")
        else:
            lk.append(f"{show(f)} is not in P")
    return {"LK": lk, "LJ": lj}


def cmd_policy_check(args) -> int:
    policy = _policy(args)
    forms = frozenset(_parsed(read_formula_lines, _read(args.input), args.input))
    report = _violations(forms, policy)
    wanted = ["LK", "LJ"] if args.embedding == "both" else [args.embedding.upper()]
    for name in wanted:
        print(f"{name}: {'ok' if not report[name] else 'violated'}")
        for problem in report[name]:
            print(f"  {problem}")
    # with both embeddings requested, one applicable embedding is enough
    applicable = [name for name in wanted if not report[name]]
    return EXIT_OK if applicable else EXIT_PRECONDITION


COMMANDS = {
    "check": cmd_check,
    "normalize": cmd_normalize,
    "translate-ll": cmd_translate_ll,
    "embed-lk": cmd_embed_lk,
    "extract-lk": cmd_extract_lk,
    "embed-lj": cmd_embed_lj,
    "extract-lj": cmd_extract_lj,
    "prove": cmd_prove,
    "policy-check": cmd_policy_check,
}

_DEFAULT_POLICY = {"embed-lj": "bot", "extract-lj": "bot"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mixed", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("input", help="input file (proof, goal or formula set)")
    ap.add_argument("--policy", default=None,
                    help="all, bot, cvars or file:<path> (default cvars; bot for LJ commands)")
    ap.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    ap.add_argument("--depth", type=int, default=SearchConfig.depth)
    ap.add_argument("--mult-cap", type=int, default=SearchConfig.mult_cap)
    ap.add_argument("--trace", action="store_true", help="log each cut reduction to stderr")
    ap.add_argument("--embedding", choices=["lk", "lj", "both"], default="both",
                    help="which hypotheses policy-check validates (both: either may hold)")
    return ap


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    if args.policy is None:
        args.policy = _DEFAULT_POLICY.get(args.command, "cvars")
    try:
        return COMMANDS[args.command](args)
    except _Fail as exc:
        print(f"mixed {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except PreconditionError as exc:
        print(f"mixed {args.command}: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ProofError as exc:
        print(f"mixed {args.command}: invalid proof: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
