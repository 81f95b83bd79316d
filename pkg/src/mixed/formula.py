"""Propositional formulas of the mixed calculus, their concrete syntax, and P-policies.

Formulas are built from ``0``, ``bot`` (the classical absurdity), variables and the
binary connectives ``&``, ``|``, ``->``.  A variable whose name ends in ``_c`` is
classical; every other variable is intuitionistic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union


class FormulaSyntaxError(ValueError):
    """Raised on malformed formula text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Bot:
    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Var:
    name: str

    @property
    def classical(self) -> bool:
        return self.name.endswith("_c")

    def __str__(self):
        return self.name


class _Connective:
    # hashing is hot in proof search; cache it instead of re-walking the tree
    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((type(self).__name__, self.left, self.right))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class And(_Connective):
    left: "Formula"
    right: "Formula"
    __hash__ = _Connective.__hash__


@dataclass(frozen=True)
class Or(_Connective):
    left: "Formula"
    right: "Formula"
    __hash__ = _Connective.__hash__


@dataclass(frozen=True)
class Imp(_Connective):
    left: "Formula"
    right: "Formula"
    __hash__ = _Connective.__hash__


Formula = Union[Zero, Bot, Var, And, Or, Imp]
Binary = (And, Or, Imp)

ZERO = Zero()
BOT = Bot()

_SYMBOL = {And: "&", Or: "|", Imp: "->"}
# binding strength; higher binds tighter
_PREC = {Imp: 1, Or: 2, And: 3}


@lru_cache(maxsize=None)
def show(f: Formula) -> str:
    """Print ``f`` with the fewest parentheses the grammar needs."""
    if isinstance(f, Zero):
        return "0"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Var):
        return f.name
    op = type(f)
    prec = _PREC[op]
    left, right = show(f.left), show(f.right)
    if isinstance(f.left, Binary):
        lp = _PREC[type(f.left)]
        # -> is right-associative, & and | left-associative
        if lp < prec or (lp == prec and op is Imp):
            left = f"({left})"
    if isinstance(f.right, Binary):
        rp = _PREC[type(f.right)]
        if rp < prec or (rp == prec and op is not Imp):
            right = f"({right})"
    return f"{left} {_SYMBOL[op]} {right}"


def sort_key(f) -> str:
    return show(f)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"->|[&|()]|0(?![A-Za-z0-9_])|[a-z][a-zA-Z0-9_]*")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError("unexpected character", text, pos)
        tokens.append((m.group(), pos))
        pos = m.end()
    tokens.append(("<eof>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message):
        raise FormulaSyntaxError(message, self.text, self.tokens[self.i][1])

    def parse(self) -> Formula:
        f = self.imp()
        if self.peek() != "<eof>":
            self.error(f"unexpected {self.peek()!r}")
        return f

    def imp(self):
        left = self.disj()
        if self.peek() == "->":
            self.advance()
            return Imp(left, self.imp())
        return left

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.atom()
        while self.peek() == "&":
            self.advance()
            f = And(f, self.atom())
        return f

    def atom(self):
        tok, _ = self.tokens[self.i]
        if tok == "(":
            self.advance()
            f = self.imp()
            if self.peek() != ")":
                self.error("expected ')'")
            self.advance()
            return f
        if tok == "0":
            self.advance()
            return ZERO
        if tok == "bot":
            self.advance()
            return BOT
        if tok in ("<eof>", ")", "&", "|", "->"):
            self.error(f"expected a formula, got {tok!r}")
        self.advance()
        return Var(tok)


@lru_cache(maxsize=4096)
def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()


def print_formula(f: Formula) -> str:
    return show(f)


# ---------------------------------------------------------------- structure


def vars_of(f: Formula) -> frozenset:
    """Variables and constants occurring in ``f``."""
    if isinstance(f, (Zero, Bot, Var)):
        return frozenset([f])
    return vars_of(f.left) | vars_of(f.right)


@lru_cache(maxsize=None)
def subformulas(f: Formula) -> frozenset:
    if isinstance(f, Binary):
        return frozenset([f]) | subformulas(f.left) | subformulas(f.right)
    return frozenset([f])


def subformula_closure(formulas: Iterable[Formula]) -> frozenset:
    out = frozenset()
    for f in formulas:
        out |= subformulas(f)
    return out


@lru_cache(maxsize=None)
def length(f: Formula) -> int:
    """Number of connective and atom/constant occurrences."""
    if isinstance(f, Binary):
        return 1 + length(f.left) + length(f.right)
    return 1


def is_stable(s: Iterable[Formula]) -> bool:
    s = frozenset(s)
    return all(f.left in s and f.right in s for f in s if isinstance(f, Binary))


# ---------------------------------------------------------------- P-policies


@dataclass(frozen=True)
class All:
    def __str__(self):
        return "all"


@dataclass(frozen=True)
class BotOnly:
    def __str__(self):
        return "bot"


@dataclass(frozen=True)
class ClassicalVars:
    def __str__(self):
        return "cvars"


@dataclass(frozen=True)
class Explicit:
    members: frozenset

    def __str__(self):
        return "{" + ", ".join(sorted(map(show, self.members))) + "}"


PPolicy = Union[All, BotOnly, ClassicalVars, Explicit]


@lru_cache(maxsize=None)
def _touches_classical(f: Formula) -> bool:
    if isinstance(f, Bot):
        return True
    if isinstance(f, Var):
        return f.classical
    if isinstance(f, Zero):
        return False
    return _touches_classical(f.left) or _touches_classical(f.right)


def p_member(policy: PPolicy, f: Formula) -> bool:
    if isinstance(policy, All):
        return True
    if isinstance(policy, BotOnly):
        return isinstance(f, Bot)
    if isinstance(policy, ClassicalVars):
        return _touches_classical(f)
    if isinstance(policy, Explicit):
        return f in policy.members
    raise TypeError(f"not a policy: {policy!r}")


def parse_policy(spec: str) -> PPolicy:
    """Read a CLI policy string: ``all``, ``bot``, ``cvars`` or ``file:<path>``."""
    if spec == "all":
        return All()
    if spec == "bot":
        return BotOnly()
    if spec == "cvars":
        return ClassicalVars()
    if spec.startswith("file:"):
        with open(spec[5:], encoding="utf-8") as fh:
            return Explicit(frozenset(read_formula_lines(fh.read())))
    raise ValueError(f"unknown policy {spec!r} (expected all, bot, cvars or file:<path>)")


def read_formula_lines(text: str) -> list:
    """One formula per line; blank lines and ``#`` comments are skipped."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_formula(line))
    return out
