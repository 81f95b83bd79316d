"""Minimal s-expression reader/writer for proof files.

A proof node is written ``(<tag> "<sequent>" [:principal "<formula>"] <premise>*)``.
The reader returns :class:`Node` trees holding raw strings; each calculus module
turns them into its own derivation type.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional


class SexprError(ValueError):
    pass


@dataclass
class Node:
    tag: str
    sequent: str
    principal: Optional[str] = None
    children: list = field(default_factory=list)


_TOKEN = re.compile(r'\s*(?:(\()|(\))|"((?:[^"\\]|\\.)*)"|([^\s()"]+))')


def tokenize(text: str) -> list:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SexprError(f"bad s-expression near position {pos}: {text[pos:pos + 20]!r}")
        if m.group(1):
            out.append("(")
        elif m.group(2):
            out.append(")")
        elif m.group(3) is not None:
            out.append(("str", re.sub(r"\\(.)", r"\1", m.group(3))))
        else:
            out.append(("sym", m.group(4)))
        pos = m.end()
    return out


def parse(text: str):
    """Parse exactly one top-level form into nested lists of tokens."""
    toks = tokenize(text)
    if not toks:
        raise SexprError("empty input")
    stack = [[]]
    for t in toks:
        if t == "(":
            stack.append([])
        elif t == ")":
            if len(stack) == 1:
                raise SexprError("unbalanced ')'")
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(t)
    if len(stack) != 1:
        raise SexprError("unbalanced '('")
    if len(stack[0]) != 1:
        raise SexprError("expected exactly one top-level form")
    return stack[0][0]


def _to_node(form) -> Node:
    if not isinstance(form, list) or len(form) < 2:
        raise SexprError("a proof node needs a rule tag and a sequent string")
    tag, seq, *rest = form
    if not (isinstance(tag, tuple) and tag[0] == "sym"):
        raise SexprError(f"rule tag must be a symbol, got {tag!r}")
    if not (isinstance(seq, tuple) and seq[0] == "str"):
        raise SexprError(f"node {tag[1]}: sequent must be a string")
    principal = None
    if rest and rest[0] == ("sym", ":principal"):
        if len(rest) < 2 or not (isinstance(rest[1], tuple) and rest[1][0] == "str"):
            raise SexprError(f"node {tag[1]}: :principal needs a string")
        principal = rest[1][1]
        rest = rest[2:]
    return Node(tag[1], seq[1], principal, [_to_node(c) for c in rest])


def read_tree(text: str) -> Node:
    return _to_node(parse(text))


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_tree(node: Node, indent: int = 0) -> str:
    pad = "  " * indent
    head = f"{pad}({node.tag} {_quote(node.sequent)}"
    if node.principal is not None:
        head += f" :principal {_quote(node.principal)}"
    if not node.children:
        return head + ")"
    inner = "\n".join(write_tree(c, indent + 1) for c in node.children)
    return f"{head}\n{inner})"
