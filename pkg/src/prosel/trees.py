"""Bracketed (treebank-style) constituency trees.

A tree is written ``(LABEL child ...)`` where each child is either a
nested expression or a bare token. ``(JJ quick)`` is a leaf carrying the
label ``JJ`` and the surface token ``quick``; a bare token appearing next
to other children becomes a leaf whose label equals the token. Labels and
tokens may contain any non-whitespace, non-bracket characters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import TreeParseError

_ATOM_BAD = re.compile(r"[\s()]")


@dataclass(frozen=True)
class ParseTree:
    """Immutable labeled constituency tree; leaves carry surface tokens."""

    label: str
    children: tuple["ParseTree", ...] = ()
    token: str | None = None

    def __post_init__(self):
        if not self.label or _ATOM_BAD.search(self.label):
            raise ValueError(f"invalid node label: {self.label!r}")
        if self.token is not None:
            if self.children:
                raise ValueError("leaf nodes cannot have children")
            if not self.token or _ATOM_BAD.search(self.token):
                raise ValueError(f"invalid leaf token: {self.token!r}")
        elif not self.children:
            raise ValueError("internal nodes need at least one child")

    @property
    def is_leaf(self) -> bool:
        return self.token is not None

    @staticmethod
    def leaf(label: str, token: str) -> "ParseTree":
        return ParseTree(label=label, token=token)

    @staticmethod
    def node(label: str, children) -> "ParseTree":
        return ParseTree(label=label, children=tuple(children))


def parse_tree(text: str) -> ParseTree:
    """Parse one bracketed tree, rejecting malformed input with offsets."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_atom() -> str:
        nonlocal pos
        start = pos
        while pos < n and not text[pos].isspace() and text[pos] not in "()":
            pos += 1
        return text[start:pos]

    def read_expr() -> ParseTree:
        nonlocal pos
        open_at = pos
        pos += 1  # consume '('
        skip_ws()
        if pos >= n:
            raise TreeParseError("unbalanced brackets", pos)
        if text[pos] in "()":
            raise TreeParseError("empty label", pos)
        label = read_atom()
        items: list[ParseTree | str] = []
        while True:
            skip_ws()
            if pos >= n:
                raise TreeParseError("unbalanced brackets", pos)
            ch = text[pos]
            if ch == ")":
                pos += 1
                break
            if ch == "(":
                items.append(read_expr())
            else:
                items.append(read_atom())
        if not items:
            raise TreeParseError("internal node with zero children", open_at)
        if len(items) == 1 and isinstance(items[0], str):
            return ParseTree.leaf(label, items[0])
        children = tuple(
            item if isinstance(item, ParseTree) else ParseTree.leaf(item, item)
            for item in items
        )
        return ParseTree.node(label, children)

    skip_ws()
    if pos >= n:
        raise TreeParseError("expected '('", pos)
    if text[pos] == ")":
        raise TreeParseError("unbalanced brackets", pos)
    if text[pos] != "(":
        raise TreeParseError("expected '('", pos)
    tree = read_expr()
    skip_ws()
    if pos < n:
        raise TreeParseError("trailing garbage", pos)
    return tree


def tokens(tree: ParseTree) -> list[str]:
    """In-order sequence of leaf tokens (the sentence)."""
    out: list[str] = []

    def walk(node: ParseTree):
        if node.is_leaf:
            out.append(node.token)
        else:
            for child in node.children:
                walk(child)

    walk(tree)
    return out


def serialize_tree(tree: ParseTree) -> str:
    """Render a tree so that parse_tree(serialize_tree(t)) == t.

    A leaf whose label equals its token is rendered as the bare token,
    except where that would be ambiguous (at the root, or as an only
    child, where the bare form would read as a labeled leaf).
    """

    def render(node: ParseTree, bare_ok: bool) -> str:
        if node.is_leaf:
            if bare_ok and node.label == node.token:
                return node.token
            return f"({node.label} {node.token})"
        inner = " ".join(
            render(child, bare_ok=len(node.children) > 1)
            for child in node.children
        )
        return f"({node.label} {inner})"

    return render(tree, bare_ok=False)
