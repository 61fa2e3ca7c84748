"""Syntactic distances between adjacent tokens of a constituency tree.

For a sentence of n tokens the distance vector has n entries: entry 0 is
always 0 and entry i (i >= 1) is the height of the lowest common ancestor
of tokens i-1 and i, measured on the tree after unary chains have been
collapsed and wide nodes right-binarized. Large values mark major phrase
boundaries (clause breaks, prosodic resets); the gap inside a tight
constituent scores 1.
"""

from __future__ import annotations

from .trees import ParseTree, tokens

DistanceVector = list[int]

SYNTH_SUFFIX = "*"


def collapse_unary(tree: ParseTree) -> ParseTree:
    """Merge every internal node that has exactly one child into that child.

    The outer label is kept, so a chain collapses to a single node carrying
    the chain's topmost label. Collapsing a preterminal chain yields a leaf.
    """
    if tree.is_leaf:
        return tree
    if len(tree.children) == 1:
        inner = collapse_unary(tree.children[0])
        if inner.is_leaf:
            return ParseTree.leaf(tree.label, inner.token)
        return ParseTree.node(tree.label, inner.children)
    return ParseTree.node(
        tree.label, tuple(collapse_unary(c) for c in tree.children)
    )


def binarize_right(tree: ParseTree) -> ParseTree:
    """Replace k>2-ary nodes with right-branching cascades.

    ``(A c1 c2 c3 c4)`` becomes ``(A c1 (A* c2 (A* c3 c4)))``; synthetic
    labels are the parent label plus ``*`` (labels never affect distances,
    the suffix just aids debugging). Leaf order is preserved.
    """
    if tree.is_leaf:
        return tree
    kids = [binarize_right(c) for c in tree.children]
    if len(kids) <= 2:
        return ParseTree.node(tree.label, tuple(kids))
    synth = tree.label + SYNTH_SUFFIX
    cascade = ParseTree.node(synth, (kids[-2], kids[-1]))
    for kid in reversed(kids[1:-2]):
        cascade = ParseTree.node(synth, (kid, cascade))
    return ParseTree.node(tree.label, (kids[0], cascade))


def node_height(tree: ParseTree) -> int:
    """Height with leaves at 0 and height(node) = 1 + max child height."""
    if tree.is_leaf:
        return 0
    return 1 + max(node_height(c) for c in tree.children)


def distance_vector(tree: ParseTree) -> DistanceVector:
    """Per-token syntactic distances; first entry always 0.

    Computed in one traversal of the collapsed, binarized tree: the gap
    between the last token of one child and the first token of the next
    belongs to exactly one node (their lowest common ancestor), so each
    node writes its height at its internal child boundaries.
    """
    processed = binarize_right(collapse_unary(tree))
    out = [0] * len(tokens(processed))

    def walk(node: ParseTree, offset: int) -> tuple[int, int]:
        if node.is_leaf:
            return 0, 1
        heights = []
        boundaries = []
        count = 0
        for child in node.children:
            h, c = walk(child, offset + count)
            heights.append(h)
            count += c
            boundaries.append(offset + count)
        height = 1 + max(heights)
        for b in boundaries[:-1]:
            out[b] = height
        return height, count

    walk(processed, 0)
    return out
