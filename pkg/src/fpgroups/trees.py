"""Rooted p-ary trees and the subdivisions of [0, 1] they encode.

Internally a tree is a nested tuple: ``None`` is a leaf and a caret is a
tuple of exactly ``p`` subtrees.  The nested form is hashable and cheap to
rebuild, which is what the diagram arithmetic needs.  :class:`PTree` wraps
it together with the arity for the public API.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple, Union

from .errors import ArityError, DomainError, ParseError

Node = Optional[tuple]
LEAF: Node = None


class CaretClass(enum.Enum):
    LEFT = "left"
    INTERIOR = "interior"
    RIGHT = "right"


class Interval(NamedTuple):
    lo: Fraction
    hi: Fraction

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


# -- raw nested-tuple helpers ---------------------------------------------


def node_carets(node: Node) -> int:
    if node is None:
        return 0
    return 1 + sum(node_carets(c) for c in node)


def node_leaves(node: Node) -> int:
    if node is None:
        return 1
    return sum(node_leaves(c) for c in node)


def node_serialize(node: Node) -> str:
    parts: list[str] = []

    def walk(n: Node) -> None:
        if n is None:
            parts.append(".")
            return
        parts.append("(")
        for c in n:
            walk(c)
        parts.append(")")

    walk(node)
    return "".join(parts)


def spine(p: int, carets: int) -> Node:
    """All-right tree with the given number of carets."""
    node: Node = None
    for _ in range(carets):
        node = (None,) * (p - 1) + (node,)
    return node


def graft(node: Node, grafts: dict[int, Node]) -> Node:
    """Replace leaf number ``k`` (in-order) by ``grafts[k]`` for every key."""
    if not grafts:
        return node
    counter = [0]

    def walk(n: Node) -> Node:
        if n is None:
            k = counter[0]
            counter[0] += 1
            return grafts.get(k, None)
        return tuple(walk(c) for c in n)

    return walk(node)


def exposed_carets(node: Node) -> set[int]:
    """First-leaf indices of the carets whose children are all leaves."""
    found: set[int] = set()
    counter = [0]

    def walk(n: Node) -> None:
        if n is None:
            counter[0] += 1
            return
        if all(c is None for c in n):
            found.add(counter[0])
            counter[0] += len(n)
            return
        for c in n:
            walk(c)

    walk(node)
    return found


def prune(node: Node, starts: set[int]) -> Node:
    """Collapse the exposed carets whose first leaf index is in ``starts``."""
    counter = [0]

    def walk(n: Node) -> Node:
        if n is None:
            counter[0] += 1
            return None
        if all(c is None for c in n):
            k = counter[0]
            counter[0] += len(n)
            return None if k in starts else n
        return tuple(walk(c) for c in n)

    return walk(node)


# -- public tree type -----------------------------------------------------


@dataclass(frozen=True)
class PTree:
    """A rooted p-ary tree; every caret has exactly ``p`` children."""

    p: int
    node: Node = None

    def __post_init__(self) -> None:
        if self.p < 2:
            raise DomainError(f"arity must be >= 2, got {self.p}")
        _check_arity(self.node, self.p)

    @classmethod
    def leaf(cls, p: int) -> PTree:
        return cls(p, None)

    @property
    def is_leaf(self) -> bool:
        return self.node is None

    @property
    def children(self) -> Tuple[PTree, ...]:
        if self.node is None:
            return ()
        return tuple(PTree(self.p, c) for c in self.node)

    def leaf_count(self) -> int:
        return node_leaves(self.node)

    def __str__(self) -> str:
        return node_serialize(self.node)


def _check_arity(node: Node, p: int) -> None:
    if node is None:
        return
    if not isinstance(node, tuple):
        raise ArityError(f"not a tree node: {node!r}")
    if len(node) != p:
        raise ArityError(f"caret with {len(node)} children in a {p}-tree")
    for c in node:
        _check_arity(c, p)


def caret(p: int, *children: PTree) -> PTree:
    """Build a caret from ``p`` child trees (all leaves if none are given)."""
    if not children:
        return PTree(p, (None,) * p)
    if len(children) != p:
        raise ArityError(f"caret needs {p} children, got {len(children)}")
    for c in children:
        if c.p != p:
            raise ArityError(f"child of arity {c.p} in a {p}-tree")
    return PTree(p, tuple(c.node for c in children))


def parse_tree(text: str, p: int) -> PTree:
    """Parse ``Tree := "." | "(" Tree{p} ")"``; whitespace is ignored."""
    if p < 2:
        raise DomainError(f"arity must be >= 2, got {p}")
    s = "".join(text.split())
    pos = 0

    def parse() -> Node:
        nonlocal pos
        if pos >= len(s):
            raise ParseError(f"unexpected end of tree text {text!r}")
        ch = s[pos]
        if ch == ".":
            pos += 1
            return None
        if ch != "(":
            raise ParseError(f"unexpected {ch!r} at offset {pos} in {text!r}")
        pos += 1
        kids = []
        while pos < len(s) and s[pos] != ")":
            kids.append(parse())
        if pos >= len(s):
            raise ParseError(f"unbalanced parentheses in {text!r}")
        pos += 1
        if not kids:
            raise ParseError(f"empty caret in {text!r}")
        if len(kids) != p:
            raise ArityError(f"caret with {len(kids)} children in a {p}-tree: {text!r}")
        return tuple(kids)

    node = parse()
    if pos != len(s):
        raise ParseError(f"trailing characters in {text!r}")
    return PTree(p, node)


def serialize_tree(t: PTree) -> str:
    return node_serialize(t.node)


def caret_count(t: Union[PTree, Node]) -> int:
    return node_carets(t.node if isinstance(t, PTree) else t)


def leaf_intervals(t: PTree) -> list[Interval]:
    """In-order leaf subintervals of [0, 1]; each caret splits its interval into p."""
    p = t.p
    out: list[Interval] = []

    def walk(n: Node, lo: Fraction, width: Fraction) -> None:
        if n is None:
            out.append(Interval(lo, lo + width))
            return
        w = width / p
        for k, c in enumerate(n):
            walk(c, lo + k * w, w)

    walk(t.node, Fraction(0), Fraction(1))
    return out


def classify_carets(t: PTree) -> list[tuple[tuple[int, ...], CaretClass]]:
    """Label each caret, identified by its path of child indices from the root.

    Carets reached only through rightmost edges are RIGHT (the root included),
    carets reached only through leftmost edges are LEFT, the rest INTERIOR.
    """
    p = t.p
    out: list[tuple[tuple[int, ...], CaretClass]] = []

    def walk(n: Node, path: tuple[int, ...]) -> None:
        if n is None:
            return
        if all(k == p - 1 for k in path):
            cls = CaretClass.RIGHT
        elif all(k == 0 for k in path):
            cls = CaretClass.LEFT
        else:
            cls = CaretClass.INTERIOR
        out.append((path, cls))
        for k, c in enumerate(n):
            walk(c, path + (k,))

    walk(t.node, ())
    return out


def complete_tree(p: int, depth: int) -> PTree:
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    node: Node = None
    for _ in range(depth):
        node = (node,) * p
    return PTree(p, node)


def tree_to_dot(t: PTree, name: str = "tree") -> str:
    """Graphviz DOT text; one node per vertex, children emitted in order."""
    lines = [f"digraph {name} {{", "  node [shape=point];"]
    counter = [0]

    def walk(n: Node) -> str:
        ident = f"v{counter[0]}"
        counter[0] += 1
        lines.append(f"  {ident};")
        if n is not None:
            for c in n:
                child = walk(c)
                lines.append(f"  {ident} -> {child};")
        return ident

    walk(t.node)
    lines.append("}")
    return "\n".join(lines) + "\n"
