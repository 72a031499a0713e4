"""Tree-pair diagrams as elements of F(p).

A diagram ``(source, target)`` sends the leaf intervals of the source tree,
in order, onto the leaf intervals of the target tree.  Products compose
left to right: ``multiply(x, y)`` applies ``x`` first, then ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityError, ArityMismatch, DomainError, ParseError
from .trees import (
    Node,
    PTree,
    exposed_carets,
    graft,
    node_carets,
    node_leaves,
    node_serialize,
    parse_tree,
    prune,
)


@dataclass(frozen=True)
class TreeDiagram:
    p: int
    src: Node
    tgt: Node

    def __post_init__(self) -> None:
        if self.p < 2:
            raise DomainError(f"arity must be >= 2, got {self.p}")
        # PTree validates arities.
        PTree(self.p, self.src)
        PTree(self.p, self.tgt)
        if node_leaves(self.src) != node_leaves(self.tgt):
            raise ArityError("source and target trees have different leaf counts")

    @classmethod
    def from_trees(cls, source: PTree, target: PTree) -> TreeDiagram:
        if source.p != target.p:
            raise ArityMismatch(f"trees of arity {source.p} and {target.p}")
        return cls(source.p, source.node, target.node)

    @property
    def source(self) -> PTree:
        return PTree(self.p, self.src)

    @property
    def target(self) -> PTree:
        return PTree(self.p, self.tgt)

    def caret_count(self) -> int:
        return node_carets(self.src)

    def is_identity(self) -> bool:
        return self.src is None and self.tgt is None

    def key(self) -> str:
        """Canonical text ``SRC->TGT``; unique per element once reduced."""
        return node_serialize(self.src) + "->" + node_serialize(self.tgt)

    def __str__(self) -> str:
        return self.key()

    def __mul__(self, other: TreeDiagram) -> TreeDiagram:
        return multiply(self, other)

    def __invert__(self) -> TreeDiagram:
        return invert(self)


def _unchecked(p: int, src: Node, tgt: Node) -> TreeDiagram:
    # Hot-path constructor for diagrams built from valid pieces.
    d = object.__new__(TreeDiagram)
    object.__setattr__(d, "p", p)
    object.__setattr__(d, "src", src)
    object.__setattr__(d, "tgt", tgt)
    return d


def identity_diagram(p: int) -> TreeDiagram:
    if p < 2:
        raise DomainError(f"arity must be >= 2, got {p}")
    return _unchecked(p, None, None)


def generator_diagram(p: int, i: int) -> TreeDiagram:
    """Reduced diagram of the generator x_i of F(p)."""
    if p < 2:
        raise DomainError(f"arity must be >= 2, got {p}")
    if i < 0:
        raise DomainError(f"generator index must be >= 0, got {i}")
    wraps, base = divmod(i, p - 1)
    small = (None,) * p
    src = tuple(small if k == base else None for k in range(p))
    tgt = (None,) * (p - 1) + (small,)
    for _ in range(wraps):
        src = (None,) * (p - 1) + (src,)
        tgt = (None,) * (p - 1) + (tgt,)
    return _unchecked(p, src, tgt)


def _reduce_nodes(src: Node, tgt: Node) -> tuple[Node, Node]:
    while True:
        common = exposed_carets(src) & exposed_carets(tgt)
        if not common:
            return src, tgt
        src = prune(src, common)
        tgt = prune(tgt, common)


def reduce(d: TreeDiagram) -> TreeDiagram:
    """Remove matched pairs of exposed carets until none remain."""
    src, tgt = _reduce_nodes(d.src, d.tgt)
    if src is d.src and tgt is d.tgt:
        return d
    return _unchecked(d.p, src, tgt)


def is_reduced(d: TreeDiagram) -> bool:
    return not (exposed_carets(d.src) & exposed_carets(d.tgt))


def _refine(a: Node, b: Node, ia: int, ib: int, ga: dict, gb: dict) -> tuple[int, int]:
    # Walks two trees in lockstep; records subtrees of one that must be grafted
    # onto leaves of the other so that both become their common refinement.
    if a is None and b is None:
        return ia + 1, ib + 1
    if a is None:
        ga[ia] = b
        return ia + 1, ib + node_leaves(b)
    if b is None:
        gb[ib] = a
        return ia + node_leaves(a), ib + 1
    for ca, cb in zip(a, b):
        ia, ib = _refine(ca, cb, ia, ib, ga, gb)
    return ia, ib


def multiply(x: TreeDiagram, y: TreeDiagram) -> TreeDiagram:
    """The product ``x*y`` (``x`` acts first), reduced."""
    if x.p != y.p:
        raise ArityMismatch(f"cannot multiply elements of F({x.p}) and F({y.p})")
    gx: dict[int, Node] = {}
    gy: dict[int, Node] = {}
    _refine(x.tgt, y.src, 0, 0, gx, gy)
    src = graft(x.src, gx)
    tgt = graft(y.tgt, gy)
    src, tgt = _reduce_nodes(src, tgt)
    return _unchecked(x.p, src, tgt)


def invert(x: TreeDiagram) -> TreeDiagram:
    return _unchecked(x.p, x.tgt, x.src)


def equal(x: TreeDiagram, y: TreeDiagram) -> bool:
    if x.p != y.p:
        raise ArityMismatch(f"cannot compare elements of F({x.p}) and F({y.p})")
    a, b = reduce(x), reduce(y)
    return a.src == b.src and a.tgt == b.tgt


def power(x: TreeDiagram, n: int) -> TreeDiagram:
    base = x if n >= 0 else invert(x)
    out = identity_diagram(x.p)
    for _ in range(abs(n)):
        out = multiply(out, base)
    return out


def unreduce(d: TreeDiagram, leaf: int) -> TreeDiagram:
    """Insert a matched caret pair below leaf number ``leaf`` of both trees."""
    n = node_leaves(d.src)
    if not 0 <= leaf < n:
        raise DomainError(f"leaf {leaf} out of range 0..{n - 1}")
    small = (None,) * d.p
    return _unchecked(d.p, graft(d.src, {leaf: small}), graft(d.tgt, {leaf: small}))


def parse_diagram(text: str, p: int) -> TreeDiagram:
    """Parse ``SRC->TGT`` using the tree grammar for both halves."""
    parts = text.split("->")
    if len(parts) != 2:
        raise ParseError(f"diagram text must look like SRC->TGT, got {text!r}")
    src, tgt = (parse_tree(part, p) for part in parts)
    if src.leaf_count() != tgt.leaf_count():
        raise ParseError(f"source and target leaf counts differ in {text!r}")
    return TreeDiagram(p, src.node, tgt.node)


def diagram_to_dot(d: TreeDiagram, name: str = "diagram") -> str:
    """DOT text with both trees side by side; leaves numbered in order."""
    lines = [f"digraph {name} {{", "  rankdir=TB;"]

    def emit(node: Node, prefix: str) -> None:
        counter = [0]
        leaf_no = [0]

        def walk(n: Node) -> str:
            ident = f"{prefix}{counter[0]}"
            counter[0] += 1
            if n is None:
                lines.append(f'    {ident} [shape=plaintext, label="{leaf_no[0]}"];')
                leaf_no[0] += 1
            else:
                lines.append(f'    {ident} [shape=point];')
                for c in n:
                    child = walk(c)
                    lines.append(f"    {ident} -> {child};")
            return ident

        walk(node)

    for label, node, prefix in (("source", d.src, "s"), ("target", d.tgt, "t")):
        lines.append(f"  subgraph cluster_{label} {{")
        lines.append(f'    label="{label}";')
        emit(node, prefix)
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
