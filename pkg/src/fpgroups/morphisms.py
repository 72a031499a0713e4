"""Embeddings between the groups F(p) and the shift endomorphisms.

All embeddings act caret by caret on both trees of a reduced diagram:

* ``embed_power``:  F(p**k) -> F(p), a p**k-caret becomes a complete p-ary
  block of depth k.
* ``embed_sparse``: F(p) -> F(q), x_i -> x_{d*i}; a p-caret becomes a
  q-caret with d - 1 new leaves in every gap.
* ``embed_dense``:  F(q) -> F(p), x_i -> x_i**d; a q-caret becomes a chain of
  d p-carets, hanging on right edges for right carets (the root counts as
  right) and on left edges otherwise.

Here ``q - 1 == d * (p - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagrams import TreeDiagram, _unchecked, is_reduced, reduce
from .errors import ArityError, DivisibilityError, DomainError, InternalError
from .trees import Node
from .words import NormalForm


@dataclass(frozen=True)
class EmbeddingSpec:
    """Which embedding, and between which arities.

    ``kind`` is one of ``power``, ``sparse``, ``dense``, ``general``;
    ``source`` and ``target`` are the arities of the two groups.
    """

    kind: str
    source: int
    target: int

    def __post_init__(self) -> None:
        if self.source < 2 or self.target < 2:
            raise DomainError("arities must be >= 2")
        if self.kind == "power":
            power_exponent(self.source, self.target)
        elif self.kind == "sparse":
            stretch_factor(self.source, self.target)
        elif self.kind == "dense":
            stretch_factor(self.target, self.source)
        elif self.kind != "general":
            raise DomainError(f"unknown embedding kind {self.kind!r}")

    @property
    def d(self) -> int:
        if self.kind == "sparse":
            return stretch_factor(self.source, self.target)
        if self.kind == "dense":
            return stretch_factor(self.target, self.source)
        raise DomainError(f"{self.kind} embeddings have no stretch factor")

    def __call__(self, x: TreeDiagram) -> TreeDiagram:
        if x.p != self.source:
            raise ArityError(f"expected an element of F({self.source}), got F({x.p})")
        if self.kind == "power":
            return embed_power(x, self.target, power_exponent(self.source, self.target))
        if self.kind == "sparse":
            return embed_sparse(x, self.target)
        if self.kind == "dense":
            return embed_dense(x, self.target)
        return embed_general(x, self.target)


def stretch_factor(p: int, q: int) -> int:
    """``d`` with ``q - 1 == d * (p - 1)``."""
    d, rem = divmod(q - 1, p - 1)
    if rem or d < 1:
        raise DivisibilityError(f"{q} - 1 is not a positive multiple of {p} - 1")
    return d


def power_exponent(big: int, p: int) -> int:
    """``k`` with ``big == p**k``, k >= 1."""
    k, value = 0, 1
    while value < big:
        value *= p
        k += 1
    if value != big or k < 1:
        raise ArityError(f"{big} is not a positive power of {p}")
    return k


def _fill(depth: int, p: int, leaves: Iterator[Node]) -> Node:
    if depth == 0:
        return next(leaves)
    return tuple(_fill(depth - 1, p, leaves) for _ in range(p))


def embed_power(x: TreeDiagram, p: int, k: int) -> TreeDiagram:
    """Natural embedding F(p**k) -> F(p)."""
    if k < 1 or x.p != p**k:
        raise ArityError(f"embed_power expects F({p}**{k}), got F({x.p})")

    def walk(n: Node) -> Node:
        if n is None:
            return None
        return _fill(k, p, iter([walk(c) for c in n]))

    return reduce(_unchecked(p, walk(x.src), walk(x.tgt)))


def embed_sparse(x: TreeDiagram, q: int) -> TreeDiagram:
    """F(p) -> F(q), x_i -> x_{d i}; reduced input stays reduced."""
    p = x.p
    d = stretch_factor(p, q)

    def walk(n: Node) -> Node:
        if n is None:
            return None
        out: list[Node] = [None] * q
        for c, child in enumerate(n):
            out[c * d] = walk(child)
        return tuple(out)

    y = _unchecked(q, walk(x.src), walk(x.tgt))
    if is_reduced(x) and not is_reduced(y):
        raise InternalError("sparse embedding produced a reducible diagram")
    return y


def _left_chain(kids: list[Node], p: int, d: int) -> Node:
    # Each lower caret hangs from the left edge of the one above.
    node: Node = tuple(kids[:p])
    pos = p
    for _ in range(d - 1):
        node = (node,) + tuple(kids[pos : pos + p - 1])
        pos += p - 1
    return node


def _right_chain(kids: list[Node], p: int, d: int) -> Node:
    # Each lower caret hangs from the right edge of the one above.
    node: Node = tuple(kids[(d - 1) * (p - 1) :])
    for t in range(d - 2, -1, -1):
        node = tuple(kids[t * (p - 1) : (t + 1) * (p - 1)]) + (node,)
    return node


def embed_dense(x: TreeDiagram, p: int) -> TreeDiagram:
    """F(q) -> F(p), x_i -> x_i**d."""
    q = x.p
    d = stretch_factor(p, q)

    def walk(n: Node, right: bool) -> Node:
        if n is None:
            return None
        kids = [walk(c, right and k == q - 1) for k, c in enumerate(n)]
        return _right_chain(kids, p, d) if right else _left_chain(kids, p, d)

    return reduce(_unchecked(p, walk(x.src, True), walk(x.tgt, True)))


def embed_general(x: TreeDiagram, q: int) -> TreeDiagram:
    """F(p) -> F(q) for any p, q, passing through F(2)."""
    y = x if x.p == 2 else embed_dense(x, 2)
    return y if q == 2 else embed_sparse(y, q)


def shift(nf: NormalForm, k: int = 1) -> NormalForm:
    """The k-th power of the shift x_i -> x_{i+1}."""
    if k < 0:
        raise DomainError(f"shift power must be >= 0, got {k}")
    return NormalForm(
        nf.p,
        tuple((i + k, r) for i, r in nf.positive),
        tuple((j + k, s) for j, s in nf.negative),
    )


def shift_caret(d: TreeDiagram) -> TreeDiagram:
    """The shift to the power p - 1: hang both trees from a new root's last child."""
    pad = (None,) * (d.p - 1)
    return reduce(_unchecked(d.p, pad + (d.src,), pad + (d.tgt,)))
