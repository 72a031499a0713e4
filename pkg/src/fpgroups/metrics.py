"""Length estimates read off the normal form, and exact word length by BFS.

Exact lengths are taken with respect to the finite generating set
``x_0, ..., x_{p-1}`` and their inverses.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator, Optional, Union

from .diagrams import TreeDiagram, generator_diagram, identity_diagram, invert, multiply, reduce
from .errors import DomainError, ResourceError
from .words import NormalForm, diagram_to_normal_form, word_to_diagram

DEFAULT_MAX_STATES = 5_000_000
MAX_STATES_ENV = "FP_MAX_STATES"


def max_states_default() -> int:
    value = os.environ.get(MAX_STATES_ENV)
    return int(value) if value else DEFAULT_MAX_STATES


@dataclass(frozen=True)
class CapExceeded:
    """Returned by :func:`exact_length` when the length is above ``cap``."""

    cap: int

    def __str__(self) -> str:
        return "cap exceeded"


def metric_D(nf: NormalForm) -> int:
    """Exponent mass plus the largest positive and the largest negative index."""
    d = nf.letter_count()
    if nf.positive:
        d += nf.positive[-1][0]
    if nf.negative:
        d += nf.negative[-1][0]
    return d


def _tail_max(part, weight) -> int:
    best = 0
    tail = 0
    for index, exp in reversed(part):
        tail += exp
        best = max(best, weight(index) + tail + 1)
    return best


def metric_N(nf: NormalForm) -> int:
    """Caret count of the reduced diagram, computed from the normal form."""
    q = nf.p - 1
    return max(
        _tail_max(nf.positive, lambda i: i // q),
        _tail_max(nf.negative, lambda j: j // q),
    )


def metric_N2(nf: NormalForm) -> int:
    """Height of the last breakpoint of the real-line map of a positive element."""
    if nf.negative:
        raise DomainError("metric_N2 is only defined for positive normal forms")
    best = 0
    tail = 0
    for index, exp in reversed(nf.positive):
        tail += exp
        best = max(best, index + (nf.p - 1) * tail + 1)
    return best


def finite_generators(p: int) -> list[TreeDiagram]:
    """x_0, x_0^-1, x_1, x_1^-1, ..., x_{p-1}^-1 in that order."""
    out = []
    for i in range(p):
        g = generator_diagram(p, i)
        out.extend((g, invert(g)))
    return out


class Ball:
    """Breadth-first enumeration of the Cayley ball of F(p) around the identity.

    Elements are stored by the canonical key of their reduced diagram.
    Sphere ``r`` is listed in a deterministic order that does not depend on
    the number of worker threads.
    """

    def __init__(self, p: int, max_states: Optional[int] = None, workers: int = 1):
        if p < 2:
            raise DomainError(f"arity must be >= 2, got {p}")
        self.p = p
        self.max_states = max_states_default() if max_states is None else max_states
        self.workers = max(1, workers)
        self._gens = finite_generators(p)
        e = identity_diagram(p)
        self.lengths: dict[str, int] = {e.key(): 0}
        self.spheres: list[list[TreeDiagram]] = [[e]]

    @property
    def radius(self) -> int:
        return len(self.spheres) - 1

    @property
    def sphere_sizes(self) -> list[int]:
        return [len(s) for s in self.spheres]

    def __len__(self) -> int:
        return len(self.lengths)

    def _expand(self, chunk: list[TreeDiagram]) -> list[TreeDiagram]:
        return [multiply(x, g) for x in chunk for g in self._gens]

    def grow(self) -> list[TreeDiagram]:
        """Add the next sphere and return it."""
        frontier = self.spheres[-1]
        if self.workers == 1 or len(frontier) < 64:
            batches = [self._expand(frontier)]
        else:
            size = -(-len(frontier) // self.workers)
            chunks = [frontier[k : k + size] for k in range(0, len(frontier), size)]
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                batches = list(pool.map(self._expand, chunks))
        r = len(self.spheres)
        sphere: list[TreeDiagram] = []
        for batch in batches:
            for y in batch:
                k = y.key()
                if k not in self.lengths:
                    if len(self.lengths) >= self.max_states:
                        raise ResourceError(
                            f"ball of F({self.p}) exceeds {self.max_states} states at radius {r}"
                        )
                    self.lengths[k] = r
                    sphere.append(y)
        self.spheres.append(sphere)
        return sphere

    def grow_to(self, radius: int) -> Ball:
        while self.radius < radius:
            self.grow()
        return self

    def length_of(self, x: TreeDiagram) -> Optional[int]:
        return self.lengths.get(reduce(x).key())

    def elements(self) -> Iterator[tuple[TreeDiagram, int]]:
        for r, sphere in enumerate(self.spheres):
            for x in sphere:
                yield x, r


def ball(p: int, radius: int, max_states: Optional[int] = None, workers: int = 1) -> Ball:
    """The ball of the given radius; ``.sphere_sizes`` lists |S(0)|, ..., |S(radius)|."""
    if radius < 0:
        raise DomainError(f"radius must be >= 0, got {radius}")
    return Ball(p, max_states=max_states, workers=workers).grow_to(radius)


class LengthOracle:
    """Exact word lengths in F(p) by meeting in the middle.

    A ball around the identity is kept between queries and grown on demand;
    for each query a second ball is grown around the element.  Whichever of
    the two has the smaller outer sphere grows next.  Both grow by right
    multiplication, so a common element ``u == x*v`` gives ``x == u*v^-1``
    and the first meeting already realizes the distance.
    """

    def __init__(self, p: int, max_states: Optional[int] = None, warm_radius: int = 0):
        self.max_states = max_states_default() if max_states is None else max_states
        self.ball = Ball(p, max_states=self.max_states).grow_to(warm_radius)
        self.p = p

    def length(self, x: TreeDiagram, cap: int) -> Union[int, CapExceeded]:
        if cap < 0:
            raise DomainError(f"cap must be >= 0, got {cap}")
        if x.p != self.p:
            raise DomainError(f"oracle for F({self.p}) got an element of F({x.p})")
        x = reduce(x)
        near = self.ball.lengths
        if x.key() in near:
            found = near[x.key()]
            return found if found <= cap else CapExceeded(cap)
        gens = self.ball._gens
        seen = {x.key(): 0}
        frontier = [x]
        t = 0
        while self.ball.radius + t < cap:
            grow_ball = len(self.ball.spheres[-1]) <= len(frontier)
            if grow_ball:
                if len(self.ball) + len(seen) > self.max_states:
                    raise ResourceError(f"length search exceeds {self.max_states} states")
                r = self.ball.radius + 1
                hits = [r + seen[y.key()] for y in self.ball.grow() if y.key() in seen]
            else:
                t += 1
                nxt = []
                hits = []
                for y in frontier:
                    for g in gens:
                        z = multiply(y, g)
                        k = z.key()
                        if k in seen:
                            continue
                        seen[k] = t
                        nxt.append(z)
                        if k in near:
                            hits.append(t + near[k])
                if len(self.ball) + len(seen) > self.max_states:
                    raise ResourceError(f"length search exceeds {self.max_states} states")
                frontier = nxt
            if hits:
                return min(hits)
        return CapExceeded(cap)


def exact_length(
    x: TreeDiagram, cap: int, max_states: Optional[int] = None
) -> Union[int, CapExceeded]:
    """Word length of ``x`` over x_0..x_{p-1}, or :class:`CapExceeded` above ``cap``."""
    return LengthOracle(x.p, max_states=max_states).length(x, cap)


@dataclass(frozen=True)
class MetricReport:
    p: int
    D: int
    N: int
    N2: Optional[int]
    caret_count: int
    exact_length: Union[int, str, None] = None

    def to_json(self) -> str:
        data = asdict(self)
        if data["exact_length"] is None:
            del data["exact_length"]
        return json.dumps(data, sort_keys=False)


def metric_report(
    x: Union[TreeDiagram, NormalForm], exact_cap: Optional[int] = None
) -> MetricReport:
    if isinstance(x, NormalForm):
        nf, d = x, word_to_diagram(x)
    else:
        d = reduce(x)
        nf = diagram_to_normal_form(d)
    length: Union[int, str, None] = None
    if exact_cap is not None:
        found = exact_length(d, exact_cap)
        length = str(found) if isinstance(found, CapExceeded) else found
    return MetricReport(
        p=nf.p,
        D=metric_D(nf),
        N=metric_N(nf),
        N2=metric_N2(nf) if nf.is_positive() else None,
        caret_count=d.caret_count(),
        exact_length=length,
    )
