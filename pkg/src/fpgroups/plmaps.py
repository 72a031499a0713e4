"""Exact piecewise-linear homeomorphisms of [0, 1] and of the real line.

A map is stored as its normalized breakpoint list: only points where the
slope actually changes.  Unit-interval maps fix 0 and 1, which are not
listed.  Real-line maps are the identity left of the first breakpoint and a
translation ``t -> t + tail_offset`` right of the last one.
"""

from __future__ import annotations

import bisect
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .diagrams import TreeDiagram
from .errors import DomainError, VariantMismatch
from .trees import leaf_intervals
from .words import NormalForm, Word

UNIT = "unit"
LINE = "line"

Point = tuple[Fraction, Fraction]
Number = Union[int, Fraction, str]


def _slope(a: Point, b: Point) -> Fraction:
    return (b[1] - a[1]) / (b[0] - a[0])


def _normalize(points: Sequence[Point], lead: Fraction, trail: Fraction) -> tuple[Point, ...]:
    """Sort, dedupe and drop points whose two adjacent slopes agree.

    ``lead`` and ``trail`` are the slopes before the first and after the last
    point.  All points lie on one graph, so dropping collinear ones never
    changes the remaining slopes.
    """
    pts = sorted(set(points))
    out = []
    for k, cur in enumerate(pts):
        incoming = _slope(pts[k - 1], cur) if k > 0 else lead
        outgoing = _slope(cur, pts[k + 1]) if k + 1 < len(pts) else trail
        if incoming != outgoing:
            out.append(cur)
    return tuple(out)


@dataclass(frozen=True)
class PLMap:
    variant: str
    p: int
    breakpoints: tuple[Point, ...] = ()
    tail_offset: Fraction = Fraction(0)

    def _full(self) -> list[Point]:
        if self.variant == UNIT:
            return [(Fraction(0), Fraction(0)), *self.breakpoints, (Fraction(1), Fraction(1))]
        return list(self.breakpoints)

    def __call__(self, t: Number) -> Fraction:
        return _evaluate(self._full(), Fraction(t), self.variant, self.tail_offset)

    def inverse(self) -> PLMap:
        pts = tuple((y, x) for x, y in self.breakpoints)
        return PLMap(self.variant, self.p, pts, -self.tail_offset)

    def slopes(self) -> list[Fraction]:
        """Slopes of the pieces from left to right (tails included for LINE)."""
        full = self._full()
        inner = [(b[1] - a[1]) / (b[0] - a[0]) for a, b in zip(full, full[1:])]
        if self.variant == LINE:
            return [Fraction(1)] + inner + [Fraction(1)] if full else [Fraction(1)]
        return inner

    def is_identity(self) -> bool:
        return not self.breakpoints and self.tail_offset == 0

    def validate(self) -> list[str]:
        """Structural problems: monotonicity, slopes powers of p, Z[1/p] points."""
        problems = []
        full = self._full()
        for a, b in zip(full, full[1:]):
            if not (a[0] < b[0] and a[1] < b[1]):
                problems.append(f"not strictly increasing between {a} and {b}")
        for s in self.slopes():
            if not _is_power(s, self.p):
                problems.append(f"slope {s} is not a power of {self.p}")
        for x, y in self.breakpoints:
            for v in (x, y):
                if not in_dyadic_ring(v, self.p):
                    problems.append(f"breakpoint coordinate {v} not in Z[1/{self.p}]")
        slopes = self.slopes()
        if any(a == b for a, b in zip(slopes, slopes[1:])):
            problems.append("map is not normalized")
        if self.variant == LINE and self.breakpoints:
            x, y = self.breakpoints[-1]
            if y - x != self.tail_offset:
                problems.append("tail offset disagrees with the last breakpoint")
        return problems

    def to_json(self) -> str:
        data: dict = {
            "variant": self.variant,
            "p": self.p,
            "breakpoints": [[str(x), str(y)] for x, y in self.breakpoints],
        }
        if self.variant == LINE:
            data["tail_offset"] = str(self.tail_offset)
        return json.dumps(data)

    def to_csv(self) -> str:
        rows = ["x,y"] + [f"{x},{y}" for x, y in self._full()]
        return "\n".join(rows) + "\n"


def _is_power(value: Fraction, p: int) -> bool:
    """True when ``value`` is p**k for some integer k (possibly negative)."""
    value = Fraction(value)
    if value <= 0:
        return False
    num, den = value.numerator, value.denominator
    if min(num, den) != 1:
        return False
    n = max(num, den)
    while n % p == 0:
        n //= p
    return n == 1


def in_dyadic_ring(value: Fraction, p: int) -> bool:
    """Membership in Z[1/p]: the denominator divides a power of p."""
    den = Fraction(value).denominator
    g = math.gcd(den, p)
    while g > 1:
        while den % g == 0:
            den //= g
        g = math.gcd(den, p)
    return den == 1


def _evaluate(full: list[Point], t: Fraction, variant: str, offset: Fraction) -> Fraction:
    if variant == UNIT and not (0 <= t <= 1):
        raise DomainError(f"{t} is outside [0, 1]")
    if not full:
        return t
    xs = [x for x, _ in full]
    if t <= xs[0]:
        return t
    if t >= xs[-1]:
        return t - xs[-1] + full[-1][1]
    k = bisect.bisect_right(xs, t) - 1
    (x0, y0), (x1, y1) = full[k], full[k + 1]
    return y0 + (t - x0) * (y1 - y0) / (x1 - x0)


def _make(variant: str, p: int, points: Sequence[Point], offset: Fraction = Fraction(0)) -> PLMap:
    if variant == UNIT:
        ends = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))]
        full = _normalize([*points, *ends], Fraction(0), Fraction(0))
        inner = tuple(pt for pt in full if 0 < pt[0] < 1)
        return PLMap(UNIT, p, inner)
    return PLMap(LINE, p, _normalize(points, Fraction(1), Fraction(1)), offset)


def identity_map(p: int, variant: str = UNIT) -> PLMap:
    return PLMap(variant, p)


def generator_map_unit(p: int, i: int) -> PLMap:
    """The homeomorphism x_i of [0, 1]."""
    if i < 0:
        raise DomainError(f"generator index must be >= 0, got {i}")
    j, k = divmod(i, p - 1)
    a = Fraction(k, p)
    b = Fraction((p - 1) * (k + 1), p * p)
    c = Fraction(k + 1, p)
    base = [(a, a), (b, p * b - Fraction(k * (p - 1), p)), (c, (c + p - 1) / p)]
    if j:
        scale = Fraction(1, p**j)
        lo = 1 - scale
        base = [(lo, lo)] + [(lo + scale * x, lo + scale * y) for x, y in base]
    return _make(UNIT, p, base)


def generator_map_line(p: int, i: int) -> PLMap:
    """The homeomorphism f_i of the real line: slope p on [i, i + 1]."""
    if i < 0:
        raise DomainError(f"generator index must be >= 0, got {i}")
    return PLMap(LINE, p, ((Fraction(i), Fraction(i)), (Fraction(i + 1), Fraction(i + p))), Fraction(p - 1))


def diagram_to_map(d: TreeDiagram) -> PLMap:
    src = leaf_intervals(d.source)
    tgt = leaf_intervals(d.target)
    return _make(UNIT, d.p, [(s.lo, t.lo) for s, t in zip(src, tgt)])


def compose_maps(f: PLMap, g: PLMap) -> PLMap:
    """``f`` followed by ``g``; the map of the product ``x*y`` is ``compose(x, y)``."""
    if f.variant != g.variant:
        raise VariantMismatch(f"cannot compose {f.variant} and {g.variant} maps")
    if f.p != g.p:
        raise DomainError(f"maps over F({f.p}) and F({g.p})")
    finv = f.inverse()
    xs = {x for x, _ in f.breakpoints}
    xs.update(finv(x) for x, _ in g.breakpoints)
    points = [(x, g(f(x))) for x in xs]
    return _make(f.variant, f.p, points, f.tail_offset + g.tail_offset)


def word_to_line_map(w: Union[Word, NormalForm]) -> PLMap:
    if isinstance(w, NormalForm):
        w = w.to_word()
    out = identity_map(w.p, LINE)
    for i, e in w.letters:
        g = generator_map_line(w.p, i)
        if e < 0:
            g = g.inverse()
        for _ in range(abs(e)):
            out = compose_maps(out, g)
    return out


def word_to_unit_map(w: Union[Word, NormalForm]) -> PLMap:
    if isinstance(w, NormalForm):
        w = w.to_word()
    out = identity_map(w.p, UNIT)
    for i, e in w.letters:
        g = generator_map_unit(w.p, i)
        if e < 0:
            g = g.inverse()
        for _ in range(abs(e)):
            out = compose_maps(out, g)
    return out


def last_breakpoint(f: PLMap) -> Optional[Point]:
    if f.variant != LINE:
        raise VariantMismatch("last_breakpoint needs a real-line map")
    return f.breakpoints[-1] if f.breakpoints else None
