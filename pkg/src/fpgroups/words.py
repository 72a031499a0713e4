"""Words in the generators x_0, x_1, ... and the unique normal form.

The normal form of an element of F(p) is

    x_{i_1}^{r_1} ... x_{i_n}^{r_n} x_{j_m}^{-s_m} ... x_{j_1}^{-s_1}

with ``i_1 < ... < i_n``, ``j_1 < ... < j_m`` and ``i_n != j_m``; it is unique
once every index occurring with both signs is accompanied by some generator
with index in ``i+1 .. i+p-1``.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .diagrams import (
    TreeDiagram,
    generator_diagram,
    identity_diagram,
    invert,
    multiply,
    reduce,
)
from .errors import DomainError, InternalError, ParseError
from .trees import Node, node_carets, spine

Letter = tuple[int, int]


def _merge(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for index, exp in letters:
        if index < 0:
            raise DomainError(f"generator index must be >= 0, got {index}")
        if exp == 0:
            continue
        if out and out[-1][0] == index:
            total = out[-1][1] + exp
            out.pop()
            if total:
                out.append((index, total))
        else:
            out.append((index, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; adjacent powers of one generator are merged."""

    p: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.p < 2:
            raise DomainError(f"arity must be >= 2, got {self.p}")
        object.__setattr__(self, "letters", _merge(self.letters))

    def __mul__(self, other: Word) -> Word:
        if other.p != self.p:
            raise DomainError(f"words over F({self.p}) and F({other.p})")
        return Word(self.p, self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(self.p, tuple((i, -e) for i, e in reversed(self.letters)))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def unit_letters(self) -> list[Letter]:
        """Expand into letters with exponent +1 or -1."""
        out = []
        for i, e in self.letters:
            sign = 1 if e > 0 else -1
            out.extend([(i, sign)] * abs(e))
        return out

    def __str__(self) -> str:
        return format_letters(self.letters)


def format_letters(letters: Sequence[Letter]) -> str:
    if not letters:
        return "e"
    return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in letters)


_TOKEN = re.compile(r"x(-?\d+)(?:\^(-?\d+))?")


def parse_word(text: str, p: int) -> Word:
    """Parse ``x3^-2*x0 x1`` style text; ``e`` is the empty word."""
    stripped = text.strip()
    if stripped in ("e", ""):
        if stripped == "":
            raise ParseError("empty word text (use 'e' for the identity)")
        return Word(p)
    letters = []
    for token in re.split(r"[\s*]+", stripped):
        if not token:
            continue
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise ParseError(f"bad letter {token!r} in {text!r}")
        index = int(m.group(1))
        if index < 0:
            raise DomainError(f"negative generator index in {token!r}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letters.append((index, exp))
    return Word(p, tuple(letters))


@dataclass(frozen=True)
class NormalForm:
    """Positive part ``((i_k, r_k), ...)`` and negative part ``((j_l, s_l), ...)``.

    Both parts are stored with ascending indices and positive exponents; the
    negative part is read right to left in the word.
    """

    p: int
    positive: tuple[Letter, ...] = ()
    negative: tuple[Letter, ...] = ()

    def is_identity(self) -> bool:
        return not self.positive and not self.negative

    def is_positive(self) -> bool:
        return not self.negative

    def to_word(self) -> Word:
        neg = tuple((j, -s) for j, s in reversed(self.negative))
        return Word(self.p, self.positive + neg)

    def letter_count(self) -> int:
        return sum(r for _, r in self.positive) + sum(s for _, s in self.negative)

    def violations(self) -> list[str]:
        """Structural problems; empty for a genuine normal form."""
        problems = []
        for name, part in (("positive", self.positive), ("negative", self.negative)):
            idx = [i for i, _ in part]
            if any(a >= b for a, b in zip(idx, idx[1:])):
                problems.append(f"{name} indices not strictly increasing: {idx}")
            if any(e < 1 for _, e in part):
                problems.append(f"{name} part has non-positive exponent")
            if any(i < 0 for i in idx):
                problems.append(f"{name} part has negative index")
        if self.positive and self.negative and self.positive[-1][0] == self.negative[-1][0]:
            problems.append("last positive and last negative index coincide")
        bad = _uniqueness_violations(self.p, self.positive, self.negative)
        if bad:
            problems.append(f"uniqueness condition fails at indices {bad}")
        return problems

    def __str__(self) -> str:
        return str(self.to_word())


def _uniqueness_violations(p: int, pos: Sequence[Letter], neg: Sequence[Letter]) -> list[int]:
    present = {i for i, _ in pos} | {j for j, _ in neg}
    both = sorted({i for i, _ in pos} & {j for j, _ in neg})
    return [i for i in both if not any(i + k in present for k in range(1, p))]


def _rewrite(p: int, letters: list[Letter]) -> tuple[list[Letter], int]:
    """Apply the ordering rules leftmost-first until none applies.

    Result: positive letters with nondecreasing indices followed by negative
    letters with nonincreasing indices, with no ``x_i x_i^-1`` in between.
    """
    shift = p - 1
    w = list(letters)
    steps = 0
    k = 0
    while k < len(w) - 1:
        (a, ea), (b, eb) = w[k], w[k + 1]
        new: list[Letter] | None = None
        if ea > 0 and eb > 0:
            if a > b:
                new = [(b, 1), (a + shift, 1)]
        elif ea > 0 and eb < 0:
            if a == b:
                new = []
        elif ea < 0 and eb < 0:
            if a < b:
                new = [(b + shift, -1), (a, -1)]
        else:  # x_a^-1 x_b
            if a == b:
                new = []
            elif a < b:
                new = [(b + shift, 1), (a, -1)]
            else:
                new = [(b, 1), (a + shift, -1)]
        if new is None:
            k += 1
            continue
        w[k : k + 2] = new
        steps += 1
        k = max(k - 1, 0)
    return w, steps


def _runs(letters: Iterable[int]) -> tuple[Letter, ...]:
    counts = Counter(letters)
    return tuple(sorted(counts.items()))


def _enforce_uniqueness(p: int, pos: dict[int, int], neg: dict[int, int]) -> int:
    # Replace x_i * phi^p(y) * x_i^-1 by phi(y), smallest offending i first.
    steps = 0
    while True:
        bad = _uniqueness_violations(p, sorted(pos.items()), sorted(neg.items()))
        if not bad:
            return steps
        i = bad[0]
        for part in (pos, neg):
            part[i] -= 1
            if part[i] == 0:
                del part[i]
        for part in (pos, neg):
            moved = {k - (p - 1) if k > i else k: v for k, v in part.items()}
            part.clear()
            part.update(moved)
        steps += 1


def normalize_word_steps(w: Union[Word, NormalForm]) -> tuple[NormalForm, int]:
    """Normal form of ``w`` together with the number of rewriting steps used."""
    if isinstance(w, NormalForm):
        w = w.to_word()
    letters, steps = _rewrite(w.p, w.unit_letters())
    pos = dict(_runs(i for i, e in letters if e > 0))
    neg = dict(_runs(i for i, e in letters if e < 0))
    steps += _enforce_uniqueness(w.p, pos, neg)
    nf = NormalForm(w.p, tuple(sorted(pos.items())), tuple(sorted(neg.items())))
    return nf, steps


def normalize_word(w: Union[Word, NormalForm]) -> NormalForm:
    return normalize_word_steps(w)[0]


@lru_cache(maxsize=4096)
def _generator(p: int, i: int) -> TreeDiagram:
    return generator_diagram(p, i)


def word_to_diagram(w: Union[Word, NormalForm]) -> TreeDiagram:
    """Reduced diagram of the product of the word's letters."""
    if isinstance(w, NormalForm):
        w = w.to_word()
    d = identity_diagram(w.p)
    for i, e in w.letters:
        g = _generator(w.p, i)
        if e < 0:
            g = invert(g)
        for _ in range(abs(e)):
            d = multiply(d, g)
    return d


def _peel(y: TreeDiagram) -> list[int]:
    # Strip a caret-reducing generator off the right end until nothing is left.
    p = y.p
    letters: list[int] = []
    while not y.is_identity():
        c = y.caret_count()
        for i in range((c - 1) * (p - 1) + 1):
            z = multiply(y, invert(_generator(p, i)))
            if z.caret_count() < c:
                break
        else:
            raise InternalError(f"no caret-reducing generator for {y.key()}")
        letters.append(i)
        y = z
    letters.reverse()
    return letters


def _leaf_exponents(node: Node, p: int) -> list[int]:
    # Every caret off the right spine contributes one x_k, k its first leaf.
    out: list[int] = []
    counter = [0]

    def walk(n: Node, on_spine: bool) -> None:
        if n is None:
            counter[0] += 1
            return
        if not on_spine:
            out.append(counter[0])
        for k, c in enumerate(n):
            walk(c, on_spine and k == p - 1)

    walk(node, True)
    return out


def diagram_to_normal_form(d: TreeDiagram, method: str = "leaves") -> NormalForm:
    """Normal form of the element represented by ``d``.

    The element is factored as ``(S, R) * (T, R)^-1`` with ``R`` the all-right
    tree, each positive factor is written as a positive word, and the quotient
    is normalized.  ``method="peel"`` finds the positive words by repeatedly
    dividing off a caret-reducing generator; ``method="leaves"`` reads them
    off the source trees directly.
    """
    d = reduce(d)
    if method == "leaves":
        top = _leaf_exponents(d.src, d.p)
        bottom = _leaf_exponents(d.tgt, d.p)
    elif method == "peel":
        r = spine(d.p, node_carets(d.src))
        top = _peel(reduce(TreeDiagram(d.p, d.src, r)))
        bottom = _peel(reduce(TreeDiagram(d.p, d.tgt, r)))
    else:
        raise DomainError(f"unknown method {method!r}")
    letters = [(i, 1) for i in top] + [(i, -1) for i in reversed(bottom)]
    return normalize_word(Word(d.p, tuple(letters)))


def random_word(p: int, length: int, max_index: int, rng: random.Random) -> Word:
    letters = [(rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(length)]
    return Word(p, tuple(letters))


def random_element(p: int, length: int, max_index: int, seed: int) -> NormalForm:
    """Normal form of a uniformly random word; deterministic in ``seed``."""
    if length < 0 or max_index < 0:
        raise DomainError("length and max_index must be >= 0")
    return normalize_word(random_word(p, length, max_index, random.Random(seed)))
