"""Randomized property suites behind ``fp verify``.

Each suite returns one :class:`PropertyResult` per property; a property
fails on its first counterexample.  Everything is driven by an explicit
``random.Random`` so runs are reproducible from a seed.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .diagrams import (
    TreeDiagram,
    equal,
    generator_diagram,
    identity_diagram,
    invert,
    multiply,
    unreduce,
)
from .metrics import LengthOracle, ball, metric_D, metric_N, metric_N2
from .morphisms import embed_dense, embed_power, embed_sparse, shift, shift_caret, stretch_factor
from .plmaps import (
    compose_maps,
    diagram_to_map,
    generator_map_unit,
    last_breakpoint,
    word_to_line_map,
)
from .trees import node_leaves
from .words import (
    NormalForm,
    Word,
    diagram_to_normal_form,
    normalize_word,
    normalize_word_steps,
    random_word,
    word_to_diagram,
)

SUITES = ("normalforms", "metrics", "plmaps", "embeddings", "shifts")


@dataclass
class PropertyResult:
    suite: str
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: Optional[str] = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, witness: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness()

    def to_dict(self) -> dict:
        data = asdict(self)
        data["passed"] = self.passed
        return data


# -- random material ------------------------------------------------------


def random_positive_word(p: int, length: int, max_index: int, rng: random.Random) -> Word:
    return Word(p, tuple((rng.randint(0, max_index), 1) for _ in range(length)))


def relator_instance(p: int, rng: random.Random, max_index: int = 6) -> Word:
    """A word equal to the identity: a defining relator, a conjugate of one, or x x^-1."""
    kind = rng.randrange(3)
    if kind == 0:
        a = rng.randint(0, max_index)
        return Word(p, ((a, 1), (a, -1))) if rng.random() < 0.5 else Word(p, ((a, -1), (a, 1)))
    i = rng.randint(0, max_index)
    j = rng.randint(i + 1, i + 1 + max_index)
    rel = Word(p, ((i, -1), (j, 1), (i, 1), (j + p - 1, -1)))
    if rng.random() < 0.5:
        rel = rel.inverse()
    if kind == 2:
        c = Word(p, ((rng.randint(0, max_index), rng.choice((1, -1))),))
        rel = c * rel * c.inverse()
    return rel


def equal_by_construction(w: Word, rng: random.Random, inserts: int = 2) -> Word:
    """Insert relator instances at random positions of the unit-letter word."""
    letters = list(Word(w.p, w.letters).unit_letters())
    for _ in range(inserts):
        at = rng.randint(0, len(letters))
        letters[at:at] = relator_instance(w.p, rng).unit_letters()
    return Word(w.p, tuple(letters))


def unreduce_randomly(d: TreeDiagram, rng: random.Random, times: int = 3) -> TreeDiagram:
    for _ in range(times):
        d = unreduce(d, rng.randrange(node_leaves(d.src)))
    return d


def _elements(p: int, n: int, rng: random.Random, length: int = 12, max_index: int = 6):
    for _ in range(n):
        w = random_word(p, rng.randint(0, length), max_index, rng)
        yield w, word_to_diagram(w)


# -- suites ---------------------------------------------------------------


def suite_normalforms(rng: random.Random, samples: int = 100) -> list[PropertyResult]:
    rt = PropertyResult("normalforms", "diagram <-> normal form round trip")
    uniq = PropertyResult("normalforms", "relator insertion leaves the normal form unchanged")
    unred = PropertyResult("normalforms", "unreduced diagrams give the same normal form")
    valid = PropertyResult("normalforms", "normal forms satisfy ordering and uniqueness conditions")
    steps = PropertyResult("normalforms", "rewriting steps bounded by L^2/2 + L")
    for p in (2, 3, 4, 5):
        for w, d in _elements(p, samples, rng):
            nf, count = normalize_word_steps(w)
            rt.check(diagram_to_normal_form(d) == nf, lambda: f"p={p} w={w}")
            valid.check(not nf.violations(), lambda: f"p={p} w={w} -> {nf}")
            n = len(w)
            steps.check(count <= n * n // 2 + n, lambda: f"p={p} w={w} took {count} steps")
            w2 = equal_by_construction(w, rng)
            uniq.check(normalize_word(w2) == nf, lambda: f"p={p} {w} vs {w2}")
            unred.check(
                diagram_to_normal_form(unreduce_randomly(d, rng)) == nf, lambda: f"p={p} w={w}"
            )
    return [rt, uniq, unred, valid, steps]


def length_sandwich(p: int, radius: int, workers: int = 1) -> PropertyResult:
    """D/(3(p-1)) <= |x| <= 3D on every element of the ball."""
    res = PropertyResult("metrics", f"length sandwich on ball({p}, {radius})")
    b = ball(p, radius, workers=workers)
    worst = Fraction(0)
    for x, r in b.elements():
        nf = diagram_to_normal_form(x)
        dd = metric_D(nf)
        res.check(
            Fraction(dd, 3 * (p - 1)) <= r <= 3 * dd, lambda: f"{nf}: |x|={r}, D={dd}"
        )
        if dd:
            worst = max(worst, Fraction(r, dd))
    res.extra["max_length_over_D"] = str(worst)
    res.extra["sphere_sizes"] = b.sphere_sizes
    return res


def counterexample_word(k: int) -> Word:
    """x_0 ... x_{k-1} x_k^2 x_{k+1}^-1 x_k^-1 ... x_0^-1 in F(2)."""
    letters = [(i, 1) for i in range(k)] + [(k, 2), (k + 1, -1)]
    letters += [(i, -1) for i in range(k, -1, -1)]
    return Word(2, tuple(letters))


def suite_metrics(rng: random.Random, samples: int = 100) -> list[PropertyResult]:
    caret_n = PropertyResult("metrics", "caret count equals N")
    sand = PropertyResult("metrics", "D/(4(p-1)) <= N <= D+1")
    binary_n = PropertyResult("metrics", "F(2): D/4 <= N <= D+1")
    positive_n = PropertyResult("metrics", "positive words: D/(2(p-1)) <= N <= D+1")
    positive_n2 = PropertyResult("metrics", "positive words: D/2 <= N2 <= D(p-1)+1")
    for p in (2, 3, 4):
        for w, d in _elements(p, samples, rng):
            nf = normalize_word(w)
            n, dd = metric_N(nf), metric_D(nf)
            caret_n.check(n == d.caret_count(), lambda: f"p={p} {nf}: N={n}")
            sand.check(Fraction(dd, 4 * (p - 1)) <= n <= dd + 1, lambda: f"p={p} {nf}")
            if p == 2:
                binary_n.check(Fraction(dd, 4) <= n <= dd + 1, lambda: f"{nf}")
    for p in (2, 3, 5):
        for _ in range(samples):
            nf = normalize_word(random_positive_word(p, rng.randint(1, 10), 6, rng))
            n, dd, n2 = metric_N(nf), metric_D(nf), metric_N2(nf)
            positive_n.check(Fraction(dd, 2 * (p - 1)) <= n <= dd + 1, lambda: f"p={p} {nf}")
            positive_n2.check(Fraction(dd, 2) <= n2 <= dd * (p - 1) + 1, lambda: f"p={p} {nf}")
    family = PropertyResult("metrics", "mixed-word family: breakpoints in unit square, N >= k")
    for k in range(1, 21):
        w = counterexample_word(k)
        f = word_to_line_map(w)
        inside = all(0 <= x <= 1 and 0 <= y <= 1 for x, y in f.breakpoints)
        n = metric_N(normalize_word(w))
        family.check(inside and n >= k, lambda: f"k={k}: N={n}, breakpoints={f.breakpoints}")
    return [caret_n, sand, binary_n, positive_n, positive_n2, family, length_sandwich(2, 6), length_sandwich(3, 3)]


def suite_plmaps(rng: random.Random, samples: int = 100) -> list[PropertyResult]:
    gens = PropertyResult("plmaps", "generator diagrams induce the generator maps")
    for p in range(2, 7):
        for i in range(2 * p - 1):
            gens.check(
                diagram_to_map(generator_diagram(p, i)) == generator_map_unit(p, i),
                lambda: f"p={p} i={i}",
            )
    binary_height = PropertyResult("plmaps", "F(2) positive: N = carets = last breakpoint height")
    for _ in range(samples):
        nf = normalize_word(random_positive_word(2, rng.randint(1, 10), 6, rng))
        lb = last_breakpoint(word_to_line_map(nf))
        n = metric_N(nf)
        binary_height.check(
            lb is not None and lb[1] == n == word_to_diagram(nf).caret_count(), lambda: f"{nf}"
        )
    positive_n2 = PropertyResult("plmaps", "positive words: N2 = last breakpoint height")
    for p in (3, 5):
        for _ in range(samples):
            nf = normalize_word(random_positive_word(p, rng.randint(1, 10), 6, rng))
            lb = last_breakpoint(word_to_line_map(nf))
            positive_n2.check(lb is not None and lb[1] == metric_N2(nf), lambda: f"p={p} {nf}")
    hom = PropertyResult("plmaps", "unit maps compose like diagrams")
    same = PropertyResult("plmaps", "line maps agree exactly when diagrams agree")
    struct = PropertyResult("plmaps", "breakpoints in Z[1/p], slopes powers of p")
    for p in (2, 3, 4):
        for w, x in _elements(p, samples, rng, length=8):
            w2 = equal_by_construction(w, rng, 1) if rng.random() < 0.5 else random_word(p, 8, 6, rng)
            y = word_to_diagram(w2)
            hom.check(
                compose_maps(diagram_to_map(x), diagram_to_map(y)) == diagram_to_map(multiply(x, y)),
                lambda: f"p={p} {w} * {w2}",
            )
            fw, fw2 = word_to_line_map(w), word_to_line_map(w2)
            same.check((fw == fw2) == equal(x, y), lambda: f"p={p} {w} vs {w2}")
            struct.check(
                not fw.validate() and not diagram_to_map(x).validate(), lambda: f"p={p} {w}"
            )
    return [gens, binary_height, positive_n2, hom, same, struct]


def homomorphism_check(
    name: str, embed: Callable[[TreeDiagram], TreeDiagram], p: int, rng: random.Random, samples: int
) -> PropertyResult:
    res = PropertyResult("embeddings", name)
    for _ in range(samples):
        (w1, x), (w2, y) = _elements(p, 2, rng, length=8, max_index=5)
        ok = equal(embed(multiply(x, y)), multiply(embed(x), embed(y))) and equal(
            embed(invert(x)), invert(embed(x))
        )
        res.check(ok, lambda: f"{w1}, {w2}")
    return res


def caret_bound_check(
    name: str,
    embed: Callable[[TreeDiagram], TreeDiagram],
    p: int,
    bound: Callable[[int, int], bool],
    rng: random.Random,
    samples: int,
) -> PropertyResult:
    res = PropertyResult("embeddings", name)
    for w, x in _elements(p, samples, rng):
        n, m = x.caret_count(), embed(x).caret_count()
        res.check(bound(n, m), lambda: f"{w}: N={n}, image N={m}")
    return res


def suite_embeddings(rng: random.Random, samples: int = 100) -> list[PropertyResult]:
    out = []
    for p, k in ((2, 2), (2, 3)):
        out.append(
            homomorphism_check(
                f"power F({p**k})->F({p}) is a homomorphism",
                lambda x, p=p, k=k: embed_power(x, p, k),
                p**k,
                rng,
                samples,
            )
        )
    for p, q in ((2, 3), (3, 5)):
        out.append(
            homomorphism_check(
                f"sparse F({p})->F({q}) is a homomorphism", lambda x, q=q: embed_sparse(x, q), p, rng, samples
            )
        )
    for q, p in ((4, 2), (3, 2), (5, 3)):
        out.append(
            homomorphism_check(
                f"dense F({q})->F({p}) is a homomorphism", lambda x, p=p: embed_dense(x, p), q, rng, samples
            )
        )
    for p, k in ((2, 2), (2, 3), (3, 2)):
        block = (p**k - 1) // (p - 1)
        out.append(
            caret_bound_check(
                f"power F({p**k})->F({p}): N <= N(i(x)) <= {block}N",
                lambda x, p=p, k=k: embed_power(x, p, k),
                p**k,
                lambda n, m, b=block: n <= m <= b * n,
                rng,
                samples,
            )
        )
    for p, q in ((2, 3), (3, 5), (2, 5)):
        out.append(
            caret_bound_check(
                f"sparse F({p})->F({q}) preserves caret count",
                lambda x, q=q: embed_sparse(x, q),
                p,
                lambda n, m: n == m,
                rng,
                samples,
            )
        )
    for q, p in ((4, 2), (3, 2), (5, 3)):
        d = stretch_factor(p, q)
        out.append(
            caret_bound_check(
                f"dense F({q})->F({p}): N <= N(j2(x)) <= {d}N",
                lambda x, p=p: embed_dense(x, p),
                q,
                lambda n, m, d=d: n <= m <= d * n,
                rng,
                samples,
            )
        )
    return out


def route_check(
    name: str,
    p: int,
    route_a: Callable[[TreeDiagram], TreeDiagram],
    route_b: Callable[[TreeDiagram], TreeDiagram],
    rng: random.Random,
    samples: int,
) -> PropertyResult:
    res = PropertyResult("shifts", name)
    for w, x in _elements(p, samples, rng, length=10, max_index=5):
        res.check(equal(route_a(x), route_b(x)), lambda: f"{w}")
    return res


def shift_diagram(d: TreeDiagram, k: int) -> TreeDiagram:
    """The k-th shift power through normal forms."""
    return word_to_diagram(shift(diagram_to_normal_form(d), k))


def suite_shifts(rng: random.Random, samples: int = 100) -> list[PropertyResult]:
    out = []
    for p in (2, 3, 4):
        x0 = generator_diagram(p, 0)
        out.append(
            route_check(
                f"F({p}): x0^-1 phi(x) x0 = phi^p(x)",
                p,
                lambda x, x0=x0: multiply(multiply(invert(x0), shift_diagram(x, 1)), x0),
                lambda x, p=p: shift_diagram(x, p),
                rng,
                samples,
            )
        )
        out.append(
            route_check(
                f"F({p}): caret shift equals phi^(p-1)",
                p,
                shift_caret,
                lambda x, p=p: shift_diagram(x, p - 1),
                rng,
                samples,
            )
        )
    for p, k in ((2, 2), (2, 3)):
        out.append(
            route_check(
                f"power F({p**k})->F({p}) commutes with shifts",
                p**k,
                lambda x, p=p, k=k: embed_power(shift_caret(x), p, k),
                lambda x, p=p, k=k: shift_diagram(embed_power(x, p, k), k * (p - 1)),
                rng,
                samples,
            )
        )
    for p, q in ((2, 3), (3, 5)):
        out.append(
            route_check(
                f"sparse F({p})->F({q}) commutes with shifts",
                p,
                lambda x, q=q: embed_sparse(shift_caret(x), q),
                lambda x, q=q: shift_caret(embed_sparse(x, q)),
                rng,
                samples,
            )
        )
    for q, p in ((4, 2), (3, 2), (5, 3)):
        d = stretch_factor(p, q)
        out.append(
            route_check(
                f"dense F({q})->F({p}) commutes with shifts",
                q,
                lambda x, p=p: embed_dense(shift_caret(x), p),
                lambda x, p=p, d=d: shift_diagram(embed_dense(x, p), d * (p - 1)),
                rng,
                samples,
            )
        )
    return out


_RUNNERS = {
    "normalforms": suite_normalforms,
    "metrics": suite_metrics,
    "plmaps": suite_plmaps,
    "embeddings": suite_embeddings,
    "shifts": suite_shifts,
}


def run_suite(name: str, seed: int = 0, samples: int = 100) -> list[PropertyResult]:
    """Run one suite (or ``all``) with a fresh generator seeded by ``seed``."""
    names: Iterable[str] = SUITES if name == "all" else (name,)
    results = []
    for suite in names:
        if suite not in _RUNNERS:
            raise KeyError(suite)
        results.extend(_RUNNERS[suite](random.Random(f"{seed}:{suite}"), samples))
    return results


# -- quasi-isometry spot check ------------------------------------------------


@dataclass
class DistortionReport:
    """Observed word lengths of ball elements and of their images."""

    pairs: list[tuple[int, int]]
    unresolved: int

    @property
    def max_ratio(self) -> Fraction:
        return max((Fraction(b, a) for a, b in self.pairs if a), default=Fraction(0))

    @property
    def min_ratio(self) -> Fraction:
        return min((Fraction(b, a) for a, b in self.pairs if a), default=Fraction(0))


def power_embedding_distortion(p: int, k: int, radius: int, cap: int = 40) -> DistortionReport:
    """Exact lengths of every x in the radius-``radius`` ball of F(p**k) and of i(x) in F(p)."""
    oracle = LengthOracle(p, warm_radius=10 if p == 2 else 5)
    pairs = []
    unresolved = 0
    for x, r in ball(p**k, radius).elements():
        found = oracle.length(embed_power(x, p, k), cap)
        if isinstance(found, int):
            pairs.append((r, found))
        else:
            unresolved += 1
    return DistortionReport(pairs, unresolved)
