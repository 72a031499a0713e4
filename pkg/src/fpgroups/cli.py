"""``fp``: command-line front end for the F(p) toolkit.

Elements are read as words (``x0^2*x1^-1``, ``e`` for the identity) or as
tree diagrams (``SRC->TGT`` in the bracket grammar); text containing ``->``
is taken as a diagram unless ``--input`` says otherwise.

Exit codes: 0 ok, 1 parse or usage error, 2 domain error, 3 cap or
resource guard hit, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .diagrams import TreeDiagram, diagram_to_dot, parse_diagram, reduce
from .errors import DomainError, FPError, InternalError, ParseError, ResourceError
from .metrics import MAX_STATES_ENV, CapExceeded, ball, exact_length, metric_report
from .morphisms import EmbeddingSpec, shift, shift_caret
from .plmaps import LINE, UNIT, diagram_to_map, word_to_line_map
from .trees import tree_to_dot
from .verify import SUITES, run_suite
from .words import NormalForm, diagram_to_normal_form, normalize_word, parse_word, word_to_diagram

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_CAP = 3
EXIT_VERIFY = 4

DEFAULT_SEED = 0


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the parse-error code instead of argparse's 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


@dataclass
class CliConfig:
    p: int = 2
    q: Optional[int] = None
    input: str = "auto"
    output: str = "text"
    cap: Optional[int] = None
    max_states: Optional[int] = None
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.p < 2 or (self.q is not None and self.q < 2):
            raise DomainError("arities must be >= 2")
        if self.cap is not None and self.cap < 0:
            raise DomainError("cap must be >= 0")
        if self.max_states is not None and self.max_states <= 0:
            raise DomainError("--max-states must be positive")


def read_element(text: str, p: int, mode: str = "auto") -> tuple[NormalForm, TreeDiagram]:
    """Parse ``text`` as a word or diagram over F(p); return both representations."""
    if mode == "diagram" or (mode == "auto" and "->" in text):
        d = reduce(parse_diagram(text, p))
        return diagram_to_normal_form(d), d
    nf = normalize_word(parse_word(text, p))
    return nf, word_to_diagram(nf)


def _emit(nf: NormalForm, d: TreeDiagram, output: str) -> str:
    if output == "diagram":
        return d.key()
    if output == "dot":
        return diagram_to_dot(d).rstrip("\n")
    if output == "json":
        return json.dumps(
            {
                "p": nf.p,
                "normal_form": str(nf),
                "positive": [list(t) for t in nf.positive],
                "negative": [list(t) for t in nf.negative],
                "diagram": d.key(),
            }
        )
    return str(nf)


def cmd_normalize(args: argparse.Namespace) -> int:
    nf, d = read_element(args.element, args.p, args.input)
    print(_emit(nf, d, args.output))
    return EXIT_OK


def cmd_metric(args: argparse.Namespace) -> int:
    nf, d = read_element(args.element, args.p, args.input)
    report = metric_report(nf)
    code = EXIT_OK
    if args.exact:
        found = exact_length(d, args.cap, max_states=args.max_states)
        if isinstance(found, CapExceeded):
            code = EXIT_CAP
        report = replace(report, exact_length=found if isinstance(found, int) else str(found))
    print(report.to_json())
    return code


def cmd_embed(args: argparse.Namespace) -> int:
    spec = EmbeddingSpec(args.kind, args.source, args.target)
    _, d = read_element(args.element, args.source, args.input)
    image = spec(d)
    print(_emit(diagram_to_normal_form(image), image, args.output))
    return EXIT_OK


def cmd_shift(args: argparse.Namespace) -> int:
    nf, d = read_element(args.element, args.p, args.input)
    if args.k < 0:
        raise DomainError(f"shift power must be >= 0, got {args.k}")
    if args.caret:
        # Realize the power on diagrams, one caret at a time.
        if args.k % (args.p - 1):
            raise DomainError(f"--caret needs k divisible by {args.p - 1}")
        for _ in range(args.k // (args.p - 1)):
            d = shift_caret(d)
        out = diagram_to_normal_form(d)
    else:
        out = shift(nf, args.k)
        d = word_to_diagram(out)
    print(_emit(out, d, args.output))
    return EXIT_OK


def cmd_ball(args: argparse.Namespace) -> int:
    b = ball(args.p, args.radius, max_states=args.max_states, workers=args.workers)
    sizes = b.sphere_sizes
    if args.format == "json":
        print(json.dumps({"p": args.p, "radius": args.radius, "sphere_sizes": sizes, "ball_size": len(b)}))
    else:
        print("\n".join(f"{r},{n}" for r, n in enumerate(sizes)))
    return EXIT_OK


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def cmd_map(args: argparse.Namespace) -> int:
    nf, d = read_element(args.element, args.p, args.input)
    f = diagram_to_map(d) if args.rep == UNIT else word_to_line_map(nf)
    if args.eval is not None:
        print(f(_parse_rational(args.eval)))
    elif args.format == "csv":
        sys.stdout.write(f.to_csv())
    else:
        print(f.to_json())
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    _, d = read_element(args.element, args.p, args.input)
    if args.part == "source":
        print(tree_to_dot(d.source, "source").rstrip("\n"))
    elif args.part == "target":
        print(tree_to_dot(d.target, "target").rstrip("\n"))
    else:
        print(diagram_to_dot(d).rstrip("\n"))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, seed=args.seed, samples=args.samples)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(json.dumps({"suite": args.suite, "seed": args.seed, "results": [r.to_dict() for r in results]}))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} [{r.suite}] {r.name} ({r.checked} checked)")
    if failed:
        first = failed[0]
        print(f"first counterexample [{first.name}]: {first.counterexample}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _add_element(sp: argparse.ArgumentParser, outputs: Sequence[str] = ()) -> None:
    sp.add_argument("element", help="word such as 'x0^2*x1^-1', or a diagram 'SRC->TGT'")
    sp.add_argument(
        "--input",
        choices=("auto", "word", "diagram"),
        default="auto",
        help="how to read ELEMENT (auto: diagram when it contains '->')",
    )
    if outputs:
        sp.add_argument("--output", choices=outputs, default=outputs[0])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fp", description="Generalized Thompson groups F(p) from the command line.")
    sub = parser.add_subparsers(dest="command", required=True)
    element_outputs = ("text", "json", "diagram", "dot")

    sp = sub.add_parser("normalize", help="print the normal form of an element")
    sp.add_argument("--p", type=int, required=True)
    _add_element(sp, element_outputs)
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("metric", help="length estimates D, N, N2 and optionally the exact length")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--exact", action="store_true", help="also compute the exact word length by BFS")
    sp.add_argument("--cap", type=int, default=20, help="give up above this length (default 20)")
    sp.add_argument("--max-states", type=int, default=None, help=f"state guard (env {MAX_STATES_ENV})")
    _add_element(sp)
    sp.set_defaults(func=cmd_metric)

    sp = sub.add_parser("embed", help="apply an embedding F(P) -> F(Q)")
    sp.add_argument("--kind", choices=("power", "sparse", "dense", "general"), required=True)
    sp.add_argument("--from", dest="source", type=int, required=True)
    sp.add_argument("--to", dest="target", type=int, required=True)
    _add_element(sp, element_outputs)
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("shift", help="apply the k-th power of x_i -> x_{i+1}")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--caret", action="store_true", help="compute on diagrams by adding root carets")
    _add_element(sp, element_outputs)
    sp.set_defaults(func=cmd_shift)

    sp = sub.add_parser("ball", help="sphere sizes of the Cayley ball")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-states", type=int, default=None, help=f"state guard (env {MAX_STATES_ENV})")
    sp.set_defaults(func=cmd_ball)

    sp = sub.add_parser("map", help="piecewise-linear representation of an element")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--rep", choices=(UNIT, LINE), default=UNIT)
    sp.add_argument("--eval", default=None, metavar="T", help="evaluate at the exact rational T")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    _add_element(sp)
    sp.set_defaults(func=cmd_map)

    sp = sub.add_parser("render", help="Graphviz DOT of the reduced diagram")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--part", choices=("diagram", "source", "target"), default="diagram")
    _add_element(sp)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify", help="run randomized property suites")
    sp.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--json", action="store_true", help="print a machine-readable summary")
    sp.set_defaults(func=cmd_verify)
    return parser


def _check_config(args: argparse.Namespace) -> None:
    CliConfig(
        p=getattr(args, "p", None) or getattr(args, "source", None) or 2,
        q=getattr(args, "target", None),
        input=getattr(args, "input", "auto"),
        output=getattr(args, "output", "text"),
        cap=getattr(args, "cap", None),
        max_states=getattr(args, "max_states", None),
        seed=getattr(args, "seed", DEFAULT_SEED),
    )
    if getattr(args, "samples", 1) < 1:
        raise DomainError("--samples must be positive")
    if getattr(args, "workers", 1) < 1:
        raise DomainError("--workers must be positive")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _check_config(args)
        return args.func(args)
    except ParseError as exc:
        print(f"fp: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"fp: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalError as exc:
        print(f"fp: internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DomainError, FPError) as exc:
        print(f"fp: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
