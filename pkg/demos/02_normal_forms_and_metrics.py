"""Normal forms, the length estimates D and N, and exact word length."""

import random

from fpgroups import (
    diagram_to_normal_form,
    exact_length,
    metric_D,
    metric_N,
    normalize_word,
    parse_word,
    word_to_diagram,
)
from fpgroups.words import normalize_word_steps, random_word

# The infinite presentation lets every word be pushed into the shape
# (positive letters, ascending) (negative letters, descending).
for p, text in [(2, "x1*x0"), (2, "x0^2*x1^-1*x0"), (3, "x1*x4*x1^-1"), (2, "x3^-1*x1*x0^2")]:
    nf, steps = normalize_word_steps(parse_word(text, p))
    print(f"F({p}) {text:>16} -> {str(nf):<16} ({steps} rewriting steps)")

# The same normal form is recovered from the reduced diagram alone.
w = parse_word("x2^2*x0^-1*x5*x1^-3", 2)
d = word_to_diagram(w)
print()
print("word       :", w)
print("normal form:", normalize_word(w))
print("from trees :", diagram_to_normal_form(d))

# D reads off exponent mass plus the two largest indices.  N is the caret count
# of the reduced diagram and can be computed straight from the normal form.
print()
print(f"{'element':<24}{'D':>4}{'N':>4}{'carets':>8}{'|x|':>5}")
rng = random.Random(1)
for _ in range(8):
    nf = normalize_word(random_word(2, rng.randint(2, 7), 3, rng))
    x = word_to_diagram(nf)
    print(f"{str(nf):<24}{metric_D(nf):>4}{metric_N(nf):>4}{x.caret_count():>8}{exact_length(x, 14):>5}")
