"""A walk through tree diagrams in F(2) and F(3)."""

from fpgroups import (
    diagram_to_map,
    generator_diagram,
    invert,
    multiply,
    parse_word,
    word_to_diagram,
)
from fpgroups.diagrams import unreduce
from fpgroups.trees import classify_carets, leaf_intervals

# Every generator x_i of F(p) is a pair of p-ary trees with the same number of
# leaves.  In F(3) the generator x_1 subdivides the middle third on top and the
# last third on the bottom.
x1 = generator_diagram(3, 1)
print("x1 in F(3):", x1.key())
print("source leaves:", [f"[{iv.lo}, {iv.hi}]" for iv in leaf_intervals(x1.source)])
print("target leaves:", [f"[{iv.lo}, {iv.hi}]" for iv in leaf_intervals(x1.target)])

# Matching the i-th source interval onto the i-th target interval gives the
# piecewise-linear homeomorphism of [0, 1].
f = diagram_to_map(x1)
print("breakpoints:", [(str(a), str(b)) for a, b in f.breakpoints])
print("slopes:", [str(s) for s in f.slopes()])

# Carets come in three flavours depending on the path from the root.  The
# root counts as a right caret.
for path, kind in classify_carets(x1.source):
    print("caret at", path or "root", "is", kind.value)

# Multiplying two diagrams means refining both to a common tree and then
# cancelling matched carets.  This reproduces x0^2 x1^-1 * x0 = x0^3 x2^-1.
left = word_to_diagram(parse_word("x0^2*x1^-1", 2))
prod = multiply(left, generator_diagram(2, 0))
print()
print("x0^2 x1^-1        :", left.key())
print("times x0          :", prod.key())
print("same as x0^3 x2^-1:", prod == word_to_diagram(parse_word("x0^3*x2^-1", 2)))

# Adding the same caret under leaf k of both trees does not change the
# element, and reduction removes it again.
bigger = unreduce(prod, 1)
print("unreduced         :", bigger.key(), "carets:", bigger.caret_count())
print("x * x^-1 is trivial:", multiply(prod, invert(prod)).is_identity())
