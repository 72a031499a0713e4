"""Embeddings between the groups F(p) and how they interact with shifts."""

from fpgroups import (
    diagram_to_normal_form,
    embed_dense,
    embed_general,
    embed_power,
    embed_sparse,
    generator_diagram,
    parse_word,
    shift,
    shift_caret,
    word_to_diagram,
)


def nf(d):
    return str(diagram_to_normal_form(d))


# F(4) sits inside F(2) by replacing every 4-caret with a complete binary
# block of depth two.
print("F(4) -> F(2), complete blocks")
for i in range(4):
    print(f"  x{i} -> {nf(embed_power(generator_diagram(4, i), 2, 2))}")

# F(2) -> F(3) adds an empty middle leaf to every caret, so x_i -> x_{2i}.
print("F(2) -> F(3), new leaf in every gap")
for i in range(4):
    print(f"  x{i} -> {nf(embed_sparse(generator_diagram(2, i), 3))}")

# F(4) -> F(2) the other way round splits each 4-caret into a chain of three
# 2-carets, giving x_i -> x_i^3.
print("F(4) -> F(2), caret chains")
for i in range(4):
    print(f"  x{i} -> {nf(embed_dense(generator_diagram(4, i), 2))}")

# Any F(p) reaches any F(q) through F(2).  Going F(3) -> F(2) -> F(3) is an
# injective endomorphism but not the identity.
print("F(3) -> F(3) through F(2)")
for i in range(3):
    print(f"  x{i} -> {nf(embed_general(generator_diagram(3, i), 3))}")

# Hanging both trees under the last child of a new root is the shift by p - 1.
# The complete-block embedding turns a shift by 3 in F(4) into a shift by 2.
x = word_to_diagram(parse_word("x1*x2^-1", 4))
one = nf(embed_power(shift_caret(x), 2, 2))
two = str(shift(diagram_to_normal_form(embed_power(x, 2, 2)), 2))
print()
print("i(shift^3(x1 x2^-1)) =", one)
print("shift^2(i(x1 x2^-1)) =", two)
