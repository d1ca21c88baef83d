"""Tiling encodings, threshold removal and bounded model search."""

import numpy as np

from betwixt import (Alphabet, TilingInstance, TilingSolution, bounded_sat, encode_tiling,
                     eval_fo2, parse_fo2, reduce_th_to_bet, tiling_witness)
from betwixt.fo2 import formula_size
from betwixt.satgen import find_tiling
from betwixt.words import format_word

inst = TilingInstance(("s", "f"), "s", "f", frozenset({("s", "f"), ("f", "f")}),
                      frozenset({("s", "s"), ("f", "f")}), 1)
sol = find_tiling(inst, 3)
w = tiling_witness(inst, sol)
print("solution", sol.grid, "->", format_word(w))
print("encoding holds:", eval_fo2(encode_tiling(inst), w))

# one bad cell breaks it
bad = TilingSolution((("f", "f"),))
print("bad grid holds:", eval_fo2(encode_tiling(inst), tiling_witness(inst, bad)))

# formula size as the width exponent grows
sizes = []
for n in range(1, 6):
    i = TilingInstance(("s", "f"), "s", "f", inst.H, inst.V, n)
    sizes.append(formula_size(encode_tiling(i)))
print("sizes:", sizes, " log-log slope %.2f" % np.polyfit(np.log(range(3, 6)), np.log(sizes[2:]), 1)[0])

# thresholds above one are compiled away over a decorated alphabet
f = parse_fo2("Ex. Ey. bet(a,2,x,y)")
red = reduce_th_to_bet(f, Alphabet("ab"))
print("product alphabet:", len(red.alphabet.letters), "letters")
model = bounded_sat(red.formula, red.alphabet, 5)
print("model:", format_word(model), "projects to", format_word(red.project(model)))
