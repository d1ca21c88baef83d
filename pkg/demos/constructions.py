"""The combinatorial families used in lower bounds: X words, block signatures, circuits."""

from betwixt import XstParams, block_signature, circuit_eval, circuit_langs, xst_words
from betwixt.constructions import congruent, signature_growth
from betwixt.regex import to_text
from betwixt.words import format_word, parse_word

x = xst_words(XstParams(1, 1, 1, 2))
print("v =", format_word(x.v))
print("|X| =", len(x.X))

w = parse_word("aaaabbaaaaabaabbbba")
print(block_signature(w, 3).to_json())

# the block relation survives appending but not prepending
u, v = parse_word("abab"), parse_word("babab")
print("abab ~ babab:", congruent(u, v, 2), " after a-prefix:", congruent(("a",) + u, ("a",) + v, 2))
print("signatures by length at T=2:", signature_growth(2, 10))

C, T = circuit_langs(2)
print("circuits:", to_text(C))
print("true circuits:", to_text(T))
print("g2 g1 1 g1 0 1 ->", circuit_eval(parse_word("g2 g1 1 g1 0 1")))
