"""Evaluate FO2 and temporal formulas, then translate between the logics."""

from betwixt import (Alphabet, accepts_tl, btlinv_to_utlinv, enumerate_words, eval_fo2,
                     parse_fo2, parse_tl, tl_to_fo2_sentence)
from betwixt.fo2 import formula_size, to_text
from betwixt.tl import to_text as tl_text

# bet(a,k,x,y): at least k a's strictly between x and y
f = parse_fo2("Ex. Ey. (b(x) & b(y) & bet(a,2,x,y))")
for w in ["baab", "bab", "abaaab"]:
    print(w, eval_fo2(f, tuple(w)))

# successor is expressible by the between predicate alone
succ = parse_fo2("Ex. Ey. (succ(x,y) & a(x) & b(y))")
sugar = parse_fo2("Ex. Ey. (x<y & !bet(a,1,x,y) & !bet(b,1,x,y) & a(x) & b(y))")
ab = Alphabet("ab")
print("succ == sugar on words up to 6:",
      all(eval_fo2(succ, w) == eval_fo2(sugar, w) for w in enumerate_words(ab, 6)))

# guarded future: the next d after which no a occurred, at least one b and c
g = parse_tl("F[#a=0 & #b>0 & #c>0] d")
u = btlinv_to_utlinv(g, Alphabet("abcd"))
print("BTL[Inv]:", tl_text(g))
print("UTL[Inv]:", tl_text(u))
abcd = Alphabet("abcd")
print("agree up to length 5:",
      all(accepts_tl(g, w) == accepts_tl(u, w) for w in enumerate_words(abcd, 5)))

# temporal formulas become two-variable sentences
t = parse_tl("a & X b")
s = tl_to_fo2_sentence(t, ab)
print("FO2:", to_text(s), " size", formula_size(s))
