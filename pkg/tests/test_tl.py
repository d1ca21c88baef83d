import itertools
import random

import pytest

from betwixt import fo2, tl
from betwixt.regex import parse_regex
from betwixt.tl import (ALL_ZERO, EMPTY_ZERO, Future, GAnd, GNot, Past, TLetter,
                        ThresholdConstraint, TlSyntaxError, accepts_tl, btlinv_to_utlinv,
                        eval_positions, eval_tl, guard_dnf, guard_sat, parse_guard, parse_tl,
                        tl_to_fo2, tl_to_fo2_sentence, to_text)
from betwixt.words import Alphabet, enumerate_words

from tests.generators import random_guard, random_invariant_guard, random_tl
from tests.oracles import guard_holds, regex_match, tl_holds

AB = Alphabet("ab")
ABC = Alphabet("abc")
AB_PLUS = "a & X b & !F(a & X a) & !F(b & X b) & F(b & !X(a | b))"


def test_ab_plus_formula():
    f = parse_tl(AB_PLUS)
    assert eval_tl(f, tuple("abab"), 1)
    r = parse_regex("(ab)^+")
    for w in enumerate_words(AB, 8):
        assert accepts_tl(f, w) == regex_match(r, w)


def test_stair():
    # the outer F moves strictly right, so the a-run must start after position 2
    f = parse_tl("F(F[#a=3 & #b=0] true)")
    assert not eval_tl(f, tuple("baaab"), 1)
    assert eval_tl(f, tuple("bbaaab"), 1)
    inner = parse_tl("F[#a=3 & #b=0] true")
    assert eval_tl(inner, tuple("baaab"), 1)


def test_next():
    f = parse_tl("X b")
    assert eval_tl(f, tuple("ab"), 1)
    assert not eval_tl(f, tuple("aa"), 1)
    assert not eval_tl(f, tuple("ab"), 2)


def test_empty_word_and_range():
    assert not accepts_tl(parse_tl("true"), ())
    with pytest.raises(ValueError):
        eval_tl(parse_tl("a"), (), 1)
    with pytest.raises(ValueError):
        eval_tl(parse_tl("a"), tuple("ab"), 3)


def test_guard_sat():
    g = parse_guard("#{a,b}>=2")
    assert guard_sat(g, tuple("cabc"), 1, 4)
    assert not guard_sat(g, tuple("cabc"), 1, 3)
    with pytest.raises(ValueError):
        guard_sat(g, tuple("ab"), 2, 1)


def test_sugar_equivalences():
    words = list(enumerate_words(AB, 6))
    for body in ("a", "b", "X a"):
        phi = parse_tl(body)
        pairs = [(parse_tl(f"F {body}"), Future(EMPTY_ZERO, phi)),
                 (parse_tl(f"X {body}"), Future(ALL_ZERO, phi)),
                 (parse_tl(f"P {body}"), Past(EMPTY_ZERO, phi))]
        for w in words[1:]:
            for f, g in pairs:
                assert (eval_positions(f, w) == eval_positions(g, w)).all()
    # X b holds exactly when the next letter is b
    for w in words[1:]:
        got = eval_positions(parse_tl("X b"), w)
        assert [bool(v) for v in got] == [i + 1 < len(w) and w[i + 1] == "b" for i in range(len(w))]


def test_evaluator_matches_oracle():
    rng = random.Random(1)
    words = [w for w in enumerate_words(ABC, 5) if w]
    for _ in range(120):
        f = random_tl(rng, 3, "abc")
        for w in rng.sample(words, 10):
            got = eval_positions(f, w)
            for i in range(1, len(w) + 1):
                assert bool(got[i - 1]) == tl_holds(f, w, i), (to_text(f), w, i)


def test_guard_dnf_is_equivalent():
    rng = random.Random(2)
    words = [w for w in enumerate_words(ABC, 5) if len(w) >= 2]
    for _ in range(150):
        g = random_guard(rng, "abc", 3)
        terms = guard_dnf(g)
        for w in rng.sample(words, 8):
            for i, j in itertools.combinations(range(1, len(w) + 1), 2):
                dnf = any(all(guard_holds(c, w, i, j) for c in t) for t in terms)
                assert dnf == guard_holds(g, w, i, j)


def test_btlinv_example():
    f = parse_tl("F[#a=0 & #b>0 & #c>0] d")
    out = to_text(btlinv_to_utlinv(f))
    assert out == ("F[#{a,b,c}=0] (b & F[#{a,c}=0] (c & F[#{a}=0] d))"
                   " | F[#{a,b,c}=0] (c & F[#{a,b}=0] (b & F[#{a}=0] d))")


def test_btlinv_disjunction_and_invariant_cases():
    g1, g2 = ThresholdConstraint(frozenset("a"), "=", 0), ThresholdConstraint(frozenset("b"), "=", 0)
    phi = TLetter("c")
    f = Future(tl.GOr((g1, g2)), phi)
    assert btlinv_to_utlinv(f) == tl.TOr((Future(g1, phi), Future(g2, phi)))
    assert btlinv_to_utlinv(Future(g1, phi)) == Future(g1, phi)


def test_btlinv_rejects_thresholds():
    with pytest.raises(ValueError):
        btlinv_to_utlinv(parse_tl("F[#a>=2] b"))


def test_btlinv_output_uses_only_zero_constraints():
    rng = random.Random(4)
    for _ in range(40):
        f = random_tl(rng, 2, "abc", guard=random_invariant_guard)
        out = btlinv_to_utlinv(f, ABC)
        stack = [out]
        while stack:
            h = stack.pop()
            if isinstance(h, (Future, Past)):
                assert isinstance(h.guard, ThresholdConstraint)
                assert h.guard.rel == "=" and h.guard.bound == 0
                stack.append(h.body)
            elif isinstance(h, tl.TNot):
                stack.append(h.body)
            elif isinstance(h, (tl.TAnd, tl.TOr)):
                stack.extend(h.args)


def test_tl_to_fo2_schema():
    assert tl_to_fo2(parse_tl("a")) == fo2.Letter("a", "x")
    got = tl_to_fo2(parse_tl("F[#a>=2] b"))
    y = "y"
    assert got == fo2.Exists(y, fo2.conj(fo2.Less("x", y), fo2.Between("a", 2, "x", y),
                                         fo2.Letter("b", y)))
    assert fo2.to_text(got) == "Ey. x<y & bet(a,2,x,y) & b(y)"


def test_tl_to_fo2_small_exhaustive():
    rng = random.Random(9)
    words = [w for w in enumerate_words(AB, 5) if w]
    for _ in range(40):
        f = random_tl(rng, 2, "ab")
        g = tl_to_fo2(f, "x", AB)
        for w in words:
            for i in range(1, len(w) + 1):
                assert eval_tl(f, w, i) == fo2.eval_fo2(g, w, {"x": i})


def test_ab_plus_sentence_matches_regex():
    s = tl_to_fo2_sentence(parse_tl(AB_PLUS), AB)
    r = parse_regex("(ab)^+")
    for w in enumerate_words(AB, 8):
        assert fo2.eval_fo2(s, w) == regex_match(r, w)


def test_parse_round_trip():
    # printing flattens nested conjunctions, so compare text and semantics
    rng = random.Random(6)
    words = [w for w in enumerate_words(Alphabet(["a", "b", "g1"]), 4) if w]
    for _ in range(200):
        f = random_tl(rng, 3, ["a", "b", "g1"])
        g = parse_tl(to_text(f))
        assert to_text(g) == to_text(f)
        for w in words[::7]:
            assert (eval_positions(f, w) == eval_positions(g, w)).all()


@pytest.mark.parametrize("text", ["F[", "F[#a>=] b", "a &", "(a", "F[#{a,b}=1 b"])
def test_parse_errors(text):
    with pytest.raises(TlSyntaxError):
        parse_tl(text)


def test_negated_guard_parses():
    f = parse_tl("F[!#a=0] b")
    assert f == Future(GNot(ThresholdConstraint(frozenset("a"), "=", 0)), TLetter("b"))
    g = parse_tl("F[#a=0 & #b>0] c")
    assert isinstance(g.guard, GAnd)
