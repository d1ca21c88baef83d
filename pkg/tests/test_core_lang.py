import itertools

import pytest
from hypothesis import given, settings, strategies as st

from betwixt.dfa import Dfa, compile_min_dfa, dead_states, minimize
from betwixt.regex import RegexSyntaxError, parse_regex, to_text
from betwixt.words import Alphabet, enumerate_words, format_word, parse_word

from tests.oracles import regex_match

AB = Alphabet("ab")


def test_alphabet_forms():
    assert Alphabet.of("abc").letters == ("a", "b", "c")
    assert Alphabet.of("a, b,g1").letters == ("a", "b", "g1")
    with pytest.raises(ValueError):
        Alphabet("aa")
    with pytest.raises(ValueError):
        Alphabet([])


def test_parse_word_variants():
    assert parse_word("") == ()
    assert parse_word("abba") == ("a", "b", "b", "a")
    assert parse_word("g2 g1 0 'g1' 1") == ("g2", "g1", "0", "g1", "1")
    assert parse_word("'g1'01") == ("g1", "0", "1")
    with pytest.raises(ValueError):
        parse_word("abc", AB)


def test_format_word_round_trip():
    for w in [(), ("a", "b"), ("g1", "0"), ("s_red", "1")]:
        assert parse_word(format_word(w)) == w


def test_enumerate_words_order():
    words = list(enumerate_words(AB, 2))
    assert words == [(), ("a",), ("b",), ("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]
    assert sum(1 for _ in enumerate_words(AB, 4)) == 31


@pytest.mark.parametrize("text", ["(ab)*", "a(a+b)*b", "(a(ab)*b)*", "(a+b)*bab^+ab(a+b)*",
                                  "%e+a", "%0", "'g1'(0+1)^+"])
def test_regex_round_trip(text):
    r = parse_regex(text)
    assert parse_regex(to_text(r)) == r


@pytest.mark.parametrize("text", ["(ab", "a+", "*a", ")"])
def test_regex_errors(text):
    with pytest.raises(RegexSyntaxError):
        parse_regex(text)


@pytest.mark.parametrize("text", ["(ab)*", "a(a+b)*b", "(a(ab)*b)*", "(a+b)*bab^+ab(a+b)*",
                                  "a^+b^+", "%e", "%0", "(aa+b)*a"])
def test_min_dfa_matches_backtracking_oracle(text):
    r = parse_regex(text)
    d = compile_min_dfa(r, AB)
    for w in enumerate_words(AB, 8):
        assert d.accepts(w) == regex_match(r, w), w


def test_min_dfa_sizes():
    assert compile_min_dfa("(ab)*", AB).n_states == 3
    assert compile_min_dfa("a(a+b)*b", AB).n_states == 4
    assert compile_min_dfa("%0", AB).n_states == 1


def test_minimize_is_canonical():
    # two different automata for a*: one with a redundant copy state
    d = Dfa(AB, 3, 0, frozenset({0, 1}), ((1, 2), (0, 2), (2, 2)))
    m = minimize(d)
    assert m == compile_min_dfa("a*", AB)
    assert dead_states(m) == {1}


def test_dfa_json_round_trip():
    d = compile_min_dfa("(ab)*", AB)
    assert Dfa.from_json(d.to_json()) == d


@settings(max_examples=60, deadline=None)
@given(st.recursive(st.sampled_from(["a", "b", "%e"]),
                    lambda inner: st.one_of(
                        st.tuples(inner, inner).map(lambda p: f"({p[0]}+{p[1]})"),
                        st.tuples(inner, inner).map(lambda p: f"{p[0]}{p[1]}"),
                        inner.map(lambda s: f"({s})*")),
                    max_leaves=6))
def test_random_regexes_against_oracle(text):
    r = parse_regex(text)
    d = compile_min_dfa(r, AB)
    for w in itertools.chain.from_iterable(itertools.product("ab", repeat=n) for n in range(6)):
        assert d.accepts(w) == regex_match(r, w)
