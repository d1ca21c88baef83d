import itertools

import pytest

from betwixt import fo2
from betwixt.counters import CounterFormulas, build_counter_formulas, counter_word, read_counter
from betwixt.words import Alphabet

PAIR = {"x": 1}


def at_marks(f, values, r):
    """Evaluate a two-place counter formula with x, y on the first two markers."""
    w = counter_word(values, r)
    return fo2.eval_fo2(f, w, {"x": 1, "y": r + 2})


def test_examples():
    cf = build_counter_formulas(2)
    assert fo2.eval_fo2(cf["EQ"](), ("m", "1", "0", "m", "1", "0"), {"x": 1, "y": 4})
    w = ("m", "1", "0", "m", "0", "1")
    assert not fo2.eval_fo2(cf["EQ"](), w, {"x": 1, "y": 4})
    assert fo2.eval_fo2(cf["INC1"](), w, {"x": 1, "y": 4})
    assert fo2.eval_fo2(cf["INC1"](), ("m", "1", "1", "m", "0", "0"), {"x": 1, "y": 4})


def test_counter_word_and_read():
    w = counter_word([5, 2], 3)
    assert w == ("m", "1", "0", "1", "m", "0", "1", "0")
    assert read_counter(w, 1, 3) == 5 and read_counter(w, 5, 3) == 2


def test_width_must_be_positive():
    with pytest.raises(ValueError):
        CounterFormulas(0)


@pytest.mark.parametrize("r", [1, 2])
def test_constant_and_suc_chain(r):
    cf = CounterFormulas(r)
    for v in range(1 << r):
        w = counter_word([v], r)
        for c in range(1 << r):
            assert fo2.eval_fo2(cf.constant("x", c), w, PAIR) == (c == v)


def test_successor_spelled_with_between_atoms():
    alphabet = Alphabet(["m", "0", "1"])
    plain, spelled = CounterFormulas(2), CounterFormulas(2, alphabet=alphabet)
    for a, b in itertools.product(range(4), repeat=2):
        for name in ("EQ", "INC1", "LT", "GT"):
            assert at_marks(getattr(plain, name)(), [a, b], 2) == \
                at_marks(getattr(spelled, name)(), [a, b], 2)


def test_next_marker():
    cf = CounterFormulas(1)
    w = counter_word([0, 1, 0], 1)
    assert fo2.eval_fo2(cf.next_marker(), w, {"x": 1, "y": 3})
    assert not fo2.eval_fo2(cf.next_marker(), w, {"x": 1, "y": 5})
    assert not fo2.eval_fo2(cf.next_marker(), w, {"x": 1, "y": 2})


def test_requires_markers():
    cf = CounterFormulas(1)
    w = ("0", "m", "0", "m", "0")
    assert not fo2.eval_fo2(cf.EQ(), w, {"x": 1, "y": 2})
