import itertools
import random

import pytest

from betwixt.games import (GameConfig, GamePosition, GameSolver, distinguishing_depth,
                           equiv_k, equivalence_classes, parse_theta, solve_marked_game)
from betwixt.words import Alphabet, enumerate_words

from tests.oracles import minimax_marked, minimax_words

AB = Alphabet("ab")


def test_marked_examples():
    for k in range(4):
        assert solve_marked_game(GamePosition(tuple("ab"), 1, tuple("ab"), 1, k), GameConfig(k))
    assert solve_marked_game(GamePosition(tuple("ab"), 1, tuple("ba"), 2, 0), GameConfig(0))
    assert not solve_marked_game(GamePosition(("a",), 1, tuple("aa"), 1, 1), GameConfig(1))


def test_equiv_examples():
    assert equiv_k(tuple("ab"), tuple("ba"), GameConfig(1))
    assert not equiv_k(tuple("ab"), tuple("ba"), GameConfig(2))
    assert equiv_k(tuple("abba"), tuple("abba"), GameConfig(3, {"a": 2}))


def test_distinguishing_depth():
    assert distinguishing_depth(tuple("ab"), tuple("ba"), 5) == 2
    assert distinguishing_depth(("a",), tuple("aa"), 5) == 2
    assert distinguishing_depth(tuple("ab"), tuple("ab"), 5) is None


def test_position_validation():
    with pytest.raises(ValueError):
        GamePosition((), 1, ("a",), 1, 1)
    with pytest.raises(ValueError):
        GamePosition(("a",), 2, ("a",), 1, 1)
    with pytest.raises(ValueError):
        GameConfig(1, {"a": 0})
    with pytest.raises(ValueError):
        GameConfig(-1)


def test_parse_theta():
    assert parse_theta("a=2,b=1") == {"a": 2, "b": 1}
    assert parse_theta(None) == {}
    with pytest.raises(ValueError):
        parse_theta("a2")


def test_solver_limits():
    s = GameSolver(max_len=3, max_rounds=2)
    with pytest.raises(ValueError):
        s.types(tuple("aaaa"), 1)
    with pytest.raises(ValueError):
        s.types(tuple("a"), 3)


@pytest.mark.parametrize("theta", [{}, {"a": 2}, {"a": 2, "b": 3}])
def test_marked_solver_matches_minimax(theta):
    words = [w for w in enumerate_words(AB, 4) if w]
    solver = GameSolver(theta)
    rng = random.Random(0)
    for w1, w2 in rng.sample(list(itertools.product(words, repeat=2)), 150):
        for k in range(4):
            for i1, i2 in itertools.product(range(1, len(w1) + 1), range(1, len(w2) + 1)):
                assert solver.marked(w1, i1, w2, i2, k) == minimax_marked(w1, i1, w2, i2, k, theta)


@pytest.mark.parametrize("theta", [{}, {"b": 2}])
def test_unmarked_solver_matches_minimax(theta):
    words = list(enumerate_words(AB, 4))
    solver = GameSolver(theta)
    for w1, w2 in itertools.combinations(words, 2):
        for k in range(1, 4):
            assert solver.equivalent(w1, w2, k) == minimax_words(w1, w2, k, theta)


def test_equivalence_relation_and_monotonicity():
    words = list(enumerate_words(AB, 5))
    solver = GameSolver({"a": 2})
    for k in range(1, 4):
        classes = equivalence_classes(words, k, {"a": 2})
        assert sum(len(c) for c in classes) == len(words)
        for c in classes:
            assert all(solver.equivalent(c[0], w, k) for w in c)
    rng = random.Random(1)
    for w1, w2 in (rng.sample(words, 2) for _ in range(300)):
        for k in range(1, 4):
            if solver.equivalent(w1, w2, k + 1):
                assert solver.equivalent(w1, w2, k)


def test_classes_refine_with_depth():
    words = list(enumerate_words(AB, 5))
    counts = [len(equivalence_classes(words, k)) for k in range(1, 5)]
    assert counts == sorted(counts)
