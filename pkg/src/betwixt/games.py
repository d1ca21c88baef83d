"""Ehrenfeucht-Fraisse games for two-variable logic with between/threshold atoms.

Instead of searching the game tree, the solver computes for every
position i of a word its *r-round type*:

    type_0(w, i) = w(i)
    type_r(w, i) = (w(i), { (move(i, j), type_{r-1}(w, j)) : j != i })

where ``move(i, j)`` records the direction and, per letter a, the number
of a's jumped over capped at theta(a).  Player 2 wins the r-round game on
(w1, i1), (w2, i2) exactly when the two r-types coincide: every move of
Player 1 is answered by a move with the same signature into a position of
the same (r-1)-type, and conversely.  Types are interned as integers in a
table shared by all words handed to one solver, so comparing types across
words is integer comparison.

Cost: O(k * n^2 * |A|) per word for k rounds and length n, and each word
is typed once per solver however many pairs it appears in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

MAX_WORD_LEN = 64
MAX_ROUNDS = 8


@dataclass(frozen=True)
class GameConfig:
    rounds: int
    theta: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rounds < 0:
            raise ValueError("number of rounds must be nonnegative")
        for a, t in self.theta.items():
            if t < 1:
                raise ValueError(f"threshold for {a!r} must be at least 1")


@dataclass(frozen=True)
class GamePosition:
    w1: tuple
    i1: int
    w2: tuple
    i2: int
    remaining: int

    def __post_init__(self):
        for w, i in ((self.w1, self.i1), (self.w2, self.i2)):
            if not w:
                raise ValueError("marked words must be nonempty")
            if not 1 <= i <= len(w):
                raise ValueError(f"mark {i} outside 1..{len(w)}")


def parse_theta(text: str | None) -> dict:
    """"a=2,b=1" -> {"a": 2, "b": 1}."""
    out: dict = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, val = part.partition("=")
        if not sep:
            raise ValueError(f"bad threshold entry {part!r}; expected letter=number")
        out[name.strip().strip("'")] = int(val)
    return out


class GameSolver:
    """Decides the r-round game for one threshold function theta."""

    def __init__(self, theta: Mapping[str, int] | None = None, max_len: int = MAX_WORD_LEN,
                 max_rounds: int = MAX_ROUNDS):
        self.theta = dict(theta or {})
        for a, t in self.theta.items():
            if t < 1:
                raise ValueError(f"threshold for {a!r} must be at least 1")
        self.max_len = max_len
        self.max_rounds = max_rounds
        self._types: dict = {}      # (level, key) -> id
        self._moves: dict = {}      # move signature -> id
        self._words: dict = {}      # word -> (move matrix, [type vectors per level])
        self._letters: dict = {}
        self._radix = max(self.theta.values(), default=1) + 1

    def _cap(self, a: str) -> int:
        return self.theta.get(a, 1)

    def _letter_id(self, a: str) -> int:
        return self._letters.setdefault(a, len(self._letters))

    def _prepare(self, word: tuple):
        entry = self._words.get(word)
        if entry is not None:
            return entry
        n = len(word)
        if n > self.max_len:
            raise ValueError(f"word length {n} exceeds the solver limit {self.max_len}")
        moves = np.zeros((n, n), dtype=np.int64)
        if n:
            arr = np.array(word, dtype=object)
            i = np.arange(n)[:, None]
            j = np.arange(n)[None, :]
            lo, hi = np.minimum(i, j), np.maximum(i, j)
            # signature as an exact python-int code: direction bit, then capped counts
            codes = (j > i).astype(object)
            for a in sorted(set(word), key=self._letter_id):
                pre = np.concatenate(([0], np.cumsum(arr == a)))
                cnt = np.minimum(np.maximum(pre[hi] - pre[np.minimum(lo + 1, n)], 0), self._cap(a))
                codes = codes + cnt.astype(object) * (self._radix ** (self._letter_id(a) + 1))
            flat = codes.ravel()
            uniq, inv = np.unique(flat, return_inverse=True)
            ids = np.array([self._moves.setdefault(c, len(self._moves)) for c in uniq.tolist()],
                           dtype=np.int64)
            moves = ids[inv].reshape(n, n)
        level0 = np.array([self._intern(0, a) for a in word], dtype=np.int64)
        entry = (moves, [level0])
        self._words[word] = entry
        return entry

    def _intern(self, level: int, key) -> int:
        k = (level, key)
        t = self._types.get(k)
        if t is None:
            t = len(self._types)
            self._types[k] = t
        return t

    def types(self, word: Sequence[str], rounds: int) -> np.ndarray:
        """Vector of ``rounds``-types of all positions (0-based)."""
        if rounds > self.max_rounds:
            raise ValueError(f"{rounds} rounds exceed the solver limit {self.max_rounds}")
        word = tuple(word)
        moves, levels = self._prepare(word)
        n = len(word)
        while len(levels) <= rounds:
            r = len(levels)
            prev = levels[-1]
            pairs = (moves << 32) | prev[None, :]
            cur = np.empty(n, dtype=np.int64)
            for i in range(n):
                opts = np.unique(np.delete(pairs[i], i))
                cur[i] = self._intern(r, (word[i], opts.tobytes()))
            levels.append(cur)
        return levels[rounds]

    def marked(self, w1, i1: int, w2, i2: int, rounds: int) -> bool:
        """Player 2 wins the marked game (1-based marks)."""
        t1 = self.types(w1, rounds)
        t2 = self.types(w2, rounds)
        return bool(t1[i1 - 1] == t2[i2 - 1])

    def word_type(self, word, rounds: int):
        """Invariant of the unmarked game: the set of (rounds-1)-types present."""
        if rounds == 0:
            return ()
        word = tuple(word)
        if not word:
            return frozenset()
        return frozenset(self.types(word, rounds - 1).tolist())

    def equivalent(self, w1, w2, rounds: int) -> bool:
        """Player 2 wins the unmarked game: a placement round, then rounds-1 marked rounds."""
        if rounds == 0:
            return True
        return self.word_type(w1, rounds) == self.word_type(w2, rounds)

    def forget(self) -> None:
        """Drop cached words (interned types stay valid)."""
        self._words.clear()


def solve_marked_game(p: GamePosition, cfg: GameConfig, max_len: int = MAX_WORD_LEN) -> bool:
    """True iff Player 2 has a winning strategy from the marked position."""
    return GameSolver(cfg.theta, max_len).marked(p.w1, p.i1, p.w2, p.i2, p.remaining)


def equiv_k(w1: Sequence[str], w2: Sequence[str], cfg: GameConfig,
            max_len: int = MAX_WORD_LEN) -> bool:
    """w1 and w2 agree on all theta-bounded sentences of quantifier depth <= rounds."""
    return GameSolver(cfg.theta, max_len).equivalent(tuple(w1), tuple(w2), cfg.rounds)


def distinguishing_depth(w1: Sequence[str], w2: Sequence[str], max_k: int,
                         theta: Mapping[str, int] | None = None,
                         max_len: int = MAX_WORD_LEN) -> int | None:
    """Least k <= max_k at which the words are separated, or None."""
    solver = GameSolver(theta, max_len, max_rounds=max(max_k, MAX_ROUNDS))
    for k in range(max_k + 1):
        if not solver.equivalent(tuple(w1), tuple(w2), k):
            return k
    return None


def equivalence_classes(words: Iterable[Sequence[str]], rounds: int,
                        theta: Mapping[str, int] | None = None) -> list:
    """Partition of the words into equivalence classes, in first-seen order."""
    solver = GameSolver(theta)
    groups: dict = {}
    for w in words:
        groups.setdefault(solver.word_type(tuple(w), rounds), []).append(tuple(w))
    return list(groups.values())
