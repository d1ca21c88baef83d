"""Complete deterministic automata, compiled from regular expressions.

``compile_min_dfa`` goes regex -> epsilon-NFA (Thompson) -> subset
construction -> Moore partition refinement, and finally renumbers states
in breadth-first order from the initial state (letters in alphabet order).
The renumbering makes minimal automata of equal languages *equal*, so
isomorphism checks reduce to ``==``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .regex import Concat, EmptySet, Epsilon, Plus, Regex, Star, Sym, Union, parse_regex
from .words import Alphabet


@dataclass(frozen=True)
class Dfa:
    alphabet: Alphabet
    n_states: int
    initial: int
    accepting: frozenset
    delta: tuple  # delta[state][letter index] -> state

    def __post_init__(self):
        k = len(self.alphabet)
        if not 0 <= self.initial < self.n_states:
            raise ValueError("initial state out of range")
        if len(self.delta) != self.n_states or any(len(row) != k for row in self.delta):
            raise ValueError("transition table must be total: one row per state, one column per letter")
        for row in self.delta:
            for q in row:
                if not 0 <= q < self.n_states:
                    raise ValueError(f"transition target {q} out of range")
        if not all(0 <= q < self.n_states for q in self.accepting):
            raise ValueError("accepting state out of range")

    def run(self, word: Sequence[str], state: int | None = None) -> int:
        q = self.initial if state is None else state
        idx = self.alphabet.index
        for a in word:
            q = self.delta[q][idx(a)]
        return q

    def accepts(self, word: Sequence[str]) -> bool:
        return self.run(word) in self.accepting

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet.letters),
            "states": self.n_states,
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "delta": [list(row) for row in self.delta],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "Dfa":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Alphabet(data["alphabet"]), int(data["states"]), int(data["initial"]),
                   frozenset(data["accepting"]), tuple(tuple(r) for r in data["delta"]))


def accepts(d: Dfa, word: Sequence[str]) -> bool:
    """True iff ``word`` is in the language of ``d``."""
    return d.accepts(word)


# --- regex -> NFA -----------------------------------------------------------

class _Nfa:
    def __init__(self):
        self.eps: list[list[int]] = []
        self.moves: list[list[tuple]] = []

    def state(self) -> int:
        self.eps.append([])
        self.moves.append([])
        return len(self.eps) - 1

    def build(self, r: Regex) -> tuple[int, int]:
        s, t = self.state(), self.state()
        if isinstance(r, Sym):
            self.moves[s].append((r.letter, t))
        elif isinstance(r, Epsilon):
            self.eps[s].append(t)
        elif isinstance(r, EmptySet):
            pass
        elif isinstance(r, Union):
            for part in (r.left, r.right):
                a, b = self.build(part)
                self.eps[s].append(a)
                self.eps[b].append(t)
        elif isinstance(r, Concat):
            a1, b1 = self.build(r.left)
            a2, b2 = self.build(r.right)
            self.eps[s].append(a1)
            self.eps[b1].append(a2)
            self.eps[b2].append(t)
        elif isinstance(r, (Star, Plus)):
            a, b = self.build(r.body)
            self.eps[s].append(a)
            self.eps[b].append(a)
            self.eps[b].append(t)
            if isinstance(r, Star):
                self.eps[s].append(t)
        else:
            raise TypeError(f"not a regex node: {r!r}")
        return s, t

    def closure(self, states) -> frozenset:
        seen = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for p in self.eps[q]:
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        return frozenset(seen)


def _determinize(r: Regex, alphabet: Alphabet) -> Dfa:
    nfa = _Nfa()
    start, final = nfa.build(r)
    init = nfa.closure([start])
    index = {init: 0}
    order = [init]
    delta = []
    i = 0
    while i < len(order):
        cur = order[i]
        row = []
        for a in alphabet:
            nxt = nfa.closure([t for q in cur for (b, t) in nfa.moves[q] if b == a])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
        i += 1
    accepting = frozenset(i for i, S in enumerate(order) if final in S)
    return Dfa(alphabet, len(order), 0, accepting, tuple(delta))


# --- minimization -------------------------------------------------------------

def minimize(d: Dfa) -> Dfa:
    """Minimal complete DFA for the language of ``d``, canonically numbered."""
    k = len(d.alphabet)
    # reachable part
    reach = {d.initial}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for p in d.delta[q]:
            if p not in reach:
                reach.add(p)
                queue.append(p)
    states = sorted(reach)
    block = {q: int(q in d.accepting) for q in states}
    n_blocks = len(set(block.values()))
    while True:
        sigs = {q: (block[q],) + tuple(block[d.delta[q][c]] for c in range(k)) for q in states}
        ids: dict = {}
        for q in states:
            ids.setdefault(sigs[q], len(ids))
        new_block = {q: ids[sigs[q]] for q in states}
        if len(ids) == n_blocks:
            block = new_block
            break
        block, n_blocks = new_block, len(ids)
    rows = {}
    for q in states:
        rows.setdefault(block[q], tuple(block[d.delta[q][c]] for c in range(k)))
    acc = {block[q] for q in states if q in d.accepting}
    return _canonical(d.alphabet, block[d.initial], acc, rows)


def _canonical(alphabet: Alphabet, initial: int, accepting, rows: dict) -> Dfa:
    number = {initial: 0}
    queue = deque([initial])
    while queue:
        q = queue.popleft()
        for p in rows[q]:
            if p not in number:
                number[p] = len(number)
                queue.append(p)
    delta = [None] * len(number)
    for q, i in number.items():
        delta[i] = tuple(number[p] for p in rows[q])
    return Dfa(alphabet, len(number), 0, frozenset(number[q] for q in accepting if q in number),
               tuple(delta))


def compile_min_dfa(r: Regex | str, alphabet: Alphabet | None = None) -> Dfa:
    """Minimal complete DFA for a regex (text or AST).

    Without an alphabet, the sorted set of letters in the expression is used.
    """
    if isinstance(r, str):
        r = parse_regex(r, alphabet)
    if alphabet is None:
        letters = sorted(r.letters())
        if not letters:
            raise ValueError("cannot infer an alphabet from a letter-free expression")
        alphabet = Alphabet(letters)
    else:
        unknown = r.letters() - set(alphabet.letters)
        if unknown:
            raise ValueError(f"letters {sorted(unknown)} not in alphabet {alphabet}")
    return minimize(_determinize(r, alphabet))


def dead_states(d: Dfa) -> set:
    """States from which no accepting state is reachable."""
    live = set(d.accepting)
    changed = True
    while changed:
        changed = False
        for q in range(d.n_states):
            if q not in live and any(p in live for p in d.delta[q]):
                live.add(q)
                changed = True
    return set(range(d.n_states)) - live
