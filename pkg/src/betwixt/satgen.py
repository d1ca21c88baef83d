"""Satisfiability tooling for two-variable logic with between predicates.

* Corridor tiling: ``encode_tiling`` writes a sentence that is satisfiable
  iff the tiling instance has a solution, and ``tiling_witness`` turns a
  solution into a model.  A grid of width 2^n and m rows becomes a word of
  length m(n+1)2^n: row by row, one marker letter per cell (carrying the
  cell's tile and the row colour) followed by the column number in n bits,
  least significant first.
* ``reduce_th_to_bet`` removes threshold atoms bet(a,k,x,y), k >= 2, at
  the cost of a larger alphabet that carries a global counter per letter.
* ``bounded_sat`` is an exhaustive model search by increasing length with
  pruning on prefix-stable universal conjuncts.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import fo2
from .counters import CounterFormulas, const_bits, eq_bits, ge_shift_bits, inc_bits
from .fo2 import (FALSE, TRUE, Between, Exists, Forall, Formula, Less, Letter, any_between,
                  any_letter, conj, disj, iff, implies, neg, successor_via_between)
from .words import Alphabet, Word, enumerate_words

COLOURS = ("red", "green", "blue")


# --- corridor tiling --------------------------------------------------------------------

@dataclass(frozen=True)
class TilingInstance:
    tiles: tuple
    s: str
    f: str
    H: frozenset
    V: frozenset
    n: int

    def __post_init__(self):
        tiles = set(self.tiles)
        if len(tiles) != len(self.tiles) or not tiles:
            raise ValueError("tiles must be a nonempty list of distinct names")
        if self.s not in tiles or self.f not in tiles:
            raise ValueError("start and final tiles must be tiles")
        for rel in (self.H, self.V):
            for pair in rel:
                if len(pair) != 2 or not set(pair) <= tiles:
                    raise ValueError(f"bad compatibility pair {pair!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")

    @property
    def width(self) -> int:
        return 1 << self.n

    @classmethod
    def from_json(cls, data) -> "TilingInstance":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["tiles"]), data["s"], data["f"],
                   frozenset(tuple(p) for p in data["H"]), frozenset(tuple(p) for p in data["V"]),
                   int(data["n"]))

    def to_json(self) -> dict:
        return {"tiles": list(self.tiles), "s": self.s, "f": self.f,
                "H": sorted(map(list, self.H)), "V": sorted(map(list, self.V)), "n": self.n}


@dataclass(frozen=True)
class TilingSolution:
    """grid[row][column]; columns 0..2^n-1, rows 0..m-1."""
    grid: tuple

    @property
    def m(self) -> int:
        return len(self.grid)

    def tile(self, column: int, row: int) -> str:
        return self.grid[row][column]

    @classmethod
    def from_json(cls, data) -> "TilingSolution":
        if isinstance(data, str):
            data = json.loads(data)
        grid = data["grid"] if isinstance(data, dict) else data
        return cls(tuple(tuple(row) for row in grid))

    def to_json(self) -> dict:
        return {"m": self.m, "grid": [list(r) for r in self.grid]}


def marker(tile: str, colour: str) -> str:
    return f"{tile}_{colour}"


def tiling_alphabet(inst: TilingInstance) -> Alphabet:
    return Alphabet([marker(t, c) for t in inst.tiles for c in COLOURS] + ["0", "1"])


def _check_shape(inst: TilingInstance, sol: TilingSolution) -> None:
    if sol.m < 1:
        raise ValueError("a solution needs at least one row")
    for j, row in enumerate(sol.grid):
        if len(row) != inst.width:
            raise ValueError(f"row {j} has {len(row)} cells; the corridor is {inst.width} wide")
        bad = set(row) - set(inst.tiles)
        if bad:
            raise ValueError(f"row {j} uses unknown tiles {sorted(bad)}")


def check_solution(inst: TilingInstance, sol: TilingSolution) -> bool:
    """Direct check of the tiling conditions."""
    _check_shape(inst, sol)
    w, m = inst.width, sol.m
    if sol.tile(0, 0) != inst.s or sol.tile(w - 1, m - 1) != inst.f:
        return False
    for j in range(m):
        for i in range(w):
            if i + 1 < w and (sol.tile(i, j), sol.tile(i + 1, j)) not in inst.H:
                return False
            if j + 1 < m and (sol.tile(i, j), sol.tile(i, j + 1)) not in inst.V:
                return False
    return True


def tiling_witness(inst: TilingInstance, sol: TilingSolution) -> Word:
    """Serialize a grid row by row: marker letter, then the column in n bits (LSB first)."""
    _check_shape(inst, sol)
    out = []
    for j, row in enumerate(sol.grid):
        colour = COLOURS[j % 3]
        for i, t in enumerate(row):
            out.append(marker(t, colour))
            out.extend("1" if (i >> b) & 1 else "0" for b in range(inst.n))
    return tuple(out)


def find_tiling(inst: TilingInstance, max_rows: int) -> TilingSolution | None:
    """Backtracking search for a solution with at most max_rows rows."""
    w = inst.width
    for m in range(1, max_rows + 1):
        cells = [(i, j) for j in range(m) for i in range(w)]
        grid = [[None] * w for _ in range(m)]

        def place(k):
            if k == len(cells):
                return True
            i, j = cells[k]
            for t in inst.tiles:
                if (i, j) == (0, 0) and t != inst.s:
                    continue
                if (i, j) == (w - 1, m - 1) and t != inst.f:
                    continue
                if i > 0 and (grid[j][i - 1], t) not in inst.H:
                    continue
                if j > 0 and (grid[j - 1][i], t) not in inst.V:
                    continue
                grid[j][i] = t
                if place(k + 1):
                    return True
            grid[j][i] = None
            return False

        if place(0):
            return TilingSolution(tuple(tuple(r) for r in grid))
    return None


class _TilingVocabulary:
    def __init__(self, inst: TilingInstance):
        self.inst = inst
        self.alphabet = tiling_alphabet(inst)
        self.markers = [marker(t, c) for t in inst.tiles for c in COLOURS]
        self.counter = CounterFormulas(max(inst.n, 1), self.markers, alphabet=self.alphabet)

    def mark(self, v):
        return any_letter(self.markers, v)

    def tile(self, t, v):
        return any_letter([marker(t, c) for c in COLOURS], v)

    def colour(self, c, v):
        return any_letter([marker(t, c) for t in self.inst.tiles], v)

    def colour_between(self, c, u, v):
        return any_between([marker(t, c) for t in self.inst.tiles], u, v)

    def column_zero(self, v):
        if self.inst.n == 0:
            return self.mark(v)
        return self.counter.constant(v, 0)

    def last_column(self, v):
        if self.inst.n == 0:
            return self.mark(v)
        return self.counter.constant(v, self.inst.width - 1)

    def bit_letter(self, v):
        return any_letter(["0", "1"], v)


def tiling_conjuncts(inst: TilingInstance) -> dict:
    """The sentence of ``encode_tiling`` split into named conjunct families."""
    voc = _TilingVocabulary(inst)
    n = inst.n
    cf = voc.counter
    x, y = "x", "y"
    first = neg(Exists(y, Less(y, x)))
    last_marker = neg(Exists(y, conj(Less(x, y), voc.mark(y))))
    nxt = conj(voc.mark(x), voc.mark(y), Less(x, y),
               *(neg(Between(m, 1, x, y)) for m in voc.markers))

    def at_offset(i, letter_formula):
        """The letter i steps to the right of x satisfies the formula."""
        return _chain(cf, x, i, letter_formula)

    shape = [Forall(x, implies(first, voc.mark(x)))]
    for i in range(1, n + 1):
        shape.append(Forall(x, implies(voc.mark(x), at_offset(i, voc.bit_letter))))
    shape.append(Forall(x, implies(voc.mark(x), neg(at_offset(n + 1, lambda v: neg(voc.mark(v)))))))

    families = {
        "shape": conj(*shape),
        "start": Exists(x, conj(first, voc.tile(inst.s, x), voc.colour("red", x), voc.column_zero(x))),
        "end": Exists(x, conj(voc.mark(x), last_marker, voc.tile(inst.f, x), voc.last_column(x))),
        "colour": Forall(x, Forall(y, implies(nxt, conj(
            implies(voc.column_zero(y),
                    disj(*(conj(voc.colour(c, x), voc.colour(COLOURS[(k + 1) % 3], y))
                           for k, c in enumerate(COLOURS)))),
            implies(neg(voc.column_zero(y)),
                    disj(*(conj(voc.colour(c, x), voc.colour(c, y)) for c in COLOURS))))))),
        "counter": (Forall(x, Forall(y, implies(nxt, cf.INC1(x, y)))) if n else TRUE),
        "horizontal": Forall(x, Forall(y, implies(
            conj(nxt, neg(voc.column_zero(y))),
            disj(*(conj(voc.tile(t1, x), voc.tile(t2, y)) for t1, t2 in sorted(inst.H)))))),
        "vertical": Forall(x, Forall(y, implies(
            conj(Less(x, y),
                 disj(*(neg(voc.colour_between(c, x, y)) for c in COLOURS)),
                 disj(*(conj(voc.colour(c, x), voc.colour(COLOURS[(k + 1) % 3], y))
                        for k, c in enumerate(COLOURS))),
                 cf.EQ(x, y) if n else conj(voc.mark(x), voc.mark(y))),
            disj(*(conj(voc.tile(t1, x), voc.tile(t2, y)) for t1, t2 in sorted(inst.V)))))),
    }
    return families


def _chain(cf: CounterFormulas, v: str, i: int, letter_formula: Callable) -> Formula:
    w = fo2.other(v)
    inner = letter_formula(w) if i == 1 else _chain(cf, w, i - 1, letter_formula)
    return Exists(w, conj(cf.succ(v, w), inner))


def encode_tiling(inst: TilingInstance) -> Formula:
    """Sentence satisfiable exactly when the instance has a solution."""
    return conj(*tiling_conjuncts(inst).values())


# --- threshold removal -------------------------------------------------------------------

@dataclass(frozen=True)
class _Counter:
    letter: str
    r: int

    @property
    def modulus(self) -> int:
        return 1 << self.r


@dataclass
class Reduction:
    """Result of removing threshold atoms.

    ``formula`` is over ``alphabet``, whose letters are products of a
    source letter with one (counter value, colour) per counted letter.
    ``project`` maps a model back to the source alphabet and ``lift``
    decorates a source word with the unique consistent counter values.
    """
    source: Formula
    source_alphabet: Alphabet
    formula: Formula
    alphabet: Alphabet
    counters: tuple
    conjuncts: dict = field(default_factory=dict)
    _decor: dict = field(default_factory=dict, repr=False)

    def project(self, word: Sequence[str]) -> Word:
        return tuple(self._decor[a][0] for a in word)

    def lift(self, word: Sequence[str]) -> Word:
        state = [(0, 0) for _ in self.counters]
        out = []
        for a in word:
            out.append(_product_name(a, state))
            new = []
            for (val, col), c in zip(state, self.counters):
                if a == c.letter:
                    val = (val + 1) % c.modulus
                    if val == 0:
                        col = (col + 1) % 3
                new.append((val, col))
            state = new
        return tuple(out)


def _product_name(a: str, state) -> str:
    if not state:
        return a
    return a + "".join(f"#{v}{COLOURS[c][0]}" for v, c in state)


def reduce_th_to_bet(f: Formula, alphabet: Alphabet) -> Reduction:
    """Equisatisfiable sentence using only between atoms with threshold 1.

    For every letter a counted with some threshold k >= 2, each position
    carries Q mod N and the colour floor(Q / N) mod 3, where Q is the
    number of a's strictly before the position and N = 2^r > max k + 1.
    The number of a's strictly between u < v is Q(v) - Q(u) - [a(u)], and
    the colours tell whether the counter wrapped zero times, once, or more.
    """
    if fo2.free_vars(f):
        raise ValueError("reduction applies to sentences")
    unknown = fo2.letters_in(f) - set(alphabet)
    if unknown:
        raise ValueError(f"letters {sorted(unknown)} not in alphabet")
    thresholds = {a: k for a, k in fo2.max_threshold(f).items() if k >= 2}
    if not thresholds:
        return Reduction(f, alphabet, f, alphabet, (), {"formula": f},
                         {a: (a,) for a in alphabet})
    counters = tuple(_Counter(a, max(1, math.ceil(math.log2(k + 2))))
                     for a, k in sorted(thresholds.items()))
    states = list(itertools.product(*[[(v, c) for v in range(ct.modulus) for c in range(3)]
                                      for ct in counters]))
    decor: dict = {}
    letters = []
    for a in alphabet:
        for st in states:
            name = _product_name(a, st)
            decor[name] = (a, st)
            letters.append(name)
    big = Alphabet(letters)
    voc = _ReductionVocabulary(big, decor, counters)
    body = _replace(f, voc)
    x, y = "x", "y"
    first = neg(Exists(y, Less(y, x)))
    init = Forall(x, implies(first, conj(*(conj(voc.value_is(g, x, 0), voc.colour(g, 0, x))
                                           for g in range(len(counters))))))
    step_parts = []
    for g, ct in enumerate(counters):
        r = ct.r
        bit = voc.bit_accessor(g)
        counted = voc.base(ct.letter, x)
        same_colour = disj(*(conj(voc.colour(g, c, x), voc.colour(g, c, y)) for c in range(3)))
        next_colour = disj(*(conj(voc.colour(g, c, x), voc.colour(g, (c + 1) % 3, y)) for c in range(3)))
        wrapped = voc.value_is(g, y, 0)
        step_parts.append(conj(
            implies(counted, conj(inc_bits(bit, bit, r, 1, x, y),
                                  implies(wrapped, next_colour), implies(neg(wrapped), same_colour))),
            implies(neg(counted), conj(eq_bits(bit, bit, r, x, y), same_colour))))
    step = Forall(x, Forall(y, implies(successor_via_between(big, x, y), conj(*step_parts))))
    out = conj(init, step, body)
    return Reduction(f, alphabet, out, big, counters,
                     {"init": init, "step": step, "formula": body}, decor)


class _ReductionVocabulary:
    def __init__(self, big: Alphabet, decor: dict, counters: tuple):
        self.big = big
        self.decor = decor
        self.counters = counters
        self._cache: dict = {}

    def _letters(self, key, pred) -> list:
        hit = self._cache.get(key)
        if hit is None:
            hit = [name for name in self.big if pred(*self.decor[name])]
            self._cache[key] = hit
        return hit

    def base(self, a: str, v: str) -> Formula:
        return any_letter(self._letters(("base", a), lambda b, st: b == a), v)

    def base_between(self, a: str, u: str, v: str) -> Formula:
        return any_between(self._letters(("base", a), lambda b, st: b == a), u, v)

    def colour(self, g: int, c: int, v: str) -> Formula:
        return any_letter(self._letters(("col", g, c), lambda b, st: st[g][1] == c), v)

    def colour_between(self, g: int, c: int, u: str, v: str) -> Formula:
        return any_between(self._letters(("col", g, c), lambda b, st: st[g][1] == c), u, v)

    def bit_accessor(self, g: int):
        def bit(v: str, i: int) -> Formula:
            return any_letter(self._letters(("bit", g, i), lambda b, st: (st[g][0] >> (i - 1)) & 1), v)
        return bit

    def value_is(self, g: int, v: str, value: int) -> Formula:
        return const_bits(self.bit_accessor(g), self.counters[g].r, value, v)

    def index(self, a: str) -> int | None:
        for g, ct in enumerate(self.counters):
            if ct.letter == a:
                return g
        return None


def _at_least_between(voc: _ReductionVocabulary, g: int, K: int, u: str, v: str) -> Formula:
    """Given u < v: Q(v) - Q(u) >= K for counter g."""
    ct = voc.counters[g]
    N, r = ct.modulus, ct.r
    bit = voc.bit_accessor(g)
    same = disj(*(conj(voc.colour(g, c, u), voc.colour(g, c, v),
                       *(neg(voc.colour_between(g, d, u, v)) for d in range(3) if d != c))
                  for c in range(3)))
    once = disj(*(conj(voc.colour(g, c, u), voc.colour(g, (c + 1) % 3, v),
                       neg(voc.colour_between(g, (c + 2) % 3, u, v)))
                  for c in range(3)))
    # same block: C(v) - C(u) >= K;  next block: N + C(v) - C(u) >= K, i.e. C(u) <= C(v) + N - K
    in_same = ge_shift_bits(bit, bit, r, K, u, v)
    in_next = neg(ge_shift_bits(bit, bit, r, N - K + 1, v, u))
    return disj(conj(same, in_same), conj(once, in_next), conj(neg(same), neg(once)))


def _replace(f: Formula, voc: _ReductionVocabulary) -> Formula:
    memo: dict = {}

    def go(h):
        key = id(h)
        if key in memo:
            return memo[key]
        if isinstance(h, Letter):
            out = voc.base(h.letter, h.var)
        elif isinstance(h, Between):
            g = voc.index(h.letter) if h.k >= 2 else None
            if g is None:
                out = voc.base_between(h.letter, h.left, h.right)
            else:
                u, v = h.left, h.right
                counted = voc.base(h.letter, u)
                out = conj(Less(u, v), disj(
                    conj(counted, _at_least_between(voc, g, h.k + 1, u, v)),
                    conj(neg(counted), _at_least_between(voc, g, h.k, u, v))))
        elif isinstance(h, fo2.Not):
            out = fo2.Not(go(h.body))
        elif isinstance(h, (fo2.And, fo2.Or)):
            out = type(h)(tuple(go(a) for a in h.args))
        elif isinstance(h, (fo2.Implies, fo2.Iff)):
            out = type(h)(go(h.left), go(h.right))
        elif isinstance(h, (Exists, Forall)):
            out = type(h)(h.var, go(h.body))
        else:
            out = h
        memo[key] = out
        return out

    return go(f)


# --- bounded model search ---------------------------------------------------------------

def _bounded_by(body: Formula, v: str) -> bool:
    """The formula forces variable v to lie strictly before the other variable."""
    w = fo2.other(v)
    atoms = body.args if isinstance(body, fo2.And) else (body,)
    for a in atoms:
        if isinstance(a, (Less, fo2.Succ)) and (a.left, a.right) == (v, w):
            return True
        if isinstance(a, Between) and (a.left, a.right) == (v, w):
            return True
    return False


def _local(f: Formula) -> bool:
    """Truth at positions inside a prefix does not depend on what follows the prefix."""
    if isinstance(f, (fo2.Const, Letter, Between, Less, fo2.LessEq, fo2.Equal, fo2.Succ)):
        return True
    if isinstance(f, fo2.Not):
        return _local(f.body)
    if isinstance(f, (fo2.And, fo2.Or)):
        return all(_local(a) for a in f.args)
    if isinstance(f, (fo2.Implies, fo2.Iff)):
        return _local(f.left) and _local(f.right)
    if isinstance(f, Exists):
        return _bounded_by(f.body, f.var) and _local(f.body)
    if isinstance(f, Forall):
        b = f.body
        return (isinstance(b, fo2.Implies) and _bounded_by(b.left, f.var)
                and _local(b.left) and _local(b.right))
    return False


def prefix_stable(f: Formula) -> bool:
    """A violation of f in a word persists in every extension of the word.

    True for universally quantified prefixes over formulas whose
    quantifiers only look to the left of an already fixed position.
    """
    while isinstance(f, Forall):
        f = f.body
    return _local(f)


def _conjuncts(f: Formula) -> list:
    return list(f.args) if isinstance(f, fo2.And) else [f]


def _search_length(f: Formula, letters: tuple, length: int, prunes: list, first: str | None):
    """First word of exactly this length (lexicographic), optionally with a fixed first letter."""
    starts = letters if first is None else (first,)
    word: list = []

    def ok(prefix) -> bool:
        return all(fo2.eval_fo2(p, prefix, {}) for p in prunes)

    def dfs(depth):
        if depth == length:
            w = tuple(word)
            return w if fo2.eval_fo2(f, w, {}) else None
        for a in (starts if depth == 0 else letters):
            word.append(a)
            if ok(tuple(word)):
                hit = dfs(depth + 1)
                if hit is not None:
                    return hit
            word.pop()
        return None

    if length == 0:
        return () if fo2.eval_fo2(f, (), {}) else None
    return dfs(0)


def _shard(args):
    f, letters, length, prunes, first = args
    return _search_length(f, letters, length, prunes, first)


def bounded_sat(f: Formula, alphabet: Alphabet, max_len: int, workers: int = 1) -> Word | None:
    """Shortest, then lexicographically least, model of length <= max_len, or None."""
    if fo2.free_vars(f):
        raise ValueError("bounded_sat expects a sentence")
    letters = tuple(alphabet)
    prunes = [c for c in _conjuncts(f) if prefix_stable(c)]
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for length in range(max_len + 1):
            if pool is None or length == 0:
                hit = _search_length(f, letters, length, prunes, None)
            else:
                jobs = [(f, letters, length, prunes, a) for a in letters]
                hit = next((h for h in pool.map(_shard, jobs) if h is not None), None)
            if hit is not None:
                if not fo2.eval_fo2(f, hit, {}):
                    raise AssertionError("witness failed re-verification")
                return hit
    finally:
        if pool is not None:
            pool.shutdown()
    return None
