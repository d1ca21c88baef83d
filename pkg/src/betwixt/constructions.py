"""Word families and congruences used in the separation arguments.

* ``xst_words``: the words v, a, b and X_{S,T} = (v^S a v^S b v^S)^T over
  the letters a1..ar, b1..bs, c1..c(2r+2s).
* ``block_signature``: the threshold-T block congruence on {a,b}*.
* ``circuit_langs`` / ``circuit_eval``: prefix encodings of alternating
  OR/AND circuits, gate letters g1, g2, ... (odd index OR, even index AND).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .regex import Regex, Star, Plus, Sym, concat, union


@dataclass(frozen=True)
class XstParams:
    r: int = 1
    s: int = 1
    S: int = 1
    T: int = 1

    def __post_init__(self):
        for name in ("r", "s", "S", "T"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


@dataclass(frozen=True)
class XstWords:
    v: tuple
    bold_a: tuple
    bold_b: tuple
    X: tuple

    def to_json(self) -> dict:
        return {"v": list(self.v), "bold_a": list(self.bold_a), "bold_b": list(self.bold_b),
                "X": list(self.X), "length": len(self.X)}


def xst_alphabet(r: int, s: int) -> list:
    return ([f"a{i}" for i in range(1, r + 1)] + [f"b{j}" for j in range(1, s + 1)]
            + [f"c{k}" for k in range(1, 2 * r + 2 * s + 1)])


def xst_words(p: XstParams) -> XstWords:
    """v = c1 a1 c2 ... c(2r-1) ar c(2r) c(2r+1) b1 c(2r+2) ... c(2r+2s-1) bs c(2r+2s)."""
    gens = [f"a{i}" for i in range(1, p.r + 1)] + [f"b{j}" for j in range(1, p.s + 1)]
    v = []
    for idx, g in enumerate(gens, start=1):
        v += [f"c{2 * idx - 1}", g, f"c{2 * idx}"]
    v = tuple(v)
    bold_a = tuple(gens[:p.r])
    bold_b = tuple(gens[p.r:])
    vs = v * p.S
    X = (vs + bold_a + vs + bold_b + vs) * p.T
    return XstWords(v, bold_a, bold_b, X)


def r_word_factors(word: Sequence[str], v: Sequence[str], bold_a, bold_b) -> list:
    """Factor a word into ('v', n), ('a',) and ('b',) pieces; None if impossible."""
    word, v = tuple(word), tuple(v)
    out: list = []
    i = 0
    while i < len(word):
        if word[i:i + len(v)] == v:
            if out and out[-1][0] == "v":
                out[-1] = ("v", out[-1][1] + 1)
            else:
                out.append(("v", 1))
            i += len(v)
        elif word[i:i + len(bold_a)] == tuple(bold_a):
            out.append(("a",))
            i += len(bold_a)
        elif word[i:i + len(bold_b)] == tuple(bold_b):
            out.append(("b",))
            i += len(bold_b)
        else:
            return None
    return out


def is_r_word(word, R: int, v, bold_a, bold_b) -> bool:
    """First and last factors are powers v^n with n >= R, and every a/b sits between such powers."""
    f = r_word_factors(word, v, bold_a, bold_b)
    if not f or f[0][0] != "v" or f[-1][0] != "v":
        return False
    for k, piece in enumerate(f):
        if piece[0] == "v":
            if piece[1] < R:
                return False
        elif f[k - 1][0] != "v" or f[k + 1][0] != "v":
            return False
    return True


# --- block congruence ----------------------------------------------------------------

@dataclass(frozen=True)
class BlockSignature:
    """Threshold-T description of a word over {a, b}.

    ``blocks`` lists, right to left, (first sub-block length, second
    sub-block length) of the first min(count, T) blocks, each capped at T;
    an incomplete leftmost block has first component 0.
    """
    threshold: int
    block_count: int
    last_letter: str | None
    blocks: tuple

    @property
    def count_saturated(self) -> bool:
        return self.block_count >= self.threshold

    def to_json(self) -> dict:
        T = self.threshold
        cap = lambda v: f">={T}" if v >= T else v  # noqa: E731
        return {
            "threshold": T,
            "block_count": cap(self.block_count),
            "last_letter": self.last_letter,
            "blocks": [[cap(k), cap(l)] for k, l in self.blocks],
        }


def sub_blocks(word: Sequence[str]) -> list:
    """Maximal runs as (letter, length), left to right."""
    runs: list = []
    for a in word:
        if runs and runs[-1][0] == a:
            runs[-1][1] += 1
        else:
            runs.append([a, 1])
    return [(a, n) for a, n in runs]


def blocks_right_to_left(word: Sequence[str]) -> list:
    """Pairs of run lengths (k, l), rightmost block first; a lone leftmost run gives (0, l)."""
    runs = [n for _, n in sub_blocks(word)]
    out = []
    while runs:
        l = runs.pop()
        k = runs.pop() if runs else 0
        out.append((k, l))
    return out


def block_signature(word: Sequence[str], T: int, count_threshold: int | None = None) -> BlockSignature:
    """Signature of the threshold-T block congruence.

    Two words are congruent iff their signatures are equal.  The number
    of blocks is compared at threshold T unless ``count_threshold`` says
    otherwise.
    """
    if T < 1:
        raise ValueError("threshold must be at least 1")
    bad = set(word) - {"a", "b"}
    if bad:
        raise ValueError(f"block signatures are defined over {{a,b}}; found {sorted(bad)}")
    ct = T if count_threshold is None else count_threshold
    blocks = blocks_right_to_left(word)
    kept = tuple((min(k, T), min(l, T)) for k, l in blocks[:min(len(blocks), T)])
    return BlockSignature(T, min(len(blocks), ct), word[-1] if word else None, kept)


def congruent(u, v, T: int) -> bool:
    return block_signature(u, T) == block_signature(v, T)


def signature_growth(T: int, max_len: int, count_threshold: int | None = None) -> list:
    """Number of distinct signatures realized by words of length <= n, for n = 0..max_len.

    Words are explored breadth-first by appending letters to one
    representative per class, which is sound because appending is
    compatible with the congruence whenever it is one.
    """
    seen = {block_signature((), T, count_threshold): ()}
    frontier = [()]
    counts = [1]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in ("a", "b"):
                u = w + (a,)
                sig = block_signature(u, T, count_threshold)
                if sig not in seen:
                    seen[sig] = u
                    nxt.append(u)
        frontier = nxt
        counts.append(len(seen))
    return counts


# --- circuits --------------------------------------------------------------------------

def gate(i: int) -> str:
    return f"g{i}"


def circuit_langs(m: int) -> tuple:
    """Regexes (C_m, T_m): all depth-m circuits and those evaluating to true."""
    if m < 1:
        raise ValueError("circuit depth m must be at least 1")
    bit = union(Sym("0"), Sym("1"))
    C: Regex = concat(Sym(gate(1)), Plus(bit))
    T: Regex = concat(Sym(gate(1)), Star(bit), Sym("1"), Star(bit))
    for k in range(2, m + 1):
        g = Sym(gate(k))
        C, T = concat(g, Plus(C)), (concat(g, Plus(T)) if k % 2 == 0
                                    else concat(g, Star(C), T, Star(C)))
    return C, T


def circuit_alphabet(m: int) -> list:
    return ["0", "1"] + [gate(i) for i in range(1, m + 1)]


class CircuitError(ValueError):
    pass


_GATE = re.compile(r"g([1-9][0-9]*)$")


def circuit_eval(word: Sequence[str]) -> bool:
    """Value of the circuit whose prefix encoding is ``word``."""
    word = tuple(word)
    if not word:
        raise CircuitError("empty word is not a circuit")
    value, end, _ = _parse_gate(word, 0)
    if end != len(word):
        raise CircuitError(f"trailing symbols after position {end}")
    return value


def circuit_depth(word: Sequence[str]) -> int:
    word = tuple(word)
    _, end, depth = _parse_gate(word, 0)
    if end != len(word):
        raise CircuitError(f"trailing symbols after position {end}")
    return depth


def _parse_gate(word: tuple, i: int):
    m = _GATE.match(word[i]) if i < len(word) else None
    if m is None:
        raise CircuitError(f"expected a gate letter at position {i + 1}")
    level = int(m.group(1))
    i += 1
    vals = []
    if level == 1:
        while i < len(word) and word[i] in ("0", "1"):
            vals.append(word[i] == "1")
            i += 1
    else:
        want = gate(level - 1)
        while i < len(word) and word[i] == want:
            v, i, _ = _parse_gate(word, i)
            vals.append(v)
    if not vals:
        raise CircuitError(f"gate {gate(level)} has no inputs")
    return (any(vals) if level % 2 else all(vals)), i, level
