"""Binary counters expressed in two-variable logic.

A counter value is written after a marker letter as r bits over the
letters ``0`` and ``1``, least significant bit first, so that for a marker
at position x the bit b_i (i = 1..r) sits at position x + i.

Arithmetic is written once, over *bit accessors*: functions ``bit(v, i)``
returning a formula that says "bit i of the counter read at variable v is
1".  Serial counters read the bit through a successor chain; the
threshold reduction stores a whole counter in one product letter and
reads bits as letter disjunctions.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .fo2 import (FALSE, TRUE, Between, Exists, Formula, Letter, Less, Succ, any_letter, conj,
                  disj, iff, neg, other, successor_via_between, xor)
from .words import Alphabet

BitAccessor = Callable[[str, int], Formula]


def _bits_of(c: int, r: int) -> list:
    return [(c >> (i - 1)) & 1 for i in range(1, r + 1)]


def eq_bits(bx: BitAccessor, by: BitAccessor, r: int, u: str = "x", v: str = "y") -> Formula:
    return conj(*(iff(bx(u, i), by(v, i)) for i in range(1, r + 1)))


def add_const_bits(bx: BitAccessor, r: int, c: int, u: str = "x") -> tuple:
    """Sum bits of val(u) + c as formulas over u, plus the carry out of bit r."""
    carry: Formula = FALSE
    out = []
    for i, ci in enumerate(_bits_of(c, r), start=1):
        xi = bx(u, i)
        if ci:
            out.append(neg(xor(xi, carry)))
            carry = disj(xi, carry)
        else:
            out.append(xor(xi, carry))
            carry = conj(xi, carry)
    if c >> r:
        carry = TRUE  # c itself needs more than r bits
    return out, carry


def inc_bits(bx: BitAccessor, by: BitAccessor, r: int, c: int = 1,
             u: str = "x", v: str = "y") -> Formula:
    """val(v) = val(u) + c  (mod 2^r)."""
    sums, _ = add_const_bits(bx, r, c % (1 << r), u)
    return conj(*(iff(by(v, i), s) for i, s in enumerate(sums, start=1)))


def _less_words(xs: Sequence[Formula], ys: Sequence[Formula]) -> Formula:
    """Unsigned xs < ys for bit formulas listed least significant first."""
    terms = []
    r = len(xs)
    for i in range(r):
        higher = [iff(xs[k], ys[k]) for k in range(i + 1, r)]
        terms.append(conj(neg(xs[i]), ys[i], *higher))
    return disj(*terms)


def lt_bits(bx: BitAccessor, by: BitAccessor, r: int, u: str = "x", v: str = "y") -> Formula:
    """val(u) < val(v)."""
    return _less_words([bx(u, i) for i in range(1, r + 1)], [by(v, i) for i in range(1, r + 1)])


def ge_shift_bits(bx: BitAccessor, by: BitAccessor, r: int, c: int,
                  u: str = "x", v: str = "y") -> Formula:
    """val(v) >= val(u) + c as integers (no wrap-around)."""
    if c <= 0:
        return TRUE
    sums, carry = add_const_bits(bx, r, c, u)
    ys = [by(v, i) for i in range(1, r + 1)]
    return conj(neg(carry), neg(_less_words(ys, sums)))


def const_bits(bx: BitAccessor, r: int, c: int, v: str = "x") -> Formula:
    """val(v) = c."""
    return conj(*(bx(v, i) if b else neg(bx(v, i)) for i, b in enumerate(_bits_of(c, r), start=1)))


class CounterFormulas:
    """Builders for serial r-bit counters.

    ``markers`` are the letters that start a counter block (the plain
    counter alphabet uses the single marker ``m``).  With ``alphabet``
    given, successor steps are spelled with between atoms instead of the
    ``succ`` atom.
    """

    def __init__(self, r: int, markers: Sequence[str] = ("m",), zero: str = "0", one: str = "1",
                 alphabet: Alphabet | None = None):
        if r < 1:
            raise ValueError("counter width r must be at least 1")
        self.r = r
        self.markers = tuple(markers)
        self.zero = zero
        self.one = one
        self.alphabet = alphabet

    def succ(self, u: str, v: str) -> Formula:
        if self.alphabet is None:
            return Succ(u, v)
        return successor_via_between(self.alphabet, u, v)

    def suc_chain(self, v: str, bits: Sequence[str]) -> Formula:
        """suc^i(v) = b_1 ... b_i: the letters right after v read ``bits``."""
        if not bits:
            return TRUE
        w = other(v)
        return Exists(w, conj(self.succ(v, w), Letter(bits[0], w), self.suc_chain(w, bits[1:])))

    def bit_is(self, v: str, i: int, bit: int) -> Formula:
        """The letter at v + i is the given bit."""
        if not 1 <= i <= self.r:
            raise ValueError(f"bit index {i} outside 1..{self.r}")
        return self._at(v, i, self.one if bit else self.zero)

    def _at(self, v: str, i: int, letter: str) -> Formula:
        w = other(v)
        inner = Letter(letter, w) if i == 1 else self._at(w, i - 1, letter)
        return Exists(w, conj(self.succ(v, w), inner))

    def bit(self, v: str, i: int) -> Formula:
        return self.bit_is(v, i, 1)

    def mark(self, v: str) -> Formula:
        return any_letter(self.markers, v)

    def constant(self, v: str, c: int) -> Formula:
        """mark(v) and the block after v spells c."""
        bits = [self.one if b else self.zero for b in _bits_of(c, self.r)]
        return conj(self.mark(v), self.suc_chain(v, bits))

    def _marks(self, u: str, v: str) -> Formula:
        return conj(self.mark(u), self.mark(v))

    def EQ(self, u: str = "x", v: str = "y") -> Formula:
        return conj(self._marks(u, v),
                    *(iff(self.bit_is(u, i, 0), self.bit_is(v, i, 0)) for i in range(1, self.r + 1)))

    def INC1(self, u: str = "x", v: str = "y") -> Formula:
        """val(v) = val(u) + 1 mod 2^r: the lowest 0 of u flips, the 1s below it clear."""
        r = self.r
        parts = []
        for i in range(1, r + 1):
            cond = conj(self.bit_is(u, i, 0), *(self.bit_is(u, j, 1) for j in range(1, i)))
            then = conj(self.bit_is(v, i, 1), *(self.bit_is(v, j, 0) for j in range(1, i)),
                        *(iff(self.bit_is(u, k, 0), self.bit_is(v, k, 0)) for k in range(i + 1, r + 1)))
            parts.append(disj(neg(cond), then))
        all_ones = conj(*(self.bit_is(u, i, 1) for i in range(1, r + 1)))
        parts.append(disj(neg(all_ones), conj(*(self.bit_is(v, j, 0) for j in range(1, r + 1)))))
        return conj(self._marks(u, v), *parts)

    def INCc(self, c: int, u: str = "x", v: str = "y") -> Formula:
        """val(v) = val(u) + c mod 2^r."""
        return conj(self._marks(u, v), inc_bits(self.bit, self.bit, self.r, c, u, v))

    def LT(self, u: str = "x", v: str = "y") -> Formula:
        return conj(self._marks(u, v), lt_bits(self.bit, self.bit, self.r, u, v))

    def GT(self, u: str = "x", v: str = "y") -> Formula:
        return conj(self._marks(u, v), lt_bits(self.bit, self.bit, self.r, v, u))

    def next_marker(self, u: str = "x", v: str = "y") -> Formula:
        """u and v are consecutive markers."""
        return conj(self._marks(u, v), Less(u, v),
                    *(neg(Between(m, 1, u, v)) for m in self.markers))


def build_counter_formulas(r: int, **kw) -> dict:
    """The counter builders for width r, keyed by name."""
    cf = CounterFormulas(r, **kw)
    return {
        "suc_chain": cf.suc_chain,
        "EQ": cf.EQ,
        "INC1": cf.INC1,
        "INCc": cf.INCc,
        "LT": cf.LT,
        "GT": cf.GT,
        "constant": cf.constant,
        "next_marker": cf.next_marker,
    }


def counter_word(values: Sequence[int], r: int, marker: str = "m") -> tuple:
    """Serial encoding of a list of counter values."""
    out = []
    for val in values:
        out.append(marker)
        out.extend("1" if b else "0" for b in _bits_of(val % (1 << r), r))
    return tuple(out)


def read_counter(word: Sequence[str], pos: int, r: int) -> int:
    """Integer stored after the marker at 1-based position ``pos``."""
    return sum(1 << (i - 1) for i in range(1, r + 1) if word[pos - 1 + i] == "1")
