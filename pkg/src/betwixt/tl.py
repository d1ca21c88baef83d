"""Unary temporal logic with guarded future and past modalities.

``F[g] f`` holds at i when some j > i satisfies f and the open interval
(i, j) satisfies the guard g; ``P[g] f`` is the mirror image.  Guards are
boolean combinations of threshold constraints ``#B ~ c`` that count the
letters of B strictly between the two positions.

Text syntax::

    f := f | f   f & f   ! f   F[g] f   P[g] f   F f   P f   X f
         letter   true   false   ( f )
    g := g | g   g & g   ! g   ( g )   #{a,b} ~ c   #a ~ c   #A ~ c

``#A`` counts every letter (the whole alphabet, whatever it is), so
``X f`` is ``F[#A=0] f`` and ``F f`` is ``F[#{}=0] f``.  Multi-letter
names are allowed as long as they are separated by spaces or operators;
the names F, P, X, A, true and false must be quoted to be used as letters.

Words are interpreted at 1-based positions; a word is accepted when its
first position satisfies the formula, so the empty word is never
accepted.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import fo2
from .words import Alphabet

RELATIONS = ("<", "<=", ">", ">=", "=")
MAX_PRESENT_LETTERS = 6
_MAX_BOUND = 2 ** 63


class TlSyntaxError(ValueError):
    pass


# --- guards ----------------------------------------------------------------------

class Guard:
    __slots__ = ()

    def __str__(self) -> str:
        return guard_text(self)


@dataclass(frozen=True)
class ThresholdConstraint(Guard):
    """#letters ~ bound; ``letters=None`` stands for the whole alphabet."""
    letters: frozenset | None
    rel: str
    bound: int

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")
        if not 0 <= self.bound < _MAX_BOUND:
            raise ValueError(f"threshold bound {self.bound} out of range")

    def holds(self, count):
        c = self.bound
        return {"<": count < c, "<=": count <= c, ">": count > c,
                ">=": count >= c, "=": count == c}[self.rel]


@dataclass(frozen=True)
class GAnd(Guard):
    args: tuple


@dataclass(frozen=True)
class GOr(Guard):
    args: tuple


@dataclass(frozen=True)
class GNot(Guard):
    body: Guard


EMPTY_ZERO = ThresholdConstraint(frozenset(), "=", 0)   # always true
ALL_ZERO = ThresholdConstraint(None, "=", 0)            # j = i + 1


def count_zero(letters) -> ThresholdConstraint:
    return ThresholdConstraint(None if letters is None else frozenset(letters), "=", 0)


# --- formulas ---------------------------------------------------------------------

class TlFormula:
    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class TLetter(TlFormula):
    letter: str


@dataclass(frozen=True)
class TConst(TlFormula):
    value: bool


@dataclass(frozen=True)
class TNot(TlFormula):
    body: TlFormula


@dataclass(frozen=True)
class TAnd(TlFormula):
    args: tuple


@dataclass(frozen=True)
class TOr(TlFormula):
    args: tuple


@dataclass(frozen=True)
class Future(TlFormula):
    guard: Guard
    body: TlFormula


@dataclass(frozen=True)
class Past(TlFormula):
    guard: Guard
    body: TlFormula


TTRUE = TConst(True)
TFALSE = TConst(False)


def F(body: TlFormula, guard: Guard = EMPTY_ZERO) -> Future:
    return Future(guard, body)


def P(body: TlFormula, guard: Guard = EMPTY_ZERO) -> Past:
    return Past(guard, body)


def X(body: TlFormula) -> Future:
    return Future(ALL_ZERO, body)


def tand(*fs: TlFormula) -> TlFormula:
    args = []
    for f in fs:
        if isinstance(f, TConst):
            if not f.value:
                return TFALSE
            continue
        args.extend(f.args if isinstance(f, TAnd) else (f,))
    if not args:
        return TTRUE
    return args[0] if len(args) == 1 else TAnd(tuple(args))


def tor(*fs: TlFormula) -> TlFormula:
    args = []
    for f in fs:
        if isinstance(f, TConst):
            if f.value:
                return TTRUE
            continue
        args.extend(f.args if isinstance(f, TOr) else (f,))
    if not args:
        return TFALSE
    return args[0] if len(args) == 1 else TOr(tuple(args))


def tnot(f: TlFormula) -> TlFormula:
    if isinstance(f, TConst):
        return TConst(not f.value)
    if isinstance(f, TNot):
        return f.body
    return TNot(f)


def _guards_in(g: Guard):
    if isinstance(g, ThresholdConstraint):
        yield g
    elif isinstance(g, (GAnd, GOr)):
        for a in g.args:
            yield from _guards_in(a)
    else:
        yield from _guards_in(g.body)


def tl_letters(f: TlFormula) -> set:
    out: set = set()

    def go(h):
        if isinstance(h, TLetter):
            out.add(h.letter)
        elif isinstance(h, TNot):
            go(h.body)
        elif isinstance(h, (TAnd, TOr)):
            for a in h.args:
                go(a)
        elif isinstance(h, (Future, Past)):
            for c in _guards_in(h.guard):
                if c.letters:
                    out.update(c.letters)
            go(h.body)

    go(f)
    return out


def modal_depth(f: TlFormula) -> int:
    if isinstance(f, TNot):
        return modal_depth(f.body)
    if isinstance(f, (TAnd, TOr)):
        return max(modal_depth(a) for a in f.args)
    if isinstance(f, (Future, Past)):
        return 1 + modal_depth(f.body)
    return 0


# --- evaluation -------------------------------------------------------------------

class _Ctx:
    def __init__(self, word: Sequence[str]):
        self.word = tuple(word)
        self.n = len(word)
        self.arr = np.array(self.word, dtype=object)
        self._counts: dict = {}
        self.memo: dict = {}

    def counts(self, letters) -> np.ndarray:
        """counts[i, j] = occurrences of letters strictly between 0-based i and j (i < j)."""
        key = letters
        out = self._counts.get(key)
        if out is None:
            if letters is None:
                hits = np.ones(self.n, dtype=np.int64)
            else:
                hits = np.isin(self.arr, list(letters)).astype(np.int64) if self.n else np.zeros(0, np.int64)
            pre = np.concatenate(([0], np.cumsum(hits)))
            i = np.arange(self.n)[:, None]
            j = np.arange(self.n)[None, :]
            out = pre[np.maximum(j, i + 1)] - pre[np.minimum(i + 1, self.n)]
            self._counts[key] = out
        return out


def _guard_matrix(g: Guard, ctx: _Ctx) -> np.ndarray:
    if isinstance(g, ThresholdConstraint):
        return g.holds(ctx.counts(g.letters))
    if isinstance(g, GNot):
        return ~_guard_matrix(g.body, ctx)
    parts = [_guard_matrix(a, ctx) for a in g.args]
    out = parts[0]
    for p in parts[1:]:
        out = (out & p) if isinstance(g, GAnd) else (out | p)
    return out


def _eval(f: TlFormula, ctx: _Ctx) -> np.ndarray:
    key = id(f)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    n = ctx.n
    if isinstance(f, TLetter):
        out = ctx.arr == f.letter if n else np.zeros(0, dtype=bool)
    elif isinstance(f, TConst):
        out = np.full(n, f.value)
    elif isinstance(f, TNot):
        out = ~_eval(f.body, ctx)
    elif isinstance(f, (TAnd, TOr)):
        parts = [_eval(a, ctx) for a in f.args]
        out = parts[0]
        for p in parts[1:]:
            out = (out & p) if isinstance(f, TAnd) else (out | p)
    elif isinstance(f, Future):
        g = _guard_matrix(f.guard, ctx)           # g[i, j] with i < j
        later = np.triu(np.ones((n, n), dtype=bool), 1)
        out = (g & later & _eval(f.body, ctx)[None, :]).any(axis=1)
    elif isinstance(f, Past):
        g = _guard_matrix(f.guard, ctx)           # g[j, i] with j < i
        later = np.triu(np.ones((n, n), dtype=bool), 1)
        out = (g & later & _eval(f.body, ctx)[:, None]).any(axis=0)
    else:
        raise TypeError(f"not a temporal formula: {f!r}")
    ctx.memo[key] = out
    return out


def eval_positions(f: TlFormula, word: Sequence[str]) -> np.ndarray:
    """Truth value of f at every position of word (0-based array)."""
    return _eval(f, _Ctx(word)).copy()


def eval_tl(f: TlFormula, word: Sequence[str], i: int) -> bool:
    """(word, i) satisfies f, for 1-based i."""
    if not word:
        raise ValueError("temporal formulas are evaluated in nonempty words")
    if not 1 <= i <= len(word):
        raise ValueError(f"position {i} outside 1..{len(word)}")
    return bool(_eval(f, _Ctx(word))[i - 1])


def accepts_tl(f: TlFormula, word: Sequence[str]) -> bool:
    """word satisfies f at its first position; the empty word is rejected."""
    if not word:
        return False
    return bool(_eval(f, _Ctx(word))[0])


def guard_sat(g: Guard, word: Sequence[str], i: int, j: int) -> bool:
    """(word, i, j) satisfies the guard, for 1-based i < j."""
    if i >= j:
        raise ValueError(f"guard needs i < j, got i={i}, j={j}")
    if not (1 <= i and j <= len(word)):
        raise ValueError(f"positions {i}, {j} outside 1..{len(word)}")
    return _guard_sat_direct(g, word, i, j)


def _guard_sat_direct(g: Guard, word, i: int, j: int) -> bool:
    if isinstance(g, ThresholdConstraint):
        inner = word[i:j - 1]
        cnt = len(inner) if g.letters is None else sum(1 for a in inner if a in g.letters)
        return bool(g.holds(cnt))
    if isinstance(g, GNot):
        return not _guard_sat_direct(g.body, word, i, j)
    vals = (_guard_sat_direct(a, word, i, j) for a in g.args)
    return all(vals) if isinstance(g, GAnd) else any(vals)


# --- guard normal forms -------------------------------------------------------------

_NEGATE = {"<": ">=", "<=": ">", ">": "<=", ">=": "<"}


def _negate_constraint(c: ThresholdConstraint) -> list:
    """Disjuncts equivalent to the negation of a single constraint."""
    if c.rel == "=":
        alts = [ThresholdConstraint(c.letters, ">", c.bound)]
        if c.bound > 0:
            alts.insert(0, ThresholdConstraint(c.letters, "<", c.bound))
        return alts
    return [ThresholdConstraint(c.letters, _NEGATE[c.rel], c.bound)]


def guard_dnf(g: Guard, negate: bool = False) -> list:
    """Disjunctive normal form: a list of conjunctions (tuples of constraints)."""
    if isinstance(g, ThresholdConstraint):
        return [(c,) for c in _negate_constraint(g)] if negate else [(g,)]
    if isinstance(g, GNot):
        return guard_dnf(g.body, not negate)
    conjunctive = isinstance(g, GAnd) != negate
    parts = [guard_dnf(a, negate) for a in g.args]
    if conjunctive:
        out = [()]
        for p in parts:
            out = [t + s for t in out for s in p]
        return out
    return [t for p in parts for t in p]


def _invariant_kind(c: ThresholdConstraint):
    """'zero', 'some', True or False for constraints equivalent to #B=0 / #B>0 / constants."""
    zero = {("=", 0), ("<=", 0), ("<", 1)}
    some = {(">", 0), (">=", 1)}
    key = (c.rel, c.bound)
    if c.letters is not None and not c.letters:
        return c.holds(0)
    if key in zero:
        return "zero"
    if key in some:
        return "some"
    if key == (">=", 0):
        return True
    if key == ("<", 0):
        return False
    raise ValueError(f"guard constraint {guard_text(c)} is not an invariant constraint")


def _letter_dnf(g: Guard, alphabet, negate: bool = False) -> list:
    """DNF over per-letter literals: list of (absent, present) frozenset pairs."""
    if isinstance(g, ThresholdConstraint):
        kind = _invariant_kind(g)
        letters = g.letters
        if letters is None:
            if alphabet is None:
                if kind == "zero" and not negate:
                    return [("ALL", frozenset())]
                raise ValueError("a constraint on #A needs the alphabet to be known")
            letters = frozenset(alphabet)
        if isinstance(kind, bool):
            return [(frozenset(), frozenset())] if kind != negate else []
        if (kind == "zero") != negate:
            return [(frozenset(letters), frozenset())]
        return [(frozenset(), frozenset({a})) for a in sorted(letters)]
    if isinstance(g, GNot):
        return _letter_dnf(g.body, alphabet, not negate)
    conjunctive = isinstance(g, GAnd) != negate
    parts = [_letter_dnf(a, alphabet, negate) for a in g.args]
    if conjunctive:
        out = [(frozenset(), frozenset())]
        for p in parts:
            out = [_meet(t, s) for t in out for s in p]
        return out
    return [t for p in parts for t in p]


def _meet(t, s):
    z1, p1 = t
    z2, p2 = s
    if z1 == "ALL" or z2 == "ALL":
        return ("ALL", p1 | p2)
    return (z1 | z2, p1 | p2)


def _clean_terms(terms) -> list:
    out = []
    for z, p in terms:
        if z == "ALL":
            if p:
                continue
        elif z & p:
            continue
        if (z, p) not in out:
            out.append((z, p))
    return out


def btlinv_to_utlinv(f: TlFormula, alphabet: Alphabet | None = None) -> TlFormula:
    """Rewrite boolean combinations of invariant guards into single #B=0 guards.

    A conjunction of "letter a absent" and "letter b present" literals is
    expanded into one nested modality per order of first appearance of the
    present letters.  ``alphabet`` is needed only when a guard mentions
    ``#A`` in a form other than ``#A=0``.
    """
    letters = None if alphabet is None else tuple(alphabet)
    memo: dict = {}

    def go(h):
        key = id(h)
        if key in memo:
            return memo[key]
        if isinstance(h, (TLetter, TConst)):
            out = h
        elif isinstance(h, TNot):
            out = TNot(go(h.body))
        elif isinstance(h, (TAnd, TOr)):
            out = type(h)(tuple(go(a) for a in h.args))
        elif isinstance(h, (Future, Past)):
            body = go(h.body)
            mod = Future if isinstance(h, Future) else Past
            if _is_single_zero(h.guard):
                out = mod(h.guard, body)
            else:
                terms = _clean_terms(_letter_dnf(h.guard, letters))
                out = tor(*(_expand(mod, z, p, body) for z, p in terms))
        else:
            raise TypeError(f"not a temporal formula: {h!r}")
        memo[key] = out
        return out

    return go(f)


def _is_single_zero(g: Guard) -> bool:
    return isinstance(g, ThresholdConstraint) and g.rel == "=" and g.bound == 0


def _expand(mod, absent, present, body: TlFormula) -> TlFormula:
    if absent == "ALL":
        return mod(ALL_ZERO, body)
    if len(present) > MAX_PRESENT_LETTERS:
        raise ValueError(f"guard requires {len(present)} letters present; "
                         f"at most {MAX_PRESENT_LETTERS} are supported")
    alts = []
    for order in itertools.permutations(sorted(present)):
        inner = mod(count_zero(absent), body)
        # build from the destination outwards: the last-seen letter wraps ``inner``
        for k in range(len(order) - 1, -1, -1):
            blocked = absent | frozenset(order[k:])
            inner = mod(count_zero(blocked), tand(TLetter(order[k]), inner))
        alts.append(inner)
    return tor(*alts)


# --- translation into two-variable logic ----------------------------------------------

def _at_least(letters, c: int, u: str, v: str, alphabet) -> fo2.Formula:
    """At least c letters from the set strictly between u and v (u < v assumed)."""
    if c <= 0:
        return fo2.TRUE
    if letters is None:
        if alphabet is None:
            if c == 1:
                return _some_position_between(u, v)
            raise ValueError("counting #A needs the alphabet to be known")
        letters = alphabet
    letters = sorted(letters)
    if not letters:
        return fo2.FALSE
    terms = []
    for split in _compositions(c, len(letters)):
        terms.append(fo2.conj(*(fo2.Between(a, k, u, v) for a, k in zip(letters, split) if k)))
    return fo2.disj(*terms)


def _some_position_between(u: str, v: str) -> fo2.Formula:
    # u < v with v not the immediate successor of u
    return fo2.conj(fo2.Less(u, v), fo2.neg(fo2.Succ(u, v)))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def guard_to_fo2(g: Guard, u: str, v: str, alphabet=None) -> fo2.Formula:
    """The guard as a formula about the interval between u < v."""
    if isinstance(g, ThresholdConstraint):
        c, rel, B = g.bound, g.rel, g.letters
        ge = lambda k: _at_least(B, k, u, v, alphabet)  # noqa: E731
        if rel == ">=":
            return ge(c)
        if rel == ">":
            return ge(c + 1)
        if rel == "<":
            return fo2.neg(ge(c))
        if rel == "<=":
            return fo2.neg(ge(c + 1))
        if B is None and c == 0 and alphabet is None:
            return fo2.Succ(u, v)
        return fo2.conj(ge(c), fo2.neg(ge(c + 1)))
    if isinstance(g, GNot):
        return fo2.neg(guard_to_fo2(g.body, u, v, alphabet))
    parts = [guard_to_fo2(a, u, v, alphabet) for a in g.args]
    return fo2.conj(*parts) if isinstance(g, GAnd) else fo2.disj(*parts)


def tl_to_fo2(f: TlFormula, var: str = "x", alphabet: Alphabet | None = None) -> fo2.Formula:
    """Equivalent two-variable formula with the single free variable ``var``.

    ``F[g] f`` becomes ``Ey. x<y & g(x,y) & f(y)``; guards turn into
    boolean combinations of threshold between atoms.  Constraints on the
    whole alphabet ``#A`` are expressed with ``succ`` when they say "next
    position" and otherwise need ``alphabet``.
    """
    letters = None if alphabet is None else tuple(alphabet)
    memo: dict = {}

    def go(h, v):
        key = (id(h), v)
        if key in memo:
            return memo[key]
        if isinstance(h, TLetter):
            out = fo2.Letter(h.letter, v)
        elif isinstance(h, TConst):
            out = fo2.Const(h.value)
        elif isinstance(h, TNot):
            out = fo2.neg(go(h.body, v))
        elif isinstance(h, TAnd):
            out = fo2.conj(*(go(a, v) for a in h.args))
        elif isinstance(h, TOr):
            out = fo2.disj(*(go(a, v) for a in h.args))
        elif isinstance(h, (Future, Past)):
            w = fo2.other(v)
            if isinstance(h, Future):
                lo, hi = v, w
            else:
                lo, hi = w, v
            out = fo2.Exists(w, fo2.conj(fo2.Less(lo, hi), guard_to_fo2(h.guard, lo, hi, letters),
                                         go(h.body, w)))
        else:
            raise TypeError(f"not a temporal formula: {h!r}")
        memo[key] = out
        return out

    return go(f, var)


def tl_to_fo2_sentence(f: TlFormula, alphabet: Alphabet | None = None) -> fo2.Formula:
    """Sentence defining the language of f: f holds at the first position."""
    first = fo2.neg(fo2.Exists("y", fo2.Less("y", "x")))
    return fo2.Exists("x", fo2.conj(first, tl_to_fo2(f, "x", alphabet)))


# --- text syntax ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<quoted>'[^']*')|(?P<op><=|>=|[()\[\]{}&|!<>=#,])"
                    r"|(?P<num>\d+(?![A-Za-z_]))|(?P<ident>[A-Za-z0-9_]+)|(?P<bad>\S))")
_KEYWORDS = {"F", "P", "X", "A", "true", "false"}


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        kind = m.lastgroup
        val = m.group(kind)
        start = m.start(kind)
        if kind == "bad":
            raise TlSyntaxError(f"unexpected character {val!r} at offset {start}")
        if kind == "quoted":
            if len(val) < 3:
                raise TlSyntaxError(f"empty quoted letter at offset {start}")
            toks.append(("letter", val[1:-1], start))
        elif kind == "ident" and val in _KEYWORDS:
            toks.append((val, val, start))
        elif kind == "ident":
            toks.append(("letter", val, start))
        else:
            toks.append((kind if kind == "num" else val, val, start))
        pos = m.end()
    toks.append(("eof", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet | None):
        self.toks = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str | None = None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise TlSyntaxError(f"expected {kind!r} at offset {tok[2]}, found {found}")
        self.i += 1
        return tok

    def done(self):
        if self.peek()[0] != "eof":
            raise TlSyntaxError(f"unexpected {self.peek()[1]!r} at offset {self.peek()[2]}")

    def letter(self, tok) -> str:
        kind, val, off = tok
        if kind == "num":
            kind = "letter"
        if kind != "letter":
            raise TlSyntaxError(f"expected a letter at offset {off}, found {val!r}")
        if self.alphabet is not None and val not in self.alphabet:
            raise TlSyntaxError(f"unknown letter {val!r} at offset {off}")
        return val

    # formulas
    def formula(self) -> TlFormula:
        args = [self.conj()]
        while self.peek()[0] == "|":
            self.take()
            args.append(self.conj())
        return args[0] if len(args) == 1 else TOr(tuple(args))

    def conj(self) -> TlFormula:
        args = [self.unary()]
        while self.peek()[0] == "&":
            self.take()
            args.append(self.unary())
        return args[0] if len(args) == 1 else TAnd(tuple(args))

    def unary(self) -> TlFormula:
        kind, val, off = self.peek()
        if kind == "!":
            self.take()
            return TNot(self.unary())
        if kind in ("F", "P"):
            self.take()
            guard = EMPTY_ZERO
            if self.peek()[0] == "[":
                self.take()
                guard = self.guard()
                self.take("]")
            body = self.unary()
            return Future(guard, body) if kind == "F" else Past(guard, body)
        if kind == "X":
            self.take()
            return X(self.unary())
        if kind == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if kind in ("true", "false"):
            self.take()
            return TConst(kind == "true")
        return TLetter(self.letter(self.take()))

    # guards
    def guard(self) -> Guard:
        args = [self.gconj()]
        while self.peek()[0] == "|":
            self.take()
            args.append(self.gconj())
        return args[0] if len(args) == 1 else GOr(tuple(args))

    def gconj(self) -> Guard:
        args = [self.gunary()]
        while self.peek()[0] == "&":
            self.take()
            args.append(self.gunary())
        return args[0] if len(args) == 1 else GAnd(tuple(args))

    def gunary(self) -> Guard:
        kind, val, off = self.peek()
        if kind == "!":
            self.take()
            return GNot(self.gunary())
        if kind == "(":
            self.take()
            g = self.guard()
            self.take(")")
            return g
        return self.constraint()

    def constraint(self) -> ThresholdConstraint:
        self.take("#")
        kind, val, off = self.peek()
        if kind == "A":
            self.take()
            letters = None
        elif kind == "{":
            self.take()
            found = []
            if self.peek()[0] != "}":
                found.append(self.letter(self.take()))
                while self.peek()[0] == ",":
                    self.take()
                    found.append(self.letter(self.take()))
            self.take("}")
            letters = frozenset(found)
        else:
            letters = frozenset({self.letter(self.take())})
        kind, rel, off = self.take()
        if rel not in RELATIONS:
            raise TlSyntaxError(f"expected a comparison at offset {off}")
        kind, num, off = self.take()
        if kind != "num":
            raise TlSyntaxError(f"expected a number at offset {off}")
        bound = int(num)
        if bound >= _MAX_BOUND:
            raise TlSyntaxError(f"threshold {bound} too large at offset {off}")
        return ThresholdConstraint(letters, rel, bound)


def parse_tl(text: str, alphabet: Alphabet | None = None) -> TlFormula:
    p = _Parser(text, alphabet)
    f = p.formula()
    p.done()
    return f


def parse_guard(text: str, alphabet: Alphabet | None = None) -> Guard:
    p = _Parser(text, alphabet)
    g = p.guard()
    p.done()
    return g


def _letter_text(a: str) -> str:
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*|[0-9]+", a) and a not in _KEYWORDS:
        return a
    return f"'{a}'"


def guard_text(g: Guard, need: int = 0) -> str:
    if isinstance(g, ThresholdConstraint):
        if g.letters is None:
            s = "A"
        else:
            s = "{" + ",".join(_letter_text(a) for a in sorted(g.letters)) + "}"
        return f"#{s}{g.rel}{g.bound}"
    if isinstance(g, GNot):
        return "!" + guard_text(g.body, 3)
    if isinstance(g, GAnd):
        s = " & ".join(guard_text(a, 2) for a in g.args)
        return f"({s})" if need > 2 else s
    s = " | ".join(guard_text(a, 2) for a in g.args)
    return f"({s})" if need > 1 else s


def to_text(f: TlFormula) -> str:
    """Print f so that parse_tl gives it back."""
    return _show(f, 0)


def _show(f: TlFormula, need: int) -> str:
    # precedence: or 1, and 2, unary 3
    if isinstance(f, TLetter):
        return _letter_text(f.letter)
    if isinstance(f, TConst):
        return "true" if f.value else "false"
    if isinstance(f, TNot):
        return "!" + _show(f.body, 3)
    if isinstance(f, TAnd):
        s = " & ".join(_show(a, 3) for a in f.args)
        return f"({s})" if need > 2 else s
    if isinstance(f, TOr):
        s = " | ".join(_show(a, 2) for a in f.args)
        return f"({s})" if need > 1 else s
    if isinstance(f, (Future, Past)):
        op = "F" if isinstance(f, Future) else "P"
        if f.guard == EMPTY_ZERO:
            head = op
        elif f.guard == ALL_ZERO and isinstance(f, Future):
            head = "X"
        else:
            head = f"{op}[{guard_text(f.guard)}]"
        return f"{head} {_show(f.body, 3)}"
    raise TypeError(f"not a temporal formula: {f!r}")
