"""Two-variable first-order logic on words with between and threshold atoms.

Formulas use only the variables ``x`` and ``y``.  ``Between(a, k, u, v)``
holds iff u < v and at least k positions strictly between u and v carry
the letter a; with k = 1 this is the plain between predicate.

Text syntax::

    Ex. f   Ax. f          quantifiers (the body extends as far right as possible)
    ! f   f & g   f | g   f -> g   f <-> g
    a(x)   bet(a,k,x,y)   bet(a,x,y)   succ(x,y)   x<y  x<=y  x=y  x>y  x>=y
    T   F

Letters that are not plain identifiers are written in single quotes.

Evaluation is bottom-up over numpy boolean matrices indexed by the values
of (x, y); a subformula that does not mention a variable keeps a length-1
axis for it.  Each node is evaluated once per call, so the cost is
O(|f| * |w|^2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .words import Alphabet, Word, enumerate_words

VARS = ("x", "y")


class Fo2SyntaxError(ValueError):
    pass


class Formula:
    __slots__ = ()

    def __and__(self, other):
        return And((self, other))

    def __or__(self, other):
        return Or((self, other))

    def __invert__(self):
        return Not(self)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Letter(Formula):
    letter: str
    var: str


@dataclass(frozen=True)
class Between(Formula):
    letter: str
    k: int
    left: str
    right: str

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("between threshold must be at least 1")


@dataclass(frozen=True)
class Less(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class LessEq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Equal(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Succ(Formula):
    """right = left + 1"""
    left: str
    right: str


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    args: tuple


@dataclass(frozen=True)
class Or(Formula):
    args: tuple


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


TRUE = Const(True)
FALSE = Const(False)


def other(v: str) -> str:
    return "y" if v == "x" else "x"


# --- smart constructors (fold constants, flatten) -----------------------------

def conj(*fs: Formula) -> Formula:
    args = []
    for f in fs:
        if isinstance(f, Const):
            if not f.value:
                return FALSE
            continue
        args.extend(f.args if isinstance(f, And) else (f,))
    if not args:
        return TRUE
    return args[0] if len(args) == 1 else And(tuple(args))


def disj(*fs: Formula) -> Formula:
    args = []
    for f in fs:
        if isinstance(f, Const):
            if f.value:
                return TRUE
            continue
        args.extend(f.args if isinstance(f, Or) else (f,))
    if not args:
        return FALSE
    return args[0] if len(args) == 1 else Or(tuple(args))


def neg(f: Formula) -> Formula:
    if isinstance(f, Const):
        return Const(not f.value)
    if isinstance(f, Not):
        return f.body
    return Not(f)


def implies(a: Formula, b: Formula) -> Formula:
    if isinstance(a, Const):
        return b if a.value else TRUE
    if isinstance(b, Const):
        return TRUE if b.value else neg(a)
    return Implies(a, b)


def iff(a: Formula, b: Formula) -> Formula:
    if isinstance(a, Const):
        return b if a.value else neg(b)
    if isinstance(b, Const):
        return a if b.value else neg(a)
    return Iff(a, b)


def xor(a: Formula, b: Formula) -> Formula:
    return neg(iff(a, b))


def exists(v: str, body: Formula) -> Formula:
    return Exists(v, body)


def forall(v: str, body: Formula) -> Formula:
    return Forall(v, body)


def any_letter(letters: Iterable[str], v: str) -> Formula:
    return disj(*(Letter(a, v) for a in letters))


def any_between(letters: Iterable[str], u: str, v: str) -> Formula:
    return disj(*(Between(a, 1, u, v) for a in letters))


def successor_via_between(alphabet: Alphabet, u: str = "x", v: str = "y") -> Formula:
    """u < v with no letter strictly between: the definable form of succ(u, v)."""
    return conj(Less(u, v), *(neg(Between(a, 1, u, v)) for a in alphabet))


# --- structural queries --------------------------------------------------------

def children(f: Formula) -> tuple:
    if isinstance(f, (And, Or)):
        return f.args
    if isinstance(f, (Implies, Iff)):
        return (f.left, f.right)
    if isinstance(f, (Not, Exists, Forall)):
        return (f.body,)
    return ()


def _atom_vars(f: Formula) -> set:
    if isinstance(f, Letter):
        return {f.var}
    if isinstance(f, (Between, Less, LessEq, Equal, Succ)):
        return {f.left, f.right}
    return set()


def free_vars(f: Formula) -> frozenset:
    memo: dict = {}

    def go(g):
        key = id(g)
        if key not in memo:
            if isinstance(g, (Exists, Forall)):
                out = go(g.body) - {g.var}
            else:
                out = set(_atom_vars(g))
                for c in children(g):
                    out |= go(c)
            memo[key] = frozenset(out)
        return memo[key]

    return go(f)


def quantifier_depth(f: Formula) -> int:
    """Maximum nesting depth of quantifiers."""
    memo: dict = {}

    def go(g):
        key = id(g)
        if key not in memo:
            d = max((go(c) for c in children(g)), default=0)
            memo[key] = d + 1 if isinstance(g, (Exists, Forall)) else d
        return memo[key]

    return go(f)


def formula_size(f: Formula) -> int:
    """Number of nodes of the formula tree (shared subtrees counted each time)."""
    memo: dict = {}

    def go(g):
        key = id(g)
        if key not in memo:
            memo[key] = 1 + sum(go(c) for c in children(g))
        return memo[key]

    return go(f)


def letters_in(f: Formula) -> set:
    out: set = set()
    seen: set = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if id(g) in seen:
            continue
        seen.add(id(g))
        if isinstance(g, (Letter, Between)):
            out.add(g.letter)
        stack.extend(children(g))
    return out


def max_threshold(f: Formula) -> dict:
    """Largest threshold used per letter in between atoms."""
    out: dict = {}
    seen: set = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if id(g) in seen:
            continue
        seen.add(id(g))
        if isinstance(g, Between):
            out[g.letter] = max(out.get(g.letter, 0), g.k)
        stack.extend(children(g))
    return out


def rename(f: Formula) -> Formula:
    """Swap the names x and y throughout."""
    memo: dict = {}

    def go(g):
        key = id(g)
        if key in memo:
            return memo[key]
        if isinstance(g, Letter):
            out = Letter(g.letter, other(g.var))
        elif isinstance(g, Between):
            out = Between(g.letter, g.k, other(g.left), other(g.right))
        elif isinstance(g, (Less, LessEq, Equal, Succ)):
            out = type(g)(other(g.left), other(g.right))
        elif isinstance(g, (Exists, Forall)):
            out = type(g)(other(g.var), go(g.body))
        elif isinstance(g, Not):
            out = Not(go(g.body))
        elif isinstance(g, (And, Or)):
            out = type(g)(tuple(go(c) for c in g.args))
        elif isinstance(g, (Implies, Iff)):
            out = type(g)(go(g.left), go(g.right))
        else:
            out = g
        memo[key] = out
        return out

    return go(f)


# --- evaluation ----------------------------------------------------------------

class _Ctx:
    def __init__(self, word: Sequence[str]):
        self.n = len(word)
        self.word = np.array(word, dtype=object) if word else np.empty(0, dtype=object)
        self.pos = np.arange(1, self.n + 1)
        self.memo: dict = {}
        self._letter: dict = {}
        self._prefix: dict = {}

    def letter(self, a: str) -> np.ndarray:
        col = self._letter.get(a)
        if col is None:
            col = self.word == a if self.n else np.zeros(0, dtype=bool)
            self._letter[a] = col
        return col

    def prefix(self, a: str) -> np.ndarray:
        """prefix[j] = occurrences of a among positions 1..j (prefix[0] = 0)."""
        p = self._prefix.get(a)
        if p is None:
            p = np.concatenate(([0], np.cumsum(self.letter(a))))
            self._prefix[a] = p
        return p


def _axis(v: str, vec: np.ndarray) -> np.ndarray:
    return vec[:, None] if v == "x" else vec[None, :]


def _pair(ctx: _Ctx, u: str, v: str, fn) -> np.ndarray:
    """Matrix over (x, y) of fn(value of u, value of v)."""
    p = ctx.pos
    if u == v:
        return _axis(u, fn(p, p))
    m = fn(p[:, None], p[None, :])  # rows: u, columns: v
    return m if u == "x" else m.T


def _eval(f: Formula, ctx: _Ctx) -> np.ndarray:
    key = id(f)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    n = ctx.n
    if isinstance(f, Const):
        out = np.full((1, 1), f.value)
    elif isinstance(f, Letter):
        out = _axis(f.var, ctx.letter(f.letter))
    elif isinstance(f, Less):
        out = _pair(ctx, f.left, f.right, np.less)
    elif isinstance(f, LessEq):
        out = _pair(ctx, f.left, f.right, np.less_equal)
    elif isinstance(f, Equal):
        out = _pair(ctx, f.left, f.right, np.equal)
    elif isinstance(f, Succ):
        out = _pair(ctx, f.left, f.right, lambda a, b: b == a + 1)
    elif isinstance(f, Between):
        pre = ctx.prefix(f.letter)
        k = f.k

        def between(a, b):
            # occurrences at positions a+1 .. b-1
            return (a < b) & (pre[np.maximum(b - 1, 0)] - pre[a] >= k)

        out = _pair(ctx, f.left, f.right, between)
    elif isinstance(f, Not):
        out = ~_eval(f.body, ctx)
    elif isinstance(f, And):
        out = _eval(f.args[0], ctx)
        for g in f.args[1:]:
            out = out & _eval(g, ctx)
    elif isinstance(f, Or):
        out = _eval(f.args[0], ctx)
        for g in f.args[1:]:
            out = out | _eval(g, ctx)
    elif isinstance(f, Implies):
        out = ~_eval(f.left, ctx) | _eval(f.right, ctx)
    elif isinstance(f, Iff):
        out = _eval(f.left, ctx) == _eval(f.right, ctx)
    elif isinstance(f, (Exists, Forall)):
        body = _eval(f.body, ctx)
        axis = 0 if f.var == "x" else 1
        if n == 0:
            shape = list(body.shape)
            shape[axis] = 1
            out = np.full(shape, isinstance(f, Forall))
        elif isinstance(f, Exists):
            out = body.any(axis=axis, keepdims=True)
        else:
            out = body.all(axis=axis, keepdims=True)
    else:
        raise TypeError(f"not a formula node: {f!r}")
    ctx.memo[key] = out
    return out


def _lookup(arr: np.ndarray, asg: dict, n: int) -> bool:
    ix = asg.get("x", 1) - 1 if arr.shape[0] > 1 else 0
    iy = asg.get("y", 1) - 1 if arr.shape[1] > 1 else 0
    return bool(arr[ix, iy])


def eval_fo2(f: Formula, word: Sequence[str], asg: dict | None = None) -> bool:
    """Truth of ``f`` in ``word`` under a 1-based assignment of its free variables."""
    asg = dict(asg or {})
    missing = free_vars(f) - set(asg)
    if missing:
        raise ValueError(f"unbound free variables: {sorted(missing)}")
    n = len(word)
    for v, p in asg.items():
        if v not in VARS:
            raise ValueError(f"unknown variable {v!r}")
        if not 1 <= p <= n:
            raise ValueError(f"position {v}={p} outside 1..{n}")
    ctx = _Ctx(word)
    arr = _eval(f, ctx)
    if arr.size == 0:  # empty word, formula with free variables cannot reach here
        return False
    return _lookup(arr, asg, n)


def eval_matrix(f: Formula, word: Sequence[str]) -> np.ndarray:
    """Full truth table of ``f`` over all (x, y), shape (|w|, |w|)."""
    ctx = _Ctx(word)
    arr = _eval(f, ctx)
    return np.broadcast_to(arr, (ctx.n, ctx.n)).copy()


def satisfies(f: Formula, word: Sequence[str]) -> bool:
    """Truth of a sentence."""
    return eval_fo2(f, word, {})


def defined_language(f: Formula, alphabet: Alphabet, max_len: int) -> list:
    """All words of length <= max_len satisfying the sentence ``f``, in enumeration order."""
    if free_vars(f):
        raise ValueError(f"not a sentence: free variables {sorted(free_vars(f))}")
    return [w for w in enumerate_words(alphabet, max_len) if eval_fo2(f, w, {})]


# --- text syntax ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<quoted>'[^']*')|(?P<op><->|->|<=|>=|[()&|!<>=,.])|(?P<ident>[A-Za-z0-9_]+)|(?P<bad>\S))")


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
            raise Fo2SyntaxError(f"unexpected character {val!r} at offset {start}")
        if kind == "quoted":
            if len(val) < 3:
                raise Fo2SyntaxError(f"empty quoted letter at offset {start}")
            toks.append(("letter", val[1:-1], start))
        elif kind == "op":
            toks.append((val, val, start))
        else:
            toks.append(("ident", val, start))
        pos = m.end()
    toks.append(("eof", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet | None):
        self.toks = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    def peek(self, k: int = 0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, kind: str | None = None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise Fo2SyntaxError(f"expected {kind!r} at offset {tok[2]}, found {found}")
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.formula()
        if self.peek()[0] != "eof":
            raise Fo2SyntaxError(f"unexpected {self.peek()[1]!r} at offset {self.peek()[2]}")
        return f

    def _quantifier(self):
        kind, val, off = self.peek()
        if kind == "ident" and len(val) == 2 and val[0] in "EA" and self.peek(1)[0] == ".":
            return val[0], val[1], off
        return None

    def formula(self) -> Formula:
        q = self._quantifier()
        if q is not None:
            return self.quantified()
        return self.iff()

    def quantified(self) -> Formula:
        kind, v, off = self._quantifier()
        self.take()
        self.take(".")
        self.var_check(v, off)
        body = self.formula()
        return Exists(v, body) if kind == "E" else Forall(v, body)

    def var_check(self, v: str, off: int) -> str:
        if v not in VARS:
            raise Fo2SyntaxError(f"variable {v!r} at offset {off}: only x and y are allowed "
                                 "(third variable)")
        return v

    def iff(self) -> Formula:
        f = self.implies()
        while self.peek()[0] == "<->":
            self.take()
            f = Iff(f, self.implies())
        return f

    def implies(self) -> Formula:
        f = self.disj()
        if self.peek()[0] == "->":
            self.take()
            return Implies(f, self.implies_rhs())
        return f

    def implies_rhs(self) -> Formula:
        if self._quantifier() is not None:
            return self.quantified()
        return self.implies()

    def _operand(self, sub):
        if self._quantifier() is not None:
            return self.quantified()
        return sub()

    def disj(self) -> Formula:
        args = [self.conj()]
        while self.peek()[0] == "|":
            self.take()
            args.append(self._operand(self.conj))
        return args[0] if len(args) == 1 else Or(tuple(args))

    def conj(self) -> Formula:
        args = [self.unary()]
        while self.peek()[0] == "&":
            self.take()
            args.append(self._operand(self.unary))
        return args[0] if len(args) == 1 else And(tuple(args))

    def unary(self) -> Formula:
        kind, val, off = self.peek()
        if kind == "!":
            self.take()
            return Not(self._operand(self.unary))
        if self._quantifier() is not None:
            return self.quantified()
        if kind == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        return self.atom()

    def letter_name(self) -> str:
        kind, val, off = self.take()
        if kind not in ("ident", "letter"):
            raise Fo2SyntaxError(f"expected a letter at offset {off}")
        if self.alphabet is not None and val not in self.alphabet:
            raise Fo2SyntaxError(f"unknown letter {val!r} at offset {off}")
        return val

    def variable(self) -> str:
        kind, val, off = self.take()
        if kind != "ident":
            raise Fo2SyntaxError(f"expected a variable at offset {off}")
        return self.var_check(val, off)

    def atom(self) -> Formula:
        kind, val, off = self.peek()
        if kind == "ident" and self.peek(1)[0] != "(":
            if val in ("T", "F"):
                self.take()
                return Const(val == "T")
            # comparison u op v
            u = self.variable()
            op = self.take()[0]
            v = self.variable()
            if op == "<":
                return Less(u, v)
            if op == "<=":
                return LessEq(u, v)
            if op == "=":
                return Equal(u, v)
            if op == ">":
                return Less(v, u)
            if op == ">=":
                return LessEq(v, u)
            raise Fo2SyntaxError(f"expected a comparison at offset {off}")
        if kind == "ident" and val in ("bet", "succ"):
            self.take()
            self.take("(")
            if val == "succ":
                u = self.variable()
                self.take(",")
                v = self.variable()
                self.take(")")
                return Succ(u, v)
            a = self.letter_name()
            self.take(",")
            if self.peek()[0] == "ident" and self.peek()[1].isdigit():
                k = int(self.take()[1])
                if k < 1:
                    raise Fo2SyntaxError(f"between threshold must be >= 1 at offset {off}")
                self.take(",")
            else:
                k = 1
            u = self.variable()
            self.take(",")
            v = self.variable()
            self.take(")")
            return Between(a, k, u, v)
        if kind in ("ident", "letter"):
            a = self.letter_name()
            self.take("(")
            v = self.variable()
            self.take(")")
            return Letter(a, v)
        what = "end of input" if kind == "eof" else repr(val)
        raise Fo2SyntaxError(f"unexpected {what} at offset {off}")


def parse_fo2(text: str, alphabet: Alphabet | None = None) -> Formula:
    """Parse a formula; with an alphabet, unknown letters are rejected."""
    return _Parser(text, alphabet).parse()


def scan_letters(text: str) -> set:
    """Letters mentioned in formula text (without full parsing)."""
    return letters_in(parse_fo2(text))


# precedence: quantifier 0 < iff 1 < implies 2 < or 3 < and 4 < not 5 < atom 6
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Exists: 0, Forall: 0}
_RESERVED = {"bet", "succ", "T", "F", "x", "y"}


def _letter_text(a: str) -> str:
    if re.fullmatch(r"[A-Za-z0-9_]+", a) and a not in _RESERVED and not re.fullmatch(r"[EA][xy]", a):
        return a
    return f"'{a}'"


def to_text(f: Formula) -> str:
    """Print ``f`` in the text syntax; ``parse_fo2(to_text(f)) == f``."""
    return _show(f, 0)


def _wrap(f: Formula, need: int) -> str:
    s = _show(f, need)
    prec = _PREC.get(type(f), 6)
    return f"({s})" if prec < need else s


def _show(f: Formula, need: int) -> str:
    if isinstance(f, Const):
        return "T" if f.value else "F"
    if isinstance(f, Letter):
        return f"{_letter_text(f.letter)}({f.var})"
    if isinstance(f, Between):
        return f"bet({_letter_text(f.letter)},{f.k},{f.left},{f.right})"
    if isinstance(f, Less):
        return f"{f.left}<{f.right}"
    if isinstance(f, LessEq):
        return f"{f.left}<={f.right}"
    if isinstance(f, Equal):
        return f"{f.left}={f.right}"
    if isinstance(f, Succ):
        return f"succ({f.left},{f.right})"
    if isinstance(f, Not):
        return "!" + _wrap(f.body, 6)
    if isinstance(f, And):
        return " & ".join(_wrap(g, 5) for g in f.args)
    if isinstance(f, Or):
        return " | ".join(_wrap(g, 4) for g in f.args)
    if isinstance(f, Implies):
        return _wrap(f.left, 3) + " -> " + _wrap(f.right, 3)
    if isinstance(f, Iff):
        return _wrap(f.left, 2) + " <-> " + _wrap(f.right, 3)
    if isinstance(f, Exists):
        return f"E{f.var}. " + _show(f.body, 0)
    if isinstance(f, Forall):
        return f"A{f.var}. " + _show(f.body, 0)
    raise TypeError(f"not a formula node: {f!r}")


def sentences_agree(f: Formula, g: Formula, alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """Words up to max_len on which two sentences disagree."""
    for w in enumerate_words(alphabet, max_len):
        if eval_fo2(f, w, {}) != eval_fo2(g, w, {}):
            yield w
