"""Regular expressions in the notation used throughout this package.

Grammar (lowest precedence first)::

    union   := concat ('+' concat)*
    concat  := postfix postfix*
    postfix := atom ('*' | '^+')*
    atom    := letter | "'" name "'" | '%e' | '%0' | '(' union ')'

A bare letter is a single character from ``[A-Za-z0-9_]``; longer letter
names are written in single quotes.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .words import Alphabet


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class Regex:
    __slots__ = ()

    def letters(self) -> set:
        out: set = set()
        _collect(self, out)
        return out

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class EmptySet(Regex):
    pass


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Sym(Regex):
    letter: str


@dataclass(frozen=True)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    body: Regex


@dataclass(frozen=True)
class Plus(Regex):
    body: Regex


def _collect(r: Regex, out: set) -> None:
    if isinstance(r, Sym):
        out.add(r.letter)
    elif isinstance(r, (Union, Concat)):
        _collect(r.left, out)
        _collect(r.right, out)
    elif isinstance(r, (Star, Plus)):
        _collect(r.body, out)


def union(*parts: Regex) -> Regex:
    if not parts:
        return EmptySet()
    out = parts[0]
    for p in parts[1:]:
        out = Union(out, p)
    return out


def concat(*parts: Regex) -> Regex:
    if not parts:
        return Epsilon()
    out = parts[0]
    for p in parts[1:]:
        out = Concat(out, p)
    return out


_TOKEN = re.compile(r"\s*(?:(?P<quoted>'[^']*')|(?P<special>%e|%0|\^\+)|(?P<char>.))", re.S)


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "quoted":
            if len(val) < 3:
                raise RegexSyntaxError("empty quoted letter", start)
            toks.append(("letter", val[1:-1], start))
        elif kind == "special":
            toks.append((val, val, start))
        elif val in "+*()":
            toks.append((val, val, start))
        elif re.match(r"[A-Za-z0-9_]", val):
            toks.append(("letter", val, start))
        elif val.isspace():
            pass
        else:
            raise RegexSyntaxError(f"unexpected character {val!r}", start)
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

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self) -> Regex:
        r = self.union()
        kind, _, off = self.peek()
        if kind != "eof":
            raise RegexSyntaxError(f"unexpected {kind!r}", off)
        return r

    def union(self) -> Regex:
        r = self.concat()
        while self.peek()[0] == "+":
            self.take()
            r = Union(r, self.concat())
        return r

    def concat(self) -> Regex:
        if not self._starts_atom():
            raise RegexSyntaxError("expected an expression", self.peek()[2])
        r = self.postfix()
        while self._starts_atom():
            r = Concat(r, self.postfix())
        return r

    def _starts_atom(self) -> bool:
        return self.peek()[0] in ("letter", "(", "%e", "%0")

    def postfix(self) -> Regex:
        r = self.atom()
        while self.peek()[0] in ("*", "^+"):
            r = Star(r) if self.take()[0] == "*" else Plus(r)
        return r

    def atom(self) -> Regex:
        kind, val, off = self.take()
        if kind == "letter":
            if self.alphabet is not None and val not in self.alphabet:
                raise RegexSyntaxError(f"unknown letter {val!r}", off)
            return Sym(val)
        if kind == "%e":
            return Epsilon()
        if kind == "%0":
            return EmptySet()
        if kind == "(":
            r = self.union()
            kind, _, off = self.take()
            if kind != ")":
                raise RegexSyntaxError("expected ')'", off)
            return r
        raise RegexSyntaxError(f"unexpected {kind!r}", off)


def parse_regex(text: str, alphabet: Alphabet | None = None) -> Regex:
    """Parse ``text``; with an alphabet, unknown letters are rejected."""
    return _Parser(text, alphabet).parse()


# precedence levels for printing
_UNION, _CONCAT, _POSTFIX = 1, 2, 3


def _letter_text(a: str) -> str:
    return a if re.fullmatch(r"[A-Za-z0-9_]", a) else f"'{a}'"


def to_text(r: Regex) -> str:
    """Print ``r`` so that :func:`parse_regex` returns an equal AST."""
    return _show(r, 0)


def _show(r: Regex, ctx: int) -> str:
    if isinstance(r, Sym):
        return _letter_text(r.letter)
    if isinstance(r, Epsilon):
        return "%e"
    if isinstance(r, EmptySet):
        return "%0"
    if isinstance(r, Union):
        s = _show(r.left, _UNION) + "+" + _show(r.right, _UNION + 1)
        return f"({s})" if ctx > _UNION else s
    if isinstance(r, Concat):
        s = _show(r.left, _CONCAT) + _show(r.right, _CONCAT + 1)
        return f"({s})" if ctx > _CONCAT else s
    op = "*" if isinstance(r, Star) else "^+"
    return _show(r.body, _POSTFIX) + op
