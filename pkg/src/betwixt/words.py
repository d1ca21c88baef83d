"""Alphabets and finite words.

A word is a tuple of letter symbols (strings).  Positions are 1-based in
every public API of this package; internally arrays are 0-based.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Word = tuple  # tuple[str, ...]

_PLAIN = re.compile(r"^[A-Za-z0-9_]$")


@dataclass(frozen=True)
class Alphabet:
    letters: tuple

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in alphabet {letters}")
        for a in letters:
            if not isinstance(a, str) or not a:
                raise ValueError(f"bad letter symbol {a!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, spec: str | Iterable[str]) -> "Alphabet":
        """Build from "a,b,c", "abc" or any iterable of symbols."""
        if isinstance(spec, str):
            if "," in spec or " " in spec.strip():
                return cls(s for s in re.split(r"[,\s]+", spec.strip()) if s)
            return cls(spec)
        return cls(spec)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, a) -> bool:
        return a in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {a: i for i, a in enumerate(self.letters)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, a: str) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise ValueError(f"letter {a!r} not in alphabet {list(self.letters)}") from None

    def check(self, word: Sequence[str]) -> Word:
        for a in word:
            if a not in self._index:
                raise ValueError(f"letter {a!r} not in alphabet {list(self.letters)}")
        return tuple(word)

    def __str__(self) -> str:
        return "{" + ",".join(self.letters) + "}"


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Read a word from text.

    Whitespace-separated tokens are letters (optionally single-quoted);
    without whitespace every character is a letter, except that a quoted
    run ``'g1'`` is one letter.
    """
    text = text.strip()
    if not text:
        word: Word = ()
    elif any(c.isspace() for c in text):
        word = tuple(tok[1:-1] if len(tok) > 1 and tok[0] == tok[-1] == "'" else tok
                     for tok in text.split())
    else:
        word = tuple(m[1:-1] if m.startswith("'") else m
                     for m in re.findall(r"'[^']+'|.", text))
    if alphabet is not None:
        alphabet.check(word)
    return word


def format_word(word: Sequence[str]) -> str:
    """Inverse of :func:`parse_word`."""
    if all(_PLAIN.match(a) for a in word):
        return "".join(word)
    return " ".join(word)


def enumerate_words(alphabet: Alphabet, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All words of length min_len..max_len, by length then lexicographically."""
    for n in range(min_len, max_len + 1):
        yield from itertools.product(alphabet.letters, repeat=n)


def letters_of(*words: Sequence[str]) -> Alphabet:
    """Sorted alphabet of the letters occurring in the given words."""
    letters = sorted({a for w in words for a in w})
    return Alphabet(letters or ["a"])
