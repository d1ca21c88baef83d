"""Syntactic monoids and the variety tests that characterize the logics.

Elements of a syntactic monoid are the state transformations of the
minimal complete automaton, discovered breadth-first from the identity.
Element 0 is always the identity, and every element keeps the shortest
(then lexicographically least) word that induces it.

Products are indexed ``table[x, y] = x * y`` with the convention that
``x * y`` is the transformation of "read a word for x, then a word for y".
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, field

import numpy as np

from .dfa import Dfa, compile_min_dfa
from .regex import Regex, parse_regex, to_text
from .words import Alphabet, format_word

DEFAULT_MAX_MONOID = 5000


def _size_cap() -> int:
    try:
        return int(os.environ.get("BETWIXT_MAX_MONOID", DEFAULT_MAX_MONOID))
    except ValueError:
        return DEFAULT_MAX_MONOID


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    """A finite monoid given by its multiplication table."""

    table: np.ndarray
    identity: int = 0
    letter_map: dict = field(default_factory=dict)
    element_repr: tuple = ()
    names: tuple = ()

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.size

    def mul(self, *xs: int) -> int:
        out = self.identity
        for x in xs:
            out = int(self.table[out, x])
        return out

    def image(self, word) -> int:
        """Image of a word under the letter homomorphism."""
        out = self.identity
        for a in word:
            out = int(self.table[out, self.letter_map[a]])
        return out

    def name(self, x: int) -> str:
        if self.names:
            return self.names[x]
        return str(x)

    def idempotents(self) -> list:
        diag = self.table[np.arange(self.size), np.arange(self.size)]
        return [int(e) for e in np.flatnonzero(diag == np.arange(self.size))]

    def omega(self) -> np.ndarray:
        """Vector of idempotent powers, ``omega()[x] == x^omega``."""
        cached = self.__dict__.get("_omega")
        if cached is None:
            cached = np.array([omega_power(self, x) for x in range(self.size)], dtype=np.int64)
            object.__setattr__(self, "_omega", cached)
        return cached

    def is_associative(self) -> bool:
        t = self.table
        return bool(np.array_equal(t[t, :], t[:, t]))  # (xy)z == x(yz) for all triples

    def is_identity(self, e: int) -> bool:
        idx = np.arange(self.size)
        return bool((self.table[e, :] == idx).all() and (self.table[:, e] == idx).all())

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "identity": self.identity,
            "elements": [self.name(x) for x in range(self.size)],
            "letters": dict(self.letter_map),
            "idempotents": self.idempotents(),
            "table": self.table.tolist(),
        }


def from_table(table, identity: int = 0, names=()) -> FiniteMonoid:
    """Monoid from an explicit multiplication table (no generators)."""
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError("multiplication table must be square")
    m = FiniteMonoid(t, identity, {}, (), tuple(names))
    if not m.is_identity(identity):
        raise ValueError(f"element {identity} is not a two-sided identity")
    return m


def syntactic_monoid(d: Dfa) -> FiniteMonoid:
    """Transition monoid of ``d``; equals M(L) when ``d`` is minimal and complete."""
    k = len(d.alphabet)
    gens = [tuple(d.delta[q][c] for q in range(d.n_states)) for c in range(k)]
    ident = tuple(range(d.n_states))
    index = {ident: 0}
    elems = [ident]
    words = [()]
    cap = _size_cap()
    warned = False
    i = 0
    while i < len(elems):
        f = elems[i]
        for c, g in enumerate(gens):
            h = tuple(g[q] for q in f)  # read f, then letter c
            if h not in index:
                index[h] = len(elems)
                elems.append(h)
                words.append(words[i] + (d.alphabet.letters[c],))
                if len(elems) > cap and not warned:
                    warnings.warn(f"syntactic monoid exceeds {cap} elements; "
                                  "variety checks may be slow", RuntimeWarning, stacklevel=2)
                    warned = True
        i += 1
    n = len(elems)
    arr = np.array(elems, dtype=np.int64)  # arr[x, q] = state reached from q
    table = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            table[x, y] = index[tuple(arr[y][arr[x]])]
    letter_map = {a: index[gens[c]] for c, a in enumerate(d.alphabet.letters)}
    names = tuple("1" if not w else format_word(w) for w in words)
    return FiniteMonoid(table, 0, letter_map, tuple(elems), names)


def omega_power(m: FiniteMonoid, x: int) -> int:
    """The unique idempotent among x, x^2, x^3, ..."""
    p = x
    for _ in range(m.size + 1):
        if m.table[p, p] == p:
            return int(p)
        p = int(m.table[p, x])
    raise AssertionError("no idempotent power found; table is not associative")


def j_leq(m: FiniteMonoid, x: int, y: int) -> bool:
    """True iff x = s*y*t for some s, t."""
    left = m.table[:, y]
    return bool((m.table[left, :] == x).any())


@dataclass(frozen=True, eq=False)
class LocalSubmonoid:
    parent: FiniteMonoid
    e: int
    me_elements: tuple
    local_elements: tuple
    monoid: FiniteMonoid  # eM_ee with its own table; local ids index local_elements

    @property
    def local_table(self) -> np.ndarray:
        return self.monoid.table


def _closure(m: FiniteMonoid, gens) -> list:
    elems = {m.identity, *gens}
    frontier = list(elems)
    gens = list(elems)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                for p in (int(m.table[x, g]), int(m.table[g, x])):
                    if p not in elems:
                        elems.add(p)
                        nxt.append(p)
        frontier = nxt
    return sorted(elems)


def _restrict(m: FiniteMonoid, elements, unit: int) -> FiniteMonoid:
    elements = list(elements)
    pos = {x: i for i, x in enumerate(elements)}
    sub = m.table[np.ix_(elements, elements)]
    try:
        table = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub) if sub.size else sub
    except KeyError as exc:
        raise ValueError("subset is not closed under multiplication") from exc
    names = tuple(m.name(x) for x in elements)
    return FiniteMonoid(table, pos[unit], {}, (), names)


def local_submonoid(m: FiniteMonoid, e: int) -> LocalSubmonoid:
    """M_e (generated by the elements J-above e) and the local monoid eM_ee."""
    if m.table[e, e] != e:
        raise ValueError(f"element {m.name(e)} is not idempotent")
    above = [y for y in range(m.size) if j_leq(m, e, y)]
    me = _closure(m, above)
    t = m.table
    local = sorted({int(t[t[e, x], e]) for x in me})
    return LocalSubmonoid(m, e, tuple(me), tuple(local), _restrict(m, local, e))


def is_aperiodic(m: FiniteMonoid) -> bool:
    """x^omega * x == x^omega for all x."""
    om = m.omega()
    return bool((m.table[om, np.arange(m.size)] == om).all())


def is_in_DA(m: FiniteMonoid) -> bool:
    """(xy)^omega x (xy)^omega == (xy)^omega for all x, y."""
    t = m.table
    om = m.omega()
    w = om[t]                                  # w[x, y] = (xy)^omega
    x = np.arange(m.size)[:, None]
    return bool((t[t[w, x], w] == w).all())


def is_in_MeDA(m: FiniteMonoid) -> bool:
    """Every local monoid eM_ee (unit e) lies in DA."""
    return all(is_in_DA(local_submonoid(m, e).monoid) for e in m.idempotents())


@dataclass(frozen=True, eq=False)
class SemigroupView:
    parent: FiniteMonoid
    elements: tuple  # images of nonempty words


def syntactic_semigroup(m: FiniteMonoid) -> SemigroupView:
    gens = sorted(set(m.letter_map.values()))
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                p = int(m.table[x, g])
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return SemigroupView(m, tuple(sorted(seen)))


def _passes_local_da(m: FiniteMonoid) -> bool:
    """Every eSe, for e an idempotent of the syntactic semigroup S, is in DA."""
    s = syntactic_semigroup(m)
    t = m.table
    for e in s.elements:
        if t[e, e] != e:
            continue
        ese = sorted({int(t[t[e, x], e]) for x in s.elements})
        if not is_in_DA(_restrict(m, ese, e)):
            return False
    return True


def fo2suc_definable(d: Dfa) -> bool:
    """Two-variable definability with order and successor: eSe in DA for all idempotents e of S."""
    return _passes_local_da(syntactic_monoid(d))


@dataclass
class Report:
    regex: str
    alphabet: list
    dfa_states: int
    monoid_size: int
    aperiodic: bool
    in_DA: bool
    in_MeDA: bool
    fo2suc: bool
    verdicts: dict

    def to_json(self) -> dict:
        return {
            "regex": self.regex,
            "alphabet": self.alphabet,
            "dfa_states": self.dfa_states,
            "monoid_size": self.monoid_size,
            "aperiodic": self.aperiodic,
            "in_DA": self.in_DA,
            "in_MeDA": self.in_MeDA,
            "fo2suc": self.fo2suc,
            "verdicts": dict(self.verdicts),
        }


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def definability_report(r: Regex | str, alphabet: Alphabet | None = None) -> Report:
    """Decide FO[<], FO2[<], FO2[<,+1] and FO2[<,bet] definability of a regex.

    The between-logic verdict is exact for alphabets of at most two
    letters.  Over larger alphabets membership in M_e DA is only known to
    be necessary, so a positive answer is qualified.
    """
    if isinstance(r, str):
        r = parse_regex(r, alphabet)
    d = compile_min_dfa(r, alphabet)
    m = syntactic_monoid(d)
    ap = is_aperiodic(m)
    da = is_in_DA(m)
    meda = is_in_MeDA(m)
    suc = _passes_local_da(m)
    if len(d.alphabet) <= 2 or not meda:
        bet = _yes(meda)
    else:
        bet = "yes (necessary condition holds; sufficiency proven only for |A|=2)"
    verdicts = {"FO": _yes(ap), "FO2": _yes(da), "FO2suc": _yes(suc), "FO2bet": bet}
    return Report(to_text(r), list(d.alphabet.letters), d.n_states, m.size,
                  ap, da, meda, suc, verdicts)
