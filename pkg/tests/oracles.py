"""Independent reference implementations used to check the library.

Each oracle follows the textbook definition as literally as possible and
ignores efficiency: backtracking regex matching, recursive formula
evaluation over explicit assignments, and plain minimax for games.
"""

from functools import lru_cache

from betwixt import fo2, tl
from betwixt.regex import Concat, EmptySet, Epsilon, Plus, Star, Sym, Union


# --- regular expressions ---------------------------------------------------------

def regex_match(r, word) -> bool:
    word = tuple(word)
    return len(word) in _ends(r, word, 0)


def _ends(r, w, i) -> set:
    """All j such that r matches w[i:j]."""
    if isinstance(r, EmptySet):
        return set()
    if isinstance(r, Epsilon):
        return {i}
    if isinstance(r, Sym):
        return {i + 1} if i < len(w) and w[i] == r.letter else set()
    if isinstance(r, Union):
        return _ends(r.left, w, i) | _ends(r.right, w, i)
    if isinstance(r, Concat):
        return {k for j in _ends(r.left, w, i) for k in _ends(r.right, w, j)}
    if isinstance(r, (Star, Plus)):
        reached = {i} if isinstance(r, Star) else set()
        frontier = _ends(r.body, w, i)
        while frontier - reached:
            new = frontier - reached
            reached |= new
            frontier = {k for j in new for k in _ends(r.body, w, j)}
        return reached
    raise TypeError(r)


# --- two-variable logic ------------------------------------------------------------

def fo2_holds(f, w, asg) -> bool:
    """Tarskian evaluation, one assignment at a time."""
    w = tuple(w)
    n = len(w)
    F = fo2
    if isinstance(f, F.Const):
        return f.value
    if isinstance(f, F.Letter):
        return w[asg[f.var] - 1] == f.letter
    if isinstance(f, F.Less):
        return asg[f.left] < asg[f.right]
    if isinstance(f, F.LessEq):
        return asg[f.left] <= asg[f.right]
    if isinstance(f, F.Equal):
        return asg[f.left] == asg[f.right]
    if isinstance(f, F.Succ):
        return asg[f.right] == asg[f.left] + 1
    if isinstance(f, F.Between):
        u, v = asg[f.left], asg[f.right]
        return u < v and sum(1 for z in range(u + 1, v) if w[z - 1] == f.letter) >= f.k
    if isinstance(f, F.Not):
        return not fo2_holds(f.body, w, asg)
    if isinstance(f, F.And):
        return all(fo2_holds(g, w, asg) for g in f.args)
    if isinstance(f, F.Or):
        return any(fo2_holds(g, w, asg) for g in f.args)
    if isinstance(f, F.Implies):
        return (not fo2_holds(f.left, w, asg)) or fo2_holds(f.right, w, asg)
    if isinstance(f, F.Iff):
        return fo2_holds(f.left, w, asg) == fo2_holds(f.right, w, asg)
    if isinstance(f, F.Exists):
        return any(fo2_holds(f.body, w, {**asg, f.var: p}) for p in range(1, n + 1))
    if isinstance(f, F.Forall):
        return all(fo2_holds(f.body, w, {**asg, f.var: p}) for p in range(1, n + 1))
    raise TypeError(f)


# --- temporal logic ----------------------------------------------------------------

def _count(letters, w, i, j):
    return sum(1 for k in range(i + 1, j) if letters is None or w[k - 1] in letters)


def guard_holds(g, w, i, j) -> bool:
    if isinstance(g, tl.ThresholdConstraint):
        c = _count(g.letters, w, i, j)
        return {"<": c < g.bound, "<=": c <= g.bound, ">": c > g.bound,
                ">=": c >= g.bound, "=": c == g.bound}[g.rel]
    if isinstance(g, tl.GNot):
        return not guard_holds(g.body, w, i, j)
    if isinstance(g, tl.GAnd):
        return all(guard_holds(a, w, i, j) for a in g.args)
    return any(guard_holds(a, w, i, j) for a in g.args)


def tl_holds(f, w, i) -> bool:
    w = tuple(w)
    if isinstance(f, tl.TLetter):
        return w[i - 1] == f.letter
    if isinstance(f, tl.TConst):
        return f.value
    if isinstance(f, tl.TNot):
        return not tl_holds(f.body, w, i)
    if isinstance(f, tl.TAnd):
        return all(tl_holds(a, w, i) for a in f.args)
    if isinstance(f, tl.TOr):
        return any(tl_holds(a, w, i) for a in f.args)
    if isinstance(f, tl.Future):
        return any(guard_holds(f.guard, w, i, j) and tl_holds(f.body, w, j)
                   for j in range(i + 1, len(w) + 1))
    if isinstance(f, tl.Past):
        return any(guard_holds(f.guard, w, j, i) and tl_holds(f.body, w, j)
                   for j in range(1, i))
    raise TypeError(f)


# --- games -----------------------------------------------------------------------

def _jumped(w, i, j, theta):
    lo, hi = min(i, j), max(i, j)
    counts = {}
    for k in range(lo + 1, hi):
        a = w[k - 1]
        counts[a] = counts.get(a, 0) + 1
    return {a: min(c, theta.get(a, 1)) for a, c in counts.items()}


def minimax_marked(w1, i1, w2, i2, k, theta=None) -> bool:
    """Player 2 wins the k-round marked game; plain game-tree search."""
    theta = dict(theta or {})
    w1, w2 = tuple(w1), tuple(w2)

    @lru_cache(maxsize=None)
    def win(p1, p2, r):
        if w1[p1 - 1] != w2[p2 - 1]:
            return False
        if r == 0:
            return True
        for (wa, pa, wb, pb, swap) in ((w1, p1, w2, p2, False), (w2, p2, w1, p1, True)):
            for ja in range(1, len(wa) + 1):
                if ja == pa:
                    continue
                sig = _jumped(wa, pa, ja, theta)
                answered = False
                for jb in range(1, len(wb) + 1):
                    if jb == pb or (ja > pa) != (jb > pb) or wa[ja - 1] != wb[jb - 1]:
                        continue
                    if _jumped(wb, pb, jb, theta) != sig:
                        continue
                    if (win(jb, ja, r - 1) if swap else win(ja, jb, r - 1)):
                        answered = True
                        break
                if not answered:
                    return False
        return True

    return win(i1, i2, k)


def minimax_words(w1, w2, k, theta=None) -> bool:
    """Unmarked game: placement on equal letters, then k-1 marked rounds."""
    w1, w2 = tuple(w1), tuple(w2)
    if k == 0:
        return True
    for wa, wb, swap in ((w1, w2, False), (w2, w1, True)):
        for ia in range(1, len(wa) + 1):
            ok = any(
                wb[ib - 1] == wa[ia - 1] and (
                    minimax_marked(wb, ib, wa, ia, k - 1, theta) if swap
                    else minimax_marked(wa, ia, wb, ib, k - 1, theta))
                for ib in range(1, len(wb) + 1))
            if not ok:
                return False
    return True
