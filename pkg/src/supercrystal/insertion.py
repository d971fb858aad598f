"""Quasi-ribbon insertion, super column insertion, matrices, biwords and RSK."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import kernel
from .alphabet import AlphabetError, GradedAlphabet, parse_alphabet
from .combinat import all_permutations, comp_from_subset, conjugate, descent_set, inverse_permutation
from .crystal import Word
from .tableaux import (
    ShapeError,
    StandardRibbonTableau,
    Tableau,
    as_partition,
    highest_tableau,
)

__all__ = [
    "qr_insert",
    "qr_P",
    "qr_Q",
    "qr_PQ",
    "column_insert",
    "bold_P",
    "SuperMatrix",
    "MatrixError",
    "biwords",
    "matrix_apply",
    "rsk",
    "gessel_count",
    "matrices_with_sum",
]


# ---------------------------------------------------------------- quasi-ribbon insertion


def _steps(alpha: Sequence[int]) -> list[str]:
    out = []
    for i, a in enumerate(alpha):
        if i:
            out.append("D")
        out.extend("R" * (a - 1))
    return out


def _comp(steps: Sequence[str]) -> tuple[int, ...]:
    alpha = [1]
    for s in steps:
        if s == "R":
            alpha[-1] += 1
        else:
            alpha.append(1)
    return tuple(alpha)


def _insert_position(b: int, entries: Sequence[int], par: Sequence[int]) -> int:
    """First k with b <= t_k (b even) or b < t_k (b odd); len(entries) if none."""
    if par[b] == 0:
        return next((k for k, t in enumerate(entries) if b <= t), len(entries))
    return next((k for k, t in enumerate(entries) if b < t), len(entries))


def _splice(b: int, entries: list[int], steps: list[str], par: Sequence[int]) -> int:
    """Insert b in place; returns the node index it occupies."""
    k = _insert_position(b, entries, par)
    r = len(entries)
    if r == 0:
        entries.append(b)
        return 0
    if k == 0:
        steps.insert(0, "R")
    elif k == r:
        steps.append("D")
    else:
        steps[k - 1: k] = ["D", "R"]
    entries.insert(k, b)
    return k


def qr_insert(b: int | str, T: Tableau | None, alphabet: GradedAlphabet | None = None) -> Tableau:
    """b -> T. ``T=None`` is the empty tableau (then ``alphabet`` is required)."""
    A = alphabet if T is None else T.alphabet
    if A is None:
        raise ValueError("inserting into the empty tableau needs an alphabet")
    if T is not None and T.kind != "qr":
        raise ShapeError("quasi-ribbon insertion needs a quasi-ribbon tableau")
    b = A.index(b) if isinstance(b, str) else b
    entries = list(T.entries) if T is not None else []
    steps = _steps(T.shape) if T is not None and T.entries else []
    _splice(b, entries, steps, A.parities)
    return Tableau("qr", _comp(steps), A, tuple(entries))


def qr_PQ(word: Sequence[int] | Word, alphabet: GradedAlphabet | None = None):
    """(P(w), Q(w)); P is ``None``-shaped (empty composition) for the empty word."""
    if isinstance(word, Word):
        alphabet, letters = word.alphabet, word.letters
    else:
        letters = tuple(word)
    if alphabet is None:
        raise ValueError("alphabet required")
    par = alphabet.parities
    entries: list[int] = []
    labels: list[int] = []
    steps: list[str] = []
    for i, b in enumerate(letters, start=1):
        k = _splice(b, entries, steps, par)
        labels.insert(k, i)
    shape = _comp(steps) if entries else ()
    return Tableau("qr", shape, alphabet, tuple(entries)), StandardRibbonTableau(shape, tuple(labels))


def qr_P(word, alphabet: GradedAlphabet | None = None) -> Tableau:
    return qr_PQ(word, alphabet)[0]


def qr_Q(word, alphabet: GradedAlphabet | None = None) -> StandardRibbonTableau:
    return qr_PQ(word, alphabet)[1]


# ---------------------------------------------------------------- column insertion


def _columns(T: Tableau) -> list[list[int]]:
    cols: dict[int, list[int]] = {}
    for (r, c), b in sorted(zip(T.diagram.cells, T.entries), key=lambda t: (t[0][1], t[0][0])):
        cols.setdefault(c, []).append(b)
    return [cols[c] for c in sorted(cols)]


def _from_columns(cols: list[list[int]], A: GradedAlphabet) -> Tableau:
    shape = as_partition(conjugate([len(c) for c in cols]))
    rows = [[cols[j][i] for j in range(len(cols)) if len(cols[j]) > i] for i in range(len(shape))]
    return Tableau.from_rows("ssyt", shape, A, rows)


def _column_bump(b: int, cols: list[list[int]], par: Sequence[int]) -> None:
    for col in cols:
        even = par[b] == 0
        for i, y in enumerate(col):
            if b < y or (even and b == y):
                col[i], b = b, y
                break
        else:
            col.append(b)
            return
    cols.append([b])


def column_insert(b: int | str, T: Tableau | None, alphabet: GradedAlphabet | None = None) -> Tableau:
    """b => T by column bumping."""
    A = alphabet if T is None else T.alphabet
    if A is None:
        raise ValueError("inserting into the empty tableau needs an alphabet")
    b = A.index(b) if isinstance(b, str) else b
    cols = _columns(T) if T is not None else []
    _column_bump(b, cols, A.parities)
    return _from_columns(cols, A)


def bold_P(word: Sequence[int] | Word, alphabet: GradedAlphabet | None = None) -> Tableau:
    """w_r => (... => (w_2 => w_1))."""
    if isinstance(word, Word):
        alphabet, letters = word.alphabet, word.letters
    else:
        letters = tuple(word)
    if alphabet is None:
        raise ValueError("alphabet required")
    cols: list[list[int]] = []
    for b in letters:
        _column_bump(b, cols, alphabet.parities)
    if not cols:
        return Tableau("ssyt", (), alphabet, ())
    return _from_columns(cols, alphabet)


# ---------------------------------------------------------------- matrices and biwords


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class SuperMatrix:
    """Finitely supported matrix indexed by letters; rows and columns share one alphabet."""

    alphabet: GradedAlphabet
    entries: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        par = self.alphabet.parities
        clean = {}
        for (r, s), a in self.entries:
            if not (0 <= r < len(par) and 0 <= s < len(par)):
                raise MatrixError(f"index ({r}, {s}) outside the alphabet")
            if a < 0:
                raise MatrixError("entries must be non-negative")
            if a:
                clean[(r, s)] = clean.get((r, s), 0) + a
        for (r, s), a in clean.items():
            if par[r] != par[s] and a > 1:
                d = self.alphabet.displays
                raise MatrixError(f"mixed-parity entry ({d[r]}, {d[s]}) is {a} > 1")
        object.__setattr__(self, "entries", tuple(sorted(clean.items())))

    @classmethod
    def from_dict(cls, alphabet: GradedAlphabet, d: Mapping) -> "SuperMatrix":
        items = []
        for (r, s), a in d.items():
            r = alphabet.index(r) if isinstance(r, str) else r
            s = alphabet.index(s) if isinstance(s, str) else s
            items.append(((r, s), a))
        return cls(alphabet, tuple(items))

    @classmethod
    def from_pairs(cls, alphabet: GradedAlphabet, pairs: Iterable[tuple[int, int]]) -> "SuperMatrix":
        return cls(alphabet, tuple(Counter(pairs).items()))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(a for _, a in self.entries)

    def row_sums(self) -> tuple[int, ...]:
        out = [0] * len(self.alphabet)
        for (r, _), a in self.entries:
            out[r] += a
        return tuple(out)

    def col_sums(self) -> tuple[int, ...]:
        out = [0] * len(self.alphabet)
        for (_, s), a in self.entries:
            out[s] += a
        return tuple(out)

    def to_json(self) -> dict:
        d = self.alphabet.displays
        return {"alphabet": self.alphabet.name, "entries": [[d[r], d[s], a] for (r, s), a in self.entries]}

    @classmethod
    def from_json(cls, data: dict | str, alphabet: GradedAlphabet | None = None) -> "SuperMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        if alphabet is None:
            if "alphabet" not in data:
                raise MatrixError("matrix JSON needs an alphabet")
            alphabet = parse_alphabet(data["alphabet"])
        try:
            items = [((alphabet.index(str(r)), alphabet.index(str(s))), int(a)) for r, s, a in data["entries"]]
        except (KeyError, TypeError, ValueError, AlphabetError) as exc:
            raise MatrixError(f"malformed matrix: {exc}") from exc
        return cls(alphabet, tuple(items))


def _omega_key(par):
    def key(pair):
        r, s = pair
        return (s, -r if par[s] == 0 else r)

    return key


def biwords(A: SuperMatrix):
    """Returns ((i, j), (k, l)): the sorted biword in Omega and the one in Omega*."""
    par = A.alphabet.parities
    pairs = [p for p, a in A.entries for _ in range(a)]
    om = sorted(pairs, key=_omega_key(par))
    # Omega*: (k, l) with (l, k) in Omega, i.e. sort the swapped pairs the same way
    om_star = sorted(((s, r) for r, s in pairs), key=_omega_key(par))
    i = tuple(p[0] for p in om)
    j = tuple(p[1] for p in om)
    k = tuple(p[1] for p in om_star)
    l = tuple(p[0] for p in om_star)
    return (i, j), (k, l)


def matrix_apply(x: str, root: int, A: SuperMatrix, star: bool = False) -> SuperMatrix | None:
    """x_i A (acting on the i-word) or x_j* A (acting on the l-word)."""
    if x not in ("e", "f"):
        raise ValueError("x must be 'e' or 'f'")
    alph = A.alphabet
    lo_odd, iso = alph.root_params[root]
    (i, j), (k, l) = biwords(A)
    if not star:
        out = kernel.act(i, root, lo_odd, iso, x == "f")
        return None if out is None else SuperMatrix.from_pairs(alph, zip(out, j))
    out = kernel.act(l, root, lo_odd, iso, x == "f")
    return None if out is None else SuperMatrix.from_pairs(alph, zip(k, out))


def rsk(A: SuperMatrix) -> tuple[Tableau, Tableau]:
    """(P(i-word), P(l-word))."""
    (i, _), (_, l) = biwords(A)
    return qr_P(i, A.alphabet), qr_P(l, A.alphabet)


def matrices_with_sum(alphabet: GradedAlphabet, k: int) -> list[SuperMatrix]:
    """Every valid matrix over ``alphabet`` with total sum k."""
    n = len(alphabet)
    par = alphabet.parities
    cells = [(r, s) for r in range(n) for s in range(n)]
    caps = [k if par[r] == par[s] else 1 for r, s in cells]
    out = []

    def rec(idx, left, acc):
        if left == 0:
            out.append(SuperMatrix(alphabet, tuple(acc)))
            return
        if idx == len(cells):
            return
        for a in range(min(caps[idx], left), -1, -1):
            rec(idx + 1, left - a, acc + ([(cells[idx], a)] if a else []))

    rec(0, k, [])
    return out


def matrices_with_margins(alphabet: GradedAlphabet, rows: Sequence[int], cols: Sequence[int]) -> list[SuperMatrix]:
    n = len(alphabet)
    par = alphabet.parities
    out = []

    def rec(r, colleft, acc):
        if r == n:
            if not any(colleft):
                out.append(SuperMatrix(alphabet, tuple(acc)))
            return
        for row in _row_fillings(rows[r], colleft, [1 if par[r] != par[s] else rows[r] for s in range(n)]):
            rec(r + 1, [c - a for c, a in zip(colleft, row)], acc + [((r, s), a) for s, a in enumerate(row) if a])

    rec(0, list(cols), [])
    return out


def _row_fillings(total, colleft, caps):
    n = len(colleft)

    def rec(s, left):
        if s == n:
            if left == 0:
                yield ()
            return
        for a in range(min(left, colleft[s], caps[s]), -1, -1):
            for rest in rec(s + 1, left - a):
                yield (a,) + rest

    yield from rec(0, total)


def _doubly_highest(A: SuperMatrix) -> bool:
    alph = A.alphabet
    (i, _), (_, l) = biwords(A)
    return kernel.is_highest(i, alph.root_params) and kernel.is_highest(l, alph.root_params)


def gessel_count(S: Iterable[int], S2: Iterable[int], k: int, alphabet: GradedAlphabet) -> tuple[int, int]:
    """(#sigma in S_k with D(sigma)=S and D(sigma^-1)=S2, #doubly highest matrices of the matching weights)."""
    S, S2 = frozenset(S), frozenset(S2)
    perms = sum(
        1
        for sigma in all_permutations(k)
        if descent_set(sigma) == S and descent_set(inverse_permutation(sigma)) == S2
    )
    try:
        h1 = highest_tableau("qr", comp_from_subset(S, k), alphabet).weight()
        h2 = highest_tableau("qr", comp_from_subset(S2, k), alphabet).weight()
    except ShapeError as exc:
        raise AlphabetError(f"truncation {alphabet.name} too small for k={k}: {exc}") from exc
    mats = sum(1 for A in matrices_with_margins(alphabet, h1, h2) if _doubly_highest(A))
    return perms, mats
