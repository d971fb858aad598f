"""Shapes, the three tableau species, reading words and the induced crystal structure.

Species:

* ``"qr"``   quasi-ribbon tableaux on a composition (ribbon diagram),
* ``"ssyt"`` semistandard tableaux on a partition,
* ``"kite"`` tableaux on a kite shape: a partition body of at most ``m`` rows
  with a ribbon tail hanging from the first cell of row ``m``.

All three share one filling rule. Rows and columns weakly increase, an even
letter cannot repeat down a column, and an odd letter cannot repeat along a row.
Kites also have a joint condition. Coordinates are (row, col) with row 0 at the
top. Entries are stored as alphabet positions in row-major order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernel
from .alphabet import AlphabetError, GradedAlphabet, SimpleRoot, parse_alphabet
from .combinat import comp_from_subset, conjugate, linear_extensions, subset_from_comp
from .crystal import Word, weight_vector

__all__ = [
    "KiteShape",
    "Diagram",
    "Tableau",
    "ShapeError",
    "ClosureError",
    "StandardTableau",
    "StandardRibbonTableau",
    "as_partition",
    "as_composition",
    "comp_from_subset",
    "subset_from_comp",
    "corners",
    "diagram",
    "validate",
    "enumerate_tableaux",
    "enumerate_words",
    "highest_tableau",
    "reading_word",
    "from_reading",
    "tableau_apply",
    "standard_tableaux",
    "standard_ribbon_tableaux",
    "composition_from_weight",
    "partition_from_weight",
    "kite_from_weight",
    "hook_admissible",
]

KINDS = ("qr", "ssyt", "kite")


class ShapeError(ValueError):
    pass


class ClosureError(RuntimeError):
    """An operator produced a filling outside the tableau set (should never happen)."""


# ---------------------------------------------------------------- shapes


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    lam = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ShapeError(f"{lam} is not a partition")
    return lam


def as_composition(parts: Iterable[int]) -> tuple[int, ...]:
    alpha = tuple(int(p) for p in parts)
    if any(p <= 0 for p in alpha):
        raise ShapeError(f"{alpha} has a non-positive part")
    return alpha


@dataclass(frozen=True)
class KiteShape:
    body: tuple[int, ...]
    tail: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "body", as_partition(self.body))
        object.__setattr__(self, "tail", as_composition(self.tail))
        if self.m < 0:
            raise ShapeError("m must be non-negative")
        if len(self.body) > self.m:
            raise ShapeError(f"body {self.body} has more than {self.m} rows")
        if self.tail and len(self.body) != self.m:
            raise ShapeError("a non-empty tail needs a body with exactly m rows")

    @property
    def size(self) -> int:
        return sum(self.body) + sum(self.tail)

    def to_json(self) -> dict:
        return {"body": list(self.body), "tail": list(self.tail), "m": self.m}

    def __str__(self) -> str:
        return f"({','.join(map(str, self.body))}|{','.join(map(str, self.tail))})"


def corners(alpha: Sequence[int]) -> int:
    """Ends of every row with at least two nodes, plus the last node if its row is a single node."""
    if not alpha:
        return 0
    return 2 * sum(1 for a in alpha if a >= 2) + (1 if alpha[-1] == 1 else 0)


def ribbon_cells(alpha: Sequence[int], row0: int = 0, col0: int = 0) -> list[tuple[int, int]]:
    cells = []
    start = col0
    for i, a in enumerate(alpha):
        cells.extend((row0 + i, start + j) for j in range(a))
        start += a - 1
    return cells


def partition_cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, j) for i, p in enumerate(lam) for j in range(p)]


@dataclass(frozen=True)
class Diagram:
    cells: tuple[tuple[int, int], ...]
    left: tuple[int, ...]  # index of the left neighbour, -1 if none
    up: tuple[int, ...]
    reading: tuple[int, ...]  # cell indices in row reading order
    body_size: int  # kite body cells come first
    joint: int  # index of the kite joint, -1 if none

    def __len__(self) -> int:
        return len(self.cells)

    def rows(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for k, (r, _) in enumerate(self.cells):
            out.setdefault(r, []).append(k)
        return [out[r] for r in sorted(out)]


def _normalize(kind: str, shape):
    if kind == "qr":
        return as_composition(shape)
    if kind == "ssyt":
        return as_partition(shape)
    if kind == "kite":
        if not isinstance(shape, KiteShape):
            raise ShapeError("kite tableaux need a KiteShape")
        return shape
    raise ShapeError(f"unknown tableau kind {kind!r}")


@lru_cache(maxsize=None)
def _diagram(kind: str, shape) -> Diagram:
    joint = -1
    if kind == "qr":
        cells = ribbon_cells(shape)
        body = 0
    elif kind == "ssyt":
        cells = partition_cells(shape)
        body = len(cells)
    else:
        cells = partition_cells(shape.body)
        body = len(cells)
        if shape.tail:
            joint = body
            cells += ribbon_cells(shape.tail, row0=shape.m, col0=0)
    pos = {c: k for k, c in enumerate(cells)}
    left = tuple(pos.get((r, c - 1), -1) for r, c in cells)
    up = tuple(pos.get((r - 1, c), -1) for r, c in cells)
    reading = tuple(sorted(range(len(cells)), key=lambda k: (cells[k][0], -cells[k][1])))
    return Diagram(tuple(cells), left, up, reading, body, joint)


def diagram(kind: str, shape) -> Diagram:
    return _diagram(kind, _normalize(kind, shape))


# ---------------------------------------------------------------- tableaux


@dataclass(frozen=True)
class Tableau:
    kind: str
    shape: object
    alphabet: GradedAlphabet
    entries: tuple[int, ...]

    @property
    def diagram(self) -> Diagram:
        return _diagram(self.kind, self.shape)

    def rows(self) -> list[list[int]]:
        return [[self.entries[k] for k in row] for row in self.diagram.rows()]

    def display_rows(self) -> list[list[str]]:
        return [[self.alphabet.displays[b] for b in row] for row in self.rows()]

    def reading(self) -> tuple[int, ...]:
        return tuple(self.entries[k] for k in self.diagram.reading)

    def word(self) -> Word:
        return Word(self.alphabet, self.reading())

    def weight(self) -> tuple[int, ...]:
        return weight_vector(self.entries, len(self.alphabet))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " / ".join(" ".join(r) for r in self.display_rows())

    def to_json(self) -> dict:
        shape = self.shape.to_json() if isinstance(self.shape, KiteShape) else list(self.shape)
        return {"kind": self.kind, "alphabet": self.alphabet.name, "shape": shape, "rows": self.display_rows()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_rows(cls, kind: str, shape, alphabet: GradedAlphabet, rows: Sequence[Sequence[str | int]]) -> "Tableau":
        shape = _normalize(kind, shape)
        d = _diagram(kind, shape)
        flat = [x for row in rows for x in row]
        lengths = [len(r) for r in d.rows()]
        if [len(r) for r in rows] != lengths:
            raise ShapeError(f"row lengths {[len(r) for r in rows]} do not match shape {lengths}")
        entries = tuple(x if isinstance(x, int) else alphabet.index(x) for x in flat)
        return cls(kind, shape, alphabet, entries)

    @classmethod
    def from_json(cls, data: dict | str, alphabet: GradedAlphabet | None = None) -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        A = alphabet or parse_alphabet(data["alphabet"])
        kind = data["kind"]
        shape = data["shape"]
        if kind == "kite":
            m = shape.get("m")
            if m is None:
                if not A.name.startswith("mixed:"):
                    raise ShapeError("kite shape without m needs a mixed alphabet")
                m = int(A.name.split(":")[1].split(",")[0])
            shape = KiteShape(tuple(shape["body"]), tuple(shape["tail"]), m)
        return cls.from_rows(kind, shape, A, data["rows"])


def from_reading(kind: str, shape, alphabet: GradedAlphabet, reading: Sequence[int]) -> Tableau:
    shape = _normalize(kind, shape)
    d = _diagram(kind, shape)
    if len(reading) != len(d):
        raise ShapeError("reading word length differs from the shape size")
    entries = [0] * len(d)
    for k, b in zip(d.reading, reading):
        entries[k] = b
    return Tableau(kind, shape, alphabet, tuple(entries))


def reading_word(T: Tableau, order: str = "row") -> Word:
    """Row reading (rows top to bottom, each right to left), or for ``ssyt`` the
    column reading (columns right to left, each top to bottom)."""
    if order == "row":
        return T.word()
    if order != "column":
        raise ValueError("order must be 'row' or 'column'")
    if T.kind != "ssyt":
        raise ShapeError("column reading is only defined here for semistandard tableaux")
    cells = T.diagram.cells
    idx = sorted(range(len(cells)), key=lambda k: (-cells[k][1], cells[k][0]))
    return Word(T.alphabet, tuple(T.entries[k] for k in idx))


def _lower_bound(b: int, parity: int, strict_if: int) -> int:
    """Smallest admissible letter next to neighbour b (strict when b has parity ``strict_if``)."""
    return b + 1 if parity == strict_if else b


def _cell_min(entries, k: int, d: Diagram, par: Sequence[int]) -> int:
    lo = 0
    L, U = d.left[k], d.up[k]
    if L >= 0:
        b = entries[L]
        lo = max(lo, _lower_bound(b, par[b], 1))  # odd letters strict in rows
    if U >= 0:
        b = entries[U]
        lo = max(lo, _lower_bound(b, par[b], 0))  # even letters strict in columns
    return lo


def _joint_ok(entries, d: Diagram, b: int, par: Sequence[int]) -> bool:
    top = max(entries[: d.body_size], default=-1)
    return top < b if par[b] == 0 else top <= b


def validate(T: Tableau) -> tuple[bool, str | None]:
    """Check every filling condition; returns (ok, first violation)."""
    try:
        d = T.diagram
    except ShapeError as exc:
        return False, str(exc)
    A = T.alphabet
    par = A.parities
    if len(T.entries) != len(d):
        return False, f"{len(T.entries)} entries for {len(d)} cells"
    for k, b in enumerate(T.entries):
        if not 0 <= b < len(A):
            return False, f"entry at {d.cells[k]} is not a letter of {A.name}"
    for k, b in enumerate(T.entries):
        cell = d.cells[k]
        L, U = d.left[k], d.up[k]
        if L >= 0:
            a = T.entries[L]
            if a > b:
                return False, f"row decreases at {cell}"
            if a == b and par[b] == 1:
                return False, f"odd letter {A.displays[b]} repeats in a row at {cell}"
        if U >= 0:
            a = T.entries[U]
            if a > b:
                return False, f"column decreases at {cell}"
            if a == b and par[b] == 0:
                return False, f"even letter {A.displays[b]} repeats in a column at {cell}"
        if k == d.joint and not _joint_ok(T.entries, d, b, par):
            return False, f"body entries too large for the joint {A.displays[b]} at {cell}"
    return True, None


def _fillings(kind: str, shape, A: GradedAlphabet) -> list[tuple[int, ...]]:
    d = _diagram(kind, shape)
    par = A.parities
    n = len(A)
    size = len(d)
    entries = [0] * size
    out = []

    def rec(k):
        if k == size:
            out.append(tuple(entries))
            return
        for b in range(_cell_min(entries, k, d, par), n):
            if k == d.joint and not _joint_ok(entries, d, b, par):
                continue
            entries[k] = b
            rec(k + 1)

    rec(0)
    return out


def enumerate_tableaux(kind: str, shape, alphabet: GradedAlphabet) -> list[Tableau]:
    """All valid fillings, sorted lexicographically by reading word."""
    shape = _normalize(kind, shape)
    tabs = [Tableau(kind, shape, alphabet, e) for e in _fillings(kind, shape, alphabet)]
    tabs.sort(key=Tableau.reading)
    return tabs


def enumerate_words(kind: str, shape, alphabet: GradedAlphabet) -> list[tuple[int, ...]]:
    return [T.reading() for T in enumerate_tableaux(kind, shape, alphabet)]


def highest_tableau(kind: str, shape, alphabet: GradedAlphabet) -> Tableau:
    """The entrywise minimal filling, which is the highest weight tableau.

    Raises ShapeError when the shape admits no filling over the alphabet.
    """
    shape = _normalize(kind, shape)
    d = _diagram(kind, shape)
    par = alphabet.parities
    entries: list[int] = []
    for k in range(len(d)):
        b = _cell_min(entries, k, d, par)
        while k == d.joint and b < len(alphabet) and not _joint_ok(entries, d, b, par):
            b += 1
        if b >= len(alphabet):
            raise ShapeError(f"shape {shape} admits no {kind} tableau over {alphabet.name}")
        entries.append(b)
    return Tableau(kind, shape, alphabet, tuple(entries))


def hook_admissible(lam: Sequence[int], m: int, n: int) -> bool:
    """lam fits in the (m, n)-hook: lam_{m+1} <= n."""
    return len(lam) <= m or lam[m] <= n


def tableau_apply(x: str, root: SimpleRoot | int, T: Tableau) -> Tableau | None:
    """Act on the reading word and refill the same shape."""
    A = T.alphabet
    r = A.roots[root] if isinstance(root, int) else root
    if A.roots[r.index] != r:
        raise AlphabetError(f"root {r.label} does not belong to {A.name}")
    if x not in ("e", "f"):
        raise ValueError("x must be 'e' or 'f'")
    out = kernel.act(T.reading(), r.index, r.lo.parity, int(r.isotropic), x == "f")
    if out is None:
        return None
    U = from_reading(T.kind, T.shape, A, out)
    ok, why = validate(U)
    if not ok:
        raise ClosureError(f"{x}_{r.label} left the tableau set: {why}")
    return U


# ---------------------------------------------------------------- recognising highest weights


def composition_from_weight(vec: Sequence[int], alphabet: GradedAlphabet, start: int = 0) -> tuple[int, ...] | None:
    """The composition alpha whose highest filling (from letter ``start``) has weight ``vec``.

    Returns None if ``vec`` is not such a weight.
    """
    par = alphabet.parities
    seq = [b for b in range(len(vec)) for _ in range(vec[b])]
    if any(v < 0 for v in vec) or any(vec[b] for b in range(start)):
        return None
    if not seq:
        return ()
    if seq[0] != start:
        return None
    alpha = [1]
    for a, b in zip(seq, seq[1:]):
        if b - a > 1:
            return None
        down = (b == a) == (par[a] == 1)
        if down:
            alpha.append(1)
        else:
            alpha[-1] += 1
    return tuple(alpha)


def partition_from_weight(vec: Sequence[int], m: int, n: int) -> tuple[int, ...] | None:
    """Inverse of the highest weight map over [m|n]; None if ``vec`` is not dominant."""
    head = list(vec[:m])
    mu = list(vec[m:m + n])
    if any(a < b for a, b in zip(head, head[1:])) or any(a < b for a, b in zip(mu, mu[1:])):
        return None
    lower = conjugate([x for x in mu if x])
    if lower and (len(head) < m or head[-1] < lower[0]):
        return None
    return as_partition(head + list(lower))


def kite_from_weight(vec: Sequence[int], alphabet: GradedAlphabet, m: int) -> KiteShape | None:
    """Kite type of a highest weight over an N(m)-truncation (first m letters negative)."""
    body = list(vec[:m])
    if any(a < b for a, b in zip(body, body[1:])):
        return None
    tail = composition_from_weight([0] * m + list(vec[m:]), alphabet, start=m) if any(vec[m:]) else ()
    if tail is None or (tail and m and body[-1] == 0):
        return None
    return KiteShape(tuple(body), tail, m)


# ---------------------------------------------------------------- standard tableaux


@dataclass(frozen=True)
class StandardTableau:
    outer: tuple[int, ...]
    inner: tuple[int, ...]
    cells: tuple[tuple[int, int], ...]
    values: tuple[int, ...]  # aligned with cells

    def position(self, k: int) -> tuple[int, int]:
        return self.cells[self.values.index(k)]

    @property
    def size(self) -> int:
        return len(self.cells)

    def descents(self) -> frozenset[int]:
        """k is a descent iff k+1 sits in a weakly earlier column than k."""
        col = {v: c[1] for v, c in zip(self.values, self.cells)}
        return frozenset(k for k in range(1, self.size) if col[k] >= col[k + 1])

    def composition(self) -> tuple[int, ...]:
        return comp_from_subset(self.descents(), self.size)

    def one_in_first_column(self) -> bool:
        return self.size > 0 and self.position(1)[1] == 0

    def rows(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for c, v in sorted(zip(self.cells, self.values)):
            out.setdefault(c[0], []).append(v)
        return [out[r] for r in sorted(out)]


def _skew_cells(outer, inner):
    inner = list(inner) + [0] * (len(outer) - len(inner))
    if any(a > b for a, b in zip(inner, outer)):
        raise ShapeError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    return [(i, j) for i, p in enumerate(outer) for j in range(inner[i], p)]


def _standard_fillings(cells, before):
    out = []
    for ext in linear_extensions(len(cells), before):
        values = [0] * len(cells)
        for v, k in enumerate(ext, start=1):
            values[k] = v
        out.append(tuple(values))
    return sorted(out)


def standard_tableaux(outer: Sequence[int], inner: Sequence[int] = ()) -> list[StandardTableau]:
    outer = as_partition(outer)
    inner = as_partition(inner)
    cells = _skew_cells(outer, inner)
    pos = {c: k for k, c in enumerate(cells)}
    before = []
    for k, (r, c) in enumerate(cells):
        for nb in ((r, c - 1), (r - 1, c)):
            if nb in pos:
                before.append((pos[nb], k))
    return [StandardTableau(outer, inner, tuple(cells), v) for v in _standard_fillings(cells, before)]


@dataclass(frozen=True)
class StandardRibbonTableau:
    shape: tuple[int, ...]
    values: tuple[int, ...]  # aligned with ribbon cells, row-major

    def rows(self) -> list[list[int]]:
        d = _diagram("qr", self.shape)
        return [[self.values[k] for k in row] for row in d.rows()]

    def to_json(self) -> dict:
        return {"kind": "standard-ribbon", "shape": list(self.shape), "rows": self.rows()}


def standard_ribbon_tableaux(alpha: Sequence[int]) -> list[StandardRibbonTableau]:
    """Fillings by 1..r decreasing along rows and increasing down columns."""
    alpha = as_composition(alpha)
    d = _diagram("qr", alpha)
    before = []
    for k in range(len(d)):
        if d.left[k] >= 0:
            before.append((k, d.left[k]))
        if d.up[k] >= 0:
            before.append((d.up[k], k))
    return [StandardRibbonTableau(alpha, v) for v in _standard_fillings(d.cells, before)]
