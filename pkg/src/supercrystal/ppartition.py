"""Labeled posets, enriched P-partitions as crystals, shuffles and kite multiplicities."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import alphabet as al
from .alphabet import GradedAlphabet
from .combinat import (
    comp_from_subset,
    contained_partitions,
    linear_extensions as _linear_extensions,
    shuffles,
    transitive_closure,
)
from .crystal import CrystalComponent, decompose, equivalent, highest_element, weight_vector, Word
from .tableaux import (
    KiteShape,
    ShapeError,
    composition_from_weight,
    corners,
    diagram,
    enumerate_tableaux,
    enumerate_words,
    highest_tableau,
    kite_from_weight,
    standard_tableaux,
)

__all__ = [
    "LabeledPoset",
    "enumerate_enriched",
    "embed_word",
    "linear_extensions",
    "descents",
    "descent_composition",
    "pi_decompose",
    "chain_labels",
    "shuffle_decompose",
    "component_types",
    "tensor_decompose",
    "lr_tableaux",
    "kite_branching_rule",
    "kite_components",
    "kite_tensor_multiplicity",
    "kite_tensor_oracle",
    "kite_tensor_quadruples",
    "TruncationError",
]


class TruncationError(ValueError):
    """The chosen truncation cannot see every component that matters."""


# ---------------------------------------------------------------- posets


@dataclass(frozen=True)
class LabeledPoset:
    names: tuple[str, ...]
    less: frozenset[tuple[int, int]]  # transitively closed strict order on indices
    gamma: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.gamma)) != len(self.gamma):
            raise ValueError("gamma must be injective")
        if len(self.gamma) != len(self.names):
            raise ValueError("gamma must label every element")

    def __len__(self) -> int:
        return len(self.names)

    @classmethod
    def from_covers(cls, names: Sequence[str], covers: Iterable[tuple[str, str]], gamma) -> "LabeledPoset":
        names = tuple(str(x) for x in names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate element names")
        pos = {x: i for i, x in enumerate(names)}
        try:
            pairs = [(pos[str(a)], pos[str(b)]) for a, b in covers]
            g = tuple(int(gamma[x]) for x in names) if isinstance(gamma, dict) else tuple(int(v) for v in gamma)
        except KeyError as exc:
            raise ValueError(f"unknown element {exc}") from exc
        return cls(names, transitive_closure(len(names), pairs), g)

    @classmethod
    def chain(cls, labels: Sequence[int]) -> "LabeledPoset":
        n = len(labels)
        return cls(tuple(map(str, range(n))), transitive_closure(n, [(i, i + 1) for i in range(n - 1)]), tuple(labels))

    @classmethod
    def from_json(cls, data: dict | str) -> "LabeledPoset":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_covers(data["elements"], data.get("covers", []), data["gamma"])

    def to_json(self) -> dict:
        covers = [
            [self.names[a], self.names[b]]
            for a, b in sorted(self.less)
            if not any((a, c) in self.less and (c, b) in self.less for c in range(len(self)))
        ]
        return {"elements": list(self.names), "covers": covers, "gamma": dict(zip(self.names, self.gamma))}

    def disjoint_union(self, other: "LabeledPoset") -> "LabeledPoset":
        k = len(self)
        return LabeledPoset(
            tuple(f"a{x}" for x in self.names) + tuple(f"b{x}" for x in other.names),
            self.less | {(a + k, b + k) for a, b in other.less},
            self.gamma + other.gamma,
        )


def enumerate_enriched(P: LabeledPoset, A: GradedAlphabet) -> list[tuple[int, ...]]:
    """All maps sigma : X -> A (as letter positions) satisfying the enriched conditions."""
    n = len(P)
    par = A.parities
    order = _linear_extensions(n, P.less)[0] if n else ()
    below = {x: [a for a, b in P.less if b == x] for x in range(n)}
    above = {x: [b for a, b in P.less if a == x] for x in range(n)}
    sigma = [-1] * n
    out = []

    def ok(x, v):
        g = P.gamma
        for a in below[x]:
            u = sigma[a]
            if u < 0:
                continue
            if u > v or (u == v and (g[a] > g[x] if par[v] == 0 else g[a] < g[x])):
                return False
        for b in above[x]:
            u = sigma[b]
            if u < 0:
                continue
            if v > u or (u == v and (g[x] > g[b] if par[v] == 0 else g[x] < g[b])):
                return False
        return True

    def rec(i):
        if i == n:
            out.append(tuple(sigma))
            return
        x = order[i]
        for v in range(len(A)):
            if ok(x, v):
                sigma[x] = v
                rec(i + 1)
                sigma[x] = -1

    rec(0)
    return sorted(out)


def embed_word(sigma: Sequence[int], P: LabeledPoset) -> tuple[int, ...]:
    """Read sigma in decreasing gamma order."""
    return tuple(sigma[x] for x in sorted(range(len(P)), key=lambda x: -P.gamma[x]))


def linear_extensions(P: LabeledPoset) -> list[tuple[int, ...]]:
    return _linear_extensions(len(P), P.less)


def descents(w: Sequence[int], gamma: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(w) - 1) if gamma[w[i]] > gamma[w[i + 1]])


def descent_composition(w: Sequence[int], gamma: Sequence[int]) -> tuple[int, ...]:
    return comp_from_subset(descents(w, gamma), len(w))


def pi_decompose(sigma: Sequence[int], P: LabeledPoset, A: GradedAlphabet) -> tuple[int, ...]:
    """The linear extension a given enriched P-partition belongs to."""
    par = A.parities
    g = P.gamma

    def key(x):
        v = sigma[x]
        return (v, g[x] if par[v] == 0 else -g[x])

    return tuple(sorted(range(len(P)), key=key))


# ---------------------------------------------------------------- crystal types


def component_types(components: Iterable[CrystalComponent], typer) -> Counter:
    """Multiset of component types, ``typer`` mapping the highest weight vector to a type."""
    out: Counter = Counter()
    for c in components:
        h = highest_element(c)
        t = typer(weight_vector(h, len(c.alphabet)))
        if t is None:
            raise ValueError(f"highest element {c.alphabet.format_word(h)} has no recognised type")
        out[t] += 1
    return out


def qr_typer(A: GradedAlphabet):
    return lambda vec: composition_from_weight(vec, A)


def kite_typer(A: GradedAlphabet, m: int):
    return lambda vec: kite_from_weight(vec, A, m)


def chain_labels(alpha: Sequence[int], shift: int = 0) -> tuple[int, ...]:
    """Labels of the ribbon nodes (NW to SE): r - k + 1 where k is the reading position."""
    if not alpha:
        return ()
    d = diagram("qr", alpha)
    r = len(d)
    pos = {cell: k for k, cell in enumerate(d.reading, start=1)}
    return tuple(r - pos[i] + 1 + shift for i in range(r))


def shuffle_decompose(alpha: Sequence[int], beta: Sequence[int]) -> Counter:
    """Multiset of descent compositions over all shuffles of the two labeled chains."""
    r, s = sum(alpha), sum(beta)
    labels = chain_labels(alpha, s) + chain_labels(beta)
    return Counter(descent_composition(w, labels) for w in shuffles(r, s))


def tensor_decompose(alpha: Sequence[int], beta: Sequence[int], A: GradedAlphabet) -> Counter:
    """Component types of B(alpha) x B(beta) by brute force over a half-integer truncation."""
    left = enumerate_words("qr", alpha, A) if alpha else [()]
    right = enumerate_words("qr", beta, A) if beta else [()]
    words = [a + b for a in left for b in right]
    return component_types(decompose(words, A), qr_typer(A))


def expected_within(types: Counter, n) -> Counter:
    """Drop compositions invisible over a truncation with top letter n (more than 2n corners)."""
    return Counter({a: c for a, c in types.items() if corners(a) <= 2 * n})


# ---------------------------------------------------------------- kites


def lr_tableaux(lam, mu, nu, m: int):
    """S in B_[m|0](nu) with H_mu x S equivalent to H_lam."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu) or max(len(lam), len(mu), len(nu)) > m:
        return []
    if not lam:
        return [None]  # the empty tableau
    A = al.mn(m, 0)
    Hmu = highest_tableau("ssyt", mu, A).reading() if mu else ()
    Hlam = Word(A, highest_tableau("ssyt", lam, A).reading() if lam else ())
    target = weight_vector(Hlam.letters, len(A))
    out = []
    for S in enumerate_tableaux("ssyt", nu, A):
        w = Word(A, Hmu + S.reading())
        if weight_vector(w.letters, len(A)) == target and equivalent(w, Hlam):
            out.append(S)
    return out


def kite_branching_rule(lam: Sequence[int], m: int, n=None) -> Counter:
    """Kite types predicted for B_{N(m)}(lam) by skew standard tableaux whose 1 is in the first column.

    With ``n`` given, tails with more than 2n corners are dropped.
    """
    lam = tuple(lam)
    out: Counter = Counter()
    for mu in contained_partitions(lam):
        if len(mu) > m:
            continue
        if mu == lam:
            out[KiteShape(mu, (), m)] += 1
            continue
        if len(mu) != m:
            continue
        for T in standard_tableaux(lam, mu):
            if T.one_in_first_column():
                alpha = T.composition()
                if n is None or corners(alpha) <= 2 * n:
                    out[KiteShape(mu, alpha, m)] += 1
    return out


def kite_components(words: Iterable[tuple[int, ...]], A: GradedAlphabet, m: int) -> Counter:
    return component_types(decompose(words, A), kite_typer(A, m))


def _kite_words(K: KiteShape, A: GradedAlphabet) -> list[tuple[int, ...]]:
    if K.size == 0:
        return [()]
    return enumerate_words("kite", K, A)


def kite_tensor_oracle(target: KiteShape, left: KiteShape, right: KiteShape, n: int = 2) -> int:
    """Count components of B(left) x B(right) over N(m) truncated at n that have type ``target``."""
    m = target.m
    if corners(target.tail) > 2 * n:
        raise TruncationError(f"tail {target.tail} is invisible over the truncation at {n}")
    A = al.mixed_trunc(m, n)
    words = [a + b for a in _kite_words(left, A) for b in _kite_words(right, A)]
    return kite_components(words, A, m)[target]


def _first_node(T1, K: KiteShape):
    """(row, col) of the smallest element of the chain alpha(T1).tail, or None."""
    if T1 is not None and T1.size:
        return T1.position(1)
    if K.tail:
        return (K.m, 0)
    return None


def _minus_ones_before(cell, K: KiteShape, filling: dict, offset_count: int = 0) -> int:
    d = diagram("kite", K)
    count = offset_count
    for k in d.reading:
        c = d.cells[k]
        if c == cell:
            return count
        if filling.get(c) == "-1":
            count += 1
    raise ValueError("cell not in shape")


def _body_filling(rows: Sequence[Sequence[str]]) -> dict:
    return {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}


def kite_tensor_quadruples(target: KiteShape, left: KiteShape, right: KiteShape) -> int:
    """Count quadruples (S, T1, T2, w) of the combinatorial rule."""
    m = target.m
    if not (left.m == right.m == m):
        raise ValueError("kites must share m")
    lam, alpha = target.body, target.tail
    mu, beta = left.body, left.tail
    nu, gam = right.body, right.tail
    Am = al.mn(m, 0) if m else None
    total = 0
    for eta in contained_partitions(mu):
        for zeta in contained_partitions(nu):
            if sum(eta) + sum(zeta) != sum(lam):
                continue
            Ss = lr_tableaux(lam, eta, zeta, m)
            if not Ss:
                continue
            T1s = standard_tableaux(mu, eta) if mu != eta else [None]
            T2s = standard_tableaux(nu, zeta) if nu != zeta else [None]
            H_eta = highest_tableau("ssyt", eta, Am).display_rows() if eta else []
            for T1 in T1s:
                c1 = (T1.composition() if T1 else ()) + beta
                for T2 in T2s:
                    c2 = (T2.composition() if T2 else ()) + gam
                    r1, r2 = sum(c1), sum(c2)
                    labels = chain_labels(c1, r2) + chain_labels(c2)
                    good = [w for w in shuffles(r1, r2) if descent_composition(w, labels) == alpha]
                    if not good:
                        continue
                    for S in Ss:
                        f1 = _body_filling(H_eta)
                        f2 = _body_filling(S.display_rows() if S is not None else [])
                        ones_left = sum(1 for v in f1.values() if v == "-1")
                        for w in good:
                            if not w or m == 0:  # no -1 letter, nothing to test
                                total += 1
                                continue
                            if w[0] < r1:
                                cell = _first_node(T1, left)
                                before = _minus_ones_before(cell, left, f1)
                            else:
                                cell = _first_node(T2, right)
                                before = _minus_ones_before(cell, right, f2, ones_left)
                            if before >= 1:
                                total += 1
    return total


def kite_tensor_multiplicity(target: KiteShape, left: KiteShape, right: KiteShape, n: int = 2) -> tuple[int, int]:
    """(oracle count, quadruple count). The oracle is re-run at n+1 to confirm stability."""
    a = kite_tensor_oracle(target, left, right, n)
    b = kite_tensor_oracle(target, left, right, n + 1)
    if a != b:
        raise TruncationError(f"oracle count changes between truncations {n} and {n + 1}: {a} vs {b}")
    return a, kite_tensor_quadruples(target, left, right)
