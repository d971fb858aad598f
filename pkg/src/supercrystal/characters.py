"""Exact character polynomials, hook Schur polynomials and expansion in the kite basis."""

from __future__ import annotations

import json
import re
import warnings
from typing import Iterable, Mapping, Sequence

from . import alphabet as al
from .alphabet import GradedAlphabet, letter_sort_key, vector_geq
from .combinat import compositions, partitions
from .crystal import weight_vector
from .tableaux import (
    KiteShape,
    ShapeError,
    corners,
    enumerate_words,
    highest_tableau,
    hook_admissible,
    kite_from_weight,
)

__all__ = [
    "Poly",
    "NotInSpan",
    "BoundaryWarning",
    "character",
    "tableau_character",
    "kite_character",
    "hook_schur",
    "factorization_parts",
    "factorization_check",
    "cancel_substitute",
    "t_independent",
    "qsym_membership",
    "expand_in_basis",
    "kite_basis",
]

Monomial = tuple[tuple[str, int], ...]


def _mono(d: Mapping[str, int]) -> Monomial:
    return tuple(sorted(((k, v) for k, v in d.items() if v), key=lambda kv: letter_sort_key(kv[0])))


class Poly:
    """Sparse polynomial with integer coefficients in variables z[letter]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            m = _mono(dict(m))
            c = clean.get(m, 0) + int(c)
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean

    @classmethod
    def var(cls, display: str) -> "Poly":
        return cls({((display, 1),): 1})

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): c}) if c else cls()

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "Poly":
        return cls({_mono(exps): coeff})

    @classmethod
    def from_vector(cls, vec: Sequence[int], alphabet: GradedAlphabet) -> "Poly":
        return cls({_mono(dict(zip(alphabet.displays, vec))): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-other if isinstance(other, Poly) else -other)

    def __rsub__(self, other: int) -> "Poly":
        return Poly.const(other) - self

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                d = dict(m1)
                for k, v in m2:
                    d[k] = d.get(k, 0) + v
                m = _mono(d)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def variables(self) -> set[str]:
        return {k for m in self.terms for k, _ in m}

    def degree(self) -> int:
        return max((sum(v for _, v in m) for m in self.terms), default=0)

    def exponent_vector(self, m: Monomial, alphabet: GradedAlphabet) -> tuple[int, ...]:
        vec = [0] * len(alphabet)
        for k, v in m:
            vec[alphabet.index(k)] = v
        return tuple(vec)

    def swap(self, a: str, b: str) -> "Poly":
        """Exchange the variables z[a] and z[b]."""
        ren = {a: b, b: a}
        return Poly({_mono({ren.get(k, k): v for k, v in m}): c for m, c in self.terms.items()})

    def rename(self, mapping: Mapping[str, str]) -> "Poly":
        return Poly({_mono({mapping.get(k, k): v for k, v in m}): c for m, c in self.terms.items()})

    def _sorted_terms(self):
        def key(item):
            m, _ = item
            deg = sum(v for _, v in m)
            return (-deg, [(letter_sort_key(k), -v) for k, v in m])

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self._sorted_terms():
            factors = [f"z[{k}]" + (f"^{v}" if v != 1 else "") for k, v in m]
            mag = abs(c)
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    _VAR = re.compile(r"z\[([^\]]+)\](?:\^(-?\d+))?")

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Inverse of ``str``: terms like ``3*z[1/2]^2*z[-1]`` joined by + and -."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        chunks, sign, cur, depth = [], "+", "", 0
        for i, ch in enumerate(s):
            depth += ch == "["
            depth -= ch == "]"
            if ch in "+-" and depth == 0 and (i == 0 or s[i - 1] != "^"):
                if cur:
                    chunks.append((sign, cur))
                sign, cur = ch, ""
            else:
                cur += ch
        if not cur:
            raise ValueError(f"dangling sign in {text!r}")
        chunks.append((sign, cur))
        out: dict[Monomial, int] = {}
        for sign, term in chunks:
            coef, exps = 1, {}
            for factor in term.split("*"):
                if factor.isdigit():
                    coef *= int(factor)
                    continue
                mt = cls._VAR.fullmatch(factor)
                if not mt:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                name = al._canonical_display(mt.group(1))
                exps[name] = exps.get(name, 0) + (int(mt.group(2)) if mt.group(2) else 1)
            m = _mono(exps)
            out[m] = out.get(m, 0) + (coef if sign == "+" else -coef)
        return cls(out)

    def to_json(self) -> list:
        return [[c, [[k, v] for k, v in m]] for m, c in self._sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({_mono({k: v for k, v in m}): c for c, m in data})


# ---------------------------------------------------------------- characters


def character(words: Iterable[Sequence[int]], alphabet: GradedAlphabet) -> Poly:
    n = len(alphabet)
    out: dict[Monomial, int] = {}
    disp = alphabet.displays
    for w in words:
        m = _mono(dict(zip(disp, weight_vector(w, n))))
        out[m] = out.get(m, 0) + 1
    return Poly(out)


def tableau_character(kind: str, shape, alphabet: GradedAlphabet) -> Poly:
    if kind != "kite" and not shape:
        return Poly.const(1)
    if kind == "kite" and shape.size == 0:
        return Poly.const(1)
    return character(enumerate_words(kind, shape, alphabet), alphabet)


def kite_character(K: KiteShape, n) -> Poly:
    return tableau_character("kite", K, al.mixed_trunc(K.m, n))


def hook_schur(lam: Sequence[int], m: int, n: int, alphabet: GradedAlphabet | None = None) -> Poly:
    """Character of semistandard tableaux of shape lam over [m|n] (or a reordering of it)."""
    lam = tuple(lam)
    if not hook_admissible(lam, m, n):
        return Poly()
    return tableau_character("ssyt", lam, alphabet or al.mn(m, n))


def _half_letter(p: int):
    """hs over z[-p..-1]; z[1/2]: the alphabet N(p) cut at 1/2."""
    return al.mixed_trunc(p, al.parse_letter_value("1/2"))


def zigzag(q: int) -> tuple[int, ...]:
    return (2,) * (q - 1) + (1,)


def factorization_parts(lam: Sequence[int], alpha: Sequence[int], p: int, q: int) -> tuple[Poly, Poly, Poly]:
    """(kite character, hs * ch B(alpha), z^mu * hs * product) over N(p) cut at q."""
    c = corners(alpha)
    if c not in (2 * q - 1, 2 * q):
        raise ValueError(f"alpha={tuple(alpha)} has {c} corners, expected {2 * q - 1} or {2 * q}")
    K = KiteShape(tuple(lam), tuple(alpha), p)
    lhs = kite_character(K, q)
    hs = tableau_character("ssyt", tuple(lam), _half_letter(p)) if lam else Poly.const(1)
    N = al.half_trunc(q)
    mid = hs * tableau_character("qr", tuple(alpha), N)
    mu = [a - b for a, b in zip(highest_tableau("qr", alpha, N).weight(), highest_tableau("qr", zigzag(q), N).weight())]
    prod = Poly.from_vector(mu, N) * hs
    d = N.displays
    for i in range(len(N) - 1):
        prod = prod * (Poly.var(d[i]) + Poly.var(d[i + 1]))
    return lhs, mid, prod


def factorization_check(lam: Sequence[int], alpha: Sequence[int], p: int, q: int) -> bool:
    lhs, mid, rhs = factorization_parts(lam, alpha, p, q)
    return lhs == mid == rhs


def cancel_substitute(f: Poly, r: str, s: str) -> dict[int, Poly]:
    """Coefficients (by degree in t) of f with z[r] = t and z[s] = -t."""
    r, s = al._canonical_display(r), al._canonical_display(s)
    out: dict[int, dict[Monomial, int]] = {}
    for m, c in f.terms.items():
        d = dict(m)
        a = d.pop(r, 0)
        b = d.pop(s, 0)
        coeff = c * (-1 if b % 2 else 1)
        bucket = out.setdefault(a + b, {})
        key = _mono(d)
        bucket[key] = bucket.get(key, 0) + coeff
    return {k: Poly(v) for k, v in sorted(out.items()) if Poly(v)}


def t_independent(f: Poly, r: str, s: str) -> bool:
    return all(k == 0 for k in cancel_substitute(f, r, s))


def qsym_membership(f: Poly, m: int, n) -> tuple[bool, str | None]:
    """Symmetry in the negative variables and t-cancellation; returns (ok, witness of failure)."""
    A = al.mixed_trunc(m, n)
    d = A.displays
    for i in range(m - 1):
        if f.swap(d[i], d[i + 1]) != f:
            return False, f"not symmetric under z[{d[i]}] <-> z[{d[i + 1]}]"
    pairs = []
    if m >= 1 and len(d) > m:
        pairs.append((d[m - 1], d[m]))
    pairs += [(d[i], d[i + 1]) for i in range(m, len(d) - 1)]
    for r, s in pairs:
        if not t_independent(f, r, s):
            return False, f"depends on t under z[{r}] = -z[{s}] = t"
    return True, None


# ---------------------------------------------------------------- expansion


class NotInSpan(ValueError):
    pass


class BoundaryWarning(UserWarning):
    """A leading term touched the largest letter of the truncation."""


def kite_basis(m: int, n, max_size: int) -> list[KiteShape]:
    """Kites with at most max_size cells whose tail is visible at truncation n."""
    out = []
    for size in range(max_size + 1):
        for b in range(size + 1):
            for lam in partitions(b):
                if len(lam) > m:
                    continue
                if b == size:
                    out.append(KiteShape(lam, (), m))
                elif len(lam) == m:
                    out.extend(KiteShape(lam, a, m) for a in compositions(size - b) if corners(a) <= 2 * n)
    return out


def _leading(f: Poly, A: GradedAlphabet):
    vecs = [(f.exponent_vector(mono, A), mono) for mono in f.terms]
    maximal = [v for v in vecs if not any(w[0] != v[0] and vector_geq(w[0], v[0]) for w in vecs)]
    return max(maximal)


def expand_in_basis(f: Poly, m: int, n) -> dict[KiteShape, int]:
    """Coefficients of f in the basis of kite characters over N(m) cut at n."""
    A = al.mixed_trunc(m, n)
    for v in f.variables():
        if v not in A:
            raise NotInSpan(f"variable z[{v}] is not in {A.name}")
    ok, why = qsym_membership(f, m, n)
    if not ok:
        raise NotInSpan(f"not a super quasi-symmetric polynomial: {why}")
    cache: dict[KiteShape, Poly] = {}
    out: dict[KiteShape, int] = {}
    residual = f
    top = A.displays[-1]
    while residual:
        vec, mono = _leading(residual, A)
        if any(v < 0 for v in vec):
            raise NotInSpan(f"monomial with a negative exponent: {Poly({mono: 1})}")
        K = kite_from_weight(vec, A, m)
        if K is None or corners(K.tail) > 2 * n:
            raise NotInSpan(f"leading monomial {Poly({mono: 1})} is not a highest weight")
        try:
            H = highest_tableau("kite", K, A).weight() if K.size else tuple([0] * len(A))
        except ShapeError as exc:
            raise NotInSpan(str(exc)) from exc
        if H != vec:
            raise NotInSpan(f"leading monomial {Poly({mono: 1})} is not a highest weight")
        if vec[-1] and len(A) > m:
            warnings.warn(f"leading term of type {K} uses the top letter {top}", BoundaryWarning, stacklevel=2)
        c = residual.terms[mono]
        if K not in cache:
            cache[K] = tableau_character("kite", K, A)
        residual = residual - cache[K] * c
        out[K] = out.get(K, 0) + c
    return {k: v for k, v in out.items() if v}
