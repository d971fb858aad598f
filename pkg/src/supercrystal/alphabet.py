"""Z2-graded linearly ordered alphabets, weights and simple roots.

Letters inside a word are stored as their position in the alphabet, so the
ordering of any alphabet (including permuted ones) is integer comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

_INT_RE = re.compile(r"^-?[0-9]+$")
_HALF_RE = re.compile(r"^([0-9]+)/2$")


class AlphabetError(ValueError):
    pass


def parse_letter_value(display: str) -> Fraction:
    """Parse a letter display (``-3``, ``2``, ``5/2``) to its rational value."""
    display = display.strip()
    if _INT_RE.match(display):
        return Fraction(int(display))
    m = _HALF_RE.match(display)
    if m and int(m.group(1)) % 2 == 1:
        return Fraction(int(m.group(1)), 2)
    raise AlphabetError(f"bad letter display {display!r}")


def format_letter_value(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    if value.denominator == 2:
        return f"{value.numerator}/2"
    raise AlphabetError(f"letter value {value} is not in (1/2)Z")


@dataclass(frozen=True)
class Letter:
    display: str
    parity: int

    def __str__(self) -> str:
        return self.display


@dataclass(frozen=True)
class SimpleRoot:
    """epsilon_lo - epsilon_hi for a successive pair lo < hi."""

    index: int
    lo: Letter
    hi: Letter
    isotropic: bool
    ell: int

    @property
    def label(self) -> str:
        return f"a[{self.lo.display}]"


@dataclass(frozen=True)
class GradedAlphabet:
    letters: tuple[Letter, ...]
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        if not self.letters:
            raise AlphabetError("empty alphabet")
        seen = set()
        for a in self.letters:
            if a.parity not in (0, 1):
                raise AlphabetError(f"letter {a.display} has parity {a.parity}")
            if a.display in seen:
                raise AlphabetError(f"duplicate letter {a.display}")
            seen.add(a.display)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return self.name

    @cached_property
    def _index(self) -> dict[str, int]:
        return {a.display: i for i, a in enumerate(self.letters)}

    @cached_property
    def parities(self) -> tuple[int, ...]:
        return tuple(a.parity for a in self.letters)

    @cached_property
    def displays(self) -> tuple[str, ...]:
        return tuple(a.display for a in self.letters)

    def index(self, letter: Letter | str) -> int:
        key = letter.display if isinstance(letter, Letter) else _canonical_display(letter)
        try:
            return self._index[key]
        except KeyError:
            raise AlphabetError(f"letter {key!r} not in alphabet {self.name}") from None

    def __contains__(self, letter) -> bool:
        key = letter.display if isinstance(letter, Letter) else _canonical_display(letter)
        return key in self._index

    def letter(self, i: int) -> Letter:
        return self.letters[i]

    def parity(self, i: int) -> int:
        return self.letters[i].parity

    @cached_property
    def roots(self) -> tuple[SimpleRoot, ...]:
        return simple_roots(self)

    @cached_property
    def root_params(self) -> tuple[tuple[int, int], ...]:
        """(lo_odd, isotropic) per root index, the form the kernels consume."""
        return tuple((r.lo.parity, int(r.isotropic)) for r in self.roots)

    def parse_word(self, text: str | Iterable[str]) -> tuple[int, ...]:
        tokens = text.split() if isinstance(text, str) else list(text)
        return tuple(self.index(t) for t in tokens)

    def format_word(self, word: Sequence[int]) -> str:
        return " ".join(self.letters[i].display for i in word)

    def value(self, i: int) -> Fraction:
        return parse_letter_value(self.letters[i].display)


def _canonical_display(text: str) -> str:
    text = text.strip()
    try:
        return format_letter_value(parse_letter_value(text))
    except AlphabetError:
        return text


def simple_roots(alphabet: GradedAlphabet) -> tuple[SimpleRoot, ...]:
    out = []
    for i in range(len(alphabet) - 1):
        lo, hi = alphabet.letters[i], alphabet.letters[i + 1]
        out.append(SimpleRoot(i, lo, hi, lo.parity != hi.parity, -1 if lo.parity else 1))
    return tuple(out)


# ---------------------------------------------------------------- factories


def custom(pairs: Iterable[tuple[str, int]], name: str = "custom") -> GradedAlphabet:
    return GradedAlphabet(tuple(Letter(_canonical_display(d), int(p)) for d, p in pairs), name)


def _n_family_letter(value: Fraction) -> Letter:
    # integers are even, half-integers odd
    return Letter(format_letter_value(value), 0 if value.denominator == 1 else 1)


def mn(m: int, n: int) -> GradedAlphabet:
    """[m|n]: -m < ... < -1 (even) < 1 < ... < n (odd)."""
    if m < 0 or n < 0:
        raise AlphabetError("m and n must be non-negative")
    letters = [Letter(str(-k), 0) for k in range(m, 0, -1)]
    letters += [Letter(str(k), 1) for k in range(1, n + 1)]
    return GradedAlphabet(tuple(letters), f"mn:{m},{n}")


def _half_values(n: Fraction) -> list[Fraction]:
    n = Fraction(n)
    if (2 * n).denominator != 1 or n < Fraction(1, 2):
        raise AlphabetError(f"truncation bound {n} must be a positive element of (1/2)Z")
    return [Fraction(k, 2) for k in range(1, int(2 * n) + 1)]


def half_trunc(n) -> GradedAlphabet:
    """N^{<= n} = {1/2 < 1 < 3/2 < ... < n}."""
    n = _as_half(n)
    letters = tuple(_n_family_letter(v) for v in _half_values(n))
    return GradedAlphabet(letters, f"half:{format_letter_value(n)}")


def mixed_trunc(m: int, n) -> GradedAlphabet:
    """N(m)^{<= n} = {-m < ... < -1 < 1/2 < 1 < ... < n}."""
    n = _as_half(n)
    if m < 0:
        raise AlphabetError("m must be non-negative")
    letters = [Letter(str(-k), 0) for k in range(m, 0, -1)]
    letters += [_n_family_letter(v) for v in _half_values(n)]
    return GradedAlphabet(tuple(letters), f"mixed:{m},{format_letter_value(n)}")


def permuted(base: GradedAlphabet, sigma: Mapping[str, str] | Sequence[str], name: str | None = None) -> GradedAlphabet:
    """S^sigma: a <_sigma b iff sigma^{-1}(a) < sigma^{-1}(b).

    ``sigma`` is either a mapping of base letters to base letters, or the
    sequence of images sigma(b_1), sigma(b_2), ... in base order.
    """
    if isinstance(sigma, Mapping):
        images = [_canonical_display(sigma.get(a.display, a.display)) for a in base.letters]
    else:
        images = [_canonical_display(s) for s in sigma]
    if sorted(images) != sorted(base.displays):
        raise AlphabetError("sigma is not a permutation of the base letters")
    letters = tuple(base.letters[base.index(d)] for d in images)
    return GradedAlphabet(letters, name or f"perm:{base.name}")


def omega_order(m: int, n: int) -> list[str]:
    """Ordering of [m|n] with maximal number of odd isotropic roots (m >= n).

    The first m-n negatives come first, then 1, -n, 2, -(n-1), ..., n, -1.
    """
    if m < n:
        raise AlphabetError("omega requires m >= n")
    order = [str(-k) for k in range(m, n, -1)]
    for j in range(1, n + 1):
        order += [str(j), str(-(n - j + 1))]
    return order


def omega(m: int, n: int) -> GradedAlphabet:
    return permuted(mn(m, n), omega_order(m, n), name=f"perm:mn:{m},{n}:omega")


def isomorphic(a: GradedAlphabet, b: GradedAlphabet) -> bool:
    """Order- and grading-preserving bijection exists (position-wise parities agree)."""
    return a.parities == b.parities


def relabel_map(src: GradedAlphabet, dst: GradedAlphabet) -> dict[str, str]:
    if not isomorphic(src, dst):
        raise AlphabetError(f"{src.name} and {dst.name} are not isomorphic")
    return {a.display: b.display for a, b in zip(src.letters, dst.letters)}


def _as_half(x) -> Fraction:
    if isinstance(x, str):
        return parse_letter_value(x)
    return Fraction(x)


def parse_alphabet(spec: str) -> GradedAlphabet:
    """Parse CLI alphabet specs: ``mn:4,2``, ``half:2``, ``mixed:1,2``,
    ``perm:mn:4,2:omega`` or ``perm:<base>:<comma separated new order>``."""
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    try:
        if kind == "mn":
            m, n = (int(x) for x in rest.split(","))
            return mn(m, n)
        if kind == "half":
            return half_trunc(rest)
        if kind == "mixed":
            m, n = rest.split(",")
            return mixed_trunc(int(m), n)
        if kind == "perm":
            base_spec, _, order = rest.rpartition(":")
            base = parse_alphabet(base_spec)
            if order == "omega":
                if not base.name.startswith("mn:"):
                    raise AlphabetError("omega is defined for [m|n] alphabets only")
                m, n = (int(x) for x in base.name[3:].split(","))
                return omega(m, n)
            return permuted(base, order.split(","), name=spec)
    except AlphabetError:
        raise
    except ValueError as exc:
        raise AlphabetError(f"bad alphabet spec {spec!r}: {exc}") from None
    raise AlphabetError(f"unknown alphabet spec {spec!r}")


# ---------------------------------------------------------------- weights


@dataclass(frozen=True)
class Weight:
    """Finitely supported integer vector on letters, keyed by display."""

    coeffs: tuple[tuple[str, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[str, int], alphabet: GradedAlphabet | None = None) -> "Weight":
        items = [(k, v) for k, v in d.items() if v]
        if alphabet is not None:
            items.sort(key=lambda kv: alphabet.index(kv[0]))
        else:
            items.sort(key=lambda kv: letter_sort_key(kv[0]))
        return cls(tuple(items))

    @classmethod
    def from_vector(cls, vec: Sequence[int], alphabet: GradedAlphabet) -> "Weight":
        return cls(tuple((alphabet.letters[i].display, v) for i, v in enumerate(vec) if v))

    @classmethod
    def epsilon(cls, display: str) -> "Weight":
        return cls(((_canonical_display(display), 1),))

    def as_dict(self) -> dict[str, int]:
        return dict(self.coeffs)

    def __getitem__(self, display: str) -> int:
        return self.as_dict().get(_canonical_display(display), 0)

    def __add__(self, other: "Weight") -> "Weight":
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return Weight.from_dict(d)

    def __neg__(self) -> "Weight":
        return Weight(tuple((k, -v) for k, v in self.coeffs))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def vector(self, alphabet: GradedAlphabet) -> tuple[int, ...]:
        vec = [0] * len(alphabet)
        for k, v in self.coeffs:
            vec[alphabet.index(k)] += v
        return tuple(vec)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*e[{k}]" if v != 1 else f"e[{k}]" for k, v in self.coeffs)


def letter_sort_key(display: str):
    try:
        return (0, parse_letter_value(display), "")
    except AlphabetError:
        return (1, Fraction(0), display)


def pairing(w: Weight, root: SimpleRoot, alphabet: GradedAlphabet | None = None) -> int:
    """(w, eps_lo - eps_hi) under (eps_a, eps_b) = (-1)^{|a|} delta_ab."""
    if alphabet is not None:
        for k, _ in w.coeffs:
            alphabet.index(k)
        if alphabet.letters[root.index] != root.lo or alphabet.letters[root.index + 1] != root.hi:
            raise AlphabetError("root does not belong to the alphabet")
    lo_sign = -1 if root.lo.parity else 1
    hi_sign = -1 if root.hi.parity else 1
    return w[root.lo.display] * lo_sign - w[root.hi.display] * hi_sign


def vector_pairing(vec: Sequence[int], alphabet: GradedAlphabet, root_index: int) -> int:
    p = alphabet.parities
    i = root_index
    return vec[i] * (-1 if p[i] else 1) - vec[i + 1] * (-1 if p[i + 1] else 1)


def vector_geq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a - b is a non-negative combination of eps_i - eps_{i+1}."""
    s = 0
    for x, y in zip(a, b):
        s += x - y
        if s < 0:
            return False
    return s == 0


def weight_order_geq(a: Weight, b: Weight, alphabet: GradedAlphabet) -> bool:
    return vector_geq(a.vector(alphabet), b.vector(alphabet))
