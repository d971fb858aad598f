"""Kashiwara operators on words, connected components and crystal equivalence."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from . import kernel
from .alphabet import AlphabetError, GradedAlphabet, SimpleRoot, Weight

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    """Exploration hit the state cap; the answer is indeterminate."""


class NotClosedError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    alphabet: GradedAlphabet
    letters: tuple[int, ...]

    @classmethod
    def parse(cls, alphabet: GradedAlphabet, text: str) -> "Word":
        return cls(alphabet, alphabet.parse_word(text))

    def __str__(self) -> str:
        return self.alphabet.format_word(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise AlphabetError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)


def weight_vector(word: Sequence[int], size: int) -> tuple[int, ...]:
    vec = [0] * size
    for b in word:
        vec[b] += 1
    return tuple(vec)


def weight_of(w: Word) -> Weight:
    return Weight.from_vector(weight_vector(w.letters, len(w.alphabet)), w.alphabet)


def _check_root(root: SimpleRoot, alphabet: GradedAlphabet) -> None:
    i = root.index
    if not (0 <= i < len(alphabet) - 1) or alphabet.letters[i] != root.lo or alphabet.letters[i + 1] != root.hi:
        raise AlphabetError(f"root {root.label} does not belong to alphabet {alphabet.name}")


def apply(x: str, root: SimpleRoot, w: Word) -> Word | None:
    """Apply e_root (x='e') or f_root (x='f') to a word; None is the null element."""
    _check_root(root, w.alphabet)
    if x not in ("e", "f"):
        raise ValueError("x must be 'e' or 'f'")
    out = kernel.act(w.letters, root.index, root.lo.parity, int(root.isotropic), x == "f")
    return None if out is None else Word(w.alphabet, out)


def eps_phi(root: SimpleRoot, w: Word) -> tuple[int, int]:
    _check_root(root, w.alphabet)
    return kernel.string(w.letters, root.index, root.lo.parity, int(root.isotropic))


def apply_isotropic_scan(x: str, i: int, w: Word) -> Word | None:
    """Scan description of the operators over an N-truncation.

    For an integer index (even lo) the operator acts on the leftmost letter
    in {lo, hi}; for a half-integer index on the rightmost one.
    """
    A = w.alphabet
    if not A.name.startswith("half:"):
        raise AlphabetError("the scan rule needs a half-integer truncation alphabet")
    lo, hi = i, i + 1
    hits = [k for k, b in enumerate(w.letters) if b == lo or b == hi]
    if not hits:
        return None
    k = hits[0] if A.parity(lo) == 0 else hits[-1]
    b = w.letters[k]
    if x == "f" and b == lo:
        new = hi
    elif x == "e" and b == hi:
        new = lo
    else:
        return None
    return Word(A, w.letters[:k] + (new,) + w.letters[k + 1:])


def is_highest(w: Word) -> bool:
    return kernel.is_highest(w.letters, w.alphabet.root_params)


# ---------------------------------------------------------------- components


@dataclass
class CrystalComponent:
    alphabet: GradedAlphabet
    elements: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[tuple[int, ...], int, tuple[int, ...]], ...]
    highest: tuple[tuple[int, ...], ...]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def highest_weights(self) -> list[Weight]:
        return [Weight.from_vector(weight_vector(h, len(self.alphabet)), self.alphabet) for h in self.highest]

    def words(self) -> list[Word]:
        return [Word(self.alphabet, e) for e in self.elements]

    def to_dot(self, name: str = "crystal") -> str:
        A = self.alphabet
        ids = {e: i for i, e in enumerate(self.elements)}
        lines = [f'digraph "{name}" {{']
        for e in self.elements:
            lines.append(f'  N{ids[e]}[label="{A.format_word(e)}"];')
        for src, r, dst in self.edges:
            lines.append(f'  N{ids[src]} -> N{ids[dst]}[label="{A.roots[r].label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _component_from_seed(seed: tuple[int, ...], A: GradedAlphabet, cap: int, allowed=None):
    params = A.root_params
    seen = {seed}
    queue = deque([seed])
    edges = []
    truncated = False
    while queue:
        w = queue.popleft()
        for r, lower, v in kernel.moves(w, params):
            if allowed is not None and v not in allowed:
                raise NotClosedError(
                    f"{'f' if lower else 'e'}_{A.roots[r].label} maps {A.format_word(w)!r} "
                    f"outside the set (to {A.format_word(v)!r})"
                )
            if lower:
                edges.append((w, r, v))
            if v not in seen:
                if len(seen) >= cap:
                    truncated = True
                    continue
                seen.add(v)
                queue.append(v)
    elements = tuple(sorted(seen))
    if truncated:
        edges = [e for e in edges if e[0] in seen and e[2] in seen]
    highest = tuple(e for e in elements if kernel.is_highest(e, params))
    return CrystalComponent(A, elements, tuple(sorted(set(edges))), highest, truncated)


def explore_component(seed: Word, cap: int = DEFAULT_CAP) -> CrystalComponent:
    """BFS closure of ``seed`` under all e and f; flags truncation past ``cap``."""
    return _component_from_seed(seed.letters, seed.alphabet, cap)


def decompose(elements: Iterable[tuple[int, ...] | Word], alphabet: GradedAlphabet) -> list[CrystalComponent]:
    """Split an operator-closed set of words into connected components.

    Components are ordered by their smallest element.
    """
    raw = {e.letters if isinstance(e, Word) else tuple(e) for e in elements}
    remaining = set(raw)
    out = []
    for seed in sorted(raw):
        if seed not in remaining:
            continue
        comp = _component_from_seed(seed, alphabet, len(raw) + 1, allowed=raw)
        remaining.difference_update(comp.elements)
        out.append(comp)
    return out


def component_summary(components: Iterable[CrystalComponent]) -> list[tuple[tuple[Weight, ...], int]]:
    return sorted(
        ((tuple(c.highest_weights()), c.size) for c in components),
        key=lambda t: (t[1], [str(w) for w in t[0]]),
    )


# ---------------------------------------------------------------- equivalence


def bisimilar(
    a: Hashable,
    b: Hashable,
    moves_a: Callable[[Hashable], dict],
    moves_b: Callable[[Hashable], dict],
    label_a: Callable[[Hashable], Hashable] | None = None,
    label_b: Callable[[Hashable], Hashable] | None = None,
    cap: int = DEFAULT_CAP,
) -> bool:
    """Paired exploration of two deterministic colored graphs from (a, b).

    ``moves_x(v)`` maps an operator key to the target vertex (absent keys are
    null). Succeeds iff the induced relation is a label-preserving bijection
    between the connected components of ``a`` and ``b`` sending a to b.
    """
    fwd = {a: b}
    bwd = {b: a}
    queue = deque([(a, b)])
    while queue:
        x, y = queue.popleft()
        if label_a is not None and label_a(x) != label_b(y):
            return False
        mx, my = moves_a(x), moves_b(y)
        if mx.keys() != my.keys():
            return False
        for key, x2 in mx.items():
            y2 = my[key]
            if x2 in fwd or y2 in bwd:
                if fwd.get(x2) != y2 or bwd.get(y2) != x2:
                    return False
                continue
            if len(fwd) >= cap:
                raise CapExceeded(f"equivalence check exceeded {cap} paired states")
            fwd[x2] = y2
            bwd[y2] = x2
            queue.append((x2, y2))
    return True


def word_moves(alphabet: GradedAlphabet):
    params = alphabet.root_params

    def moves(w):
        return {(r, lower): v for r, lower, v in kernel.moves(w, params)}

    return moves


def word_label(alphabet: GradedAlphabet):
    params = alphabet.root_params
    n = len(alphabet)

    def label(w):
        return weight_vector(w, n), kernel.signature(w, params)

    return label


def equivalent(a: Word, b: Word, cap: int = DEFAULT_CAP) -> bool:
    """gl_S-equivalence: an isomorphism C(a) -> C(b) preserving wt, eps, phi with a -> b."""
    if a.alphabet != b.alphabet:
        raise AlphabetError("words over different alphabets")
    A = a.alphabet
    label = word_label(A)
    moves = word_moves(A)
    if label(a.letters) != label(b.letters):
        return False
    return bisimilar(a.letters, b.letters, moves, moves, label, label, cap)


def raw_equivalent(a: tuple[int, ...], b: tuple[int, ...], alphabet: GradedAlphabet, cap: int = DEFAULT_CAP) -> bool:
    return equivalent(Word(alphabet, a), Word(alphabet, b), cap)


def colored_isomorphic(
    a: tuple[int, ...], A: GradedAlphabet, b: tuple[int, ...], B: GradedAlphabet, cap: int = DEFAULT_CAP
) -> bool:
    """Isomorphism of Delta-colored oriented graphs C(a) -> C(b) with a -> b (weights ignored)."""
    if A.root_params != B.root_params:
        return False
    return bisimilar(a, b, word_moves(A), word_moves(B), cap=cap)


def highest_element(component: CrystalComponent) -> tuple[int, ...]:
    """The unique maximal-weight element killed by all e's."""
    n = len(component.alphabet)
    from .alphabet import vector_geq

    hs = component.highest
    if not hs:
        raise ValueError("component has no highest weight element")
    tops = [
        h
        for h in hs
        if all(vector_geq(weight_vector(h, n), weight_vector(g, n)) for g in hs)
    ]
    if len(tops) != 1:
        raise ValueError("component has no unique maximal highest weight element")
    return tops[0]
