"""Small enumeration helpers: compositions, partitions, descents, linear extensions."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence


def comp_from_subset(subset: Iterable[int], r: int) -> tuple[int, ...]:
    """alpha(S) = (i_1, i_2 - i_1, ..., r - i_s) for S subset of {1..r-1}."""
    if r == 0:
        return ()
    s = sorted(set(subset))
    if s and (s[0] < 1 or s[-1] > r - 1):
        raise ValueError(f"subset {s} not inside 1..{r - 1}")
    cuts = [0] + s + [r]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def subset_from_comp(alpha: Sequence[int]) -> frozenset[int]:
    out, acc = [], 0
    for part in alpha[:-1]:
        acc += part
        out.append(acc)
    return frozenset(out)


def compositions(r: int) -> list[tuple[int, ...]]:
    if r == 0:
        return [()]
    return [comp_from_subset(s, r) for s in _subsets(r - 1)]


def compositions_up_to(max_size: int, min_size: int = 1) -> list[tuple[int, ...]]:
    return [c for r in range(min_size, max_size + 1) for c in compositions(r)]


def _subsets(n: int) -> Iterator[tuple[int, ...]]:
    for mask in range(1 << n):
        yield tuple(i + 1 for i in range(n) if mask >> i & 1)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(max_size: int, min_size: int = 1, max_length: int | None = None) -> list[tuple[int, ...]]:
    out = []
    for n in range(min_size, max_size + 1):
        for lam in partitions(n):
            if max_length is None or len(lam) <= max_length:
                out.append(lam)
    return out


def contained_partitions(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """All partitions mu with mu inside lam (including the empty one)."""
    out = []

    def rec(i, prev, acc):
        if i == len(lam):
            out.append(tuple(x for x in acc if x))
            return
        for v in range(min(prev, lam[i]), -1, -1):
            rec(i + 1, v, acc + [v])

    rec(0, lam[0] if lam else 0, [])
    return sorted(set(out))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


def descent_set(seq: Sequence[int]) -> frozenset[int]:
    """{i : seq_i > seq_{i+1}}, 1-based."""
    return frozenset(i + 1 for i in range(len(seq) - 1) if seq[i] > seq[i + 1])


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    """sigma in one-line notation on 1..k."""
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v - 1] = i + 1
    return tuple(inv)


def all_permutations(k: int) -> Iterator[tuple[int, ...]]:
    return permutations(range(1, k + 1))


def linear_extensions(n: int, before: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    """All orderings of range(n) in which a precedes b for every (a, b) in ``before``.

    Output is lexicographically sorted.
    """
    preds = [set() for _ in range(n)]
    for a, b in before:
        preds[b].add(a)
    out: list[tuple[int, ...]] = []
    placed = [False] * n
    seq: list[int] = []

    def rec():
        if len(seq) == n:
            out.append(tuple(seq))
            return
        for x in range(n):
            if not placed[x] and all(placed[p] for p in preds[x]):
                placed[x] = True
                seq.append(x)
                rec()
                seq.pop()
                placed[x] = False

    rec()
    return out


def shuffles(r: int, s: int) -> Iterator[tuple[int, ...]]:
    """Shuffles of chains 0..r-1 and r..r+s-1, as sequences of element ids."""
    def rec(i, j, acc):
        if i == r and j == s:
            yield tuple(acc)
            return
        if i < r:
            yield from rec(i + 1, j, acc + [i])
        if j < s:
            yield from rec(i, j + 1, acc + [r + j])

    yield from rec(0, 0, [])


def all_posets(n: int) -> list[frozenset[tuple[int, int]]]:
    """Every strict partial order on {0..n-1}, as a transitively closed set of pairs (a < b)."""
    result = [frozenset()]
    for k in range(1, n + 1):
        new = k - 1
        nxt = []
        for rel in result:
            elems = range(new)
            below = {x: {a for a, b in rel if b == x} for x in elems}
            above = {x: {b for a, b in rel if a == x} for x in elems}
            ideals = _order_ideals(new, below)
            filters = _order_ideals(new, above)
            for down in ideals:
                for up in filters:
                    if down & up:
                        continue
                    if not all((d, u) in rel for d in down for u in up):
                        continue
                    nxt.append(rel | {(d, new) for d in down} | {(new, u) for u in up})
        result = nxt
    return result


def _order_ideals(n: int, below: dict[int, set[int]]) -> list[frozenset[int]]:
    out = []
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if all(below[x] <= s for x in s):
            out.append(frozenset(s))
    return out


def transitive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Closure of a relation on range(n); raises ValueError on a cycle."""
    reach = [set() for _ in range(n)]
    for a, b in pairs:
        reach[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in range(n):
            extra = set()
            for b in reach[a]:
                extra |= reach[b]
            if not extra <= reach[a]:
                reach[a] |= extra
                changed = True
    for a in range(n):
        if a in reach[a]:
            raise ValueError("cover relation contains a cycle")
    return frozenset((a, b) for a in range(n) for b in reach[a])
