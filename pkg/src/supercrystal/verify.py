"""Named verification suites. Each returns a SuiteResult; ``run_suite`` times it."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from . import alphabet as al
from . import kernel
from .characters import (
    Poly,
    cancel_substitute,
    expand_in_basis,
    factorization_check,
    hook_schur,
    kite_character,
    qsym_membership,
    tableau_character,
)
from .combinat import (
    all_permutations,
    comp_from_subset,
    compositions,
    compositions_up_to,
    descent_set,
    inverse_permutation,
    partitions,
    partitions_up_to,
)
from .crystal import colored_isomorphic, decompose, highest_element, raw_equivalent
from .insertion import gessel_count, matrices_with_sum, matrix_apply, qr_insert, qr_PQ, rsk
from .ppartition import (
    expected_within,
    kite_branching_rule,
    kite_components,
    kite_tensor_quadruples,
    qr_typer,
    component_types,
    shuffle_decompose,
    tensor_decompose,
)
from .tableaux import (
    KiteShape,
    corners,
    enumerate_tableaux,
    enumerate_words,
    highest_tableau,
)


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    limit: float = 0.0

    def check(self, cond: bool, msg: str) -> None:
        self.checks += 1
        if not cond:
            self.ok = False
            if len(self.failures) < 20:
                self.failures.append(msg)

    @property
    def in_time(self) -> bool:
        return self.elapsed <= self.limit

    @property
    def passed(self) -> bool:
        return self.ok and self.in_time

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.in_time else f" (over the {self.limit:g}s limit)"
        return f"{status} {self.name}: {self.checks} checks, {self.elapsed:.2f}s{extra}"


# ---------------------------------------------------------------- 1


def fig2() -> SuiteResult:
    res = SuiteResult("fig2")
    A = al.half_trunc(2)
    words = enumerate_words("qr", (2, 1), A)
    res.check(len(words) == 8, f"{len(words)} tableaux instead of 8")
    comps = decompose(words, A)
    res.check(len(comps) == 1, f"{len(comps)} components")
    H = highest_tableau("qr", (2, 1), A).reading()
    res.check(comps[0].highest == (H,), f"highest elements {comps[0].highest}")
    p = A.root_params
    generated = set()
    for ms in product((0, 1), repeat=3):
        w = H
        for root in (2, 1, 0):  # f_{3/2} first, f_{1/2} last
            if ms[root] and w is not None:
                w = kernel.act(w, root, p[root][0], p[root][1], True)
        res.check(w is not None, f"f-string {ms} is null")
        generated.add(w)
    res.check(generated == set(words), "f-strings do not produce the whole set")
    return res


# ---------------------------------------------------------------- 2


def stability(max_nodes: int = 8) -> SuiteResult:
    res = SuiteResult("stability")
    A = al.half_trunc(2)
    ref = highest_tableau("qr", (2, 1), A).reading()
    for alpha in compositions_up_to(max_nodes):
        if corners(alpha) not in (3, 4):
            continue
        words = enumerate_words("qr", alpha, A)
        res.check(len(words) == 8, f"{alpha}: {len(words)} elements")
        H = highest_tableau("qr", alpha, A).reading()
        res.check(colored_isomorphic(H, A, ref, A), f"{alpha}: colored graph differs")
    return res


# ---------------------------------------------------------------- 3


def qr_connectivity(max_nodes: int = 6) -> SuiteResult:
    res = SuiteResult("qr-connectivity")
    A = al.half_trunc(3)
    for alpha in compositions_up_to(max_nodes):
        words = enumerate_words("qr", alpha, A)
        comps = decompose(words, A)
        H = highest_tableau("qr", alpha, A).reading()
        res.check(len(comps) == 1, f"{alpha}: {len(comps)} components")
        res.check(comps[0].highest == (H,), f"{alpha}: highest elements {comps[0].highest}")
    return res


# ---------------------------------------------------------------- 4


def _all_words(A, max_len):
    for r in range(max_len + 1):
        yield from product(range(len(A)), repeat=r)


def insertion_equivalence(max_len: int = 5, max_tab: int = 4) -> SuiteResult:
    res = SuiteResult("insertion-equivalence")
    A = al.half_trunc(2)
    params = A.root_params
    for w in _all_words(A, max_len):
        P, Q = qr_PQ(w, A)
        res.check(raw_equivalent(w, P.reading(), A), f"{A.format_word(w)} not equivalent to P(w)")
        for _, _, v in kernel.moves(w, params):
            res.check(qr_PQ(v, A)[1] == Q, f"Q changes along an edge at {A.format_word(w)}")
    for size in range(max_tab + 1):
        for alpha in compositions(size):
            tabs = enumerate_tableaux("qr", alpha, A) if alpha else [None]
            for T in tabs:
                base = T.reading() if T is not None else ()
                for b in range(len(A)):
                    U = qr_insert(b, T, A)
                    res.check(
                        raw_equivalent(U.reading(), base + (b,), A),
                        f"inserting {A.displays[b]} into {T} breaks equivalence",
                    )
    return res


# ---------------------------------------------------------------- 5


def syt_decomposition(max_size: int = 5) -> SuiteResult:
    from .tableaux import standard_tableaux

    res = SuiteResult("syt-decomposition")
    A = al.half_trunc(2)
    for lam in partitions_up_to(max_size):
        obs = component_types(decompose(enumerate_words("ssyt", lam, A), A), qr_typer(A))
        exp = expected_within(Counter(T.composition() for T in standard_tableaux(lam)), 2)
        res.check(obs == exp, f"{lam}: components {dict(obs)} vs {dict(exp)}")
    return res


# ---------------------------------------------------------------- 6


def shuffle_tensor(max_total: int = 4) -> SuiteResult:
    res = SuiteResult("shuffle-tensor")
    A = al.half_trunc(2)
    for alpha in compositions_up_to(max_total - 1):
        for beta in compositions_up_to(max_total - sum(alpha)):
            obs = tensor_decompose(alpha, beta, A)
            exp = expected_within(shuffle_decompose(alpha, beta), 2)
            res.check(obs == exp, f"{alpha} x {beta}: {dict(obs)} vs {dict(exp)}")
    return res


# ---------------------------------------------------------------- 7


def _perm_shape_counts(k):
    out = Counter()
    for sigma in all_permutations(k):
        out[(comp_from_subset(descent_set(sigma), k), comp_from_subset(descent_set(inverse_permutation(sigma)), k))] += 1
    return out


def rsk_gessel(max_k: int = 4) -> SuiteResult:
    res = SuiteResult("rsk-gessel")
    A = al.half_trunc(2)
    sizes = {}
    for k in range(1, max_k + 1):
        expected = _perm_shape_counts(k)
        fibres = Counter()
        for M in matrices_with_sum(A, k):
            P1, P2 = rsk(M)
            res.check(P1.weight() == M.row_sums() and P2.weight() == M.col_sums(), "weights not preserved")
            fibres[(P1.shape, P1.entries, P2.shape, P2.entries)] += 1
        for (s1, _, s2, _), c in fibres.items():
            res.check(c == expected[(s1, s2)], f"k={k}: fibre over shapes {s1},{s2} has {c} != {expected[(s1, s2)]}")
        target = 0
        for (s1, s2), c in expected.items():
            n1 = sizes.setdefault(s1, len(enumerate_words("qr", s1, A)))
            n2 = sizes.setdefault(s2, len(enumerate_words("qr", s2, A)))
            target += c * n1 * n2
        res.check(sum(fibres.values()) == target, f"k={k}: {sum(fibres.values())} matrices vs {target} targets")
        for mask1 in range(1 << (k - 1)):
            S = [i + 1 for i in range(k - 1) if mask1 >> i & 1]
            for mask2 in range(1 << (k - 1)):
                S2 = [i + 1 for i in range(k - 1) if mask2 >> i & 1]
                a, b = gessel_count(S, S2, k, A)
                res.check(a == b, f"k={k}, S={S}, S'={S2}: {a} permutations vs {b} matrices")
    return res


# ---------------------------------------------------------------- 8


def bicrystal(max_total: int = 3) -> SuiteResult:
    res = SuiteResult("bicrystal")
    A = al.half_trunc(1)
    roots = range(len(A) - 1)
    for k in range(max_total + 1):
        for M in matrices_with_sum(A, k):
            for i, j, x, y in product(roots, roots, "ef", "ef"):
                a = matrix_apply(x, i, M)
                a = matrix_apply(y, j, a, star=True) if a is not None else None
                b = matrix_apply(y, j, M, star=True)
                b = matrix_apply(x, i, b) if b is not None else None
                res.check(a == b, f"{x}_{i} and {y}*_{j} do not commute on {M.to_json()}")
            P1, P2 = rsk(M)
            for i, x in product(roots, "ef"):
                u = matrix_apply(x, i, M)
                if u is not None:
                    res.check(rsk(u)[1] == P2, "P2 changes under a row operator")
                v = matrix_apply(x, i, M, star=True)
                if v is not None:
                    res.check(rsk(v)[0] == P1, "P1 changes under a column operator")
    return res


# ---------------------------------------------------------------- 9


def kite_shapes(m: int, max_body: int, max_tail: int) -> list[KiteShape]:
    out = []
    for b in range(max_body + 1):
        for lam in partitions(b) if b else [()]:
            if len(lam) > m:
                continue
            out.append(KiteShape(lam, (), m))
            if len(lam) == m and m > 0:
                out.extend(KiteShape(lam, a, m) for a in compositions_up_to(max_tail))
    return out


def _component_sizes_match(res, comps_words, A, m, n, label):
    comps = decompose(comps_words, A)
    types = kite_components(comps_words, A, m) if comps else Counter()
    for c in comps:
        from .tableaux import kite_from_weight
        from .crystal import weight_vector

        K = kite_from_weight(weight_vector(highest_element(c), len(A)), A, m)
        size = len(enumerate_words("kite", K, A)) if K.size else 1
        res.check(c.size == size, f"{label}: component of type {K} has {c.size} elements, expected {size}")
    return types


def kite(max_size: int = 5) -> SuiteResult:
    res = SuiteResult("kite")
    for m in (1, 2):
        A = al.mixed_trunc(m, 2)
        for K in kite_shapes(m, 3, 3):
            if K.size == 0:
                continue
            words = enumerate_words("kite", K, A)
            comps = decompose(words, A)
            H = highest_tableau("kite", K, A).reading()
            res.check(len(comps) == 1, f"kite {K}, m={m}: {len(comps)} components")
            res.check(bool(comps) and comps[0].highest == (H,), f"kite {K}, m={m}: wrong highest elements")
        for lam in partitions_up_to(max_size):
            words = enumerate_words("ssyt", lam, A)
            obs = _component_sizes_match(res, words, A, m, 2, f"B({lam}) m={m}")
            exp = kite_branching_rule(lam, m, 2)
            res.check(obs == exp, f"branching of {lam}, m={m}: {dict(obs)} vs {dict(exp)}")
    # [2|1] read through the reordered alphabet, compared with N(1) cut at 1
    W = al.omega(2, 1)
    M = al.mixed_trunc(1, 1)
    ren = al.relabel_map(W, M)
    for lam in partitions_up_to(max_size):
        words = enumerate_words("ssyt", lam, W)
        moved = [M.parse_word([ren[W.displays[b]] for b in w]) for w in words]
        obs = _component_sizes_match(res, moved, M, 1, 1, f"[2|1] {lam}")
        exp = kite_branching_rule(lam, 1, 1)
        res.check(obs == exp, f"[2|1] branching of {lam}: {dict(obs)} vs {dict(exp)}")
        # the crystal over W itself must have the same components as its relabelled copy
        res.check(len(decompose(words, W)) == sum(obs.values()), f"[2|1] {lam}: relabelling changed the components")
    return res


# ---------------------------------------------------------------- 10

STRUCTURE_TRIPLES = [
    (KiteShape((1,), (1,), 1), KiteShape((1,), (), 1), KiteShape((1,), (), 1)),
    (KiteShape((2,), (), 1), KiteShape((1,), (), 1), KiteShape((1,), (), 1)),
    (KiteShape((1,), (2,), 1), KiteShape((1,), (1,), 1), KiteShape((1,), (), 1)),
    (KiteShape((1,), (1, 1), 1), KiteShape((1,), (1,), 1), KiteShape((1,), (), 1)),
    (KiteShape((2,), (1,), 1), KiteShape((1,), (1,), 1), KiteShape((1,), (), 1)),
    (KiteShape((1,), (1, 2), 1), KiteShape((1,), (1,), 1), KiteShape((1,), (1,), 1)),
    (KiteShape((), (2, 1), 0), KiteShape((), (1,), 0), KiteShape((), (1, 1), 0)),
    (KiteShape((), (1, 2), 0), KiteShape((), (2,), 0), KiteShape((), (1,), 0)),
    (KiteShape((1, 1), (1,), 2), KiteShape((1,), (), 2), KiteShape((1, 1), (), 2)),
    (KiteShape((2, 1), (), 2), KiteShape((1,), (), 2), KiteShape((1, 1), (), 2)),
]


def characters(n_struct: int = 3) -> SuiteResult:
    res = SuiteResult("characters")
    # factorization
    for p in (0, 1):
        for q in (1, 2):
            bodies = [()] if p == 0 else [(1,), (2,), (3,)]
            for lam in bodies:
                for alpha in compositions_up_to(4):
                    if corners(alpha) in (2 * q - 1, 2 * q):
                        res.check(factorization_check(lam, alpha, p, q), f"factorization fails for {lam},{alpha},p={p},q={q}")
    # membership of basis characters and the cancellation identity
    for p in (0, 1):
        for q in (1, 2):
            A = al.mixed_trunc(p, q)
            for K in kite_shapes(p, 2, 3):
                if K.size == 0 or corners(K.tail) > 2 * q:
                    continue
                f = kite_character(K, q)
                ok, why = qsym_membership(f, p, q)
                res.check(ok, f"basis character {K} over p={p}, q={q}: {why}")
                d = A.displays
                for i in range(p, len(d) - 1):
                    parts = cancel_substitute(f, d[i], d[i + 1])
                    rest = al.custom([(x, A.parity(j)) for j, x in enumerate(d) if j not in (i, i + 1)])
                    reduced = tableau_character("kite", K, rest) if K.size else Poly.const(1)
                    res.check(set(parts) <= {0} and parts.get(0, Poly()) == reduced,
                              f"cancellation of {K} at ({d[i]}, {d[i + 1]})")
    # hook Schur does not see the ordering of the alphabet
    for lam in partitions_up_to(4):
        res.check(hook_schur(lam, 2, 1) == hook_schur(lam, 2, 1, al.omega(2, 1)), f"hook Schur {lam} depends on the order")
    # structure constants
    for target, left, right in STRUCTURE_TRIPLES:
        m = target.m
        prod = kite_character(left, n_struct) * kite_character(right, n_struct)
        coeffs = expand_in_basis(prod, m, n_struct)
        q = kite_tensor_quadruples(target, left, right)
        res.check(coeffs.get(target, 0) == q, f"{left} x {right} -> {target}: expansion {coeffs.get(target, 0)} vs rule {q}")
    return res


SUITES = {
    "fig2": (fig2, 1.0),
    "stability": (stability, 10.0),
    "qr-connectivity": (qr_connectivity, 60.0),
    "insertion-equivalence": (insertion_equivalence, 120.0),
    "syt-decomposition": (syt_decomposition, 60.0),
    "shuffle-tensor": (shuffle_tensor, 60.0),
    "rsk-gessel": (rsk_gessel, 300.0),
    "bicrystal": (bicrystal, 30.0),
    "kite": (kite, 300.0),
    "characters": (characters, 300.0),
}


def run_suite(name: str) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, limit = SUITES[name]
    t0 = time.perf_counter()
    res = fn()
    res.elapsed = time.perf_counter() - t0
    res.limit = limit
    return res
