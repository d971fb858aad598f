from collections import defaultdict
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from supercrystal import alphabet as al
from supercrystal.combinat import compositions_up_to
from supercrystal.crystal import Word, apply, decompose, equivalent, raw_equivalent
from supercrystal.insertion import (
    MatrixError,
    SuperMatrix,
    biwords,
    bold_P,
    column_insert,
    gessel_count,
    matrices_with_sum,
    matrix_apply,
    qr_insert,
    qr_P,
    qr_PQ,
    qr_Q,
    rsk,
)
from supercrystal.tableaux import Tableau, enumerate_tableaux, standard_ribbon_tableaux, validate

N2 = al.half_trunc(2)
N3 = al.half_trunc(3)
EXAMPLE = "1 1/2 1 5/2 2 2"


def rows(T):
    return [" ".join(r) for r in T.display_rows()]


def test_worked_example():
    P, Q = qr_PQ(Word.parse(N3, EXAMPLE))
    assert rows(P) == ["1/2", "1 1", "2 2 5/2"]
    assert Q.rows() == [[2], [3, 1], [6, 5, 4]]
    assert equivalent(Word.parse(N3, EXAMPLE), P.word())


def test_single_insertions():
    T = Tableau.from_rows("qr", (3, 2), N3, [["1", "1", "5/2"], ["5/2", "3"]])
    assert rows(qr_insert("2", T)) == ["1 1", "2 5/2", "5/2 3"]
    assert rows(qr_insert("5/2", T)) == ["1 1 5/2", "5/2", "5/2 3"]


def test_fallback_goes_below():
    A = al.half_trunc(3)
    U = qr_insert("2", qr_P(Word.parse(A, "1")))
    assert U.shape == (1, 1)
    assert equivalent(U.word(), Word.parse(A, "1 2"))


def all_words(A, max_len):
    for r in range(1, max_len + 1):
        for w in product(range(len(A)), repeat=r):
            yield Word(A, w)


def test_insertion_is_tensoring():
    # (b -> T) is equivalent to T (x) b
    for alpha in compositions_up_to(3):
        for T in enumerate_tableaux("qr", alpha, N2):
            for b in range(len(N2)):
                U = qr_insert(b, T)
                assert validate(U)[0]
                assert raw_equivalent(U.reading(), T.reading() + (b,), N2)


def test_P_is_the_unique_equivalent_quasi_ribbon():
    by_shape = {alpha: enumerate_tableaux("qr", alpha, N2) for alpha in compositions_up_to(4)}
    for w in all_words(N2, 4):
        P = qr_P(w)
        others = [T for T in by_shape[P.shape] if T != P and raw_equivalent(T.reading(), w.letters, N2)]
        assert others == []


def test_Q_is_invariant_under_operators():
    for w in all_words(N2, 4):
        Q = qr_Q(w)
        for r in N2.roots:
            for x in "ef":
                v = apply(x, r, w)
                if v is not None:
                    assert qr_Q(v) == Q


def test_words_split_by_recording_tableau():
    classes = defaultdict(list)
    for w in all_words(N2, 3):
        classes[qr_Q(w)].append(w.letters)
    for Q, ws in classes.items():
        comps = decompose(ws, N2)
        assert len(comps) == 1
        assert len(ws) == len(enumerate_tableaux("qr", Q.shape, N2))
    total = sum(len(standard_ribbon_tableaux(a)) for a in compositions_up_to(3) if enumerate_tableaux("qr", a, N2))
    assert total == len(classes)


def test_bold_P_example():
    w = Word.parse(N3, EXAMPLE)
    B = bold_P(w)
    assert validate(B)[0]
    assert equivalent(w, B.word())


def test_column_insert_even_letters_share_rows():
    A = al.mn(2, 1)
    T = column_insert("-1", column_insert("-1", None, A))
    assert T.display_rows() == [["-1", "-1"]]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=6), st.sampled_from(["mn:2,1", "mn:1,2", "half:3/2"]))
def test_bold_P_equivalence(letters, spec):
    A = al.parse_alphabet(spec)
    w = Word(A, tuple(letters))
    B = bold_P(w)
    assert validate(B)[0]
    assert equivalent(w, B.word())


def test_biword_order_example():
    A = al.half_trunc(1)
    M = SuperMatrix.from_dict(A, {("1", "1/2"): 1, ("1/2", "1"): 1})
    (i, j), _ = biwords(M)
    assert [A.displays[x] for x in i] == ["1", "1/2"]
    assert [A.displays[x] for x in j] == ["1/2", "1"]


def test_rsk_injective_small():
    A = al.half_trunc(1)
    for k in (1, 2, 3):
        mats = matrices_with_sum(A, k)
        images = {(P1, P2) for P1, P2 in map(rsk, mats)}
        assert len(images) == len(mats)
        for M in mats:
            P1, P2 = rsk(M)
            assert P1.shape == P2.shape


@pytest.mark.parametrize("S, S2", [({1}, {1}), ({1}, {2})])
def test_gessel_examples(S, S2):
    assert gessel_count(S, S2, 3, al.half_trunc(2)) == (1, 1)


def test_gessel_needs_room():
    with pytest.raises(al.AlphabetError):
        gessel_count({2}, {2}, 4, al.half_trunc(1))  # (2,2) has 4 corners


def test_bicrystal_commutation_and_naturality():
    A = al.half_trunc(1)
    for k in (1, 2, 3):
        for M in matrices_with_sum(A, k):
            P1, P2 = rsk(M)
            for r, s in product(range(len(A.roots)), repeat=2):
                for x, y in product("ef", repeat=2):
                    left = matrix_apply(x, r, M)
                    left = None if left is None else matrix_apply(y, s, left, star=True)
                    right = matrix_apply(y, s, M, star=True)
                    right = None if right is None else matrix_apply(x, r, right)
                    assert left == right
            for r in range(len(A.roots)):
                for x in "ef":
                    N = matrix_apply(x, r, M)
                    if N is not None:
                        assert rsk(N)[1] == P2
                    N = matrix_apply(x, r, M, star=True)
                    if N is not None:
                        assert rsk(N)[0] == P1


def test_matrix_validation():
    A = al.half_trunc(1)
    with pytest.raises(MatrixError):
        SuperMatrix.from_dict(A, {("1/2", "1"): 2})
    with pytest.raises(MatrixError):
        SuperMatrix.from_dict(A, {("1", "1"): -1})
    with pytest.raises(MatrixError):
        SuperMatrix.from_json({"entries": [["1", "1", 1]]})
    with pytest.raises(MatrixError):
        SuperMatrix.from_json({"alphabet": "half:1", "entries": [["7", "1", 1]]})


def test_matrix_json_round_trip():
    A = al.half_trunc(1)
    for M in matrices_with_sum(A, 2):
        assert SuperMatrix.from_json(M.to_json()) == M
