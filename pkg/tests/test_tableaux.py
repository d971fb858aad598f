import json

import pytest
from hypothesis import given, settings, strategies as st

from supercrystal import alphabet as al
from supercrystal.combinat import comp_from_subset, compositions_up_to, partitions_up_to, subset_from_comp
from supercrystal.crystal import decompose, equivalent, highest_element
from supercrystal.tableaux import (
    KiteShape,
    ShapeError,
    Tableau,
    corners,
    enumerate_tableaux,
    enumerate_words,
    from_reading,
    highest_tableau,
    hook_admissible,
    kite_from_weight,
    composition_from_weight,
    partition_from_weight,
    reading_word,
    standard_ribbon_tableaux,
    standard_tableaux,
    tableau_apply,
    validate,
)

N2 = al.half_trunc(2)
ALPHA = (1, 1, 3, 4, 1, 2)


def test_subset_bijection_example():
    assert subset_from_comp(ALPHA) == {1, 2, 5, 9, 10}
    assert comp_from_subset({1, 2, 5, 9, 10}, 12) == ALPHA


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_subset_bijection_round_trip(parts):
    alpha = tuple(parts)
    assert comp_from_subset(subset_from_comp(alpha), sum(alpha)) == alpha


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_zigzag_corners(n):
    assert corners((2,) * (n - 1) + (1,)) == 2 * n - 1


def test_corners_example():
    assert corners(ALPHA) == 6
    assert corners((1,)) == 1
    assert corners((2,)) == 2


def test_highest_quasi_ribbon_example():
    A = al.half_trunc(3)
    H = highest_tableau("qr", ALPHA, A)
    flat = [x for row in H.display_rows() for x in row]
    assert flat == ["1/2", "1/2", "1/2", "1", "1", "3/2", "2", "2", "2", "5/2", "5/2", "3"]
    assert validate(H) == (True, None)


def test_highest_ssyt_weight():
    A = al.mn(2, 1)
    H = highest_tableau("ssyt", (2, 1), A)
    assert H.weight() == (2, 1, 0)


def test_readings():
    assert str(highest_tableau("qr", (2,), al.half_trunc(1)).word()) == "1 1/2"
    A = al.half_trunc(3)
    P = Tableau.from_rows("qr", (1, 2, 3), A, [["1/2"], ["1", "1"], ["2", "2", "5/2"]])
    assert str(P.word()) == "1/2 1 1 5/2 2 2"


def test_enumeration_examples():
    A = al.half_trunc(1)
    assert [T.display_rows() for T in enumerate_tableaux("qr", (2,), A)] == [[["1/2", "1"]], [["1", "1"]]]
    assert len(enumerate_tableaux("qr", (2, 1), N2)) == 8
    assert enumerate_tableaux("ssyt", (2, 2), al.mn(1, 1)) == []
    assert not hook_admissible((2, 2), 1, 1)


def test_fig2_arrows_from_highest():
    H = highest_tableau("qr", (2, 1), N2)
    for r in N2.roots:
        assert tableau_apply("f", r, H) is not None
        assert tableau_apply("e", r, H) is None


@pytest.mark.parametrize("alpha", compositions_up_to(4))
def test_enumerated_quasi_ribbons_are_valid_and_closed(alpha):
    tabs = enumerate_tableaux("qr", alpha, N2)
    assert (len(tabs) > 0) == (corners(alpha) <= 4)
    words = {T.reading() for T in tabs}
    for T in tabs:
        assert validate(T)[0]
        assert from_reading("qr", alpha, N2, T.reading()) == T
        for r in N2.roots:
            for x in "ef":
                U = tableau_apply(x, r, T)
                assert U is None or U.reading() in words


def test_validate_reports_violation():
    T = Tableau.from_rows("qr", (2,), al.half_trunc(1), [["1/2", "1/2"]])
    ok, why = validate(T)
    assert not ok and why


def test_shape_errors():
    with pytest.raises(ShapeError):
        KiteShape((1,), (2,), 2)  # tail needs m body rows
    with pytest.raises(ShapeError):
        KiteShape((1, 1, 1), (), 2)
    with pytest.raises(ShapeError):
        highest_tableau("ssyt", (2, 2), al.mn(1, 1))
    with pytest.raises(ShapeError):
        enumerate_tableaux("ssyt", (1, 2), al.mn(2, 1))


@pytest.mark.parametrize("lam", partitions_up_to(4))
def test_column_reading_gives_the_same_crystal(lam):
    A = al.mn(2, 1)
    if not hook_admissible(lam, 2, 1):
        return
    tabs = enumerate_tableaux("ssyt", lam, A)
    rows = {T.reading(): T for T in tabs}
    cols = {reading_word(T, "column").letters for T in tabs}
    # the column readings form a closed set with the same component structure
    comps = decompose(cols, A)
    assert len(comps) == len(decompose(rows, A)) == 1
    for T in tabs[:6]:
        assert equivalent(T.word(), reading_word(T, "column"))


def test_kite_examples():
    A = al.mixed_trunc(1, 2)
    K = KiteShape((2,), (1, 2), 1)
    H = highest_tableau("kite", K, A)
    assert validate(H)[0]
    assert kite_from_weight(H.weight(), A, 1) == K
    tabs = enumerate_tableaux("kite", K, A)
    comps = decompose([T.reading() for T in tabs], A)
    assert len(comps) == 1 and highest_element(comps[0]) == H.reading()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["qr", "ssyt"]), st.lists(st.integers(1, 3), min_size=1, max_size=3), st.data())
def test_json_round_trip(kind, parts, data):
    shape = tuple(sorted(parts, reverse=True)) if kind == "ssyt" else tuple(parts)
    A = al.mixed_trunc(1, 2) if kind == "ssyt" else N2
    tabs = enumerate_tableaux(kind, shape, A)
    if not tabs:
        return
    T = data.draw(st.sampled_from(tabs))
    assert Tableau.from_json(T.dumps()) == T
    assert json.loads(T.dumps()) == T.to_json()


def test_kite_json_round_trip():
    A = al.mixed_trunc(1, 2)
    for T in enumerate_tableaux("kite", KiteShape((1,), (2,), 1), A):
        assert Tableau.from_json(json.loads(T.dumps())) == T


def test_weight_inverses():
    for alpha in compositions_up_to(4):
        H = highest_tableau("qr", alpha, al.half_trunc(3))
        assert composition_from_weight(H.weight(), H.alphabet) == alpha
    A = al.mn(2, 2)
    for lam in partitions_up_to(5):
        if hook_admissible(lam, 2, 2):
            assert partition_from_weight(highest_tableau("ssyt", lam, A).weight(), 2, 2) == lam


def test_standard_tableaux_descents():
    got = sorted(T.composition() for T in standard_tableaux((2, 1)))
    assert got == [(1, 2), (2, 1)]


def test_standard_ribbon_membership():
    Qs = [T.rows() for T in standard_ribbon_tableaux((1, 2, 3))]
    assert [[2], [3, 1], [6, 5, 4]] in Qs
