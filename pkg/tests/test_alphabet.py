from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from supercrystal import alphabet as al
from supercrystal.alphabet import AlphabetError, Weight


def test_letter_display_round_trip():
    for text in ["-3", "0", "1", "1/2", "7/2"]:
        assert al.format_letter_value(al.parse_letter_value(text)) == text
    assert al.parse_letter_value("3/2") == Fraction(3, 2)


@pytest.mark.parametrize("bad", ["1/3", "x", "2/4", "", "-5/2"])
def test_bad_letters(bad):
    with pytest.raises(AlphabetError):
        al.parse_letter_value(bad)


def test_mn_order_and_parity():
    A = al.mn(2, 1)
    assert A.displays == ("-2", "-1", "1")
    assert A.parities == (0, 0, 1)
    r0, r1 = A.roots
    assert (r0.isotropic, r0.ell) == (False, 1)
    assert r1.isotropic


def test_omega_order():
    A = al.omega(4, 2)
    assert A.displays == ("-4", "-3", "1", "-2", "2", "-1")
    assert [r.isotropic for r in A.roots] == [False, True, True, True, True]


def test_mixed_trunc_roots():
    A = al.mixed_trunc(1, 1)
    assert A.displays == ("-1", "1/2", "1")
    assert [r.label for r in A.roots] == ["a[-1]", "a[1/2]"]
    assert all(r.isotropic for r in A.roots)


def test_half_trunc_ells():
    A = al.half_trunc(2)
    assert len(A.roots) == 3
    assert all(r.isotropic for r in A.roots)
    assert [r.ell for r in A.roots] == [-1, 1, -1]


@pytest.mark.parametrize(
    "spec, displays",
    [
        ("mn:2,1", ("-2", "-1", "1")),
        ("half:1", ("1/2", "1")),
        ("mixed:1,3/2", ("-1", "1/2", "1", "3/2")),
        ("perm:mn:2,1:omega", ("-2", "1", "-1")),
    ],
)
def test_parse_alphabet(spec, displays):
    assert al.parse_alphabet(spec).displays == displays


@pytest.mark.parametrize("spec", ["", "mn:1", "half:x", "perm:half:1:omega", "zz:1"])
def test_parse_alphabet_rejects(spec):
    with pytest.raises(AlphabetError):
        al.parse_alphabet(spec)


def test_pairing_examples():
    A = al.half_trunc(2)
    a1 = A.roots[A.index("1")]
    assert al.pairing(Weight.epsilon("1"), a1) == 1
    assert al.pairing(Weight.epsilon("3/2"), a1) == 1


def test_weight_order_examples():
    A = al.half_trunc(2)
    assert al.weight_order_geq(Weight.epsilon("1/2"), Weight.epsilon("1"), A)
    assert not al.weight_order_geq(Weight.epsilon("1"), Weight.epsilon("1/2"), A)


vectors = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


@given(vectors, vectors, vectors)
def test_weight_order_is_a_partial_order(a, b, c):
    geq = al.vector_geq
    assert geq(a, a)
    if geq(a, b) and geq(b, a):
        assert a == b
    if geq(a, b) and geq(b, c):
        assert geq(a, c)


@given(vectors, st.integers(0, 2))
def test_adding_a_root_raises(vec, i):
    up = list(vec)
    up[i] += 1
    up[i + 1] -= 1
    assert al.vector_geq(up, vec)
    assert not al.vector_geq(vec, up)


def test_permuted_identity_and_involution():
    A = al.mn(2, 2)
    assert al.permuted(A, list(A.displays)).displays == A.displays
    sigma = ["1", "-1", "2", "-2"]
    B = al.permuted(A, sigma)
    assert al.permuted(B, list(A.displays)).displays == A.displays
    assert sorted(B.displays) == sorted(A.displays)
    with pytest.raises(AlphabetError):
        al.permuted(A, ["1", "-1", "2"])


def test_word_parsing_rejects_foreign_letters():
    A = al.half_trunc(1)
    assert A.parse_word("1 1/2") == (1, 0)
    with pytest.raises(AlphabetError):
        A.parse_word("3/2")
