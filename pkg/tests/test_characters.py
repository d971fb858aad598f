import random
import warnings
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from supercrystal import alphabet as al
from supercrystal.combinat import compositions, partitions, partitions_up_to
from supercrystal.characters import (
    BoundaryWarning,
    character,
    NotInSpan,
    Poly,
    cancel_substitute,
    expand_in_basis,
    factorization_check,
    factorization_parts,
    hook_schur,
    kite_character,
    qsym_membership,
    t_independent,
    tableau_character,
)
from supercrystal.crystal import Word, explore_component
from supercrystal.insertion import qr_P
from supercrystal.tableaux import KiteShape, corners

N1 = al.half_trunc(1)
N2 = al.half_trunc(2)


def P(text):
    return Poly.parse(text)


def qr_char(alpha, A=N2):
    return tableau_character("qr", alpha, A)


def test_single_row_character():
    assert qr_char((2,), N1) == P("z[1/2]*z[1] + z[1]^2")


def test_hook_schur_examples():
    assert hook_schur((2,), 1, 1) == P("z[-1]^2 + z[-1]*z[1]")
    assert hook_schur((2, 2), 1, 1) == 0


def test_factorization_examples():
    lhs, mid, rhs = factorization_parts((), (2,), 0, 1)
    assert lhs == mid == rhs == P("z[1]*z[1/2] + z[1]^2")
    assert factorization_check((1,), (1,), 1, 1)
    with pytest.raises(ValueError):
        factorization_parts((), (2, 1), 0, 1)


@pytest.mark.parametrize("p, q", [(0, 1), (0, 2), (1, 1), (1, 2)])
def test_factorization_small(p, q):
    bodies = [()] if p == 0 else [(1,), (2,), (3,)]
    for lam in bodies:
        for size in range(1, 4):
            for alpha in compositions(size):
                if corners(alpha) in (2 * q - 1, 2 * q):
                    assert factorization_check(lam, alpha, p, q), (lam, alpha)


def test_cancellation_is_degenerate_for_three_corners():
    assert cancel_substitute(qr_char((2, 1)), "1", "3/2") == {}


@pytest.mark.parametrize("alpha", [(1,), (2,), (1, 1), (1, 2), (2, 2), (3, 1)])
def test_cancellation_drops_the_pair(alpha):
    # t-free part equals the character over the remaining letters
    for i in range(len(N2) - 1):
        r, s = N2.displays[i], N2.displays[i + 1]
        parts = cancel_substitute(qr_char(alpha), r, s)
        assert set(parts) <= {0}
        rest = al.custom([(x, N2.parity(j)) for j, x in enumerate(N2.displays) if j not in (i, i + 1)])
        assert parts.get(0, Poly()) == qr_char(alpha, rest)


def test_membership():
    for size in range(1, 4):
        for alpha in compositions(size):
            assert qsym_membership(qr_char(alpha), 0, 2) == (True, None)
    ok, why = qsym_membership(P("z[1/2]"), 0, 2)
    assert not ok and "1/2" in why
    assert qsym_membership(Poly(), 0, 2)[0]
    assert not qsym_membership(P("z[-2]"), 2, 1)[0]  # not symmetric in the negatives


def test_kite_characters_are_members():
    for K in [KiteShape((1,), (), 1), KiteShape((2,), (1,), 1), KiteShape((1,), (2,), 1), KiteShape((1, 1), (1,), 2)]:
        assert qsym_membership(kite_character(K, 2), K.m, 2)[0]


def test_expansion_examples():
    box = qr_char((1,))
    assert expand_in_basis(box * box, 0, 2) == {KiteShape((), (2,), 0): 1, KiteShape((), (1, 1), 0): 1}
    assert expand_in_basis(qr_char((1, 2)), 0, 2) == {KiteShape((), (1, 2), 0): 1}
    with pytest.raises(NotInSpan):
        expand_in_basis(P("z[1/2]"), 0, 2)
    with pytest.raises(NotInSpan):
        expand_in_basis(P("z[7]"), 0, 2)


def test_boundary_warning():
    with pytest.warns(BoundaryWarning):
        expand_in_basis(qr_char((2,), N1), 0, 1)


def test_products_reexpand():
    rng = random.Random(11)
    shapes = [a for s in (1, 2) for a in compositions(s)]
    for _ in range(6):
        a, b = rng.choice(shapes), rng.choice(shapes)
        f = qr_char(a) * qr_char(b)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundaryWarning)
            coeffs = expand_in_basis(f, 0, 2)
        back = sum((kite_character(K, 2) * c for K, c in coeffs.items()), Poly())
        assert back == f
        assert all(c > 0 for c in coeffs.values())


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1)])
def test_hook_schur_lies_in_the_kite_ring(m, n):
    # read [m|n] in its reordered form, which is N(m-n) cut at n
    W = al.omega(m, n)
    ren = al.relabel_map(W, al.mixed_trunc(m - n, n))
    for lam in partitions_up_to(4):
        f = hook_schur(lam, m, n, W).rename(ren)
        if not f:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundaryWarning)
            coeffs = expand_in_basis(f, m - n, n)
        assert all(isinstance(c, int) for c in coeffs.values())
        assert sum((kite_character(K, n) * c for K, c in coeffs.items()), Poly()) == f


# super symmetric subring over N cut at 2: even variables z1, z2; odd z1/2, z3/2


def _symmetric(f):
    return f.swap("1", "2") == f and f.swap("1/2", "3/2") == f


def _basis(d):
    quasi = [c for c in (qr_char(a) for a in compositions(d)) if c]
    schur = [c for c in (tableau_character("ssyt", lam, N2) for lam in partitions(d)) if c]
    return quasi, schur


def _matrix(polys, monos):
    return sympy.Matrix([[p.terms.get(mo, 0) for p in polys] for mo in monos])


def _monos(polys):
    return sorted({mo for p in polys for mo in p.terms})


def _in_span(f, polys):
    monos = _monos(polys + [f])
    M = _matrix(polys, monos)
    return M.rank() == M.row_join(_matrix([f], monos)).rank()


@pytest.mark.parametrize("d", [1, 2, 3])
def test_symmetric_part_is_spanned_by_schur_characters(d):
    quasi, schur = _basis(d)
    assert all(_symmetric(s) for s in schur)
    assert all(_in_span(s, quasi) for s in schur)
    # solutions c of sum c_a ch B(a) fixed by both swaps
    monos = _monos(quasi)
    M = _matrix(quasi, monos)
    swapped = _matrix([q.swap("1", "2") for q in quasi], monos)
    swapped2 = _matrix([q.swap("1/2", "3/2") for q in quasi], monos)
    null = (M - swapped).col_join(M - swapped2).nullspace()
    sym = M * sympy.Matrix.hstack(*null) if null else sympy.zeros(len(monos), 0)
    assert sym.rank() == _matrix(schur, monos).rank()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.data())
def test_random_sums_symmetric_iff_super_symmetric(d, data):
    quasi, schur = _basis(d)
    pool = quasi + schur
    cs = data.draw(st.lists(st.integers(-2, 2), min_size=len(pool), max_size=len(pool)))
    f = sum((p * c for p, c in zip(pool, cs)), Poly())
    assert _symmetric(f) == _in_span(f, schur)


def test_poly_text_round_trip():
    f = P("3*z[1/2]^2*z[-1] - z[1] + 2")
    assert Poly.parse(str(f)) == f
    assert Poly.from_json(f.to_json()) == f
    assert str(Poly()) == "0"
    with pytest.raises(ValueError):
        Poly.parse("z[1] +")
    with pytest.raises(ValueError):
        Poly.parse("y[1]")


@settings(max_examples=60)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)), st.integers(-5, 5), max_size=5))
def test_poly_round_trip_random(terms):
    f = Poly()
    for (a, b, c), k in terms.items():
        f = f + Poly.monomial({"-1": a, "1/2": b, "2": c}, k)
    assert Poly.parse(str(f)) == f
    assert Poly.from_json(f.to_json()) == f


def test_t_independent_example():
    assert t_independent(qr_char((2,)), "1/2", "1")
    assert not t_independent(P("z[1/2]*z[1]"), "1/2", "1")


def test_character_is_constant_on_classes():
    for letters in product(range(len(N2)), repeat=3):
        comp = explore_component(Word(N2, letters))
        shape = qr_P(Word(N2, letters)).shape
        assert character(comp.elements, N2) == qr_char(shape)
