import json
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from lltschur.combinat import (
    DescentSet,
    Partition,
    inversion_set,
    partitions_in_box,
    staircase,
    sub_partitions,
)
from lltschur.laurent import LaurentPoly, q
from lltschur.llt import (
    BoundExceeded,
    Component,
    InversionMatrix,
    L,
    PIECES,
    ShapeTuple,
    TwoDiagTuple,
    G_M,
    G_M_bruteforce,
    G_unicellular,
    G_unicellular_schur,
    check_standard,
    content_reading_word,
    domino_tuple,
    f_xy,
    inv_M,
    inv_d,
    llt,
    llt_bruteforce,
    llt_schur,
    llt_specialized,
    matrix_from_partition,
    profile,
    split_cells,
    standard_fillings,
    swap_psi,
    tuple_from_partition,
    two_diag_tuples,
)
from lltschur.symfunc import fund_to_schur, multiply, schur, skew_schur, specialize_variables

s = lambda *p: schur(list(p))
two_zero_cells = ShapeTuple.single_cells([0, 0])
tuple_words = st.text(alphabet="HV01", min_size=1, max_size=4)


# -- shapes ---------------------------------------------------------------------

def test_component_validation_and_contents():
    with pytest.raises(ValueError):
        Component(((0, 0), (1, 1)))  # not a skew diagram
    v = Component.vertical_domino()
    assert v.kind() == "V" and sorted(v.contents()) == [0, 1]
    assert Component.horizontal_domino().kind() == "H"
    assert Component.skew([3, 1], [1], 2).contents() == (3, 4, 1)
    assert Component.skew([3, 1], [2]).skew_shape() == (Partition([3, 1]), Partition([2]))


def test_shape_json_round_trip(tmp_path):
    st_ = ShapeTuple((Component.skew([2, 1], [1], 1), PIECES["V"], PIECES["0"]))
    data = json.loads(json.dumps(st_.to_json()))
    assert data["components"][0]["kind"] == "cells"
    assert ShapeTuple.from_json(data) == st_


def test_two_diag_tuple_statistics():
    t = TwoDiagTuple.parse("hv1")
    assert str(t) == "HV1"
    assert (t.n, t.m, t.z) == (5, 3, 1)
    assert t.conjugate() == TwoDiagTuple.parse("0VH")
    with pytest.raises(ValueError):
        TwoDiagTuple.parse("HX")


# -- inversion statistic -------------------------------------------------------

def test_inv_d_examples():
    assert inv_d(two_zero_cells, ((2,), (1,))) == 1
    assert inv_d(two_zero_cells, ((1,), (2,))) == 0
    one = ShapeTuple((Component.skew([2, 1]),))
    for T in standard_fillings(one):
        assert inv_d(one, T) == 0
    with pytest.raises(ValueError):
        check_standard(ShapeTuple((PIECES["H"],)), ((2, 1),))


def test_llt_examples():
    assert llt_schur(ShapeTuple((PIECES["H"],))) == s(2)
    assert llt_schur(ShapeTuple((PIECES["V"],))) == s(1, 1)
    assert llt_schur(two_zero_cells) == s(2) + s(1, 1) * q


def test_llt_specialized_examples():
    single = ShapeTuple.single_cells([0])
    assert llt_specialized(single, 2) == {(1, 0): LaurentPoly(1), (0, 1): LaurentPoly(1)}
    assert llt_specialized(ShapeTuple((PIECES["V"],)), 2) == {(1, 1): LaurentPoly(1)}
    got = llt_specialized(two_zero_cells, 2)
    assert got == {(2, 0): LaurentPoly(1), (1, 1): 1 + q, (0, 2): LaurentPoly(1)}


@given(tuple_words)
@settings(max_examples=60, deadline=None)
def test_kernel_matches_bruteforce(word):
    t = TwoDiagTuple.parse(word).shape_tuple()
    if t.n <= 7:
        assert llt(t) == llt_bruteforce(t)


@given(tuple_words)
@settings(max_examples=40, deadline=None)
def test_specialization_oracle(word):
    t = TwoDiagTuple.parse(word).shape_tuple()
    if t.n <= 5:
        want = {e: c for e, c in specialize_variables(llt_schur(t), t.n).items() if c}
        assert llt_specialized(t, t.n) == want


def test_general_skew_shapes():
    # a two-component tuple with non-domino shapes, against brute force and q = 1
    t = ShapeTuple((Component.skew([2, 1], [], 0), Component.skew([2, 2], [1], 1)))
    assert llt(t) == llt_bruteforce(t)
    prod = multiply(skew_schur([2, 1]), skew_schur([2, 2], [1]))
    assert llt_schur(t).specialize(1) == prod


def test_every_small_tuple_is_symmetric_and_positive():
    for t in two_diag_tuples(4):
        f = fund_to_schur(llt(t))  # raises if not symmetric
        assert all(c.is_nonnegative() for _, c in f.items())


def test_conjugating_a_tuple_keeps_llt():
    for t in two_diag_tuples(4):
        assert llt(t) == llt(t.conjugate())


def test_bound():
    with pytest.raises(BoundExceeded):
        llt(ShapeTuple.single_cells([0] * 5), max_n=4)


def test_reading_word():
    t = ShapeTuple.single_cells([0, 0])
    assert content_reading_word(t, ((2,), (1,))) == (2, 1)


# -- profiles and unicellular polynomials --------------------------------------

def test_profile_examples():
    assert profile(ShapeTuple.single_cells([0, 0])).partition == ()
    assert profile(ShapeTuple.single_cells([0, 1])).partition == (1,)
    assert profile(ShapeTuple.single_cells([1, 0])).partition == ()


def test_profile_invariants():
    for n in range(1, 7):
        for lam in sub_partitions(staircase(n - 1)):
            prof = profile(tuple_from_partition(n, lam))
            assert prof.partition == lam
            assert all(0 <= prof.f[i] <= i for i in range(n))
            assert list(prof.f) == sorted(prof.f)


def test_tuple_from_partition_examples():
    assert [c.contents() for c in tuple_from_partition(2, []).components] == [(0,), (0,)]
    assert [c.contents() for c in tuple_from_partition(2, [1]).components] == [(0,), (1,)]
    # partitions inside a rectangle only need contents 0 and 1
    for n in range(2, 7):
        for m in range(n + 1):
            for lam in partitions_in_box(m, n - m):
                contents = {c.contents()[0] for c in tuple_from_partition(n, lam).components}
                assert contents <= {0, 1}
    with pytest.raises(ValueError):
        tuple_from_partition(3, [3])


def test_inv_M_examples():
    ones = InversionMatrix.all_ones(3)
    assert inv_M((1, 2, 3), ones) == 0
    assert inv_M((3, 2, 1), ones) == 3
    assert inv_M((2, 1, 3), InversionMatrix(3, {(1, 2): 1})) == 1
    with pytest.raises(ValueError):
        InversionMatrix(4, {(1, 2): 1, (1, 4): 1, (2, 3): 0, (1, 3): 1, (2, 4): 1, (3, 4): 1})


def test_G_M_matches_bruteforce():
    for n in range(1, 6):
        for lam in sub_partitions(staircase(n - 1)):
            M = matrix_from_partition(n, lam)
            assert G_M(M) == G_M_bruteforce(M)


def test_G_unicellular_examples():
    assert G_unicellular_schur(2, []) == s(2) + s(1, 1) * q
    assert G_unicellular_schur(2, [1]) == s(2) + s(1, 1)
    assert G_unicellular(3, [1]) == llt(tuple_from_partition(3, [1]))
    with pytest.raises(ValueError):
        G_unicellular(3, [2, 2])


def test_G_unicellular_agrees_with_tuples():
    for n in range(1, 8):
        for lam in sub_partitions(staircase(n - 1)):
            assert G_unicellular(n, lam) == llt(tuple_from_partition(n, lam)), (n, lam)


def test_L_examples_and_reversal_relation():
    assert L(2, []) == s(1, 1) + s(2) * q
    for n in range(1, 7):
        for lam in sub_partitions(staircase(n - 1)):
            p = n * (n - 1) // 2 - lam.size
            assert L(n, lam).subs_qinv().shift(p) == G_unicellular_schur(n, lam)


def test_L_is_invariant_under_conjugating_lambda():
    for n in range(1, 8):
        for lam in sub_partitions(staircase(n - 1)):
            assert L(n, lam) == L(n, lam.conjugate())


# -- dominoes, splitting, swapping -----------------------------------------------

def test_domino_tuple_examples():
    assert domino_tuple([0]).components == (PIECES["H"],)
    t = domino_tuple([1, 0])
    assert (t.d, t.n) == (2, 4)
    assert domino_tuple([1], odd=True).components == (PIECES["V"], PIECES["0"])


def test_split_cells():
    for word in ("01", "10", "0011", "1010", "0110", "1001"):
        t = TwoDiagTuple.parse(word).shape_tuple()
        for i in range(t.d - 1):
            try:
                mu0, mu1, eps = split_cells(t, i)
            except ValueError:
                continue
            assert eps == t.components[i].contents()[0]
            assert llt(t) == llt(mu0) + llt(mu1).shift(eps)
    assert split_cells("01", 0)[2] == 0
    assert split_cells("10", 0)[2] == 1
    with pytest.raises(ValueError):
        split_cells("00", 0)


def test_psi_two_inversion_case():
    # vertical [a at content 0, b at content 1], horizontal [c, d] with a > d > c > b
    t = TwoDiagTuple.parse("VH").shape_tuple()
    a, b, c, d = 4, 1, 2, 3
    V, H = t.components
    T = (tuple({0: a, 1: b}[V.content(x)] for x in V.cells), (c, d))
    U = swap_psi(t, 0, T)
    assert inv_d(t, T) == inv_d(t.swap(0), U) == 2
    H2, V2 = t.swap(0).components
    assert {H2.content(x): v for x, v in zip(H2.cells, U[0])} == {0: c, 1: d}
    assert {V2.content(x): v for x, v in zip(V2.cells, U[1])} == {0: a, 1: b}


@pytest.mark.parametrize("word", ["VH", "HV", "VH0", "1VH", "HV1", "0HV"])
def test_psi_is_inv_preserving_bijection(word):
    t = TwoDiagTuple.parse(word).shape_tuple()
    i = word.index("VH") if "VH" in word else word.index("HV")
    target = t.swap(i)
    images = set()
    for T in standard_fillings(t):
        U = swap_psi(t, i, T)
        check_standard(target, U)
        assert inv_d(target, U) == inv_d(t, T)
        assert all(U[k] == T[k] for k in range(t.d) if k not in (i, i + 1))
        assert swap_psi(target, i, U) == T
        images.add(U)
    assert len(images) == len(standard_fillings(target))


def test_swapping_dominoes_keeps_llt():
    for t in two_diag_tuples(4):
        w = str(t)
        for i in range(len(w) - 1):
            if {w[i], w[i + 1]} == {"H", "V"}:
                assert llt(t) == llt(t.shape_tuple().swap(i))


def test_f_xy_examples_and_bijectivity():
    assert f_xy((2, 3, 1), 1, 3) == (2, 3, 1)
    with pytest.raises(ValueError):
        f_xy((1, 2, 3), 2, 3)
    for n in range(3, 7):
        perms = list(permutations(range(1, n + 1)))
        for x in range(1, n - 1):
            for y in range(x + 2, n + 1):
                images = {f_xy(w, x, y) for w in perms}
                assert len(images) == len(perms)
                for w in perms:
                    v = f_xy(w, x, y)
                    # A_{x,y} goes to A_{x+1,y}, complements to complements
                    assert ((x, y) in inversion_set(w)) == ((x + 1, y) in inversion_set(v))


def test_f_xy_preserves_inversions_of_middle_partition():
    from lltschur.theorems import linear_relation_cases, linear_relation_partitions

    for n in range(3, 7):
        for lam, i in linear_relation_cases(n):
            _, mu1, _ = linear_relation_partitions(n, lam, i)
            M = matrix_from_partition(n, mu1)
            x, y = mu1.part(i), n + 1 - i
            if not x + 1 < y:
                continue
            for w in permutations(range(1, n + 1)):
                v = f_xy(w, x, y)
                assert inv_M(v, M) == inv_M(w, M)
                assert DescentSet(n, _ides(v)) == DescentSet(n, _ides(w))


def _ides(w):
    pos = {v: k for k, v in enumerate(w)}
    return {i for i in range(1, len(w)) if pos[i + 1] < pos[i]}
