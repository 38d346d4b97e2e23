import pytest

from invtab.diagram import diagram_of
from invtab.exceptions import InvtabError, NotGrassmannianError
from invtab.grassmann import (
    Tableau, enumerate_reverse_ssyt, enumerate_skew_IT, flagged_to_inverse_grassmannian,
    inverse_grassmannian_to_flagged, inverse_shape, it_to_reverse_ssyt, lambda_of,
    reverse_ssyt_to_it, skew_schubert_G,
)
from invtab.perm import all_permutations, identity, inversions, is_grassmannian, length, parse_permutation
from invtab.poly import SparsePolynomial, flagged_schur, schur, skew_schur
from invtab.schubert import schubert_dd
from invtab.tableau import InversionsTableau, enumerate_IT, is_inversions_tableau

W_EX = parse_permutation("346912578")
T_EX = {(4, 5): 4, (4, 6): 4, (4, 7): 4, (4, 8): 2, (4, 9): 2, (3, 5): 3, (3, 6): 3, (3, 7): 1,
         (2, 5): 2, (2, 6): 2, (1, 5): 1, (1, 6): 1}


def grassmannians(n):
    return [w for w in all_permutations(n) if is_grassmannian(w)]


def test_lambda():
    assert lambda_of(W_EX) == (5, 3, 2, 2)
    assert lambda_of((1, 3, 2, 4), 2) == (1,)
    with pytest.raises(NotGrassmannianError):
        lambda_of(identity(3))
    with pytest.raises(NotGrassmannianError):
        lambda_of((1, 3, 2, 4), 1)
    for w in grassmannians(7):
        assert sum(lambda_of(w)) == length(w)


def test_reverse_ssyt_of_346912578():
    T = InversionsTableau(diagram_of(W_EX), T_EX)
    assert is_inversions_tableau(T.diagram, T_EX)
    R = it_to_reverse_ssyt(T)
    assert R.rows() == [[4, 4, 4, 2, 2], [3, 3, 1], [2, 2], [1, 1]]
    assert R.is_valid()
    assert reverse_ssyt_to_it(R, W_EX, 4) == T
    with pytest.raises(InvtabError):
        reverse_ssyt_to_it(Tableau.build((1,), {(1, 1): 1}, reverse=True), W_EX, 4)


def test_reverse_ssyt_bijection():
    for w in grassmannians(6):
        k = is_grassmannian(w)
        lam = lambda_of(w)
        images = sorted(it_to_reverse_ssyt(T) for T in enumerate_IT(w))
        assert images == enumerate_reverse_ssyt(lam, k)
        assert schubert_dd(w) == schur(lam, k).extend(6)


def test_dominant_grassmannian_single_tableau():
    w = (3, 4, 1, 2)  # code (2, 2, 0, 0)
    (T,) = enumerate_IT(w)
    assert it_to_reverse_ssyt(T).rows() == [[2, 2], [1, 1]]


def test_flagged_tableau_of_24571368():
    w = parse_permutation("24571368")
    assert inverse_shape(w) == ((4, 3, 1), (1, 3, 6))
    T = InversionsTableau(diagram_of(w.inverse()), {
        (6, 7): 5, (3, 4): 3, (3, 5): 3, (3, 7): 2, (1, 2): 1, (1, 4): 1, (1, 5): 1, (1, 7): 1})
    assert T in enumerate_IT(w.inverse())
    F = inverse_grassmannian_to_flagged(T, w)
    assert F.rows() == [[1, 1, 1, 1], [2, 3, 3], [5]]
    assert F.flags == (1, 3, 6) and F.is_valid()
    assert flagged_to_inverse_grassmannian(F, w) == T
    assert F.to_json()["flags"] == [1, 3, 6]


def test_inverse_bijection_counts():
    for w in grassmannians(6):
        lam, flags = inverse_shape(w)
        tabs = enumerate_IT(w.inverse())
        flagged = {inverse_grassmannian_to_flagged(T, w) for T in tabs}
        assert len(flagged) == len(tabs)
        assert all(F.is_valid() for F in flagged)
        expected = flagged_schur(lam, flags).extend(6) if flags else SparsePolynomial.one(6)
        assert schubert_dd(w.inverse()) == expected


def test_identity_has_empty_flagged_tableau():
    # 12...n has no Grassmannian descent, so the caller supplies one
    with pytest.raises(NotGrassmannianError):
        inverse_shape(identity(4))


def test_grassmannian_diagrams_are_young():
    for w in grassmannians(6):
        k = is_grassmannian(w)
        rows = {}
        for i, j in inversions(w):
            assert i <= k < j
            rows.setdefault(k + 1 - i, []).append(j - k)
        lengths = [len(rows.get(r, [])) for r in range(1, k + 1)]
        assert lengths == sorted(lengths, reverse=True)
        for r, cs in rows.items():
            assert sorted(cs) == list(range(1, len(cs) + 1))


def test_skew_filling_257813469_over_125734689():
    w, u = parse_permutation("257813469"), parse_permutation("125734689")
    assert lambda_of(w) == (4, 4, 3, 1) and lambda_of(u) == (3, 2)
    free = {(4, 8): 4, (3, 7): 3, (3, 8): 2, (2, 5): 4, (2, 6): 1, (2, 7): 1, (1, 5): 2}
    assert set(free) == inversions(w) - inversions(u)
    fillings = enumerate_skew_IT(w, u, 4)
    assert free in fillings
    assert skew_schubert_G(w, u, 4) == skew_schur((4, 4, 3, 1), (3, 2), 4)


def test_skew_trivial_cases():
    w = (1, 3, 4, 2)
    assert enumerate_skew_IT(w, w, 3) == [{}]
    assert skew_schubert_G(w, w, 3) == SparsePolynomial.one(3)
    assert skew_schubert_G(w, identity(4), 3) == schubert_dd(w).truncate(3)
    with pytest.raises(InvtabError):
        enumerate_skew_IT((1, 3, 2, 4), (1, 2, 4, 3), 2)
    with pytest.raises(InvtabError):
        enumerate_skew_IT((1, 3, 2, 4), (3, 4, 1, 2), 2)
