from invtab.perm import all_permutations, identity, length, longest, parse_permutation
from invtab.poly import SparsePolynomial
from invtab.schubert import (
    extreme_terms, lex_max_monomial, lex_min_monomial, monomial_order_key,
    schubert_dd, schubert_from_pipedreams, schubert_from_tableaux,
    stanley_truncated, stanley_via_schubert,
)

EXAMPLE = SparsePolynomial(6, {(3, 2, 0, 1, 1, 0): 1, (3, 2, 1, 0, 1, 0): 1, (3, 2, 1, 1, 0, 0): 1})


def test_base_cases():
    assert schubert_dd(longest(3)) == SparsePolynomial.monomial((2, 1, 0))
    assert schubert_dd(identity(4)) == SparsePolynomial.one(4)
    assert str(schubert_dd((1, 3, 2))) == "x1 + x2"


def test_example_all_routes():
    w = parse_permutation("431562")
    assert schubert_dd(w) == EXAMPLE
    assert schubert_from_tableaux(w) == EXAMPLE
    assert schubert_from_pipedreams(w) == EXAMPLE


def test_routes_agree_s5():
    for w in all_permutations(5):
        f = schubert_dd(w)
        assert f == schubert_dd(w, "last")
        assert f == schubert_from_tableaux(w) == schubert_from_pipedreams(w)


def test_extremes():
    w = parse_permutation("431562")
    assert lex_max_monomial(w) == (3, 2, 0, 1, 1, 0)
    assert lex_min_monomial(w) == (3, 2, 1, 1, 0, 0)
    assert lex_max_monomial(identity(3)) == lex_min_monomial(identity(3)) == (0, 0, 0)
    for w in all_permutations(5):
        assert extreme_terms(schubert_dd(w)) == ((lex_max_monomial(w), 1), (lex_min_monomial(w), 1))


def test_order_reads_last_variable_first():
    # with x1 read first, x1 would outrank the code monomial x2 of S_132
    f = schubert_dd((1, 3, 2))
    assert max(f.terms) == (1, 0, 0)
    assert max(f.terms, key=monomial_order_key) == (0, 1, 0) == lex_max_monomial((1, 3, 2))


def test_stanley_examples():
    assert stanley_truncated((2, 1), 2) == SparsePolynomial(2, {(1, 0): 1, (0, 1): 1})
    assert stanley_truncated((3, 2, 1), 2) == SparsePolynomial(2, {(2, 1): 1, (1, 2): 1})
    for N in (3, 4):
        assert stanley_via_schubert((3, 2, 1), 2, N) == stanley_truncated((3, 2, 1), 2)


def test_stanley_symmetric_and_stable():
    for w in all_permutations(4):
        for m in (1, 2, 3):
            F = stanley_truncated(w, m)
            assert F.is_symmetric()
            low = max(length(w), m - 1)
            for N in (low, low + 1, low + 2):
                assert stanley_via_schubert(w, m, N) == F


def test_short_shift_is_too_short():
    # 1 x 2134 = 13245 has Schubert polynomial x1 + x2, so one leading fixed point
    # is too few to see x3
    F = stanley_truncated((2, 1, 3, 4), 3)
    assert F == SparsePolynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert schubert_dd((1, 3, 2, 4, 5)) == SparsePolynomial(5, {(1, 0, 0, 0, 0): 1, (0, 1, 0, 0, 0): 1})
    assert stanley_via_schubert((2, 1, 3, 4), 3, 1) != F
