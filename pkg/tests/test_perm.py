
import pytest
from hypothesis import given

from invtab.exceptions import DimensionError, InvalidCodeError, NoCoverError
from invtab.perm import (
    Permutation, all_permutations, avoids_pattern, bruhat_leq, column_lehmer_code,
    descents, from_lehmer_code, identity, inversions, is_dominant, is_grassmannian,
    is_vexillary, lehmer_code, lehmer_code_by_values, length, longest,
    mediocre_cover_target, mediocre_covers, mediocre_leq, mediocre_leq_closure,
    one_m_times, parse_permutation, reduced_word_product, swap_positions,
    swap_values, weak_leq,
)

from conftest import perms


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation(())
    w = Permutation((2, 3, 1))
    assert w.value(1) == 2 and w.position(1) == 3
    assert str(w) == "231"
    assert str(Permutation(range(10, 0, -1))) == "10,9,8,7,6,5,4,3,2,1"


def test_parse():
    assert parse_permutation("431562") == (4, 3, 1, 5, 6, 2)
    assert parse_permutation("2,1,3") == (2, 1, 3)
    with pytest.raises(ValueError):
        parse_permutation("12a")
    with pytest.raises(ValueError):
        parse_permutation("1134")


def test_inversions_examples():
    assert inversions(parse_permutation("451623")) == {
        (1, 3), (1, 5), (1, 6), (2, 3), (2, 5), (2, 6), (4, 5), (4, 6)}
    assert inversions(identity(5)) == frozenset()
    assert inversions(parse_permutation("431562")) == {
        (1, 2), (1, 3), (1, 6), (2, 3), (2, 6), (4, 6), (5, 6)}


def test_codes():
    w = parse_permutation("431562")
    assert lehmer_code(w) == (3, 2, 0, 1, 1, 0)
    assert column_lehmer_code(w) == (0, 1, 2, 0, 0, 4)
    assert lehmer_code(longest(4)) == (3, 2, 1, 0)
    assert column_lehmer_code(longest(3)) == (0, 1, 2)
    assert from_lehmer_code((3, 2, 0, 1, 1, 0)) == w
    assert from_lehmer_code((0, 0, 0)) == identity(3)
    assert from_lehmer_code((1, 0)) == (2, 1)
    with pytest.raises(InvalidCodeError):
        from_lehmer_code((2, 0))


def test_partial_word_code():
    # values below each letter not yet used
    assert lehmer_code_by_values((2, 1, 3, 7)) == (1, 0, 0, 3)
    assert lehmer_code_by_values(()) == ()


@given(perms())
def test_code_roundtrip_and_counts(w):
    code = lehmer_code(w)
    assert from_lehmer_code(code) == w
    assert sum(code) == length(w) == len(inversions(w)) == sum(column_lehmer_code(w))
    assert lehmer_code_by_values(w) == code


def test_pattern_classes():
    assert is_dominant(parse_permutation("867435912"))
    assert lehmer_code(parse_permutation("867435912")) == (7, 5, 5, 3, 2, 2, 2, 0, 0)
    assert is_grassmannian(parse_permutation("346912578")) == 4
    assert is_grassmannian(identity(4)) is None
    assert avoids_pattern(identity(5), (1, 3, 2))
    assert not avoids_pattern((1, 3, 2), (1, 3, 2))
    assert not is_vexillary((2, 1, 4, 3))
    assert descents((3, 1, 2)) == [1]


def test_dominant_equals_132_avoiding():
    for w in all_permutations(6):
        assert is_dominant(w) == avoids_pattern(w, (1, 3, 2))


def test_products():
    assert swap_positions((1, 2, 3), 1, 3) == (3, 2, 1)
    assert swap_values((1, 3, 2), 2) == (1, 2, 3)
    assert reduced_word_product((1, 2), 3) == (2, 3, 1)  # s1 s2 acting on values, s2 first
    assert one_m_times((2, 1), 2) == (1, 2, 4, 3)
    assert one_m_times((3, 2, 1), 0) == (3, 2, 1)
    assert one_m_times((3, 2, 1), 1) == (1, 4, 3, 2)


def test_mediocre_examples():
    assert mediocre_covers(parse_permutation("5236417"), parse_permutation("5236714"))
    assert not mediocre_covers(parse_permutation("2354716"), parse_permutation("2374516"))
    for w in all_permutations(4):
        assert mediocre_leq(identity(4), w)


def test_mediocre_cover_target_raises_code():
    for u in all_permutations(5):
        for i in range(1, 6):
            try:
                v = mediocre_cover_target(u, i)
            except NoCoverError:
                assert all(x < u[i - 1] for x in u[i:])
                continue
            assert mediocre_covers(u, v)
            bump = [0] * 5
            bump[i - 1] = 1
            assert lehmer_code(v) == tuple(a + b for a, b in zip(lehmer_code(u), bump))


def test_mediocre_closure_small():
    ps = list(all_permutations(4))
    for u in ps:
        for w in ps:
            assert mediocre_leq_closure(u, w) == mediocre_leq(u, w)


def test_dimension_errors():
    with pytest.raises(DimensionError):
        weak_leq((1, 2), (1, 2, 3))
    with pytest.raises(DimensionError):
        mediocre_leq((1,), (1, 2))


def test_orders_nest():
    # weak order implies mediocre implies strong Bruhat
    ps = list(all_permutations(4))
    for u in ps:
        for w in ps:
            if weak_leq(u, w):
                assert mediocre_leq(u, w)
            if mediocre_leq(u, w):
                assert bruhat_leq(u, w)
