from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from ncskein.core import (
    AlmostNoncrossing,
    Crossing,
    Noncrossing,
    ParseError,
    Permutation,
    SetPartition,
    all_permutations,
    apply_perm,
    classify,
    conjugate,
    conjugator_to_canonical,
    dominance_leq,
    enumerate_partitions,
    integer_partitions,
    pi_lambda,
    reflect,
    rotate,
    valence,
)

from strategies import integer_shapes, noncrossing_partitions, permutations, set_partitions

P = SetPartition.parse


def crosses_brute(pi):
    for a, b, c, d in combinations(range(1, pi.n + 1), 4):
        if pi.same_block(a, c) and pi.same_block(b, d) and not pi.same_block(a, b):
            return True
    return False


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


# parsing and canonical form

def test_parse_canonicalizes_block_and_element_order():
    assert P("7,2/5/4,3,1/6") == SetPartition([[1, 3, 4], [2, 7], [5], [6]])
    assert str(P("7,2/5/4,3,1/6")) == "1,3,4/2,7/5/6"


def test_parse_with_explicit_size():
    assert P("1,2", n=2).n == 2
    with pytest.raises(ParseError):
        P("1,2", n=3)


@pytest.mark.parametrize("text, pos", [("1,2/x", 4), ("1,2/2", 4), ("1,,2", 2), ("1/0", 2)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as err:
        P(text)
    assert err.value.position == pos
    assert "^" in str(err.value)


def test_parse_missing_element():
    with pytest.raises(ParseError, match="missing"):
        P("1,3")


@given(set_partitions())
def test_text_round_trip(pi):
    assert P(str(pi)) == pi


@given(set_partitions())
def test_labels_round_trip(pi):
    assert SetPartition.from_labels([pi.label(i) for i in range(1, pi.n + 1)]) == pi


def test_bad_blocks_rejected():
    with pytest.raises(ValueError):
        SetPartition([[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        SetPartition([[1], []])


# noncrossing test and classification

@given(set_partitions(max_n=9))
def test_noncrossing_matches_four_index_definition(pi):
    assert pi.is_noncrossing == (not crosses_brute(pi))


@pytest.mark.parametrize("text, expected", [
    ("1,3/2,4", AlmostNoncrossing(frozenset({1, 2, 3}))),
    ("1,5/2/3,4,6", AlmostNoncrossing(frozenset({5}))),
    ("1,2,5/3/4,6", AlmostNoncrossing(frozenset({4, 5}))),
    ("1,2/3,4", Noncrossing()),
    ("1,4/2,5/3,6", Crossing()),
])
def test_classify_examples(text, expected):
    assert classify(P(text)) == expected


@given(set_partitions(max_n=8))
def test_almost_noncrossing_definition(pi):
    cls = classify(pi)
    fixers = {i for i in range(1, pi.n) if pi.swap(i, i + 1).is_noncrossing}
    if pi.is_noncrossing:
        assert cls == Noncrossing()
    elif fixers:
        assert cls == AlmostNoncrossing(frozenset(fixers))
    else:
        assert cls == Crossing()


def test_valence():
    pi = P("1,2,5/3/4,6")
    assert [valence(pi, i) for i in range(1, 7)] == [2, 2, 0, 1, 2, 1]


# enumeration

@pytest.mark.parametrize("n", range(0, 10))
def test_noncrossing_count_is_catalan(n):
    assert len(enumerate_partitions(n, noncrossing_only=True)) == comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(0, 8))
def test_all_partitions_count_is_bell(n):
    assert len(enumerate_partitions(n)) == bell(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_narayana_counts(n):
    for k in range(1, n + 1):
        assert len(enumerate_partitions(n, k, noncrossing_only=True)) == comb(n, k) * comb(n, k - 1) // n


def test_flag_space_sizes():
    assert len(enumerate_partitions(6, 2, 0, noncrossing_only=True)) == 9
    assert len(enumerate_partitions(4, 2, 0, noncrossing_only=True)) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_noncrossing_enumeration_agrees_with_filter(n):
    direct = enumerate_partitions(n, noncrossing_only=True)
    assert direct == [p for p in enumerate_partitions(n) if p.is_noncrossing]
    assert direct == sorted(direct)
    assert len(set(direct)) == len(direct)


# permutations

def test_permutation_parsing_forms():
    assert Permutation.parse("5 1 2 6 3 8 4 7") == Permutation.parse("51263847")
    assert Permutation.parse("(1,3,2)", 4).images == (3, 1, 2, 4)
    with pytest.raises(ParseError):
        Permutation.parse("1 1 2")
    with pytest.raises(ParseError):
        Permutation.parse("(1,2")


def test_composition_applies_right_factor_first():
    u = Permutation.simple(1, 3)
    v = Permutation.simple(2, 3)
    assert (u * v)(3) == u(v(3)) == 1


def test_long_cycle_and_longest():
    assert Permutation.long_cycle(4).images == (2, 3, 4, 1)
    assert Permutation.from_word([1, 2, 3], 4) == Permutation.long_cycle(4)
    assert Permutation.longest(4).images == (4, 3, 2, 1)


@given(st.integers(1, 6).flatmap(permutations))
def test_inverse_and_sign(w):
    assert (w * w.inverse()).is_identity()
    assert w.sign() == (-1) ** w.inversions()
    assert sum(w.cycle_type()) == w.n
    assert Permutation.parse(w.cycle_notation(), w.n) == w


def test_all_permutations_count():
    assert len(list(all_permutations(5))) == 120


# actions on partitions

@given(set_partitions())
def test_rotation_has_order_n(pi):
    assert rotate(pi, pi.n) == pi
    assert rotate(rotate(pi), -1) == pi
    assert rotate(pi) == apply_perm(Permutation.long_cycle(pi.n), pi)


@given(noncrossing_partitions())
def test_rotation_and_reflection_keep_noncrossing(pi):
    assert rotate(pi).is_noncrossing
    assert reflect(pi).is_noncrossing
    assert reflect(reflect(pi)) == pi


def test_apply_perm_size_mismatch():
    with pytest.raises(ValueError):
        apply_perm(Permutation.identity(3), P("1,2"))


# integer partitions

@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (4, 5), (6, 11), (8, 22)])
def test_integer_partition_counts(n, count):
    assert len(list(integer_partitions(n))) == count


@given(integer_shapes())
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(integer_shapes(), integer_shapes())
def test_dominance_reverses_under_conjugation(lam, mu):
    if sum(lam) != sum(mu):
        with pytest.raises(ValueError):
            dominance_leq(lam, mu)
        return
    assert dominance_leq(lam, mu) == dominance_leq(conjugate(mu), conjugate(lam))


def test_pi_lambda():
    assert pi_lambda((3, 2, 2, 1)) == P("1,2,3/4,5/6,7/8")


def test_conjugator_for_worked_example():
    pi = P("1,4,8/2,3,5,7/6")
    w, lam = conjugator_to_canonical(pi)
    assert lam == (4, 3, 1)
    assert apply_perm(w, pi) == pi_lambda(lam)
    assert w == Permutation.parse("51263847")


@given(set_partitions())
def test_conjugator_reaches_canonical_representative(pi):
    w, lam = conjugator_to_canonical(pi)
    assert apply_perm(w, pi) == pi_lambda(lam)
