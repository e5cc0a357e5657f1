import pytest
from hypothesis import given, strategies as st

from ncskein.core import SetPartition
from ncskein.skein import NCVector, tau
from ncskein.tl import (
    ScaledPartition,
    compare_modules,
    doubleton_filtration_check,
    s3_kernel_check,
    sn_relations_check,
    square_case_check,
    tl_act,
    tl_apply,
    tl_relations_check,
    tl_sn_act,
    tl_sn_word,
    w_basis,
    w_character_induced,
    w_multiplicities,
)

from strategies import words

P = SetPartition.parse

SMALL_NK = [(n, k) for n in range(2, 8) for k in range(1, n // 2 + 1)]


def test_tl_act_examples():
    assert tl_act(1, P("1,2/3,4")) == ScaledPartition(-2, P("1,2/3,4"))
    assert tl_act(2, P("1,2/3,4")) == ScaledPartition(1, P("1,4/2,3"))
    assert str(tl_act(1, P("1,2/3,4"))) == "-2 * 1,2/3,4"


def test_tl_act_merges_remainders():
    assert tl_act(3, P("1,2,3/4,5,6")) == ScaledPartition(1, P("1,2,5,6/3,4"))


def test_tl_act_errors():
    with pytest.raises(IndexError):
        tl_act(4, P("1,2/3,4"))
    with pytest.raises(ValueError):
        tl_act(1, P("1/2,3"))
    with pytest.raises(ValueError):
        tl_act(1, P("1,3/2,4"))
    with pytest.raises(ValueError):
        tl_act(1, P("1,2/3,4"), rule="loopless")


def test_shared_block_rules():
    pi = P("1,2,3")
    assert tl_act(1, pi) == ScaledPartition(0, pi)
    assert tl_act(1, pi, rule="any") == ScaledPartition(-2, pi)


def test_literal_rule_breaks_the_braid_relation():
    # every t_i scales {1,2,3} by -2, so t1 t2 t1 = -8 while t1 = -2
    e = NCVector.basis(P("1,2,3"))
    t1 = tl_apply(1, e, "any")
    assert tl_apply(1, tl_apply(2, t1, "any"), "any") == e * -8
    assert t1 == e * -2
    assert not tl_relations_check(3, 1, "any").passed
    assert tl_relations_check(3, 1).passed


@pytest.mark.parametrize("n, k", SMALL_NK)
def test_square_relation(n, k):
    for pi in w_basis(n, k):
        e = NCVector.basis(pi)
        for i in range(1, n):
            ti = tl_apply(i, e)
            assert tl_apply(i, ti) == ti * -2


@pytest.mark.parametrize("n, k", SMALL_NK)
def test_presentations_hold(n, k):
    assert tl_relations_check(n, k).passed
    assert sn_relations_check(n, k).passed


@given(st.sampled_from([(6, 2), (7, 3), (8, 3), (8, 2)]).flatmap(lambda nk: st.tuples(st.just(nk), words(nk[0]))))
def test_one_plus_t_squares_to_one(case):
    (n, k), word = case
    for pi in w_basis(n, k)[:6]:
        e = NCVector.basis(pi)
        v = tl_sn_word(word, e)
        assert tl_sn_word(list(word) + list(reversed(word)), e) == e
        assert tl_sn_word([1, 1], v) == v


@pytest.mark.parametrize("k", range(1, 5))
def test_square_case_matches_skein_action(k):
    assert square_case_check(k).passed
    pi = w_basis(2 * k, k)[0]
    assert tl_sn_act(1, pi) == tau(1, pi)


@pytest.mark.parametrize("n, k", [(n, k) for n, k in SMALL_NK if n <= 6])
def test_s3_alternating_sum_vanishes(n, k):
    assert s3_kernel_check(n, k).passed


@pytest.mark.parametrize("n, k", SMALL_NK)
def test_doubleton_count_never_drops(n, k):
    for pi in w_basis(n, k):
        for i in range(1, n):
            for term in tl_sn_act(i, pi).terms:
                assert term.num_doubletons >= pi.num_doubletons


def test_filtration():
    report = doubleton_filtration_check(6, 2)
    assert report.passed
    assert [r["dimension"] for r in report.rows] == [9, 6, 0]


def test_compare_six_two():
    report = compare_modules(6, 2)
    assert report.passed
    assert report.summary == {"isomorphic": False, "differing classes": 10, "reducible": True}
    span = [r for r in report.rows if r["check"] == "doubleton span"][0]
    assert (span["dimension"], span["of"]) == (6, 9)


def test_w_six_two_decomposition():
    mults = {lam: m for lam, m in w_multiplicities(6, 2).items() if m}
    assert mults == {(6,): 4, (5, 1): 1}


@pytest.mark.parametrize("n, k", [(n, k) for n, k in SMALL_NK if 2 * k < n])
def test_at_most_two_rows(n, k):
    for lam, mult in w_multiplicities(n, k).items():
        if len(lam) >= 3:
            assert mult == 0


@pytest.mark.parametrize("k", range(1, 4))
def test_square_modules_isomorphic(k):
    report = compare_modules(2 * k, k)
    assert report.passed
    assert report.summary["isomorphic"]


def test_literal_rule_is_not_a_module():
    assert not compare_modules(5, 2, rule="any").passed


def test_induced_characters():
    # identity class gives the dimension of the induced module
    assert w_character_induced(5, 2, 1, (1,) * 5) == 5 * len(w_basis(4, 1))
    with pytest.raises(ValueError):
        w_character_induced(4, 3, 0, (1,) * 4)


def test_bad_parameters():
    with pytest.raises(ValueError):
        compare_modules(3, 2)
    with pytest.raises(ValueError):
        doubleton_filtration_check(4, 0)
