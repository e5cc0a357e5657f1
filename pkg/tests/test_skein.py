import json

import pytest
from hypothesis import given, strategies as st

from ncskein.core import (
    Permutation,
    SetPartition,
    all_permutations,
    apply_perm,
    classify,
    enumerate_partitions,
    rotate,
)
from ncskein.skein import (
    NCVector,
    SignedPartition,
    act_perm,
    act_word,
    apply_generator,
    reduced_word,
    rho,
    sigma,
    sigma_tilde,
    star_act,
    tau,
    tau_tilde,
)

from strategies import noncrossing_partitions, permutations, set_partitions, words

P = SetPartition.parse


def vec(*terms):
    pis = [(P(t), c) for c, t in terms]
    return NCVector(pis[0][0].n, pis)


def all_reduced_words(w):
    """Every reduced word of w, by peeling right descents."""
    if w.is_identity():
        return [()]
    out = []
    for i in range(1, w.n):
        if w(i) > w(i + 1):
            shorter = w * Permutation.simple(i, w.n)
            out.extend(word + (i,) for word in all_reduced_words(shorter))
    return out


# vectors

def test_vector_rejects_crossing_keys_and_drops_zeros():
    with pytest.raises(ValueError):
        NCVector(4, {P("1,3/2,4"): 1})
    v = NCVector(3, {P("1,2/3"): 0, P("1/2,3"): 2})
    assert len(v) == 1
    assert v - v == NCVector.zero(3)
    assert not (v - v)


@given(noncrossing_partitions(), noncrossing_partitions(), st.integers(-50, 50))
def test_vector_text_and_json_round_trip(p, q, c):
    if p.n != q.n:
        return
    v = NCVector.basis(p, c) + NCVector.basis(q, 3)
    assert NCVector.from_text(v.to_text(), p.n) == v
    assert NCVector.from_json(v.dumps(), p.n) == v
    assert NCVector.from_json(json.loads(v.dumps()), p.n) == v


def test_vector_text_format():
    v = vec((2, "1,2/3"), (-1, "1/2,3"))
    assert v.to_text() == "+2 * 1,2/3\n-1 * 1/2,3"


# skein map

def test_sigma_three_term_example():
    assert sigma(P("1,2,5/3/4,6")) == vec((1, "1,2,6/3/4,5"), (1, "1,2,4/3/5,6"), (-1, "1,2/3/4,5,6"))


def test_sigma_ptolemy_case():
    assert sigma(P("1,3/2,4")) == vec((1, "1,4/2,3"), (1, "1,2/3,4"))


def test_sigma_tilde_keeps_singleton_terms():
    full = sigma_tilde(P("1,3/2,4"))
    assert full == vec((1, "1,4/2,3"), (1, "1,2/3,4"), (-1, "1,2,3/4"), (-1, "1,2,4/3"))


def test_sigma_rejects_other_classes():
    with pytest.raises(ValueError):
        sigma(P("1,2/3,4"))
    with pytest.raises(ValueError):
        sigma(P("1,4/2,5/3,6"))
    with pytest.raises(ValueError):
        sigma(P("1,2,5/3/4,6"), index=1)


@given(set_partitions(min_n=4, max_n=7))
def test_sigma_independent_of_crossing_index(pi):
    cls = classify(pi)
    if not hasattr(cls, "crossing_indices"):
        return
    results = {sigma(pi, i) for i in cls.crossing_indices}
    assert len(results) == 1
    for term in results.pop().terms:
        assert (term.num_blocks, term.num_singletons) == (pi.num_blocks, pi.num_singletons)


# star action

def test_rho_signs():
    assert rho(1, P("1/2")) == SignedPartition(1, P("1/2"))
    assert rho(1, P("1,3/2,4")) == SignedPartition(-1, P("1,4/2,3"))
    with pytest.raises(IndexError):
        rho(3, P("1/2,3"))


@given(set_partitions(min_n=2), st.data())
def test_rho_is_an_involution(pi, data):
    i = data.draw(st.integers(1, pi.n - 1))
    once = rho(i, pi)
    twice = rho(i, once.partition)
    assert twice.partition == pi and once.sign * twice.sign == 1


def test_star_act_on_long_cycle():
    assert star_act(Permutation.long_cycle(6), P("1,2,3/4,5,6")) == SignedPartition(-1, P("1,5,6/2,3,4"))
    assert star_act(Permutation.identity(4), P("1,3/2,4")) == SignedPartition(1, P("1,3/2,4"))


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(set_partitions(min_n=n, max_n=n), words(n))))
def test_star_act_matches_letter_by_letter(case):
    pi, word = case
    sign, cur = 1, pi
    for i in reversed(word):
        r = rho(i, cur)
        sign, cur = sign * r.sign, r.partition
    w = Permutation.from_word(word, pi.n)
    assert star_act(w, pi) == SignedPartition(sign, cur)
    assert cur == apply_perm(w, pi)


# tau

def test_tau_examples():
    assert tau(1, P("1,2/3")) == vec((-1, "1,2/3"))
    assert tau(1, P("1/2,3")) == vec((1, "1,3/2"))
    assert tau(4, P("1,2,4/3/5,6")) == sigma(P("1,2,5/3/4,6"))


def test_tau_tilde_examples():
    assert tau_tilde(1, P("1,2/3")) == vec((-1, "1,2/3"))
    assert tau_tilde(1, P("1,4/2,3")) == vec((1, "1,4/2,3"), (1, "1,2/3,4"), (-1, "1,2,3/4"), (-1, "1,2,4/3"))


def test_tau_errors():
    with pytest.raises(IndexError):
        tau(0, P("1,2"))
    with pytest.raises(ValueError):
        tau(1, P("1,3/2,4"))


@given(noncrossing_partitions(min_n=2), st.data())
def test_tau_preserves_grading(pi, data):
    i = data.draw(st.integers(1, pi.n - 1))
    for term in tau(i, pi).terms:
        assert (term.num_blocks, term.num_singletons) == (pi.num_blocks, pi.num_singletons)
    for term in tau_tilde(i, pi).terms:
        assert term.num_blocks == pi.num_blocks
        assert term.num_singletons >= pi.num_singletons


@given(noncrossing_partitions(min_n=3, max_n=8), st.data())
def test_coxeter_relations_on_random_basis_elements(pi, data):
    n = pi.n
    i = data.draw(st.integers(1, n - 1))
    j = data.draw(st.integers(1, n - 1))
    e = NCVector.basis(pi)
    assert act_word([i, i], e) == e
    if abs(i - j) > 1:
        assert act_word([i, j], e) == act_word([j, i], e)
    if abs(i - j) == 1:
        assert act_word([i, j, i], e) == act_word([j, i, j], e)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(noncrossing_partitions(min_n=n, max_n=n), words(n), words(n))))
def test_action_is_a_homomorphism(case):
    pi, u, v = case
    e = NCVector.basis(pi)
    assert act_word(list(u) + list(v), e) == act_word(u, act_word(v, e))
    w = Permutation.from_word(list(u) + list(v), pi.n)
    assert act_perm(w, e) == act_word(list(u) + list(v), e)


def test_word_order_rightmost_first():
    pi = P("1,2,3/4,5,6")
    assert act_word([1, 2, 3, 4, 5], NCVector.basis(pi)) == -NCVector.basis(rotate(pi))
    assert act_word([], NCVector.basis(pi)) == NCVector.basis(pi)


def test_action_is_linear():
    a, b = P("1,2/3,4"), P("1,4/2,3")
    v = NCVector.basis(a, 3) - NCVector.basis(b, 2)
    assert apply_generator(2, v) == tau(2, a) * 3 - tau(2, b) * 2


def test_affine_transposition_on_blockmates():
    pi = P("1,4/2,3")
    assert act_perm(Permutation.transposition(1, 4, 4), NCVector.basis(pi)) == -NCVector.basis(pi)


@pytest.mark.parametrize("n", range(2, 6))
def test_every_reduced_word_gives_the_same_action(n):
    basis = [NCVector.basis(p) for p in enumerate_partitions(n, noncrossing_only=True)]
    for w in all_permutations(n):
        images = None
        for word in all_reduced_words(w):
            out = [act_word(word, e) for e in basis]
            assert images is None or out == images
            images = out


def test_every_reduced_word_n6_sample():
    basis = [NCVector.basis(p) for p in enumerate_partitions(6, noncrossing_only=True)]
    for w in [Permutation.longest(6), Permutation.long_cycle(6), Permutation.parse("351624")]:
        ref = [act_perm(w, e) for e in basis]
        for word in all_reduced_words(w)[:40]:
            assert [act_word(word, e) for e in basis] == ref


# reduced words

def test_reduced_word_small_cases():
    assert reduced_word(Permutation.identity(3)) == []
    assert reduced_word(Permutation.simple(1, 3)) == [1]
    assert reduced_word(Permutation.parse("321")) in ([1, 2, 1], [2, 1, 2])


@given(st.integers(1, 8).flatmap(permutations))
def test_reduced_word_is_reduced(w):
    word = reduced_word(w)
    assert Permutation.from_word(word, w.n) == w
    assert len(word) == w.inversions()
