import pytest
from hypothesis import given, settings, strategies as st

from ncskein.core import Permutation, SetPartition, apply_perm, integer_partitions, pi_lambda
from ncskein.projection import admissible_conjugators, project, project_via, stabilizer_generators
from ncskein.skein import NCVector, act_perm, act_word, apply_generator, rho, sigma, star_act

from strategies import noncrossing_partitions, set_partitions

P = SetPartition.parse

WORKED = P("1,4,8/2,3,5,7/6")
# frozen from the short path s_2 s_3 and cross-checked against the long path 51263847
WORKED_EXPANSION = """\
+1 * 1,2,3,4,8/5,7/6
-1 * 1,2,3,8/4,5,7/6
+1 * 1,4,5,7,8/2,3/6
-1 * 1,5,7,8/2,3,4/6
+1 * 1,8/2,3,4,5,7/6"""


@given(noncrossing_partitions())
def test_identity_on_noncrossing(pi):
    assert project(pi) == NCVector.basis(pi)
    assert project_via(pi, Permutation.identity(pi.n)) == NCVector.basis(pi)


def test_almost_noncrossing_example():
    expected = NCVector.from_text("-1 * 1,2,6/3/4,5\n-1 * 1,2,4/3/5,6\n+1 * 1,2/3/4,5,6", 6)
    assert project(P("1,2,5/3/4,6")) == expected


@given(set_partitions(min_n=4, max_n=8))
def test_negative_sigma_on_almost_noncrossing(pi):
    if pi.is_noncrossing or not any(pi.swap(i, i + 1).is_noncrossing for i in range(1, pi.n)):
        return
    assert project(pi) == -sigma(pi)


def test_worked_example_both_paths():
    short = Permutation.from_word([2, 3], 8)
    long = Permutation.parse("51263847")
    assert apply_perm(short, WORKED) == P("1,2,8/3,4,5,7/6")
    via_short = project_via(WORKED, short)
    assert via_short == project_via(WORKED, long) == project(WORKED)
    assert via_short.to_text() == WORKED_EXPANSION
    signed = star_act(short, WORKED)
    assert act_word([3, 2], signed.to_vector()) == via_short


def test_project_via_rejects_bad_conjugator():
    with pytest.raises(ValueError):
        project_via(P("1,3/2,4"), Permutation.identity(4))
    with pytest.raises(ValueError):
        project_via(P("1,2"), Permutation.identity(3))


@settings(max_examples=40)
@given(set_partitions(max_n=6))
def test_conjugator_independence(pi):
    results = {project_via(pi, w) for w in admissible_conjugators(pi)}
    assert len(results) == 1


@given(set_partitions(min_n=2, max_n=7), st.data())
def test_equivariance_on_generators(pi, data):
    i = data.draw(st.integers(1, pi.n - 1))
    r = rho(i, pi)
    assert project(r.partition) * r.sign == apply_generator(i, project(pi))


@pytest.mark.parametrize("n", range(1, 8))
def test_stabilizer_signs_agree(n):
    for lam in integer_partitions(n):
        base = pi_lambda(lam)
        for g in stabilizer_generators(lam):
            assert apply_perm(g, base) == base
            signed = star_act(g, base)
            assert act_perm(g, NCVector.basis(base)) == signed.to_vector()


def test_projection_terms_are_fixed():
    for term in project(WORKED).terms:
        assert project(term) == NCVector.basis(term)
