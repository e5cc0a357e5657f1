from itertools import combinations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from ncskein.core import enumerate_partitions, integer_partitions
from ncskein.qcsp import (
    catalan_summation,
    chu_vandermonde_check,
    count_fixed,
    fake_degree,
    flag_fake_degree_identity,
    flag_poly,
    narayana_summation,
    q_binomial,
    q_catalan,
    q_factorial,
    q_hook,
    q_narayana,
    springer_check,
    verify_csp,
)
from ncskein.qpoly import QPoly, eval_at_root
from ncskein.representation import flag_shape, hook_dim


def inversion_oracle(n, k):
    """Gaussian binomial as a generating function of k-subsets by sum of elements."""
    coeffs = [0] * (k * (n - k) + 1)
    for s in combinations(range(n), k):
        coeffs[sum(s) - k * (k - 1) // 2] += 1
    return QPoly(coeffs)


def dyck_paths(n):
    def walk(path, up, down):
        if up == down == n:
            yield path
            return
        if up < n:
            yield from walk(path + "U", up + 1, down)
        if down < up:
            yield from walk(path + "D", up, down + 1)
    yield from walk("", 0, 0)


def catalan_oracle(n):
    """MacMahon: sum over Dyck paths of q^maj, descents at DU positions."""
    acc = {}
    for p in dyck_paths(n):
        maj = sum(i + 1 for i in range(len(p) - 1) if p[i] == "D" and p[i + 1] == "U")
        acc[maj] = acc.get(maj, 0) + 1
    return QPoly([acc.get(j, 0) for j in range(max(acc) + 1)])


@pytest.mark.parametrize("n", range(0, 9))
def test_q_binomial_against_subset_oracle(n):
    for k in range(n + 1):
        p = q_binomial(n, k)
        assert p == inversion_oracle(n, k)
        assert p.is_palindromic()
        assert p.degree == k * (n - k)


def test_q_binomial_examples_and_errors():
    assert q_binomial(2, 1) == QPoly([1, 1])
    assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert q_binomial(5, 0) == QPoly([1])
    with pytest.raises(ValueError):
        q_binomial(3, 4)


@pytest.mark.parametrize("n", range(0, 9))
def test_q_catalan_against_dyck_oracle(n):
    assert q_catalan(n) == catalan_oracle(n)


def test_q_catalan_small():
    assert q_catalan(2) == QPoly([1, 0, 1])


@pytest.mark.parametrize("n", range(1, 11))
def test_specializations_at_one(n):
    assert q_catalan(n)(1) == comb(2 * n, n) // (n + 1)
    for k in range(1, n + 1):
        assert q_narayana(n, k)(1) == comb(n, k) * comb(n, k - 1) // n
    for k in range(1, n // 2 + 1):
        assert flag_poly(n, k)(1) == len(enumerate_partitions(n, k, 0, noncrossing_only=True))


def test_narayana_frozen_values():
    assert q_narayana(4, 2)(1) == 6
    assert q_narayana(6, 2) == QPoly([1, 1, 2, 2, 3, 2, 2, 1, 1])


@pytest.mark.parametrize("n", range(1, 11))
def test_shifted_narayana_agrees_at_roots(n):
    for k in range(1, n + 1):
        plain, shifted = q_narayana(n, k), q_narayana(n, k, shifted=True)
        for d in range(n):
            assert eval_at_root(plain, n, d) == eval_at_root(shifted, n, d)


def test_flag_poly_is_the_q_hook_length():
    assert flag_poly(6, 2)(1) == 9
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            assert flag_poly(n, k) == q_hook(flag_shape(n, k))
            assert flag_fake_degree_identity(n, k)


@pytest.mark.parametrize("n", range(1, 8))
def test_q_hook_at_one_is_dimension(n):
    for lam in integer_partitions(n):
        assert q_hook(lam)(1) == hook_dim(lam)
        assert fake_degree(lam)(1) == hook_dim(lam)


def test_fake_degree_frozen():
    assert fake_degree((2, 2, 1, 1)) == QPoly.monomial(7) * QPoly([1, 1, 2, 1, 2, 1, 1])


def test_count_fixed_examples():
    assert count_fixed("catalan", 4, d=1) == 2
    assert count_fixed("subsets", 4, 2, d=2) == 2
    assert count_fixed("narayana", 6, 3, d=6) == comb(6, 3) * comb(6, 2) // 6
    with pytest.raises(ValueError):
        count_fixed("tableaux", 4, 2)


@pytest.mark.parametrize("family, n, k", [("catalan", 4, None), ("narayana", 6, 3), ("flag", 6, 2), ("subsets", 7, 3)])
def test_verify_csp_examples(family, n, k):
    report = verify_csp(family, n, k)
    assert report.passed
    assert [r["d"] for r in report.rows] == list(range(n))


def test_verify_csp_needs_k():
    with pytest.raises(ValueError):
        verify_csp("flag", 6)


def test_springer_examples():
    assert springer_check((5,)).passed
    assert all(r["character"] == 1 for r in springer_check((5,)).rows)
    assert springer_check((1, 1, 1, 1)).passed
    assert springer_check((3, 3, 1, 1)).passed


@given(st.integers(0, 8), st.integers(0, 8), st.data())
def test_chu_vandermonde(m, n, data):
    k = data.draw(st.integers(0, m + n))
    assert chu_vandermonde_check(m, n, k)


def test_chu_vandermonde_smallest():
    assert chu_vandermonde_check(1, 1, 1)
    assert chu_vandermonde_check(3, 4, 0)


@pytest.mark.parametrize("n", range(1, 11))
def test_summation_identities(n):
    lhs, rhs = catalan_summation(n)
    assert lhs == rhs
    for k in range(n + 1):
        lhs, rhs = narayana_summation(n, k)
        assert lhs == rhs


def test_factorials_agree_at_one():
    for m in range(8):
        assert q_factorial(m)(1) == factorial(m)
