"""q-analogs, root-of-unity evaluation and cyclic sieving checks."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Sequence

from .core import enumerate_partitions, rotate, validate_partition_shape
from .qpoly import QPoly, eval_at_root
from .report import RunReport
from .representation import b_statistic, flag_shape, hook_lengths, mn_character

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_catalan",
    "q_narayana",
    "flag_poly",
    "q_hook",
    "fake_degree",
    "count_fixed",
    "csp_polynomial",
    "verify_csp",
    "springer_check",
    "chu_vandermonde_check",
    "catalan_summation",
    "narayana_summation",
    "FAMILIES",
]

FAMILIES = ("catalan", "narayana", "flag", "subsets")


@lru_cache(maxsize=None)
def q_int(r: int) -> QPoly:
    """``[r]_q = 1 + q + ... + q^(r-1)``."""
    return QPoly([1] * r)


@lru_cache(maxsize=None)
def q_factorial(m: int) -> QPoly:
    if m < 0:
        raise ValueError("negative factorial")
    return QPoly([1]) if m == 0 else q_factorial(m - 1) * q_int(m)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial({n}, {k}): need 0 <= k <= n")
    return q_factorial(n) // (q_factorial(k) * q_factorial(n - k))


def _qbin0(n: int, k: int) -> QPoly:
    return q_binomial(n, k) if 0 <= k <= n else QPoly()


def q_catalan(n: int) -> QPoly:
    return q_binomial(2 * n, n) // q_int(n + 1)


def q_narayana(n: int, k: int, shifted: bool = False) -> QPoly:
    """``[n choose k]_q [n choose k-1]_q / [n]_q``; ``shifted`` multiplies by ``q^(k(k-1))``.

    The two versions agree at every n-th root of unity.
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"q_narayana({n}, {k}): need n >= 1 and 0 <= k <= n")
    p = (_qbin0(n, k) * _qbin0(n, k - 1)) // q_int(n)
    return p * QPoly.monomial(k * (k - 1)) if shifted else p


def flag_poly(n: int, k: int) -> QPoly:
    """Cyclic sieving polynomial for noncrossing partitions with k blocks and no singletons."""
    if n == 0 and k == 0:
        return QPoly([1])
    if k < 0 or 2 * k > n:
        raise ValueError(f"flag_poly({n}, {k}): need 2k <= n")
    if k == 0:
        return QPoly()
    num = q_int(k) * q_factorial(n)
    den = q_int(n - k) * q_int(n - k + 1) * q_factorial(k) ** 2 * q_factorial(n - 2 * k)
    return num // den


def q_hook(lam: Sequence[int]) -> QPoly:
    """q-analog of the hook length formula."""
    lam = validate_partition_shape(lam)
    den = QPoly([1])
    for h in hook_lengths(lam):
        den = den * q_int(h)
    return q_factorial(sum(lam)) // den


def fake_degree(lam: Sequence[int]) -> QPoly:
    lam = validate_partition_shape(lam)
    return QPoly.monomial(b_statistic(lam)) * q_hook(lam)


def _family(family: str, n: int, k: int | None):
    if family == "catalan":
        return enumerate_partitions(n, noncrossing_only=True)
    if family == "narayana":
        return enumerate_partitions(n, k, noncrossing_only=True)
    if family == "flag":
        return enumerate_partitions(n, k, 0, noncrossing_only=True)
    if family == "subsets":
        return [frozenset(c) for c in combinations(range(1, n + 1), k)]
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def count_fixed(family: str, n: int, k: int | None = None, d: int = 1) -> int:
    """Number of elements of the family fixed by the d-th power of rotation."""
    items = _family(family, n, k)
    if family == "subsets":
        return sum(1 for t in items if frozenset((x - 1 + d) % n + 1 for x in t) == t)
    return sum(1 for pi in items if rotate(pi, d) == pi)


def csp_polynomial(family: str, n: int, k: int | None = None) -> QPoly:
    if family == "catalan":
        return q_catalan(n)
    if family == "narayana":
        return q_narayana(n, k)
    if family == "flag":
        return flag_poly(n, k)
    if family == "subsets":
        return q_binomial(n, k)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def verify_csp(family: str, n: int, k: int | None = None) -> RunReport:
    """Compare fixed-point counts with root-of-unity evaluations for d = 0..n-1."""
    if family != "catalan" and k is None:
        raise ValueError(f"family {family!r} needs k")
    report = RunReport("verify-csp", {"family": family, "n": n, "k": k})
    poly = csp_polynomial(family, n, k)
    for d in range(n):
        fixed = count_fixed(family, n, k, d)
        value = eval_at_root(poly, n, d)
        report.add(fixed == value, d=d, fixed=fixed, evaluation=value)
    return report


def _cycle_type_of_power(length: int, d: int, extra_fixed: int) -> tuple[int, ...]:
    g = gcd(length, d)
    return tuple([length // g] * g + [1] * extra_fixed)


def springer_check(lam: Sequence[int]) -> RunReport:
    """``chi^lam(w) == f^lam(zeta)`` for powers of the n-cycle and of an (n-1)-cycle."""
    lam = validate_partition_shape(lam)
    n = sum(lam)
    f = fake_degree(lam)
    report = RunReport("springer-check", {"lambda": list(lam)})
    for length, extra in ((n, 0), (n - 1, 1)):
        if length < 1 or (length == n - 1 and n < 2):
            continue
        for d in range(length):
            mu = _cycle_type_of_power(length, d, extra)
            chi = mn_character(lam, mu)
            value = eval_at_root(f, length, d)
            report.add(chi == value, cycle=f"{length}-cycle", d=d, cycle_type=list(mu), character=chi, evaluation=value)
    return report


def chu_vandermonde_check(m: int, n: int, k: int) -> bool:
    lhs = _qbin0(m + n, k)
    rhs = QPoly()
    for j in range(k + 1):
        term = _qbin0(m, k - j) * _qbin0(n, j)
        if term:
            rhs = rhs + QPoly.monomial(j * (m - k + j)) * term
    return lhs == rhs


def catalan_summation(n: int) -> tuple[QPoly, QPoly]:
    """``sum_k q^(k(k-1)) Nar_q(n, k)`` and ``Cat_q(n)``."""
    total = QPoly()
    for k in range(n + 1):
        total = total + QPoly.monomial(k * (k - 1)) * q_narayana(n, k)
    return total, q_catalan(n)


def _flag_or_zero(n: int, k: int) -> QPoly:
    if n == 0 and k == 0:
        return QPoly([1])
    if k < 1 or 2 * k > n:
        return QPoly()
    return flag_poly(n, k)


def narayana_summation(n: int, k: int) -> tuple[QPoly, QPoly]:
    """Singleton-stratified sum and ``Nar_q(n, k)``."""
    total = QPoly()
    for s in range(k + 1):
        term = _qbin0(n, s) * _flag_or_zero(n - s, k - s)
        if term:
            total = total + QPoly.monomial((k - s - 1) * (k - s)) * term
    return total, q_narayana(n, k)


def flag_fake_degree_identity(n: int, k: int) -> bool:
    lam = flag_shape(n, k)
    return fake_degree(lam) == QPoly.monomial(b_statistic(lam)) * flag_poly(n, k)
