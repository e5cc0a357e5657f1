"""Temperley-Lieb action at loop value -2 and the modules W(n, k, s).

``t_i`` joins the blocks of ``i`` and ``i + 1`` into ``{i, i+1}`` plus the
union of what is left.  When ``i`` and ``i + 1`` already share a block the
result depends on ``rule``: with ``"doubleton"`` (the default) a block equal
to ``{i, i+1}`` closes into a loop worth -2 and a larger block gives 0; with
``"any"`` every shared block gives -2.  Only the default satisfies the
Temperley-Lieb relations once blocks of size three or more occur.
``s_i -> 1 + t_i`` turns this into an S_n-module ``W(n, k, 0)``; for ``s > 0``
only characters are computed, by induction from ``S_(n-s) x S_s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import SetPartition, integer_partitions
from .report import RunReport
from .representation import (
    _basis,
    character_of_class,
    class_word,
    induced_character,
    inner_product,
    mn_character,
)
from .skein import NCVector, tau

__all__ = [
    "LOOP",
    "RULES",
    "ScaledPartition",
    "tl_act",
    "tl_apply",
    "tl_sn_act",
    "tl_sn_word",
    "w_basis",
    "w_character",
    "w_character_induced",
    "w_multiplicities",
    "compare_modules",
    "doubleton_filtration_check",
    "tl_relations_check",
    "sn_relations_check",
    "s3_kernel_check",
    "square_case_check",
]

LOOP = -2
RULES = ("doubleton", "any")


@dataclass(frozen=True)
class ScaledPartition:
    scalar: int
    partition: SetPartition

    def __post_init__(self):
        if not self.partition.is_noncrossing:
            raise ValueError(f"{self.partition} is not noncrossing")

    def to_vector(self) -> NCVector:
        return NCVector.basis(self.partition, self.scalar)

    def __str__(self) -> str:
        return f"{self.scalar} * {self.partition}"


def w_basis(n: int, k: int) -> list[SetPartition]:
    return list(_basis(n, k, 0))


@lru_cache(maxsize=None)
def _tl(i: int, pi: SetPartition, rule: str = "doubleton") -> tuple[int, SetPartition]:
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    if not 1 <= i <= pi.n - 1:
        raise IndexError(f"t_{i} undefined for n={pi.n}")
    if not pi.is_noncrossing:
        raise ValueError(f"{pi} is not noncrossing")
    bi, bj = pi.block_of(i), pi.block_of(i + 1)
    if len(bi) == 1 or len(bj) == 1:
        raise ValueError(f"{pi} has a singleton at {i if len(bi) == 1 else i + 1}")
    if bi == bj:
        return (LOOP if len(bi) == 2 or rule == "any" else 0), pi
    rest = sorted(set(bi) - {i} | set(bj) - {i + 1})
    return 1, pi.replace_blocks([bi, bj], [(i, i + 1), rest])


def tl_act(i: int, pi: SetPartition, rule: str = "doubleton") -> ScaledPartition:
    """``t_i . pi`` for a noncrossing ``pi`` without singletons at ``i``, ``i + 1``."""
    return ScaledPartition(*_tl(i, pi, rule))


def tl_apply(i: int, v: NCVector, rule: str = "doubleton") -> NCVector:
    acc: dict[SetPartition, int] = {}
    for pi, c in v.terms.items():
        scalar, image = _tl(i, pi, rule)
        acc[image] = acc.get(image, 0) + c * scalar
    return NCVector._raw(v.n, acc)


def tl_sn_act(i: int, v: NCVector | SetPartition, rule: str = "doubleton") -> NCVector:
    """``(1 + t_i) . v``."""
    if isinstance(v, SetPartition):
        v = NCVector.basis(v)
    return v + tl_apply(i, v, rule)


def tl_sn_word(word: Sequence[int], v: NCVector, rule: str = "doubleton") -> NCVector:
    for i in reversed(list(word)):
        v = tl_sn_act(i, v, rule)
    return v


@lru_cache(maxsize=None)
def w_character(mu: tuple[int, ...], n: int, k: int, rule: str = "doubleton") -> int:
    """Trace of a permutation of cycle type ``mu`` on ``W(n, k, 0)``.

    Under ``rule="any"`` the operators need not define a group action, so
    the value is only the trace of the word chosen for ``mu``.
    """
    if n == 0:
        return 1
    word = class_word(mu)
    return sum(tl_sn_word(word, NCVector.basis(pi), rule)[pi] for pi in _basis(n, k, 0))


def w_character_induced(n: int, k: int, s: int, mu: Sequence[int], rule: str = "doubleton") -> int:
    """Character of ``W(n, k, s) = Ind(W(n-s, k-s, 0) x trivial)`` at cycle type ``mu``."""
    if not 0 <= s <= k or 2 * (k - s) > n - s:
        raise ValueError(f"W({n}, {k}, {s}) is not defined")
    if s == 0:
        return w_character(tuple(mu), n, k, rule)
    return induced_character(lambda nu: w_character(nu, n - s, k - s, rule), n - s, s, mu)


def _table(fn, n: int) -> dict[tuple[int, ...], int]:
    return {mu: fn(mu) for mu in integer_partitions(n)}


def w_multiplicities(n: int, k: int, s: int = 0, rule: str = "doubleton") -> dict[tuple[int, ...], int]:
    """Multiplicity of each irreducible in ``W(n, k, s)``, via character inner products.

    Raises ``ArithmeticError`` when the traces are not a character.
    """
    chi = _table(lambda mu: w_character_induced(n, k, s, mu, rule), n)
    return {lam: inner_product(chi, _table(lambda mu: mn_character(lam, mu), n), n) for lam in integer_partitions(n)}


def _check_nk(n: int, k: int):
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k and 2k <= n, got n={n}, k={k}")


def _span_closed(n: int, k: int, level, rule: str) -> tuple[bool, int]:
    """Whether the span of basis elements satisfying ``level`` is stable under every ``1 + t_i``."""
    members = [pi for pi in _basis(n, k, 0) if level(pi)]
    for pi in members:
        for i in range(1, n):
            if not all(level(p) for p in tl_sn_act(i, pi, rule).terms):
                return False, len(members)
    return True, len(members)


def compare_modules(n: int, k: int, rule: str = "doubleton") -> RunReport:
    """Characters of ``V(n, k, 0)`` and ``W(n, k, 0)`` side by side, with structural checks.

    Rows: one per conjugacy class (required equal only when ``n == 2k``), one
    per irreducible with three or more rows (multiplicity in W must be 0) and
    one for the doubleton span, which must be a W-submodule.  If the traces
    are not a character at all the multiplicity rows are replaced by one
    failing row.
    """
    _check_nk(n, k)
    report = RunReport("tl-compare", {"n": n, "k": k, "rule": rule})
    square = n == 2 * k
    differ = []
    for mu in integer_partitions(n):
        v, w = character_of_class(mu, n, k, 0), w_character(mu, n, k, rule)
        if v != w:
            differ.append(mu)
        report.add(v == w or not square, check="character", cycle_type=list(mu), chi_V=v, chi_W=w)
    try:
        mults = w_multiplicities(n, k, 0, rule)
    except ArithmeticError:
        report.add(False, check="not a character")
        mults = {}
    for lam, mult in mults.items():
        if len(lam) >= 3:
            report.add(mult == 0, check="multiplicity", shape=list(lam), multiplicity=mult)
    closed, size = _span_closed(n, k, lambda pi: pi.num_doubletons >= 1, rule)
    total = len(_basis(n, k, 0))
    report.add(closed, check="doubleton span", dimension=size, of=total)
    report.summary = {
        "isomorphic": not differ,
        "differing classes": len(differ),
        "reducible": closed and 0 < size < total,
    }
    return report.finish()


def doubleton_filtration_check(n: int, k: int, rule: str = "doubleton") -> RunReport:
    """Every span of basis elements with at least d doubletons is closed under the action."""
    _check_nk(n, k)
    report = RunReport("tl-filtration", {"n": n, "k": k, "rule": rule})
    for d in range(k + 1):
        closed, size = _span_closed(n, k, lambda pi, d=d: pi.num_doubletons >= d, rule)
        report.add(closed, level=d, dimension=size)
    return report.finish()


def tl_relations_check(n: int, k: int, rule: str = "doubleton") -> RunReport:
    """``t_i^2 = -2 t_i``, far commutation and ``t_i t_j t_i = t_i`` for ``|i - j| = 1``."""
    _check_nk(n, k)
    report = RunReport("tl-relations", {"n": n, "k": k, "rule": rule})
    for pi in _basis(n, k, 0):
        e = NCVector.basis(pi)
        for i in range(1, n):
            ti = tl_apply(i, e, rule)
            report.add(tl_apply(i, ti, rule) == ti * LOOP, relation="square", i=i, j=i, partition=str(pi))
            for j in range(1, n):
                if abs(i - j) == 1:
                    ok = tl_apply(i, tl_apply(j, ti, rule), rule) == ti
                    report.add(ok, relation="braid", i=i, j=j, partition=str(pi))
                elif abs(i - j) > 1 and i < j:
                    ok = tl_apply(i, tl_apply(j, e, rule), rule) == tl_apply(j, ti, rule)
                    report.add(ok, relation="commute", i=i, j=j, partition=str(pi))
    return report.finish()


def sn_relations_check(n: int, k: int, rule: str = "doubleton") -> RunReport:
    """Coxeter relations for the operators ``1 + t_i``."""
    _check_nk(n, k)
    report = RunReport("tl-coxeter", {"n": n, "k": k, "rule": rule})
    for pi in _basis(n, k, 0):
        e = NCVector.basis(pi)
        for i in range(1, n):
            report.add(tl_sn_word([i, i], e, rule) == e, relation="involution", i=i, partition=str(pi))
            for j in range(i + 1, n):
                if j == i + 1:
                    ok = tl_sn_word([i, j, i], e, rule) == tl_sn_word([j, i, j], e, rule)
                    report.add(ok, relation="braid", i=i, j=j, partition=str(pi))
                else:
                    ok = tl_sn_word([i, j], e, rule) == tl_sn_word([j, i], e, rule)
                    report.add(ok, relation="commute", i=i, j=j, partition=str(pi))
    return report.finish()


def s3_kernel_check(n: int, k: int, rule: str = "doubleton") -> RunReport:
    """The alternating sum over each ``<s_i, s_(i+1)>`` acts as zero on ``W(n, k, 0)``."""
    _check_nk(n, k)
    report = RunReport("tl-s3-kernel", {"n": n, "k": k, "rule": rule})
    words = [((), 1), ((0,), -1), ((1,), -1), ((0, 1), 1), ((1, 0), 1), ((0, 1, 0), -1)]
    for i in range(1, n - 1):
        for pi in _basis(n, k, 0):
            e = NCVector.basis(pi)
            total = NCVector.zero(n)
            for word, sign in words:
                total = total + tl_sn_word([i + x for x in word], e, rule) * sign
            report.add(total == 0, i=i, partition=str(pi))
    return report.finish()


def square_case_check(k: int) -> RunReport:
    """On ``V(2k, k)`` every ``1 + t_i`` agrees with the skein action of ``s_i``."""
    n = 2 * k
    report = RunReport("tl-square", {"k": k})
    for i in range(1, n):
        for pi in _basis(n, k, 0):
            report.add(tl_sn_act(i, pi) == tau(i, pi), i=i, partition=str(pi))
    return report.finish()
