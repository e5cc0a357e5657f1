"""Representing matrices, characters and isotypic structure of the skein modules.

All arithmetic is over Python integers.  Bases are the canonical enumeration
order of the noncrossing partitions selected by ``(n, k, s)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod
from typing import Iterable, Sequence

from .core import (
    Permutation,
    SetPartition,
    all_permutations,
    conjugate,
    enumerate_partitions,
    integer_partitions,
    validate_partition_shape,
)
from .skein import NCVector, act_perm, act_word, apply_generator

__all__ = [
    "IntMatrix",
    "GroupAlgebraElement",
    "skein_basis",
    "representing_matrix",
    "class_representative",
    "class_word",
    "class_size",
    "character",
    "character_of_class",
    "mn_character",
    "hook_lengths",
    "hook_dim",
    "b_statistic",
    "flag_shape",
    "young_symmetrizer",
    "apply_symmetrizer",
    "pieri_induce",
    "induced_character",
    "inner_product",
]


@lru_cache(maxsize=None)
def _basis(n: int, k: int | None, s: int | None) -> tuple[SetPartition, ...]:
    return tuple(enumerate_partitions(n, k, s, noncrossing_only=True))


def skein_basis(n: int, k: int | None = None, s: int | None = None) -> list[SetPartition]:
    return list(_basis(n, k, s))


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            return cls(())
        return cls(tuple(tuple(col[r] for col in columns) for r in range(len(columns[0]))))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(tuple(tuple(int(r == c) for c in range(size)) for r in range(size)))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows))

    def __mul__(self, scalar: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(scalar * x for x in row) for row in self.rows))

    __rmul__ = __mul__

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(len(self.rows)))

    def to_text(self) -> str:
        if not self.rows:
            return ""
        width = max(len(str(x)) for row in self.rows for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _column(v: NCVector, index: dict[SetPartition, int], size: int) -> list[int]:
    col = [0] * size
    for pi, c in v.terms.items():
        try:
            col[index[pi]] = c
        except KeyError:
            raise ValueError(f"{pi} left the chosen subspace") from None
    return col


def representing_matrix(w: Permutation, n: int, k: int | None = None, s: int | None = None) -> IntMatrix:
    """Matrix of ``w`` on ``V(n[, k[, s]])``; column j is the image of the j-th basis element."""
    basis = _basis(n, k, s)
    if not basis:
        raise ValueError(f"V({n}, {k}, {s}) is the zero space")
    if w.n != n:
        raise ValueError("size mismatch")
    index = {pi: j for j, pi in enumerate(basis)}
    return IntMatrix.from_columns([_column(act_perm(w, NCVector.basis(pi)), index, len(basis)) for pi in basis])


def class_representative(mu: Sequence[int]) -> Permutation:
    """Product of cycles on consecutive intervals of lengths ``mu``."""
    n = sum(mu)
    cycles, start = [], 1
    for part in mu:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, n)


def class_word(mu: Sequence[int]) -> list[int]:
    """A reduced word for :func:`class_representative`: ``(a..b) = s_a s_{a+1} ... s_{b-1}``."""
    word, start = [], 1
    for part in mu:
        word.extend(range(start, start + part - 1))
        start += part
    return word


def class_size(mu: Sequence[int]) -> int:
    z = 1
    for part, mult in Counter(mu).items():
        z *= part**mult * factorial(mult)
    return factorial(sum(mu)) // z


def character(w: Permutation, n: int, k: int | None = None, s: int | None = None) -> int:
    """Trace of ``w`` on the skein module, computed column by column."""
    if w.n != n:
        raise ValueError("size mismatch")
    return sum(act_perm(w, NCVector.basis(pi))[pi] for pi in _basis(n, k, s))


@lru_cache(maxsize=None)
def character_of_class(mu: tuple[int, ...], n: int, k: int | None = None, s: int | None = None) -> int:
    word = class_word(mu)
    return sum(act_word(word, NCVector.basis(pi))[pi] for pi in _basis(n, k, s))


# ---------------------------------------------------------------------------
# Irreducible characters and dimensions

@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((target if j == idx else x for j, x in enumerate(beta)), reverse=True)
        new_lam = tuple(x - (length - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(x for x in new_lam if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``chi^lam`` on the class of cycle type ``mu`` (border-strip recursion)."""
    lam = validate_partition_shape(lam)
    mu = tuple(sorted(validate_partition_shape(sorted(mu, reverse=True)), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lam = tuple(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def hook_dim(lam: Sequence[int]) -> int:
    lam = validate_partition_shape(lam)
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def b_statistic(lam: Sequence[int]) -> int:
    return sum(i * part for i, part in enumerate(lam))


def flag_shape(n: int, k: int) -> tuple[int, ...]:
    """``(k, k, 1^(n-2k))``."""
    if k < 1 or 2 * k > n:
        raise ValueError(f"no flag shape for n={n}, k={k}")
    return (k, k) + (1,) * (n - 2 * k)


# ---------------------------------------------------------------------------
# Group algebra and Young symmetrizers

class GroupAlgebraElement:
    """Sparse integer combination of permutations of ``{1..n}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Permutation, int] | Iterable[tuple[Permutation, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Permutation, int] = {}
        for w, c in items:
            acc[w] = acc.get(w, 0) + c
        self.n = n
        self.terms = {w: c for w, c in acc.items() if c}

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        acc: dict[Permutation, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                uv = u * v
                acc[uv] = acc.get(uv, 0) + a * b
        return GroupAlgebraElement(self.n, acc)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, list(self.terms.items()) + list(other.terms.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def act(self, v: NCVector) -> NCVector:
        out = NCVector.zero(v.n)
        for w, c in sorted(self.terms.items()):
            out = out + act_perm(w, v) * c
        return out


def _intervals(lam: Sequence[int]) -> list[tuple[int, int]]:
    out, start = [], 1
    for part in lam:
        out.append((start, part))
        start += part
    return out


def young_symmetrizer(lam: Sequence[int], sign: int = 1) -> GroupAlgebraElement:
    """``[S_lam]_+`` (sign=+1) or ``[S_lam]_-`` (sign=-1) as an explicit group algebra element."""
    lam = validate_partition_shape(lam)
    intervals = _intervals(lam)
    terms = []
    for choice in product(*(list(all_permutations(part)) for _, part in intervals)):
        images: list[int] = []
        coef = 1
        for (start, _), w in zip(intervals, choice):
            images.extend(start - 1 + y for y in w.images)
            if sign < 0:
                coef *= w.sign()
        terms.append((Permutation(images), coef))
    return GroupAlgebraElement(sum(lam), terms)


def _interval_symmetrize(v: NCVector, start: int, size: int, sign: int) -> NCVector:
    # [S_m] = (sum_j s_j s_{j+1} ... s_{m-1}) [S_{m-1}], the sum running over left coset representatives.
    for m in range(2, size + 1):
        cur = v
        acc = v
        coef = 1
        for j in range(m - 1, 0, -1):
            cur = apply_generator(start - 1 + j, cur)
            coef *= sign
            acc = acc + cur * coef
        v = acc
    return v


def apply_symmetrizer(lam: Sequence[int], sign: int, v: NCVector, naive: bool = False) -> NCVector:
    """``[S_lam]_{sign} . v`` with the Young subgroup on consecutive intervals.

    ``lam`` may have size smaller than ``v.n`` (a Young subgroup of S_|lam|
    inside S_n).  The default route factors each interval symmetrizer over
    coset representatives; ``naive=True`` sums over the explicit subgroup.
    """
    lam = validate_partition_shape(lam)
    if sum(lam) > v.n:
        raise ValueError(f"|{lam}| exceeds n={v.n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if naive:
        pad = lam + (1,) * (v.n - sum(lam))
        return young_symmetrizer(pad, sign).act(v)
    for start, part in _intervals(lam):
        v = _interval_symmetrize(v, start, part, sign)
    return v


# ---------------------------------------------------------------------------
# Induction

def pieri_induce(mu: Sequence[int], s: int) -> list[tuple[int, ...]]:
    """Shapes ``lam`` with ``lam / mu`` a horizontal strip of size ``s``."""
    mu = tuple(mu)
    if s < 0:
        raise ValueError("s must be nonnegative")
    n = sum(mu) + s
    out = []
    for lam in integer_partitions(n):
        if len(lam) > len(mu) + 1:
            continue
        padded = mu + (0,) * (len(lam) - len(mu))
        if len(padded) > len(lam):
            continue
        ok = all(padded[i] <= lam[i] for i in range(len(lam)))
        ok = ok and all(lam[i + 1] <= padded[i] for i in range(len(lam) - 1))
        if ok:
            out.append(lam)
    return sorted(out)


def induced_character(inner, a: int, b: int, mu: Sequence[int]) -> int:
    """Character of ``Ind_{S_a x S_b}^{S_(a+b)}(phi x triv)`` at cycle type ``mu``.

    ``inner(nu)`` gives ``phi`` at cycle type ``nu`` of ``S_a``.  Sums over the
    ways of distributing the (distinguishable) cycles of ``mu`` between the two
    factors.
    """
    mu = tuple(mu)
    total = 0
    for r in range(len(mu) + 1):
        for chosen in combinations(range(len(mu)), r):
            part = tuple(sorted((mu[j] for j in chosen), reverse=True))
            if sum(part) == a:
                total += inner(part)
    return total


def inner_product(chi_a: dict[tuple, int], chi_b: dict[tuple, int], n: int) -> int:
    """``<chi_a, chi_b>`` from class-function tables keyed by cycle type."""
    total = sum(class_size(mu) * chi_a[mu] * chi_b[mu] for mu in integer_partitions(n))
    q, r = divmod(total, factorial(n))
    if r:
        raise ArithmeticError("inner product is not an integer")
    return q
