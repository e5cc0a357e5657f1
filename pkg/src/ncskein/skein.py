"""Skein resolution and the symmetric group action on noncrossing partitions.

``tau(i, pi)`` is the action of ``s_i`` on a noncrossing basis element; it
swaps ``i`` and ``i + 1`` and, when that creates a crossing, resolves it with
the skein map ``sigma``.  Words act rightmost letter first, so
``act_word([i1, ..., ik], v) == tau_i1(... tau_ik(v))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .core import (
    AlmostNoncrossing,
    Permutation,
    SetPartition,
    classify,
    valence,
)

__all__ = [
    "NCVector",
    "SignedPartition",
    "sigma",
    "sigma_tilde",
    "rho",
    "star_act",
    "tau",
    "tau_tilde",
    "act_word",
    "act_perm",
    "reduced_word",
    "word_to_perm",
]


class NCVector:
    """Sparse integer combination of noncrossing partitions of ``{1..n}``.

    Treated as immutable; arithmetic returns new vectors and zero
    coefficients are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[SetPartition, int] | Iterable[tuple[SetPartition, int]] = (), *, check: bool = True):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[SetPartition, int] = {}
        for pi, c in items:
            if check:
                if pi.n != n:
                    raise ValueError(f"{pi} is not a partition of {{1..{n}}}")
                if not pi.is_noncrossing:
                    raise ValueError(f"{pi} is not noncrossing")
            acc[pi] = acc.get(pi, 0) + int(c)
        self.n = n
        self.terms = {pi: c for pi, c in acc.items() if c}

    @classmethod
    def basis(cls, pi: SetPartition, coef: int = 1) -> "NCVector":
        return cls(pi.n, {pi: coef})

    @classmethod
    def zero(cls, n: int) -> "NCVector":
        return cls(n, {})

    @classmethod
    def _raw(cls, n: int, terms: dict[SetPartition, int]) -> "NCVector":
        v = cls.__new__(cls)
        v.n = n
        v.terms = {pi: c for pi, c in terms.items() if c}
        return v

    def __iter__(self) -> Iterator[tuple[SetPartition, int]]:
        for pi in sorted(self.terms):
            yield pi, self.terms[pi]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, pi: SetPartition) -> int:
        return self.terms.get(pi, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NCVector):
            return self.n == other.n and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: "NCVector"):
        if other.n != self.n:
            raise ValueError(f"size mismatch: V({self.n}) vs V({other.n})")

    def __add__(self, other: "NCVector") -> "NCVector":
        self._check(other)
        acc = dict(self.terms)
        for pi, c in other.terms.items():
            acc[pi] = acc.get(pi, 0) + c
        return NCVector._raw(self.n, acc)

    def __sub__(self, other: "NCVector") -> "NCVector":
        return self + (-other)

    def __neg__(self) -> "NCVector":
        return NCVector._raw(self.n, {pi: -c for pi, c in self.terms.items()})

    def __mul__(self, scalar: int) -> "NCVector":
        return NCVector._raw(self.n, {pi: scalar * c for pi, c in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.terms:
            return f"NCVector({self.n}, 0)"
        body = " ".join(f"{c:+d}*[{pi}]" for pi, c in self)
        return f"NCVector({self.n}, {body})"

    def to_text(self) -> str:
        """One ``<signed integer> * <partition>`` line per term, canonical order."""
        return "\n".join(f"{c:+d} * {pi}" for pi, c in self)

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "NCVector":
        terms = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            coef, _, part = line.partition("*")
            if not part:
                raise ValueError(f"malformed term line {line!r}")
            terms.append((SetPartition.parse(part, n), int(coef.replace(" ", ""))))
        if n is None:
            if not terms:
                raise ValueError("cannot infer n from an empty vector")
            n = terms[0][0].n
        return cls(n, terms)

    def to_json(self) -> list[dict]:
        return [{"coef": c, "blocks": [list(b) for b in pi.blocks]} for pi, c in self]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: list[dict] | str, n: int | None = None) -> "NCVector":
        if isinstance(data, str):
            data = json.loads(data)
        terms = []
        for item in data:
            blocks = item["blocks"]
            size = n if n is not None else sum(len(b) for b in blocks)
            terms.append((SetPartition(blocks, n=size), item["coef"]))
        if n is None:
            if not terms:
                raise ValueError("cannot infer n from an empty vector")
            n = terms[0][0].n
        return cls(n, terms)


@dataclass(frozen=True)
class SignedPartition:
    sign: int
    partition: SetPartition

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def to_vector(self) -> NCVector:
        return NCVector.basis(self.partition, self.sign)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.partition}"


# ---------------------------------------------------------------------------
# Skein map

def _skein_terms(pi: SetPartition, i: int, full: bool) -> dict[SetPartition, int]:
    bi = pi.block_of(i)
    bj = pi.block_of(i + 1)
    a = [x for x in bi if x != i]
    b = [x for x in bj if x != i + 1]
    old = (bi, bj)
    out: dict[SetPartition, int] = {}

    def add(p: SetPartition, c: int):
        out[p] = out.get(p, 0) + c

    add(pi.swap(i, i + 1), 1)
    add(pi.replace_blocks(old, [(i, i + 1), a + b]), 1)
    # b (resp. a) of size one would leave a new singleton block
    if full or len(b) >= 2:
        add(pi.replace_blocks(old, [[i, i + 1] + a, b]), -1)
    if full or len(a) >= 2:
        add(pi.replace_blocks(old, [[i, i + 1] + b, a]), -1)
    return out


def _resolve(pi: SetPartition, index: int | None, full: bool) -> NCVector:
    cls = classify(pi)
    if not isinstance(cls, AlmostNoncrossing):
        raise ValueError(f"{pi} is not almost noncrossing ({cls})")
    i = min(cls.crossing_indices) if index is None else index
    if i not in cls.crossing_indices:
        raise ValueError(f"{pi} does not cross at {i}")
    return NCVector(pi.n, _skein_terms(pi, i, full))


def sigma(pi: SetPartition, index: int | None = None) -> NCVector:
    """Skein resolution of an almost noncrossing partition.

    ``index`` picks the crossing to resolve at (default: the smallest); the
    result does not depend on it.
    """
    return _resolve(pi, index, full=False)


def sigma_tilde(pi: SetPartition, index: int | None = None) -> NCVector:
    """Four-term resolution that keeps the terms creating new singletons."""
    return _resolve(pi, index, full=True)


# ---------------------------------------------------------------------------
# Star action on all set partitions

def rho(i: int, pi: SetPartition) -> SignedPartition:
    if not 1 <= i <= pi.n - 1:
        raise IndexError(f"rho_{i} undefined for n={pi.n}")
    sign = 1 if valence(pi, i) == 0 or valence(pi, i + 1) == 0 else -1
    return SignedPartition(sign, pi.swap(i, i + 1))


def star_act(w: Permutation, pi: SetPartition) -> SignedPartition:
    if w.n != pi.n:
        raise ValueError(f"size mismatch: permutation of {w.n}, partition of {pi.n}")
    sign = 1
    cur = pi
    for i in reversed(reduced_word(w)):
        r = rho(i, cur)
        sign *= r.sign
        cur = r.partition
    return SignedPartition(sign, cur)


# ---------------------------------------------------------------------------
# Action on V(n)

def _check_tau_args(i: int, pi: SetPartition):
    if not 1 <= i <= pi.n - 1:
        raise IndexError(f"s_{i} undefined for n={pi.n}")
    if not pi.is_noncrossing:
        raise ValueError(f"{pi} is not noncrossing")


@lru_cache(maxsize=None)
def _tau_terms(i: int, pi: SetPartition, full: bool) -> tuple[tuple[SetPartition, int], ...]:
    if pi.same_block(i, i + 1):
        return ((pi, -1),)
    swapped = pi.swap(i, i + 1)
    if swapped.is_noncrossing:
        return ((swapped, 1),)
    return tuple(_skein_terms(swapped, i, full).items())


def tau(i: int, pi: SetPartition) -> NCVector:
    """Action of ``s_i`` on the basis element ``pi``."""
    _check_tau_args(i, pi)
    return NCVector._raw(pi.n, dict(_tau_terms(i, pi, False)))


def tau_tilde(i: int, pi: SetPartition) -> NCVector:
    """Like :func:`tau` but resolving crossings with the full four-term relation."""
    _check_tau_args(i, pi)
    return NCVector._raw(pi.n, dict(_tau_terms(i, pi, True)))


def apply_generator(i: int, v: NCVector, full: bool = False) -> NCVector:
    if not 1 <= i <= v.n - 1:
        raise IndexError(f"s_{i} undefined for n={v.n}")
    acc: dict[SetPartition, int] = {}
    for pi, c in v.terms.items():
        for p, d in _tau_terms(i, pi, full):
            acc[p] = acc.get(p, 0) + c * d
    return NCVector._raw(v.n, acc)


def act_word(word: Iterable[int], v: NCVector, full: bool = False) -> NCVector:
    for i in reversed(list(word)):
        v = apply_generator(i, v, full)
    return v


def act_perm(w: Permutation, v: NCVector) -> NCVector:
    if w.n != v.n:
        raise ValueError(f"size mismatch: permutation of {w.n}, vector in V({v.n})")
    return act_word(reduced_word(w), v)


@lru_cache(maxsize=65536)
def _reduced_word(images: tuple[int, ...]) -> tuple[int, ...]:
    cur = list(images)
    letters: list[int] = []
    # Peel right descents: w = (w s_p) s_p with p the position of the largest misplaced value.
    for value in range(len(cur), 0, -1):
        p = cur.index(value) + 1
        while p < value:
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
            letters.append(p)
            p += 1
    return tuple(reversed(letters))


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word ``[i1, ..., ik]`` with ``s_i1 ... s_ik == w``."""
    return list(_reduced_word(w.images))


def word_to_perm(word: Iterable[int], n: int) -> Permutation:
    return Permutation.from_word(word, n)
