"""Set partitions, permutations and integer partitions.

Everything here is an immutable value.  Set partitions are stored in
canonical form (elements ascending inside a block, blocks ordered by their
minimum) so that equality, hashing and ordering are structural.

Permutations compose as functions: ``(u * v)(x) == u(v(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "ParseError",
    "SetPartition",
    "Permutation",
    "Noncrossing",
    "AlmostNoncrossing",
    "Crossing",
    "classify",
    "valence",
    "apply_perm",
    "rotate",
    "reflect",
    "enumerate_partitions",
    "integer_partitions",
    "conjugate",
    "pi_lambda",
    "conjugator_to_canonical",
    "dominance_leq",
    "validate_partition_shape",
]


class ParseError(ValueError):
    """Malformed text input.  ``position`` is a 0-based column, or None."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}: {text!r}\n    {' ' * (position + 1)}^"
        super().__init__(message)


class SetPartition:
    """A partition of ``{1..n}`` into nonempty blocks."""

    __slots__ = ("n", "blocks", "_labels", "_hash", "_nc", "_key")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        bl = [tuple(sorted(b)) for b in blocks]
        if any(len(b) == 0 for b in bl):
            raise ValueError("blocks must be nonempty")
        bl.sort()
        elements = [x for b in bl for x in b]
        if n is None:
            n = len(elements)
        if sorted(elements) != list(range(1, n + 1)):
            raise ValueError(f"blocks {bl} do not partition {{1..{n}}}")
        self.n = n
        self.blocks: tuple[tuple[int, ...], ...] = tuple(bl)
        labels = [0] * (n + 1)
        for j, b in enumerate(self.blocks):
            for x in b:
                labels[x] = j
        self._labels = labels
        self._hash = hash((n, self.blocks))
        self._nc = None
        self._key = None

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Build from a label sequence; ``labels[i]`` names the block of ``i + 1``."""
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(i)
        return cls(groups.values(), n=len(labels))

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(([i] for i in range(1, n + 1)), n=n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SetPartition":
        """Parse ``"1,3,4/2,7/5/6"``; block and element order are free."""
        stripped = text.strip()
        offset = text.find(stripped) if stripped else 0
        if not stripped:
            if n in (None, 0):
                return cls([], n=0)
            raise ParseError("empty partition", text, 0)
        for m in re.finditer(r"[^0-9,/\s]", stripped):
            raise ParseError(f"unexpected character {m.group()!r}", text, offset + m.start())
        blocks = []
        seen: dict[int, int] = {}
        pos = 0
        for chunk in stripped.split("/"):
            block = []
            cpos = pos
            for item in chunk.split(","):
                col = offset + cpos + (len(item) - len(item.lstrip()))
                token = item.strip()
                if not token:
                    raise ParseError("empty element", text, col)
                if not token.isdigit():
                    raise ParseError(f"bad element {token!r}", text, col)
                value = int(token)
                if value < 1:
                    raise ParseError("elements must be positive", text, col)
                if value in seen:
                    raise ParseError(f"element {value} repeated", text, col)
                seen[value] = col
                block.append(value)
                cpos += len(item) + 1
            blocks.append(block)
            pos += len(chunk) + 1
        size = max(seen) if n is None else n
        missing = sorted(set(range(1, size + 1)) - set(seen))
        if missing:
            raise ParseError(f"elements {missing} missing from ground set {{1..{size}}}", text, None)
        extra = [v for v in seen if v > size]
        if extra:
            raise ParseError(f"element {extra[0]} exceeds n={size}", text, seen[extra[0]])
        return cls(blocks, n=size)

    # value semantics -------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "SetPartition") -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> tuple:
        """Restricted growth string; the canonical enumeration order."""
        if self._key is None:
            self._key = (self.n, tuple(self._labels[1:]))
        return self._key

    def __repr__(self) -> str:
        return f"SetPartition({self})"

    def __str__(self) -> str:
        return "/".join(",".join(map(str, b)) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)

    def __getstate__(self):
        return (self.n, self.blocks)

    def __setstate__(self, state):
        n, blocks = state
        self.__init__(blocks, n=n)

    # queries ------------------------------------------------------------
    def block_of(self, i: int) -> tuple[int, ...]:
        """The block ``B_i`` containing ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside 1..{self.n}")
        return self.blocks[self._labels[i]]

    def same_block(self, i: int, j: int) -> bool:
        return self._labels[i] == self._labels[j]

    def label(self, i: int) -> int:
        return self._labels[i]

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def num_singletons(self) -> int:
        return sum(1 for b in self.blocks if len(b) == 1)

    @property
    def num_doubletons(self) -> int:
        return sum(1 for b in self.blocks if len(b) == 2)

    @property
    def shape(self) -> tuple[int, ...]:
        """Block sizes, weakly decreasing."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    @property
    def is_noncrossing(self) -> bool:
        if self._nc is None:
            self._nc = self._noncrossing()
        return self._nc

    def _noncrossing(self) -> bool:
        # A block may only be resumed when it is on top of the open-block stack.
        labels = self._labels
        last = {}
        for i in range(1, self.n + 1):
            last[labels[i]] = i
        stack: list[int] = []
        started: set[int] = set()
        for i in range(1, self.n + 1):
            b = labels[i]
            if b in started:
                if stack[-1] != b:
                    return False
            else:
                started.add(b)
                stack.append(b)
            if last[b] == i:
                stack.pop()
        return True

    def swap(self, i: int, j: int) -> "SetPartition":
        """Image under the transposition exchanging ``i`` and ``j``."""
        labels = self._labels[1:]
        labels[i - 1], labels[j - 1] = labels[j - 1], labels[i - 1]
        return SetPartition.from_labels(labels)

    def replace_blocks(self, old: Iterable[Sequence[int]], new: Iterable[Sequence[int]]) -> "SetPartition":
        drop = {tuple(sorted(b)) for b in old}
        kept = [b for b in self.blocks if b not in drop]
        if len(kept) != len(self.blocks) - len(drop):
            raise ValueError("replace_blocks: some old block is not a block")
        return SetPartition(kept + [list(b) for b in new], n=self.n)


class Permutation:
    """A bijection of ``{1..n}`` in one-line notation."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images
        self._hash = hash(images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition ``s_i = (i, i+1)``."""
        if not 1 <= i <= n - 1:
            raise IndexError(f"s_{i} not defined in S_{n}")
        return cls.transposition(i, i + 1, n)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"bad cycle {tuple(cyc)} for n={n}")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def long_cycle(cls, n: int) -> "Permutation":
        """``c = (1, 2, ..., n)``."""
        return cls(list(range(2, n + 1)) + [1] if n else [])

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """``w0``: ``i -> n + 1 - i``."""
        return cls(range(n, 0, -1))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "Permutation":
        """Product ``s_{i1} s_{i2} ... s_{ik}``."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse one-line ``"5 1 2 6 3 8 4 7"`` (or ``51263847`` when n < 10) or cycles ``"(1,5,3)(2,6)"``."""
        s = text.strip()
        if s.startswith("(") or s == "":
            cycles = []
            pos = text.find(s) if s else 0
            rest = s
            consumed = 0
            while rest:
                m = re.match(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)\s*", rest)
                if not m:
                    raise ParseError("malformed cycle", text, pos + consumed)
                if m.group(1):
                    cycles.append([int(t) for t in re.split(r"\s*,\s*", m.group(1))])
                consumed += m.end()
                rest = rest[m.end():]
            biggest = max((x for c in cycles for x in c), default=0)
            size = biggest if n is None else n
            if biggest > size:
                raise ParseError(f"cycle entry {biggest} exceeds n={size}", text, None)
            try:
                return cls.from_cycles(cycles, size)
            except ValueError as exc:
                raise ParseError(str(exc), text, None) from None
        m = re.search(r"[^0-9\s,]", s)
        if m:
            raise ParseError(f"unexpected character {m.group()!r}", text, text.find(s) + m.start())
        tokens = re.split(r"[\s,]+", s)
        if len(tokens) == 1 and len(s) > 1:
            tokens = list(s)
        try:
            perm = cls(int(t) for t in tokens)
        except ValueError as exc:
            raise ParseError(str(exc), text, None) from None
        if n is not None and perm.n != n:
            raise ParseError(f"permutation has size {perm.n}, expected {n}", text, None)
        return perm

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.images[y - 1] for y in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.n)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({' '.join(map(str, self.images))})"

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def __getstate__(self):
        return self.images

    def __setstate__(self, state):
        self.__init__(state)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()"

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if im[a] > im[b])

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles(include_fixed=True))) % 2 else 1

    def is_identity(self) -> bool:
        return all(i == y for i, y in enumerate(self.images, start=1))


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in _itertools_permutations(range(1, n + 1)):
        yield Permutation(images)


# Crossing classification -------------------------------------------------

@dataclass(frozen=True)
class Noncrossing:
    def __str__(self) -> str:
        return "noncrossing"


@dataclass(frozen=True)
class AlmostNoncrossing:
    crossing_indices: frozenset[int]

    def __str__(self) -> str:
        return "almost noncrossing at " + ",".join(map(str, sorted(self.crossing_indices)))


@dataclass(frozen=True)
class Crossing:
    def __str__(self) -> str:
        return "crossing"


CrossingClass = Noncrossing | AlmostNoncrossing | Crossing


def crossing_indices(pi: SetPartition) -> frozenset[int]:
    """Indices ``i`` with ``s_i(pi)`` noncrossing (meaningful when pi crosses)."""
    return frozenset(i for i in range(1, pi.n) if pi.swap(i, i + 1).is_noncrossing)


def classify(pi: SetPartition) -> CrossingClass:
    if pi.is_noncrossing:
        return Noncrossing()
    idx = crossing_indices(pi)
    if idx:
        return AlmostNoncrossing(idx)
    return Crossing()


def valence(pi: SetPartition, i: int) -> int:
    size = len(pi.block_of(i))
    return 0 if size == 1 else 1 if size == 2 else 2


def apply_perm(w: Permutation, pi: SetPartition) -> SetPartition:
    if w.n != pi.n:
        raise ValueError(f"size mismatch: permutation of {w.n}, partition of {pi.n}")
    return SetPartition(([w(x) for x in b] for b in pi.blocks), n=pi.n)


def rotate(pi: SetPartition, times: int = 1) -> SetPartition:
    """Rotation ``i -> i + times (mod n)``."""
    n = pi.n
    if n == 0:
        return pi
    return SetPartition(([(x - 1 + times) % n + 1 for x in b] for b in pi.blocks), n=n)


def reflect(pi: SetPartition) -> SetPartition:
    n = pi.n
    return SetPartition(([n + 1 - x for x in b] for b in pi.blocks), n=n)


# Enumeration -----------------------------------------------------------------

def _all_rgs(n: int) -> Iterator[list[int]]:
    labels = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield labels
            return
        for lab in range(used + 1):
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    if n == 0:
        yield []
        return
    labels[0] = 0
    yield from rec(1, 1)


def _noncrossing_rgs(n: int, max_blocks: int | None) -> Iterator[list[int]]:
    # Joining an open block closes every block opened after it.
    labels = [0] * n

    def rec(i: int, used: int, stack: tuple[int, ...]):
        if i == n:
            yield labels
            return
        for depth, lab in enumerate(stack):
            labels[i] = lab
            yield from rec(i + 1, used, stack[: depth + 1])
        if max_blocks is None or used < max_blocks:
            labels[i] = used
            yield from rec(i + 1, used + 1, stack + (used,))

    if n == 0:
        yield []
        return
    labels[0] = 0
    yield from rec(1, 1, (0,))


def enumerate_partitions(
    n: int,
    k: int | None = None,
    s: int | None = None,
    noncrossing_only: bool = False,
) -> list[SetPartition]:
    """All set partitions of ``{1..n}`` with optional block / singleton counts, in canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    source = _noncrossing_rgs(n, k) if noncrossing_only else _all_rgs(n)
    out = []
    for labels in source:
        if k is not None and (max(labels, default=-1) + 1) != k:
            continue
        pi = SetPartition.from_labels(labels)
        if s is not None and pi.num_singletons != s:
            continue
        out.append(pi)
    out.sort()
    return out


# Integer partitions ----------------------------------------------------------

def validate_partition_shape(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a weakly decreasing sequence of positive integers")
    return lam


def integer_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff every prefix sum of ``lam`` is at most that of ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{tuple(lam)}| != |{tuple(mu)}|")
    a = b = 0
    for j in range(max(len(lam), len(mu))):
        a += lam[j] if j < len(lam) else 0
        b += mu[j] if j < len(mu) else 0
        if a > b:
            return False
    return True


def pi_lambda(lam: Sequence[int]) -> SetPartition:
    """Consecutive intervals of lengths ``lam[0], lam[1], ...``."""
    lam = validate_partition_shape(lam)
    blocks = []
    start = 1
    for part in lam:
        blocks.append(range(start, start + part))
        start += part
    return SetPartition(blocks, n=start - 1)


def conjugator_to_canonical(pi: SetPartition) -> tuple[Permutation, tuple[int, ...]]:
    """A permutation ``w`` with ``w(pi) == pi_lambda(lam)``, and ``lam``.

    Blocks are sent in order (size descending, then minimum ascending) onto the
    consecutive intervals, each order-preservingly.
    """
    ordered = sorted(pi.blocks, key=lambda b: (-len(b), b[0]))
    images = [0] * pi.n
    nxt = 1
    for b in ordered:
        for x in b:
            images[x - 1] = nxt
            nxt += 1
    return Permutation(images), pi.shape
