"""Resolution of arbitrary set partitions into the noncrossing span.

``project(pi)`` conjugates ``pi`` to its canonical interval representative,
records the sign picked up by the star action, and acts back in ``V(n)``.
"""

from __future__ import annotations

from typing import Iterator

from .core import (
    Permutation,
    SetPartition,
    all_permutations,
    apply_perm,
    conjugator_to_canonical,
    pi_lambda,
)
from .skein import NCVector, act_perm, star_act

__all__ = [
    "project",
    "project_via",
    "admissible_conjugators",
    "stabilizer_generators",
]


def project_via(pi: SetPartition, w: Permutation) -> NCVector:
    """``w^-1 . (w * pi)`` for any ``w`` making ``w(pi)`` noncrossing."""
    if w.n != pi.n:
        raise ValueError(f"size mismatch: permutation of {w.n}, partition of {pi.n}")
    image = apply_perm(w, pi)
    if not image.is_noncrossing:
        raise ValueError(f"{w} sends {pi} to the crossing partition {image}")
    signed = star_act(w, pi)
    return act_perm(w.inverse(), signed.to_vector())


def project(pi: SetPartition) -> NCVector:
    w, _ = conjugator_to_canonical(pi)
    return project_via(pi, w)


def admissible_conjugators(pi: SetPartition) -> Iterator[Permutation]:
    """Every ``w`` in S_n with ``w(pi)`` noncrossing.  Exhaustive; small n only."""
    for w in all_permutations(pi.n):
        if apply_perm(w, pi).is_noncrossing:
            yield w


def stabilizer_generators(lam) -> list[Permutation]:
    """Generators of the stabilizer of ``pi_lambda(lam)``.

    Adjacent transpositions inside a block, plus the swap of each pair of
    consecutive equal-size blocks that keeps the order within each block.
    """
    base = pi_lambda(lam)
    n = base.n
    gens = []
    for i in range(1, n):
        if base.same_block(i, i + 1):
            gens.append(Permutation.simple(i, n))
    for b1, b2 in zip(base.blocks, base.blocks[1:]):
        if len(b1) == len(b2):
            gens.append(Permutation.from_cycles(list(zip(b1, b2)), n))
    return gens
