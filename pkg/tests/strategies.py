"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from ncskein.core import Permutation, SetPartition


@st.composite
def set_partitions(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    labels = [0]
    for _ in range(n - 1):
        labels.append(draw(st.integers(0, max(labels) + 1)))
    return SetPartition.from_labels(labels)


@st.composite
def noncrossing_partitions(draw, min_n=1, max_n=8):
    # random stack walk: join an open block (closing later ones) or open a new one
    n = draw(st.integers(min_n, max_n))
    labels, stack, used = [0], [0], 1
    for _ in range(n - 1):
        choice = draw(st.integers(0, len(stack)))
        if choice == len(stack):
            labels.append(used)
            stack.append(used)
            used += 1
        else:
            labels.append(stack[choice])
            del stack[choice + 1:]
    return SetPartition.from_labels(labels)


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def words(draw, n, max_len=12):
    if n < 2:
        return []
    return draw(st.lists(st.integers(1, n - 1), max_size=max_len))


@st.composite
def integer_shapes(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    parts = []
    left = n
    while left:
        part = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(part)
        left -= part
    return tuple(parts)
