"""Exhaustive verification sweeps.

Every sweep returns a :class:`RunReport` whose rows are in a fixed order.
Sweeps that take ``jobs`` shard independent tasks over worker processes;
``executor.map`` keeps the row order, so the report does not depend on it.
"""

from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from math import factorial
from typing import Callable, Iterable, Sequence

from .core import (
    AlmostNoncrossing,
    Noncrossing,
    Permutation,
    SetPartition,
    apply_perm,
    classify,
    conjugate,
    dominance_leq,
    enumerate_partitions,
    integer_partitions,
    pi_lambda,
    reflect,
    rotate,
)
from .projection import project, project_via, stabilizer_generators
from .qcsp import (
    FAMILIES,
    catalan_summation,
    chu_vandermonde_check,
    flag_fake_degree_identity,
    narayana_summation,
    springer_check,
    verify_csp,
)
from .report import RunReport
from .representation import (
    _basis,
    apply_symmetrizer,
    b_statistic,
    character_of_class,
    flag_shape,
    hook_dim,
    mn_character,
    pieri_induce,
    representing_matrix,
)
from .skein import (
    NCVector,
    SignedPartition,
    act_perm,
    act_word,
    apply_generator,
    rho,
    sigma,
    star_act,
    tau,
    tau_tilde,
)

__all__ = [
    "coxeter_check",
    "rho_coxeter_check",
    "sigma_check",
    "grading_check",
    "rotation_check",
    "reflection_check",
    "affine_transposition_check",
    "local_symmetry_check",
    "local_property_check",
    "projection_check",
    "example_conjugators_check",
    "stabilizer_check",
    "isotype_check",
    "decomposition",
    "symmetrizer_check",
    "dominance_check",
    "tilde_quotient_check",
    "dimension_check",
    "csp_sweep",
    "springer_sweep",
    "chu_sweep",
    "pi_zero",
    "pi_one",
]


def _map(fn: Callable, tasks: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=1))


def _collect(report: RunReport, results: Iterable[list[dict]]) -> RunReport:
    for rows in results:
        for row in rows:
            ok = row.pop("ok")
            report.add(ok, **row)
    return report.finish()


def _first(bad: list) -> str:
    return str(bad[0]) if bad else ""


# ---------------------------------------------------------------------------
# Coxeter relations

def _relations(n: int) -> list[tuple[str, int, int]]:
    out = []
    for i in range(1, n):
        out.append(("square", i, i))
        for j in range(i + 1, n):
            out.append(("braid" if j == i + 1 else "commute", i, j))
    return out


def _relation_words(kind: str, i: int, j: int) -> tuple[list[int], list[int]]:
    if kind == "square":
        return [i, i], []
    if kind == "braid":
        return [i, j, i], [j, i, j]
    return [i, j], [j, i]


def _tau_relation(task) -> list[dict]:
    n, kind, i, j = task
    left, right = _relation_words(kind, i, j)
    bad = []
    basis = _basis(n, None, None)
    for pi in basis:
        e = NCVector.basis(pi)
        if act_word(left, e) != act_word(right, e):
            bad.append(pi)
    return [dict(ok=not bad, n=n, relation=kind, i=i, j=j, cases=len(basis), counterexample=_first(bad))]


def coxeter_check(max_n: int = 8, jobs: int = 1, min_n: int = 2) -> RunReport:
    """``tau_i`` squares to 1, far generators commute, neighbours braid, on all of NC(n)."""
    report = RunReport("verify-coxeter", {"max_n": max_n})
    tasks = [(n, *rel) for n in range(min_n, max_n + 1) for rel in _relations(n)]
    return _collect(report, _map(_tau_relation, tasks, jobs))


def _rho_word(word: Sequence[int], pi: SetPartition) -> SignedPartition:
    sign, cur = 1, pi
    for i in reversed(word):
        r = rho(i, cur)
        sign *= r.sign
        cur = r.partition
    return SignedPartition(sign, cur)


def _rho_relation(task) -> list[dict]:
    n, kind, i, j = task
    left, right = _relation_words(kind, i, j)
    parts = enumerate_partitions(n)
    bad = [pi for pi in parts if _rho_word(left, pi) != _rho_word(right, pi)]
    return [dict(ok=not bad, n=n, relation=kind, i=i, j=j, cases=len(parts), counterexample=_first(bad))]


def rho_coxeter_check(max_n: int = 7, jobs: int = 1) -> RunReport:
    """The same relations for the signed action on all set partitions."""
    report = RunReport("verify-rho-coxeter", {"max_n": max_n})
    tasks = [(n, *rel) for n in range(2, max_n + 1) for rel in _relations(n)]
    return _collect(report, _map(_rho_relation, tasks, jobs))


def _sigma_task(n: int) -> list[dict]:
    checked, bad, multi = 0, [], 0
    for pi in enumerate_partitions(n):
        cls = classify(pi)
        if not isinstance(cls, AlmostNoncrossing):
            continue
        checked += 1
        idx = sorted(cls.crossing_indices)
        multi += len(idx) > 1
        first = sigma(pi, idx[0])
        if any(sigma(pi, i) != first for i in idx[1:]):
            bad.append(pi)
    return [dict(ok=not bad, n=n, almost_noncrossing=checked, several_indices=multi, counterexample=_first(bad))]


def sigma_check(max_n: int = 7, jobs: int = 1) -> RunReport:
    """Resolving an almost noncrossing partition at any crossing index gives the same vector."""
    report = RunReport("verify-sigma", {"max_n": max_n})
    return _collect(report, _map(_sigma_task, list(range(2, max_n + 1)), jobs))


def _grading_task(n: int) -> list[dict]:
    bad = []
    for pi in _basis(n, None, None):
        for i in range(1, n):
            if any((p.num_blocks, p.num_singletons) != (pi.num_blocks, pi.num_singletons) for p in tau(i, pi).terms):
                bad.append((i, pi))
    return [dict(ok=not bad, n=n, counterexample=_first(bad))]


def grading_check(max_n: int = 8, jobs: int = 1) -> RunReport:
    """Every term of ``tau(i, pi)`` keeps the block and singleton counts of ``pi``."""
    report = RunReport("verify-grading", {"max_n": max_n})
    return _collect(report, _map(_grading_task, list(range(2, max_n + 1)), jobs))


# ---------------------------------------------------------------------------
# Rotation and reflection

def _vector_map(fn: Callable[[SetPartition], SetPartition], v: NCVector) -> NCVector:
    return NCVector._raw(v.n, {fn(pi): c for pi, c in v.terms.items()})


def pi_zero(n: int, k: int) -> SetPartition:
    """``{1, 2k, 2k+1, ..., n}, {2, 2k-1}, ..., {k, k+1}``."""
    blocks = [[1] + list(range(2 * k, n + 1))] + [[j, 2 * k + 1 - j] for j in range(2, k + 1)]
    return SetPartition(blocks, n=n)


def pi_one(n: int, k: int) -> SetPartition:
    """``{1, ..., n-2k+2}`` followed by consecutive pairs."""
    head = n - 2 * k + 2
    blocks = [list(range(1, head + 1))] + [[j, j + 1] for j in range(head + 1, n, 2)]
    return SetPartition(blocks, n=n)


def _signed_matrix_rows(n: int, k: int, w: Permutation, image: Callable, sign: int) -> dict:
    basis = _basis(n, k, 0)
    index = {pi: j for j, pi in enumerate(basis)}
    got = representing_matrix(w, n, k, 0)
    expected = [[0] * len(basis) for _ in basis]
    for j, pi in enumerate(basis):
        expected[index[image(pi)]][j] = sign
    return dict(ok=[list(r) for r in got.rows] == expected, n=n, k=k, sign=sign, dimension=len(basis))


def _rotation_task(task) -> list[dict]:
    n, k = task
    sign = (-1) ** (n + 1)
    c = Permutation.long_cycle(n)
    rows = [dict(_signed_matrix_rows(n, k, c, rotate, sign), case="matrix")]
    for name, pi in (("pi0", pi_zero(n, k)), ("pi1", pi_one(n, k))):
        got = act_perm(c, NCVector.basis(pi))
        rows.append(dict(ok=got == NCVector.basis(rotate(pi), sign), n=n, k=k, sign=sign, case=name))
    return rows


def _flag_pairs(max_n: int, min_n: int = 2) -> list[tuple[int, int]]:
    return [(n, k) for n in range(min_n, max_n + 1) for k in range(1, n // 2 + 1)]


def rotation_check(max_n: int = 8, jobs: int = 1, only_n: int | None = None) -> RunReport:
    """The long cycle acts on ``V(n, k, 0)`` as ``(-1)^(n+1)`` times rotation."""
    report = RunReport("verify-rotation", ({"max_n": max_n} if only_n is None else {"n": only_n}))
    pairs = _flag_pairs(max_n) if only_n is None else _flag_pairs(only_n, only_n)
    return _collect(report, _map(_rotation_task, pairs, jobs))


def _reflection_task(task) -> list[dict]:
    n, k = task
    return [_signed_matrix_rows(n, k, Permutation.longest(n), reflect, (-1) ** (n // 2))]


def reflection_check(max_n: int = 8, jobs: int = 1, only_n: int | None = None) -> RunReport:
    """The longest element acts on ``V(n, k, 0)`` as ``(-1)^floor(n/2)`` times reflection."""
    report = RunReport("verify-reflection", ({"max_n": max_n} if only_n is None else {"n": only_n}))
    pairs = _flag_pairs(max_n) if only_n is None else _flag_pairs(only_n, only_n)
    return _collect(report, _map(_reflection_task, pairs, jobs))


def affine_formula(pi: SetPartition) -> tuple[str, NCVector]:
    """The three-case value of the transposition ``(1, n)`` on ``pi``, computed without acting.

    Conjugating by the rotation ``r: i -> i + 1`` turns ``(1, n)`` into
    ``s_(n-1)``; the rotation signs cancel, leaving ``r(sigma(r^-1(s(pi))))``.
    """
    n = pi.n
    if pi.same_block(1, n):
        return "blockmates", NCVector.basis(pi, -1)
    swapped = pi.swap(1, n)
    if swapped.is_noncrossing:
        return "noncrossing", NCVector.basis(swapped)
    resolved = sigma(rotate(swapped, -1), n - 1)
    return "resolved", _vector_map(rotate, resolved)


def _affine_task(task) -> list[dict]:
    n, k = task
    t = Permutation.transposition(1, n, n)
    counts = {"blockmates": 0, "noncrossing": 0, "resolved": 0}
    bad = []
    for pi in _basis(n, k, 0):
        case, expected = affine_formula(pi)
        counts[case] += 1
        if act_perm(t, NCVector.basis(pi)) != expected:
            bad.append(pi)
    return [dict(ok=not bad, n=n, k=k, **counts, counterexample=_first(bad))]


def affine_transposition_check(max_n: int = 8, jobs: int = 1) -> RunReport:
    report = RunReport("verify-affine", {"max_n": max_n})
    return _collect(report, _map(_affine_task, _flag_pairs(max_n, 3), jobs))


# ---------------------------------------------------------------------------
# Local symmetry and the local property

def _orbit_table(theta: SetPartition) -> dict[Permutation, tuple[NCVector, SignedPartition]]:
    """``w -> (w . theta, w * theta)`` for every ``w``, by breadth-first search over generators."""
    n = theta.n
    gens = [Permutation.simple(i, n) for i in range(1, n)]
    start = Permutation.identity(n)
    table = {start: (NCVector.basis(theta), SignedPartition(1, theta))}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        vec, star = table[w]
        for i, g in enumerate(gens, start=1):
            u = g * w
            if u not in table:
                r = rho(i, star.partition)
                table[u] = (apply_generator(i, vec), SignedPartition(star.sign * r.sign, r.partition))
                queue.append(u)
    return table


def _local_symmetry_task(n: int) -> list[dict]:
    pairs, bad = 0, []
    for pi in _basis(n, None, None):
        for w, (vec, star) in _orbit_table(pi).items():
            if star.partition.is_noncrossing:
                pairs += 1
                if vec != star.to_vector():
                    bad.append((str(w), pi))
    return [dict(ok=not bad, n=n, pairs=pairs, counterexample=_first(bad))]


def local_symmetry_check(max_n: int = 6, jobs: int = 1) -> RunReport:
    """``w . pi = w * pi`` whenever ``w(pi)`` is noncrossing."""
    report = RunReport("verify-local-symmetry", {"max_n": max_n})
    return _collect(report, _map(_local_symmetry_task, list(range(1, max_n + 1)), jobs))


def _block_intervals(pi: SetPartition) -> list[tuple[int, int]]:
    """Intervals ``[i, j]`` that are unions of blocks, with ``j > i``."""
    out = []
    for i in range(1, pi.n + 1):
        for j in range(i + 1, pi.n + 1):
            if all(all(i <= x <= j for x in b) for b in pi.blocks if any(i <= x <= j for x in b)):
                out.append((i, j))
    return out


def _restrict(pi: SetPartition, i: int, j: int) -> SetPartition:
    return SetPartition(([x - i + 1 for x in b] for b in pi.blocks if i <= b[0] <= j), n=j - i + 1)


def local_property_check(max_n: int = 8, trials: int = 200, seed: int = 0) -> RunReport:
    """Acting inside an interval made of whole blocks only sees that interval.

    Random noncrossing ``pi``, interval ``[i, j]`` and ``w`` supported on it:
    the terms of ``w . pi`` agree with ``pi`` outside ``[i, j]`` and, restricted
    and shifted down, reproduce the action on the small partition.
    """
    rng = random.Random(seed)
    report = RunReport("verify-local-property", {"max_n": max_n, "trials": trials, "seed": seed})
    for _ in range(trials):
        n = rng.randint(2, max_n)
        pi = rng.choice(_basis(n, None, None))
        intervals = _block_intervals(pi)
        i, j = rng.choice(intervals)
        m = j - i + 1
        small = list(range(1, m + 1))
        rng.shuffle(small)
        images = list(range(1, n + 1))
        images[i - 1 : j] = [x + i - 1 for x in small]
        w = Permutation(images)
        big = act_perm(w, NCVector.basis(pi))
        piece = act_perm(Permutation(small), NCVector.basis(_restrict(pi, i, j)))
        outside = [b for b in pi.blocks if not i <= b[0] <= j]
        lifted = {}
        for p, c in piece.terms.items():
            blocks = [[x + i - 1 for x in b] for b in p.blocks] + [list(b) for b in outside]
            lifted[SetPartition(blocks, n=n)] = c
        ok = big == NCVector._raw(n, lifted)
        report.add(ok, n=n, partition=str(pi), interval=[i, j], w=str(w))
    return report.finish()


# ---------------------------------------------------------------------------
# Projection

def _projection_task(n: int) -> list[dict]:
    tables = {theta: _orbit_table(theta) for theta in _basis(n, None, None)}
    counts = dict(noncrossing=0, almost=0, crossing=0)
    bad_nc, bad_anc, bad_eq, bad_conj = [], [], [], []
    paths = 0
    for pi in enumerate_partitions(n):
        p = project(pi)
        cls = classify(pi)
        if isinstance(cls, Noncrossing):
            counts["noncrossing"] += 1
            if p != NCVector.basis(pi):
                bad_nc.append(pi)
        elif isinstance(cls, AlmostNoncrossing):
            counts["almost"] += 1
            if p != -sigma(pi):
                bad_anc.append(pi)
        else:
            counts["crossing"] += 1
        for i in range(1, n):
            r = rho(i, pi)
            if project(r.partition) * r.sign != apply_generator(i, p):
                bad_eq.append((i, pi))
        # w^-1 . (w * pi) for every admissible w, read off the orbit tables of w(pi)
        for w in _admissible(pi):
            paths += 1
            star = star_act(w, pi)
            vec, _ = tables[star.partition][w.inverse()]
            if vec * star.sign != p:
                bad_conj.append((str(w), pi))
    return [
        dict(ok=not bad_nc, n=n, check="identity on noncrossing", cases=counts["noncrossing"], counterexample=_first(bad_nc)),
        dict(ok=not bad_anc, n=n, check="minus sigma on almost noncrossing", cases=counts["almost"], counterexample=_first(bad_anc)),
        dict(ok=not bad_eq, n=n, check="equivariance", cases=sum(counts.values()) * (n - 1), counterexample=_first(bad_eq)),
        dict(ok=not bad_conj, n=n, check="conjugator independence", cases=paths, counterexample=_first(bad_conj)),
    ]


def _admissible(pi: SetPartition):
    from .core import all_permutations

    for w in all_permutations(pi.n):
        if apply_perm(w, pi).is_noncrossing:
            yield w


def projection_check(max_n: int = 6, jobs: int = 1) -> RunReport:
    """Identity on NC(n), minus sigma on ANC(n), equivariance and conjugator independence on all of Pi(n)."""
    report = RunReport("verify-projection", {"max_n": max_n})
    _collect(report, _map(_projection_task, list(range(1, max_n + 1)), jobs))
    report.extend(example_conjugators_check())
    report.extend(stabilizer_check(max_n + 1))
    return report.finish()


EXAMPLE_PARTITION = "1,4,8/2,3,5,7/6"
EXAMPLE_SHORT = [2, 3]
EXAMPLE_LONG = "51263847"


def example_conjugators_check() -> RunReport:
    """Two conjugators for the same partition of 8 give the same projection."""
    pi = SetPartition.parse(EXAMPLE_PARTITION)
    short = Permutation.from_word(EXAMPLE_SHORT, 8)
    long = Permutation.parse(EXAMPLE_LONG)
    via_short = project_via(pi, short)
    via_long = project_via(pi, long)
    # the short path by hand: w(pi) is noncrossing and w^-1 = s_3 s_2
    star = star_act(short, pi)
    by_hand = act_word(list(reversed(EXAMPLE_SHORT)), star.to_vector())
    report = RunReport("example-conjugators", {"partition": EXAMPLE_PARTITION})
    report.add(
        via_short == via_long == by_hand == project(pi),
        n=8,
        check="two-path agreement",
        cases=len(via_short),
        image=str(star.partition),
        sign=star.sign,
    )
    return report.finish()


def stabilizer_check(max_n: int = 7) -> RunReport:
    """Generators of the stabilizer of ``pi_lambda`` act with the same sign in both actions."""
    report = RunReport("verify-stabilizer", {"max_n": max_n})
    for n in range(1, max_n + 1):
        bad, count = [], 0
        for lam in integer_partitions(n):
            base = pi_lambda(lam)
            for g in stabilizer_generators(lam):
                count += 1
                star = star_act(g, base)
                if star.partition != base or act_perm(g, NCVector.basis(base)) != star.to_vector():
                    bad.append((lam, str(g)))
        report.add(not bad, n=n, check="stabilizer signs", cases=count, counterexample=_first(bad))
    return report.finish()


# ---------------------------------------------------------------------------
# Isomorphism types

def _base_shape(n: int, k: int, s: int) -> tuple[int, ...]:
    m = k - s
    return tuple(x for x in (m, m) if x) + (1,) * (n - 2 * k + s)


def decomposition(n: int, k: int, s: int) -> list[tuple[int, ...]]:
    """Irreducible constituents of ``V(n, k, s)`` predicted by induction and the Pieri rule."""
    if not 0 <= s <= k or 2 * (k - s) > n - s or (k == s) != (n == s):
        raise ValueError(f"V({n}, {k}, {s}) is the zero space")
    return pieri_induce(_base_shape(n, k, s), s)


def valid_triples(max_n: int) -> list[tuple[int, int, int]]:
    out = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for s in range(k + 1):
                if 2 * (k - s) <= n - s and (k == s) == (n == s):
                    out.append((n, k, s))
    return out


def _isotype_task(task) -> list[dict]:
    n, k, s = task
    shapes = decomposition(n, k, s)
    rows = []
    for mu in integer_partitions(n):
        trace = character_of_class(mu, n, k, s)
        predicted = sum(mn_character(lam, mu) for lam in shapes)
        rows.append(dict(ok=trace == predicted, n=n, k=k, s=s, cycle_type=list(mu), trace=trace, predicted=predicted))
    return rows


def isotype_check(n: int | None = None, k: int | None = None, s: int | None = None, max_n: int = 8, jobs: int = 1) -> RunReport:
    """Per-class traces of ``V(n, k, s)`` against the summed irreducible characters."""
    if n is not None and k is not None and s is not None:
        triples = [(n, k, s)]
        params = {"n": n, "k": k, "s": s}
    else:
        triples = [t for t in valid_triples(max_n) if (n is None or t[0] == n) and (k is None or t[1] == k) and (s is None or t[2] == s)]
        params = {"max_n": max_n, "n": n, "k": k, "s": s}
    report = RunReport("verify-isotype", params)
    if len(triples) == 1:
        shapes = decomposition(*triples[0])
        report.summary = {"decomposition": " + ".join("(" + ",".join(map(str, x)) + ")" for x in shapes)}
    return _collect(report, _map(_isotype_task, triples, jobs))


# ---------------------------------------------------------------------------
# Young symmetrizers

def symmetrizer_check(max_n: int = 8) -> RunReport:
    """Coefficient ``(k!)^2`` on ``pi0`` and the eigenvalue of ``pi1`` under a column antisymmetrizer."""
    report = RunReport("verify-symmetrizers", {"max_n": max_n})
    for n, k in _flag_pairs(max_n):
        p0 = pi_zero(n, k)
        coef = apply_symmetrizer(flag_shape(n, k), 1, NCVector.basis(p0))[p0]
        report.add(coef == factorial(k) ** 2, check="row symmetrizer on pi0", n=n, k=k, value=coef, expected=factorial(k) ** 2)
    for n, k in _flag_pairs(max_n):
        if n == 2 * k or k < 2:
            continue
        p1 = pi_one(n, k)
        shape = (n - 2 * k + 2,) + (2,) * (k - 2) + (1,)
        expected = 2 ** (k - 2) * factorial(n - 2 * k + 2)
        got = apply_symmetrizer(shape, -1, NCVector.basis(p1))
        report.add(got == NCVector.basis(p1, expected), check="column antisymmetrizer on pi1", n=n, k=k,
                   value=got[p1], expected=expected)
    return report.finish()


def _kills(shape: tuple[int, ...], sign: int, n: int, k: int) -> bool:
    return all(not apply_symmetrizer(shape, sign, NCVector.basis(pi)) for pi in _basis(n, k, 0))


def dominance_check(max_n: int = 7, jobs: int = 1) -> RunReport:
    """On ``V(n, k, 0)``: ``[S_mu]_+`` vanishes iff ``mu`` is not dominated by the flag shape,
    and ``[S_mu']_-`` vanishes iff ``mu`` does not dominate it."""
    report = RunReport("verify-dominance", {"max_n": max_n})
    return _collect(report, _map(_dominance_task, _flag_pairs(max_n), jobs))


def _dominance_task(task) -> list[dict]:
    n, k = task
    lam = flag_shape(n, k)
    rows = []
    for mu in integer_partitions(n):
        plus = _kills(mu, 1, n, k)
        rows.append(dict(ok=plus == (not dominance_leq(mu, lam)), n=n, k=k, shape=list(mu), sign="+",
                         strictly_dominates=dominance_leq(lam, mu) and mu != lam, kills=plus))
        minus = _kills(conjugate(mu), -1, n, k)
        rows.append(dict(ok=minus == (not dominance_leq(lam, mu)), n=n, k=k, shape=list(mu), sign="-",
                         strictly_dominates=dominance_leq(lam, mu) and mu != lam, kills=minus))
    return rows


# ---------------------------------------------------------------------------
# The four-term variant, dimensions

def tilde_quotient_check(max_n: int = 6) -> RunReport:
    """The four-term action only adds singletons, and modulo more singletons it is the usual action."""
    report = RunReport("verify-tilde-quotient", {"max_n": max_n})
    for n in range(2, max_n + 1):
        bad = []
        for pi in _basis(n, None, None):
            for i in range(1, n):
                full = tau_tilde(i, pi)
                s = pi.num_singletons
                if any(p.num_blocks != pi.num_blocks or p.num_singletons < s for p in full.terms):
                    bad.append((i, pi))
                    continue
                top = NCVector._raw(n, {p: c for p, c in full.terms.items() if p.num_singletons == s})
                if top != tau(i, pi):
                    bad.append((i, pi))
        report.add(not bad, n=n, counterexample=_first(bad))
    return report.finish()


def dimension_check(max_n: int = 12) -> RunReport:
    """``|NC(n, k, 0)|`` equals the hook length count of the flag shape, and the b statistic formula."""
    report = RunReport("verify-dimensions", {"max_n": max_n})
    for n, k in _flag_pairs(max_n):
        lam = flag_shape(n, k)
        size = len(_basis(n, k, 0)) if n <= 10 else len(enumerate_partitions(n, k, 0, noncrossing_only=True))
        b_closed = (n - k) + (n - 2 * k) * (n - 2 * k + 1) // 2
        report.add(size == hook_dim(lam) and b_statistic(lam) == b_closed, n=n, k=k, count=size,
                   hook_dim=hook_dim(lam), b=b_statistic(lam), b_closed=b_closed)
    return report.finish()


# ---------------------------------------------------------------------------
# Cyclic sieving sweeps

def _csp_ks(family: str, n: int) -> list[int | None]:
    if family == "catalan":
        return [None]
    if family == "flag":
        return list(range(1, n // 2 + 1))
    return list(range(0, n + 1))


def _csp_task(task) -> list[dict]:
    family, n, k = task
    r = verify_csp(family, n, k)
    return [dict(row, family=family, n=n, k=k) for row in r.rows]


def csp_sweep(max_n: int = 10, families: Sequence[str] = FAMILIES, jobs: int = 1) -> RunReport:
    report = RunReport("verify-csp", {"max_n": max_n, "families": list(families)})
    tasks = [(f, n, k) for f in families for n in range(1, max_n + 1) for k in _csp_ks(f, n)]
    return _collect(report, _map(_csp_task, tasks, jobs))


def springer_sweep(max_n: int = 8) -> RunReport:
    """Character values at cycle powers against fake degrees at roots of unity, for flag shapes."""
    report = RunReport("springer-check", {"max_n": max_n})
    for n, k in _flag_pairs(max_n):
        lam = flag_shape(n, k)
        report.extend(springer_check(lam), shape=list(lam))
        report.add(flag_fake_degree_identity(n, k), shape=list(lam), cycle="fake degree vs flag polynomial")
    return report.finish()


def chu_sweep(max_m: int = 8, max_sum_n: int = 10) -> RunReport:
    """q-Chu-Vandermonde for ``m, n <= max_m`` and both summation identities for ``n <= max_sum_n``."""
    report = RunReport("chu-check", {"max_m": max_m, "max_sum_n": max_sum_n})
    for m in range(max_m + 1):
        for n in range(max_m + 1):
            bad = [k for k in range(m + n + 1) if not chu_vandermonde_check(m, n, k)]
            report.add(not bad, identity="chu-vandermonde", m=m, n=n, cases=m + n + 1, counterexample=_first(bad))
    for n in range(1, max_sum_n + 1):
        total, target = catalan_summation(n)
        report.add(total == target, identity="catalan summation", n=n)
        for k in range(n + 1):
            total, target = narayana_summation(n, k)
            report.add(total == target, identity="narayana summation", n=n, k=k)
    return report.finish()
