"""Command line entry point: ``ncskein <command> ...``.

Exit status is 0 on success or PASS, 1 on a failed verification and 2 on
bad usage or unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import qcsp, tl, verify
from .core import ParseError, Permutation, SetPartition, classify, enumerate_partitions, integer_partitions, valence
from .projection import admissible_conjugators, project, project_via
from .qpoly import eval_at_root
from .report import RunReport
from .representation import (
    character_of_class,
    class_size,
    inner_product,
    mn_character,
    representing_matrix,
)
from .skein import NCVector, act_perm, act_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _emit_vector(v: NCVector, args) -> str:
    return v.dumps() if args.json else (v.to_text() or "0")


# ---------------------------------------------------------------------------
# Ad-hoc computations

def cmd_resolve(args):
    pi = SetPartition.parse(args.partition)
    if args.via:
        v = project_via(pi, Permutation.parse(args.via, pi.n))
    else:
        v = project(pi)
    if not args.check_all_paths:
        return _emit_vector(v, args)
    report = RunReport("resolve", {"partition": str(pi)})
    for w in admissible_conjugators(pi):
        report.add(project_via(pi, w) == v, w=str(w), terms=len(v))
    report.summary = {"expansion": v.to_text()}
    return report.finish()


def cmd_act(args):
    pi = SetPartition.parse(args.partition)
    if args.word:
        word = _ints(args.element)
        if any(not 1 <= i < pi.n for i in word):
            raise UsageError(f"word letters must lie in 1..{pi.n - 1}")
        v = act_word(word, NCVector.basis(pi))
    else:
        v = act_perm(Permutation.parse(args.element, pi.n), NCVector.basis(pi))
    return _emit_vector(v, args)


def cmd_classify(args):
    pi = SetPartition.parse(args.partition)
    cls = classify(pi)
    vals = [valence(pi, i) for i in range(1, pi.n + 1)]
    if args.json:
        data = {"partition": str(pi), "class": str(cls), "valences": vals}
        idx = getattr(cls, "crossing_indices", None)
        if idx is not None:
            data["crossing_indices"] = sorted(idx)
        return json.dumps(data)
    return f"{pi}: {cls}\nvalences: {' '.join(map(str, vals))}"


def cmd_enumerate(args):
    parts = enumerate_partitions(args.n, args.k, args.s, noncrossing_only=not args.all)
    if args.json:
        return json.dumps([[list(b) for b in p.blocks] for p in parts])
    return "\n".join(str(p) for p in parts) + f"\n# {len(parts)} partitions"


def cmd_matrix(args):
    w = Permutation.parse(args.perm, args.n)
    m = representing_matrix(w, args.n, args.k, args.s)
    return json.dumps(m.to_json()) if args.json else m.to_text()


def cmd_character_table(args):
    n = args.n
    report = RunReport("character-table", {"n": n, "k": args.k, "s": args.s})
    chi = {}
    for mu in integer_partitions(n):
        chi[mu] = character_of_class(mu, n, args.k, args.s)
        report.add(True, cycle_type=list(mu), class_size=class_size(mu), trace=chi[mu])
    mults = {}
    for lam in integer_partitions(n):
        m = inner_product(chi, {mu: mn_character(lam, mu) for mu in chi}, n)
        if m:
            mults["(" + ",".join(map(str, lam)) + ")"] = m
    report.summary = {"dimension": chi[(1,) * n] if n else 1, "irreducibles": mults}
    return report.finish()


def cmd_qpoly(args):
    name, params = args.name, args.params
    try:
        if name == "fake-degree":
            poly = qcsp.fake_degree(_ints(params[0]))
        elif name == "hook":
            poly = qcsp.q_hook(_ints(params[0]))
        else:
            nums = [int(x) for x in params]
            poly = {
                "int": lambda: qcsp.q_int(*nums),
                "factorial": lambda: qcsp.q_factorial(*nums),
                "binomial": lambda: qcsp.q_binomial(*nums),
                "catalan": lambda: qcsp.q_catalan(*nums),
                "narayana": lambda: qcsp.q_narayana(*nums, shifted=args.shifted),
                "flag": lambda: qcsp.flag_poly(*nums),
            }[name]()
    except (IndexError, TypeError, ValueError) as exc:
        raise UsageError(f"qpoly {name}: {exc}") from None
    if args.evaluate is None:
        return json.dumps(list(poly.coeffs)) if args.json else str(poly)
    order = args.evaluate
    values = {d: eval_at_root(poly, order, d) for d in range(order)}
    if args.json:
        return json.dumps({"coeffs": list(poly.coeffs), "order": order, "values": values})
    lines = [str(poly)] + [f"d={d}: {v}" for d, v in values.items()]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Verification runs

def _max_n(args, default: int) -> int:
    return default if args.max_n is None else args.max_n


def _merge(command: str, params: dict, parts: list[tuple[str, RunReport]]) -> RunReport:
    report = RunReport(command, params)
    for name, sub in parts:
        report.extend(sub, check=name)
    return report.finish()


def cmd_verify_coxeter(args):
    top = _max_n(args, 8)
    return _merge("verify-coxeter", {"max_n": top}, [
        ("tau relations", verify.coxeter_check(top, args.jobs)),
        ("rho relations", verify.rho_coxeter_check(min(top, 7), args.jobs)),
        ("sigma well defined", verify.sigma_check(min(top, 7), args.jobs)),
        ("grading", verify.grading_check(top, args.jobs)),
    ])


def cmd_verify_rotation(args):
    return verify.rotation_check(_max_n(args, 8), args.jobs, only_n=args.n)


def cmd_verify_reflection(args):
    top = _max_n(args, 8)
    refl = verify.reflection_check(top, args.jobs, only_n=args.n)
    if args.n is not None:
        return refl
    return _merge("verify-reflection", {"max_n": top}, [
        ("reflection", refl),
        ("affine transposition", verify.affine_transposition_check(top, args.jobs)),
    ])


def cmd_verify_local_symmetry(args):
    top = _max_n(args, 6)
    return _merge("verify-local-symmetry", {"max_n": top, "seed": args.seed}, [
        ("local symmetry", verify.local_symmetry_check(top, args.jobs)),
        ("local property", verify.local_property_check(max(top, 8), args.trials, args.seed)),
    ])


def cmd_verify_projection(args):
    return verify.projection_check(_max_n(args, 6), args.jobs)


def cmd_verify_isotype(args):
    given = [x is not None for x in (args.n, args.k, args.s)]
    if all(given):
        return verify.isotype_check(args.n, args.k, args.s)
    if any(given):
        raise UsageError("verify-isotype takes all of n k s or none")
    top = _max_n(args, 8)
    return _merge("verify-isotype", {"max_n": top}, [
        ("traces", verify.isotype_check(max_n=top, jobs=args.jobs)),
        ("symmetrizers", verify.symmetrizer_check(top)),
        ("dominance", verify.dominance_check(min(top, 7), args.jobs)),
        ("dimensions", verify.dimension_check(max(top, 12))),
    ])


def cmd_verify_csp(args):
    if args.family is None:
        return verify.csp_sweep(_max_n(args, 10), jobs=args.jobs)
    if args.n is None:
        return verify.csp_sweep(_max_n(args, 10), families=[args.family], jobs=args.jobs)
    return qcsp.verify_csp(args.family, args.n, args.k).finish()


def cmd_springer_check(args):
    if args.shape:
        return qcsp.springer_check(_ints(args.shape)).finish()
    return verify.springer_sweep(_max_n(args, 8))


def cmd_chu_check(args):
    vals = [args.m, args.n, args.k]
    if all(v is not None for v in vals):
        report = RunReport("chu-check", {"m": args.m, "n": args.n, "k": args.k})
        report.add(qcsp.chu_vandermonde_check(*vals), identity="chu-vandermonde", m=args.m, n=args.n, k=args.k)
        return report.finish()
    if any(v is not None for v in vals):
        raise UsageError("chu-check takes all of m n k or none")
    return verify.chu_sweep(_max_n(args, 8), max(_max_n(args, 8), 10))


def cmd_tl_compare(args):
    return tl.compare_modules(args.n, args.k, args.rule)


def cmd_tl_filtration(args):
    return tl.doubleton_filtration_check(args.n, args.k, args.rule)


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes for sweeps")
    common.add_argument("--max-n", type=int, default=None, metavar="N", help="bound for exhaustive sweeps")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    common.add_argument("--out", metavar="DIR", help="also write <command>.csv and <command>.png here")

    parser = argparse.ArgumentParser(prog="ncskein", description="Skein action of S_n on noncrossing partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("resolve", cmd_resolve, "expand a set partition in the noncrossing basis")
    p.add_argument("partition", help='blocks separated by "/", e.g. "1,4,8/2,3,5,7/6"')
    p.add_argument("--via", metavar="PERM", help="conjugate with this permutation instead of the default")
    p.add_argument("--check-all-paths", action="store_true", help="compare against every admissible conjugator")

    p = add("act", cmd_act, "act on a noncrossing partition")
    p.add_argument("element", help='permutation ("3 1 2", "312" or "(1,3,2)"), or a word with --word')
    p.add_argument("partition")
    p.add_argument("--word", action="store_true", help="read ELEMENT as letters i1,i2,... of s_i1 s_i2 ...")

    p = add("classify", cmd_classify, "noncrossing, almost noncrossing or crossing")
    p.add_argument("partition")

    p = add("enumerate", cmd_enumerate, "list noncrossing partitions")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("s", type=int, nargs="?")
    p.add_argument("--all", action="store_true", help="include crossing partitions")

    add("verify-coxeter", cmd_verify_coxeter, "Coxeter relations and well-definedness of the skein map")
    p = add("verify-rotation", cmd_verify_rotation, "action of the long cycle")
    p.add_argument("n", type=int, nargs="?")
    p = add("verify-reflection", cmd_verify_reflection, "action of the longest element and of (1, n)")
    p.add_argument("n", type=int, nargs="?")
    p = add("verify-local-symmetry", cmd_verify_local_symmetry, "w . pi = w * pi when w(pi) is noncrossing")
    p.add_argument("--trials", type=int, default=200)
    add("verify-projection", cmd_verify_projection, "properties of the projection onto V(n)")
    p = add("verify-isotype", cmd_verify_isotype, "traces against irreducible characters")
    for name in ("n", "k", "s"):
        p.add_argument(name, type=int, nargs="?")

    p = add("character-table", cmd_character_table, "per-class traces of V(n[, k[, s]])")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("s", type=int, nargs="?")

    p = add("matrix", cmd_matrix, "representing matrix of a permutation")
    p.add_argument("perm")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("s", type=int, nargs="?")

    p = add("verify-csp", cmd_verify_csp, "fixed points of rotation against root-of-unity values")
    p.add_argument("family", nargs="?", choices=qcsp.FAMILIES)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("k", type=int, nargs="?")

    p = add("springer-check", cmd_springer_check, "irreducible characters against fake degrees")
    p.add_argument("shape", nargs="?", help='e.g. "2,2,1,1"; default sweeps flag shapes')

    p = add("chu-check", cmd_chu_check, "q-Chu-Vandermonde and the summation identities")
    for name in ("m", "n", "k"):
        p.add_argument(name, type=int, nargs="?")

    for name, fn, text in (("tl-compare", cmd_tl_compare, "compare V(n, k, 0) with W(n, k, 0)"),
                           ("tl-filtration", cmd_tl_filtration, "doubleton filtration of W(n, k, 0)")):
        p = add(name, fn, text)
        p.add_argument("n", type=int)
        p.add_argument("k", type=int)
        p.add_argument("--rule", choices=tl.RULES, default="doubleton",
                       help="value of t_i when i, i+1 share a block of size > 2")

    p = add("qpoly", cmd_qpoly, "named q-polynomials")
    p.add_argument("name", choices=("int", "factorial", "binomial", "catalan", "narayana", "flag", "hook", "fake-degree"))
    p.add_argument("params", nargs="*")
    p.add_argument("--shifted", action="store_true", help="narayana: multiply by q^(k(k-1))")
    p.add_argument("--evaluate", type=int, metavar="ORDER", help="values at every power of a primitive root")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, RunReport):
        print(result.to_json() if args.json else result.to_table())
        if args.out:
            from .plotting import write_outputs

            write_outputs(result, args.out)
        return EXIT_OK if result.passed else EXIT_FAIL
    print(result)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
