"""Command-line interface: ``lefcat <command> ...``."""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

from .category import CategoryError, fixed_data
from .formats import (instance_digest, parse_category, parse_functor, serialize_category,
                      serialize_functor, serialize_instance)
from .generate import GenerationFailed, generate_random
from .homology import betti, chain_complex, euler_char, euler_from_homology
from .layers import check_fixed_morphism_theorem
from .lefschetz import (MethodMismatch, TheoremViolated, check_fixed_object_theorem,
                        lefschetz_pair, r_lefschetz_pair)
from .nerve import nerve
from .report import ReportDoc, dumps, render_text
from .selfcheck import run_selfcheck

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load(cat_path, fun_path=None):
    cat = parse_category(_read(cat_path))
    fun = parse_functor(_read(fun_path), cat) if fun_path else None
    return cat, fun


def _emit(doc: ReportDoc, fmt: str):
    sys.stdout.write(dumps(doc) if fmt == "structured" else render_text(doc))


def cmd_validate(args) -> int:
    cat, fun = _load(args.category, args.functor)
    line = f"valid category: {cat.n_objects} objects, {cat.n_morphisms} morphisms"
    if fun is not None:
        line += f"; valid endofunctor ({'strict' if fun.strict else 'non-strict'})"
    print(line)
    return EXIT_OK


def cmd_invariants(args) -> int:
    cat, _ = _load(args.category)
    T = nerve(cat)
    cc = chain_complex(T)
    body = {"simplices": T.counts(), "betti": betti(cc),
            "euler": euler_char(T), "euler_from_homology": euler_from_homology(cc)}
    digest = hashlib.sha256(serialize_category(cat).encode()).hexdigest()
    _emit(ReportDoc("invariants", digest, body), args.format)
    return EXIT_OK if body["euler"] == body["euler_from_homology"] else EXIT_FAIL


def cmd_lefschetz(args) -> int:
    _, F = _load(args.category, args.functor)
    L = lefschetz_pair(F)
    L_R = r_lefschetz_pair(F)
    fixed = fixed_data(F)
    body = {"L": L[0], "L_R": L_R[0],
            "L_chain": L[0], "L_homology": L[1],
            "L_R_chain": L_R[0], "L_R_homology": L_R[1],
            "fixed_objects": [F.source.object_name(x) for x in sorted(fixed.fixed_objects)],
            "strict": F.strict}
    _emit(ReportDoc("lefschetz", instance_digest(F), body), args.format)
    if L[0] != L[1] or L_R[0] != L_R[1]:
        raise MethodMismatch("chain-level and homology-level values differ")
    return EXIT_OK


def cmd_check(args) -> int:
    _, F = _load(args.category, args.functor)
    reports = [check_fixed_object_theorem(F, raise_on_violation=False)]
    if args.cutoff is not None:
        reports.append(check_fixed_morphism_theorem(F, args.cutoff, raise_on_violation=False))
    _emit(ReportDoc("check", instance_digest(F), {}, reports), args.format)
    ok = reports[0].holds and all(r.theorem_holds for r in reports[1:])
    if not ok:
        print(f"TheoremViolated: see report for instance {instance_digest(F)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_gen(args) -> int:
    F = generate_random(args.seed, args.objects, args.morphisms, args.collapse)
    if args.prefix:
        Path(args.prefix + ".cat").write_text(serialize_category(F.source), encoding="utf-8")
        Path(args.prefix + ".fun").write_text(serialize_functor(F), encoding="utf-8")
    else:
        sys.stdout.write(serialize_instance(F))
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    result = run_selfcheck(args.count, args.seed, args.max_objects, args.max_morphisms)
    bad = result.violations
    body = {"count": len(result.results), "violations": len(bad),
            "violating_seeds": [r.seed for r in bad], "digest": result.digest}
    _emit(ReportDoc("selfcheck", result.digest, body), args.format)
    for r in bad:
        print(f"TheoremViolated: seed {r.seed} collapse {r.collapse}: "
              + "; ".join(r.violations), file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefcat", description="Lefschetz numbers of endofunctors of acyclic categories")
    sub = parser.add_subparsers(dest="command", required=True)

    def reporting(p):
        p.add_argument("--format", choices=("text", "structured"), default="text")
        return p

    p = sub.add_parser("validate", help="validate a category file and optional functor file")
    p.add_argument("category")
    p.add_argument("functor", nargs="?")
    p.set_defaults(run=cmd_validate)

    p = reporting(sub.add_parser("invariants", help="simplex counts, Betti numbers, chi"))
    p.add_argument("category")
    p.set_defaults(run=cmd_invariants)

    p = reporting(sub.add_parser("lefschetz", help="L and L_R of an endofunctor"))
    p.add_argument("category")
    p.add_argument("functor")
    p.set_defaults(run=cmd_lefschetz)

    p = reporting(sub.add_parser("check", help="check the fixed-object / fixed-morphism identities"))
    p.add_argument("category")
    p.add_argument("functor")
    p.add_argument("--cutoff", type=int)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("gen", help="emit a random category and endofunctor")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--objects", type=int, required=True)
    p.add_argument("--morphisms", type=int, required=True)
    p.add_argument("--collapse", type=float, default=0.0)
    p.add_argument("--prefix", help="write PREFIX.cat and PREFIX.fun instead of stdout")
    p.set_defaults(run=cmd_gen)

    p = reporting(sub.add_parser("selfcheck", help="run all checks on random instances"))
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-objects", type=int, default=6)
    p.add_argument("--max-morphisms", type=int, default=14)
    p.set_defaults(run=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (CategoryError, GenerationFailed, MethodMismatch, TheoremViolated,
            OSError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL if isinstance(exc, (MethodMismatch, TheoremViolated)) else EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
