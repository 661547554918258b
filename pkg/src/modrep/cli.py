"""Command-line front end: one JSON object per result line.

Exit codes: 0 success, 1 precondition/usage error, 2 verify-suite mismatch.
The MODREP_CACHE environment variable overrides --cache.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complexity import ComplexityReport, ResultCache, complexity, verify_suite
from .jordan import JordanType, generic_jordan_type, insertion_quotients, insertion_quotients_general
from .partitions import Partition, classify, o_lambda, p_adic_expansion, p_core
from .specht import (ModuleRep, gram_and_simple, specht_module, sum_zero_submodule,
                     young_permutation_module)
from .subgroups import (ElabSubgroup, k_f_subgroup, maximal_elab_classes, orbit_stats,
                        r_subgroup, standard_E, count_fixed_tabloids)
from .twopart import (decomposition_number, mbr_restrict, p_kostka_number, predicted_complexity,
                      simple_dim, specht_decomposition, specht_dim, NOT_COVERED)
from .variety import variety_dimension


def parse_module(text: str, p: int) -> tuple[ModuleRep, str]:
    """Module syntax: M:4,2 | S:4,2 | D:4,2 | M0:6."""
    kind, _, rest = text.partition(":")
    if kind == "M0":
        n = int(rest)
        lam = Partition((n - 2, 2))
        return sum_zero_submodule(lam, [], p), text
    lam = Partition.parse(rest)
    if kind == "M":
        return young_permutation_module(lam, [], p), text
    if kind == "S":
        return specht_module(lam, [], p), text
    if kind == "D":
        return gram_and_simple(lam, [], p)[1], text
    raise ValueError(f"unknown module syntax {text!r} (use M:|S:|D:|M0:)")


def parse_subgroup(text: str, p: int, n: int) -> ElabSubgroup:
    """Subgroup syntax: E:a | KF:l | maximal:i | R:m."""
    kind, _, rest = text.partition(":")
    if kind == "E":
        return standard_E(int(rest), p, n)
    if kind == "KF":
        if p != 2:
            raise ValueError("KF subgroups are defined for p=2 only")
        return k_f_subgroup(int(rest), n)
    if kind == "maximal":
        classes = maximal_elab_classes(n, p)
        i = int(rest)
        if not 0 <= i < len(classes):
            raise ValueError(f"maximal class index {i} out of range 0..{len(classes) - 1}")
        return classes[i]
    if kind == "R":
        return r_subgroup(int(rest), p, n)
    raise ValueError(f"unknown subgroup syntax {text!r} (use E:|KF:|maximal:|R:)")


def _parse_exts(text: str | None) -> tuple[int, ...] | None:
    if not text:
        return None
    return tuple(int(x) for x in text.split(","))


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "tsv":
        print("\t".join(str(k) for k in obj))
        print("\t".join(json.dumps(v) if isinstance(v, (list, dict)) else str(v)
                        for v in obj.values()))
    else:
        print(json.dumps(obj))


def _cache_from(args) -> ResultCache | None:
    path = os.environ.get("MODREP_CACHE") or getattr(args, "cache", None)
    return ResultCache(path) if path else None


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="modrep",
                                  description="exact symmetric-group module computations")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        return sp

    sp = add("core", help="p-core and p-weight of a partition")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--partition", required=True)

    sp = add("expand", help="p-adic expansion and the vertex label O_lambda")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--partition", required=True)

    for name in ("psi", "phi"):
        sp = add(name, help=f"{name}: two-part multiplicity table entry")
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--s", type=int, required=True)

    sp = add("dim-specht", help="dimension of a two-part Specht module")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = add("dim-simple", help="dimension of a two-part simple module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--second", type=int, required=True)

    sp = add("decompose", help="composition factors of a two-part Specht module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--second", type=int, required=True)

    sp = add("predict", help="predicted complexity of a two-part simple module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--second", type=int, required=True)

    sp = add("mbr", help="restriction of a simple module to the point stabilizer (odd p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)

    sp = add("subgroups", help="maximal elementary abelian classes, or one named subgroup")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--subgroup")

    sp = add("fixed-tabloids", help="tabloids of a shape fixed by a subgroup")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--partition", required=True)
    sp.add_argument("--subgroup", required=True)

    sp = add("generic-jordan", help="generic Jordan type of a module over a subgroup")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--module", required=True)
    sp.add_argument("--subgroup", required=True)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("insertion", help="allowable quotient Jordan types of a short exact sequence")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--type-v", required=True, help='Jordan type, e.g. "2 3" or "1^2 2"')
    sp.add_argument("--a", type=int, help="single inserted block size")
    sp.add_argument("--type-u", help="full submodule Jordan type (general rule)")

    sp = add("rank-variety-dim", help="rank variety point counts and dimension estimate")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--module", required=True)
    sp.add_argument("--subgroup", required=True)
    sp.add_argument("--exts")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("complexity", help="complexity of a two-part simple module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--module", help="D:lambda syntax")
    sp.add_argument("--n", type=int)
    sp.add_argument("--second", type=int)
    sp.add_argument("--no-shortcut", action="store_true")
    sp.add_argument("--exts")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cache")

    sp = add("verify", help="verify a theorem suite; exit 2 on any mismatch")
    sp.add_argument("--suite", choices=("theorem-a", "theorem-c"), required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--n-min", type=int, default=4)
    sp.add_argument("--seconds", help="restrict the second parts, e.g. 1,2,3")
    sp.add_argument("--exts")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--no-shortcut", action="store_true")
    sp.add_argument("--cache")
    return top


def _report_json(report: ComplexityReport) -> dict:
    return report.to_json()


def dispatch(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format
    cmd = args.command
    if cmd == "core":
        cw = p_core(Partition.parse(args.partition), args.p)
        _emit({"core": str(cw.core), "weight": cw.weight}, fmt)
    elif cmd == "expand":
        lam = Partition.parse(args.partition)
        layers = p_adic_expansion(lam, args.p)
        _emit({"layers": [str(mu) for mu in layers], "o_lambda": str(o_lambda(lam, args.p)),
               **classify(lam, args.p)}, fmt)
    elif cmd == "psi":
        _emit({"psi": decomposition_number(args.n, args.k, args.s, args.p)}, fmt)
    elif cmd == "phi":
        _emit({"phi": p_kostka_number(args.n, args.k, args.s, args.p)}, fmt)
    elif cmd == "dim-specht":
        _emit({"dim": specht_dim(args.n, args.m)}, fmt)
    elif cmd == "dim-simple":
        _emit({"dim": simple_dim(args.n, args.second, args.p)}, fmt)
    elif cmd == "decompose":
        labels = specht_decomposition(args.n, args.second, args.p)
        _emit({"factors": [str(x.partition) for x in labels]}, fmt)
    elif cmd == "predict":
        pred = predicted_complexity(args.n, args.second, args.p)
        _emit({"value": pred.value, "rule": pred.rule, "weight": pred.weight}, fmt)
    elif cmd == "mbr":
        out = mbr_restrict(args.a, args.b, args.p)
        _emit({"summands": [f"{a},{b}" if b else str(a) for a, b in out]}, fmt)
    elif cmd == "subgroups":
        if args.subgroup:
            groups = [parse_subgroup(args.subgroup, args.p, args.n)]
        else:
            groups = maximal_elab_classes(args.n, args.p)
        for g in groups:
            st = orbit_stats(g)
            _emit({"tag": g.class_tag, "rank": g.rank,
                   "gens": [[i + 1 for i in perm] for perm in g.gens],
                   "orbit_sizes": list(st.orbit_sizes), "a0": st.a0, "a1": st.a1}, fmt)
    elif cmd == "fixed-tabloids":
        lam = Partition.parse(args.partition)
        group = parse_subgroup(args.subgroup, args.p, args.n)
        _emit({"count": count_fixed_tabloids(lam, orbit_stats(group))}, fmt)
    elif cmd == "generic-jordan":
        module, mid = parse_module(args.module, args.p)
        group = parse_subgroup(args.subgroup, args.p, _module_letters(module))
        module = _restricted(module, group)
        cert = generic_jordan_type(module, group, samples=args.samples, seed=args.seed)
        _emit({"module": mid, "subgroup": group.class_tag,
               "type": str(cert.jordan_type), "stable": str(cert.jordan_type.stable()),
               "generically_free": cert.jordan_type.is_generically_free(),
               "log2_failure_bound": round(cert.log2_failure_bound, 2),
               "status": cert.status, "seed": args.seed,
               "moduli": {k: list(r.modulus) for k, r in cert.power_ranks.items()}}, fmt)
    elif cmd == "insertion":
        v = JordanType.parse(args.type_v, args.p)
        if args.type_u:
            u = JordanType.parse(args.type_u, args.p)
            result = insertion_quotients_general(u, v)
        elif args.a is not None:
            result = insertion_quotients(args.a, v)
        else:
            raise ValueError("insertion needs --a or --type-u")
        _emit({"quotients": sorted(str(t) for t in result)}, fmt)
    elif cmd == "rank-variety-dim":
        module, mid = parse_module(args.module, args.p)
        group = parse_subgroup(args.subgroup, args.p, _module_letters(module))
        rep = variety_dimension(_restricted(module, group), group,
                                extensions=_parse_exts(args.exts), seed=args.seed,
                                module_id=mid)
        out = {"module": mid, "subgroup": rep.class_tag, "rank": rep.rank,
               "point_counts": {str(k): v for k, v in rep.point_counts.items()},
               "dim_estimate": rep.dim_estimate, "consistent": rep.consistent,
               "full_space": rep.full_space, "status": rep.status, "seed": rep.seed,
               "moduli": {str(k): list(v) for k, v in rep.moduli.items()}}
        _emit(out, fmt)
    elif cmd == "complexity":
        if args.module:
            kind, _, rest = args.module.partition(":")
            if kind != "D":
                raise ValueError("complexity takes a simple module, D:lambda")
            lam = Partition.parse(rest)
            n, second = lam.n, (lam.parts[1] if len(lam.parts) > 1 else 0)
        elif args.n is not None and args.second is not None:
            n, second = args.n, args.second
        else:
            raise ValueError("complexity needs --module D:lambda or --n and --second")
        report = complexity(n, second, args.p, extensions=_parse_exts(args.exts),
                            seed=args.seed, no_shortcut=args.no_shortcut,
                            cache=_cache_from(args))
        _emit(_report_json(report), fmt)
    elif cmd == "verify":
        reports = verify_suite(args.suite, args.p, args.n_max, n_min=args.n_min,
                               seconds=_parse_exts(args.seconds),
                               extensions=_parse_exts(args.exts), seed=args.seed,
                               no_shortcut=args.no_shortcut, cache=_cache_from(args))
        mismatches = 0
        for rep in reports:
            _emit(_report_json(rep), fmt)
            mismatches += rep.verdict == "mismatch"
        _emit({"mismatches": mismatches}, fmt)
        return 2 if mismatches else 0
    return 0


def _module_degree(module: ModuleRep):
    shape = module.meta.get("shape")
    return shape.parts if shape is not None else ()


def _module_letters(module: ModuleRep) -> int:
    shape = module.meta.get("shape")
    if shape is None:
        raise ValueError("cannot infer the number of letters for this module")
    return shape.n


def _restricted(module: ModuleRep, group: ElabSubgroup) -> ModuleRep:
    from .specht import restrict

    return restrict(module, list(group.gens))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return dispatch(argv)
    except (ValueError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
