"""Command-line frontend tying the analyses together.

Exit codes: 0 success, 1 violated invariant, 2 input error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, Optional, Tuple

from . import admissibility as adm
from . import blocking as blk
from . import construct as con
from . import equivalence as ea
from . import partition as par
from . import vbf as vb
from .catalog import catalog
from .gf2 import Subspace
from .lut_io import LutFormatError, parse_lut, serialize_lut

SCHEMA = 1

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class InputError(ValueError):
    pass


def _resolve_function(spec: str) -> Tuple[vb.VBF, Dict[str, object]]:
    """A LUT path or "catalog:NAME:N"."""
    if spec.startswith("catalog:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise InputError("catalog spec must be catalog:NAME:N")
        try:
            entry = catalog(parts[1], int(parts[2]))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return entry.function, {"source": spec, "catalog": parts[1],
                                "exponent": entry.exponent,
                                "modulus": entry.modulus,
                                "apn_expected": entry.apn_expected}
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_lut(fh.read()), {"source": spec}
    except (OSError, LutFormatError) as exc:
        raise InputError(f"cannot read LUT {spec!r}: {exc}") from exc


def _resolve_point_set(spec: str) -> Tuple[set, int]:
    """A "set:N:b1,b2,..." literal, or a function spec whose non-bent set
    is taken."""
    if spec.startswith("set:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise InputError("set spec must be set:N:b1,b2,...")
        try:
            n = int(parts[1])
            pts = {int(t, 0) for t in parts[2].split(",") if t}
        except ValueError as exc:
            raise InputError(f"malformed set spec: {exc}") from exc
        if any(not 0 < p < (1 << n) for p in pts):
            raise InputError("set points must be nonzero n-bit masks")
        return pts, n
    F, _ = _resolve_function(spec)
    if F.n != F.m:
        raise InputError("ccz-check needs n = m")
    return blk.nonbent_set(F), F.n


def _jsonable(obj):
    if isinstance(obj, Subspace):
        return {"n": obj.n, "basis": list(obj.basis)}
    if isinstance(obj, tuple):
        return [_jsonable(o) for o in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_jsonable(o) for o in obj]
    return obj


def _verdicts_json(verdicts):
    return [{"rule": v.rule, "pass": v.passed,
             "detail": _jsonable(v.detail_dict())} for v in verdicts]


def _emit(report: dict, path: Optional[str]) -> None:
    text = json.dumps(_jsonable(report), indent=2, sort_keys=True)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_analyze(args) -> int:
    F, meta = _resolve_function(args.input)
    t0 = time.perf_counter()
    report: Dict[str, object] = {"schema": SCHEMA, **meta,
                                 "n": F.n, "m": F.m, "seed": args.seed}
    report["degree"] = vb.algebraic_degree(F)
    report["differential_uniformity"] = vb.differential_uniformity(F)
    report["is_apn"] = report["differential_uniformity"] == 2
    violations = []
    try:
        dist = vb.amplitude_distribution(F)
        report["plateaued"] = True
        report["linearity"] = dist.linearity()
        report["amplitude_distribution"] = str(dist)
        if F.n == F.m:
            report["fourth_moment_ok"] = vb.fourth_moment_check(F)
    except vb.NotPlateaued as exc:
        report["plateaued"] = False
        report["non_plateaued_component"] = exc.b
        dist = None

    report["partition_type"] = None
    if F.n == F.m:
        try:
            P = par.build_partition(F)
            report["partition_type"] = str(par.partition_type(P))
            report["partition_valid"] = par.verify_partition(P)
            report["dim_amplitude_ok"] = par.verify_dim_amplitude(F, P)
            if not report["partition_valid"] or not report["dim_amplitude_ok"]:
                violations.append("partition cross-check failed")
        except par.NotCrooked as exc:
            report["not_crooked"] = str(exc)
            if args.expect_crooked:
                violations.append("input is not crooked")

    if dist is not None and F.n % 2 == 0 and F.n == F.m:
        t = adm.from_distribution(dist)
        report["rules"] = _verdicts_json(adm.evaluate_rules(t))

    if not args.skip_blocking and dist is not None and F.n % 2 == 0:
        sample = args.sample_budget if F.m >= 10 else None
        rep = blk.blocking_report(F, sample=sample, seed=args.seed)
        report["blocking"] = {
            "n_size": rep.n_size, "mod4": rep.mod4, "odd_ok": rep.odd_ok,
            "odd_scanned": rep.odd_scanned, "odd_sampled": rep.odd_sampled,
            "is_blocking": rep.is_blocking,
            "max_inner_dim": rep.max_inner_dim,
            "inner_witness": rep.inner_witness,
            "is_trivial": rep.is_trivial, "threefold_ok": rep.threefold_ok,
            "is_minimal": rep.is_minimal,
            "minimality_witness": rep.minimality_witness,
            "pair_found": rep.pair_found,
            "pair_search_complete": rep.pair_search_complete,
            "bounds": rep.bounds,
        }
        if rep.odd_sampled:
            report["blocking"]["sample"] = args.sample_budget
        if not rep.odd_ok:
            violations.append("odd-intersection violated")

    report["violations"] = violations
    report["elapsed_s"] = round(time.perf_counter() - t0, 3)
    _emit(report, args.json)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_enumerate(args) -> int:
    entries = adm.enumerate_admissible(args.n, verbose=args.verbose)
    admissible = 0
    for t, verdicts in entries:
        ok = all(v.passed for v in verdicts)
        admissible += ok
        if ok:
            print(f"{t}  not excluded")
        elif args.verbose:
            failing = ",".join(v.rule for v in verdicts if not v.passed)
            print(f"{t}  excluded by: {failing}")
    print(f"# n={args.n}: {admissible} admissible amplitude distribution "
          f"type(s)")
    if args.json:
        _emit({"schema": SCHEMA, "n": args.n,
               "types": [{"type": str(t),
                          "admissible": all(v.passed for v in verdicts),
                          "verdicts": _verdicts_json(verdicts)}
                         for t, verdicts in entries]}, args.json)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        if args.kind == "spread":
            P = con.spread(args.n, args.param)
        else:
            P = con.bu_partition(args.n, args.param)
        for step in args.refine or []:
            idx, _, t = step.partition(":")
            P = con.refine_member(P, int(idx), int(t))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    ok = con.verify(P)
    print(f"type {con.partition_type_of(P)}  members {len(P.members)}  "
          f"verify {'pass' if ok else 'FAIL'}")
    if args.json:
        _emit({"schema": SCHEMA, "n": args.n, "kind": args.kind,
               "type": str(con.partition_type_of(P)), "verified": ok,
               "members": [list(m.basis) for m in P.members]}, args.json)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_ea(args) -> int:
    F, meta = _resolve_function(args.input)
    if F.n != F.m:
        print("error: ea requires n = m", file=sys.stderr)
        return EXIT_INPUT
    a1, a2, a3 = ea.seeded_ea_triple(F.n, args.seed)
    G = ea.ea_transform(F, a1, a2, a3)
    nb_ok = ea.verify_nonbent_equivariance(F, G, a1)
    dist_ok = (vb.amplitude_distribution(F).counts
               == vb.amplitude_distribution(G).counts)
    part_ok = None
    if vb.is_apn(F):
        part_ok = ea.verify_partition_equivariance(F, G, a1, a2, a3)
    sys.stdout.write(serialize_lut(G))
    print(f"# nonbent_equivariance {'pass' if nb_ok else 'FAIL'}; "
          f"distribution_invariant {'pass' if dist_ok else 'FAIL'}; "
          f"partition_equivariance "
          f"{'n/a' if part_ok is None else 'pass' if part_ok else 'FAIL'}",
          file=sys.stderr)
    if args.json:
        _emit({"schema": SCHEMA, **meta, "seed": args.seed,
               "table": list(G.table), "nonbent_equivariance": nb_ok,
               "distribution_invariant": dist_ok,
               "partition_equivariance": part_ok}, args.json)
    ok = nb_ok and dist_ok and part_ok in (None, True)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_ccz_check(args) -> int:
    N, n = _resolve_point_set(args.input)
    if n % 2:
        print("error: ccz-check needs even n", file=sys.stderr)
        return EXIT_INPUT
    rep = blk.ccz_necessary_report(N, n, node_budget=args.budget)
    _emit({"schema": SCHEMA, "input": args.input, "n": n, **rep}, args.json)
    if rep["size_ok"] and rep["threefold_ok"] and \
            not rep["pair_search_complete"]:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qapn",
        description="Walsh spectra, vector space partitions and blocking "
                    "sets of quadratic APN functions")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full analysis of a lookup table")
    a.add_argument("input", help="LUT path or catalog:NAME:N")
    a.add_argument("--json", help="write the JSON report here")
    a.add_argument("--skip-blocking", action="store_true")
    a.add_argument("--sample-budget", type=int, default=100000,
                   help="sampled odd-intersection scan size for m >= 10")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--expect-crooked", action="store_true",
                   help="treat a non-crooked input as a violation")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate",
                       help="admissible amplitude distributions for n")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--verbose", action="store_true",
                   help="also print excluded types with their killing rules")
    e.add_argument("--json")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("construct", help="explicit vector space partitions")
    c.add_argument("--kind", choices=("spread", "bu"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--param", type=int, required=True,
                   help="t for spread, s for bu")
    c.add_argument("--refine", action="append", metavar="IDX:T",
                   help="refine member IDX into a T-spread (repeatable)")
    c.add_argument("--json")
    c.set_defaults(func=cmd_construct)

    t = sub.add_parser("ea", help="seeded EA transform + equivariance checks")
    t.add_argument("input")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--json")
    t.set_defaults(func=cmd_ea)

    z = sub.add_parser("ccz-check",
                       help="necessary conditions for CCZ-equivalence "
                            "to a permutation")
    z.add_argument("input", help="LUT path, catalog:NAME:N or set:N:b1,b2,..")
    z.add_argument("--budget", type=int, default=10**7,
                   help="DFS node budget for the pair search")
    z.add_argument("--json")
    z.set_defaults(func=cmd_ccz_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except blk.BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
