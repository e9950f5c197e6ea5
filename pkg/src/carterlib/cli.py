"""Command-line interface.

Exit codes are a stable contract: 0 success/pass, 1 verification failure,
2 usage or parse error, 3 resource overflow.  JSON on stdout (or to a file
via -o) is the machine interface; the human-readable summary lines go to
stdout as well, ahead of the JSON, unless an output file is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagrams import canonical_form, diagram_from_json
from .factorizations import factorization_from_json, hurwitz_orbit
from .families import (
    DiagramAtlas,
    enumerate_by_subsets,
    enumerate_by_hurwitz,
    find_quasi_coxeter_class_seeds,
    gen_type_A,
    gen_type_B,
    gen_type_D,
)
from .presentations import verify_iso
from .quivers import Quiver, check_theorem1
from .roots import CapExceeded, build_root_system, type_str
from .scalars import scalar_to_str

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3

_EXPECTED_EXCEPTIONAL = {("E", 7): 233, ("E", 8): 1242}


def _emit(payload, args) -> None:
    text = json.dumps(payload, indent=2)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _build(args):
    try:
        return build_root_system(args.type, args.rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_roots(args) -> int:
    rs = _build(args)
    if args.json:
        _emit(rs.to_json(), args)
        return EXIT_OK
    print(f"type: {type_str(rs.type_label, rs.param)}")
    print(f"rank: {rs.rank}")
    print(f"roots: {len(rs.roots)} ({rs.n_positive} positive)")
    simples = ", ".join(
        "(" + ",".join(scalar_to_str(x) for x in rs.roots[i]) + ")"
        for i in rs.simple_indices)
    print(f"simple roots: {simples}")
    print(f"group order: {rs.weyl_order()}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    rs = _build(args)
    method = args.method
    overflow = False
    try:
        if method == "construct":
            gen = {"A": gen_type_A, "B": gen_type_B, "D": gen_type_D}.get(
                args.type)
            if gen is None:
                print("error: --method construct supports only types A, B, D",
                      file=sys.stderr)
                return EXIT_USAGE
            atlas = gen(args.rank)
        elif method == "oracle":
            if args.long_running:
                atlas = enumerate_by_subsets(rs, max_rank=9, max_positive=130)
            else:
                atlas = enumerate_by_subsets(rs)
        else:  # hurwitz
            budget = args.seed_budget
            cap = args.cap_orbit
            if args.long_running:
                budget = max(budget, 60000)
                cap = max(cap, 10 ** 7)
            seeds = find_quasi_coxeter_class_seeds(
                rs, budget=budget, seed=args.seed)
            atlas = enumerate_by_hurwitz(seeds, orbit_cap=cap)
            expected = _EXPECTED_EXCEPTIONAL.get((args.type, args.rank))
            if expected is not None and len(atlas) == expected:
                atlas.complete = True
                atlas.method = "hurwitz (reproduced)"
            else:
                atlas.complete = False
                atlas.method = "hurwitz (lower bound)"
    except CapExceeded as exc:
        if isinstance(exc.partial, DiagramAtlas):
            atlas = exc.partial
            atlas.complete = False
            overflow = True
        else:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_OVERFLOW
    n_adm = sum(1 for e in atlas.entries.values() if e.admissible)
    n_co = sum(1 for e in atlas.entries.values() if e.cyclically_orientable)
    if args.output:
        print(f"{type_str(args.type, args.rank)}: {len(atlas)} classes, "
              f"{n_adm} admissible, {n_co} cyclically orientable"
              + ("" if atlas.complete else " (incomplete)"))
    _emit(atlas.to_json(), args)
    return EXIT_OVERFLOW if overflow else EXIT_OK


def cmd_check_theorem1(args) -> int:
    try:
        report = check_theorem1(args.type, args.rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    _emit(report.to_json(), args)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify_presentations(args) -> int:
    try:
        with open(args.atlas) as fh:
            data = json.load(fh)
        atlas = DiagramAtlas.from_json(data, build_root_system)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read atlas: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdicts = []
    all_iso = True
    for key in sorted(atlas.entries):
        d = atlas.entries[key].diagram
        if d.vertex_roots is None:
            print(f"error: atlas entry {key.hex()} has no witness roots",
                  file=sys.stderr)
            return EXIT_USAGE
        v = verify_iso(d, coset_cap=args.cap_cosets)
        verdicts.append(v.to_json())
        all_iso &= v.verdict == "iso"
    _emit(verdicts, args)
    return EXIT_OK if all_iso else EXIT_FAIL


def cmd_hurwitz_orbit(args) -> int:
    try:
        with open(args.factorization) as fh:
            data = json.load(fh)
        f = factorization_from_json(data, build_root_system)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read factorization: {exc}", file=sys.stderr)
        return EXIT_USAGE
    from .diagrams import diagram_of
    try:
        orbit = hurwitz_orbit(f, cap=args.cap_orbit)
    except CapExceeded as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    classes = {}
    for g in orbit:
        d = diagram_of(g.refs, g.ambient)
        classes.setdefault(canonical_form(d).hex(), d.to_json())
    payload = {
        "orbit_size": len(orbit),
        "diagram_classes": [classes[k] | {"key": k} for k in sorted(classes)],
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format != "dot":
        print("error: only --format dot is supported", file=sys.stderr)
        return EXIT_USAGE
    try:
        if "b" in data:
            text = Quiver.from_json(data).to_dot()
        elif "edges" in data:
            text = diagram_from_json(data, build_root_system).to_dot()
        else:
            print("error: input is neither a diagram nor a quiver",
                  file=sys.stderr)
            return EXIT_USAGE
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _add_type_rank(p):
    p.add_argument("type", choices=list("ABCDEFGHI"),
                   help="type letter; I means the dihedral type I2(rank)")
    p.add_argument("rank", type=int)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="carterlib",
        description="Carter diagrams of reduced reflection factorizations: "
                    "enumeration, quiver-mutation comparison, presentation "
                    "verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root system summary")
    _add_type_rank(p)
    p.add_argument("--json", action="store_true",
                   help="emit the full JSON realization")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("enumerate", help="write a diagram atlas")
    _add_type_rank(p)
    p.add_argument("--method", choices=["construct", "oracle", "hurwitz"],
                   default="oracle")
    p.add_argument("--long-running", action="store_true",
                   help="lift the oracle size guards (hours-scale for E7/E8)")
    p.add_argument("--cap-orbit", type=int, default=10 ** 6)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized quasi-Coxeter class search")
    p.add_argument("--seed-budget", type=int, default=20000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check-theorem1",
                       help="mutation class vs atlas comparison")
    _add_type_rank(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check_theorem1)

    p = sub.add_parser("verify-presentations",
                       help="coset-enumerate every atlas diagram")
    p.add_argument("atlas", help="atlas JSON file with witness roots")
    p.add_argument("--cap-cosets", type=int, default=2_000_000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify_presentations)

    p = sub.add_parser("hurwitz-orbit",
                       help="orbit statistics of a factorization")
    p.add_argument("factorization", help="factorization JSON file")
    p.add_argument("--cap-orbit", type=int, default=10 ** 6)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_hurwitz_orbit)

    p = sub.add_parser("export", help="JSON diagram/quiver to DOT")
    p.add_argument("input")
    p.add_argument("--format", default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
