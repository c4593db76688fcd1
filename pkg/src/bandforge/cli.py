"""Command-line interface: ``bandforge <command> ...``.

Exit codes: 0 success, 1 validation failure (or a failed check), 2 parse
error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bands as bd
from . import checks
from . import cone as cn
from . import gen
from .ratmath import dot
from .report import build_report, dumps_report, fmt_set, format_table, lambda_entries
from .satcore import (
    CapExceeded,
    IndexSet,
    default_cap,
    enumerate_bisaturated,
    enumerate_saturated,
    is_bisaturated,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_CAP = 3


class ValidationFailed(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _dump(doc) -> None:
    _emit(json.dumps(doc, indent=2) + "\n")


def _load_valid(path):
    spec = cn.load_cone(path)
    report = cn.validate(spec)
    if not report.valid:
        raise ValidationFailed("; ".join(report.messages()))
    return spec, cn.extreme_points(spec)


def parse_vector(text: str, dim: int):
    parts = [p.strip() for p in text.split(",")]
    vals = tuple(cn.parse_rational(p) for p in parts)
    if len(vals) != dim:
        raise cn.ParseError(f"vector {text!r} has {len(vals)} entries, expected {dim}")
    return vals


def parse_index_set(text: str, lam: cn.LambdaSet) -> IndexSet:
    tokens = [t.strip() for t in text.strip().strip("{}").split(",") if t.strip()]
    try:
        return IndexSet.of((lam.index_of(t) for t in tokens), len(lam))
    except KeyError as exc:
        raise cn.ParseError(f"unknown functional {exc.args[0]!r}") from None


def cmd_validate(args) -> int:
    spec = cn.load_cone(args.file)
    report = cn.validate(spec)
    if args.json:
        _dump({
            "valid": report.valid,
            "dim": report.dim,
            "rank": report.rank,
            "messages": report.messages(),
        })
    else:
        _emit("valid\n" if report.valid else "".join(f"invalid: {m}\n" for m in report.messages()))
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_lambda(args) -> int:
    spec, lam = _load_valid(args.file)
    entries = lambda_entries(lam)
    if args.json:
        _dump({"m": spec.m, "lambda_size": len(lam), "lambda": entries})
        return EXIT_OK
    _emit(f"|Lambda| = {len(lam)} of {spec.m} functionals\n")
    for e in entries:
        _emit(f"{e['label']}  (input #{e['source_index']})  ({', '.join(e['functional'])})\n")
    return EXIT_OK


def cmd_bands(args) -> int:
    spec, lam = _load_valid(args.file)
    report = build_report(spec, lam, args.cap)
    _emit(dumps_report(report) if args.json else format_table(report))
    return EXIT_OK


def cmd_saturated(args) -> int:
    _, lam = _load_valid(args.file)
    fam = enumerate_bisaturated(lam, args.cap) if args.bisaturated else enumerate_saturated(lam, args.cap)
    if args.json:
        _dump({
            "kind": fam.kind.value,
            "count": len(fam),
            "sets": [[lam.labels[i] for i in s] for s in fam],
        })
        return EXIT_OK
    _emit(f"{len(fam)} {fam.kind.value} sets\n")
    for s in fam:
        mark = "  bisaturated" if not args.bisaturated and is_bisaturated(s, lam) else ""
        _emit(f"{fmt_set(s, lam)}{mark}\n")
    return EXIT_OK


def cmd_disjoint(args) -> int:
    _, lam = _load_valid(args.file)
    x = parse_vector(args.x, lam.dim)
    y = parse_vector(args.y, lam.dim)
    verdict = bd.vectors_disjoint(x, y, lam)
    for label, f in zip(lam.labels, lam.functionals):
        fx, fy = dot(f, x), dot(f, y)
        ok = "ok" if fx == 0 or fy == 0 else "both nonzero"
        _emit(f"{label}: phi(x) = {fx}, phi(y) = {fy}  {ok}\n")
    _emit("disjoint\n" if verdict else "not disjoint\n")
    return EXIT_OK


def cmd_extend(args) -> int:
    _, lam = _load_valid(args.file)
    n_set = parse_index_set(args.n_set, lam)
    if not is_bisaturated(n_set, lam):
        _emit(f"{fmt_set(n_set, lam)} is not bisaturated: no band has this N-set\n")
        return EXIT_INVALID
    band = bd.make_band(n_set, lam)
    proc_i, proc_ii = bd.extension_carriers(band, lam)
    if args.json:
        _dump({
            "n_set": [lam.labels[i] for i in n_set],
            "carrier": [lam.labels[i] for i in band.carrier],
            "proc_i": [lam.labels[i] for i in proc_i],
            "proc_ii": [lam.labels[i] for i in proc_ii],
        })
        return EXIT_OK
    _emit(f"band with N = {fmt_set(n_set, lam)}, carrier {fmt_set(band.carrier, lam)}\n")
    _emit(f"procedure I  carrier: {fmt_set(proc_i, lam)}\n")
    _emit(f"procedure II carrier: {fmt_set(proc_ii, lam)}\n")
    return EXIT_OK


def cmd_generate(args) -> int:
    recipe = gen.GeneratorRecipe(args.kind, args.n, args.seed)
    text = cn.dumps_cone(recipe.build())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        _emit(text)
    return EXIT_OK


def cmd_check(args) -> int:
    _, lam = _load_valid(args.file)
    cap = default_cap() if args.cap is None else args.cap
    if len(lam) > cap:
        raise CapExceeded(len(lam), cap)
    results = checks.run_all(lam)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        _emit(f"{status}  {r.name}" + (f"  ({r.detail})" if r.detail else "") + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_INVALID


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bandforge", description="Enumerate bands of polyhedral ordered spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="cone JSON file")
        p.set_defaults(func=func)
        return p

    def with_cap(p):
        p.add_argument("--cap", type=int, default=None, help="enumeration cap on |Lambda| (default 22 or $BANDFORGE_CAP)")

    p = with_file("validate", cmd_validate, "check that K is a cone with the unit in its interior")
    p.add_argument("--json", action="store_true")

    p = with_file("lambda", cmd_lambda, "list the extreme points of the dual base")
    p.add_argument("--json", action="store_true")

    p = with_file("bands", cmd_bands, "enumerate all bands")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", dest="json", action="store_false")
    with_cap(p)

    p = with_file("saturated", cmd_saturated, "list saturated (or bisaturated) index sets")
    p.add_argument("--bisaturated", action="store_true")
    p.add_argument("--json", action="store_true")
    with_cap(p)

    p = with_file("disjoint", cmd_disjoint, "decide disjointness of two vectors (use --x=-1,2 for negatives)")
    p.add_argument("--x", required=True, help="comma-separated rationals")
    p.add_argument("--y", required=True, help="comma-separated rationals")

    p = with_file("extend", cmd_extend, "carriers of the two band extensions")
    p.add_argument("--n-set", required=True, help="labels or 1-based indices, comma-separated")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("generate", help="write a built-in or random cone file")
    p.add_argument("kind", choices=[k.value for k in gen.Kind])
    p.add_argument("--n", type=int, default=0, help="dimension parameter (standard_lattice, general_position)")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = with_file("check", cmd_check, "run the invariant suite on an instance")
    with_cap(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except cn.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationFailed, cn.ConeError) as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, gen.GenerationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
