"""Band reports in JSON and plain-text form."""

from __future__ import annotations

import json

from . import bands as bd
from .checks import bound_exponent, bound_text, within_bound
from .cone import ConeSpec, LambdaSet, format_rational
from .satcore import IndexSet, enumerate_saturated

SCHEMA = "bandforge.report/1"


def labels(s: IndexSet, lam: LambdaSet) -> list[str]:
    return [lam.labels[i] for i in s]


def fmt_set(s: IndexSet, lam: LambdaSet) -> str:
    return "{" + ", ".join(labels(s, lam)) + "}"


def band_entry(b: bd.Band, lam: LambdaSet) -> dict:
    proc_i, proc_ii = bd.extension_carriers(b, lam)
    return {
        "n_set": labels(b.n_set, lam),
        "n_indices": b.n_set.one_based(),
        "carrier": labels(b.carrier, lam),
        "dim": b.dim,
        "basis": [[format_rational(x) for x in v] for v in b.space.basis],
        "directed": b.directed,
        "partner": labels(b.partner_n_set, lam),
        "proc_i": labels(proc_i, lam),
        "proc_ii": labels(proc_ii, lam),
    }


def lambda_entries(lam: LambdaSet) -> list[dict]:
    return [
        {
            "label": lam.labels[i],
            "source_index": lam.source_indices[i] + 1,
            "functional": [format_rational(x) for x in f],
        }
        for i, f in enumerate(lam.functionals)
    ]


def build_report(spec: ConeSpec, lam: LambdaSet, cap=None) -> dict:
    bands = bd.all_bands(lam, cap)
    n_sat = len(enumerate_saturated(lam, cap))
    e = bound_exponent(lam.dim)
    return {
        "schema": SCHEMA,
        "instance": {
            "dim": spec.dim,
            "m": spec.m,
            "lambda_size": len(lam),
            "unit": [format_rational(x) for x in spec.unit],
            "lambda": lambda_entries(lam),
        },
        "bands": [band_entry(b, lam) for b in bands],
        "counts": {
            "bands": len(bands),
            "directed_bands": sum(b.directed for b in bands),
            "saturated_sets": n_sat,
        },
        "bound": {
            "dim": lam.dim,
            "bound": None if e is None else bound_text(lam.dim),
            "holds": None if e is None else within_bound(len(bands), lam.dim),
        },
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _cell(values) -> str:
    return "{" + ",".join(values) + "}"


def format_table(report: dict) -> str:
    inst = report["instance"]
    counts = report["counts"]
    lines = [
        f"dim {inst['dim']}, m {inst['m']}, |Lambda| {inst['lambda_size']}, unit ({', '.join(inst['unit'])})",
        f"{counts['bands']} bands, {counts['directed_bands']} directed, {counts['saturated_sets']} saturated sets",
    ]
    bound = report["bound"]
    if bound["bound"] is None:
        lines.append("bound: n/a (dim < 2)")
    else:
        verdict = "ok" if bound["holds"] else "VIOLATED"
        lines.append(f"bound: {counts['bands']} <= {bound['bound']} {verdict}")
    header = ("N", "carrier", "dim", "directed", "partner", "procI", "procII", "basis")
    rows = [header]
    for b in report["bands"]:
        basis = "; ".join("(" + ",".join(v) + ")" for v in b["basis"]) or "0"
        rows.append((
            _cell(b["n_set"]),
            _cell(b["carrier"]),
            str(b["dim"]),
            "yes" if b["directed"] else "no",
            _cell(b["partner"]),
            _cell(b["proc_i"]),
            _cell(b["proc_ii"]),
            basis,
        ))
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines.append("")
    for r in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"
