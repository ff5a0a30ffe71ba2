"""Command-line front end.

Exit codes: 0 success, 1 a mathematical disagreement (or a conjecture
counterexample), 2 a usage or config error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import formulas
from .codes import generator_matrix, write_matrix
from .gf import FieldError, prime_power
from .oracles import (CHEAP_CODEWORDS, SearchBudget, check_conjecture, exhaustive_min_distance,
                      hilbert_by_rank, witness_weight)
from .sets import (SpecError, classify, load_spec, normalize, spec_to_dict,
                   validate)

log = logging.getLogger("pncc")


class UsageError(Exception):
    pass


def parse_degrees(text: str) -> list[int]:
    """``"1-10,25"`` or ``"1..10,25"`` -> ``[1, ..., 10, 25]``."""
    out: list[int] = []
    for part in text.replace("..", "-").split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                lo, hi = (int(x) for x in part.split("-", 1))
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad degree list {text!r}") from None
    return out


def _degrees(args, default_start: int = 1) -> list[int]:
    if getattr(args, "degrees", None):
        return parse_degrees(args.degrees)
    if getattr(args, "degree", None) is not None:
        return list(range(default_start, args.degree + 1))
    raise UsageError("give --degree or --degrees")


def _load(args):
    if not args.spec:
        raise UsageError("--spec is required")
    path = Path(args.spec)
    if not path.is_file():
        raise UsageError(f"cannot read spec file {path}")
    return load_spec(path)


def _load_valid(args):
    spec = _load(args)
    report = validate(spec)
    if not report.valid:
        raise UsageError("invalid spec: " + "; ".join(map(str, report.violations)))
    return normalize(spec)


def _budget(args) -> SearchBudget:
    kw = {}
    if args.budget_codewords is not None:
        kw["max_codewords"] = args.budget_codewords
    if args.budget_seconds is not None:
        kw["max_seconds"] = args.budget_seconds
    return SearchBudget(**kw)


def render(rows: list[dict], columns: list[str], fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        doc = dict(meta or {})
        doc["rows"] = rows
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({c: ("" if r.get(c) is None else r.get(c)) for c in columns})
        return buf.getvalue()
    cells = [[c for c in columns]] + [["-" if r.get(c) is None else str(r.get(c)) for c in columns]
                                      for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _loud(msg: str) -> None:
    # findings, not diagnostics: always on stderr regardless of log level
    print(msg, file=sys.stderr)


def _emit(text: str, args) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------

def cmd_validate(args) -> int:
    spec = _load(args)
    report = validate(spec)
    cls = str(classify(normalize(spec))) if report.valid else None
    if args.format == "json":
        doc = {"valid": report.valid, "violations": [str(v) for v in report.violations],
               "classification": cls, "spec": spec_to_dict(spec)}
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args)
    else:
        lines = [f"valid: {'yes' if report.valid else 'no'}"]
        lines += [f"violation: {v}" for v in report.violations]
        if cls:
            lines.append(f"classification: {cls}")
        _emit("\n".join(lines) + "\n", args)
    return 0 if report.valid else 1


def cmd_table(args) -> int:
    spec = _load_valid(args)
    cls = classify(spec)
    rows, bad = [], []
    for d in _degrees(args):
        if d < 1:
            raise UsageError("table degrees start at 1")
        dist = formulas.projective_min_distance(spec.sizes, d, cls)
        dim = formulas.dimension_formula(spec.sizes, d)
        if args.check:
            r = hilbert_by_rank(spec, d)
            if r != dim:
                bad.append(f"d={d}: dimension formula {dim} but rank {r}")
        rows.append({"d": d, "length": formulas.length_formula(spec.sizes),
                     "dimension": dim, "distance": dist.value, "status": dist.status})
    meta = {"spec": spec_to_dict(spec), "classification": str(cls)}
    _emit(render(rows, ["d", "length", "dimension", "distance", "status"], args.format, meta), args)
    for msg in bad:
        _loud(f"DISAGREEMENT {msg}")
    return 1 if bad else 0


def cmd_genmat(args) -> int:
    spec = _load_valid(args)
    if args.degree is None or args.degree < 0:
        raise UsageError("genmat needs --degree >= 0")
    if not args.out:
        raise UsageError("genmat needs --out")
    G = generator_matrix(spec, args.degree)
    try:
        write_matrix(G, args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(f"rank {G.rank}")
    return 0


def cmd_mindist(args) -> int:
    spec = _load_valid(args)
    cls = classify(spec)
    budget = _budget(args)
    rows, disagree = [], False
    for d in _degrees(args, default_start=args.degree if args.degree is not None else 1):
        if d < 0:
            raise UsageError("minimum distance needs degree >= 0")
        formula = formulas.projective_min_distance(spec.sizes, d, cls)
        ww = witness_weight(spec, d)
        G = generator_matrix(spec, d)
        total = spec.field.q ** G.rank - 1
        cap = budget.max_codewords
        if formula.status != formulas.CONJECTURED and args.budget_codewords is None:
            # proven values: enumerate only when it is cheap, unless asked to
            cap = min(cap, CHEAP_CODEWORDS)
        row = {"d": d, "formula": formula.value, "status": formula.status,
               "witness_weight": ww, "oracle": None, "oracle_status": "skipped-budget",
               "oracle_upper_bound": None, "codewords": total}
        ok = ww == formula.value
        log.info("d=%d: rank %d, %d nonzero codewords, cap %d", d, G.rank, total, cap)
        if total <= cap:
            res = exhaustive_min_distance(spec, d, budget, workers=args.workers, matrix=G)
            if res.complete:
                row["oracle"], row["oracle_status"] = res.distance, "exact"
                if formula.status == formulas.CONJECTURED:
                    ok = ok and res.distance >= formula.value
                else:
                    ok = ok and res.distance == formula.value
                ok = ok and res.distance <= ww
            else:
                row["oracle_status"] = "budget-exceeded"
                row["oracle_upper_bound"] = res.distance
        row["agree"] = ok
        disagree |= not ok
        rows.append(row)
    cols = ["d", "formula", "status", "witness_weight", "oracle", "oracle_status",
            "oracle_upper_bound", "codewords", "agree"]
    meta = {"spec": spec_to_dict(spec), "classification": str(cls)}
    _emit(render(rows, cols, args.format, meta), args)
    if disagree:
        _loud("DISAGREEMENT between formula, witness and exhaustive search")
    return 1 if disagree else 0


def cmd_conjecture(args) -> int:
    spec = _load_valid(args)
    degrees = _degrees(args)
    if any(d < 1 for d in degrees):
        raise UsageError("conjecture degrees start at 1")
    report = check_conjecture(spec, degrees, _budget(args), workers=args.workers)
    _emit(report.to_json(), args)
    for e in report.refuted:
        _loud(f"COUNTEREXAMPLE d={e.degree} conjectured={e.conjectured} "
              f"measured={e.measured} witness={e.witness}")
    return 1 if report.refuted else 0


def cmd_prm(args) -> int:
    if args.n is None or args.q is None:
        raise UsageError("prm needs --n and --q")
    pr = prime_power(args.q)
    if pr is None:
        raise UsageError(f"q={args.q} is not a prime power")
    if args.n < 1:
        raise UsageError("prm needs n >= 1")
    sizes = (args.q,) * (args.n + 1)
    rows, bad = [], False
    for d in _degrees(args):
        if d < 1:
            raise UsageError("prm degrees start at 1")
        length, dim, dist = formulas.prm_parameters(args.n, args.q, d)
        general = (formulas.length_formula(sizes), formulas.dimension_formula(sizes, d),
                   formulas.projective_min_distance(sizes, d, "product_of_fields").value)
        if general != (length, dim, dist):
            bad = True
            _loud(f"DISAGREEMENT d={d}: corollary {(length, dim, dist)} vs general {general}")
        rows.append({"d": d, "length": length, "dimension": dim, "distance": dist})
    meta = {"n": args.n, "q": args.q}
    _emit(render(rows, ["d", "length", "dimension", "distance"], args.format, meta), args)
    return 1 if bad else 0


COMMANDS = {"validate": cmd_validate, "table": cmd_table, "genmat": cmd_genmat,
            "mindist": cmd_mindist, "conjecture": cmd_conjecture, "prm": cmd_prm}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pncc", description=(
        "Parameters of projective nested cartesian codes, checked by brute force."))
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--spec", help="spec config file (YAML or JSON)")
    parser.add_argument("--degree", type=int, help="degree (d_max for table/prm/conjecture)")
    parser.add_argument("--degrees", help="degree list or range, e.g. 1-10,25")
    parser.add_argument("--format", choices=["table", "csv", "json"], default="table")
    parser.add_argument("--out", help="write output to this file")
    parser.add_argument("--budget-codewords", type=int)
    parser.add_argument("--budget-seconds", type=float)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--n", type=int, help="projective dimension for prm")
    parser.add_argument("--q", type=int, help="field order for prm")
    parser.add_argument("--no-check", dest="check", action="store_false",
                        help="table: skip the rank cross-check of each dimension")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s")
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, SpecError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
