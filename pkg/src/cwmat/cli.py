"""Command-line interface.

Four subcommands mirror the library pipeline: verify a single row,
prune orbit-length-partition pairs for a weight, search one pair at one
order, and classify all odd orders up to a bound. Text output is for
reading; --format json (or --out FILE) emits a stable payload whose row
objects always carry the same fields in the same order: n, weight, row,
P, N, olpP, olpN.

Exit codes: 0 success, 1 the verified row is not a weighing row,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .multisets import cw_equation_holds
from .orbits import ModulusContext, units
from .pruning import (
    ExistenceWitness,
    Olp,
    OlpPair,
    feasible_pairs,
    olp_of_set,
    prune,
)
from .rows import CirculantRow, describing_sets, multiplier_shift, verify_cw
from .search import SearchSpec, classify, exhaustive_search, full_classification


def _olp_json(olp: Olp) -> list[list[int]]:
    return [[length, mult] for length, mult in sorted(olp.multiplicities.items())]


def _set_olp(indices, n: int, t: int) -> Olp | None:
    """olp of an index set, or None when it is not a union of t-orbits
    (or t is not even a unit mod n)."""
    try:
        return olp_of_set(indices, ModulusContext(n, t))
    except ValueError:
        return None


def _row_payload(row: CirculantRow, t: int) -> dict:
    sets = describing_sets(row)
    olp_p = _set_olp(sets.P, row.n, t)
    olp_n = _set_olp(sets.N, row.n, t)
    return {
        "n": row.n,
        "weight": verify_cw(row),
        "row": row.to_string(),
        "P": sorted(sets.P),
        "N": sorted(sets.N),
        "olpP": None if olp_p is None else _olp_json(olp_p),
        "olpN": None if olp_n is None else _olp_json(olp_n),
    }


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _olp_text(olp: Olp | None, t: int) -> str:
    if olp is None:
        return f"none (not a union of {t}-orbits)"
    return str(olp)


def cmd_verify(args) -> int:
    try:
        row = CirculantRow.from_string(args.row)
    except ValueError as exc:
        return _usage_error(str(exc))
    t = args.multiplier
    payload = _row_payload(row, t)
    mults = []
    for u in units(row.n):
        s = multiplier_shift(row, u)
        if s is not None:
            mults.append([u, s])
    payload["multipliers"] = mults
    sets = describing_sets(row)
    payload["cwEquation"] = cw_equation_holds(sets.P, sets.N, row.n)

    weight = payload["weight"]
    lines = [
        f"n: {row.n}",
        f"weight: {weight if weight is not None else 'not a weighing row'}",
        f"row: {row.to_string()}",
        f"P: {' '.join(map(str, payload['P'])) or '-'}",
        f"N: {' '.join(map(str, payload['N'])) or '-'}",
        f"olp(P): {_olp_text(_set_olp(sets.P, row.n, t), t)}",
        f"olp(N): {_olp_text(_set_olp(sets.N, row.n, t), t)}",
        "multipliers: " + (", ".join(f"t={u} s={s}" for u, s in mults) or "none"),
        f"cw equation: {'holds' if payload['cwEquation'] else 'fails'}",
    ]
    _emit(args, payload, lines)
    return 0 if weight is not None else 1


def _witness_json(w) -> dict:
    if isinstance(w, ExistenceWitness):
        return {"kind": "existence", "k": w.k, "l": w.l, "lengths": list(w.lengths)}
    return {
        "kind": "counting",
        "length": w.length,
        "minCount": w.min_count,
        "maxCount": w.max_count,
        "direction": w.direction,
    }


def cmd_prune(args) -> int:
    try:
        pairs = feasible_pairs(args.weight, args.multiplier)
    except ValueError as exc:
        return _usage_error(str(exc))
    reports = prune(pairs, level=args.level, t=args.multiplier)

    total = len(reports)
    existence_survivors = sum(
        1
        for r in reports
        if not any(isinstance(w, ExistenceWitness) for w in r.witnesses)
    )
    summary = f"{total} -> {existence_survivors} (existence)"
    payload_summary = {"pairs": total, "existenceSurvivors": existence_survivors}
    if args.level == "counting":
        counting_survivors = sum(1 for r in reports if r.verdict == "accepted")
        summary += f" -> {counting_survivors} (counting)"
        payload_summary["countingSurvivors"] = counting_survivors

    payload = {
        "weight": args.weight,
        "t": args.multiplier,
        "level": args.level,
        "pairs": [
            {
                "index": i,
                "olpP": _olp_json(r.pair.p),
                "olpN": _olp_json(r.pair.n),
                "verdict": r.verdict,
                "witnesses": [_witness_json(w) for w in r.witnesses],
            }
            for i, r in enumerate(reports, 1)
        ],
        "summary": payload_summary,
    }

    lines = [f"weight {args.weight}, t={args.multiplier}, level {args.level}"]
    for i, r in enumerate(reports, 1):
        head = f"{i:3d}  {r.verdict:8s}  ({r.pair.p}, {r.pair.n})"
        lines.append(head + (f"  {r.reason}" if r.witnesses else ""))
    lines.append(summary)
    _emit(args, payload, lines)
    return 0


def cmd_search(args) -> int:
    try:
        pair = OlpPair(Olp.from_string(args.olpP), Olp.from_string(args.olpN))
        spec = SearchSpec(args.n, args.weight, args.multiplier, pair)
    except ValueError as exc:
        return _usage_error(str(exc))
    report = exhaustive_search(spec, jobs=args.jobs)
    classes = (
        classify(report.solutions, up_to_negation=True)
        if args.with_negation
        else report.classes
    )

    payload = {
        "n": spec.n,
        "weight": spec.weight,
        "t": spec.t,
        "olpP": _olp_json(pair.p),
        "olpN": _olp_json(pair.n),
        "candidatesTested": report.candidates_tested,
        "solutions": [_row_payload(row, spec.t) for row in report.solutions],
        "classes": [
            {
                "representative": c.representative.to_string(),
                "size": c.size,
                "members": [m.to_string() for m in c.members],
            }
            for c in classes
        ],
    }

    lines = [
        f"n={spec.n} weight={spec.weight} t={spec.t} "
        f"olp(P)={pair.p} olp(N)={pair.n}",
        f"candidates tested: {report.candidates_tested}",
        f"solutions: {len(report.solutions)}",
    ]
    lines.extend(f"  {row.to_string()}" for row in report.solutions)
    lines.append(f"classes: {len(classes)}")
    for i, c in enumerate(classes, 1):
        lines.append(f"  {i}. size {c.size}  representative {c.representative.to_string()}")
    _emit(args, payload, lines)
    return 0


def cmd_classify(args) -> int:
    results = []
    for n in range(1, args.max_n + 1, 2):
        try:
            res = full_classification(args.weight, n, jobs=args.jobs)
        except ValueError as exc:
            return _usage_error(str(exc))
        if res.count:
            results.append(res)

    payload = {
        "weight": args.weight,
        "maxN": args.max_n,
        "orders": [
            {
                "n": r.n,
                "count": r.count,
                "crossChecked": r.cross_checked,
                "classes": [row.to_string() for row in r.classes],
            }
            for r in results
        ],
    }

    lines = [f"weight {args.weight}, odd orders up to {args.max_n}"]
    for r in results:
        word = "class" if r.count == 1 else "classes"
        suffix = " (cross-checked)" if r.cross_checked else ""
        lines.append(f"n={r.n}: {r.count} {word}{suffix}")
        lines.extend(f"  {row.to_string()}" for row in r.classes)
    _emit(args, payload, lines)
    return 0


def _output_flags(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out", metavar="FILE", default=None,
                     help="also write the JSON payload to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwmat",
        description="Verify, prune, search, and classify circulant weighing matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check one sign-string row")
    p.add_argument("row", help="sign string, e.g. '-++0+00' (spaces allowed)")
    p.add_argument("--multiplier", type=int, default=2,
                   help="t used for the olp readout (default 2)")
    _output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("prune", help="enumerate and prune olp pairs for a weight")
    p.add_argument("weight", type=int)
    p.add_argument("--level", choices=("existence", "counting"), default="counting")
    p.add_argument("--multiplier", type=int, default=2)
    _output_flags(p)
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("search", help="exhaustive orbit-assignment search at one order")
    p.add_argument("n", type=int)
    p.add_argument("weight", type=int)
    p.add_argument("olpP", help="olp of P, e.g. '5^2'")
    p.add_argument("olpN", help="olp of N, e.g. '1^1 5^1'")
    p.add_argument("--multiplier", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--with-negation", action="store_true",
                   help="classify up to sign as well as shift/substitution")
    _output_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", help="class counts for all odd orders up to a bound")
    p.add_argument("weight", type=int)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    _output_flags(p)
    p.set_defaults(func=cmd_classify)

    return parser


def _escape_sign_row(argv: list[str]) -> list[str]:
    """Keep argparse from eating a leading-dash sign string as options.

    A row like '-++0+00' looks like a flag cluster; tokens made only of
    '-', '+', '0', and spaces can never be real options, so the first
    one is moved to the end behind a '--' separator.
    """
    if not argv or argv[0] != "verify" or "--" in argv:
        return argv
    for i, tok in enumerate(argv[1:], 1):
        if tok.startswith("-") and len(tok) > 1 and set(tok) <= set("-+0 "):
            return argv[:i] + argv[i + 1 :] + ["--", tok]
    return argv


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_escape_sign_row(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
