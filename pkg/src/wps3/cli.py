"""Command-line interface.

Every command produces a list of flat records; ``--json`` and ``--csv`` only
change how they are printed.  Exit status: 0 ok, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction

from .classify import (
    anticanonical_degree,
    anticanonical_genus,
    enumerate_gorenstein_wps3,
    gorenstein_invariants,
    is_gorenstein,
    is_well_formed,
)
from .grading import WeightedSpace, hilbert_count
from .reference import ReferenceDataError, load_reference
from .toric import wps_fan
from .veronese import veronese_embedding
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _weights(text: str) -> WeightedSpace:
    try:
        return WeightedSpace.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _wtext(ws) -> str:
    return ",".join(map(str, ws))


def cell(v) -> str:
    """Text form of a record value, shared by the table and CSV printers."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(_jsonable(v), separators=(",", ":"))
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


# --------------------------------------------------------------------------
# commands: each returns (records, payload for --json, ok)


def classification_rows(reference=None) -> list[dict]:
    """The computed classification, in the row order of the reference table."""
    ref = reference or load_reference()
    order = {r.weights.weights: r.row for r in ref.gorenstein}
    rows = []
    for s in enumerate_gorenstein_wps3():
        if s.weights not in order:
            raise ReferenceDataError(ref.source, 0, f"{s} is missing from the reference table")
        inv = gorenstein_invariants(s)
        rows.append({"row": order[s.weights], "weights": _wtext(s), "l": inv.l, "sigma": inv.sigma, "index": inv.index})
    return sorted(rows, key=lambda r: r["row"])


def classification_text(reference=None) -> str:
    lines = ["#\tP\tl\tσ\ti"]
    for r in classification_rows(reference):
        w = r["weights"].replace(",", ", ")
        lines.append(f"{r['row']}\tP({w})\t{r['l']}\t{r['sigma']}\t{r['index']}")
    return "\n".join(lines) + "\n"


def cmd_classify(args):
    rows = classification_rows(args.reference)
    for r in rows:
        r["g"] = anticanonical_genus(WeightedSpace.parse(r["weights"]))
    return rows, rows, True


def cmd_invariants(args):
    s: WeightedSpace = args.weights
    if len(s) != 4:
        raise UsageError(f"invariants needs four weights, got {len(s)}")
    rec = {
        "weights": _wtext(s),
        "well_formed": is_well_formed(s),
        "gorenstein": is_gorenstein(s),
        "l": s.lcm,
        "sigma": s.sigma,
        "index": None,
        "degree": str(anticanonical_degree(s)),
        "g": None,
    }
    if rec["gorenstein"]:
        rec["index"] = gorenstein_invariants(s).index
        rec["g"] = anticanonical_genus(s)
    return [rec], rec, True


def cmd_hilbert(args):
    if args.d < 0:
        raise UsageError("degree must be nonnegative")
    rec = {"weights": _wtext(args.weights), "d": args.d, "count": hilbert_count(args.weights, args.d)}
    return [rec], rec, True


def cmd_veronese(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    emb = veronese_embedding(args.weights, args.n)
    payload = emb.to_dict()
    payload["hypersurface"] = len(emb.relations) == 1
    rows = [
        {"kind": "generator", "name": g["name"], "text": g["monomial"], "weight": g["weight"]}
        for g in payload["generators"]
    ] + [{"kind": "relation", "name": "", "text": r["text"], "weight": r["degree"]} for r in payload["relations"]]
    if not payload["hypersurface"]:
        k = len(emb.generators)
        msg = f"not a hypersurface: {k} generators, {len(emb.relations)} relations"
        rows.append({"kind": "note", "name": "", "text": msg, "weight": None})
        payload["error"] = {"type": "NotHypersurface", "message": msg}
    return rows, payload, True


def cmd_fan(args):
    fan = wps_fan(args.weights)
    proper = fan.is_complete_and_proper()
    rows = [{"kind": "ray", "index": i, "data": list(r.vector)} for i, r in enumerate(fan.rays)]
    rows += [{"kind": "cone", "index": i, "data": sorted(c)} for i, c in enumerate(sorted(map(sorted, fan.max_cones)))]
    rows.append({"kind": "proper", "index": None, "data": proper})
    payload = dict(fan.to_dict(), weights=_wtext(args.weights), proper=proper)
    return rows, payload, proper


def _checks(checks):
    rows = [c.to_dict() for c in checks]
    return rows, {"checks": rows}, all(c.passed for c in checks)


def cmd_blowup_verify(args):
    return _checks(verify.toric_checks())


def cmd_degrees(args):
    return _checks(verify.degree_checks(args.reference or load_reference()))


def cmd_profiles(args):
    return _checks(verify.profile_checks())


def cmd_verify(args):
    if not args.all:
        raise UsageError("verify needs --all")
    report = verify.verify_all(args.reference)
    rows = [c.to_dict() for c in report.checks]
    return rows, report.to_dict(), report.passed


# --------------------------------------------------------------------------
# output


def render_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    body = [[cell(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(b[i]) for b in body)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(b, widths)).rstrip() for b in body]
    return "\n".join(lines) + "\n"


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: cell(v) for k, v in r.items()})
    return buf.getvalue()


def render_json(payload) -> str:
    return json.dumps(_jsonable(payload), indent=2, sort_keys=False, ensure_ascii=False) + "\n"


COMMANDS = {
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "hilbert": cmd_hilbert,
    "veronese": cmd_veronese,
    "fan": cmd_fan,
    "blowup-verify": cmd_blowup_verify,
    "degrees": cmd_degrees,
    "profiles": cmd_profiles,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="print JSON")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", help="print CSV")
    common.add_argument("--reference", metavar="PATH", help="alternate reference-data file")
    common.add_argument("-v", "--verbose", action="store_true", help="log reseeds and progress")

    p = argparse.ArgumentParser(prog="wps3", description="Gorenstein weighted projective 3-spaces: invariants and checks.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="list the 14 Gorenstein spaces")
    s = sub.add_parser("invariants", parents=[common], help="l, sigma, index and genus of one space")
    s.add_argument("weights", type=_weights)
    s = sub.add_parser("hilbert", parents=[common], help="number of monomials of degree d")
    s.add_argument("weights", type=_weights)
    s.add_argument("d", type=int)
    s = sub.add_parser("veronese", parents=[common], help="n-Veronese generators and relations")
    s.add_argument("weights", type=_weights)
    s.add_argument("--n", type=int, required=True)
    s = sub.add_parser("fan", parents=[common], help="fan of a weighted projective space")
    s.add_argument("weights", type=_weights)
    sub.add_parser("blowup-verify", parents=[common], help="toric checks of the blow-up factorization")
    sub.add_parser("degrees", parents=[common], help="degree and dimension checks of the extensions")
    sub.add_parser("profiles", parents=[common], help="restriction multiplicity profiles")
    s = sub.add_parser("verify", parents=[common], help="run every check")
    s.add_argument("--all", action="store_true", help="run the full suite")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        args.reference = load_reference(args.reference) if args.reference else None
        rows, payload, ok = COMMANDS[args.command](args)
    except (UsageError, ReferenceDataError, OSError) as exc:
        print(f"wps3 {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        out = render_json(payload)
    elif args.format == "csv":
        out = render_csv(rows)
    else:
        out = render_table(rows)
    sys.stdout.write(out)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
