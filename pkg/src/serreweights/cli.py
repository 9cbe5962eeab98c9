"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 domain error (not irreducible,
non-integral conductor, truncation, decomposition), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Iterator

from .char_arith import LocalPlace, character_from_json, place_from_json
from .conductor import conductor_exponent, filtration_from_json, level_from_json
from .errors import DomainError, ValidationError
from .modp_llc import bl_classify, coker_I1_dimension, llc_weights, weight
from .weight_core import describe_generator, jh_principal_series, jh_sym
from .weight_recipe import (
    CASES,
    InertialDatum,
    all_data,
    datum_from_json,
    global_from_json,
    lookup,
    minimal_weight,
    weight_table,
    weights_global,
    weights_local,
)

EXIT_OK, EXIT_VALIDATION, EXIT_DOMAIN, EXIT_USAGE = 0, 2, 3, 64
DEFAULT_BUDGET = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Result:
    payload: dict
    rows: list[dict]
    columns: list[str]


def compact(value) -> str:
    return json.dumps(value, separators=(",", ":"), sort_keys=True)


def render_table(rows: list[dict], columns: list[str]) -> str:
    """ASCII table; every cell holds the compact JSON of its value."""
    cells = [[compact(r[c]) if c in r else "" for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    sep = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    line = lambda vals: "| " + " | ".join(v.ljust(w) for v, w in zip(vals, widths)) + " |"
    return "\n".join([sep, line(columns), sep] + [line(r) for r in cells] + [sep])


def parse_table(text: str) -> list[dict]:
    """Inverse of :func:`render_table` (used by the golden-file tests)."""
    lines = [ln for ln in text.splitlines() if ln.startswith("|")]
    header = [c.strip() for c in lines[0].strip("|").split(" | ")]
    out = []
    for ln in lines[1:]:
        vals = [c.strip() for c in ln[2:-2].split(" | ")]
        out.append({h: json.loads(v) for h, v in zip(header, vals) if v})
    return out


def _load(args) -> dict:
    if args.inline is not None and args.file is not None:
        raise UsageError("give only one of --inline / --file")
    try:
        if args.inline is not None:
            return json.loads(args.inline)
        if args.file is not None:
            with open(args.file, encoding="utf-8") as fh:
                return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON input: {exc}") from exc
    except OSError as exc:
        raise ValidationError(f"cannot read {args.file}: {exc}") from exc
    return {}


def _weight_rows(weights, extra=None) -> list[dict]:
    rows = []
    for i, s in enumerate(weights):
        row = {"label": s.label(), "r": list(s.r), "w": list(s.w)}
        if extra:
            row.update(extra[i])
        rows.append(row)
    return rows


def _multiset_result(ms, meta=None) -> Result:
    payload = {"weights": ms.to_json()}
    rows = [{"label": s.label(), "r": list(s.r), "w": list(s.w), "mult": m} for s, m in ms.items()]
    if meta:
        payload["metadata"] = meta
    return Result(payload, rows, ["label", "r", "w", "mult"])


def cmd_weights(args) -> Result:
    lw = weights_local(datum_from_json(_load(args)))
    payload = lw.to_json(witnesses=args.witnesses)
    extra = [{"witness": w.to_json()} for w in lw.witnesses] if args.witnesses else None
    cols = ["label", "r", "w"] + (["witness"] if args.witnesses else [])
    rows = _weight_rows(lw.weights, extra)
    for r in rows:
        r["exact"] = lw.exact
    return Result(payload, rows, cols + ["exact"])


def cmd_global_weights(args) -> Result:
    g = global_from_json(_load(args))
    tuples = weights_global(g)
    exact = all(d.exact for _, d in g.places)
    labels = [lab for lab, _ in g.places]
    payload = {
        "places": labels,
        "weights": [[s.to_json() for s in t] for t in tuples],
        "exact": exact,
    }
    rows = [{"weights": [s.to_json() for s in t], "exact": exact} for t in tuples]
    return Result(payload, rows, ["weights", "exact"])


def cmd_min_weight(args) -> Result:
    k = minimal_weight(datum_from_json(_load(args)))
    return Result({"k": k}, [{"k": k}], ["k"])


def cmd_conductor(args) -> Result:
    data = _load(args)
    rep = conductor_exponent(filtration_from_json(data), str(data.get("place", "")))
    payload = rep.to_json()
    return Result(payload, [payload], ["place", "a_v", "terms"])


def cmd_level(args) -> Result:
    lev = level_from_json(_load(args))
    payload = lev.to_json()
    rows = [dict(f, norm=lev.norm) for f in payload["factors"]] or [{"norm": lev.norm}]
    return Result(payload, rows, ["place", "exponent", "norm"])


def cmd_jh_sym(args) -> Result:
    _need(args, "p", "m")
    return _multiset_result(jh_sym(_prime(args.p), args.m))


def cmd_jh_ps(args) -> Result:
    data = _load(args)
    if data:
        place = place_from_json(data["place"]) if "place" in data else _missing("place")
        theta = (character_from_json(place, data["chi1"]), character_from_json(place, data["chi2"]))
    else:
        _need(args, "p", "n1", "n2")
        place = LocalPlace(args.p, 1, args.f)
        theta = tuple(character_from_json(place, {"niveau": 1, "exponent": n}) for n in (args.n1, args.n2))
    meta = describe_generator(place.p, place.f) if args.meta else None
    return _multiset_result(jh_principal_series(theta), meta)


def cmd_llc(args) -> Result:
    data = _load(args)
    p = int(data["p"]) if data else args.p
    n = int(data["n"]) if data else args.n
    if p is None or n is None:
        raise UsageError("llc needs --p and --n (or JSON input)")
    res = llc_weights(_prime(p), n)
    payload = res.to_json()
    rows = _weight_rows(res.weights)
    for r in rows:
        r["pi_label"] = res.pi_label
    return Result(payload, rows, ["label", "r", "w", "pi_label"])


def cmd_classify(args) -> Result:
    _need(args, "q", "dim", "lam")
    label = bl_classify(args.q, args.dim, args.lam)
    payload = {"q": args.q, "dim": args.dim, "lambda": args.lam, "classification": label}
    return Result(payload, [payload], ["q", "dim", "lambda", "classification"])


def cmd_hecke_dim(args) -> Result:
    data = _load(args)
    if data:
        try:
            p, r, w, radius = (int(data[k]) for k in ("p", "r", "w", "radius"))
        except KeyError as exc:
            raise ValidationError(f"missing field {exc}") from exc
    else:
        _need(args, "p", "r", "radius")
        p, r, w, radius = args.p, args.r, args.w, args.radius
    res = coker_I1_dimension(weight(_prime(p), r, w), radius)
    payload = res.to_json()
    if args.meta:
        payload["metadata"] = {"coefficient_field": f"F_{p}", "trajectory": list(res.trajectory)}
    return Result(payload, [res.to_json()], ["dim", "stabilized"])


def enumerate_data(p: int, e: int, f: int, case: str, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[InertialDatum, list]]:
    """All inertial data of ``case`` at (p, e, f) with their weight sets.

    Reducible cases iterate ordered pairs (chi1, chi2); the irreducible case
    iterates every exponent n with (q+1) not dividing n.
    """
    if case not in CASES:
        raise ValidationError(f"unknown case {case!r}")
    place = LocalPlace(p, e, f)
    if place.q**2 > budget:
        raise ValidationError(f"q^2 = {place.q ** 2} exceeds the enumeration budget {budget}")
    table = weight_table(place, case)
    for datum in all_data(place, case):
        yield datum, lookup(table, datum)


def cmd_enumerate(args) -> Result:
    _need(args, "p", "case")
    place = LocalPlace(args.p, args.e, args.f)
    q = place.q
    if args.case == "irreducible":
        keys = [{"n": n} for n in range(q * q - 1) if n % (q + 1)]
    else:
        keys = [{"n1": a, "n2": b} for a in range(q - 1) for b in range(q - 1)]
    items, rows = [], []
    for key, (datum, ws) in zip(keys, enumerate_data(args.p, args.e, args.f, args.case, args.budget)):
        record = {"datum": datum.to_json(), "weights": [s.to_json() for s in ws], "exact": datum.exact}
        items.append(dict(key, **record))
        rows.append(dict(key, weights=record["weights"], exact=datum.exact))
    cols = list(keys[0]) + ["weights", "exact"]
    return Result({"data": items, "count": len(items)}, rows, cols)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs " + ", ".join("--" + m for m in missing))


def _missing(name):
    raise ValidationError(f"missing field {name!r}")


def _prime(p: int) -> int:
    LocalPlace(p)  # validates primality
    return p


COMMANDS = {
    "weights": cmd_weights,
    "global-weights": cmd_global_weights,
    "min-weight": cmd_min_weight,
    "conductor": cmd_conductor,
    "level": cmd_level,
    "jh-sym": cmd_jh_sym,
    "jh-ps": cmd_jh_ps,
    "llc": cmd_llc,
    "classify": cmd_classify,
    "hecke-dim": cmd_hecke_dim,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="serreweights", description="Serre weights, levels and mod-p LLC bookkeeping")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--inline", help="input as a JSON string")
        sp.add_argument("--file", help="path to a JSON input file")
        sp.add_argument("--format", choices=["table", "json"], default="table")
        sp.add_argument("--meta", action="store_true", help="attach reproducibility metadata")
        if name == "weights":
            sp.add_argument("--witnesses", action="store_true")
        if name in ("jh-sym", "jh-ps", "llc", "hecke-dim", "enumerate"):
            sp.add_argument("--p", type=int)
        if name == "jh-sym":
            sp.add_argument("--m", type=int)
        if name == "jh-ps":
            sp.add_argument("--f", type=int, default=1)
            sp.add_argument("--n1", type=int)
            sp.add_argument("--n2", type=int)
        if name == "llc":
            sp.add_argument("--n", type=int)
        if name == "classify":
            sp.add_argument("--q", type=int)
            sp.add_argument("--dim", type=int)
            sp.add_argument("--lambda", dest="lam", type=int)
        if name == "hecke-dim":
            sp.add_argument("--r", type=int)
            sp.add_argument("--w", type=int, default=0)
            sp.add_argument("--radius", type=int)
        if name == "enumerate":
            sp.add_argument("--e", type=int, default=1)
            sp.add_argument("--f", type=int, default=1)
            sp.add_argument("--case", choices=CASES)
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def execute(argv: list[str]) -> tuple[int, str]:
    """Run one command; returns (exit code, text written to stdout or stderr)."""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        res = COMMANDS[args.command](args)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}\n{build_parser().format_usage()}"
    except ValidationError as exc:
        return EXIT_VALIDATION, f"invalid input: {exc}"
    except DomainError as exc:
        return EXIT_DOMAIN, f"{type(exc).__name__}: {exc}"
    if args.format == "json":
        return EXIT_OK, json.dumps(res.payload, separators=(",", ":"))
    return EXIT_OK, render_table(res.rows, res.columns)


def run(argv: list[str] | None = None) -> int:
    code, text = execute(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    print(text, file=stream)
    return code


def main() -> None:
    sys.exit(run())
