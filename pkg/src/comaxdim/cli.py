"""Command-line front end.

    comaxdim analyze --ring "Z4 x Z4 x Z8" --oracle --json report.json
    comaxdim sweep --family reduced:2..6
    comaxdim graph --in k5.g6 --oracle

Exit status: 0 when every executed check passed, 1 when one failed, and the
error's own code otherwise (see :mod:`comaxdim.errors`). Tables go to stdout,
diagnostics to stderr, JSON only where asked for.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from contextlib import contextmanager
from typing import Optional

from . import __version__
from .config import Limits
from .errors import ComaxError, SpecParseError
from .graph import EXPORT_FORMATS, diameter, export, format_distance, load_graph
from .ring import RingSpec, enumerate_maximal_ideals, parse_ring_spec
from .solver import is_strong_resolving_set, max_independent_set, sdim_bruteforce, sdim_via_srg
from .strong_resolving import build_srg
from .theorems import (
    ERROR,
    FAIL,
    PASS,
    check_spec,
    nil_class_sizes,
    predicted_sdim,
    ring_analysis,
    sweep,
)

SCHEMA = 1
log = logging.getLogger("comaxdim")


class _Timer:
    def __init__(self):
        self.laps: dict[str, float] = {}

    @contextmanager
    def lap(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.laps[name] = round(time.perf_counter() - t0, 6)


def _limits(args) -> Limits:
    return Limits.from_env(
        enum_cap=args.enum_cap,
        solve_cap=args.cap,
        brute_cap=args.brute_cap,
    )


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _dump_json(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


# --- analyze --------------------------------------------------------------

def build_report(text: str, spec: RingSpec, limits: Limits, oracle: bool, timings: bool = True) -> dict:
    """The full per-ring record behind ``analyze``."""
    timer = _Timer()
    a = ring_analysis(spec, limits)
    with timer.lap("graphs"):
        b = a.bundle
    with timer.lap("strong_resolving_graph"):
        sr = a.sr
    with timer.lap("pipeline"):
        res = a.sdim
        cover = a.cover
    pretty = [spec.format_ideal(I) for I in b.vertices]
    oracle_doc = None
    if oracle:
        with timer.lap("oracle"):
            brute = a.sdim_oracle
        oracle_doc = {
            "value": brute.sdim,
            "method": brute.method,
            "witness": [pretty[i] for i in brute.witness],
            "witness_valid": is_strong_resolving_set(b.gamma, brute.witness),
        }
    with timer.lap("checks"):
        checks = check_spec(spec, limits, oracle=oracle)

    def diam(g):
        return format_distance(diameter(g)) if g.n else None

    report = {
        "schema": SCHEMA,
        "ring": {
            "input": text,
            "spec": str(spec),
            "chain_lengths": list(spec.chain),
            "nonfields": spec.n_nonfields,
            "fields": spec.m_fields,
            "regime": a.regime,
        },
        "counts": {
            "ideals": spec.ideal_count(),
            "vertices": b.gamma.n,
            "vertices_closed_form": spec.vertex_count(),
            "maximal_ideals": len(enumerate_maximal_ideals(spec)),
            "boundary": len(sr.boundary),
            "edges": {
                "gamma": b.gamma.edge_count(),
                "gamma_star_star": b.gamma_star_star.edge_count(),
                "gamma_star": b.gamma_star.edge_count(),
                "gamma_prime": b.gamma_prime.edge_count(),
                "srg": sr.srg.edge_count(),
            },
        },
        "nil_classes": nil_class_sizes(spec, b.vertices),
        "diameters": {"gamma": diam(b.gamma), "srg": diam(sr.srg)},
        "srg": {"vertices": sr.srg.n, "alpha": cover.alpha, "beta": cover.beta},
        "sdim": {
            "value": res.sdim,
            "predicted": predicted_sdim(spec),
            "method": res.method,
            "witness": [pretty[i] for i in res.witness],
            "witness_valid": is_strong_resolving_set(b.gamma, res.witness),
            "oracle": oracle_doc,
        },
        "checks": [c.to_dict() for c in checks],
    }
    if timings:
        report["timings"] = timer.laps
    return report


def _report_ok(report: dict) -> bool:
    sd = report["sdim"]
    ok = sd["witness_valid"] and all(c["status"] != FAIL for c in report["checks"])
    if sd["oracle"] is not None:
        ok = ok and sd["oracle"]["witness_valid"] and sd["oracle"]["value"] == sd["value"]
    return ok


def _print_report(report: dict, out) -> None:
    r, c, sd = report["ring"], report["counts"], report["sdim"]
    print(f"ring       {r['spec']}  chain {tuple(r['chain_lengths'])}  regime {r['regime']}", file=out)
    print(f"ideals     {c['ideals']}   vertices {c['vertices']}   maximal {c['maximal_ideals']}"
          f"   boundary {c['boundary']}", file=out)
    print(f"diameter   {report['diameters']['gamma']}", file=out)
    print(f"srg        |V|={report['srg']['vertices']}  alpha={report['srg']['alpha']}"
          f"  beta={report['srg']['beta']}", file=out)
    line = f"sdim       {sd['value']} (predicted {sd['predicted']})"
    if sd["oracle"] is not None:
        line += f", oracle {sd['oracle']['value']}"
    print(line, file=out)
    print(f"witness    {' '.join(sd['witness'])}", file=out)
    print("checks", file=out)
    for chk in report["checks"]:
        print(f"  {chk['status']:<15} {chk['id']}", file=out)


def cmd_analyze(args) -> int:
    spec = parse_ring_spec(args.ring)
    limits = _limits(args)
    report = build_report(args.ring, spec, limits, oracle=args.oracle, timings=not args.no_timings)
    if args.json:
        _write(args.json, _dump_json(report))
    if args.export:
        a = ring_analysis(spec, limits)
        graphs = {
            "gamma": a.bundle.gamma,
            "gamma-star-star": a.bundle.gamma_star_star,
            "gamma-star": a.bundle.gamma_star,
            "gamma-prime": a.bundle.gamma_prime,
            "srg": a.sr.srg,
        }
        _write(args.export_out, export(graphs[args.what], args.export, label_fmt=spec.format_ideal))
    if not (args.export and args.export_out == "-") and args.json != "-":
        _print_report(report, sys.stdout)
    return 0 if _report_ok(report) else 1


# --- sweep ----------------------------------------------------------------

def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise SpecParseError(f"bad range {text!r}; expected A..B") from None


def parse_family(text: str) -> list[tuple[str, RingSpec]]:
    """``reduced:A..B``, ``nonreduced:A..B`` (copies of Z4), ``specs:S1;S2`` or ``file:PATH``."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise SpecParseError(f"family {text!r} needs a kind prefix (reduced:, nonreduced:, specs:, file:)")
    if kind == "reduced":
        items = [" x ".join(["F"] * n) for n in _range(rest)]
    elif kind == "nonreduced":
        items = [" x ".join(["Z4"] * n) for n in _range(rest)]
    elif kind == "specs":
        items = [s.strip() for s in rest.split(";") if s.strip()]
    elif kind == "file":
        try:
            with open(rest, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise SpecParseError(f"cannot read family file {rest}: {exc.strerror}") from None
        items = [ln.split("#", 1)[0].strip() for ln in lines]
        items = [s for s in items if s]
    else:
        raise SpecParseError(f"unknown family kind {kind!r}")
    if not items:
        raise SpecParseError(f"family {text!r} is empty")
    return [(s, parse_ring_spec(s)) for s in items]


def cmd_sweep(args) -> int:
    family = parse_family(args.family)
    limits = _limits(args)
    oracle = True if args.oracle else (False if args.no_oracle else None)
    rows = []
    all_checks = []
    t0 = time.perf_counter()
    for text, spec in family:
        checks = sweep([spec], limits, oracle)
        all_checks.extend(checks)
        sd = next((c for c in checks if c.id.startswith("sdim-")), None)
        status = PASS if all(c.status in (PASS, "not-applicable") for c in checks) else (
            ERROR if any(c.status == ERROR for c in checks) else FAIL
        )
        row = {"ring": text, "chain_lengths": list(spec.chain), "status": status}
        if sd is not None:
            row.update(
                regime=sd.evidence["regime"],
                vertices=sd.evidence["vertices"],
                predicted=sd.expected,
                computed=sd.computed,
                oracle=sd.evidence.get("oracle"),
            )
        else:
            row["error"] = checks[0].evidence.get("message")
        rows.append(row)
    print(f"{'ring':<28} {'regime':<12} {'|V|':>5} {'formula':>8} {'sdim':>6} {'oracle':>7}  status")
    for row in rows:
        if "error" in row:
            print(f"{row['ring']:<28} {'-':<12} {'-':>5} {'-':>8} {'-':>6} {'-':>7}  {row['status']}: {row['error']}")
            continue
        oracle_txt = "-" if row["oracle"] is None else str(row["oracle"])
        print(f"{row['ring']:<28} {row['regime']:<12} {row['vertices']:>5} {row['predicted']:>8}"
              f" {row['computed']:>6} {oracle_txt:>7}  {row['status']}")
    if args.json:
        doc = {"schema": SCHEMA, "family": args.family, "rows": rows, "checks": [c.to_dict() for c in all_checks]}
        if not args.no_timings:
            doc["timings"] = {"total": round(time.perf_counter() - t0, 6)}
        _write(args.json, _dump_json(doc))
    return 0 if all(r["status"] == PASS for r in rows) else 1


# --- graph ----------------------------------------------------------------

def cmd_graph(args) -> int:
    g = load_graph(args.input)
    limits = _limits(args)
    res = sdim_via_srg(g, limits.solve_cap)
    sr = build_srg(g)
    cover = max_independent_set(sr.srg, limits.solve_cap)
    doc = {
        "schema": SCHEMA,
        "vertices": g.n,
        "edges": g.edge_count(),
        "diameter": format_distance(diameter(g)) if g.n else None,
        "boundary": [str(g.labels[v]) for v in sr.boundary],
        "srg": {"vertices": sr.srg.n, "edges": sr.srg.edge_count(), "alpha": cover.alpha, "beta": cover.beta},
        "sdim": {"value": res.sdim, "method": res.method, "witness": [str(g.labels[v]) for v in res.witness]},
        "oracle": None,
    }
    ok = is_strong_resolving_set(g, res.witness)
    if args.oracle:
        brute = sdim_bruteforce(g, limits.brute_cap)
        doc["oracle"] = {"value": brute.sdim, "witness": [str(g.labels[v]) for v in brute.witness]}
        ok = ok and brute.sdim == res.sdim
    print(f"graph      |V|={g.n} |E|={g.edge_count()} diameter={doc['diameter']}")
    print(f"srg        |V|={sr.srg.n} alpha={cover.alpha} beta={cover.beta}")
    line = f"sdim       {res.sdim}"
    if doc["oracle"] is not None:
        line += f" (oracle {doc['oracle']['value']})"
    print(line)
    if args.json:
        _write(args.json, _dump_json(doc))
    return 0 if ok else 1


# --- entry point ----------------------------------------------------------

def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap", type=int, default=None, metavar="N",
                   help="exact-solver vertex cap (env COMAXDIM_SOLVE_CAP, default 300)")
    p.add_argument("--enum-cap", type=int, default=None, metavar="N",
                   help="ideal enumeration cap (env COMAXDIM_ENUM_CAP, default 2^20)")
    p.add_argument("--brute-cap", type=int, default=None, metavar="N",
                   help="brute-force oracle vertex cap (env COMAXDIM_BRUTE_CAP, default 30)")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--no-timings", action="store_true", help="omit timings so JSON output is reproducible")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="comaxdim", description="Strong metric dimension of co-maximal ideal graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one ring")
    p.add_argument("--ring", required=True, help='ring spec, e.g. "Z4 x Z4 x Z8"')
    p.add_argument("--oracle", action="store_true", help="also run the brute-force strong metric dimension")
    p.add_argument("--export", choices=EXPORT_FORMATS)
    p.add_argument("--what", default="gamma", choices=("gamma", "srg", "gamma-star", "gamma-star-star", "gamma-prime"))
    p.add_argument("--export-out", default="-", metavar="PATH", help="export destination (default stdout)")
    _add_caps(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="run every check over a family of rings")
    p.add_argument("--family", required=True, help="reduced:A..B | nonreduced:A..B | specs:S1;S2 | file:PATH")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--oracle", action="store_true", help="force the oracle on every ring")
    group.add_argument("--no-oracle", action="store_true", help="never run the oracle")
    _add_caps(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("graph", help="strong metric dimension of a graph6 or JSON graph file")
    p.add_argument("--in", dest="input", required=True, metavar="PATH")
    p.add_argument("--oracle", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="comaxdim: %(levelname)s: %(message)s", stream=sys.stderr)
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ComaxError as exc:
        print(f"comaxdim: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:  # malformed environment caps
        print(f"comaxdim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
