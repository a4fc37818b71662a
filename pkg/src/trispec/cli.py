"""Command line: verify-lemmas, scan, hunt, eval, minimizers, families.

Exit codes: 0 all Holds/NotApplicable, 1 a Violated outcome, 2 Unresolved remain.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import counting
from .bipartite import EXACT_MAX_VERTICES, bipartite_distance_exact
from .explorer import ENUM_MAX_VERTICES, ScanReport, find_minimizers, hunt, parse_n_range, scan, scan_graphs
from .families import FamilySpec, family_kinds
from .graph import Graph, from_graph6, to_graph6
from .spectral import (
    DEFAULT_TOL,
    LEMMAS,
    NAMED_POLYS,
    Comparison,
    named_parity,
    poly_match,
    spectral_radius,
    verify_lemma,
)
from .verdicts import CONJECTURES, STATEMENTS, Outcome, parse_param, run_check

EXIT_OK, EXIT_VIOLATED, EXIT_UNRESOLVED, EXIT_USAGE = 0, 1, 2, 64


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_range: tuple[int, int] | None
    statements: tuple[str, ...]
    tol: float
    threads: int
    out: str | None
    fmt: str

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValueError("--tol must be positive")
        if self.threads < 1:
            raise ValueError("--threads must be >= 1")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _read_graph6_file(path: str) -> list[Graph]:
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                graphs.append(from_graph6(line))
    return graphs


def _parse_instance(text: str) -> Graph:
    """A graph6 string or a family spec like ``kplus:5,3``."""
    if ":" in text and not text.startswith(">>graph6<<"):
        return FamilySpec.parse(text).build()
    return from_graph6(text)


def _parse_params(items: list[str] | None, statement: str) -> dict:
    allowed = STATEMENTS[statement].params
    params = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep or key not in allowed:
            raise ValueError(f"bad --param {item!r}; {statement} accepts {list(allowed)}")
        params[key] = parse_param(key, val)
    return params


def _exit_for(outcomes) -> int:
    outcomes = list(outcomes)
    if Outcome.VIOLATED in outcomes:
        return EXIT_VIOLATED
    if Outcome.UNRESOLVED in outcomes:
        return EXIT_UNRESOLVED
    return EXIT_OK


# ---------------------------------------------------------------------------
# commands


def cmd_verify_lemmas(n_max: int, tol: float = DEFAULT_TOL, fmt: str = "json", out: str | None = None, n_min: int = 4) -> int:
    rows = []
    ok = True
    for lemma in LEMMAS:
        for n in range(n_min, n_max + 1):
            cert = verify_lemma(lemma, n, tol)
            if cert is None:
                continue
            ok &= cert.certified
            rows.append(
                {
                    "lemma": lemma,
                    "n": n,
                    "poly": cert.poly,
                    "threshold": cert.threshold,
                    "exact": cert.exact,
                    "numeric_quotient": cert.numeric.value,
                    "numeric_graph": cert.graph_numeric.value if cert.graph_numeric else None,
                    "poly_match": cert.poly_match,
                    "certified": cert.certified,
                }
            )
    polys = {}
    for name in NAMED_POLYS:
        matches = {}
        for n in range(max(6, n_min), n_max + 1):
            if n % 2 != named_parity(name):
                continue
            try:
                matches[str(n)] = poly_match(name, n)
            except ValueError:
                matches[str(n)] = "no_construction"
        polys[name] = matches
        ok &= all(v in ("exact", "up_to_x", "no_construction") for v in matches.values())
    report = {"n_range": [n_min, n_max], "lemmas": rows, "polynomials": polys, "all_certified": ok}
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2)
    elif fmt == "csv":
        keys = ["lemma", "n", "poly", "threshold", "exact", "numeric_quotient", "numeric_graph", "poly_match", "certified"]
        text = "\n".join([",".join(keys)] + [",".join(str(r[k]) for k in keys) for r in rows])
    else:
        bad = [r for r in rows if not r["certified"]]
        text = f"{len(rows)} lemma instances, {len(bad)} not certified; all_certified={ok}"
        for r in bad:
            text += f"\n  lemma {r['lemma']} n={r['n']}: {r}"
    _emit(text, out)
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_scan(statement: str, n_range, params: dict, threads: int, tol: float, fmt: str, out: str | None, file: str | None = None) -> int:
    if file:
        report = scan_graphs(statement, _read_graph6_file(file), params, tol)
    else:
        report = scan(statement, n_range, params, workers=threads, tol=tol)
    _emit(report.render(fmt), out)
    return report.exit_code()


def cmd_hunt(conjecture: str, n_range, threads: int, tol: float, fmt: str, out: str | None, file: str | None = None) -> int:
    if file:
        report = scan_graphs(conjecture, _read_graph6_file(file), tol=tol)
    else:
        report = hunt(conjecture, n_range, threads, tol)
    _emit(report.render(fmt), out)
    return report.exit_code()


QUANTITIES = (
    "n",
    "m",
    "graph6",
    "lambda",
    "triangles",
    "triangular_edges",
    "non_triangular_edges",
    "booksize",
    "bipartite_distance",
    "degrees",
)


def evaluate(g: Graph, quantities: list[str], tol: float = DEFAULT_TOL) -> dict:
    out: dict = {}
    for q in quantities:
        if q == "n":
            out[q] = g.n
        elif q == "m":
            out[q] = g.m
        elif q == "graph6":
            out[q] = to_graph6(g)
        elif q == "lambda":
            lam = spectral_radius(g, tol).lam if g.n else None
            out[q] = {"value": lam.value, "radius": lam.radius} if lam else {"value": 0.0, "radius": 0.0}
        elif q == "triangles":
            out[q] = counting.triangles(g)
        elif q == "triangular_edges":
            out[q] = counting.triangular_edges(g)
        elif q == "non_triangular_edges":
            out[q] = counting.non_triangular_edges(g)
        elif q == "booksize":
            out[q] = counting.booksize(g)
        elif q == "bipartite_distance":
            out[q] = bipartite_distance_exact(g)[0] if g.n <= EXACT_MAX_VERTICES else None
        elif q == "degrees":
            out[q] = g.degrees()
        else:
            raise ValueError(f"unknown quantity {q!r}; known: {list(QUANTITIES)}")
    return out


def cmd_eval(instances: list[str], quantities: list[str], statements: list[str], tol: float, fmt: str, out: str | None, file: str | None = None) -> int:
    graphs = [(s, _parse_instance(s)) for s in instances]
    if file:
        graphs += [(to_graph6(g), g) for g in _read_graph6_file(file)]
    records = []
    outcomes = []
    for label, g in graphs:
        rec = {"instance": label, "quantities": evaluate(g, quantities, tol)}
        verdicts = []
        for sid in statements:
            base, _, raw = sid.partition("[")
            params = _parse_params([p for p in raw.rstrip("]").split(",") if p], base) if raw else {}
            v = run_check(base, g, params, tol)
            outcomes.append(v.outcome)
            verdicts.append(v.to_dict())
        if statements:
            rec["verdicts"] = verdicts
        records.append(rec)
    if fmt == "json":
        text = json.dumps(records if len(records) != 1 else records[0], sort_keys=True, indent=2)
    elif fmt == "csv":
        header = ["instance"] + quantities
        lines = [",".join(header)]
        for r in records:
            lines.append(",".join([r["instance"]] + [json.dumps(r["quantities"][q]).replace(",", ";") for q in quantities]))
        text = "\n".join(lines)
    else:
        text = "\n".join(f"{r['instance']}: {r['quantities']}" + (f" verdicts={[v['outcome'] for v in r.get('verdicts', [])]}" if statements else "") for r in records)
    _emit(text, out)
    return _exit_for(outcomes)


def cmd_minimizers(n: int, m_values: list[int], quantity: str, fmt: str, out: str | None) -> int:
    reports = [find_minimizers(n, m, quantity) for m in m_values]
    if fmt == "json":
        text = json.dumps([r.to_dict() for r in reports] if len(reports) != 1 else reports[0].to_dict(), sort_keys=True, indent=2)
    elif fmt == "csv":
        text = "".join(r.to_csv() for r in reports)
    else:
        text = "\n".join(f"n={n} m={r.params['m']}: minimum {quantity} = {r.extras['minimum']}; g_lower_bound = {r.extras.get('g_lower_bound')}; minimizers {r.extremal_set}" for r in reports)
    _emit(text, out)
    return EXIT_OK


def cmd_families(spec: str | None, fmt: str, out: str | None) -> int:
    if spec is None:
        text = json.dumps(family_kinds()) if fmt == "json" else "\n".join(family_kinds())
    else:
        g = FamilySpec.parse(spec).build()
        payload = {"family": str(FamilySpec.parse(spec)), "graph6": to_graph6(g), "n": g.n, "m": g.m}
        text = json.dumps(payload, sort_keys=True) if fmt == "json" else payload["graph6"]
    _emit(text, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="power-iteration residual tolerance (default 1e-11)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes (default: all CPUs)")
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trispec", description="Certified checks of triangular-edge and spectral supersaturation statements.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-lemmas", help="certify the four spectral lemmas and the named polynomials")
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--n", default=None, help="explicit range, e.g. 4..40 (overrides --n-max)")
    _common(p)

    p = sub.add_parser("scan", help="run one statement over all graphs in an n range")
    p.add_argument("statement", choices=sorted(STATEMENTS))
    p.add_argument("--n", default="3..7")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--param", action="append", help="statement parameter, e.g. --param r=3")
    p.add_argument("--file", default=None, help="graph6 lines to check instead of enumerating")
    _common(p)

    p = sub.add_parser("hunt", help="search for counterexamples to a conjecture")
    p.add_argument("conjecture", choices=CONJECTURES)
    p.add_argument("--n", default="3..7")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--file", default=None)
    _common(p)

    p = sub.add_parser("eval", help="evaluate quantities (and optionally statements) on given graphs")
    p.add_argument("instance", nargs="*", help="graph6 strings or family specs such as kplus:5,3")
    p.add_argument("--file", default=None)
    p.add_argument("--quantities", default="n,m,lambda,triangles,triangular_edges,booksize")
    p.add_argument("--statements", default="", help="comma-free list separated by ';', e.g. 'efr;wilf[r=3]'")
    _common(p)

    p = sub.add_parser("minimizers", help="exhaustive minimizers of triangular edges or triangles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", default=None, help="edge count or range; default all m > floor(n^2/4)")
    p.add_argument("--quantity", choices=("triangular_edges", "triangles"), default="triangular_edges")
    _common(p)

    p = sub.add_parser("families", help="list family kinds, or build one spec")
    p.add_argument("spec", nargs="?", default=None)
    _common(p)
    return parser


def _n_range(args) -> tuple[int, int]:
    lo, hi = parse_n_range(args.n)
    if getattr(args, "n_max", None) is not None:
        hi = args.n_max
    if not 0 <= lo <= hi <= ENUM_MAX_VERTICES:
        raise ValueError(f"n range {lo}..{hi} outside 0..{ENUM_MAX_VERTICES}")
    return lo, hi


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify-lemmas":
            cfg = RunConfig(args.command, None, (), args.tol, args.threads, args.out, args.fmt)
            lo, hi = parse_n_range(args.n) if args.n else (4, args.n_max)
            return cmd_verify_lemmas(hi, cfg.tol, cfg.fmt, cfg.out, n_min=lo)
        if args.command == "scan":
            nr = None if args.file else _n_range(args)
            cfg = RunConfig(args.command, nr, (args.statement,), args.tol, args.threads, args.out, args.fmt)
            params = _parse_params(args.param, args.statement)
            return cmd_scan(args.statement, nr, params, cfg.threads, cfg.tol, cfg.fmt, cfg.out, args.file)
        if args.command == "hunt":
            nr = None if args.file else _n_range(args)
            cfg = RunConfig(args.command, nr, (args.conjecture,), args.tol, args.threads, args.out, args.fmt)
            return cmd_hunt(args.conjecture, nr, cfg.threads, cfg.tol, cfg.fmt, cfg.out, args.file)
        if args.command == "eval":
            cfg = RunConfig(args.command, None, (), args.tol, args.threads, args.out, args.fmt)
            if not args.instance and not args.file:
                raise ValueError("eval needs a graph6 string, a family spec or --file")
            quantities = [q.strip() for q in args.quantities.split(",") if q.strip()]
            statements = [s.strip() for s in args.statements.split(";") if s.strip()]
            for s in statements:
                if s.partition("[")[0] not in STATEMENTS:
                    raise ValueError(f"unknown statement {s!r}")
            return cmd_eval(args.instance, quantities, statements, cfg.tol, cfg.fmt, cfg.out, args.file)
        if args.command == "minimizers":
            n = args.n
            if args.m is None:
                ms = list(range(n * n // 4 + 1, n * (n - 1) // 2 + 1))
            else:
                lo, hi = parse_n_range(args.m)
                ms = list(range(lo, hi + 1))
            return cmd_minimizers(n, ms, args.quantity, args.fmt, args.out)
        if args.command == "families":
            return cmd_families(args.spec, args.fmt, args.out)
    except (ValueError, OSError) as exc:
        print(f"trispec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error("unknown command")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
