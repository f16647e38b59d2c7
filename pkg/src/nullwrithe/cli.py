"""``nullwrithe`` command line.

Exit codes: 0 success, 1 verification failure (or mismatching table rows),
2 invalid input, 3 I/O error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .catalog import bundled_table, load_catalog, reproduce_table
from .diagram import Diagram, mirror, parse_diagram
from .errors import CatalogError, DiagramError, NotAlternatingError
from .nullification import (
    chirality_verdict,
    forest_independence,
    nullification_number,
    sign_violations,
    spanning_forest,
    verify_mirror_antisymmetry,
    verify_parity_law,
    writhe_split,
)
from .seifert import build_seifert_graph

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


@dataclass
class CliConfig:
    command: str
    code: str | None
    file: str | None
    format: str = "pd"
    output: str = "json"
    trials: int = 100
    seed: int = 0
    dump_graph: bool = False


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullwrithe",
        description="Nullification writhe, remaining writhe and chirality of oriented link diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, positional_help: str) -> None:
        p.add_argument("input", nargs="?", help=positional_help)
        p.add_argument("--code", help="inline diagram code")
        p.add_argument("--file", help="read the input from this file")
        p.add_argument("--format", choices=["pd", "gauss"], default="pd", help="diagram code format")
        p.add_argument("--output", choices=["json", "text", "csv"], default="json")
        p.add_argument("--trials", type=_positive, default=100, help="seeded forests per diagram")
        p.add_argument("--seed", type=int, default=0, help="seed of the reported spanning forest")

    p = sub.add_parser("analyze", help="report invariants and the chirality verdict of one diagram")
    common(p, "file holding a diagram code")
    p.add_argument("--dump-graph", action="store_true", help="print the Seifert graph ('u v sign' lines) to stderr")
    common(sub.add_parser("batch", help="reproduce a catalog table"), "catalog (.ndjson)")
    common(sub.add_parser("verify", help="run the verification suite"), "catalog (.ndjson)")
    common(sub.add_parser("mirror", help="print the mirror image of a diagram"), "file holding a diagram code")
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    if args.input and args.file:
        raise InputError("give the input either positionally or with --file, not both")
    file = args.input or args.file
    if (file is None) == (args.code is None):
        raise InputError("exactly one input source is required (--code or a file)")
    return CliConfig(
        command=args.command,
        code=args.code,
        file=file,
        format=args.format,
        output=args.output,
        trials=args.trials,
        seed=args.seed,
        dump_graph=getattr(args, "dump_graph", False),
    )


def _resolve(path: str) -> Path:
    p = Path(path)
    if not p.exists() and p.suffix == ".ndjson" and p.stem in ("table1", "table2"):
        return bundled_table(p.stem)
    return p


def _read_diagram(cfg: CliConfig) -> Diagram:
    text = cfg.code if cfg.code is not None else Path(cfg.file).read_text(encoding="utf-8")
    return parse_diagram(text, cfg.format)


def _emit_report(report: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(report, indent=2))
    elif output == "text":
        width = max(map(len, report))
        for key, value in report.items():
            if isinstance(value, list):
                value = ", ".join(value) or "-"
            print(f"{key.ljust(width)}  {value}")
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(report), lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: ";".join(v) if isinstance(v, list) else v for k, v in report.items()})
        print(buf.getvalue(), end="")


def run_analyze(cfg: CliConfig) -> int:
    d = _read_diagram(cfg)
    report = chirality_verdict(d, seed=cfg.seed)
    if cfg.dump_graph:
        print(build_seifert_graph(d).adjacency_text(), end="", file=sys.stderr)
    _emit_report(report.to_dict(), cfg.output)
    return EXIT_OK


def run_mirror(cfg: CliConfig) -> int:
    m = mirror(_read_diagram(cfg))
    code = m.to_pd() if cfg.format == "pd" else m.to_gauss()
    if cfg.output == "json":
        print(json.dumps({"code": code, "report": chirality_verdict(m, seed=cfg.seed).to_dict()}, indent=2))
    else:
        print(code)
    return EXIT_OK


def run_batch(cfg: CliConfig) -> int:
    if cfg.file is None:
        raise InputError("batch needs a catalog file")
    table = reproduce_table(load_catalog(_resolve(cfg.file)), seed=cfg.seed)
    if cfg.output == "json":
        print(table.to_json())
    elif cfg.output == "csv":
        print(table.to_csv(), end="")
    else:
        print(table.to_text(), end="")
    for row in table.mismatches:
        print(f"mismatch: {row.name}: w={row.report.w} w_x={row.report.w_x} expected w_x={row.expected_w_x}",
              file=sys.stderr)
    return EXIT_FAIL if table.mismatches else EXIT_OK


def verify_diagram(d: Diagram, trials: int = 100, seed: int = 0) -> dict:
    """Run every applicable check on one diagram; returns a JSON-ready record."""
    g = build_seifert_graph(d)
    checks: dict[str, bool] = {}
    notes: list[str] = []
    f = spanning_forest(g, seed)
    split = writhe_split(g, f)
    o = nullification_number(g)
    checks["nullification_number"] = o == d.n - g.s + g.k and len(f) == g.s - g.k
    checks["writhe_identity"] = split.w == split.w_x + split.w_y == d.writhe
    record: dict = {"n": d.n, "s": g.s, "k": g.k, "c": d.c, "o": o}
    if not g.alternating:
        notes.append("NotAlternating: forest independence and the sign checks only apply to alternating diagrams")
        checks["alternating"] = False
    else:
        violations = sign_violations(g, seed)
        notes.extend(violations)
        checks["sign_monochromatic"] = not violations
        try:
            ind = forest_independence(g, trials)
        except NotAlternatingError as exc:  # pragma: no cover - guarded above
            notes.append(str(exc))
            checks["forest_independence"] = False
        else:
            checks["forest_independence"] = ind.passed
            record["forests"] = ind.forest_count
            record["exhaustive"] = ind.exhaustive
            record["splits"] = sorted([list(s) for s in ind.splits])
        checks["mirror_antisymmetry"] = verify_mirror_antisymmetry(d, seed)
        if g.k == 1:
            checks["parity_law"] = verify_parity_law(d)
            report = chirality_verdict(d, seed)
            if report.reduced and d.c % 2 == 0:
                checks["even_components_chiral"] = report.verdict.chiral
    record["checks"] = checks
    record["notes"] = notes
    record["passed"] = all(checks.values())
    return record


def run_verify(cfg: CliConfig) -> int:
    if cfg.code is not None:
        items = [("<code>", parse_diagram(cfg.code, cfg.format))]
    else:
        path = _resolve(cfg.file)
        if path.suffix == ".ndjson":
            items = [(e.name, e.diagram) for e in load_catalog(path)]
        else:
            items = [(path.name, parse_diagram(path.read_text(encoding="utf-8"), cfg.format))]
    results = []
    for name, d in items:
        rec = verify_diagram(d, cfg.trials, cfg.seed)
        results.append({"name": name, **rec})
    passed = all(r["passed"] for r in results)
    if cfg.output == "json":
        print(json.dumps({"passed": passed, "trials": cfg.trials, "diagrams": results}, indent=2))
    else:
        for r in results:
            status = "PASS" if r["passed"] else "FAIL"
            checks = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r["checks"].items())
            extra = f" forests={r['forests']}{' (exhaustive)' if r.get('exhaustive') else ''}" if "forests" in r else ""
            print(f"{status} {r['name']}: {checks}{extra}")
        print(f"{sum(r['passed'] for r in results)}/{len(results)} diagrams passed")
    for r in results:
        for note in r["notes"]:
            print(f"{r['name']}: {note}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


COMMANDS = {"analyze": run_analyze, "batch": run_batch, "verify": run_verify, "mirror": run_mirror}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[cfg.command](cfg)
    except (InputError, DiagramError, CatalogError) as exc:
        print(f"nullwrithe: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"nullwrithe: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
