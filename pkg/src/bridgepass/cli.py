"""Command-line interface: ``bridgepass <command> ...``.

Diagram files hold one Gauss or PD code per line (``#`` comments allowed),
or are CSV tables with a ``name`` column.  ``fixture:NAME`` loads a bundled
fixture instead of a file.  Output is JSON with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .codecs import emit_extended_gauss, emit_pd, load_diagrams
from .corpus import ingest_corpus, record_for, report, verify_corpus
from .errors import DiagramError
from .passes import decompose, inflate
from .reduction import reduce
from .render import render_svg
from .torus import classify_extremal, enumerate_rule_compliant, standard_torus_diagram


def _load(source: str):
    """List of (name, diagram) pairs."""
    if source.startswith("fixture:"):
        name = source.split(":", 1)[1]
        return [(name, fixtures.fixture(name))]
    path = Path(source)
    if path.suffix == ".csv":
        return [(rec.name, rec.diagram) for rec in ingest_corpus(path)]
    return [(f"{path.stem}:{i}", d) for i, d in enumerate(load_diagrams(path), start=1)]


def _codes(d):
    return {"gauss": emit_extended_gauss(d), "pd": emit_pd(d), "c": d.c, "b": decompose(d).k}


def _classification(d):
    res = classify_extremal(d)
    if hasattr(res, "chirality"):
        return {"k": res.k, "chirality": res.chirality}
    return {"not_extremal": res.reason}


def cmd_analyze(args):
    records = [record_for(name, d) for name, d in _load(args.source)]
    if args.check_bounds:
        verify_corpus(records)
    return [report(rec) for rec in records]


def cmd_reduce(args):
    out = []
    for name, d in _load(args.source):
        final, trace = reduce(d, max_steps=args.max_steps)
        entry = {"name": name, "trace": [step.to_json() for step in trace]}
        entry.update(_codes(final))
        out.append(entry)
    return out


def cmd_torus(args):
    d = standard_torus_diagram(args.k, 1 if args.chirality == "+" else -1)
    out = {"k": args.k, "chirality": args.chirality}
    out.update(_codes(d))
    return out


def cmd_enumerate(args):
    classes = enumerate_rule_compliant(args.k, rule3=not args.relax_rule3)
    out = []
    for d in classes:
        entry = _codes(d)
        entry["class"] = _classification(d)
        out.append(entry)
    return {"k": args.k, "rule3": not args.relax_rule3, "count": len(out), "classes": out}


def cmd_inflate(args):
    out = []
    for name, d in _load(args.source):
        entry = {"name": name}
        entry.update(_codes(inflate(d, args.n)))
        out.append(entry)
    return out


def cmd_render(args):
    name, d = _load(args.source)[args.index]
    Path(args.output).write_text(render_svg(d, title=name), encoding="utf-8")
    return {"name": name, "output": args.output}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bridgepass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="passes, rules, bounds and Jones for each diagram")
    p.add_argument("source")
    p.add_argument("--check-bounds", action="store_true", help="fail if a record breaks the minimal-diagram bounds")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("reduce", help="greedy reduction to a diagram obeying Rules 1 and 2")
    p.add_argument("source")
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("torus", help="standard torus diagram with k passes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--chirality", choices=["+", "-"], default="-")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("enumerate", help="all rule-compliant diagrams with k passes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--relax-rule3", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("inflate", help="add n kinks without changing the pass count")
    p.add_argument("source")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_inflate)

    p = sub.add_parser("render", help="SVG chord diagram")
    p.add_argument("source")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--index", type=int, default=0, help="which diagram of the file to draw")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (DiagramError, OSError, KeyError, ValueError, IndexError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        diag = {"error": type(exc).__name__, "message": str(message)}
        record = getattr(exc, "record", None)
        if record is not None:
            diag["record"] = record.name
        print(json.dumps(diag, sort_keys=True), file=sys.stderr)
        return 1
    print(json.dumps(result, sort_keys=True, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
