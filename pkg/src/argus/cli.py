"""Command-line front door: validate, transform, evaluate, tornado, export, serve."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from .errors import ArgusError, ModelValidationError, SchemaError
from .model import ArgumentModel
from .network import transform
from .propagation import Assessment, Overrides, propagate
from .sensitivity import TornadoReport, resolve_variable, tornado

log = logging.getLogger("argus")

_LOG_LEVELS = {"error": logging.ERROR, "warn": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}

BAR_COLUMNS = 40


def _configure_logging() -> None:
    level_name = os.environ.get("ARGUS_LOG", "warn").lower()
    level = _LOG_LEVELS.get(level_name, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    if level_name not in _LOG_LEVELS and "ARGUS_LOG" in os.environ:
        log.warning("unknown ARGUS_LOG value %r; using 'warn'", os.environ["ARGUS_LOG"])


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="argus", description="Confidence analysis for GSN safety cases.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model document and report violations")
    p.add_argument("model", type=Path)

    p = sub.add_parser("transform", help="print the confidence network")
    p.add_argument("model", type=Path)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = sub.add_parser("evaluate", help="propagate confidence and print per-node values")
    p.add_argument("model", type=Path)
    p.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="transient override: leaf id, w:NODE:IDX, or v:NODE (repeatable)",
    )
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("tornado", help="rank variables by their swing on a target")
    p.add_argument("model", type=Path)
    p.add_argument("--target", required=True)
    p.add_argument("--top", type=int, default=None)
    p.add_argument("--variable", action="append", default=None, metavar="KEY", help="restrict to these variables")
    p.add_argument("--format", choices=("json", "text", "svg"), default="text")

    p = sub.add_parser("export", help="write the network as Graphviz DOT")
    p.add_argument("model", type=Path)
    p.add_argument("--dot", required=True, type=Path, metavar="OUT")
    p.add_argument("--with-values", action="store_true")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--model", type=Path, default=None)
    p.add_argument("--cors-origin", default=None)
    p.add_argument("--ui", type=Path, default=None, help="serve this directory of static UI files at /")
    return parser


def _load_model(path: Path) -> ArgumentModel:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ArgusError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return formats.parse_model(text)


def _parse_set_flags(pairs: Sequence[str], network) -> Overrides:
    flat = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise ArgusError(f"--set expects KEY=VALUE, got {pair!r}")
        try:
            flat[key] = float(raw)
        except ValueError:
            raise ArgusError(f"--set {key}: {raw!r} is not a number") from None
    for key in flat:
        resolve_variable(network, key)  # fail early with a clear message
    return Overrides.from_flat(flat)


def _fmt(value: float) -> str:
    return repr(round(value, 4))


def _render_tornado_text(report: TornadoReport, top: Optional[int]) -> str:
    entries = report.entries if top is None else report.entries[: max(0, top)]
    if not entries:
        return f"target {report.target}: baseline {_fmt(report.baseline_target)} (no variables)\n"
    label_width = max(len(e.variable.label) for e in entries)
    lines = [f"target {report.target}: baseline {_fmt(report.baseline_target)}"]
    for e in entries:
        lo, hi = e.interval
        start = round(lo * BAR_COLUMNS)
        end = round(hi * BAR_COLUMNS)
        bar = " " * start + "#" * max(end - start, 1)
        lines.append(
            f"{e.variable.label:<{label_width}}  [{_fmt(lo)}, {_fmt(hi)}] "
            f"|{bar:<{BAR_COLUMNS}}| width {_fmt(e.width)}"
        )
    return "\n".join(lines) + "\n"


def _render_tornado_svg(report: TornadoReport, top: Optional[int]) -> str:
    entries = report.entries if top is None else report.entries[: max(0, top)]
    row_height, label_width, chart_width, pad = 24, 180, 400, 10
    height = pad * 2 + row_height * (len(entries) + 1)
    width = label_width + chart_width + pad * 2
    baseline_x = label_width + pad + report.baseline_target * chart_width

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="monospace" font-size="12">',
        f'<text x="{pad}" y="{pad + 14}">target {report.target}, baseline {_fmt(report.baseline_target)}</text>',
        f'<line x1="{baseline_x:.1f}" y1="{pad + row_height}" x2="{baseline_x:.1f}" '
        f'y2="{height - pad}" stroke="#888" stroke-dasharray="4 2"/>',
    ]
    for i, e in enumerate(entries):
        y = pad + row_height * (i + 1)
        lo, hi = e.interval
        x0 = label_width + pad + lo * chart_width
        bar_width = max((hi - lo) * chart_width, 1.0)
        parts.append(f'<text x="{pad}" y="{y + 16}">{e.variable.label}</text>')
        parts.append(
            f'<rect x="{x0:.1f}" y="{y + 4}" width="{bar_width:.1f}" height="{row_height - 8}" '
            f'fill="#4477aa"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_validate(args) -> int:
    try:
        _load_model(args.model)
    except (ModelValidationError, SchemaError) as exc:
        if isinstance(exc, ModelValidationError):
            for violation in exc.violations:
                print(violation, file=sys.stderr)
        else:
            for path, message in exc.errors:
                print(f"SchemaError at {path}: {message}", file=sys.stderr)
        return 1
    print("OK")
    return 0


def _cmd_transform(args) -> int:
    network = transform(_load_model(args.model))
    if args.format == "dot":
        sys.stdout.write(formats.export_dot(network))
    else:
        print(json.dumps(formats.network_to_tree(network), indent=2, ensure_ascii=False))
    return 0


def _cmd_evaluate(args) -> int:
    model = _load_model(args.model)
    network = transform(model)
    overrides = _parse_set_flags(args.overrides, network)
    result = propagate(network, Assessment(values=dict(model.leaf_confidences)), overrides)
    if args.format == "json":
        print(json.dumps(formats.result_to_tree(result), indent=2, ensure_ascii=False))
    else:
        for node_id, g in result.values.items():
            print(f"{node_id} {_fmt(g)}")
    return 0


def _cmd_tornado(args) -> int:
    model = _load_model(args.model)
    network = transform(model)
    selected = None
    if args.variable:
        selected = [resolve_variable(network, key) for key in args.variable]
    report = tornado(network, Assessment(values=dict(model.leaf_confidences)), args.target, selected)
    if args.format == "json":
        print(json.dumps(formats.tornado_to_tree(report, top=args.top), indent=2, ensure_ascii=False))
    elif args.format == "svg":
        sys.stdout.write(_render_tornado_svg(report, args.top))
    else:
        sys.stdout.write(_render_tornado_text(report, args.top))
    return 0


def _cmd_export(args) -> int:
    model = _load_model(args.model)
    network = transform(model)
    result = None
    if args.with_values:
        result = propagate(network, Assessment(values=dict(model.leaf_confidences)))
    args.dot.write_text(formats.export_dot(network, result), encoding="utf-8")
    log.info("wrote %s", args.dot)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    document = None
    if args.model is not None:
        document = formats.model_to_tree(_load_model(args.model))
    app = create_app(document=document, cors_origin=args.cors_origin, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "transform": _cmd_transform,
    "evaluate": _cmd_evaluate,
    "tornado": _cmd_tornado,
    "export": _cmd_export,
    "serve": _cmd_serve,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one CLI invocation. Returns 0, 1 (domain error), or 2 (usage)."""
    _configure_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ModelValidationError as exc:
        for violation in exc.violations:
            print(violation, file=sys.stderr)
        return 1
    except SchemaError as exc:
        for path, message in exc.errors:
            print(f"SchemaError at {path}: {message}", file=sys.stderr)
        return 1
    except ArgusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
