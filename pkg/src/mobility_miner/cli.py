"""Batch front door: ingest, mine, graph, serve.

Exit codes: 0 success, 1 usage error, 2 data error. File outputs are written
atomically (temp file + rename) and are byte-identical to the library's
canonical serializations.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .graph import build_graph
from .ingest import ingest_file
from .miner import ConfigError, MiningConfig, mine, patterns_to_json
from .sessionize import sessionize
from .store import DEFAULT_VIEW_CONFIG, build_store
from .taxonomy import TaxonomyError, identity_taxonomy, load_taxonomy, relabel

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class DataError(Exception):
    pass


def _support_value(raw: str) -> int | float:
    try:
        return float(raw) if any(ch in raw for ch in ".eE") else int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {raw!r}")


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."),
                               prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _load_taxonomy(path: str | None):
    return load_taxonomy(path) if path else identity_taxonomy()


def _user_sessions(args):
    taxonomy = _load_taxonomy(args.taxonomy)
    histories, _ = ingest_file(args.input)
    if args.user not in histories:
        raise DataError(f"unknown user: {args.user}")
    visits = relabel(histories[args.user], taxonomy)
    return visits, sessionize(visits)


def cmd_ingest(args) -> int:
    _, report = ingest_file(args.input)
    if args.report:
        _write_atomic(args.report, report.to_json())
    else:
        sys.stdout.write(report.to_json())
    return EXIT_OK


def cmd_mine(args) -> int:
    _, sessions = _user_sessions(args)
    config = MiningConfig(min_support=args.min_support,
                          max_pattern_length=args.max_len,
                          max_gap=args.max_gap)
    patterns = mine(sessions, config)
    _write_atomic(args.out, patterns_to_json(patterns))
    return EXIT_OK


def cmd_graph(args) -> int:
    visits, sessions = _user_sessions(args)
    patterns = mine(sessions, DEFAULT_VIEW_CONFIG)
    graph = build_graph(visits, sessions, patterns)
    _write_atomic(args.out, graph.to_json())
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    store = build_store(args.input, _load_taxonomy(args.taxonomy),
                        taxonomy_name=args.taxonomy or "identity",
                        upload_dir=args.upload_dir)
    app = create_app(store, max_upload_bytes=args.max_upload_bytes,
                     frontend_dir=args.frontend_dir)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mobility-miner",
                     description="Mine and serve check-in mobility patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="parse a check-in file, emit the report")
    p_ingest.add_argument("input")
    p_ingest.add_argument("--report", help="report JSON path (default: stdout)")
    p_ingest.set_defaults(func=cmd_ingest)

    p_mine = sub.add_parser("mine", help="mine one user's frequent patterns")
    p_mine.add_argument("input")
    p_mine.add_argument("--taxonomy", help="labeling rules file (default: identity)")
    p_mine.add_argument("--user", required=True)
    p_mine.add_argument("--min-support", required=True, type=_support_value,
                        dest="min_support",
                        help="absolute count (int) or sequence fraction (float)")
    p_mine.add_argument("--max-len", type=int, default=10, dest="max_len")
    p_mine.add_argument("--max-gap", type=int, default=None, dest="max_gap")
    p_mine.add_argument("--out", required=True, help="pattern JSON output path")
    p_mine.set_defaults(func=cmd_mine)

    p_graph = sub.add_parser("graph", help="build one user's mobility graph")
    p_graph.add_argument("input")
    p_graph.add_argument("--taxonomy", help="labeling rules file (default: identity)")
    p_graph.add_argument("--user", required=True)
    p_graph.add_argument("--out", required=True, help="graph JSON output path")
    p_graph.set_defaults(func=cmd_graph)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("input")
    p_serve.add_argument("--taxonomy", help="labeling rules file (default: identity)")
    p_serve.add_argument("--bind", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--upload-dir", dest="upload_dir",
                         help="write-through directory for accepted uploads")
    p_serve.add_argument("--max-upload-bytes", dest="max_upload_bytes",
                         type=int, default=10 * 1024 * 1024)
    p_serve.add_argument("--frontend-dir", dest="frontend_dir",
                         help="static explorer build to serve at /")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DataError, TaxonomyError, ConfigError, OSError) as exc:
        print(f"mobility-miner: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
