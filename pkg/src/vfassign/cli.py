"""Command line interface.

    vfassign check INPUT [--incident] [--oracle] [--selfdual]
                         [--dot FILE] [--server URL]
    vfassign corpus [--csv] [--server URL]
    vfassign serve [--host HOST] [--port PORT]

INPUT is a construction expression, a path to a JSON polytope document,
or "-" (or nothing) to read a document from stdin. The leading command
may be omitted: "vfassign cube(3)" checks, "vfassign --corpus" runs the
corpus. Exit codes: 0 assignment exists, 1 no assignment, 2 bad input,
3 internal cross-check disagreement.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys

import httpx
from pydantic import ValidationError

from .corpus import render_corpus, run_corpus
from .errors import InconsistencyError, InvalidInputError
from .models import PolytopeDocument
from .runner import run_check

_COMMANDS = {"check", "corpus", "serve"}


def _parse_document(text: str) -> PolytopeDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid document JSON: {exc}") from exc
    try:
        return PolytopeDocument.model_validate(data)
    except ValidationError as exc:
        raise InvalidInputError(f"invalid document: {exc}") from exc


def _resolve_input(raw: str | None) -> str | PolytopeDocument:
    if raw is None or raw == "-":
        return _parse_document(sys.stdin.read())
    if pathlib.Path(raw).exists():
        return _parse_document(pathlib.Path(raw).read_text())
    return raw


def _remote(method: str, url: str, path: str, payload=None) -> dict | str:
    base = url.rstrip("/")
    try:
        if method == "GET":
            response = httpx.get(base + path, timeout=600.0)
        else:
            response = httpx.post(base + path, json=payload, timeout=600.0)
    except httpx.HTTPError as exc:
        raise InvalidInputError(f"cannot reach server at {url}: {exc}") from exc
    if response.status_code == 400:
        raise InvalidInputError(response.json().get("detail", response.text))
    if response.status_code == 500:
        raise InconsistencyError(response.json().get("detail", response.text))
    if response.status_code != 200:
        raise InvalidInputError(
            f"server returned {response.status_code}: {response.text}")
    return response.json()


def _cmd_check(args) -> int:
    source = _resolve_input(args.input)
    want_dot = args.dot is not None
    if args.server:
        payload = {"incident": args.incident, "oracle": args.oracle,
                   "selfdual": args.selfdual, "with_dot": want_dot}
        if isinstance(source, PolytopeDocument):
            payload["document"] = source.model_dump()
        else:
            payload["expression"] = source
        body = _remote("POST", args.server, "/check", payload)
        text, dot, code = body["text"], body["dot"], body["exit_code"]
    else:
        result = run_check(source, incident=args.incident, oracle=args.oracle,
                           selfdual=args.selfdual, with_dot=want_dot)
        text, dot, code = result.text, result.dot, result.exit_code
    if want_dot:
        pathlib.Path(args.dot).write_text(dot)
    sys.stdout.write(text)
    return code


def _cmd_corpus(args) -> int:
    if args.server:
        body = _remote("GET", args.server, "/corpus")
        sys.stdout.write(body["csv"] if args.csv else body["text"])
        return body["exit_code"]
    report = run_corpus()
    sys.stdout.write(render_corpus(report.rows, as_csv=args.csv))
    return report.exit_code


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vfassign",
        description="Decide and certify vertex-facet assignments for "
                    "convex polytopes given combinatorially.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check",
                           help="check one polytope (expression, file, or stdin)")
    check.add_argument("input", nargs="?",
                       help="construction expression, document path, or - for stdin")
    check.add_argument("--incident", action="store_true",
                       help="require every matched vertex to lie on its facet")
    check.add_argument("--oracle", action="store_true",
                       help="cross-check with the exhaustive subset oracle")
    check.add_argument("--selfdual", action="store_true",
                       help="search for a self-duality pairing")
    check.add_argument("--dot", metavar="FILE",
                       help="write the assignment graph as Graphviz DOT")
    check.add_argument("--server", metavar="URL",
                       help="delegate to a running vfassign service")
    check.set_defaults(func=_cmd_check)

    corpus = sub.add_parser("corpus", help="run the built-in cross-check corpus")
    corpus.add_argument("--csv", action="store_true",
                        help="emit comma-separated values instead of a table")
    corpus.add_argument("--server", metavar="URL",
                        help="delegate to a running vfassign service")
    corpus.set_defaults(func=_cmd_corpus)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_cmd_serve)
    return parser


def _normalize(argv: list[str]) -> list[str]:
    """Allow omitting the command: bare input checks, --corpus runs the corpus."""
    if argv and (argv[0] in _COMMANDS or argv[0] in ("-h", "--help")):
        return argv
    if "--corpus" in argv:
        return ["corpus"] + [a for a in argv if a != "--corpus"]
    return ["check"] + argv


def main(argv: list[str] | None = None) -> int:
    args_in = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_normalize(args_in))
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
