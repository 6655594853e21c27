"""germlab command line: a thin client over the service layer.

By default commands run in-process through the same execute() the HTTP
handlers use; with --server URL the problem file is posted to a running
germlab service instead and the CLI only renders the response.  Exit
codes: 0 success, 1 input error, 2 genericity failure, 3 budget
exhaustion.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import InputError
from .report import canonical_report, to_json
from .runner import COMMANDS, EXIT_KINDS, RunFailure, RunOptions, execute


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="germlab",
        description="Singularity invariants on isolated determinantal singularities",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        p = sub.add_parser(command, help=f"run the {command} command on a problem file")
        p.add_argument("file", help="problem file (TOML)")
        p.add_argument("--seed", type=int, default=None, help="genericity seed (env GERMLAB_SEED as fallback)")
        p.add_argument("--field", default=None, help="coefficient field: q, fp, or fp:PRIME")
        p.add_argument("--t-samples", default=None, help="comma-separated rational parameters, e.g. 1/2,-1/3")
        p.add_argument("--max-degree", type=int, default=None, help="total-degree budget")
        p.add_argument("--max-spairs", type=int, default=None, help="S-pair budget")
        p.add_argument("--max-reductions", type=int, default=None, help="reduction-step budget")
        p.add_argument("--out", default=None, help="write the report to this path instead of stdout")
        p.add_argument("--server", default=None, help="POST to a running germlab service instead of running in-process")
        if command == "jacobian-extension":
            p.add_argument("--boardman", required=True, help="Boardman symbol, e.g. 1,1")
        if command == "family-check":
            p.add_argument("--no-conservation", action="store_true", help="skip the Milnor-number conservation check")
    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8410)
    return parser


def _parse_t_samples(text: str):
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            out.append(Fraction(chunk))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad t sample {chunk!r}: {exc}") from exc
    if not out:
        raise InputError("empty t-samples list")
    return out


def _parse_boardman(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise InputError(f"bad Boardman symbol {text!r}") from exc


def _options_from_args(args) -> RunOptions:
    return RunOptions(
        seed=args.seed,
        field=args.field,
        t_samples=_parse_t_samples(args.t_samples) if args.t_samples else None,
        boardman=_parse_boardman(args.boardman) if getattr(args, "boardman", None) else None,
        max_degree=args.max_degree,
        max_spairs=args.max_spairs,
        max_reductions=args.max_reductions,
        conservation=not getattr(args, "no_conservation", False),
    )


def _run_remote(command: str, text: str, args) -> dict:
    import httpx

    body = {"problem_toml": text}
    if args.seed is not None:
        body["seed"] = args.seed
    if args.field is not None:
        body["field"] = args.field
    if args.t_samples is not None:
        body["t_samples"] = [str(v) for v in _parse_t_samples(args.t_samples)]
    if getattr(args, "boardman", None):
        body["boardman"] = _parse_boardman(args.boardman)
    if getattr(args, "no_conservation", False):
        body["conservation"] = False
    budgets = {}
    for key in ("max_degree", "max_spairs", "max_reductions"):
        if getattr(args, key) is not None:
            budgets[key] = getattr(args, key)
    if budgets:
        body["budgets"] = budgets
    url = args.server.rstrip("/") + f"/v1/{command}"
    response = httpx.post(url, json=body, timeout=None)
    data = response.json()
    if not data.get("ok", False):
        error = data.get("error", {})
        raise RunFailure(error.get("kind", "input"), error.get("message", "remote error"))
    return data["report"]


def _emit(report: dict, out_path: str | None):
    text = to_json(report) if "schema" not in report else _dump_existing(report)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _dump_existing(report: dict) -> str:
    import json

    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        sys.stderr.write(f"germlab: cannot read {args.file}: {exc}\n")
        return 1
    try:
        if args.server:
            report = _run_remote(args.command, text, args)
        else:
            payload = execute(args.command, text, _options_from_args(args))
            report = canonical_report(payload)
        _emit(report, args.out)
        return 0
    except InputError as exc:
        sys.stderr.write(f"germlab: input error: {exc}\n")
        return 1
    except RunFailure as failure:
        sys.stderr.write(f"germlab: {failure.kind} error: {failure.message}\n")
        return EXIT_KINDS.get(failure.kind, 1)


if __name__ == "__main__":
    sys.exit(main())
