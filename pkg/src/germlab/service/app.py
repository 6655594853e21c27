"""FastAPI service wrapping the core package.

One endpoint per command; the CLI is a thin client of these.  Reports are
returned as already-canonicalized JSON objects (exact numbers as decimal
strings), so clients can serialize them byte-reproducibly.

Error mapping: input -> 400, genericity failure -> 422, budget
exhaustion -> 503; the error kind in the body is authoritative.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import InputError
from ..report import canonical_report
from ..runner import COMMANDS, RunFailure, RunOptions, execute
from .models import ErrorInfo, ErrorResponse, RunRequest, RunResponse

_STATUS = {"input": 400, "genericity": 422, "budget": 503}


def _problem_text(request: RunRequest) -> str:
    if (request.problem_toml is None) == (request.problem is None):
        raise InputError("provide exactly one of problem_toml / problem")
    if request.problem_toml is not None:
        return request.problem_toml
    return _toml_from_dict(request.problem)


def _toml_from_dict(data: dict) -> str:
    """Render a structured problem table back to TOML for the shared parser."""
    lines = []
    budgets = None
    for key, value in data.items():
        if key == "budgets":
            budgets = value
            continue
        lines.append(f"{key} = {_toml_value(value)}")
    if budgets is not None:
        lines.append("[budgets]")
        for key, value in budgets.items():
            lines.append(f"{key} = {_toml_value(value)}")
    return "\n".join(lines) + "\n"


def _toml_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(value, list):
        return "[" + ", ".join(_toml_value(v) for v in value) + "]"
    raise InputError(f"unsupported value in structured problem: {value!r}")


def _options(request: RunRequest) -> RunOptions:
    t_samples = None
    if request.t_samples is not None:
        try:
            t_samples = [Fraction(v) for v in request.t_samples]
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad t sample: {exc}") from exc
    budgets = request.budgets
    return RunOptions(
        seed=request.seed,
        field=request.field,
        t_samples=t_samples,
        boardman=request.boardman,
        max_degree=budgets.max_degree if budgets else None,
        max_spairs=budgets.max_spairs if budgets else None,
        max_reductions=budgets.max_reductions if budgets else None,
        conservation=request.conservation,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="germlab", version=__version__)

    def run_command(command: str, request: RunRequest):
        try:
            text = _problem_text(request)
            payload = execute(command, text, _options(request))
        except InputError as exc:
            failure = RunFailure("input", str(exc))
            return _error_response(failure)
        except RunFailure as failure:
            return _error_response(failure)
        return RunResponse(report=canonical_report(payload)).model_dump()

    def _error_response(failure: RunFailure):
        body = ErrorResponse(error=ErrorInfo(kind=failure.kind, message=failure.message))
        return JSONResponse(status_code=_STATUS.get(failure.kind, 500), content=body.model_dump())

    @app.get("/v1/health")
    def health():
        return {"ok": True, "version": __version__}

    for command in COMMANDS:

        def make_handler(cmd: str):
            def handler(request: RunRequest):
                return run_command(cmd, request)

            handler.__name__ = f"run_{cmd.replace('-', '_')}"
            return handler

        app.post(f"/v1/{command}", response_model=None)(make_handler(command))

    return app


app = create_app()
