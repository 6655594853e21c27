"""Command execution shared by the HTTP service and the CLI.

execute() is the single entry point: it resolves options (request flags
take precedence over problem-file values, which beat the environment and
the defaults), builds the domain objects over the chosen field, runs the
requested command, and returns a canonical report payload.  Errors map to
stable kinds: input / genericity / budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BudgetExceededError, GenericityError, InputError, ValidationError
from .family import conservation_check, default_t_samples, whitney_verdict
from .fields import BadPrimeError
from .germs import iterated_jacobian_extension, zero_set_confined_to_origin
from .invariants import germ_report, invariant_report
from .orders import GLOBAL, LOCAL
from .parse import PolynomialSyntaxError
from .problem import (
    ProblemFile,
    build_budgets,
    build_family,
    build_function_germ,
    build_presentation,
    parse_problem_text,
    resolve_field,
)
from .report import to_json
from .stdbasis import colength, is_unit_ideal

COMMANDS = ("validate", "invariants", "family-check", "jacobian-extension")

EXIT_KINDS = {"input": 1, "genericity": 2, "budget": 3}


@dataclass
class RunOptions:
    seed: int | None = None
    field: str | None = None
    t_samples: list | None = None
    boardman: list | None = None
    max_degree: int | None = None
    max_spairs: int | None = None
    max_reductions: int | None = None
    conservation: bool = True


class RunFailure(Exception):
    """Normalized failure carrying the error kind for exit-code mapping."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind
        self.message = message


def _resolve_seed(pf: ProblemFile, options: RunOptions) -> int:
    if options.seed is not None:
        return options.seed
    if pf.seed is not None:
        return pf.seed
    env = os.environ.get("GERMLAB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"GERMLAB_SEED is not an integer: {env!r}") from exc
    return 0


def _env_budget(name: str) -> int | None:
    env = os.environ.get(name)
    if env is None:
        return None
    try:
        value = int(env)
    except ValueError as exc:
        raise InputError(f"{name} is not an integer: {env!r}") from exc
    if value <= 0:
        raise InputError(f"{name} must be positive")
    return value


def _resolve_budget(flag_value, pf_value, env_name: str):
    if flag_value is not None:
        return flag_value
    if pf_value is not None:
        return pf_value
    return _env_budget(env_name)


def _field_meta(field) -> str:
    return field.name


def _validate_report(pf: ProblemFile, field, seed, budgets) -> dict:
    out = {"mode": pf.mode}
    if pf.mode == "family":
        family = build_family(pf, field)
        checks = family.validate(budgets)
        base = family.instantiate_at(0, budgets)
        out["family"] = {
            "origin_preserving": checks["origin_preserving"],
            "parameter": family.tvar,
        }
        out["presentation"] = _presentation_block(base.host)
        out["function"] = {"isolated_critical_point": True}
        return out
    if pf.mode == "pair":
        fg = build_function_germ(pf, field)
        fg.validate(budgets)
        out["presentation"] = _presentation_block(fg.host)
        out["function"] = {
            "isolated_critical_point": fg.checks["isolated_critical_point"],
            "vanishes_at_origin": fg.checks["function_vanishes_at_origin"],
        }
        return out
    P = build_presentation(pf, field)
    P.validate(budgets)
    out["presentation"] = _presentation_block(P)
    return out


def _presentation_block(P) -> dict:
    m, n = P.psi.shape
    return {
        "matrix_shape": [m, n],
        "s": P.s,
        "N": P.N,
        "dimension": P.d,
        "codimension": P.codim,
        "trivial": P.trivial,
        "checks": dict(P.checks),
    }


def _invariants_report(pf: ProblemFile, field, seed, budgets) -> dict:
    if pf.mode == "family":
        raise InputError("invariants expects a germ or germ+function problem, got a family")
    if pf.mode == "pair":
        fg = build_function_germ(pf, field)
        rep = invariant_report(fg, seed, budgets)
        out = rep.to_json()
        out["presentation"] = _presentation_block(fg.host)
        return {"mode": pf.mode, "invariants": out}
    P = build_presentation(pf, field)
    rep = germ_report(P, seed, budgets)
    out = rep.to_json()
    out["presentation"] = _presentation_block(P)
    return {"mode": pf.mode, "invariants": out}


def _family_report(pf: ProblemFile, field, seed, budgets, options: RunOptions) -> dict:
    if pf.mode != "family":
        raise InputError("family-check expects a family problem")
    family = build_family(pf, field)
    t_samples = options.t_samples or pf.t_samples or default_t_samples(seed)
    verdict = whitney_verdict(family, t_samples, seed, budgets)
    payload = {"mode": pf.mode, "verdict": verdict.to_json()}
    if options.conservation:
        cons = conservation_check(family, t_samples[0], seed, budgets)
        payload["conservation"] = cons
    return payload


def _jacobian_extension_report(pf: ProblemFile, field, seed, budgets, options: RunOptions) -> dict:
    if options.boardman is None:
        raise InputError("jacobian-extension needs --boardman i1,i2,...")
    if pf.mode == "family":
        raise InputError("jacobian-extension expects a germ or germ+function problem")
    if pf.mode == "pair":
        fg = build_function_germ(pf, field)
        h = [fg.f]
        W = fg.host.ideal()
        ring = fg.host.ring
    else:
        P = build_presentation(pf, field)
        h = []
        W = P.ideal()
        ring = P.ring
    try:
        ext = iterated_jacobian_extension(h, W, list(options.boardman), budgets=budgets)
    except ValidationError as exc:
        raise InputError(str(exc)) from exc
    unit = is_unit_ideal(ext, GLOBAL, budgets)
    confined = unit or zero_set_confined_to_origin(ext, budgets)
    linfo = colength(ext, LOCAL, budgets)
    return {
        "mode": pf.mode,
        "boardman": list(options.boardman),
        "generators": [g.to_str() for g in ext.std(GLOBAL, budgets)],
        "is_unit": unit,
        "zero_set_confined_to_origin": confined,
        "local_colength": linfo.colength if linfo.finite else None,
    }


def execute(command: str, problem_text: str, options: RunOptions | None = None) -> dict:
    """Run one command against a problem file's text; returns the payload."""
    options = options or RunOptions()
    try:
        pf = parse_problem_text(problem_text)
        seed = _resolve_seed(pf, options)
        field = resolve_field(pf, options.field, seed)
        budgets = build_budgets(
            pf,
            {
                "max_degree": _resolve_budget(
                    options.max_degree, pf.budgets.get("max_degree"), "GERMLAB_MAX_DEGREE"
                ),
                "max_spairs": _resolve_budget(
                    options.max_spairs, pf.budgets.get("max_spairs"), "GERMLAB_MAX_SPAIRS"
                ),
                "max_reductions": _resolve_budget(
                    options.max_reductions,
                    pf.budgets.get("max_reductions"),
                    "GERMLAB_MAX_REDUCTIONS",
                ),
            },
        )
        attempts = 3 if (options.field or pf.field_spec) == "fp" else 1
        last: Exception | None = None
        for attempt in range(attempts):
            if attempt:
                field = resolve_field(pf, options.field, seed + 1000 * attempt)
            try:
                payload = _dispatch(command, pf, field, seed, budgets, options)
                break
            except BadPrimeError as exc:
                last = exc
        else:
            raise GenericityError(f"no good prime found: {last}")
        payload["command"] = command
        payload["seed"] = seed
        payload["field"] = _field_meta(field)
        payload["budgets"] = {
            "max_degree": budgets.max_degree,
            "max_spairs": budgets.max_spairs,
            "max_reductions": budgets.max_reductions,
        }
        return payload
    except (InputError, PolynomialSyntaxError, ValidationError) as exc:
        raise RunFailure("input", str(exc)) from exc
    except BadPrimeError as exc:
        raise RunFailure("genericity", f"bad prime: {exc}") from exc
    except GenericityError as exc:
        raise RunFailure("genericity", str(exc)) from exc
    except BudgetExceededError as exc:
        raise RunFailure("budget", str(exc)) from exc


def _dispatch(command, pf, field, seed, budgets, options) -> dict:
    if command == "validate":
        return _validate_report(pf, field, seed, budgets)
    if command == "invariants":
        return _invariants_report(pf, field, seed, budgets)
    if command == "family-check":
        return _family_report(pf, field, seed, budgets, options)
    if command == "jacobian-extension":
        return _jacobian_extension_report(pf, field, seed, budgets, options)
    raise InputError(f"unknown command {command!r}")


def render(payload: dict) -> str:
    return to_json(payload)
