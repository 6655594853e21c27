"""Problem files: a declarative TOML description of a germ, a pair, or a family.

Exactly one mode is implied by which fields are present:

  germ only        variables, matrix, s
  germ + function  ... plus function
  family           ... plus family_matrix and family_function (entries may
                   use the parameter t; the base pair, if also given, must
                   match the family at t = 0)

Optional overrides: seed, field ("q", "fp", "fp:PRIME"), t_samples
(strings like "1/2"), and a [budgets] table with max_degree / max_spairs /
max_reductions.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction

if sys.version_info >= (3, 11):  # pragma: no cover
    import tomllib
else:
    import tomli as tomllib

from .errors import InputError, ValidationError
from .family import FamilySpec
from .fields import field_from_spec
from .germs import DeterminantalPresentation, FunctionGerm, PolyMatrix
from .parse import PolynomialSyntaxError, parse_polynomial
from .poly import Ring
from .stdbasis import Budgets

TVAR = "t"


@dataclass
class ProblemFile:
    variables: tuple
    matrix: list | None
    s: int
    function: str | None
    family_matrix: list | None
    family_function: str | None
    seed: int | None = None
    field_spec: str | None = None
    t_samples: list | None = None
    budgets: dict = field(default_factory=dict)
    mode: str = "germ"


def _expect(condition, message):
    if not condition:
        raise InputError(message)


def parse_problem_dict(data: dict) -> ProblemFile:
    _expect(isinstance(data, dict), "problem must be a table")
    unknown = set(data) - {
        "variables",
        "matrix",
        "s",
        "function",
        "family_matrix",
        "family_function",
        "seed",
        "field",
        "t_samples",
        "budgets",
    }
    _expect(not unknown, f"unknown problem keys: {sorted(unknown)}")
    variables = data.get("variables")
    _expect(
        isinstance(variables, list) and variables and all(isinstance(v, str) for v in variables),
        "variables must be a nonempty list of names",
    )
    _expect(TVAR not in variables, f"variable name {TVAR!r} is reserved for the family parameter")
    s = data.get("s")
    _expect(isinstance(s, int) and s >= 1, "s must be a positive integer")

    matrix = data.get("matrix")
    family_matrix = data.get("family_matrix")
    function = data.get("function")
    family_function = data.get("family_function")
    _expect(
        matrix is not None or family_matrix is not None,
        "one of matrix / family_matrix is required",
    )
    for name, m in (("matrix", matrix), ("family_matrix", family_matrix)):
        if m is not None:
            _expect(
                isinstance(m, list)
                and m
                and all(isinstance(row, list) and row for row in m)
                and all(isinstance(e, str) for row in m for e in row)
                and len({len(row) for row in m}) == 1,
                f"{name} must be a rectangular table of polynomial strings",
            )

    if family_matrix is not None or family_function is not None:
        _expect(
            family_matrix is not None and family_function is not None,
            "family mode needs both family_matrix and family_function",
        )
        mode = "family"
    elif function is not None:
        mode = "pair"
    else:
        mode = "germ"
    _expect(
        mode == "family" or family_function is None,
        "family_function without family_matrix is ambiguous",
    )

    t_samples = data.get("t_samples")
    if t_samples is not None:
        _expect(
            isinstance(t_samples, list) and all(isinstance(v, str) for v in t_samples),
            "t_samples must be a list of rational strings",
        )
        try:
            t_samples = [Fraction(v) for v in t_samples]
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad t sample: {exc}") from exc
        _expect(all(v != 0 for v in t_samples), "t samples must be nonzero")
    seed = data.get("seed")
    if seed is not None:
        _expect(isinstance(seed, int), "seed must be an integer")
    field_spec = data.get("field")
    if field_spec is not None:
        _expect(isinstance(field_spec, str), "field must be a string")
    budgets = data.get("budgets", {})
    _expect(isinstance(budgets, dict), "budgets must be a table")
    bad = set(budgets) - {"max_degree", "max_spairs", "max_reductions"}
    _expect(not bad, f"unknown budget keys: {sorted(bad)}")
    _expect(
        all(isinstance(v, int) and v > 0 for v in budgets.values()),
        "budgets must be positive integers",
    )

    return ProblemFile(
        variables=tuple(variables),
        matrix=matrix,
        s=s,
        function=function,
        family_matrix=family_matrix,
        family_function=family_function,
        seed=seed,
        field_spec=field_spec,
        t_samples=t_samples,
        budgets=dict(budgets),
        mode=mode,
    )


def parse_problem_text(text: str) -> ProblemFile:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"problem file is not valid TOML: {exc}") from exc
    return parse_problem_dict(data)


def parse_problem(path: str) -> ProblemFile:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read problem file: {exc}") from exc
    return parse_problem_text(text)


# ---------------------------------------------------------------------------
# building domain objects


def _parse_entry(text: str, ring: Ring, where: str):
    try:
        return parse_polynomial(text, ring)
    except PolynomialSyntaxError as exc:
        raise InputError(f"in {where}: {exc}") from exc


def build_budgets(pf: ProblemFile, overrides: dict | None = None) -> Budgets:
    merged = dict(pf.budgets)
    if overrides:
        merged.update({k: v for k, v in overrides.items() if v is not None})
    return Budgets(
        max_spairs=merged.get("max_spairs", Budgets.max_spairs),
        max_degree=merged.get("max_degree", Budgets.max_degree),
        max_reductions=merged.get("max_reductions", Budgets.max_reductions),
    )


def build_presentation(pf: ProblemFile, field) -> DeterminantalPresentation:
    _expect(pf.matrix is not None, "this command needs a base matrix")
    ring = Ring(pf.variables, field)
    entries = [
        [_parse_entry(e, ring, f"matrix[{i}][{j}]") for j, e in enumerate(row)]
        for i, row in enumerate(pf.matrix)
    ]
    try:
        return DeterminantalPresentation(PolyMatrix(entries), pf.s)
    except ValidationError as exc:
        raise InputError(str(exc)) from exc


def build_function_germ(pf: ProblemFile, field) -> FunctionGerm:
    _expect(pf.function is not None, "this command needs a function")
    P = build_presentation(pf, field)
    f = _parse_entry(pf.function, P.ring, "function")
    return FunctionGerm(f, P)


def build_family(pf: ProblemFile, field) -> FamilySpec:
    _expect(pf.mode == "family", "this command needs a family problem")
    ring = Ring((TVAR,) + pf.variables, field)
    entries = [
        [_parse_entry(e, ring, f"family_matrix[{i}][{j}]") for j, e in enumerate(row)]
        for i, row in enumerate(pf.family_matrix)
    ]
    f = _parse_entry(pf.family_function, ring, "family_function")
    try:
        spec = FamilySpec(PolyMatrix(entries), pf.s, f)
    except ValidationError as exc:
        raise InputError(str(exc)) from exc
    if pf.matrix is not None or pf.function is not None:
        base_ring = ring.drop([TVAR])
        at0 = {TVAR: base_ring.zero()}
        if pf.matrix is not None:
            base_entries = [
                [_parse_entry(e, base_ring, f"matrix[{i}][{j}]") for j, e in enumerate(row)]
                for i, row in enumerate(pf.matrix)
            ]
            family_at0 = spec.psi_family.substitute(at0, base_ring)
            given = PolyMatrix(base_entries)
            _expect(
                given.shape == family_at0.shape
                and all(
                    given.entries[i][j] == family_at0.entries[i][j]
                    for i in range(given.shape[0])
                    for j in range(given.shape[1])
                ),
                "base matrix does not equal family_matrix at t = 0",
            )
        if pf.function is not None:
            base_f = _parse_entry(pf.function, base_ring, "function")
            _expect(
                base_f == spec.f_family.substitute(at0, base_ring),
                "base function does not equal family_function at t = 0",
            )
    return spec


def resolve_field(pf: ProblemFile, flag_value: str | None, seed: int):
    spec = flag_value or pf.field_spec or "q"
    try:
        return field_from_spec(spec, seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
