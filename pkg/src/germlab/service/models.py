"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class BudgetOverrides(BaseModel):
    max_degree: int | None = Field(default=None, gt=0)
    max_spairs: int | None = Field(default=None, gt=0)
    max_reductions: int | None = Field(default=None, gt=0)


class RunRequest(BaseModel):
    """One problem and its run options.

    problem_toml carries the problem file verbatim; problem is the already
    parsed table for clients that prefer structured JSON.  Exactly one of
    the two must be present.
    """

    problem_toml: str | None = None
    problem: dict | None = None
    seed: int | None = None
    field: str | None = None
    t_samples: list[str] | None = None
    boardman: list[int] | None = None
    budgets: BudgetOverrides | None = None
    conservation: bool = True


class RunResponse(BaseModel):
    ok: bool = True
    report: dict


class ErrorInfo(BaseModel):
    kind: str
    message: str


class ErrorResponse(BaseModel):
    ok: bool = False
    error: ErrorInfo
