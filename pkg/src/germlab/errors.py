"""Error taxonomy shared across the package.

The CLI maps these to exit codes: input errors -> 1, genericity failures
-> 2, exhausted resource budgets -> 3.  Budget exhaustion is deliberately
distinct from mathematical failure: a standard-basis run that hits its
step cap says nothing about the ideal.
"""

from __future__ import annotations


class GermlabError(Exception):
    """Base class for all domain errors."""


class InputError(GermlabError):
    """Malformed problem input (syntax, mode ambiguity, bad ranges)."""


class GenericityError(GermlabError):
    """Random genericity samples failed certification or disagreed after retries."""


class BudgetExceededError(GermlabError):
    """A configured resource budget (S-pairs, degree, reduction steps) was hit."""

    def __init__(self, kind: str, limit):
        super().__init__(f"budget exceeded: {kind} limit {limit}")
        self.kind = kind
        self.limit = limit


class ValidationError(GermlabError):
    """An object failed its construction-time mathematical validation."""
