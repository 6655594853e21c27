"""Canonical JSON reports.

Reports are diff-able golden artifacts: sorted keys, two-space indent, all
exact numbers (integers and rationals) rendered as decimal strings, no
floats anywhere.  Rerunning with the same inputs, seed and budgets must
produce byte-identical output, so nothing time- or host-dependent belongs
here.
"""

from __future__ import annotations

import json
from fractions import Fraction

SCHEMA = "germlab.report/1"


def _convert(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(_convert(k)): _convert(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_convert(v) for v in obj]
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        return str(obj)
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    return str(obj)


def canonical_report(payload: dict) -> dict:
    out = {"schema": SCHEMA}
    out.update(payload)
    return _convert(out)


def to_json(payload: dict) -> str:
    return json.dumps(canonical_report(payload), sort_keys=True, indent=2) + "\n"
