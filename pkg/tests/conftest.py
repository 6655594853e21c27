"""Shared fixtures: rings, the acceptance corpus, and small builders."""

from __future__ import annotations

import pytest

from germlab import (
    DeterminantalPresentation,
    FamilySpec,
    FunctionGerm,
    PolyMatrix,
    Ring,
    parse_polynomial,
)

SEED = 42


def ring(*names, field=None):
    from germlab.fields import QQ

    return Ring(tuple(names), field or QQ)


def poly(text, R):
    return parse_polynomial(text, R)


def presentation(varnames, rows, s=1, field=None):
    R = ring(*varnames, field=field)
    M = PolyMatrix([[poly(e, R) for e in row] for row in rows])
    return DeterminantalPresentation(M, s)


def pair(varnames, rows, f, s=1, field=None):
    P = presentation(varnames, rows, s, field=field)
    return FunctionGerm(poly(f, P.ring), P)


def family(varnames, rows, f, s=1, field=None):
    R = ring("t", *varnames, field=field)
    M = PolyMatrix([[poly(e, R) for e in row] for row in rows])
    return FamilySpec(M, s, poly(f, R))


# The acceptance corpus: s = 1 hypersurfaces, s = 1 complete intersections,
# and one s = 2 determinantal germ, each with a function of isolated
# singularity.  Expected values were frozen from independent oracles
# (Jacobian-ideal colengths, Lagrange/branch counting by hand, Euler
# characteristics of generic determinantal slices) before the pipeline ran.
CORPUS = {
    "line-a1": dict(vars=["x"], rows=[["0"]], s=1, f="x^2",
                    mu=1, nu_X=0, nu_Y=1, m_X=[1, 0], m_Y=[2], eu_X=1, eu_Y=0, nu_star=[0, 0]),
    "line-a3": dict(vars=["x"], rows=[["0"]], s=1, f="x^4",
                    mu=3, nu_X=0, nu_Y=3, m_X=[1, 0], m_Y=[4], eu_X=1, eu_Y=0, nu_star=[0, 0]),
    "cusp-y": dict(vars=["x", "y"], rows=[["x^2 - y^3"]], s=1, f="y",
                   mu=3, nu_X=2, nu_Y=1, m_X=[2, 3], m_Y=[2], eu_X=2, eu_Y=0, nu_star=[1, 2]),
    "node-y": dict(vars=["x", "y"], rows=[["x^2 - y^2"]], s=1, f="y",
                   mu=2, nu_X=1, nu_Y=1, m_X=[2, 2], m_Y=[2], eu_X=2, eu_Y=0, nu_star=[1, 1]),
    "plane-cusp-f": dict(vars=["x", "y"], rows=[["0"]], s=1, f="x^2 + y^3",
                         mu=2, nu_X=0, nu_Y=2, m_X=[1, 0, 0], m_Y=[2, 3], eu_X=1, eu_Y=2,
                         nu_star=[0, 0, 0]),
    "suspended-cusp-f": dict(vars=["x", "y", "z"], rows=[["0"]], s=1, f="x^2 + y^3 + z^2",
                             mu=2, nu_X=0, nu_Y=2, m_X=[1, 0, 0, 0], m_Y=[2, 2, 3], eu_X=1,
                             eu_Y=0, nu_star=[0, 0, 0, 0]),
    "four-lines-z": dict(vars=["x", "y", "z"], rows=[["x^2 + y^2 + z^2"], ["x*y"]], s=1, f="z",
                         mu=8, nu_X=5, nu_Y=3, m_X=[4, 8], m_Y=[4], eu_X=4, eu_Y=0,
                         nu_star=[3, 5]),
    "cone-linear": dict(vars=["x", "y", "z", "w"], rows=[["x", "y", "z"], ["y", "z", "w"]], s=2,
                        f="x + 2*y + 3*z + 5*w",
                        mu=3, nu_X=1, nu_Y=2, m_X=[3, 4, 3], m_Y=[3, 4], eu_X=-1, eu_Y=3,
                        nu_star=[2, 2, 1]),
}


@pytest.fixture(scope="session")
def corpus_pairs():
    return {name: pair(c["vars"], c["rows"], c["f"], c["s"]) for name, c in CORPUS.items()}


@pytest.fixture(scope="session")
def corpus_reports(corpus_pairs):
    from germlab import invariant_report

    return {name: invariant_report(fg, SEED) for name, fg in corpus_pairs.items()}
