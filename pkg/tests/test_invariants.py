"""Invariant pipelines against independently derived expected values.

Expected corpus values come from oracles that never touch the smoothing
pipeline: Jacobian-ideal colengths for hypersurface Milnor numbers, the
Le-Greuel colength chain for complete intersections, hand Lagrange/branch
counts for the small curves, and Euler characteristics of generic
determinantal slices for the 2x3 cone.
"""

import pytest

from germlab import (
    LOCAL,
    Ideal,
    Ring,
    colength,
    gaffney_md_icis,
    germ_report,
    icis_milnor,
    invariant_report,
    milnor_number,
    nu_star_sequence,
    parse_polynomial,
    polar_multiplicity_k,
    top_polar_X,
    top_polar_fiber,
    vanishing_euler_X,
    vanishing_euler_fiber,
    euler_obstruction_fiber,
)
from conftest import CORPUS, SEED, pair, presentation


def jacobian_colength_oracle(f_text, varnames):
    """Classical mu of a hypersurface function: local colength of <grad f>."""
    R = Ring(tuple(varnames))
    f = parse_polynomial(f_text, R)
    I = Ideal(R, [f.diff(v) for v in varnames])
    return colength(I, LOCAL).colength


# -- Milnor numbers -----------------------------------------------------------


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_milnor_one_variable_powers(k):
    fg = pair(["x"], [["0"]], f"x^{k + 1}")
    assert milnor_number(fg, SEED) == k
    assert jacobian_colength_oracle(f"x^{k + 1}", ["x"]) == k


@pytest.mark.parametrize(
    "f,varnames,expected",
    [
        ("x^2 - y^2", ["x", "y"], 1),
        ("x^2 - y^3", ["x", "y"], 2),
        ("x^2 + y^3 + z^2", ["x", "y", "z"], 2),
    ],
)
def test_milnor_classical_hypersurfaces(f, varnames, expected):
    fg = pair(varnames, [["0"]], f)
    assert milnor_number(fg, SEED) == expected
    assert jacobian_colength_oracle(f, varnames) == expected


def test_milnor_two_seed_agreement():
    fg = pair(["x", "y"], [["x^2 - y^3"]], "y")
    assert milnor_number(fg, 1) == milnor_number(fg, 2) == 3


def test_milnor_morse_on_smooth_graph():
    fg = pair(["x", "y", "z"], [["z - x*y"]], "x^2 + y^2 + z")
    # smooth host, Morse-equivalent function: one critical point
    assert milnor_number(fg, SEED) == 1


def test_milnor_localizes_away_escaping_points():
    # On the cusp with f = y the perturbed system has 4 affine critical
    # points but only 3 converge to the origin.
    fg = pair(["x", "y"], [["x^2 - y^3"]], "y")
    assert milnor_number(fg, SEED) == 3


# -- polar multiplicities ------------------------------------------------------


def test_gaffney_smooth_graph_is_zero():
    R = Ring(("x", "y"))
    phi = [parse_polynomial("y - x^2", R)]
    assert gaffney_md_icis(phi, SEED) == 0


def test_gaffney_node_and_cusp():
    R = Ring(("x", "y"))
    assert gaffney_md_icis([parse_polynomial("x^2 - y^2", R)], SEED) == 2
    assert gaffney_md_icis([parse_polynomial("x^2 - y^3", R)], SEED) == 3


def test_top_polar_cusp():
    P = presentation(["x", "y"], [["x^2 - y^3"]])
    assert top_polar_X(P, SEED) == 3


def test_top_polar_smooth_matches_gaffney():
    P = presentation(["x", "y"], [["y - x^2"]])
    assert top_polar_X(P, SEED) == 0


def test_top_polar_cone_two_routes():
    P = presentation(["x", "y", "z", "w"], [["x", "y", "z"], ["y", "z", "w"]], s=2)
    assert top_polar_X(P, 3) == top_polar_X(P, 17) == 3


def test_polar_multiplicity_k0_is_multiplicity():
    P = presentation(["x", "y"], [["x^2 - y^3"]])
    assert polar_multiplicity_k(P.ideal(), P.d, 0, SEED) == 2


def test_polar_multiplicity_smooth_higher_vanish():
    P = presentation(["x", "y", "z"], [["z - x*y"]])
    assert polar_multiplicity_k(P.ideal(), P.d, 0, SEED) == 1
    assert polar_multiplicity_k(P.ideal(), P.d, 1, SEED) == 0


def test_polar_multiplicity_cone_polar_curve():
    P = presentation(["x", "y", "z", "w"], [["x", "y", "z"], ["y", "z", "w"]], s=2)
    assert polar_multiplicity_k(P.ideal(), P.d, 1, SEED) == 4


def test_top_polar_fiber_plane_cusp():
    fg = pair(["x", "y"], [["0"]], "x^2 + y^3")
    # nu(Y) + nu(Y cap line) = 2 + 1
    assert top_polar_fiber(fg, SEED) == 3


def test_top_polar_fiber_d1_counts_points():
    fg = pair(["x", "y"], [["x^2 - y^3"]], "y")
    assert top_polar_fiber(fg, SEED) == 2


# -- vanishing Euler characteristics and obstructions ---------------------------


def test_vanishing_euler_cusp_node():
    assert vanishing_euler_X(presentation(["x", "y"], [["x^2 - y^3"]]), SEED) == 2
    assert vanishing_euler_X(presentation(["x", "y"], [["x^2 - y^2"]]), SEED) == 1


def test_vanishing_euler_smooth_zero():
    assert vanishing_euler_X(presentation(["x", "y", "z"], [["z - x*y"]]), SEED) == 0


def test_icis_milnor_chain_oracle():
    R = Ring(("x", "y", "z"))
    phi = [parse_polynomial("x^2 + y^2 + z^2", R), parse_polynomial("x*y", R)]
    assert icis_milnor(phi, SEED) == 5


def test_vanishing_euler_fiber_le_greuel():
    fg = pair(["x", "y"], [["0"]], "x^2 + y^3")
    assert vanishing_euler_fiber(fg, SEED) == 2
    fg2 = pair(["x", "y"], [["x^2 - y^3"]], "y")
    assert vanishing_euler_fiber(fg2, SEED) == 1


def test_euler_obstruction_fiber_routes_agree():
    fg = pair(["x", "y"], [["0"]], "x^2 + y^3")
    assert euler_obstruction_fiber(fg, SEED) == 2  # curve: Eu = m_0


def test_nu_star_values():
    assert nu_star_sequence(presentation(["x", "y"], [["x^2 - y^3"]]), SEED) == [1, 2]
    assert nu_star_sequence(presentation(["x", "y"], [["x^2 - y^2"]]), SEED) == [1, 1]
    assert nu_star_sequence(presentation(["x", "y", "z"], [["0"]]), SEED) == [0, 0, 0, 0]


# -- assembled corpus reports ----------------------------------------------------


def test_corpus_reports_match_frozen_oracles(corpus_reports):
    for name, expected in CORPUS.items():
        rep = corpus_reports[name]
        assert rep.mu_f == expected["mu"], name
        assert rep.nu_X == expected["nu_X"], name
        assert rep.nu_Y == expected["nu_Y"], name
        assert rep.m_X == expected["m_X"], name
        assert rep.m_Y == expected["m_Y"], name
        assert rep.eu_X == expected["eu_X"], name
        assert rep.eu_Y == expected["eu_Y"], name
        assert rep.nu_star_X == expected["nu_star"], name


def test_corpus_identities(corpus_reports):
    for name, rep in corpus_reports.items():
        assert rep.le_greuel_ok, name
        assert all(rep.checks.values()), (name, rep.checks)
        assert all(v >= 0 for v in rep.m_X), name
        assert rep.nu_star_X[0] == rep.m_X[0] - 1, name
        for i in range(1, len(rep.m_X)):
            assert rep.m_X[i] == rep.nu_star_X[i] + rep.nu_star_X[i - 1], name


def test_report_seed_reproducibility(corpus_pairs):
    from germlab.invariants import clear_report_cache

    rep1 = invariant_report(corpus_pairs["cusp-y"], 123)
    clear_report_cache()
    rep2 = invariant_report(corpus_pairs["cusp-y"], 123)
    assert rep1.to_json() == rep2.to_json()


def test_invariants_under_linear_coordinate_change():
    # mu, nu, m_k are invariant under invertible linear changes of C^N
    base = invariant_report(pair(["x", "y"], [["x^2 - y^3"]], "y"), SEED)
    moved = invariant_report(
        pair(["x", "y"], [["(x + 2*y)^2 - (y - x)^3"]], "y - x"), SEED
    )
    assert (base.mu_f, base.nu_X, base.m_X, base.m_Y) == (
        moved.mu_f,
        moved.nu_X,
        moved.m_X,
        moved.m_Y,
    )


def test_two_independent_seeds_agree_on_all_invariants():
    for varnames, rows, f, s in [
        (["x", "y"], [["x^2 - y^3"]], "y", 1),
        (["x", "y", "z", "w"], [["x", "y", "z"], ["y", "z", "w"]], "x + 2*y + 3*z + 5*w", 2),
    ]:
        a = invariant_report(pair(varnames, rows, f, s), 7)
        b = invariant_report(pair(varnames, rows, f, s), 1234)
        assert (a.mu_f, a.nu_X, a.nu_Y, a.m_X, a.m_Y, a.eu_X, a.eu_Y, a.nu_star_X) == (
            b.mu_f, b.nu_X, b.nu_Y, b.m_X, b.m_Y, b.eu_X, b.eu_Y, b.nu_star_X
        )


def test_germ_only_report():
    rep = germ_report(presentation(["x", "y", "z", "w"], [["x", "y", "z"], ["y", "z", "w"]], s=2), SEED)
    assert rep.m_X == [3, 4, 3]
    assert rep.nu_X == 1
    assert rep.eu_X == -1
    assert rep.mu_f is None
