"""One-parameter families of function germs on determinantal singularities.

A family is a matrix Psi(t, x) with Psi(0, x) the base presentation and an
origin-preserving unfolding f_t(x).  The module instantiates members at
sampled rational parameters, checks goodness (no critical points besides
the origin on the affine slice), verifies conservation of the Milnor
number through a two-parameter localized count, tests constancy of the
polar multiplicities, and assembles the Whitney-equisingularity verdict:
the family is Whitney equisingular iff it is good and all m_i(X_t) and
m_k(Y_t) are constant.

Sampling caveat: constancy for all small t is an open condition checked
at finitely many generic samples; verdicts are "verified at samples",
never proofs, and every verdict records that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError
from .germs import (
    DeterminantalPresentation,
    FunctionGerm,
    PolyMatrix,
    critical_ideal_on_deformation,
    degenerate_critical_set_ideal,
    minors_ideal,
    singular_locus_ideal,
    zero_set_confined_to_origin,
)
from .invariants import (
    GenericitySample,
    _localized_count,
    _two_agreeing,
    invariant_report,
    milnor_number,
    rng_for,
    sample_matrix,
    sample_rational,
    sample_vector,
)
from .orders import GLOBAL, LOCAL
from .poly import Polynomial
from .stdbasis import (
    Budgets,
    DEFAULT_BUDGETS,
    Ideal,
    colength,
    is_unit_ideal,
    saturate_by_poly,
    substitute_ideal,
)

SAMPLING_CAVEAT = (
    "constancy verified at sampled parameters only; a jump confined to "
    "non-sampled t cannot be excluded by finitely many samples"
)


@dataclass
class FamilySpec:
    """Psi(t, x) and f(t, x) over the ring (t, x_1..x_N)."""

    psi_family: PolyMatrix
    s: int
    f_family: Polynomial
    tvar: str = "t"

    def __post_init__(self):
        self.ring = self.psi_family.ring
        if self.f_family.ring != self.ring:
            raise ValidationError("family function lives in a different ring")
        if self.tvar not in self.ring.vars:
            raise ValidationError(f"family ring has no parameter {self.tvar!r}")
        self.xvars = tuple(v for v in self.ring.vars if v != self.tvar)
        self.base_ring = self.ring.drop([self.tvar])

    def validate(self, budgets: Budgets = DEFAULT_BUDGETS) -> dict:
        checks = {}
        # f(t, 0) must vanish identically in t
        at_zero = self.f_family.substitute(
            {v: Fraction(0) for v in self.xvars}, self.ring
        )
        checks["origin_preserving"] = at_zero.is_zero()
        if not at_zero.is_zero():
            raise ValidationError("unfolding is not origin preserving: f(t, 0) != 0")
        base = self.instantiate_at(Fraction(0), budgets)
        checks.update(base.validate(budgets))
        return checks

    def instantiate_at(self, t0, budgets: Budgets = DEFAULT_BUDGETS) -> FunctionGerm:
        """Substitute t = t0; the member is validated on construction."""
        t0 = Fraction(t0)
        assignment = {self.tvar: self.base_ring.const(t0)}
        psi0 = self.psi_family.substitute(assignment, self.base_ring)
        f0 = self.f_family.substitute(assignment, self.base_ring)
        P = DeterminantalPresentation(psi0, self.s)
        fg = FunctionGerm(f0, P)
        try:
            fg.validate(budgets)
        except ValidationError as exc:
            raise ValidationError(f"family degenerates at t = {t0}: {exc}") from exc
        return fg


def default_t_samples(seed, count: int = 3):
    """Generic rational parameters at two magnitude scales, seed-determined."""
    rng = rng_for(seed, "t-samples")
    out = []
    for i in range(count):
        value = Fraction(sample_rational(rng, 7), rng.randint(2, 7))
        if i == count - 1:
            value = value / 16
        out.append(value)
    return out


def _critical_ideal_of_member(fg: FunctionGerm) -> Ideal:
    return critical_ideal_on_deformation(fg.host.ideal(), fg.f, fg.host.d)


def goodness_check(
    spec: FamilySpec, t_samples, seed, budgets: Budgets = DEFAULT_BUDGETS
) -> dict:
    """Goodness of the family at 0 and the sampled parameters.

    Two algebraic conditions per member, each strictly stronger than the
    ball version: the singular locus of X_t and the critical locus of f_t
    on X_t must be confined to the origin as affine sets.  The mu-route
    (mu(f_t) = mu(f), equivalent to goodness for good variety families) is
    computed and reported alongside.
    """
    base = spec.instantiate_at(0, budgets)
    mu_base = milnor_number(base, f"{seed}|mu", budgets)
    per_t = []
    x_good = f_good = mu_constant = True
    for t0 in [Fraction(0)] + [Fraction(v) for v in t_samples]:
        member = spec.instantiate_at(t0, budgets)
        sing_ok = zero_set_confined_to_origin(singular_locus_ideal(member.host), budgets)
        crit_ok = zero_set_confined_to_origin(_critical_ideal_of_member(member), budgets)
        mu_t = mu_base if t0 == 0 else milnor_number(member, f"{seed}|mu", budgets)
        per_t.append(
            {
                "t": t0,
                "variety_good": sing_ok,
                "function_good": crit_ok,
                "mu": mu_t,
            }
        )
        x_good &= sing_ok
        f_good &= crit_ok
        mu_constant &= mu_t == mu_base
    return {
        "x_good": x_good,
        "f_good": f_good,
        "mu_constant": mu_constant,
        "mu_base": mu_base,
        "per_t": per_t,
    }


def conservation_check(
    spec: FamilySpec, t0, seed, budgets: Budgets = DEFAULT_BUDGETS
) -> dict:
    """Conservation of the Milnor number: mu(f) equals the sum of mu(f_t, z)
    over the critical points z of f_t converging to the origin.

    The sum is computed exactly by a two-parameter localization: deform by
    s*(A, b) inside the family, saturate by s and specialize to s = 0
    (leaving the family of per-member Milnor schemes over the t-line),
    then saturate by t and specialize to t = 0.  The member at the sampled
    t0 is also inspected directly to report how the total splits between
    the origin and escaped critical points.
    """
    base = spec.instantiate_at(0, budgets)
    mu_base = milnor_number(base, f"{seed}|mu", budgets)
    ring = spec.ring
    xvars = spec.xvars
    N = len(xvars)
    d = base.host.d
    m, n = spec.psi_family.shape
    trivial = spec.psi_family.is_zero()

    def attempt(rng: random.Random, k: int):
        A0 = sample_matrix(rng, m, n) if not trivial else None
        b0 = sample_vector(rng, N)
        sname = ring.fresh_name("s")
        ring_s = ring.extend([sname])
        svar = ring_s.var(sname)
        if trivial:
            eqns = []
        else:
            entries = [
                [
                    spec.psi_family.entries[i][j].map_ring(ring_s) + svar.scale(A0[i][j])
                    for j in range(n)
                ]
                for i in range(m)
            ]
            eqns = list(minors_ideal(PolyMatrix(entries), spec.s).gens)
        g = spec.f_family.map_ring(ring_s)
        for v, c in zip(xvars, b0):
            g = g + svar * ring_s.var(v).scale(c)
        K = critical_ideal_on_deformation(Ideal(ring_s, eqns), g, d, wrt=xvars)
        sat_s = saturate_by_poly(K, svar, budgets)
        K1 = substitute_ideal(sat_s, {sname: ring.zero()}, ring)
        total = _localized_count(K1, spec.tvar, spec.base_ring, budgets)
        return total, GenericitySample(tag=f"conservation:{k}", b=b0, A=A0)

    total = _two_agreeing(attempt, seed, "conservation")

    member = spec.instantiate_at(t0, budgets)
    crit = _critical_ideal_of_member(member)
    ginfo = colength(crit, GLOBAL, budgets)
    linfo = colength(crit, LOCAL, budgets)
    at_origin = linfo.colength if linfo.finite else None
    split = (
        ginfo.colength - at_origin
        if (ginfo.finite and at_origin is not None)
        else None
    )
    jac_ext, _ = degenerate_critical_set_ideal(
        member.f, list(member.host.ideal().gens), d, budgets=budgets
    )
    split_morse = is_unit_ideal(jac_ext, GLOBAL, budgets)
    return {
        "ok": total == mu_base,
        "mu_base": mu_base,
        "localized_family_count": total,
        "t0": Fraction(t0),
        "critical_scheme_colength_at_t0": ginfo.colength if ginfo.finite else None,
        "colength_at_origin_at_t0": at_origin,
        "colength_off_origin_at_t0": split,
        "split_points_morse": split_morse,
    }


def _member_reports(spec: FamilySpec, t_samples, seed, budgets: Budgets):
    reports = {}
    for t0 in [Fraction(0)] + [Fraction(v) for v in t_samples]:
        member = spec.instantiate_at(t0, budgets)
        reports[t0] = invariant_report(member, seed, budgets)
    return reports


def constancy_check(
    spec: FamilySpec, t_samples, which: str, seed, budgets: Budgets = DEFAULT_BUDGETS
) -> dict:
    """Constancy across {0} + samples of one invariant family:
    which in {m_X, m_Y, mu, nu_star}."""
    getters = {
        "m_X": lambda r: r.m_X,
        "m_Y": lambda r: r.m_Y,
        "mu": lambda r: r.mu_f,
        "nu_star": lambda r: r.nu_star_X,
    }
    if which not in getters:
        raise ValueError(f"unknown invariant family {which!r}")
    reports = _member_reports(spec, t_samples, seed, budgets)
    values = {t0: getters[which](rep) for t0, rep in reports.items()}
    base = values[Fraction(0)]
    return {
        "which": which,
        "constant": all(v == base for v in values.values()),
        "values": values,
    }


@dataclass
class FamilyVerdict:
    """Outcome of the Whitney-equisingularity decision at sampled parameters."""

    t_samples: list
    per_t_reports: dict
    good: bool
    good_variety: bool
    mu_constant: bool
    m_X_constant: bool
    m_Y_constant: bool
    nu_star_constant: bool
    whitney: bool
    failing: list
    warnings: list
    goodness: dict
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "t_samples": [str(t) for t in self.t_samples],
            "per_t": {
                str(t): rep.to_json() for t, rep in sorted(self.per_t_reports.items())
            },
            "good": self.good,
            "good_variety": self.good_variety,
            "mu_constant": self.mu_constant,
            "m_X_constant": self.m_X_constant,
            "m_Y_constant": self.m_Y_constant,
            "nu_star_constant": self.nu_star_constant,
            "whitney": self.whitney,
            "failing": list(self.failing),
            "warnings": list(self.warnings),
            "checks": dict(self.checks),
        }


def whitney_verdict(
    spec: FamilySpec, t_samples, seed, budgets: Budgets = DEFAULT_BUDGETS
) -> FamilyVerdict:
    """The numerical decision: Whitney equisingular iff the variety family
    is good and all m_i(X_t), m_k(Y_t) are constant.

    Function-goodness and mu-constancy are reported as well; given a good
    variety family they are equivalent, and constancy of the polar
    multiplicities forces both.  Internal implications among the computed
    flags are asserted and any violation is surfaced as a warning rather
    than silently reconciled.
    """
    spec.validate(budgets)
    t_samples = [Fraction(v) for v in t_samples]
    goodness = goodness_check(spec, t_samples, seed, budgets)
    reports = _member_reports(spec, t_samples, seed, budgets)
    base = reports[Fraction(0)]
    m_X_constant = all(r.m_X == base.m_X for r in reports.values())
    m_Y_constant = all(r.m_Y == base.m_Y for r in reports.values())
    nu_star_constant = all(r.nu_star_X == base.nu_star_X for r in reports.values())
    mu_constant = all(r.mu_f == base.mu_f for r in reports.values())
    checks = {}
    warnings = [SAMPLING_CAVEAT]
    # constancy of all polar multiplicities forces mu-constancy
    checks["m_const_implies_mu_const"] = (not (m_X_constant and m_Y_constant)) or mu_constant
    if not checks["m_const_implies_mu_const"]:
        warnings.append(
            "internal inconsistency: polar multiplicities constant but mu jumped"
        )
    # nu* bookkeeping: m_i(X_t) constant iff nu*(X_t) constant.
    checks["m_X_iff_nu_star"] = m_X_constant == nu_star_constant
    if not checks["m_X_iff_nu_star"]:
        warnings.append("internal inconsistency: m_X constancy disagrees with nu*")
    # Given a good variety family, mu-constancy is equivalent to F-goodness.
    if goodness["x_good"]:
        checks["mu_const_iff_good"] = goodness["mu_constant"] == goodness["f_good"]
        if not checks["mu_const_iff_good"]:
            warnings.append(
                "internal inconsistency: mu-constancy disagrees with goodness"
            )
    whitney = goodness["x_good"] and m_X_constant and m_Y_constant
    failing = []
    if not goodness["x_good"]:
        failing.append("variety family is not good (singular points off the origin)")
    if not goodness["f_good"]:
        failing.append("function family is not good (critical points off the origin)")
    if not mu_constant:
        failing.append("mu is not constant")
    if not m_X_constant:
        failing.append("m_i(X_t) not constant")
    if not m_Y_constant:
        failing.append("m_k(Y_t) not constant")
    return FamilyVerdict(
        t_samples=t_samples,
        per_t_reports=reports,
        good=goodness["f_good"],
        good_variety=goodness["x_good"],
        mu_constant=mu_constant,
        m_X_constant=m_X_constant,
        m_Y_constant=m_Y_constant,
        nu_star_constant=nu_star_constant,
        whitney=whitney,
        failing=failing,
        warnings=warnings,
        goodness=goodness,
        checks=checks,
    )
