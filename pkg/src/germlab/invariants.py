"""Numerical invariants of function germs on isolated determinantal
singularities: Milnor number, polar multiplicities (including the top
polar multiplicity of the fiber), vanishing Euler characteristics, Euler
obstructions, and the nu* sequence of hyperplane-slice invariants.

Critical-point counts on smoothings are localized at the origin by a
one-parameter trick: the deformation is scaled by a fresh parameter s,
the ideal of the critical family is saturated by s (removing components
supported in the special fiber), and the specialization at s = 0 is a
zero-dimensional local ideal whose colength counts exactly the critical
points converging to the origin.  Counting all affine critical points
instead would overcount whenever some of them stay at finite distance or
escape to infinity as the perturbation shrinks (the cusp with a linear
function already does this).

Genericity is realized by seeded random samples plus certificates
(smoothness of the deformation by the Jacobian criterion, Morse-ness by
an iterated Jacobian extension being the unit ideal, zero-dimensionality
of critical schemes); every count must be reproduced by a second
independent sample before it is accepted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GenericityError, ValidationError
from .germs import (
    DeterminantalPresentation,
    FunctionGerm,
    PolyMatrix,
    critical_ideal_on_deformation,
    degenerate_critical_set_ideal,
    minors_ideal,
    rank_condition_ideal,
)
from .orders import GLOBAL, LOCAL
from .poly import Polynomial, Ring
from .stdbasis import (
    Budgets,
    DEFAULT_BUDGETS,
    Ideal,
    colength,
    ideal_sum,
    is_unit_ideal,
    krull_dimension,
    multiplicity_m0,
    saturate_by_poly,
    substitute_ideal,
)

ATTEMPTS = 5


def rng_for(seed, tag: str) -> random.Random:
    return random.Random(f"{seed}|{tag}")


def sample_rational(rng: random.Random, num_height: int = 9, den_height: int = 1) -> Fraction:
    num = rng.randint(1, num_height) * (1 if rng.random() < 0.5 else -1)
    den = rng.randint(1, den_height) if den_height > 1 else 1
    return Fraction(num, den)


def sample_vector(rng: random.Random, n: int, num_height: int = 9):
    return tuple(sample_rational(rng, num_height) for _ in range(n))


def sample_matrix(rng: random.Random, m: int, n: int, num_height: int = 9):
    return tuple(tuple(sample_rational(rng, num_height) for _ in range(n)) for _ in range(m))


def random_linear_form(ring: Ring, seed, height_bound: int = 9) -> Polynomial:
    """Degree-1 form with nonzero bounded coefficients, deterministic per seed."""
    if height_bound < 1:
        raise ValueError("height bound must be positive")
    rng = rng_for(seed, "linear-form")
    out = ring.zero()
    for v in ring.vars:
        out = out + ring.var(v).scale(sample_rational(rng, height_bound, min(height_bound, 4)))
    return out


def _linear_form_from(rng: random.Random, ring: Ring, wrt, height: int = 9) -> Polynomial:
    out = ring.zero()
    for v in wrt:
        out = out + ring.var(v).scale(sample_rational(rng, height))
    return out


@dataclass
class GenericitySample:
    """One random draw with the genericity certificates it passed."""

    tag: str
    b: tuple | None = None
    A: tuple | None = None
    e: Fraction | None = None
    p: str | None = None
    certificate: dict = field(default_factory=dict)
    value: int | None = None

    def to_json(self) -> dict:
        out = {"seed": self.tag, "certificate": dict(self.certificate)}
        if self.b is not None:
            out["b"] = [str(v) for v in self.b]
        if self.A is not None:
            out["A"] = [[str(v) for v in row] for row in self.A]
        if self.e is not None:
            out["e"] = str(self.e)
        if self.p is not None:
            out["p"] = self.p
        if self.value is not None:
            out["value"] = str(self.value)
        return out


def _two_agreeing(attempt, seed, tag: str, record: list | None = None) -> int:
    """Run seeded attempts until two certified values agree exactly.

    Semicontinuity means a non-generic draw can only distort the value, so
    the harness never averages: it demands bitwise agreement and fails
    loudly after the retry budget.
    """
    values = []
    failures = []
    for k in range(ATTEMPTS):
        try:
            value, sample = attempt(rng_for(seed, f"{tag}:{k}"), k)
        except GenericityError as exc:
            failures.append(str(exc))
            continue
        sample.value = value
        if record is not None:
            record.append(sample)
        values.append(value)
        if values.count(value) >= 2:
            return value
    raise GenericityError(
        f"{tag}: no two of {ATTEMPTS} samples agreed (values {values}; failures {failures})"
    )


# ---------------------------------------------------------------------------
# the localized smoothing count


def _deformed_gens(P: DeterminantalPresentation, A0, ring_s: Ring, sname: str):
    """Generators of I_s(psi + s*A0) inside the parameter ring."""
    if P.trivial:
        return []
    svar = ring_s.var(sname)
    m, n = P.psi.shape
    entries = [
        [P.psi.entries[i][j].map_ring(ring_s) + svar.scale(A0[i][j]) for j in range(n)]
        for i in range(m)
    ]
    return list(minors_ideal(PolyMatrix(entries), P.s).gens)


def _localized_count(K: Ideal, sname: str, base: Ring, budgets: Budgets) -> int:
    """Colength at the origin of (K : s^inf)|_{s=0}; the number of critical
    points of the perturbed system converging to 0, with multiplicity."""
    sat = saturate_by_poly(K, K.ring.var(sname), budgets)
    K0 = substitute_ideal(sat, {sname: base.zero()}, base)
    info = colength(K0, LOCAL, budgets)
    if not info.finite:
        raise GenericityError("localized critical scheme is not zero-dimensional")
    return info.colength


def _certify_deformation(eqns_at_1, g_at_1, dim_v: int, wrt, base: Ring, budgets: Budgets) -> dict:
    """Certificates at parameter value 1: smooth deformation, Morse function,
    zero-dimensional critical scheme."""
    cert = {}
    if eqns_at_1:
        sing = ideal_sum(
            Ideal(base, eqns_at_1),
            rank_condition_ideal(eqns_at_1, [], len(wrt) - dim_v - 1, wrt, base),
        )
        cert["smooth_deformation"] = is_unit_ideal(sing, GLOBAL, budgets)
    else:
        cert["smooth_deformation"] = True
    if dim_v >= 1 and g_at_1 is not None:
        jac_ext, _ = degenerate_critical_set_ideal(g_at_1, eqns_at_1, dim_v, wrt=wrt, budgets=budgets)
        cert["morse"] = is_unit_ideal(jac_ext, GLOBAL, budgets)
    else:
        cert["morse"] = True
    if g_at_1 is not None:
        K1 = critical_ideal_on_deformation(Ideal(base, eqns_at_1), g_at_1, dim_v, wrt=wrt)
        cert["critical_scheme_zero_dim"] = krull_dimension(K1, GLOBAL, budgets) <= 0
    return cert


def _smoothing_count(
    P: DeterminantalPresentation,
    g_base: Polynomial | None,
    *,
    with_b: bool,
    with_e: bool,
    linear_g: bool,
    fiber: bool,
    seed,
    tag: str,
    budgets: Budgets,
    samples: list | None = None,
) -> int:
    """Shared engine for mu(f), m_d(X) and m_{d-1}(Y) smoothing counts."""
    ring = P.ring
    N = P.N
    m, n = P.psi.shape

    def attempt(rng: random.Random, k: int):
        A0 = sample_matrix(rng, m, n) if not P.trivial else None
        b0 = sample_vector(rng, N) if with_b else None
        e0 = sample_rational(rng) if with_e else None
        sname = ring.fresh_name("s")
        ring_s = ring.extend([sname])
        svar = ring_s.var(sname)
        xvars = ring.vars
        eqns = _deformed_gens(P, A0, ring_s, sname)
        gs = g_base.map_ring(ring_s) if g_base is not None else ring_s.zero()
        if with_b:
            for v, c in zip(xvars, b0):
                gs = gs + svar * ring_s.var(v).scale(c)
        dim_v = P.d
        if fiber:
            fib = gs - svar.scale(e0) if with_e else gs
            eqns = eqns + [fib]
            dim_v = P.d - 1
            g = _linear_form_from(rng, ring_s, xvars)
        elif linear_g:
            g = _linear_form_from(rng, ring_s, xvars)
        else:
            g = gs
        sample = GenericitySample(
            tag=f"{tag}:{k}",
            b=b0,
            A=A0,
            e=e0,
            p=g.substitute({sname: ring.zero()}, ring).to_str() if (linear_g or fiber) else None,
        )
        at1 = {sname: ring.one()}
        eqns_1 = [p.substitute(at1, ring) for p in eqns]
        g_1 = g.substitute(at1, ring)
        cert = _certify_deformation(eqns_1, g_1, dim_v, xvars, ring, budgets)
        sample.certificate = cert
        if not all(cert.values()):
            raise GenericityError(f"{tag}: certificates failed {cert}")
        K = critical_ideal_on_deformation(Ideal(ring_s, eqns), g, dim_v, wrt=xvars)
        count = _localized_count(K, sname, ring, budgets)
        sample.certificate["localized_finite"] = True
        return count, sample

    return _two_agreeing(attempt, seed, tag, record=samples)


# ---------------------------------------------------------------------------
# public operations


def milnor_number(
    fg: FunctionGerm, seed, budgets: Budgets = DEFAULT_BUDGETS, samples: list | None = None
) -> int:
    """mu(f): Morse points of f + generic linear form on a generic smoothing,
    counted in a small ball around the origin."""
    fg.validate(budgets)
    return _smoothing_count(
        fg.host,
        fg.f,
        with_b=True,
        with_e=False,
        linear_g=False,
        fiber=False,
        seed=seed,
        tag="milnor",
        budgets=budgets,
        samples=samples,
    )


def top_polar_X(
    P: DeterminantalPresentation, seed, budgets: Budgets = DEFAULT_BUDGETS, samples: list | None = None
) -> int:
    """m_d(X): critical points of a generic linear form on the smoothing."""
    P.validate(budgets)
    value = _smoothing_count(
        P,
        None,
        with_b=False,
        with_e=False,
        linear_g=True,
        fiber=False,
        seed=seed,
        tag="top-polar-X",
        budgets=budgets,
        samples=samples,
    )
    if P.s == 1 and not P.trivial:
        check = gaffney_md_icis(list(P.ideal().gens), seed, budgets)
        if check != value:
            raise GenericityError(
                f"top polar multiplicity {value} disagrees with Gaffney colength {check}"
            )
    return value


def top_polar_fiber(
    fg: FunctionGerm, seed, budgets: Budgets = DEFAULT_BUDGETS, samples: list | None = None
) -> int:
    """m_{d-1}(Y): critical points of a generic linear form on the smoothed
    fiber Y_alpha = X_A cap f_b^{-1}(e).  For d = 1 the fiber is finite and
    the count degenerates to the number of its points."""
    fg.validate(budgets)
    if fg.host.d < 1:
        raise ValidationError("top polar multiplicity of the fiber needs d >= 1")
    return _smoothing_count(
        fg.host,
        fg.f,
        with_b=True,
        with_e=True,
        linear_g=False,
        fiber=True,
        seed=seed,
        tag="top-polar-fiber",
        budgets=budgets,
        samples=samples,
    )


def gaffney_md_icis(phi, seed, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Gaffney's m_d for an ICIS: the local colength of
    <phi> + I_{N-d+1}(J(phi, p)) for a generic linear p."""
    phi = list(phi)
    if not phi:
        return 0
    ring = phi[0].ring
    N = ring.nvars
    d = N - len(phi)
    if d < 0:
        raise ValidationError("more equations than variables")

    def attempt(rng: random.Random, k: int):
        p = _linear_form_from(rng, ring, ring.vars)
        ideal = ideal_sum(
            Ideal(ring, phi),
            rank_condition_ideal(phi, [p], N - d, ring.vars, ring),
        )
        info = colength(ideal, LOCAL, budgets)
        if not info.finite:
            raise GenericityError("Gaffney ideal is not zero-dimensional at the origin")
        return info.colength, GenericitySample(tag=f"gaffney:{k}", p=p.to_str())

    return _two_agreeing(attempt, seed, "gaffney")


def icis_milnor(phi, seed, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Milnor number of an ICIS V(phi) by the Le-Greuel colength chain.

    The tuple is first mixed by a random invertible matrix so that every
    truncated subtuple defines an ICIS; each chain step is one local
    colength, and consecutive steps share no smoothing data, which makes
    this an oracle independent of the critical-point pipeline.
    """
    phi = list(phi)
    if not phi:
        return 0
    ring = phi[0].ring
    k = len(phi)

    def attempt(rng: random.Random, idx: int):
        mix = [[sample_rational(rng) for _ in range(k)] for _ in range(k)]
        psi = []
        for row in mix:
            acc = ring.zero()
            for c, p in zip(row, phi):
                acc = acc + p.scale(c)
            psi.append(acc)
        mu_prev = 0
        for j in range(1, k + 1):
            head = psi[: j - 1]
            ideal = ideal_sum(
                Ideal(ring, head),
                rank_condition_ideal(head, [psi[j - 1]], j - 1, ring.vars, ring),
            )
            info = colength(ideal, LOCAL, budgets)
            if not info.finite:
                raise GenericityError("Le-Greuel chain step is not zero-dimensional")
            mu_prev = info.colength - mu_prev
        return mu_prev, GenericitySample(tag=f"icis-milnor:{idx}")

    return _two_agreeing(attempt, seed, "icis-milnor")


def polar_multiplicity_k(
    defining: Ideal,
    dim_v: int,
    k: int,
    seed,
    budgets: Budgets = DEFAULT_BUDGETS,
    samples: list | None = None,
) -> int:
    """m_k of a germ: multiplicity at 0 of the closure of the critical locus
    of a generic linear projection to C^{dim-k+1} on the smooth part.

    The naive rank-condition ideal is saturated by a generic linear form,
    which removes exactly the components supported at the origin (the
    singular locus of an isolated singularity); k = 0 is the multiplicity
    of the germ itself.
    """
    if k == 0:
        return multiplicity_m0(defining, f"{seed}|m0", budgets)
    if not (1 <= k <= dim_v - 1):
        raise ValidationError(f"polar index {k} out of range for dimension {dim_v}")
    ring = defining.ring
    N = ring.nvars

    def attempt(rng: random.Random, idx: int):
        rows = [_linear_form_from(rng, ring, ring.vars) for _ in range(dim_v - k + 1)]
        polar = ideal_sum(
            defining, rank_condition_ideal(defining.gens, rows, N - k, ring.vars, ring)
        )
        ell = _linear_form_from(rng, ring, ring.vars)
        cleaned = saturate_by_poly(polar, ell, budgets)
        info = colength(cleaned, LOCAL, budgets)
        sample = GenericitySample(
            tag=f"polar-{k}:{idx}", p=" | ".join(r.to_str() for r in rows)
        )
        if info.dimension == -1:
            sample.certificate["empty_polar"] = True
            return 0, sample
        if info.dimension != k:
            raise GenericityError(
                f"polar variety has dimension {info.dimension}, expected {k}"
            )
        sample.certificate["polar_dimension"] = True
        return multiplicity_m0(cleaned, f"{seed}|polar{k}:{idx}", budgets), sample

    return _two_agreeing(attempt, seed, f"polar-{k}", record=samples)


# ---------------------------------------------------------------------------
# alternating sums and profiles


def nu_from_polars(mlist) -> int:
    """Vanishing Euler characteristic from the full polar list m_0..m_e:
    nu = (-1)^e (sum_i (-1)^i m_i - 1)."""
    e = len(mlist) - 1
    alt = sum((-1) ** i * m for i, m in enumerate(mlist))
    return (-1) ** e * (alt - 1)


def eu_from_polars(mlist) -> int:
    """Euler obstruction as the Le-Teissier alternating sum of m_0..m_{e-1}."""
    return sum((-1) ** i * m for i, m in enumerate(mlist[:-1]))


def eu_from_relation(nu: int, m_top: int, dim: int) -> int:
    """Euler obstruction from Eu + (-1)^e m_e = 1 + (-1)^e nu."""
    sign = (-1) ** dim
    return 1 + sign * nu - sign * m_top


def x_polar_profile(
    P: DeterminantalPresentation, seed, budgets: Budgets = DEFAULT_BUDGETS, samples: list | None = None
):
    """The list m_0(X)..m_d(X)."""
    P.validate(budgets)
    if P.d == 0:
        info = colength(P.ideal(), LOCAL, budgets)
        if not info.finite:
            raise GenericityError("zero-dimensional germ with infinite colength")
        return [info.colength]
    mlist = [multiplicity_m0(P.ideal(), f"{seed}|mX0", budgets)]
    for k in range(1, P.d):
        mlist.append(
            polar_multiplicity_k(P.ideal(), P.d, k, f"{seed}|mX", budgets, samples=samples)
        )
    mlist.append(top_polar_X(P, f"{seed}|mXtop", budgets, samples=samples))
    return mlist


def y_polar_profile(
    fg: FunctionGerm, seed, budgets: Budgets = DEFAULT_BUDGETS, samples: list | None = None
):
    """The list m_0(Y)..m_{d-1}(Y) for the fiber Y = X cap f^{-1}(0)."""
    fg.validate(budgets)
    d = fg.host.d
    if d < 1:
        raise ValidationError("fiber profile needs d >= 1")
    fiber = fg.fiber_ideal()
    if d == 1:
        return [top_polar_fiber(fg, f"{seed}|mYtop", budgets, samples=samples)]
    mlist = [multiplicity_m0(fiber, f"{seed}|mY0", budgets)]
    for k in range(1, d - 1):
        mlist.append(
            polar_multiplicity_k(fiber, d - 1, k, f"{seed}|mY", budgets, samples=samples)
        )
    mlist.append(top_polar_fiber(fg, f"{seed}|mYtop", budgets, samples=samples))
    return mlist


def vanishing_euler_X(P: DeterminantalPresentation, seed, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """nu(X): alternating polar sum; for an ICIS it must equal the Milnor
    number of X (Jorge Perez-Saia), which is checked when s = 1."""
    mlist = x_polar_profile(P, seed, budgets)
    nu = nu_from_polars(mlist)
    if P.s == 1 and not P.trivial:
        mu_x = icis_milnor(list(P.ideal().gens), f"{seed}|icis", budgets)
        if mu_x != nu:
            raise GenericityError(
                f"polar alternating sum {nu} disagrees with ICIS Milnor number {mu_x}"
            )
    return nu


def vanishing_euler_fiber(fg: FunctionGerm, seed, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """nu(Y) from the fiber polar list; cross-checked against Le-Greuel."""
    mlist = y_polar_profile(fg, seed, budgets)
    nu_y = nu_from_polars(mlist)
    mu = milnor_number(fg, f"{seed}|mu", budgets)
    nu_x = vanishing_euler_X(fg.host, f"{seed}|nuX", budgets)
    if mu != nu_x + nu_y:
        raise GenericityError(
            f"Le-Greuel cross-check failed: mu {mu} != nu(X) {nu_x} + nu(Y) {nu_y}"
        )
    return nu_y


def euler_obstruction_fiber(fg: FunctionGerm, seed, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Eu(Y) computed both from the polar sum and from the nu/m_top relation;
    the two must agree (and do, for generic samples)."""
    mlist = y_polar_profile(fg, seed, budgets)
    d = fg.host.d
    nu_y = nu_from_polars(mlist)
    by_sum = eu_from_polars(mlist)
    by_rel = eu_from_relation(nu_y, mlist[-1], d - 1)
    if by_sum != by_rel:
        raise GenericityError(
            f"Euler obstruction mismatch for the fiber: {by_sum} vs {by_rel}"
        )
    return by_sum


def slice_presentation(
    P: DeterminantalPresentation, rng: random.Random, budgets: Budgets = DEFAULT_BUDGETS
) -> DeterminantalPresentation:
    """Cut by a generic hyperplane through 0, re-validating the slice."""
    ring = P.ring
    last = ring.vars[-1]
    small = ring.drop([last])
    combo = small.zero()
    for v in small.vars:
        combo = combo + small.var(v).scale(sample_rational(rng, 99))
    sliced = P.psi.substitute({last: combo}, small)
    out = DeterminantalPresentation(sliced, P.s)
    out.validate(budgets)
    return out


def nu_star_sequence(
    P: DeterminantalPresentation, seed, budgets: Budgets = DEFAULT_BUDGETS, nu_top: int | None = None
) -> list:
    """nu*(X) = (nu_0, ..., nu_d): nu of X sliced by d-j generic hyperplanes.

    nu_0 is multiplicity minus one; the Teissier bookkeeping
    m_i = nu_i + nu_{i-1} is verified by the caller against the directly
    computed polar multiplicities.  nu_top short-circuits the top entry
    when nu(X) itself is already known.
    """
    P.validate(budgets)
    d = P.d
    nus = [0] * (d + 1)
    current = P
    for j in range(d, -1, -1):
        if j == d and nu_top is not None:
            nus[d] = nu_top
            continue
        if j < d:
            last_exc = None
            for attempt in range(ATTEMPTS):
                rng = rng_for(seed, f"nu-star:{j}:{attempt}")
                try:
                    current = slice_presentation(current, rng, budgets)
                    break
                except (ValidationError, GenericityError) as exc:
                    last_exc = exc
            else:
                raise GenericityError(f"hyperplane slice failed repeatedly: {last_exc}")
        if j == 0:
            info = colength(current.ideal(), LOCAL, budgets)
            if not info.finite:
                raise GenericityError("point slice has infinite colength")
            nus[0] = info.colength - 1
        else:
            nus[j] = nu_from_polars(x_polar_profile(current, f"{seed}|slice{j}", budgets))
    return nus


# ---------------------------------------------------------------------------
# the assembled report


@dataclass
class InvariantReport:
    """All invariants of one (X, f) pair with their consistency checks."""

    mu_f: int | None
    nu_X: int
    nu_Y: int | None
    m_X: list
    m_Y: list | None
    eu_X: int
    eu_Y: int | None
    nu_star_X: list
    le_greuel_ok: bool | None
    checks: dict
    samples: list

    def to_json(self) -> dict:
        out = {
            "nu_X": str(self.nu_X),
            "m_X": [str(v) for v in self.m_X],
            "eu_X": str(self.eu_X),
            "nu_star_X": [str(v) for v in self.nu_star_X],
            "checks": dict(self.checks),
            "samples": [s.to_json() for s in self.samples],
        }
        if self.mu_f is not None:
            out["mu_f"] = str(self.mu_f)
            out["nu_Y"] = str(self.nu_Y)
            out["m_Y"] = [str(v) for v in self.m_Y]
            out["eu_Y"] = str(self.eu_Y)
            out["le_greuel_ok"] = self.le_greuel_ok
        return out


_REPORT_MEMO: dict = {}


def clear_report_cache():
    _REPORT_MEMO.clear()


def _presentation_key(P: DeterminantalPresentation):
    return (tuple(tuple(row) for row in P.psi.entries), P.s)


def germ_report(
    P: DeterminantalPresentation, seed, budgets: Budgets = DEFAULT_BUDGETS
) -> InvariantReport:
    """Invariants of the bare germ X (no function)."""
    P.validate(budgets)
    key = ("germ", _presentation_key(P), str(seed), budgets)
    if key in _REPORT_MEMO:
        return _REPORT_MEMO[key]
    samples: list = []
    m_X = x_polar_profile(P, f"{seed}|X", budgets, samples=samples)
    nu_X = nu_from_polars(m_X)
    checks = {}
    if P.s == 1 and not P.trivial:
        mu_x = icis_milnor(list(P.ideal().gens), f"{seed}|icis", budgets)
        checks["jorge_perez_saia_ok"] = mu_x == nu_X
        if mu_x != nu_X:
            raise GenericityError(
                f"polar alternating sum {nu_X} disagrees with ICIS Milnor number {mu_x}"
            )
    nu_star = (
        nu_star_sequence(P, f"{seed}|nu-star", budgets, nu_top=nu_X)
        if P.d >= 1
        else [m_X[0] - 1]
    )
    bookkeeping = nu_star[0] == m_X[0] - 1 and all(
        m_X[i] == nu_star[i] + nu_star[i - 1] for i in range(1, P.d + 1)
    )
    checks["nu_star_bookkeeping_ok"] = bookkeeping
    if not bookkeeping:
        raise GenericityError(
            f"nu* bookkeeping failed: m_X {m_X} vs nu* {nu_star}"
        )
    eu_X = eu_from_polars(m_X) if P.d >= 1 else 0
    report = InvariantReport(
        mu_f=None,
        nu_X=nu_X,
        nu_Y=None,
        m_X=m_X,
        m_Y=None,
        eu_X=eu_X,
        eu_Y=None,
        nu_star_X=nu_star,
        le_greuel_ok=None,
        checks=checks,
        samples=samples,
    )
    _REPORT_MEMO[key] = report
    return report


def invariant_report(fg: FunctionGerm, seed, budgets: Budgets = DEFAULT_BUDGETS) -> InvariantReport:
    """Full invariant report of a pair (X, f), with every cross-identity
    computed from independently sampled pipelines and asserted."""
    fg.validate(budgets)
    key = ("pair", _presentation_key(fg.host), fg.f, str(seed), budgets)
    if key in _REPORT_MEMO:
        return _REPORT_MEMO[key]
    base = germ_report(fg.host, seed, budgets)
    samples = list(base.samples)
    d = fg.host.d
    mu = milnor_number(fg, f"{seed}|mu", budgets, samples=samples)
    m_Y = y_polar_profile(fg, f"{seed}|Y", budgets, samples=samples)
    nu_Y = nu_from_polars(m_Y)
    checks = dict(base.checks)
    checks["le_greuel_ok"] = mu == base.nu_X + nu_Y
    if not checks["le_greuel_ok"]:
        raise GenericityError(
            f"Le-Greuel identity failed: mu {mu} != nu(X) {base.nu_X} + nu(Y) {nu_Y}"
        )
    eu_Y = eu_from_polars(m_Y) if d >= 2 else 0
    eu_Y_rel = eu_from_relation(mu - base.nu_X, m_Y[-1], d - 1)
    checks["eu_fiber_consistent"] = eu_Y == eu_Y_rel
    if eu_Y != eu_Y_rel:
        raise GenericityError(f"Eu(Y) routes disagree: {eu_Y} vs {eu_Y_rel}")
    eu_X_rel = eu_from_relation(mu - nu_Y, base.m_X[-1], d)
    checks["eu_X_consistent"] = base.eu_X == eu_X_rel
    if base.eu_X != eu_X_rel:
        raise GenericityError(f"Eu(X) routes disagree: {base.eu_X} vs {eu_X_rel}")
    report = InvariantReport(
        mu_f=mu,
        nu_X=base.nu_X,
        nu_Y=nu_Y,
        m_X=base.m_X,
        m_Y=m_Y,
        eu_X=base.eu_X,
        eu_Y=eu_Y,
        nu_star_X=base.nu_star_X,
        le_greuel_ok=checks["le_greuel_ok"],
        checks=checks,
        samples=samples,
    )
    _REPORT_MEMO[key] = report
    return report
