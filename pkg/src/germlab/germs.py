"""Geometric objects as ideals: determinantal presentations, minors,
Jacobians, singular loci, critical loci on explicit deformations, and
iterated Jacobian extensions indexed by Boardman symbols.

Conventions.  A presentation whose matrix is identically zero presents the
full ambient space C^N (the "trivial presentation"); it has d = N and an
empty generator set, and every construction degenerates gracefully on it.
Minor ideals of out-of-range size follow the internal convention
I_0 = (1) and I_r = (0) for r exceeding the matrix size, which is what
makes the rank-condition formulas uniform across dimensions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ValidationError
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
)


class PolyMatrix:
    """An m x n matrix of polynomials in one ring, kept with m <= n."""

    __slots__ = ("entries", "ring", "transposed")

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        ring = rows[0][0].ring
        for r in rows:
            for p in r:
                if p.ring != ring:
                    raise ValueError("matrix entries live in different rings")
        self.transposed = len(rows) > len(rows[0])
        if self.transposed:
            rows = [list(col) for col in zip(*rows)]
        self.entries = rows
        self.ring = ring

    @property
    def shape(self):
        return (len(self.entries), len(self.entries[0]))

    def map_ring(self, target: Ring) -> "PolyMatrix":
        return PolyMatrix([[p.map_ring(target) for p in row] for row in self.entries])

    def substitute(self, assignment, target: Ring) -> "PolyMatrix":
        return PolyMatrix(
            [[p.substitute(assignment, target) for p in row] for row in self.entries]
        )

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __repr__(self):
        m, n = self.shape
        return f"PolyMatrix({m}x{n})"


def _minor(entries, rows, cols, memo, ring):
    if not rows:
        return ring.one()
    key = (rows, cols)
    got = memo.get(key)
    if got is not None:
        return got
    i = rows[0]
    rest = rows[1:]
    acc = ring.zero()
    for pos, j in enumerate(cols):
        entry = entries[i][j]
        if entry.is_zero():
            continue
        sub = _minor(entries, rest, cols[:pos] + cols[pos + 1 :], memo, ring)
        if sub.is_zero():
            continue
        term = entry * sub
        acc = acc - term if pos % 2 else acc + term
    memo[key] = acc
    return acc


def minors_ideal(M: PolyMatrix, r: int, strict: bool = True) -> Ideal:
    """Ideal of all r x r minors, expanded by Laplace with memoized subminors."""
    m, n = M.shape
    if strict and not (1 <= r <= m):
        raise ValidationError(f"minor size {r} out of range for {m}x{n} matrix")
    if r <= 0:
        return Ideal(M.ring, [M.ring.one()])
    if r > m:
        return Ideal(M.ring, [])
    memo: dict = {}
    gens = []
    for rows in itertools.combinations(range(m), r):
        for cols in itertools.combinations(range(n), r):
            g = _minor(M.entries, rows, cols, memo, M.ring)
            if not g.is_zero():
                gens.append(g)
    return Ideal(M.ring, gens)


def jacobian(polys, varnames, ring: Ring | None = None) -> PolyMatrix:
    """Jacobian matrix: rows indexed by the polynomials, columns by varnames."""
    polys = list(polys)
    if ring is None:
        ring = polys[0].ring
    rows = [[p.diff(v) for v in varnames] for p in polys]
    return PolyMatrix(rows)


def rank_condition_ideal(eqn_gens, extra_rows, max_rank: int, wrt, ring: Ring) -> Ideal:
    """Minors forcing rank(J(eqns, extra)) <= max_rank, derivatives along wrt."""
    rows = list(eqn_gens) + list(extra_rows)
    if not rows:
        return Ideal(ring, [])
    J = jacobian(rows, wrt, ring)
    return minors_ideal(J, max_rank + 1, strict=False)


@dataclass
class DeterminantalPresentation:
    """X = psi^{-1}(M^s_{m,n}) of expected dimension d = N - (m-s+1)(n-s+1).

    A zero matrix presents X = C^N with d = N.  Validation checks the
    expected codimension at the origin and, for an IDS, that the singular
    locus germ is at most the origin.
    """

    psi: PolyMatrix
    s: int
    checks: dict = field(default_factory=dict)

    def __post_init__(self):
        self.ring = self.psi.ring
        m, n = self.psi.shape
        self.trivial = self.psi.is_zero()
        if self.trivial:
            self.codim = 0
        else:
            if not (1 <= self.s <= m):
                raise ValidationError(f"s={self.s} out of range for {m}x{n} matrix")
            self.codim = (m - self.s + 1) * (n - self.s + 1)
        self.N = self.ring.nvars
        self.d = self.N - self.codim
        self._ideal = None

    def ideal(self) -> Ideal:
        if self._ideal is None:
            if self.trivial:
                self._ideal = Ideal(self.ring, [])
            else:
                self._ideal = minors_ideal(self.psi, self.s)
        return self._ideal

    def validate(self, budgets: Budgets = DEFAULT_BUDGETS) -> dict:
        if self.checks:
            return self.checks
        checks = {}
        if self.d < 0:
            raise ValidationError(f"expected dimension {self.d} is negative")
        checks["expected_dimension"] = self.d
        if self.trivial:
            checks["codimension_ok"] = True
            checks["ids_condition"] = True
            checks["isolated_singularity"] = True
            self.checks = checks
            return checks
        dim = krull_dimension(self.ideal(), LOCAL, budgets)
        checks["codimension_ok"] = dim == self.d
        if not checks["codimension_ok"]:
            raise ValidationError(
                f"presentation fails expected codimension: dim {dim} != {self.d}"
            )
        m, n = self.psi.shape
        ids_cond = self.s == 1 or self.N < (m - self.s + 2) * (n - self.s + 2)
        checks["ids_condition"] = ids_cond
        if not ids_cond:
            raise ValidationError(
                "not an IDS: s > 1 and N >= (m-s+2)(n-s+2), deeper rank strata meet the germ"
            )
        sing = singular_locus_ideal(self)
        sdim = colength(sing, LOCAL, budgets).dimension
        checks["isolated_singularity"] = sdim <= 0
        if sdim > 0:
            raise ValidationError(f"singular locus has positive dimension {sdim} at 0")
        self.checks = checks
        return checks


def singular_locus_ideal(P: DeterminantalPresentation) -> Ideal:
    """Jacobian-criterion locus: I + I_c(J(gens)) with c the codimension."""
    if P.trivial:
        return Ideal(P.ring, [P.ring.one()])
    I = P.ideal()
    cond = rank_condition_ideal(I.gens, [], P.codim - 1, P.ring.vars, P.ring)
    return ideal_sum(I, cond)


def deformed_ideal(P: DeterminantalPresentation, A) -> Ideal:
    """I_s(psi + A) for a constant matrix A, as a global (affine) ideal."""
    if P.trivial:
        return Ideal(P.ring, [])
    m, n = P.psi.shape
    entries = [
        [P.psi.entries[i][j] + P.ring.const(A[i][j]) for j in range(n)] for i in range(m)
    ]
    return minors_ideal(PolyMatrix(entries), P.s)


def critical_ideal_on_deformation(
    eqns: Ideal, g: Polynomial, dim_v: int, wrt=None
) -> Ideal:
    """Locus where dg depends on the normal space of V(eqns), dim_v = dim V.

    Rank of J(eqns) is c = #wrt - dim_v on the smooth locus, so criticality
    of g is rank(J(eqns, g)) <= c, i.e. the vanishing of all (c+1)-minors.
    """
    ring = eqns.ring
    wrt = tuple(wrt) if wrt is not None else ring.vars
    c = len(wrt) - dim_v
    cond = rank_condition_ideal(eqns.gens, [g], c, wrt, ring)
    return ideal_sum(eqns, cond)


def delta_jacobian_extension(
    h, W: Ideal, m: int, wrt=None, regenerate: bool = True, budgets: Budgets = DEFAULT_BUDGETS
) -> Ideal:
    """Jacobian extension of rank m: W + I_m(J(h_1..h_p, g_1..g_r)).

    The generators g_i of W are regenerated from its reduced global basis
    first, so the result is a deterministic function of the ideal (the
    extension itself does not depend on the choice of generators).
    """
    h = list(h)
    ring = W.ring if not h else h[0].ring
    wrt = tuple(wrt) if wrt is not None else ring.vars
    gens_w = list(W.std(GLOBAL, budgets)) if (regenerate and W.gens) else list(W.gens)
    rows = h + gens_w
    if not (1 <= m <= min(len(rows), len(wrt))):
        raise ValidationError(
            f"Jacobian extension rank {m} out of range for {len(rows)} rows over {len(wrt)} variables"
        )
    J = jacobian(rows, wrt, ring)
    return ideal_sum(W, minors_ideal(J, m, strict=False))


def iterated_jacobian_extension(
    h, W: Ideal, boardman, wrt=None, budgets: Budgets = DEFAULT_BUDGETS
) -> Ideal:
    """J_{i_1,...,i_k}(h, W): left-to-right iteration of Delta_{N-i+1}.

    The symbol must be weakly decreasing with entries in [0, N].  An entry
    i = 0 asks for minors larger than the matrix; those contribute nothing
    and the step is a no-op.
    """
    h = list(h)
    ring = W.ring if not h else h[0].ring
    wrt = tuple(wrt) if wrt is not None else ring.vars
    N = len(wrt)
    symbol = list(boardman)
    if not symbol:
        raise ValidationError("empty Boardman symbol")
    if any(not isinstance(i, int) or i < 0 or i > N for i in symbol):
        raise ValidationError(f"Boardman symbol entries must lie in [0, {N}]")
    if any(a < b for a, b in zip(symbol, symbol[1:])):
        raise ValidationError("Boardman symbol must be weakly decreasing")
    current = W
    for i in symbol:
        m = N - i + 1
        gens_w = list(current.std(GLOBAL, budgets)) if current.gens else []
        rows = h + gens_w
        if m > min(len(rows), N):
            continue
        J = jacobian(rows, wrt, ring) if rows else None
        ext = minors_ideal(J, m, strict=False) if J is not None else Ideal(ring, [])
        current = ideal_sum(current, ext)
    return current


def degenerate_critical_set_ideal(
    g: Polynomial, phi, d: int, wrt=None, budgets: Budgets = DEFAULT_BUDGETS
):
    """Ideals cutting out the degenerate set of g on Y = V(phi), dim Y = d.

    Returns (J_{d,1}(g, <phi>), singular-locus ideal of Y); the union of
    their zero sets is the set of points that are singular on Y or
    degenerate critical points of g.  A Morse function on a smooth Y is
    certified by the first ideal being the unit ideal.
    """
    phi = list(phi)
    ring = g.ring
    wrt = tuple(wrt) if wrt is not None else ring.vars
    W = Ideal(ring, phi)
    jac_ext = iterated_jacobian_extension([g], W, [d, 1], wrt=wrt, budgets=budgets)
    if phi:
        sing = ideal_sum(W, rank_condition_ideal(phi, [], len(wrt) - d - 1, wrt, ring))
    else:
        sing = Ideal(ring, [ring.one()])
    return jac_ext, sing


@dataclass
class FunctionGerm:
    """A function with isolated singularity on the germ of its host IDS."""

    f: Polynomial
    host: DeterminantalPresentation
    checks: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.f.ring != self.host.ring:
            raise ValidationError("function lives in a different ring than the presentation")

    def critical_ideal(self) -> Ideal:
        """I_X + rank-condition minors of J(gens, f); contains Sing(X)."""
        return critical_ideal_on_deformation(self.host.ideal(), self.f, self.host.d)

    def fiber_ideal(self) -> Ideal:
        return ideal_sum(self.host.ideal(), Ideal(self.host.ring, [self.f]))

    def validate(self, budgets: Budgets = DEFAULT_BUDGETS) -> dict:
        if self.checks:
            return self.checks
        checks = dict(self.host.validate(budgets))
        origin = {v: 0 for v in self.f.ring.vars}
        vanishes = self.f.ring.field.is_zero(self.f.evaluate(origin))
        checks["function_vanishes_at_origin"] = vanishes
        if not vanishes:
            raise ValidationError("f(0) != 0")
        cdim = colength(self.critical_ideal(), LOCAL, budgets).dimension
        checks["isolated_critical_point"] = cdim <= 0
        if cdim > 0:
            raise ValidationError(
                f"critical locus of f on X has dimension {cdim} at the origin"
            )
        self.checks = checks
        return checks


def zero_set_confined_to_origin(I: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Whether V(I) is empty or exactly {0} as an affine set.

    True iff the affine quotient is finite with every point concentrated
    at the origin, detected by global colength == local colength.
    """
    if is_unit_ideal(I, GLOBAL, budgets):
        return True
    ginfo = colength(I, GLOBAL, budgets)
    if not ginfo.finite:
        return False
    linfo = colength(I, LOCAL, budgets)
    return linfo.finite and linfo.colength == ginfo.colength
