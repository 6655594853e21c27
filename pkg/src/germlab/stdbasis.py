"""Standard and Groebner basis engine.

Buchberger's algorithm with Gebauer-Moeller pair pruning, using ordinary
long division for global orders and Mora's ecart-driven weak normal form
for local orders.  On top of the basis computation sit the operations all
invariants reduce to: colength of a quotient (dimension count of standard
monomials), Krull dimension from the leading ideal, elimination,
saturation, and Hilbert-Samuel multiplicity by generic slicing.

Engine polynomials are lists of (key, monomial, coefficient) triples
sorted descending; order keys are additive, so term products update keys
without recomputation.  The product criterion is only applied for global
orders; the chain criterion (via Gebauer-Moeller) is applied everywhere.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BudgetExceededError, GenericityError
from .fields import RationalField
from .orders import GLOBAL, LOCAL, BlockElimination, MonomialOrder
from .poly import Polynomial, Ring


@dataclass(frozen=True)
class Budgets:
    """Hard resource limits; hitting one raises, never silently truncates."""

    max_spairs: int = 200_000
    max_degree: int = 120
    max_reductions: int = 10_000_000


DEFAULT_BUDGETS = Budgets()


class _Counter:
    __slots__ = ("budgets", "spairs", "reductions")

    def __init__(self, budgets: Budgets):
        self.budgets = budgets
        self.spairs = 0
        self.reductions = 0

    def spair(self):
        self.spairs += 1
        if self.spairs > self.budgets.max_spairs:
            raise BudgetExceededError("s-pairs", self.budgets.max_spairs)

    def reduction(self, degree: int):
        self.reductions += 1
        if self.reductions > self.budgets.max_reductions:
            raise BudgetExceededError("reduction steps", self.budgets.max_reductions)
        if degree > self.budgets.max_degree:
            raise BudgetExceededError("total degree", self.budgets.max_degree)


# ---------------------------------------------------------------------------
# engine polynomial representation


def _ordered(poly: Polynomial, order: MonomialOrder):
    key = order.key
    return sorted(((key(m), m, c) for m, c in poly.terms.items()), reverse=True)


def _to_poly(ep, ring: Ring) -> Polynomial:
    return Polynomial(ring, {m: c for _, m, c in ep})


def _maxdeg(ep) -> int:
    return max(sum(m) for _, m, _ in ep)


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mon_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _mul_term(ep, tkey, tmon, coeff, field):
    out = []
    for k, m, c in ep:
        out.append(
            (
                tuple(a + b for a, b in zip(k, tkey)),
                tuple(a + b for a, b in zip(m, tmon)),
                field.mul(c, coeff),
            )
        )
    return out


def _sub(a, b, field):
    """a - b for descending term lists."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ka = a[i][0]
        kb = b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif kb > ka:
            kb_, mb, cb = b[j]
            out.append((kb_, mb, field.neg(cb)))
            j += 1
        else:
            c = field.sub(a[i][2], b[j][2])
            if not field.is_zero(c):
                out.append((a[i][0], a[i][1], c))
            i += 1
            j += 1
    out.extend(a[i:])
    for k in range(j, nb):
        kb_, mb, cb = b[k]
        out.append((kb_, mb, field.neg(cb)))
    return out


def _reduce_by(h, g, field):
    """One reduction step: h - (lc h / lc g) * x^(lm h - lm g) * g.

    Assumes lm(g) divides lm(h); the leading terms cancel by construction.
    """
    kh, mh, ch = h[0]
    kg, mg, cg = g[0]
    coeff = field.div(ch, cg)
    fkey = tuple(a - b for a, b in zip(kh, kg))
    fmon = tuple(a - b for a, b in zip(mh, mg))
    out = []
    i, j = 1, 1
    nh, ng = len(h), len(g)
    while i < nh and j < ng:
        kj = tuple(a + b for a, b in zip(g[j][0], fkey))
        ki = h[i][0]
        if ki > kj:
            out.append(h[i])
            i += 1
        elif kj > ki:
            mj = tuple(a + b for a, b in zip(g[j][1], fmon))
            out.append((kj, mj, field.neg(field.mul(coeff, g[j][2]))))
            j += 1
        else:
            c = field.sub(h[i][2], field.mul(coeff, g[j][2]))
            if not field.is_zero(c):
                out.append((ki, h[i][1], c))
            i += 1
            j += 1
    out.extend(h[i:])
    while j < ng:
        kj = tuple(a + b for a, b in zip(g[j][0], fkey))
        mj = tuple(a + b for a, b in zip(g[j][1], fmon))
        out.append((kj, mj, field.neg(field.mul(coeff, g[j][2]))))
        j += 1
    return out


def _content_factor(ep, field):
    """Factor that clears denominators and integer content over Q (or 1)."""
    if not ep or not isinstance(field, RationalField):
        return None
    num_gcd = 0
    den_lcm = 1
    for _, _, c in ep:
        num_gcd = gcd(num_gcd, abs(int(c.numerator)))
        d = int(c.denominator)
        den_lcm = den_lcm * d // gcd(den_lcm, d)
    if num_gcd in (0, den_lcm):
        return None
    return field.coerce(Fraction(den_lcm, num_gcd))


def _scaled(ep, factor, field):
    return [(k, m, field.mul(c, factor)) for k, m, c in ep]


def _primitive_ep(ep, field):
    """Content-normalize over Q to keep coefficient sizes in check.

    Only safe where a constant multiple is acceptable (generators, weak
    normal forms); exact-coset reductions must undo the factor instead.
    """
    factor = _content_factor(ep, field)
    return ep if factor is None else _scaled(ep, factor, field)


def _spoly_keys(f, g, order, field):
    """S-polynomial with key bookkeeping through the order's key function."""
    mf, cf = f[0][1], f[0][2]
    mg, cg = g[0][1], g[0][2]
    lcm = _mon_lcm(mf, mg)
    key_lcm = order.key(lcm)
    tf_mon = tuple(a - b for a, b in zip(lcm, mf))
    tg_mon = tuple(a - b for a, b in zip(lcm, mg))
    tf_key = tuple(a - b for a, b in zip(key_lcm, f[0][0]))
    tg_key = tuple(a - b for a, b in zip(key_lcm, g[0][0]))
    a = _mul_term(f, tf_key, tf_mon, field.inv(cf), field)
    b = _mul_term(g, tg_key, tg_mon, field.inv(cg), field)
    return _sub(a, b, field)


def _nf_global(f, G, field, counter, tail=True):
    """Full normal form for a global order: every term gets reduced.

    Intermediate content normalization must rescale the emitted terms and
    the remainder together, and the accumulated factor is divided out at
    the end so the result stays in the coset of f.
    """
    result = []
    h = f
    scale = field.one
    while h:
        mh = h[0][1]
        reducer = None
        for g in G:
            if _divides(g[0][1], mh):
                reducer = g
                break
        if reducer is None:
            if not tail:
                break
            result.append(h[0])
            h = h[1:]
            continue
        counter.reduction(sum(mh))
        h = _reduce_by(h, reducer, field)
        if counter.reductions % 16 == 0:
            factor = _content_factor(result + h if result else h, field)
            if factor is not None:
                h = _scaled(h, factor, field)
                if result:
                    result = _scaled(result, factor, field)
                scale = field.mul(scale, factor)
    out = result + h if h else result
    if scale != field.one:
        out = _scaled(out, field.inv(scale), field)
    return out


def _nf_mora(f, G, field, counter):
    """Mora's weak normal form for local orders.

    Reduces the lead with the divisor of minimal ecart; when every divisor
    has larger ecart than the current remainder, the remainder itself joins
    the reducer set.  Returns u*f - sum a_i g_i for some unit u, which is
    zero iff f lies in the ideal localized at the order.
    """
    T = list(G)
    ecarts = [_maxdeg(g) - sum(g[0][1]) for g in T]
    h = f
    while h:
        mh = h[0][1]
        best = -1
        best_ecart = None
        for i, g in enumerate(T):
            if _divides(g[0][1], mh):
                e = ecarts[i]
                if best_ecart is None or e < best_ecart:
                    best, best_ecart = i, e
        if best < 0:
            return h
        eh = _maxdeg(h) - sum(mh)
        if best_ecart > eh:
            T.append(h)
            ecarts.append(eh)
        counter.reduction(sum(mh))
        h = _reduce_by(h, T[best], field)
        if counter.reductions % 16 == 0:
            h = _primitive_ep(h, field)
    return h


def _normal_form(f, G, order, field, counter, tail=True):
    if order.is_global:
        return _nf_global(f, G, field, counter, tail=tail)
    return _nf_mora(f, G, field, counter)


def _gm_update(G, lmG, pairs, f, order, use_product):
    """Gebauer-Moeller pair update when f joins the basis."""
    lmf = f[0][1]
    m = len(G)
    kept = set()
    for i, j in pairs:
        lcm_ij = _mon_lcm(lmG[i], lmG[j])
        if (
            not _divides(lmf, lcm_ij)
            or lcm_ij == _mon_lcm(lmG[i], lmf)
            or lcm_ij == _mon_lcm(lmG[j], lmf)
        ):
            kept.add((i, j))
    groups: dict = {}
    for i in range(m):
        groups.setdefault(_mon_lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for L in sorted(groups, key=lambda mon: (sum(mon), order.key(mon))):
        if all(not _divides(L0, L) for L0 in minimal):
            minimal.append(L)
    for L in minimal:
        if use_product and any(
            _mon_lcm(lmG[i], lmf) == tuple(a + b for a, b in zip(lmG[i], lmf))
            for i in groups[L]
        ):
            continue
        kept.add((min(groups[L]), m))
    G.append(f)
    lmG.append(lmf)
    return kept


def _std_engine(polys, order, field, budgets):
    counter = _Counter(budgets)
    inputs = []
    for p in polys:
        if p.is_zero():
            continue
        inputs.append(_primitive_ep(_ordered(p, order), field))
    inputs.sort(key=lambda ep: ep[0][0])
    G: list = []
    lmG: list = []
    pairs: set = set()
    use_product = order.is_global
    for ep in inputs:
        red = _normal_form(ep, G, order, field, counter, tail=False) if G else ep
        if red:
            pairs = _gm_update(G, lmG, pairs, _primitive_ep(red, field), order, use_product)
    while pairs:
        counter.spair()
        pick = min(
            pairs,
            key=lambda p: (
                sum(_mon_lcm(lmG[p[0]], lmG[p[1]])),
                order.key(_mon_lcm(lmG[p[0]], lmG[p[1]])),
                p,
            ),
        )
        pairs.discard(pick)
        i, j = pick
        s = _spoly_keys(G[i], G[j], order, field)
        if not s:
            continue
        h = _normal_form(s, G, order, field, counter, tail=False)
        if h:
            pairs = _gm_update(G, lmG, pairs, _primitive_ep(h, field), order, use_product)
    return _canonicalize(G, order, field, counter)


def _canonicalize(G, order, field, counter):
    """Minimalize, optionally tail-reduce (global), sort, and make monic."""
    minimal = []
    for ep in sorted(G, key=lambda ep: (sum(ep[0][1]), order.key(ep[0][1]))):
        if all(not _divides(other[0][1], ep[0][1]) for other in minimal):
            minimal.append(ep)
    if order.is_global:
        reduced = []
        for i, ep in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1 :]
            reduced.append(_nf_global(ep, others, field, counter, tail=True) if others else ep)
        minimal = reduced
    out = []
    for ep in minimal:
        lc = ep[0][2]
        if lc != field.one:
            inv = field.inv(lc)
            ep = [(k, m, field.mul(c, inv)) for k, m, c in ep]
        out.append(ep)
    out.sort(key=lambda ep: ep[0][0])
    return out


# ---------------------------------------------------------------------------
# public surface


class Ideal:
    """An ideal given by generators, with per-order cached standard bases."""

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator in wrong ring")
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._cache: dict = {}

    def std(self, order: MonomialOrder, budgets: Budgets = DEFAULT_BUDGETS):
        """Reduced standard basis (tails fully reduced only for global orders)."""
        sig = order
        if sig not in self._cache:
            eps = _std_engine(list(self.gens), order, self.ring.field, budgets)
            self._cache[sig] = tuple(_to_poly(ep, self.ring) for ep in eps)
        return list(self._cache[sig])

    def leading_exponents(self, order: MonomialOrder, budgets: Budgets = DEFAULT_BUDGETS):
        basis = self.std(order, budgets)
        key = order.key
        return [max(g.terms, key=key) for g in basis]

    def is_zero(self) -> bool:
        return not self.gens

    def __repr__(self):
        gens = ", ".join(g.to_str() for g in self.gens[:4])
        more = ", ..." if len(self.gens) > 4 else ""
        return f"Ideal({gens}{more})"


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise ValueError("ideal sum across different rings")
    return Ideal(a.ring, list(a.gens) + list(b.gens))


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder, budgets: Budgets = DEFAULT_BUDGETS) -> Polynomial:
    """(Weak, for local orders) normal form of f against the standard basis of I."""
    basis = I.std(order, budgets)
    if f.is_zero() or not basis:
        return f
    counter = _Counter(budgets)
    eps = [_ordered(g, order) for g in basis]
    res = _normal_form(_ordered(f, order), eps, order, I.ring.field, counter, tail=True)
    return _to_poly(res, I.ring)


def contains(I: Ideal, f: Polynomial, order: MonomialOrder = GLOBAL, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Membership in I (or its localization, for a local order)."""
    return normal_form(f, I, order, budgets).is_zero()


def is_unit_ideal(I: Ideal, order: MonomialOrder = GLOBAL, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    basis = I.std(order, budgets)
    return any(sum(max(g.terms, key=order.key)) == 0 for g in basis)


@dataclass(frozen=True)
class QuotientInfo:
    """Colength data of a quotient ring under one monomial order.

    colength is None when the quotient is not zero-dimensional; staircase
    lists the standard monomials when finite.
    """

    colength: int | None
    staircase: tuple
    dimension: int

    @property
    def finite(self) -> bool:
        return self.colength is not None


def _monomial_dimension(leading: list, nvars: int) -> int:
    """Krull dimension of k[x]/L for a monomial ideal L (unit ideal -> -1)."""
    if any(sum(e) == 0 for e in leading):
        return -1
    if not leading:
        return nvars
    supports = [frozenset(i for i, e in enumerate(mon) if e > 0) for mon in leading]
    best = 0
    for size in range(nvars, 0, -1):
        for subset in itertools.combinations(range(nvars), size):
            sset = set(subset)
            if all(not sup <= sset for sup in supports):
                return size
        if best:  # pragma: no cover - defensive
            break
    return 0


def _staircase(leading: list, nvars: int):
    """Monomials outside the staircase of a zero-dimensional monomial ideal."""
    bounds = []
    for i in range(nvars):
        pure = [mon[i] for mon in leading if all(e == 0 for j, e in enumerate(mon) if j != i)]
        bounds.append(min(pure))
    out = []
    for mon in itertools.product(*(range(b) for b in bounds)):
        if all(not _divides(lead, mon) for lead in leading):
            out.append(mon)
    return out


def colength(I: Ideal, order: MonomialOrder, budgets: Budgets = DEFAULT_BUDGETS) -> QuotientInfo:
    """Vector-space dimension of the quotient by I under the given order.

    For a local order this is the colength in the local ring at the origin:
    components of V(I) away from 0 do not contribute.
    """
    nvars = I.ring.nvars
    if I.is_zero():
        return QuotientInfo(None if nvars else 1, (), nvars)
    leading = I.leading_exponents(order, budgets)
    dim = _monomial_dimension(leading, nvars)
    if dim == -1:
        return QuotientInfo(0, (), -1)
    if dim > 0:
        return QuotientInfo(None, (), dim)
    stairs = _staircase(leading, nvars)
    stairs.sort(key=lambda m: (sum(m), order.key(m)))
    return QuotientInfo(len(stairs), tuple(stairs), 0)


def krull_dimension(I: Ideal, order: MonomialOrder, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Dimension of V(I): at the origin for local orders, affine for global."""
    if I.is_zero():
        return I.ring.nvars
    return _monomial_dimension(I.leading_exponents(order, budgets), I.ring.nvars)


def eliminate(I: Ideal, varnames, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """I intersected with the subring omitting varnames (global orders only)."""
    ring = I.ring
    indices = tuple(ring.var_index(v) for v in varnames)
    order = BlockElimination(indices, ring.nvars)
    basis = I.std(order, budgets)
    kill = set(indices)
    kept = [g for g in basis if all(all(m[i] == 0 for i in kill) for m in g.terms)]
    return Ideal(ring, kept)


def restrict(I: Ideal, varnames) -> Ideal:
    """Move an ideal whose generators avoid varnames into the smaller ring."""
    small = I.ring.drop(varnames)
    gens = []
    keep_idx = [I.ring.var_index(v) for v in small.vars]
    for g in I.gens:
        terms = {}
        for m, c in g.terms.items():
            for v in varnames:
                if m[I.ring.var_index(v)] != 0:
                    raise ValueError(f"generator involves dropped variable {v}")
            terms[tuple(m[i] for i in keep_idx)] = c
        gens.append(Polynomial(small, terms))
    return Ideal(small, gens)


def substitute_ideal(I: Ideal, assignment: dict, target: Ring) -> Ideal:
    return Ideal(target, [g.substitute(assignment, target) for g in I.gens])


def saturate_by_poly(I: Ideal, g: Polynomial, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """I : g^infinity via the extra-variable (Rabinowitsch) trick."""
    if g.is_zero():
        raise ValueError("cannot saturate by zero")
    ring = I.ring
    wname = ring.fresh_name("w")
    big = ring.extend([wname])
    gens = [p.map_ring(big) for p in I.gens]
    gens.append(big.one() - big.var(wname) * g.map_ring(big))
    elim = eliminate(Ideal(big, gens), [wname], budgets)
    return restrict(elim, [wname])


def intersect(a: Ideal, b: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Ideal intersection via the t-trick: eliminate t from t*a + (1-t)*b."""
    if a.ring != b.ring:
        raise ValueError("intersection across different rings")
    ring = a.ring
    tname = ring.fresh_name("w")
    big = ring.extend([tname])
    t = big.var(tname)
    gens = [t * p.map_ring(big) for p in a.gens]
    one_minus_t = big.one() - t
    gens.extend(one_minus_t * p.map_ring(big) for p in b.gens)
    elim = eliminate(Ideal(big, gens), [tname], budgets)
    return restrict(elim, [tname])


def saturate(I: Ideal, J: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """I : J^infinity, as the intersection of the single-generator saturations."""
    if I.ring != J.ring:
        raise ValueError("saturation across different rings")
    if J.is_zero():
        raise ValueError("cannot saturate by the zero ideal")
    result = None
    for g in J.gens:
        part = saturate_by_poly(I, g, budgets)
        result = part if result is None else intersect(result, part, budgets)
    return result


# ---------------------------------------------------------------------------
# Hilbert-Samuel multiplicity by generic slicing


def _random_nonzero_int(rng: random.Random, height: int) -> int:
    v = rng.randint(1, height)
    return v if rng.random() < 0.5 else -v


def slice_with_hyperplane(I: Ideal, rng: random.Random, height: int = 100) -> Ideal:
    """Cut by a generic hyperplane through 0, eliminating the last variable.

    The hyperplane is {x_last = sum c_i x_i}; substitution realizes the
    quotient ring of the slice directly in one fewer variable.
    """
    ring = I.ring
    if ring.nvars < 1:
        raise ValueError("no variable left to slice")
    last = ring.vars[-1]
    small = ring.drop([last])
    combo = small.zero()
    for v in small.vars:
        combo = combo + small.var(v).scale(_random_nonzero_int(rng, height))
    assignment = {last: combo}
    return Ideal(small, [g.substitute(assignment, small) for g in I.gens])


def multiplicity_m0(
    I: Ideal,
    seed,
    budgets: Budgets = DEFAULT_BUDGETS,
    attempts: int = 5,
) -> int:
    """Hilbert-Samuel multiplicity of the germ of V(I) at the origin.

    Slices with k generic hyperplanes (k = local dimension) and takes the
    local colength.  Samples are drawn until two agree; the smallest value
    seen at least twice wins, since non-generic slices only overestimate.
    """
    info = colength(I, LOCAL, budgets)
    if info.dimension == -1:
        return 0
    if info.dimension == 0:
        return info.colength
    k = info.dimension
    values = []
    for attempt in range(attempts):
        rng = random.Random(f"{seed}:m0:{attempt}")
        J = I
        for _ in range(k):
            J = slice_with_hyperplane(J, rng)
        q = colength(J, LOCAL, budgets)
        if not q.finite:
            continue
        values.append(q.colength)
        agreeing = [v for v in values if values.count(v) >= 2]
        if agreeing:
            return min(agreeing)
    raise GenericityError(
        f"multiplicity sampling did not stabilize after {attempts} attempts (saw {values})"
    )
