"""Sparse exact multivariate polynomials.

A polynomial is a map from exponent tuples to nonzero field elements,
together with its ring (ordered variable names + coefficient field).
Values are immutable after construction; all operations return fresh
objects, so sharing across threads or caches is safe.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, RationalField


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class Ring:
    """A polynomial ring: ordered variable names over a coefficient field."""

    __slots__ = ("vars", "field", "_index")

    def __init__(self, variables, field=QQ):
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.field = field
        self._index = {v: i for i, v in enumerate(self.vars)}

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in ring {self.vars}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, value) -> "Polynomial":
        c = self.field.coerce(value)
        if self.field.is_zero(c):
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Polynomial":
        exp = [0] * self.nvars
        exp[self.var_index(name)] = 1
        return Polynomial(self, {tuple(exp): self.field.one})

    def monomial(self, exponents, coeff=1) -> "Polynomial":
        exponents = tuple(exponents)
        if len(exponents) != self.nvars:
            raise ValueError("exponent tuple length does not match ring")
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {exponents: c})

    def extend(self, names) -> "Ring":
        """New ring with extra variables appended after the current ones."""
        return Ring(self.vars + tuple(names), self.field)

    def drop(self, names) -> "Ring":
        gone = set(names)
        return Ring(tuple(v for v in self.vars if v not in gone), self.field)

    def with_field(self, field) -> "Ring":
        return Ring(self.vars, field)

    def fresh_name(self, base: str) -> str:
        """A variable name not already used in this ring."""
        if base not in self._index:
            return base
        i = 0
        while f"{base}{i}" in self._index:
            i += 1
        return f"{base}{i}"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.vars == other.vars and self.field == other.field

    def __hash__(self):
        return hash((self.vars, self.field))

    def __repr__(self):
        return f"Ring({','.join(self.vars)}; {self.field!r})"


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def total_degree(self) -> int:
        """Max total degree of a monomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = self.ring.const(other)
        self._check(other)
        field = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            acc = field.add(res.get(m, field.zero), c)
            if field.is_zero(acc):
                res.pop(m, None)
            else:
                res[m] = acc
        return Polynomial(self.ring, res)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = self.ring.const(other)
        return self + (-other)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc = field.add(res.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(acc):
                    res.pop(m, None)
                else:
                    res[m] = acc
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def scale(self, value) -> "Polynomial":
        field = self.ring.field
        c0 = field.coerce(value)
        if field.is_zero(c0):
            return self.ring.zero()
        return Polynomial(self.ring, {m: field.mul(c, c0) for m, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            items = tuple(sorted(self.terms.items()))
            self._hash = hash((self.ring, items))
        return self._hash

    # -- calculus and substitution ------------------------------------------

    def diff(self, varname: str) -> "Polynomial":
        """Formal partial derivative."""
        i = self.ring.var_index(varname)
        field = self.ring.field
        res = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1 :]
            acc = field.add(res.get(dm, field.zero), field.mul(c, field.coerce(e)))
            if field.is_zero(acc):
                res.pop(dm, None)
            else:
                res[dm] = acc
        return Polynomial(self.ring, res)

    def substitute(self, assignment: dict, target: Ring | None = None) -> "Polynomial":
        """Simultaneous substitution of polynomials for variables.

        Unassigned variables must exist (by name) in the target ring.
        """
        if target is None:
            for val in assignment.values():
                if isinstance(val, Polynomial):
                    target = val.ring
                    break
            else:
                target = self.ring
        field = target.field
        images: list[Polynomial] = []
        for v in self.ring.vars:
            if v in assignment:
                val = assignment[v]
                if not isinstance(val, Polynomial):
                    val = target.const(val)
                elif val.ring != target:
                    raise RingMismatchError("assigned polynomial lives in a different ring")
                images.append(val)
            else:
                images.append(target.var(v))
        powers: list[dict] = [dict() for _ in images]
        result = target.zero()
        for m, c in sorted(self.terms.items()):
            term = target.const(self.ring.field.to_str(c) if field != self.ring.field else c)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                cache = powers[i]
                if e not in cache:
                    cache[e] = images[i] ** e
                term = term * cache[e]
            result = result + term
        return result

    def map_ring(self, target: Ring) -> "Polynomial":
        """Reinterpret in a ring with a superset of the variables (same field or coercible)."""
        pos = [target.var_index(v) for v in self.ring.vars]
        field = target.field
        res = {}
        for m, c in self.terms.items():
            exp = [0] * target.nvars
            for i, e in enumerate(m):
                exp[pos[i]] = e
            cc = c if field == self.ring.field else field.coerce(self.ring.field.to_str(c))
            if not field.is_zero(cc):
                res[tuple(exp)] = cc
        return Polynomial(target, res)

    def evaluate(self, point: dict):
        """Evaluate at a point given as {var: field value}; returns a field element."""
        field = self.ring.field
        vals = [field.coerce(point.get(v, 0)) for v in self.ring.vars]
        total = field.zero
        for m, c in sorted(self.terms.items()):
            acc = c
            for i, e in enumerate(m):
                for _ in range(e):
                    acc = field.mul(acc, vals[i])
            total = field.add(total, acc)
        return total

    # -- normalization -----------------------------------------------------

    def primitive(self) -> "Polynomial":
        """Over Q: clear denominators and divide by integer content.

        The sign is fixed so the degrevlex-leading coefficient is positive.
        Over a prime field this returns self unchanged.
        """
        if not isinstance(self.ring.field, RationalField) or not self.terms:
            return self
        from math import gcd

        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, abs(int(c.numerator)))
            d = int(c.denominator)
            den_lcm = den_lcm * d // gcd(den_lcm, d)
        factor = Fraction(den_lcm, num_gcd)
        lead = max(self.terms, key=lambda m: (sum(m), tuple(-e for e in reversed(m))))
        if self.terms[lead] < 0:
            factor = -factor
        return self.scale(factor)

    # -- printing ------------------------------------------------------------

    def sorted_terms(self, order=None):
        if order is None:
            keyf = lambda m: (sum(m), tuple(-e for e in reversed(m)))
        else:
            keyf = order.key
        return sorted(self.terms.items(), key=lambda it: keyf(it[0]), reverse=True)

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        field = self.ring.field
        chunks = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.ring.vars, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            cs = field.to_str(c)
            negative = cs.startswith("-")
            if negative:
                cs = cs[1:]
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            else:
                body = "*".join([cs] + factors)
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<{self.to_str()}>"
