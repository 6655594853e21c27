"""Monomial orders: global degrevlex, local negdegrevlex, block elimination.

Every order is realized through a key function mapping an exponent tuple to
a flat tuple of ints such that

  * larger key (lexicographically)  <=>  larger monomial, and
  * key(m1 * m2) = key(m1) + key(m2) componentwise.

Additivity lets the reduction engine update keys of term products without
recomputing them.  Local orders satisfy 1 > x_i for every variable, which
is what makes standard bases compute in the local ring at the origin.
"""

from __future__ import annotations


class MonomialOrder:
    """Base class; concrete orders provide key(), is_global and a name."""

    is_global: bool
    name: str

    def key(self, mon: tuple) -> tuple:
        raise NotImplementedError

    def cmp_key(self):
        return self.key

    def __eq__(self, other):
        return type(self) is type(other) and self.signature() == other.signature()

    def __hash__(self):
        return hash((type(self).__name__,) + self.signature())

    def signature(self) -> tuple:
        return ()

    def __repr__(self):
        return self.name


class DegRevLex(MonomialOrder):
    """Global degree-reverse-lexicographic order."""

    is_global = True
    name = "degrevlex"

    def key(self, mon):
        key = [sum(mon)]
        key.extend(-e for e in reversed(mon))
        return tuple(key)


class NegDegRevLex(MonomialOrder):
    """Local order: lower total degree wins, revlex tie-break (1 > x_i)."""

    is_global = False
    name = "negdegrevlex"

    def key(self, mon):
        key = [-sum(mon)]
        key.extend(-e for e in reversed(mon))
        return tuple(key)


class BlockElimination(MonomialOrder):
    """Eliminate a designated variable block: block degrevlex, then degrevlex.

    Any monomial involving a block variable is larger than any monomial
    without, so a basis under this order intersected with the subring
    gives the elimination ideal.
    """

    is_global = True

    def __init__(self, block_indices: tuple, nvars: int):
        self.block = tuple(sorted(block_indices))
        self.rest = tuple(i for i in range(nvars) if i not in set(self.block))
        self.nvars = nvars
        self.name = f"elim{self.block}"

    def key(self, mon):
        key = [sum(mon[i] for i in self.block)]
        key.extend(-mon[i] for i in reversed(self.block))
        key.append(sum(mon[i] for i in self.rest))
        key.extend(-mon[i] for i in reversed(self.rest))
        return tuple(key)

    def signature(self) -> tuple:
        return (self.block, self.nvars)


GLOBAL = DegRevLex()
LOCAL = NegDegRevLex()
