"""Coefficient fields: exact rationals and large prime fields.

Everything downstream computes over an exact field.  The default is Q,
backed by ``gmpy2.mpq`` when available (``fractions.Fraction`` otherwise).
A prime field GF(p) with p around 2**31 is offered as a faster drop-in;
integer invariants computed there are only trusted after they agree with
a run over Q or over a second random prime, since finitely many bad
primes can distort a standard basis.
"""

from __future__ import annotations

import random
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    _mpq = Fraction
    _HAVE_GMPY2 = False


class BadPrimeError(ArithmeticError):
    """A denominator of an input rational vanished modulo the chosen prime."""


def _parse_rational(text: str):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


class RationalField:
    """The field Q with exact arithmetic."""

    name = "q"
    characteristic = 0

    def __init__(self):
        self.zero = _mpq(0)
        self.one = _mpq(1)

    def coerce(self, value):
        if isinstance(value, str):
            value = _parse_rational(value)
        if isinstance(value, Fraction):
            return _mpq(value.numerator, value.denominator)
        if isinstance(value, int):
            return _mpq(value)
        return _mpq(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def to_fraction(self, a) -> Fraction:
        return Fraction(a.numerator, a.denominator)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("germlab.QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for an odd prime p, elements stored as ints in [0, p)."""

    characteristic = None  # set per instance

    def __init__(self, p: int):
        if p < 3:
            raise ValueError("prime must be at least 3")
        self.p = p
        self.characteristic = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1

    def coerce(self, value):
        if isinstance(value, str):
            value = _parse_rational(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise BadPrimeError(f"denominator {value.denominator} vanishes mod {self.p}")
            return (value.numerator % self.p) * pow(den, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        num, den = value.numerator, value.denominator
        if den % self.p == 0:
            raise BadPrimeError(f"denominator {den} vanishes mod {self.p}")
        return (num % self.p) * pow(den % self.p, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("germlab.GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random, bits: int = 31) -> int:
    """Deterministically draw a prime with the given bit size from rng."""
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if _is_probable_prime(candidate):
            return candidate


def field_from_spec(spec: str, seed: int = 0):
    """Build a field from a CLI/problem-file tag: 'q', 'fp', or 'fp:PRIME'."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rational", "rationals"):
        return QQ
    if spec == "fp":
        return PrimeField(random_prime(random.Random(f"{seed}:prime")))
    if spec.startswith("fp:"):
        p = int(spec[3:])
        if not _is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        return PrimeField(p)
    raise ValueError(f"unknown field spec {spec!r} (expected 'q', 'fp' or 'fp:PRIME')")
