"""Exact field scalars: ℚ (arbitrary precision rationals) and prime fields F_p.

Scalars are plain objects supporting +, -, *, /, ==, bool (bool(x) is False
iff x == 0).  Rationals are gmpy2.mpq when available, fractions.Fraction
otherwise; F_p elements are tiny wrapper objects around residues.  All
arithmetic is exact and equality is decidable, which turns every identity in
this package into a yes/no check with no tolerances.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover
    from fractions import Fraction as _RAT


class FieldError(ValueError):
    pass


class FpElem:
    """Residue mod p.  Only combines with elements of the same field."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return FpElem(self.v + other.v, self.p)

    def __sub__(self, other):
        return FpElem(self.v - other.v, self.p)

    def __mul__(self, other):
        return FpElem(self.v * other.v, self.p)

    def __neg__(self):
        return FpElem(-self.v, self.p)

    def __truediv__(self, other):
        if other.v % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElem(self.v * pow(other.v, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, FpElem) and self.p == other.p and self.v == other.v

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "FpElem(%d, p=%d)" % (self.v, self.p)


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of the two concrete fields."""

    kind = None  # "Q" | "Fp"
    char = None

    def spec(self):
        raise NotImplementedError

    def from_int(self, k):
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def fmt(self, x):
        raise NotImplementedError

    def ratio(self, num, den):
        return self.from_int(num) / self.from_int(den)

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())

    def __repr__(self):
        return "Field(%s)" % self.spec()


class Rationals(Field):
    kind = "Q"
    char = 0

    def __init__(self):
        self.zero = _RAT(0)
        self.one = _RAT(1)

    def spec(self):
        return "Q"

    def from_int(self, k):
        return _RAT(k)

    def parse(self, s):
        return _RAT(str(s))

    def fmt(self, x):
        return str(x)


class PrimeField(Field):
    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.kind = "Fp"
        self.p = p
        self.char = p
        self.zero = FpElem(0, p)
        self.one = FpElem(1, p)

    def spec(self):
        return "Fp:%d" % self.p

    def from_int(self, k):
        return FpElem(k, self.p)

    def parse(self, s):
        s = str(s)
        if "/" in s:
            num, den = s.split("/")
            return self.from_int(int(num)) / self.from_int(int(den))
        return self.from_int(int(s))

    def fmt(self, x):
        return str(x.v)


QQ = Rationals()


def field_from_spec(spec):
    """Parse "Q" or "Fp:<p>" into a Field."""
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        return PrimeField(int(spec[3:]))
    raise FieldError("unknown field spec %r" % (spec,))
