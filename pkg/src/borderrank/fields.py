"""Exact scalar arithmetic backends.

Two interchangeable backends: arbitrary-precision rationals (the audit
path) and a large prime field (the fast path). Matrix and tensor code
asks the field object for its arithmetic, so the same elimination
routines run over either backend. There is no floating point anywhere:
division by zero raises, and a zero result means an exact zero.
"""

from __future__ import annotations

from fractions import Fraction

#: Default prime modulus for the fast path (the Mersenne prime 2^61 - 1).
DEFAULT_PRIME = (1 << 61) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """Arbitrary-precision rational arithmetic, characteristic 0."""

    tag = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, value) -> Fraction:
        if isinstance(value, float):
            raise TypeError("refusing inexact float input; pass int, str or Fraction")
        return Fraction(value)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero in the rational field")
        return Fraction(1) / x

    def div(self, x, y):
        return x * self.inv(y)

    def is_zero(self, x) -> bool:
        return x == 0

    def random(self, rng):
        # Range width exceeds 2^31 distinct values.
        return Fraction(rng.randrange(-(1 << 30), (1 << 30) + 1))

    def to_str(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """Integers modulo a fixed prime. Elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"modulus {p!r} is not a prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    @property
    def tag(self) -> str:
        return f"prime:{self.p}"

    def convert(self, value) -> int:
        p = self.p
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            return value.numerator % p * pow(value.denominator % p, -1, p) % p
        if isinstance(value, str):
            return self.convert(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into GF({p})")

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return x * y % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(x, -1, self.p)

    def div(self, x, y):
        return x * self.inv(y) % self.p

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def random(self, rng):
        return rng.randrange(self.p)

    def to_str(self, x) -> str:
        return str(x % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


#: Shared rational field instance.
QQ = RationalField()

#: Shared default prime field instance.
GF_DEFAULT = PrimeField(DEFAULT_PRIME)


def field_from_tag(tag: str):
    """Parse a field tag: "rational" or "prime:<p>" (or bare "prime")."""
    if tag == "rational":
        return QQ
    if tag == "prime":
        return GF_DEFAULT
    if tag.startswith("prime:"):
        try:
            p = int(tag.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad prime field tag {tag!r}") from None
        return GF_DEFAULT if p == DEFAULT_PRIME else PrimeField(p)
    raise ValueError(f"unknown field tag {tag!r}")
