"""Exact rational arithmetic over Q and its places.

Rationals are ``fractions.Fraction`` values, which are canonical by
construction: lowest terms, positive denominator.  A place of Q is the
real place or a finite prime p.  The workhorse predicate is membership
in the group of local n-th powers, decided exactly:

* real place, n = 2: the positive numbers;
* finite p with p not dividing n: valuation divisible by n and the
  residue of the unit part an n-th power in the residue field, tested
  by raising to the power (p-1)/n mod p;
* p = 2, n = 2: even valuation and odd part congruent to 1 mod 8.

Wild cases (p dividing n, n > 2) are rejected rather than approximated.
Floating point is never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction


def is_prime(m: int) -> bool:
    """Deterministic primality by trial division (arguments here are small)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Place:
    """A place of Q: the real place (p is None) or a finite prime p."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"not a prime: {self.p}")

    @classmethod
    def real(cls) -> "Place":
        return cls(None)

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "oo" if self.p is None else str(self.p)


@dataclass(frozen=True)
class PowerClassParams:
    """Parameters for an n-th power-class test at one place."""

    n: int
    place: Place

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"modulus must be at least 2, got {self.n}")


def valuation(x: Rat | int, p: int) -> int:
    """p-adic valuation of a nonzero rational: x = p^v * u with u a p-unit."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    v = 0
    num = abs(x.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def unit_part(x: Rat | int, p: int) -> Rat:
    """The p-unit u with x = p^valuation(x, p) * u."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("unit part of zero is undefined")
    return x / Fraction(p) ** valuation(x, p)


def _unit_residue(u: Rat, p: int) -> int:
    """Residue mod p of a p-unit rational (denominator inverted mod p)."""
    num = u.numerator % p
    den = u.denominator % p
    return (num * pow(den, -1, p)) % p


def is_nth_power(x: Rat | int, params: PowerClassParams) -> bool:
    """Whether x lies in the n-th powers of the completion at the given place."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero is not a unit; power-class test undefined")
    n = params.n
    place = params.place
    if place.is_real:
        if n != 2:
            raise ValueError("the real place only supports n = 2")
        return x > 0
    p = place.p
    assert p is not None
    if p == 2:
        if n != 2:
            raise ValueError("wild case p | n with n > 2 is unsupported at p = 2")
        if valuation(x, 2) % 2 != 0:
            return False
        odd = unit_part(x, 2)
        return (odd.numerator * pow(odd.denominator, -1, 8)) % 8 == 1
    if n > 2 and (p - 1) % n != 0:
        raise ValueError(f"tame test needs n | p - 1, got n = {n}, p = {p}")
    if p % 2 == 1 and n % p == 0 and n > 2:
        raise ValueError(f"wild case p | n with n > 2 is unsupported, p = {p}")
    if valuation(x, p) % n != 0:
        return False
    r = _unit_residue(unit_part(x, p), p)
    e = (p - 1) // n if n <= p - 1 and (p - 1) % n == 0 else (p - 1) // 2
    return pow(r, e, p) == 1


def parse_rat(s: str) -> Rat:
    """Parse "a/b" or "a" into a Fraction."""
    return Fraction(s.strip())


def format_rat(x: Rat) -> str:
    """Serialize a Fraction as "a/b", or "a" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
