"""Ideal arithmetic in Z[L]: prime factorization, residue systems, indexes.

The ring is norm-Euclidean, hence a principal ideal domain, so ideals are
represented throughout by canonical generators (``ring.canonical_associate``).
Rational primes behave in one of three ways: 5 ramifies as the square of
``2*L-1``, primes congruent to +-1 mod 5 split into two conjugate primes of
norm p, and primes congruent to +-2 mod 5 stay inert with norm p**2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (
    FactorCapError,
    IntegrityError,
    NotADivisorError,
    ZeroInputError,
)
from .ring import (
    ONE,
    ROOT5,
    RingElt,
    UnitRep,
    canonical_associate,
    exact_divide,
    format_element,
    gcd,
    unit_decompose,
)

#: Largest trial divisor attempted when factoring norms over Z.
TRIAL_DIVISION_CAP = 10**6


def _factor_int(n: int) -> dict[int, int]:
    """Factor ``n >= 1`` by trial division with a 6k+-1 wheel.

    Raises FactorCapError when the remaining cofactor is composite but has no
    prime divisor below TRIAL_DIVISION_CAP.
    """
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d, step = 7, 4
    while d * d <= n:
        if d > TRIAL_DIVISION_CAP:
            raise FactorCapError(
                f"no prime divisor of {n} below {TRIAL_DIVISION_CAP}"
            )
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _sqrt_mod_prime(a: int, p: int) -> int:
    """Square root of a quadratic residue ``a`` modulo an odd prime ``p``."""
    a %= p
    if a == 0 or p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square modulo {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks.
    q, s = p - 1, 0
    while q % 2 == 0:
        q, s = q // 2, s + 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2, i = t2 * t2 % p, i + 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def primes_above(p: int) -> tuple[RingElt, ...]:
    """Canonical ring primes dividing the rational prime ``p``."""
    if p == 5:
        return (ROOT5,)
    if p % 5 in (1, 4):
        s = _sqrt_mod_prime(5, p)
        r = (1 + s) * pow(2, -1, p) % p  # root of x**2 - x - 1 mod p
        first = gcd(RingElt(p, 0), RingElt(-r, 1))
        second = gcd(RingElt(p, 0), RingElt(r - 1, 1))  # the other root is 1 - r
        pair = sorted({first, second}, key=lambda e: e.coeffs)
        if len(pair) != 2 or any(e.abs_norm() != p for e in pair):
            raise IntegrityError(f"splitting of {p} produced bad primes")
        return tuple(pair)
    return (RingElt(p, 0),)


@dataclass(frozen=True)
class Factorization:
    """Unit times a sorted product of canonical prime powers."""

    unit: UnitRep
    factors: tuple[tuple[RingElt, int], ...]

    def value(self) -> RingElt:
        acc = self.unit.value()
        for prime, exp in self.factors:
            acc = acc * prime**exp
        return acc

    def distinct_primes(self) -> tuple[RingElt, ...]:
        return tuple(prime for prime, _ in self.factors)

    def exponent_of(self, prime: RingElt) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def __str__(self) -> str:
        parts = []
        if self.unit.value() != ONE:
            parts.append(format_element(self.unit.value()))
        for prime, exp in self.factors:
            text = f"({format_element(prime)})"
            parts.append(text if exp == 1 else f"{text}**{exp}")
        return " * ".join(parts) if parts else "1"


def factor(x: RingElt) -> Factorization:
    """Factor a nonzero element into canonical primes and a unit."""
    if not x:
        raise ZeroInputError("cannot factor zero")
    rest = x
    found: list[tuple[RingElt, int]] = []
    for p in sorted(_factor_int(x.abs_norm())):
        for prime in primes_above(p):
            e = 0
            while (q := exact_divide(rest, prime)) is not None:
                rest, e = q, e + 1
            if e:
                found.append((prime, e))
    found.sort(key=lambda t: (t[0].abs_norm(), t[0].coeffs))
    return Factorization(unit=unit_decompose(rest), factors=tuple(found))


def half_power_part(x: RingElt) -> RingElt:
    """Canonical product of primes of ``x`` raised to ceil(multiplicity / 2)."""
    acc = ONE
    for prime, exp in factor(x).factors:
        acc = acc * prime ** ((exp + 1) // 2)
    return canonical_associate(acc)


def h_of(x: RingElt) -> int:
    """Size parameter of the normalizer quotient: depends on the 2-part.

    Returns 4 when 16 divides x, 2 when 4 divides x, and 1 otherwise.
    """
    a = factor(x).exponent_of(RingElt(2, 0))
    return min(2 ** (a // 2), 4)


def index_in_g5(x: RingElt) -> int:
    """Index of the congruence subgroup of level ``x`` in the full group.

    Multiplicative formula: |norm(x)| times the product of 1 + 1/|norm(P)|
    over the distinct primes P dividing x.
    """
    num, den = x.abs_norm(), 1
    for prime in factor(x).distinct_primes():
        np = prime.abs_norm()
        num, den = num * (np + 1), den * np
    if num % den:
        raise IntegrityError("index formula did not produce an integer")
    return num // den


def relative_index(x: RingElt, divisor: RingElt) -> int:
    """Index of the level-``x`` subgroup inside the level-``divisor`` one."""
    if exact_divide(x, divisor) is None:
        raise NotADivisorError(
            f"{format_element(divisor)} does not divide {format_element(x)}"
        )
    big, small = index_in_g5(x), index_in_g5(divisor)
    if big % small:
        raise IntegrityError("relative index did not produce an integer")
    return big // small


def _ext_gcd(u: int, v: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*u + t*v == g == gcd(u, v) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while v:
        q = u // v
        u, v = v, u - q * v
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if u < 0:
        u, s0, t0 = -u, -s0, -t0
    return u, s0, t0


class ResidueCtx:
    """Canonical representatives modulo a nonzero element.

    The coefficient lattice of the ideal (modulus) is spanned by the columns
    (a, b) and (b, a+b); its column Hermite normal form is [[n, m], [0, g]],
    so every residue has a unique representative in the box [0, n) x [0, g)
    and n is the smallest positive rational integer in the ideal.
    """

    __slots__ = ("modulus", "n", "g", "m")

    def __init__(self, modulus: RingElt) -> None:
        if not modulus:
            raise ZeroInputError("modulus must be nonzero")
        a, b = modulus.coeffs
        g, s, t = _ext_gcd(b, a + b)
        n = modulus.abs_norm() // g
        self.modulus = modulus
        self.n = n
        self.g = g
        self.m = (s * a + t * b) % n

    @property
    def size(self) -> int:
        """Number of residue classes, which equals |norm(modulus)|."""
        return self.n * self.g

    def reduce(self, x: RingElt) -> RingElt:
        """The unique representative of ``x`` in the HNF box."""
        a, b = x.coeffs
        k = b // self.g
        a -= k * self.m
        b -= k * self.g
        return RingElt(a % self.n, b)

    def congruent(self, x: RingElt, y: RingElt) -> bool:
        return not self.reduce(x - y)

    def divides(self, x: RingElt) -> bool:
        return not self.reduce(x)

    def residues(self) -> Iterator[RingElt]:
        """All canonical representatives, row-major over the box."""
        for i in range(self.n):
            for j in range(self.g):
                yield RingElt(i, j)

    def __repr__(self) -> str:
        return f"ResidueCtx({format_element(self.modulus)!r})"


def smallest_rational_integer(x: RingElt) -> int:
    """Smallest positive rational integer divisible by ``x``."""
    return ResidueCtx(x).n


def _rational_primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [p for p in range(2, bound + 1) if sieve[p]]


def ideals_up_to_norm(bound: int) -> list[RingElt]:
    """Canonical generators of all proper ideals with norm at most ``bound``.

    Sorted by (norm, coefficients); the unit ideal is excluded.
    """
    primes = [
        (prime, prime.abs_norm())
        for p in _rational_primes_up_to(bound)
        for prime in primes_above(p)
        if prime.abs_norm() <= bound
    ]
    out: list[RingElt] = []

    def walk(i: int, val: RingElt, nrm: int) -> None:
        if i == len(primes):
            if nrm > 1:
                out.append(canonical_associate(val))
            return
        prime, np = primes[i]
        while nrm <= bound:
            walk(i + 1, val, nrm)
            val, nrm = val * prime, nrm * np

    walk(0, ONE, 1)
    out.sort(key=lambda e: (e.abs_norm(), e.coeffs))
    return out
