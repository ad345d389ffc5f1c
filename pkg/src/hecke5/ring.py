"""Exact arithmetic in Z[L], where L = (1 + sqrt(5))/2 satisfies L**2 = L + 1.

Elements are written a + b*L with arbitrary-precision integer coefficients.
The ring is the full ring of integers of Q(sqrt(5)): its units are +-L**k,
its norm form is a**2 + a*b - b**2, and it is norm-Euclidean, so gcds exist.
All order comparisons against the real embedding are done with exact integer
predicates; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple, Optional

from .errors import BothZeroError, NotAUnitError, ParseError, ZeroInputError


class RingElt:
    """An element a + b*L of Z[L], immutable and hashable."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int, b: int = 0) -> None:
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError("coefficients must be int")
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RingElt is immutable")

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def coeffs(self) -> tuple[int, int]:
        return (self._a, self._b)

    @classmethod
    def from_int(cls, n: int) -> "RingElt":
        return cls(n, 0)

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._a == other and self._b == 0
        if isinstance(other, RingElt):
            return self._a == other._a and self._b == other._b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __neg__(self) -> "RingElt":
        return RingElt(-self._a, -self._b)

    def __add__(self, other: "RingElt | int") -> "RingElt":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RingElt(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: "RingElt | int") -> "RingElt":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RingElt(self._a - other._a, self._b - other._b)

    def __rsub__(self, other: "RingElt | int") -> "RingElt":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: "RingElt | int") -> "RingElt":
        if isinstance(other, int):
            return RingElt(self._a * other, self._b * other)
        if not isinstance(other, RingElt):
            return NotImplemented
        a1, b1 = self._a, self._b
        a2, b2 = other._a, other._b
        # (a1 + b1 L)(a2 + b2 L) with L**2 = L + 1
        return RingElt(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElt":
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = inverse_unit(self)
            k = -k
        result = ONE
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "RingElt":
        """Galois conjugate: L maps to 1 - L."""
        return RingElt(self._a + self._b, -self._b)

    def norm(self) -> int:
        """Field norm a**2 + a*b - b**2 (can be negative)."""
        return self._a * self._a + self._a * self._b - self._b * self._b

    def abs_norm(self) -> int:
        return abs(self.norm())

    def is_unit(self) -> bool:
        return self.abs_norm() == 1

    def __repr__(self) -> str:
        return f"RingElt({self._a}, {self._b})"

    def __str__(self) -> str:
        return format_element(self)


def _coerce(x: "RingElt | int") -> Optional[RingElt]:
    if isinstance(x, RingElt):
        return x
    if isinstance(x, int):
        return RingElt(x, 0)
    return None


ZERO = RingElt(0, 0)
ONE = RingElt(1, 0)
LAMBDA = RingElt(0, 1)
LAMBDA_INV = RingElt(-1, 1)
ROOT5 = RingElt(-1, 2)  # 2L - 1, with (2L - 1)**2 = 5


def _fib_pair(n: int) -> tuple[int, int]:
    """(F(n), F(n+1)) by fast doubling, n >= 0."""
    if n == 0:
        return (0, 1)
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return (d, c + d)
    return (c, d)


def lambda_pow(k: int) -> RingElt:
    """L**k for any integer k; L**k = F(k-1) + F(k) L."""
    if k >= 1:
        a, b = _fib_pair(k - 1)
        return RingElt(a, b)
    if k == 0:
        return ONE
    m = -k
    fm, fm1 = _fib_pair(m)
    f_neg_m = fm if m % 2 == 1 else -fm  # F(-m) = (-1)**(m+1) F(m)
    f_neg_m1 = fm1 if m % 2 == 0 else -fm1  # F(-m-1) = (-1)**m F(m+1)
    return RingElt(f_neg_m1, f_neg_m)


# --- exact real-embedding predicates ---------------------------------------


def sign_real(x: RingElt) -> int:
    """Sign of the real value a + b*(1+sqrt(5))/2, computed exactly.

    With s = 2a + b the real value has the sign of s + b*sqrt(5); when s and
    b disagree in sign the comparison reduces to s**2 versus 5*b**2.
    """
    s = 2 * x.a + x.b
    b = x.b
    if b == 0:
        return 0 if s == 0 else (1 if s > 0 else -1)
    if s == 0:
        return 1 if b > 0 else -1
    if s > 0 and b > 0:
        return 1
    if s < 0 and b < 0:
        return -1
    d = s * s - 5 * b * b  # nonzero: sqrt(5) is irrational
    if s > 0:
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


def _cmp_int_sqrt5(m: int, q: int) -> int:
    """Sign of m - q*sqrt(5), exactly."""
    if q == 0:
        return 0 if m == 0 else (1 if m > 0 else -1)
    if m <= 0 and q > 0:
        return -1
    if m >= 0 and q < 0:
        return 1
    # m and q share a sign and are nonzero
    d = m * m - 5 * q * q
    if m > 0:
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


def _floor_quad(p: int, q: int, r: int) -> int:
    """floor((p + q*sqrt(5)) / r) for integers with r != 0, exactly."""
    if r < 0:
        p, q, r = -p, -q, -r
    s = isqrt(5 * q * q)
    approx = (p + s if q >= 0 else p - s - 1) // r
    # (p + q*sqrt5) >= r*k  iff  p - r*k >= -q*sqrt5
    while _cmp_int_sqrt5(p - r * approx, -q) < 0:
        approx -= 1
    while _cmp_int_sqrt5(p - r * (approx + 1), -q) >= 0:
        approx += 1
    return approx


def _ceil_quad(p: int, q: int, r: int) -> int:
    return -_floor_quad(-p, -q, r)


# --- units ------------------------------------------------------------------


@dataclass(frozen=True)
class UnitRep:
    """A unit written as sign * L**exponent."""

    sign: int
    exponent: int

    def value(self) -> RingElt:
        u = lambda_pow(self.exponent)
        return u if self.sign > 0 else -u


def unit_decompose(u: RingElt) -> UnitRep:
    """Write a unit as +-L**k; raises NotAUnitError otherwise."""
    if u.abs_norm() != 1:
        raise NotAUnitError(f"{u!r} has |norm| {u.abs_norm()}, not 1")
    sgn = sign_real(u)
    v = u if sgn > 0 else -u
    k = 0
    guard = 4 * (max(abs(v.a), abs(v.b)).bit_length() + 2)
    while v != ONE:
        if sign_real(v - ONE) > 0:
            v = v * LAMBDA_INV
            k += 1
        else:
            v = v * LAMBDA
            k -= 1
        guard -= 1
        if guard < 0:  # pragma: no cover - unit structure guarantees termination
            raise AssertionError("unit decomposition failed to terminate")
    return UnitRep(sgn, k)


def inverse_unit(u: RingElt) -> RingElt:
    """Multiplicative inverse of a unit: conj(u) * norm(u)."""
    n = u.norm()
    if n == 1:
        return u.conj()
    if n == -1:
        return -u.conj()
    raise NotAUnitError(f"{u!r} is not a unit")


# --- division, gcd, associates ----------------------------------------------


class DivResult(NamedTuple):
    quotient: RingElt
    remainder: RingElt


def _round_half_up(num: int, den: int) -> int:
    """Round num/den (den > 0) to the nearest integer, halves up."""
    return (2 * num + den) // (2 * den)


def divmod_nearest(x: RingElt, d: RingElt) -> DivResult:
    """Nearest-integer division: |norm(remainder)| < |norm(d)| always."""
    if not d:
        raise ZeroDivisionError("division by zero in Z[L]")
    w = x * d.conj()
    n = d.norm()
    if n < 0:
        w, n = -w, -n
    q = RingElt(_round_half_up(w.a, n), _round_half_up(w.b, n))
    return DivResult(q, x - q * d)


def gcd(x: RingElt, y: RingElt) -> RingElt:
    """Euclidean gcd, returned as the canonical associate."""
    if not x and not y:
        raise BothZeroError("gcd(0, 0) is undefined")
    while y:
        x, y = y, divmod_nearest(x, y).remainder
    return canonical_associate(x)


def exact_divide(x: RingElt, d: RingElt) -> Optional[RingElt]:
    """x / d when d divides x exactly, else None."""
    d = _coerce(d)
    x = _coerce(x)
    if not d:
        raise ZeroDivisionError("division by zero in Z[L]")
    if not x:
        return ZERO
    w = x * d.conj()
    n = d.norm()
    if w.a % n or w.b % n:
        return None
    return RingElt(w.a // n, w.b // n)


def mul(x: RingElt, y: RingElt) -> RingElt:
    return x * y


def norm(x: RingElt) -> int:
    return x.norm()


def canonical_associate(x: RingElt) -> RingElt:
    """The associate of x that is positive with real value v in
    [sqrt(|norm|), L*sqrt(|norm|)), picked with exact squared comparisons."""
    if not x:
        raise ZeroInputError("zero has no canonical associate")
    if sign_real(x) < 0:
        x = -x
    n = x.abs_norm()
    upper = RingElt(n, n)  # n * L**2
    lower = RingElt(n, 0)
    sq = x * x
    while sign_real(sq - upper) >= 0:
        x = x * LAMBDA_INV
        sq = x * x
    while sign_real(sq - lower) < 0:
        x = x * LAMBDA
        sq = x * x
    return x


def is_canonical_associate(x: RingElt) -> bool:
    if not x or sign_real(x) < 0:
        return False
    n = x.abs_norm()
    sq = x * x
    return sign_real(sq - RingElt(n, 0)) >= 0 and sign_real(sq - RingElt(n, n)) < 0


# --- text form ----------------------------------------------------------------


def format_element(x: RingElt) -> str:
    """Render a + b*L in the CLI grammar, e.g. 2*L-1, L, -3, 18*L+11."""
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    if b == 1:
        s = "L"
    elif b == -1:
        s = "-L"
    else:
        s = f"{b}*L"
    if a > 0:
        s += f"+{a}"
    elif a < 0:
        s += str(a)
    return s


def parse_element(text: str) -> RingElt:
    """Parse the CLI grammar: integers, L, + and -, * for scalar products.

    Examples: "2*L-1" -> RingElt(-1, 2); "5" -> RingElt(5, 0); "-L+3".
    Raises ParseError with the offending position.
    """
    a_total = 0
    b_total = 0
    i = 0
    n = len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    if i == n:
        raise ParseError("empty element", i)
    first = True
    while i < n:
        sign = 1
        i = skip_ws(i)
        if i < n and text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i = skip_ws(i + 1)
        elif not first:
            raise ParseError("expected '+' or '-' between terms", i)
        first = False
        if i >= n:
            raise ParseError("dangling sign", i)
        coeff: Optional[int] = None
        has_lambda = False
        if text[i].isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            coeff = int(text[i:j])
            i = skip_ws(j)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                if i < n and text[i] == "L":
                    has_lambda = True
                    i += 1
                else:
                    raise ParseError("expected L after '*'", i)
        elif text[i] == "L":
            has_lambda = True
            i = skip_ws(i + 1)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                if j == i:
                    raise ParseError("expected integer after '*'", i)
                coeff = int(text[i:j])
                i = j
        else:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        value = sign * (1 if coeff is None else coeff)
        if has_lambda:
            b_total += value
        else:
            a_total += value
        i = skip_ws(i)
    return RingElt(a_total, b_total)
