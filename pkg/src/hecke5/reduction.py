"""Matrices, generator words, and continued-fraction reduction over Z[L].

The group under study is generated by S = [[0,-1],[1,0]] and T = [[1,L],[0,1]]
inside SL(2, Z[L]), taken modulo global sign: only +-M is meaningful, and that
convention is baked into GMatrix equality and hashing while the raw entries
are preserved exactly as constructed.

The reduction chain expands a fraction over Z[L] as a nearest-multiple
continued fraction in powers of L.  It yields a canonical scaling exponent
``e`` (the fraction times L**e is "reduced"), a witness matrix carrying the
scaled pair in a column, and — applied to a first column — an exact membership
test with a generator-word certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    BadDeterminantError,
    BothZeroError,
    IterationCapError,
    NotCoprimeError,
    ParseError,
)
from .ring import (
    LAMBDA,
    ONE,
    ZERO,
    RingElt,
    _ceil_quad,
    format_element,
    lambda_pow,
    unit_decompose,
)

Token = tuple[str, int]
Word = tuple[Token, ...]


def _coerce(x: "RingElt | int") -> RingElt:
    return x if isinstance(x, RingElt) else RingElt(x, 0)


class GMatrix:
    """A determinant-one 2x2 matrix over Z[L], compared modulo global sign."""

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(
        self,
        a: "RingElt | int",
        b: "RingElt | int",
        c: "RingElt | int",
        d: "RingElt | int",
    ) -> None:
        a, b, c, d = _coerce(a), _coerce(b), _coerce(c), _coerce(d)
        if a * d - b * c != ONE:
            raise BadDeterminantError("matrix determinant must be 1")
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GMatrix is immutable")

    @property
    def a(self) -> RingElt:
        return self._a

    @property
    def b(self) -> RingElt:
        return self._b

    @property
    def c(self) -> RingElt:
        return self._c

    @property
    def d(self) -> RingElt:
        return self._d

    @property
    def entries(self) -> tuple[RingElt, RingElt, RingElt, RingElt]:
        return (self._a, self._b, self._c, self._d)

    @property
    def first_column(self) -> tuple[RingElt, RingElt]:
        return (self._a, self._c)

    @property
    def second_column(self) -> tuple[RingElt, RingElt]:
        return (self._b, self._d)

    def _sign_canon(self) -> tuple[RingElt, ...]:
        from .ring import sign_real

        for entry in self.entries:
            s = sign_real(entry)
            if s:
                return self.entries if s > 0 else tuple(-e for e in self.entries)
        raise AssertionError("zero matrix cannot have determinant 1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GMatrix):
            return NotImplemented
        mine, theirs = self.entries, other.entries
        return mine == theirs or mine == tuple(-e for e in theirs)

    def __hash__(self) -> int:
        return hash(tuple(e.coeffs for e in self._sign_canon()))

    def __neg__(self) -> "GMatrix":
        return GMatrix(-self._a, -self._b, -self._c, -self._d)

    def __mul__(self, other: "GMatrix") -> "GMatrix":
        if not isinstance(other, GMatrix):
            return NotImplemented
        return GMatrix(
            self._a * other._a + self._b * other._c,
            self._a * other._b + self._b * other._d,
            self._c * other._a + self._d * other._c,
            self._c * other._b + self._d * other._d,
        )

    def inverse(self) -> "GMatrix":
        return GMatrix(self._d, -self._b, -self._c, self._a)

    def __pow__(self, k: int) -> "GMatrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = IDENTITY
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def trace(self) -> RingElt:
        return self._a + self._d

    def is_identity(self) -> bool:
        return self == IDENTITY

    def row_action(self, c: RingElt, d: RingElt) -> tuple[RingElt, RingElt]:
        """Right action on a row vector: (c, d) . M."""
        return (c * self._a + d * self._c, c * self._b + d * self._d)

    def __repr__(self) -> str:
        rows = [[self._a, self._b], [self._c, self._d]]
        body = ", ".join(
            "[" + ", ".join(format_element(e) for e in row) + "]" for row in rows
        )
        return f"[{body}]"


IDENTITY = GMatrix(1, 0, 0, 1)
GEN_S = GMatrix(0, -1, 1, 0)
GEN_T = GMatrix(1, LAMBDA, 0, 1)


def t_power(q: int) -> GMatrix:
    """T**q = [[1, q*L], [0, 1]] in closed form."""
    return GMatrix(ONE, RingElt(0, q), ZERO, ONE)


# --- generator words ----------------------------------------------------------


def _check_word(word: Word) -> None:
    for token in word:
        kind, arg = token
        if kind == "S":
            if arg != 1:
                raise ValueError(f"bad token {token!r}")
        elif kind != "T" or not isinstance(arg, int):
            raise ValueError(f"bad token {token!r}")


def eval_word(word: Word) -> GMatrix:
    """Product of the word's tokens, S first-to-last on the left."""
    _check_word(word)
    acc = IDENTITY
    for kind, arg in word:
        acc = acc * (GEN_S if kind == "S" else t_power(arg))
    return acc


def word_string(word: Word) -> str:
    """Serialize over the alphabet {S, T, t} with t meaning T**-1."""
    _check_word(word)
    parts = []
    for kind, arg in word:
        parts.append("S" if kind == "S" else ("T" * arg if arg > 0 else "t" * -arg))
    return "".join(parts)


def parse_word(text: str) -> Word:
    """Inverse of word_string; adjacent T-runs merge into one token."""
    out: list[Token] = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == "S":
            out.append(("S", 1))
        elif ch in "Tt":
            step = 1 if ch == "T" else -1
            if out and out[-1][0] == "T":
                out[-1] = ("T", out[-1][1] + step)
            else:
                out.append(("T", step))
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    return tuple(tok for tok in out if tok != ("T", 0))


# --- pseudo-division ------------------------------------------------------------


@dataclass(frozen=True)
class PseudoStep:
    """One division step: x = quotient * (y*L) + remainder."""

    quotient: int
    remainder: RingElt


def pseudo_divide(x: RingElt, y: RingElt) -> PseudoStep:
    """Divide ``x`` by ``y*L``, rounding the real ratio to the nearest integer.

    The quotient q is the unique integer with x/(y*L) - q in (-1/2, 1/2],
    decided exactly from the real embedding; the remainder is x - q*y*L.
    """
    if not y:
        raise ZeroDivisionError("pseudo-division by zero")
    den = y * LAMBDA
    w = x * den.conj()
    n = den.norm()
    if n < 0:
        w, n = -w, -n
    # ceil(t - 1/2) with t = (w.a + w.b*(1+sqrt5)/2) / n
    q = _ceil_quad(2 * w.a + w.b - n, w.b, 2 * n)
    return PseudoStep(q, x - den * q)


# --- the reduction chain ----------------------------------------------------------


@dataclass(frozen=True)
class ReducedFormResult:
    """Outcome of reducing the fraction num/den.

    ``e`` is the canonical scaling exponent: (num*L**e, den*L**e) is the
    reduced pair, recorded in reduced_num / reduced_den.  ``word`` is the
    witness word: modulo sign, its matrix carries the reduced pair as its
    second column. ``full_word`` keeps the trailing S of the chain, and
    completed() turns it into the exact matrix with the reduced pair as its
    first column.
    """

    e: int
    reduced_num: RingElt
    reduced_den: RingElt
    unit_sign: int
    word: Word
    full_word: Word

    def witness(self) -> GMatrix:
        return eval_word(self.word)

    def completed(self) -> GMatrix:
        flips = sum(1 for kind, _ in self.full_word if kind == "S")
        total = self.unit_sign * (-1 if flips % 2 else 1)
        m = eval_word(self.full_word)
        return m if total > 0 else -m


def reduced_factor(num: RingElt, den: RingElt) -> ReducedFormResult:
    """Reduce the fraction num/den by the continued-fraction chain.

    Requires gcd(num, den) to be a unit (NotCoprimeError otherwise).  The
    chain replaces (x, y) by (-y, x - q*y*L) with q from pseudo_divide until
    y = 0; the leftover unit fixes the scaling exponent.
    """
    if not num and not den:
        raise BothZeroError("cannot reduce 0/0")
    x, y = num, den
    word: list[Token] = []
    cap = 64 * (
        abs(num.a).bit_length()
        + abs(num.b).bit_length()
        + abs(den.a).bit_length()
        + abs(den.b).bit_length()
        + 4
    )
    steps = 0
    while y:
        step = pseudo_divide(x, y)
        if step.quotient:
            word.append(("T", step.quotient))
        word.append(("S", 1))
        x, y = -y, step.remainder
        steps += 1
        if steps > cap:
            raise IterationCapError(f"reduction did not terminate in {cap} steps")
    try:
        rep = unit_decompose(x)
    except ValueError as exc:
        raise NotCoprimeError(
            f"gcd of {format_element(num)} and {format_element(den)} is not a unit"
        ) from exc
    e = -rep.exponent
    scale = lambda_pow(e)
    full_word = tuple(word)
    return ReducedFormResult(
        e=e,
        reduced_num=num * scale,
        reduced_den=den * scale,
        unit_sign=rep.sign,
        word=full_word[:-1] if full_word else full_word,
        full_word=full_word,
    )


def is_reduced_form(num: RingElt, den: RingElt) -> bool:
    """True when the fraction num/den already has scaling exponent zero."""
    return reduced_factor(num, den).e == 0


def scaling_exponent(num: RingElt, den: RingElt) -> int:
    """The exponent e with (num*L**e, den*L**e) reduced."""
    return reduced_factor(num, den).e


def _exponent_or_none(num: RingElt, den: RingElt) -> Optional[int]:
    """Scaling exponent of num/den, or None when the pair is not coprime.

    Allocation-light twin of reduced_factor for bulk searches: runs the same
    division chain on raw coefficients without building the witness word.
    """
    xa, xb, ya, yb = num.a, num.b, den.a, den.b
    cap = 64 * (
        abs(xa).bit_length()
        + abs(xb).bit_length()
        + abs(ya).bit_length()
        + abs(yb).bit_length()
        + 4
    )
    steps = 0
    while ya or yb:
        ma, mb = yb, ya + yb
        ca, cb = ma + mb, -mb
        wa = xa * ca + xb * cb
        wb = xa * cb + xb * ca + xb * cb
        n = ma * ma + ma * mb - mb * mb
        if n < 0:
            wa, wb, n = -wa, -wb, -n
        q = _ceil_quad(2 * wa + wb - n, wb, 2 * n)
        xa, xb, ya, yb = -ya, -yb, xa - ma * q, xb - mb * q
        steps += 1
        if steps > cap:
            raise IterationCapError(f"reduction did not terminate in {cap} steps")
    if abs(xa * xa + xa * xb - xb * xb) != 1:
        return None
    return -unit_decompose(RingElt(xa, xb)).exponent


# --- membership -------------------------------------------------------------------


def g5_decompose(m: GMatrix) -> Optional[Word]:
    """Write +-m as a word in S and T, or return None when impossible.

    Runs the reduction chain on the first column; membership holds exactly
    when the leftover upper-triangular cofactor is +-T**k.
    """
    result = reduced_factor(m.a, m.c)
    prefix = eval_word(result.full_word)
    rest = prefix.inverse() * m
    if rest.c != ZERO:
        return None
    if rest.a == ONE:
        sign = 1
    elif rest.a == -ONE:
        sign = -1
    else:
        return None
    if rest.b.a != 0:
        return None
    k = sign * rest.b.b
    word = result.full_word + ((("T", k),) if k else ())
    return word
