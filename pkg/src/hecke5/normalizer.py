"""Normalizer of G0(tau) inside the Hecke group G5, and related searches.

The central fact implemented here: the normalizer of G0(tau) in PSL2(R) is
exactly G0(tau/h), where h is the largest divisor of 4 whose square divides
tau.  ``normalizer_of`` states the answer, ``supergroup_chain`` re-derives the
containment N(G0(tau)) <= G0(tau/h) from first principles (witness fractions
and gcd bounds), and ``quotient_table`` verifies the quotient group structure
(trivial, Klein four, or Z4 x Z4) by explicit coset multiplication.

The module also decides whether a ring element r is "G5-elementary": every
reduced fraction x/(r*y) must satisfy x**2 = 1 (mod r).  Only divisors of 4
have this property; ``is_g5_elementary`` finds explicit counterexamples for
everything else.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BadRangeError,
    IntegrityError,
    NotAGroupError,
    NotReducedError,
    UnitModulusError,
    ZeroInputError,
)
from .ideals import (
    ResidueCtx,
    factor,
    h_of,
    half_power_part,
    relative_index,
    smallest_rational_integer,
)
from .reduction import (
    GMatrix,
    IDENTITY,
    _exponent_or_none,
    is_reduced_form,
)
from .ring import (
    ONE,
    RingElt,
    canonical_associate,
    exact_divide,
    gcd,
    lambda_pow,
)
from .subgroups import conjugate, coset_table, g0_contains, sample_subgroup

#: Names of the three possible quotient groups N(G0(tau))/G0(tau), keyed by h.
QUOTIENT_TRIVIAL = "Trivial"
QUOTIENT_KLEIN4 = "Klein4"
QUOTIENT_Z4XZ4 = "Z4xZ4"

_QUOTIENT_BY_H = {1: QUOTIENT_TRIVIAL, 2: QUOTIENT_KLEIN4, 4: QUOTIENT_Z4XZ4}

#: Element-order histograms that identify each quotient group.  Order
#: statistics suffice: among abelian groups of order 16 with exponent 4, only
#: Z4 x Z4 has exactly three involutions.
_PROFILE_TO_NAME = {
    ((1, 1),): QUOTIENT_TRIVIAL,
    ((1, 1), (2, 3)): QUOTIENT_KLEIN4,
    ((1, 1), (2, 3), (4, 12)): QUOTIENT_Z4XZ4,
}


def _require_modulus(tau: RingElt) -> RingElt:
    """Validate tau as a nonzero non-unit modulus, returning it unchanged."""
    if not tau:
        raise ZeroInputError("modulus must be nonzero")
    if tau.is_unit():
        raise UnitModulusError(f"modulus {tau} is a unit")
    return tau


def _lcm(x: RingElt, y: RingElt) -> RingElt:
    """Canonical least common multiple of two nonzero elements."""
    quotient = exact_divide(x, gcd(x, y))
    assert quotient is not None
    return canonical_associate(quotient * y)


# --- the normalizer level --------------------------------------------------------------


@dataclass(frozen=True)
class NormalizerResult:
    """The normalizer of G0(tau): it equals G0(modulus) with modulus = tau/h."""

    modulus: RingElt
    h: int
    quotient: str


def normalizer_of(tau: RingElt) -> NormalizerResult:
    """Normalizer of G0(tau) in PSL2(R), as a congruence subgroup G0(tau/h).

    h is the largest divisor of 4 with h**2 | tau, and the quotient
    N(G0(tau))/G0(tau) is trivial, Klein four, or Z4 x Z4 according to
    h = 1, 2, 4.
    """
    _require_modulus(tau)
    h = h_of(tau)
    modulus = exact_divide(tau, RingElt(h, 0))
    assert modulus is not None
    return NormalizerResult(
        modulus=canonical_associate(modulus), h=h, quotient=_QUOTIENT_BY_H[h]
    )


def normalizes(m: GMatrix, tau: RingElt) -> bool:
    """True when conjugation by ``m`` preserves G0(tau).

    Decided through the closed form N(G0(tau)) = G0(tau/h): the answer is
    exactly membership of ``m`` in G0(tau/h).  See ``normalizes_sampled`` for
    an independent cross-check.
    """
    return g0_contains(m, normalizer_of(tau).modulus)


def normalizes_sampled(
    m: GMatrix, tau: RingElt, count: int = 64, seed: int = 0
) -> bool:
    """Refute-only sampling check that ``m`` normalizes G0(tau).

    Conjugates ``count`` pseudorandom elements of G0(tau) by ``m`` and tests
    that each conjugate stays in G0(tau).  A False answer is a proof that
    ``m`` does not normalize; a True answer certifies nothing (the sample
    may simply have missed a violation).
    """
    _require_modulus(tau)
    return all(
        g0_contains(conjugate(m, g), tau)
        for g in sample_subgroup(tau, count, seed)
    )


# --- quotient group table ----------------------------------------------------------


@dataclass(frozen=True)
class QuotientTable:
    """Multiplication table of N(G0(tau))/G0(tau) = G0(tau/h)/G0(tau).

    ``modulus`` is the level tau of the subgroup being quotiented by;
    ``normalizer_modulus`` is tau/h, the level of the normalizer.
    ``classes[i]`` is the index, in the full coset table of G0(tau), of the
    i-th quotient element; ``representatives[i]`` is a matrix in that coset;
    ``table[i][j]`` gives k with class_i * class_j = class_k (index 0 is the
    identity coset G0(tau) itself).
    """

    modulus: RingElt
    normalizer_modulus: RingElt
    order: int
    classes: tuple[int, ...]
    representatives: tuple[GMatrix, ...]
    table: tuple[tuple[int, ...], ...]
    element_orders: tuple[int, ...]
    order_profile: tuple[tuple[int, int], ...]
    classification: str


def _element_orders(table: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Order of each element in a finite group table whose identity is 0."""
    orders = []
    size = len(table)
    for i in range(size):
        current, order = i, 1
        while current != 0:
            current = table[current][i]
            order += 1
            if order > size:
                raise NotAGroupError("element power walk never reached identity")
        orders.append(order)
    return tuple(orders)


def quotient_table(tau: RingElt) -> QuotientTable:
    """Build and verify the finite group N(G0(tau))/G0(tau) by enumeration.

    Filters the coset table of G0(tau) down to the cosets contained in
    G0(tau/h), multiplies representatives pairwise, and checks closure,
    associativity, and commutativity before classifying the group by its
    element-order histogram.
    """
    result = normalizer_of(tau)
    tau_c = canonical_associate(tau)
    if result.h == 1:
        return QuotientTable(
            modulus=tau_c,
            normalizer_modulus=result.modulus,
            order=1,
            classes=(0,),
            representatives=(IDENTITY,),
            table=((0,),),
            element_orders=(1,),
            order_profile=((1, 1),),
            classification=QUOTIENT_TRIVIAL,
        )

    base = coset_table(tau_c)
    sub_ctx = ResidueCtx(result.modulus)
    classes = tuple(
        i for i, rep in enumerate(base.reps) if sub_ctx.divides(rep.c)
    )
    expected = relative_index(tau_c, result.modulus)
    if len(classes) != expected:
        raise NotAGroupError(
            f"{len(classes)} cosets lie in G0({result.modulus}) but the "
            f"index formula gives {expected}"
        )
    position = {cls: k for k, cls in enumerate(classes)}
    if classes[0] != 0 or base.locate(IDENTITY) != 0:
        raise NotAGroupError("identity coset is not in position zero")

    reps = tuple(base.reps[i] for i in classes)
    rows = []
    for left in reps:
        row = []
        for right in reps:
            located = base.locate(left * right)
            if located not in position:
                raise NotAGroupError(
                    "product of quotient representatives left the subset"
                )
            row.append(position[located])
        rows.append(tuple(row))
    table = tuple(rows)

    size = len(table)
    for i in range(size):
        for j in range(size):
            if table[i][j] != table[j][i]:
                raise NotAGroupError("quotient multiplication is not commutative")
    for i, j, k in itertools.product(range(size), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NotAGroupError("quotient multiplication is not associative")

    orders = _element_orders(table)
    profile_counts: dict[int, int] = {}
    for order in orders:
        profile_counts[order] = profile_counts.get(order, 0) + 1
    profile = tuple(sorted(profile_counts.items()))
    name = _PROFILE_TO_NAME.get(profile)
    if name is None:
        raise NotAGroupError(f"unrecognized element-order profile {profile}")
    if name != result.quotient:
        raise IntegrityError(
            f"enumerated quotient {name} disagrees with h={result.h} "
            f"prediction {result.quotient}"
        )
    return QuotientTable(
        modulus=tau_c,
        normalizer_modulus=result.modulus,
        order=size,
        classes=classes,
        representatives=reps,
        table=table,
        element_orders=orders,
        order_profile=profile,
        classification=name,
    )


# --- witness bounds and the derivation chain ---------------------------------------


def reduced_witness_bound(tau: RingElt, u: RingElt, w: RingElt) -> RingElt:
    """Supergroup bound extracted from one reduced fraction u/(w*tau).

    If u/(w*tau) is a reduced form, then G0(tau) contains a matrix with first
    column (u, w*tau), and conjugating it shows every normalizing matrix has
    lower-left entry divisible by tau/x where x = gcd(tau/[tau], u**2 - 1)
    ([tau] being the half-power part of tau).  Returns tau/x as a canonical
    generator.  Raises NotReducedError when the fraction is not reduced.
    """
    _require_modulus(tau)
    if not is_reduced_form(u, w * tau):
        raise NotReducedError(f"{u}/({w})*({tau}) is not a reduced form")
    cofactor = exact_divide(tau, half_power_part(tau))
    assert cofactor is not None
    x = gcd(cofactor, u * u - ONE)
    bound = exact_divide(tau, x)
    assert bound is not None
    return canonical_associate(bound)


@dataclass(frozen=True)
class ChainStep:
    """One stripping step of the supergroup derivation.

    ``removed`` is the prime power stripped from the modulus, ``remaining``
    the cofactor nu the witnesses apply to, ``witnesses`` the reduced-form
    numerators used, ``gcds`` the corresponding gcd(nu/[nu], w**2 - 1)
    values, and ``bound`` the resulting containment G0(bound).
    """

    part: str
    removed: RingElt
    remaining: RingElt
    witnesses: tuple[RingElt, ...]
    gcds: tuple[RingElt, ...]
    bound: RingElt


@dataclass(frozen=True)
class ChainReport:
    """Derivation of N(G0(tau)) <= G0(tau/h) from witness fractions."""

    input: RingElt
    half_power_bound: RingElt
    steps: tuple[ChainStep, ...]
    final: RingElt


_THREE = RingElt(3, 0)
_NINE = RingElt(9, 0)
_FIVE = RingElt(5, 0)
_ROOT5_PRIME = canonical_associate(RingElt(-1, 2))

#: Witness numerators: the reduced form of p/(n*L) for p = 3, 9, 5 has
#: numerator p*L**e with e depending only on a congruence condition on n.
_W3 = _THREE * lambda_pow(3)
_W9_SHORT = _NINE * lambda_pow(3)
_W9_LONG = _NINE * lambda_pow(9)
_W5 = _FIVE * lambda_pow(6)


def _strip_step(
    part: str,
    tau: RingElt,
    prime: RingElt,
    exponent: int,
    witness_pairs: "list[tuple[RingElt, int]]",
) -> ChainStep:
    """Strip prime**exponent from tau and bound the cofactor via witnesses."""
    removed = canonical_associate(prime ** exponent) if exponent else ONE
    remaining = exact_divide(tau, prime ** exponent) if exponent else tau
    assert remaining is not None
    remaining = canonical_associate(remaining)
    if remaining.is_unit():
        return ChainStep(part, removed, ONE, (), (), ONE)

    n = smallest_rational_integer(remaining)
    cofactor = exact_divide(remaining, half_power_part(remaining))
    assert cofactor is not None
    witnesses, gcds, combined = [], [], cofactor
    for numerator, k in witness_pairs:
        denominator = RingElt(n, 0) * lambda_pow(k)
        if not is_reduced_form(numerator, denominator):
            raise IntegrityError(
                f"witness {numerator}/{denominator} failed to be reduced"
            )
        g = gcd(cofactor, numerator * numerator - ONE)
        witnesses.append(numerator)
        gcds.append(g)
        combined = gcd(combined, g)
    bound = exact_divide(remaining, combined)
    assert bound is not None
    return ChainStep(
        part, removed, remaining, tuple(witnesses), tuple(gcds),
        canonical_associate(bound),
    )


def supergroup_chain(tau: RingElt) -> ChainReport:
    """Derive N(G0(tau)) <= G0(tau/h) from scratch and cross-check it.

    Starts from the half-power containment N(G0(tau)) <= G0([tau]), strips
    the inert-3 part (witness fractions 3/nL and 9/nL, whose reduced
    numerators are 3L^3 and 9L^3 or 9L^9 according to n mod 9), strips the
    ramified-5 part (witness 5/nL with numerator 5L^6), and intersects the
    bounds via lcm.  Raises IntegrityError if the combined bound differs
    from the closed-form answer tau/h.
    """
    result = normalizer_of(tau)
    tau_c = canonical_associate(tau)
    half_power = half_power_part(tau_c)
    factorization = factor(tau_c)

    e3 = factorization.exponent_of(_THREE)
    nu1 = exact_divide(tau_c, _THREE ** e3) if e3 else tau_c
    assert nu1 is not None
    if not canonical_associate(nu1).is_unit():
        n1 = smallest_rational_integer(canonical_associate(nu1))
        nine_witness = (_W9_SHORT, 4) if n1 % 9 in (1, 8) else (_W9_LONG, 10)
        three_pairs = [(_W3, 4), nine_witness]
    else:
        three_pairs = []
    step3 = _strip_step("3-part", tau_c, _THREE, e3, three_pairs)

    e5 = factorization.exponent_of(_ROOT5_PRIME)
    step5 = _strip_step(
        "root5-part", tau_c, _ROOT5_PRIME, e5, [(_W5, 7)]
    )

    final = half_power
    steps = (step3, step5)
    for step in steps:
        if not step.bound.is_unit():
            final = _lcm(final, step.bound)
    if final != result.modulus:
        raise IntegrityError(
            f"chain bound {final} differs from closed form {result.modulus}"
        )
    return ChainReport(
        input=tau_c, half_power_bound=half_power, steps=steps, final=final
    )


# --- elementary elements (counterexample search) -----------------------------------------

#: Verdict labels for the elementary-element search.
COUNTEREXAMPLE_FOUND = "CounterexampleFound"
NO_COUNTEREXAMPLE = "NoCounterexampleUpTo"

#: Default half-width of the coefficient box searched for counterexamples.
DEFAULT_ELEMENTARY_BOUND = 12

#: Targeted witness numerators with the lambda-exponent of their reduced
#: denominator n(r)*L**k, tried before any box search.
_TARGETED_WITNESSES = (
    (RingElt(2, 0) * lambda_pow(2), 3),
    (_W3, 4),
    (_W9_SHORT, 4),
    (_W9_LONG, 10),
    (_W5, 7),
)


@dataclass(frozen=True)
class ElementaryVerdict:
    """Outcome of searching for a reduced form x/(r*y) with x**2 != 1 mod r.

    ``verdict`` is COUNTEREXAMPLE_FOUND with ``witness = (x, y)`` — so the
    offending reduced fraction is x/(r*y) — or NO_COUNTEREXAMPLE after an
    exhaustive scan of the coefficient box [-bound, bound].
    """

    r: RingElt
    verdict: str
    witness: Optional[tuple[RingElt, RingElt]]
    bound: int

    @property
    def found(self) -> bool:
        return self.verdict == COUNTEREXAMPLE_FOUND


def _box_coefficients(bound: int) -> list[RingElt]:
    """All ring elements with coefficients in [-bound, bound], sorted.

    The order (by max coefficient magnitude, then lexicographic) fixes the
    total order in which box counterexamples are reported.
    """
    elements = [
        RingElt(a, b)
        for a in range(-bound, bound + 1)
        for b in range(-bound, bound + 1)
    ]
    elements.sort(key=lambda e: (max(abs(e.a), abs(e.b)), e.a, e.b))
    return elements


def is_g5_elementary(
    r: RingElt, bound: int = DEFAULT_ELEMENTARY_BOUND
) -> ElementaryVerdict:
    """Search for a reduced form x/(r*y) violating x**2 = 1 (mod r).

    Tries the targeted witness numerators (2L^2, 3L^3, 9L^3, 9L^9, 5L^6 over
    denominators n(r)*L^k) first, then sweeps all coefficient pairs (x, y)
    in the box [-bound, bound]^2 in a fixed deterministic order.  Because
    x/(r*y) and (-x)/(r*(-y)) are the same fraction, x ranges over one sign
    class only.  A unit r divides everything, so the verdict is immediate.
    """
    if not r:
        raise ZeroInputError("r must be nonzero")
    if bound < 1:
        raise BadRangeError(f"bound must be >= 1, got {bound}")
    return _elementary_search(r, bound)


@functools.lru_cache(maxsize=None)
def _elementary_search(r: RingElt, bound: int) -> ElementaryVerdict:
    if r.is_unit():
        return ElementaryVerdict(r, NO_COUNTEREXAMPLE, None, bound)

    ctx = ResidueCtx(r)
    n = RingElt(smallest_rational_integer(r), 0)
    for numerator, k in _TARGETED_WITNESSES:
        denominator = n * lambda_pow(k)
        y = exact_divide(denominator, r)
        if y is None or not gcd(numerator, denominator).is_unit():
            continue
        if not is_reduced_form(numerator, denominator):
            continue
        if not ctx.divides(numerator * numerator - ONE):
            return ElementaryVerdict(
                r, COUNTEREXAMPLE_FOUND, (numerator, y), bound
            )

    box = _box_coefficients(bound)
    denominators = [(r * y, y) for y in box if y]
    for x in box:
        if (x.a, x.b) <= (0, 0):
            continue
        if ctx.divides(x * x - ONE) or not gcd(x, r).is_unit():
            continue
        for denominator, y in denominators:
            if _exponent_or_none(x, denominator) == 0:
                return ElementaryVerdict(r, COUNTEREXAMPLE_FOUND, (x, y), bound)
    return ElementaryVerdict(r, NO_COUNTEREXAMPLE, None, bound)


@dataclass(frozen=True)
class StrongVerdict:
    """Whether every divisor of r (up to associates) is G5-elementary."""

    r: RingElt
    holds: bool
    divisors: tuple[RingElt, ...]
    failing_divisor: Optional[RingElt]
    failure: Optional[ElementaryVerdict]
    bound: int


def _divisors_up_to_associates(r: RingElt) -> list[RingElt]:
    """Canonical divisors of r, sorted by absolute norm then coefficients."""
    factorization = factor(r)
    divisors = [ONE]
    for prime, exponent in factorization.factors:
        divisors = [
            d * prime ** k for d in divisors for k in range(exponent + 1)
        ]
    canon = {canonical_associate(d) for d in divisors}
    return sorted(canon, key=lambda d: (abs(d.norm()), d.a, d.b))


def strongly_elementary(
    r: RingElt, bound: int = DEFAULT_ELEMENTARY_BOUND
) -> StrongVerdict:
    """Check that every divisor of r is G5-elementary (up to the box bound).

    Divisors are enumerated from the factorization of r up to associates and
    tested in order of increasing norm; the first failing divisor (if any)
    is reported together with its counterexample.
    """
    if not r:
        raise ZeroInputError("r must be nonzero")
    divisors = tuple(_divisors_up_to_associates(r))
    for divisor in divisors:
        verdict = is_g5_elementary(divisor, bound)
        if verdict.found:
            return StrongVerdict(r, False, divisors, divisor, verdict, bound)
    return StrongVerdict(r, True, divisors, None, None, bound)
