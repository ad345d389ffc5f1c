"""Reducing fractions x/y over Z[L] to their canonical scaled form.

The reduction runs a pseudo-division chain in Z[L]: each step divides with a
remainder that shrinks a determinant bound, so the chain terminates and every
intermediate identity is exact.  The result packages the scaling exponent e
with the reduced numerator and denominator, where the reduced denominator is
exactly y * L**e ... all checkable by pure ring arithmetic.
"""

from hecke5 import (
    RingElt,
    lambda_pow,
    pseudo_divide,
    reduced_factor,
    scaling_exponent,
    word_string,
)


def show(x: RingElt, n: int) -> None:
    y = RingElt(n, 0)
    res = reduced_factor(x, y)
    print(f"{x} / {n}:")
    print(f"  scaling exponent e = {res.e}")
    print(f"  reduced form       = ({res.reduced_num}) / ({res.reduced_den})")
    assert res.reduced_den == y * lambda_pow(res.e), "denominator must be n * L**e"
    matrix = res.completed()
    print(f"  witness matrix     = [[{matrix.a}, {matrix.b}], [{matrix.c}, {matrix.d}]]")
    print(f"  as a word in S, T  = {word_string(res.word)}")


def main() -> None:
    print("== one pseudo-division step ==")
    x, y = RingElt(0, 12), RingElt(-1, 2)
    step = pseudo_divide(x, y)
    print(f"{x} = ({step.quotient}) * L * ({y}) + ({step.remainder})")

    print("\n== full reductions of (2L-1)/n ==")
    for n in (12, 96, 192):
        show(RingElt(-1, 2), n)
        print()

    print("== the exponent is a congruence invariant of the fraction ==")
    x, u = RingElt(-1, 2), RingElt(12, 0)
    for m in (0, 1, -3):
        shifted = u - x * RingElt(m, 0)
        e = scaling_exponent(x, shifted * RingElt(0, 1))
        print(f"e( ({x}) / (({shifted})L) ) = {e}")


if __name__ == "__main__":
    main()
