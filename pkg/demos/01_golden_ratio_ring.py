"""Tour of the golden-ratio ring Z[L], where L**2 = L + 1.

Every quantity is exact: elements are integer pairs a + b*L, comparisons go
through integer arithmetic only, and the units are exactly +-L**k.
"""

from hecke5 import (
    LAMBDA,
    RingElt,
    canonical_associate,
    factor,
    gcd,
    lambda_pow,
    parse_element,
    sign_real,
    unit_decompose,
)


def main() -> None:
    print("== the ring Z[L] ==")
    lam = LAMBDA
    print(f"L = {lam}, L**2 = {lam * lam} (= L + 1)")
    print(f"L**6 = {lambda_pow(6)}, L**-3 = {lambda_pow(-3)} (negative powers exist)")
    print(f"norm(a + bL) = a**2 + ab - b**2; norm(L) = {lam.norm()} (a unit)")

    print("\n== exact sign and comparison ==")
    x = parse_element("2*L-1")  # the square root of 5
    print(f"2L-1 squares to {x * x}; its real embedding is positive:",
          sign_real(x) > 0)

    print("\n== units and canonical associates ==")
    u = -lambda_pow(4)
    rep = unit_decompose(u)
    print(f"{u} = {'-' if rep.sign < 0 else ''}L**{rep.exponent}")
    y = RingElt(-18, -11)
    print(f"canonical associate of {y} is {canonical_associate(y)}")

    print("\n== gcd and factorization ==")
    a, b = parse_element("96*L+60"), parse_element("18*L+11")
    print(f"gcd({a}, {b}) = {gcd(a, b)}")
    for text in ("5", "4", "12*L+7", "30"):
        f = factor(parse_element(text))
        print(f"{text} = {f}")


if __name__ == "__main__":
    main()
