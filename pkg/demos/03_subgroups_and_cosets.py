"""Congruence subgroups G0(tau): membership, indices, and coset tables.

G0(tau) consists of the group matrices whose lower-left entry is divisible
by tau.  The index of G0(tau) in the full group is a multiplicative function
of tau, and the cosets are enumerated exactly as projective points over the
residue ring Z[L]/tau.
"""

from hecke5 import (
    GEN_S,
    GEN_T,
    ONE,
    RingElt,
    ShearPair,
    coset_table,
    eval_word,
    g0_contains,
    g5_decompose,
    index_in_g5,
    parse_element,
    parse_word,
    shear_coset_equal,
    word_string,
)


def main() -> None:
    print("== matrices, words, and membership ==")
    word = parse_word("TSttST")
    g = eval_word(word)
    print(f"{word_string(word)} = [[{g.a}, {g.b}], [{g.c}, {g.d}]]")
    recovered = g5_decompose(g)
    print(f"decomposing the matrix recovers the word: {word_string(recovered)}")
    for n in (2, 3, 5):
        print(f"  lies in G0({n})? {g0_contains(g, RingElt(n, 0))}")

    print("\n== index of G0(tau) in the full group ==")
    for text in ("2", "3", "4", "5", "16", "2*L-1"):
        tau = parse_element(text)
        print(f"  [G : G0({text})] = {index_in_g5(tau)}")

    print("\n== coset table for tau = 3 ==")
    table = coset_table(RingElt(3, 0))
    print(f"number of cosets = {table.size}")
    for point, w in zip(table.points, table.rep_words):
        print(f"  point {point}: representative word {word_string(w) or '(identity)'}")
    ident = eval_word(())
    print(f"identity lands in class {table.locate(ident)};"
          f" S moves class 0 to class {table.action['S'][0]}")

    print("\n== shear pairs modulo G0(3) ==")
    pairs = [
        ShearPair.from_level(x, y, ONE)
        for x in range(3)
        for y in range(3)
        if y % 3 != 0
    ]
    distinct = sum(
        all(not shear_coset_equal(p, q, 1, ONE) for q in pairs[:i])
        for i, p in enumerate(pairs)
    )
    print(f"admissible pairs: {len(pairs)}; distinct cosets: {distinct}")
    same = shear_coset_equal(pairs[0], pairs[0], 1, ONE)
    diff = shear_coset_equal(pairs[0], pairs[1], 1, ONE)
    print(f"a pair matches itself ({same}) and no other ({diff})")


if __name__ == "__main__":
    main()
