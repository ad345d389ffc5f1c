"""Subgroup-layer tests: membership, coset tables, shear families, sampling."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke5.errors import (
    BadRangeError,
    BoundExceededError,
    UnitModulusError,
)
from hecke5.reduction import (
    GEN_S,
    GEN_T,
    IDENTITY,
    GMatrix,
    eval_word,
    g5_decompose,
    t_power,
)
from hecke5.ring import LAMBDA, ONE, RingElt
from hecke5.subgroups import (
    G0_2_GENERATORS,
    CosetTable,
    ShearPair,
    conjugate,
    coset_table,
    g0_contains,
    principal_contains,
    sample_subgroup,
    sample_words,
    shear_coset_equal,
)


def elem(a: int, b: int = 0) -> RingElt:
    return RingElt(a, b)


# --- membership -------------------------------------------------------------------


def test_g0_contains_examples():
    third_gen = GMatrix(elem(1, 2), elem(0, -1), elem(0, 2), elem(-1, 0))
    assert g0_contains(third_gen, elem(2, 0))
    assert g0_contains(GEN_T, elem(2, 0))
    assert g0_contains(GEN_T, elem(7, 12))
    assert not g0_contains(GEN_S, elem(2, 0))
    # in SL2 over the ring, lower-left even, but not in the group itself
    outsider = GMatrix(elem(-1, 3), LAMBDA, elem(0, 2), LAMBDA)
    assert not g0_contains(outsider, elem(2, 0))


def test_g0_2_generators_are_members():
    for gen in G0_2_GENERATORS:
        assert g0_contains(gen, elem(2, 0))
        assert g5_decompose(gen) is not None


def test_principal_contains_examples():
    two = elem(2, 0)
    assert principal_contains(IDENTITY, two)
    assert principal_contains(-IDENTITY, two)
    assert not principal_contains(GEN_T, two)  # L is not divisible by 2
    assert principal_contains(GEN_T * GEN_T, two)  # translation by 2L
    with pytest.raises(UnitModulusError):
        principal_contains(IDENTITY, ONE)


def test_conjugate():
    assert conjugate(IDENTITY, GEN_T) == GEN_T
    lower = conjugate(GEN_S, GEN_T)
    assert lower.entries == (ONE, elem(0, 0), elem(0, -1), ONE)
    a = GEN_T * GEN_S
    b1, b2 = GEN_S, GEN_T * GEN_T
    assert conjugate(a, b1 * b2) == conjugate(a, b1) * conjugate(a, b2)


@given(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-5, max_value=5),
)
def test_conjugation_entry_identity(k1, k2, k3):
    # closed form for the lower-left entry of a*b*a**-1 in terms of entries
    a = t_power(k1) * GEN_S * t_power(k2)
    b = GEN_S * t_power(k3) * GEN_S
    got = conjugate(a, b).c
    expected = a.c * a.d * (b.a - b.d) + b.c * a.d * a.d - a.c * a.c * b.b
    assert got == expected


# --- coset tables -----------------------------------------------------------------


def test_coset_table_sizes():
    for tau, want in [
        (elem(1, 0), 1),
        (elem(2, 0), 5),
        (elem(3, 0), 10),
        (elem(-1, 2), 6),
        (elem(7, 12), 12),
        (elem(16, 0), 320),
    ]:
        assert CosetTable(tau).size == want


def test_coset_table_structure():
    table = coset_table(elem(2, 0))
    assert len(table) == 5
    assert table.locate(IDENTITY) == 0
    assert table.locate(GEN_T) == 0  # T is in the subgroup for every level
    assert table.locate(GEN_S) != 0
    for i in range(table.size):
        assert table.locate(table.reps[i]) == i
        assert eval_word(table.rep_words[i]) == table.reps[i]
    for name in "ST":
        act = table.action[name]
        assert sorted(act) == list(range(table.size))
    s = table.action["S"]
    assert all(s[s[i]] == i for i in range(table.size))


def test_coset_table_action_matches_matrices():
    table = coset_table(elem(3, 0))
    for i in range(table.size):
        for name, gen in (("S", GEN_S), ("T", GEN_T)):
            j = table.action[name][i]
            assert table.locate(table.reps[i] * gen) == j


def test_coset_table_membership_via_class_zero():
    table = coset_table(elem(2, 0))
    for m in sample_words(G0_2_GENERATORS, 25, seed=3):
        assert table.locate(m) == 0
    assert table.locate(GEN_S * GEN_T) != 0


def test_coset_table_bound():
    with pytest.raises(BoundExceededError):
        CosetTable(elem(16, 0), max_points=100)


# --- shear families ----------------------------------------------------------------


def test_shear_pair_matrix():
    pair = ShearPair.from_level(1, 1, ONE)
    assert pair.n == 1
    assert pair.matrix().entries == (elem(2, 1), elem(0, 1), elem(0, 1), ONE)
    scaled = ShearPair.from_level(0, 2, elem(0, 2))  # n(2L) = 2
    assert scaled.n == 2
    assert scaled.matrix().entries == (ONE, elem(0, 0), elem(0, 4), ONE)


def test_shear_coset_equal_matches_direct_membership():
    level = ONE
    m, q = 1, 3
    family = [
        ShearPair.from_level(x, y, level)
        for x in range(q)
        for y in range(q)
        if y % 3
    ]
    assert len(family) == 6
    tau = elem(q, 0)
    for a, b in itertools.product(family, repeat=2):
        pred = shear_coset_equal(a, b, m, level)
        direct = g0_contains(b.matrix().inverse() * a.matrix(), tau)
        assert pred == direct
    # distinct classes = family size: all members represent different cosets
    reps: list[ShearPair] = []
    for c in family:
        if not any(shear_coset_equal(c, r, m, level) for r in reps):
            reps.append(c)
    assert len(reps) == 6


def test_shear_coset_equal_validation():
    level = ONE
    good = ShearPair.from_level(1, 1, level)
    with pytest.raises(BadRangeError):
        shear_coset_equal(good, ShearPair.from_level(1, 3, level), 1, level)
    with pytest.raises(BadRangeError):
        shear_coset_equal(good, good, 0, level)
    with pytest.raises(BadRangeError):
        shear_coset_equal(good, good, 1, elem(3, 0))
    with pytest.raises(BadRangeError):
        shear_coset_equal(good, ShearPair(1, 1, 7), 1, level)


# --- sampling ------------------------------------------------------------------------


def test_sample_subgroup_postcondition():
    four = elem(4, 0)
    sample = sample_subgroup(four, 100, seed=7)
    assert len(sample) == 100
    from hecke5.ideals import ResidueCtx

    ctx = ResidueCtx(four)
    assert all(ctx.divides(m.c) for m in sample)
    assert all(g0_contains(m, four) for m in sample[:10])


def test_sample_determinism():
    a = sample_subgroup(elem(2, 0), 5, seed=0)
    b = sample_subgroup(elem(2, 0), 5, seed=0)
    assert all(x.entries == y.entries for x, y in zip(a, b))
    c = sample_subgroup(elem(2, 0), 5, seed=1)
    assert any(x.entries != y.entries for x, y in zip(a, c))
    with pytest.raises(BadRangeError):
        sample_subgroup(elem(2, 0), 0, seed=0)
