"""Congruence subgroups: membership, coset tables, shear families, sampling.

G0(tau) is the set of group elements whose lower-left entry is divisible by
tau.  Right cosets of G0(tau) correspond to bottom rows (c, d) modulo tau up
to scaling by invertible residues — points of the projective line over the
residue ring — and the coset table enumerates them as the orbit of (0, 1)
under the right action of the generators S and T.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    BadRangeError,
    BoundExceededError,
    IntegrityError,
    UnitModulusError,
)
from .ideals import ResidueCtx, index_in_g5, smallest_rational_integer
from .reduction import (
    GEN_S,
    GEN_T,
    IDENTITY,
    GMatrix,
    Token,
    Word,
    g5_decompose,
    t_power,
)
from .ring import ONE, ZERO, RingElt, gcd


def g0_contains(m: GMatrix, modulus: RingElt) -> bool:
    """Membership in the level-``modulus`` congruence subgroup."""
    if not ResidueCtx(modulus).divides(m.c):
        return False
    return g5_decompose(m) is not None


def principal_contains(m: GMatrix, modulus: RingElt) -> bool:
    """True when m is in the group and congruent to +-identity mod modulus."""
    if modulus.is_unit():
        raise UnitModulusError("principal congruence needs a non-unit modulus")
    ctx = ResidueCtx(modulus)
    for sign in (ONE, -ONE):
        if (
            ctx.divides(m.a - sign)
            and ctx.divides(m.b)
            and ctx.divides(m.c)
            and ctx.divides(m.d - sign)
        ):
            return g5_decompose(m) is not None
    return False


def conjugate(a: GMatrix, b: GMatrix) -> GMatrix:
    """a * b * a**-1."""
    return a * b * a.inverse()


# --- coset enumeration ----------------------------------------------------------


class CosetTable:
    """Right cosets of the level-``modulus`` subgroup in the full group.

    Each coset is a projective point: a bottom row modulo the level, up to
    scaling by invertible residues; class 0 is the subgroup itself.  The
    table stores one reduced point and one matrix representative (with its
    generator word) per class, plus the permutation action of S and T on
    classes.  Construction cross-checks the class count against the
    multiplicative index formula and raises IntegrityError on any mismatch.
    """

    def __init__(self, modulus: RingElt, max_points: int = 10_000) -> None:
        expected = index_in_g5(modulus)
        if expected > max_points:
            raise BoundExceededError(
                f"index {expected} exceeds the configured bound {max_points}"
            )
        ctx = ResidueCtx(modulus)
        self.modulus = modulus
        self.ctx = ctx

        n, g, hm = ctx.n, ctx.g, ctx.m

        def red(a: int, b: int) -> tuple[int, int]:
            k = b // g
            return (a - k * hm) % n, b - k * g

        # invertible residues of the quotient ring, as coefficient pairs
        if modulus.is_unit():
            units = [(0, 0)]  # the zero ring: its single residue is invertible
        else:
            units = [
                (r.a, r.b)
                for r in ctx.residues()
                if bool(r) and gcd(r, modulus).is_unit()
            ]

        index_of: dict[tuple[int, int, int, int], int] = {}
        points: list[tuple[int, int, int, int]] = []
        minkeys: list[tuple[int, int, int, int]] = []
        reps: list[GMatrix] = []
        words: list[Word] = []

        def register(pt: tuple[int, int, int, int], rep: GMatrix, word: Word) -> int:
            idx = len(points)
            points.append(pt)
            reps.append(rep)
            words.append(word)
            best = None
            ca, cb, da, db = pt
            for ua, ub in units:
                key = (
                    *red(ua * ca + ub * cb, ua * cb + ub * ca + ub * cb),
                    *red(ua * da + ub * db, ua * db + ub * da + ub * db),
                )
                index_of[key] = idx
                if best is None or key < best:
                    best = key
            minkeys.append(best)
            return idx

        start = (*red(0, 0), *red(1, 0))
        register(start, IDENTITY, ())
        queue = [start]
        qi = 0
        while qi < len(queue):
            ca, cb, da, db = queue[qi]
            i = index_of[(ca, cb, da, db)]
            qi += 1
            # right action: (c, d) S = (d, -c); (c, d) T = (c, c L + d)
            neighbors = (
                ("S", GEN_S, (da, db, *red(-ca, -cb))),
                ("T", GEN_T, (ca, cb, *red(da + cb, db + ca + cb))),
            )
            for name, gen, pt in neighbors:
                if pt not in index_of:
                    token: Token = (name, 1)
                    register(pt, reps[i] * gen, words[i] + (token,))
                    queue.append(pt)

        if len(points) != expected:
            raise IntegrityError(
                f"orbit has {len(points)} classes but the index formula "
                f"gives {expected}"
            )

        order = sorted(range(len(points)), key=lambda i: minkeys[i])
        perm = {old: new for new, old in enumerate(order)}
        self.points = [points[i] for i in order]
        self.reps = [reps[i] for i in order]
        self.rep_words = [words[i] for i in order]
        self._index_of = {k: perm[v] for k, v in index_of.items()}
        self.action = {
            "S": [0] * len(points),
            "T": [0] * len(points),
        }
        for new_i, pt in enumerate(self.points):
            ca, cb, da, db = pt
            s_pt = (da, db, *red(-ca, -cb))
            t_pt = (ca, cb, *red(da + cb, db + ca + cb))
            self.action["S"][new_i] = self._index_of[s_pt]
            self.action["T"][new_i] = self._index_of[t_pt]

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def locate(self, m: GMatrix) -> int:
        """Class index of the coset containing ``m`` (assumed in the group)."""
        c, d = self.ctx.reduce(m.c), self.ctx.reduce(m.d)
        try:
            return self._index_of[(c.a, c.b, d.a, d.b)]
        except KeyError:
            raise ValueError("bottom row is not in the coset orbit") from None


def coset_table(modulus: RingElt, max_points: int = 10_000) -> CosetTable:
    return CosetTable(modulus, max_points=max_points)


# --- shear families ----------------------------------------------------------------


@dataclass(frozen=True)
class ShearPair:
    """The element T**x * Low**y with Low = [[1, 0], [n*L, 1]].

    ``n`` is the smallest positive rational integer divisible by the level.
    """

    x: int
    y: int
    n: int

    @classmethod
    def from_level(cls, x: int, y: int, level: RingElt) -> "ShearPair":
        return cls(x, y, smallest_rational_integer(level))

    def matrix(self) -> GMatrix:
        low = GMatrix(ONE, ZERO, RingElt(0, self.n * self.y), ONE)
        return t_power(self.x) * low


def shear_coset_equal(
    e1: ShearPair, e2: ShearPair, m: int, level: RingElt
) -> bool:
    """Left-coset equality of two shear elements modulo 3**m times the level.

    Exact criterion: y1 == y2 and y**2 (x1 - x2) == 0 modulo 3**m.  Defined
    for levels coprime to 3 and indices 0 <= x, y < 3**m with y coprime to 3;
    equality means inverse(e2) * e1 lies in the level-(3**m * level) subgroup.
    """
    if m < 1:
        raise BadRangeError("exponent m must be at least 1")
    if gcd(level, RingElt(3, 0)) != ONE:
        raise BadRangeError("level must be coprime to 3")
    n = smallest_rational_integer(level)
    if e1.n != n or e2.n != n:
        raise BadRangeError("shear pairs do not match the level")
    q = 3**m
    for e in (e1, e2):
        if not (0 <= e.x < q and 0 <= e.y < q):
            raise BadRangeError("indices must lie in [0, 3**m)")
        if e.y % 3 == 0:
            raise BadRangeError("y must be coprime to 3")
    return (e1.y - e2.y) % q == 0 and (e1.y * e1.y * (e1.x - e2.x)) % q == 0


# --- sampling ------------------------------------------------------------------------


def sample_words(
    generators: Sequence[GMatrix],
    count: int,
    seed: int,
    max_len: int = 12,
) -> list[GMatrix]:
    """Reproducible random products of the generators and their inverses."""
    if count < 1:
        raise BadRangeError("count must be at least 1")
    rng = random.Random(seed)
    pool = list(generators) + [g.inverse() for g in generators]
    out = []
    for _ in range(count):
        m = IDENTITY
        for _ in range(rng.randint(1, max_len)):
            m = m * rng.choice(pool)
        out.append(m)
    return out


def sample_subgroup(modulus: RingElt, count: int, seed: int) -> list[GMatrix]:
    """Random elements of the level-``modulus`` subgroup.

    Words in T and the lower shear [[1, 0], [n*L, 1]] (n the smallest rational
    integer of the level), so every output lies in the subgroup by
    construction.  The sample spans the subgroup these two elements generate,
    which need not be all of it.
    """
    low = GMatrix(ONE, ZERO, RingElt(0, smallest_rational_integer(modulus)), ONE)
    return sample_words((GEN_T, low), count, seed)


#: Generating set of the level-2 subgroup: T and two explicit hyperbolics.
G0_2_GENERATORS: tuple[GMatrix, ...] = (
    GEN_T,
    GMatrix(RingElt(1, 2), RingElt(-2, -1), RingElt(2, 2), RingElt(-1, -2)),
    GMatrix(RingElt(1, 2), RingElt(0, -1), RingElt(0, 2), RingElt(-1, 0)),
)
