"""The invariants Omega and Omega+ that classify submodules of V(T(L)).

For a tableau T(R) and a triple (p, s, u) with 1 < p <= n, 1 <= s <= p and
1 <= u <= p - 1, omega_{p,s,u}(T(R)) = r_{p,s} - r_{p-1,u}. Omega collects
the triples with an integer omega, Omega+ those with a non-negative integer
omega.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import BoundsError, SeedMismatchError
from .rationals import is_integer, is_nonnegative_integer
from .tableaux import (
    Seed, Shift, Tableau, coordinate_index, require_generic, require_same_seed,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class OmegaTriple:
    p: int
    s: int
    u: int

    def __post_init__(self):
        if self.p < 2 or not 1 <= self.s <= self.p or not 1 <= self.u <= self.p - 1:
            raise BoundsError(f"({self.p},{self.s},{self.u}) is not a valid omega triple")

    def __iter__(self):
        return iter((self.p, self.s, self.u))

    def __str__(self):
        return f"({self.p},{self.s},{self.u})"


class OmegaSet(frozenset):
    """A set of OmegaTriples with a canonical sorted form"""

    def canonical(self):
        return tuple(sorted(self))

    def as_lists(self):
        return [[t.p, t.s, t.u] for t in self.canonical()]

    def __repr__(self):
        return '{' + ', '.join(str(t) for t in self.canonical()) + '}'


@lru_cache(maxsize=None)
def all_triples(n):
    return tuple(
        OmegaTriple(p, s, u)
        for p in range(2, n + 1)
        for s in range(1, p + 1)
        for u in range(1, p)
    )


def omega_value(t, triple):
    """omega_{p,s,u}(T(R)) = r_{p,s} - r_{p-1,u}"""
    if triple.p > t.n:
        raise BoundsError(f"triple {triple} exceeds n={t.n}")
    return t.entry(triple.p, triple.s) - t.entry(triple.p - 1, triple.u)


def omega_set(t):
    return OmegaSet(
        triple for triple in all_triples(t.n) if is_integer(omega_value(t, triple)))


@dataclass(frozen=True)
class OmegaProfile:
    """Omega(T(L)) with the integer omega values of the unshifted seed.

    Integer shifts move omega_{p,s,u} by z_{p,s} - z_{p-1,u} and never change
    integrality, so Omega+ of any tableau of the lattice can be read off
    with integer arithmetic.
    """
    seed: Seed
    # (triple, base value, index of z_{p,s} or None for the top row, index of z_{p-1,u})
    entries: tuple

    @property
    def omega(self):
        return OmegaSet(triple for triple, *_ in self.entries)

    @property
    def max_abs_value(self):
        return max((abs(base) for _, base, _, _ in self.entries), default=0)

    def plus_set(self, shift):
        z = shift.entries
        return OmegaSet(
            triple for triple, base, upper, lower in self.entries
            if base + (z[upper] if upper is not None else 0) - z[lower] >= 0
        )

    def involved_coordinates(self):
        """Shift coordinates that occur in some triple of Omega"""
        indices = set()
        for _, _, upper, lower in self.entries:
            indices.add(lower)
            if upper is not None:
                indices.add(upper)
        return sorted(indices)


@lru_cache(maxsize=4096)
def omega_profile(seed):
    n = seed.n
    base = seed.tableau()
    entries = []
    for triple in all_triples(n):
        value = omega_value(base, triple)
        if not is_integer(value):
            continue
        upper = None if triple.p == n else coordinate_index(n, triple.p, triple.s)
        lower = coordinate_index(n, triple.p - 1, triple.u)
        entries.append((triple, int(value), upper, lower))
    logger.debug("seed %s: |Omega| = %d", seed, len(entries))
    return OmegaProfile(seed, tuple(entries))


def omega_plus_set(t):
    return omega_profile(t.seed).plus_set(t.shift)


def omega_pu_split(omega):
    """Split Omega into the disjoint pieces Omega_{p,u}"""
    pieces = {}
    for triple in omega:
        pieces.setdefault((triple.p, triple.u), set()).add(triple)
    return {key: OmegaSet(value) for key, value in sorted(pieces.items())}


def same_class(t1, t2):
    """T(Q) ~ T(R) iff their Omega+ sets coincide"""
    require_same_seed(t1, t2)
    return omega_plus_set(t1) == omega_plus_set(t2)


def _row_permutations(seed):
    # the top row first, so G-orbits can be pruned on it
    return [list(itertools.permutations(row)) for row in seed.rows]


def seeds_same_irreducible(s1, s2):
    """Whether T(s1) and T(s2) lie in the same irreducible generic module.

    Searches G = S_n x ... x S_1 for a row-wise permutation g with g.s1 and
    s2 sharing the top row and differing by an integer shift z below it,
    such that T(g.s1) and T(g.s1 + z) have equal Omega+.
    """
    if s1.n != s2.n:
        raise SeedMismatchError(f"seeds have different heights {s1.n} and {s2.n}")
    require_generic(s1)
    require_generic(s2)
    n = s1.n
    permutations = _row_permutations(s1)
    for top in permutations[0]:
        if top != s2.top_row:
            continue
        for lower in itertools.product(*permutations[1:]):
            differences = [
                b - a
                for row_a, row_b in zip(lower, s2.rows[1:])
                for a, b in zip(row_a, row_b)
            ]
            if not all(is_integer(d) for d in differences):
                continue
            permuted = Seed((top,) + tuple(lower))
            z = Shift(tuple(int(d) for d in differences))
            if omega_plus_set(permuted.tableau()) == omega_plus_set(Tableau(permuted, z)):
                return True
    logger.debug("seeds %s and %s: no G-orbit element matched", s1, s2)
    return False


def omega_plus_direct(t):
    """Omega+ straight from the definition; cross-checks the profile"""
    return OmegaSet(
        triple for triple in all_triples(t.n) if is_nonnegative_integer(omega_value(t, triple)))
