"""Seeds, integer shifts and the tableaux of the lattice B(T(L)).

A seed is stored top row first:
``rows[0]`` is row n (n entries) and ``rows[-1]`` is row 1. Shift
coordinates run over rows n-1 down to 1, left to right; the top row is never
shifted. A tableau is a (seed, shift) pair and its entries are derived on
demand.
"""
import logging
import operator
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import BoundsError, DomainError, SeedMismatchError
from .rationals import as_rational, is_integer

logger = logging.getLogger(__name__)


def shift_length(n):
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def shift_coordinates(n):
    """(row, column) of every shift coordinate, in canonical order"""
    return tuple((p, s) for p in range(n - 1, 0, -1) for s in range(1, p + 1))


@lru_cache(maxsize=None)
def _coordinate_lookup(n):
    return {coordinate: index for index, coordinate in enumerate(shift_coordinates(n))}


def coordinate_index(n, p, s):
    """Position of z_{ps} in a Shift of an n-row tableau"""
    try:
        return _coordinate_lookup(n)[(p, s)]
    except KeyError:
        raise BoundsError(
            f"({p},{s}) is not a shift coordinate for n={n}") from None


def n_from_shift_length(length):
    n = 1
    while shift_length(n) < length:
        n += 1
    if shift_length(n) != length:
        raise BoundsError(f"{length} is not a valid shift length n(n-1)/2")
    return n


@dataclass(frozen=True, order=True)
class Shift:
    """Integer vector z with the top row pinned to zero"""
    entries: tuple

    def __post_init__(self):
        try:
            entries = tuple(operator.index(z) for z in self.entries)
        except TypeError:
            raise DomainError(f"shift entries must be integers: {self.entries!r}") from None
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def zero(cls, n):
        return cls((0,) * shift_length(n))

    @classmethod
    def unit(cls, n, p, s, amount=1):
        """amount * delta^{ps}"""
        entries = [0] * shift_length(n)
        entries[coordinate_index(n, p, s)] = amount
        return cls(tuple(entries))

    @property
    def n(self):
        return n_from_shift_length(len(self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __add__(self, other):
        if not isinstance(other, Shift):
            return NotImplemented
        if len(other) != len(self):
            raise SeedMismatchError("cannot add shifts of different lengths")
        return Shift(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, Shift):
            return NotImplemented
        if len(other) != len(self):
            raise SeedMismatchError("cannot subtract shifts of different lengths")
        return Shift(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Shift(tuple(-z for z in self.entries))

    def at(self, p, s):
        return self.entries[coordinate_index(self.n, p, s)]

    @property
    def l1_norm(self):
        return sum(abs(z) for z in self.entries)

    def nonzero_coordinates(self):
        n = self.n
        return [
            coordinate for coordinate, z in zip(shift_coordinates(n), self.entries) if z]


@dataclass(frozen=True)
class Seed:
    """The fixed tableau T(L) that anchors a lattice of tableaux"""
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.rows)
        n = len(rows)
        if n < 2:
            raise DomainError("a seed needs at least two rows (n >= 2)")
        for offset, row in enumerate(rows):
            if len(row) != n - offset:
                raise DomainError(
                    f"row {n - offset} must hold {n - offset} entries, got {len(row)}")
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, '_hash', hash(rows))

    def __hash__(self):
        return self._hash

    @classmethod
    def from_rows(cls, *rows):
        return cls(tuple(rows))

    @classmethod
    def from_tableau(cls, tableau):
        """Rebase: the seed whose rows are the entries of tableau"""
        return cls(tableau.rows)

    @property
    def n(self):
        return len(self.rows)

    @property
    def top_row(self):
        return self.rows[0]

    def row(self, p):
        if not 1 <= p <= self.n:
            raise BoundsError(f"row {p} out of range 1..{self.n}")
        return self.rows[self.n - p]

    def entry(self, p, s):
        row = self.row(p)
        if not 1 <= s <= p:
            raise BoundsError(f"column {s} out of range 1..{p} in row {p}")
        return row[s - 1]

    def tableau(self, shift=None):
        return Tableau(self, Shift.zero(self.n) if shift is None else shift)

    def __str__(self):
        return ' | '.join(', '.join(str(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class Tableau:
    """T(L + z): a point of the lattice B(T(L))"""
    seed: Seed
    shift: Shift

    def __post_init__(self):
        if not isinstance(self.shift, Shift):
            object.__setattr__(self, 'shift', Shift(tuple(self.shift)))
        if len(self.shift) != shift_length(self.seed.n):
            raise BoundsError(
                f"shift has {len(self.shift)} coordinates, "
                f"expected {shift_length(self.seed.n)} for n={self.seed.n}")

    @property
    def n(self):
        return self.seed.n

    def entry(self, p, s):
        value = self.seed.entry(p, s)
        if p == self.n:
            return value
        return value + self.shift.entries[coordinate_index(self.n, p, s)]

    def row(self, p):
        return tuple(self.entry(p, s) for s in range(1, p + 1))

    @property
    def rows(self):
        return tuple(self.row(p) for p in range(self.n, 0, -1))

    def shifted(self, delta):
        return Tableau(self.seed, self.shift + delta)

    def moved(self, p, s, amount=1):
        """T(R + amount * delta^{ps})"""
        return self.shifted(Shift.unit(self.n, p, s, amount))

    def __str__(self):
        return ' | '.join(', '.join(str(x) for x in row) for row in self.rows)


def entry(t, p, s):
    """l_{ps} + z_{ps}; the top row is never shifted"""
    return t.entry(p, s)


def require_same_seed(*items):
    seeds = {item.seed for item in items}
    if len(seeds) > 1:
        raise SeedMismatchError("tableaux come from different seeds")
    return seeds.pop()


@lru_cache(maxsize=4096)
def is_generic(seed):
    """No two entries of a row below the top differ by an integer"""
    for p in range(1, seed.n):
        row = seed.row(p)
        for i in range(len(row)):
            for j in range(i + 1, len(row)):
                if is_integer(row[i] - row[j]):
                    logger.debug("seed %s: row %d entries %d,%d differ by an integer",
                                 seed, p, i + 1, j + 1)
                    return False
    return True


def require_generic(seed):
    if not is_generic(seed):
        raise DomainError(f"seed ({seed}) is not generic")


def shift_distance(a, b):
    """l1 distance between two tableaux of one lattice"""
    require_same_seed(a, b)
    return (a.shift - b.shift).l1_norm
