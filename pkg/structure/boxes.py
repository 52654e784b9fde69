"""Finite windows on the shift lattice Z^{n(n-1)/2}."""
import itertools
import math
from dataclasses import dataclass

from core.exceptions import BoundsError
from core.tableaux import Shift, n_from_shift_length


@dataclass(frozen=True)
class Box:
    """Per-coordinate integer bounds, inclusive on both ends"""
    lower: tuple
    upper: tuple

    def __post_init__(self):
        lower = tuple(int(x) for x in self.lower)
        upper = tuple(int(x) for x in self.upper)
        if len(lower) != len(upper):
            raise BoundsError("box bounds have different lengths")
        if any(lo > hi for lo, hi in zip(lower, upper)):
            raise BoundsError(f"empty box: lower {lower} exceeds upper {upper}")
        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    @classmethod
    def around(cls, center, radius):
        if radius < 0:
            raise BoundsError(f"box radius must be non-negative, got {radius}")
        return cls(
            tuple(z - radius for z in center),
            tuple(z + radius for z in center),
        )

    @property
    def n(self):
        return n_from_shift_length(len(self.lower))

    @property
    def center(self):
        return Shift(tuple((lo + hi) // 2 for lo, hi in zip(self.lower, self.upper)))

    def inflate(self, padding):
        if padding < 0:
            raise BoundsError(f"padding must be non-negative, got {padding}")
        return Box(
            tuple(lo - padding for lo in self.lower),
            tuple(hi + padding for hi in self.upper),
        )

    def contains(self, item):
        shift = getattr(item, 'shift', item)
        return len(shift) == len(self.lower) and all(
            lo <= z <= hi for lo, z, hi in zip(self.lower, shift, self.upper))

    __contains__ = contains

    @property
    def size(self):
        return math.prod(hi - lo + 1 for lo, hi in zip(self.lower, self.upper))

    def shifts(self):
        """Every shift in the box, lexicographically"""
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)]
        for entries in itertools.product(*ranges):
            yield Shift(entries)

    def tableaux(self, seed):
        for shift in self.shifts():
            yield seed.tableau(shift)

    def __str__(self):
        return ' x '.join(f"[{lo},{hi}]" for lo, hi in zip(self.lower, self.upper))
