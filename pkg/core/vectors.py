"""Finite linear combinations of tableaux: the elements of V(T(L))."""
from fractions import Fraction
from types import MappingProxyType

from .exceptions import SeedMismatchError
from .rationals import as_rational
from .tableaux import Shift, Tableau


class GTVector:
    """A sparse vector over one seed with exact coefficients.

    Zero coefficients are never stored, so the support is canonical and
    "appears with nonzero coefficient" is plain membership.
    """

    __slots__ = ('seed', '_terms')

    def __init__(self, seed, terms=None):
        clean = {}
        for shift, coefficient in (terms or {}).items():
            if not isinstance(shift, Shift):
                shift = Shift(tuple(shift))
            coefficient = as_rational(coefficient)
            if coefficient:
                clean[shift] = clean.get(shift, 0) + coefficient
        self.seed = seed
        self._terms = {shift: c for shift, c in clean.items() if c}

    @classmethod
    def _wrap(cls, seed, terms):
        # terms must already be zero-free with Shift keys
        vector = cls.__new__(cls)
        vector.seed = seed
        vector._terms = terms
        return vector

    @classmethod
    def zero(cls, seed):
        return cls._wrap(seed, {})

    @classmethod
    def basis(cls, tableau, coefficient=1):
        coefficient = as_rational(coefficient)
        terms = {tableau.shift: coefficient} if coefficient else {}
        return cls._wrap(tableau.seed, terms)

    @classmethod
    def accumulate(cls, seed, pairs):
        """Sum (shift, coefficient) pairs, dropping whatever cancels"""
        terms = {}
        for shift, coefficient in pairs:
            terms[shift] = terms.get(shift, 0) + coefficient
        return cls._wrap(seed, {s: Fraction(c) for s, c in terms.items() if c})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, tableau):
        if isinstance(tableau, Tableau):
            if tableau.seed != self.seed:
                raise SeedMismatchError("tableau and vector come from different seeds")
            tableau = tableau.shift
        return self._terms.get(tableau, Fraction(0))

    def support(self):
        return frozenset(self._terms)

    def tableaux(self):
        """Tableaux of the support in canonical (lexicographic shift) order"""
        return [Tableau(self.seed, shift) for shift in sorted(self._terms)]

    def items(self):
        """(shift, coefficient) pairs in canonical order"""
        return [(shift, self._terms[shift]) for shift in sorted(self._terms)]

    def is_zero(self):
        return not self._terms

    def _check(self, other):
        if not isinstance(other, GTVector):
            return False
        if other.seed != self.seed:
            raise SeedMismatchError("vectors come from different seeds")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        terms = dict(self._terms)
        for shift, c in other._terms.items():
            total = terms.get(shift, 0) + c
            if total:
                terms[shift] = total
            else:
                terms.pop(shift, None)
        return GTVector._wrap(self.seed, terms)

    def __neg__(self):
        return GTVector._wrap(self.seed, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        scalar = as_rational(scalar)
        if not scalar:
            return GTVector.zero(self.seed)
        return GTVector._wrap(self.seed, {s: scalar * c for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GTVector):
            return NotImplemented
        return self.seed == other.seed and self._terms == other._terms

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        body = ' + '.join(f"({c})*T{list(s.entries)}" for s, c in self.items())
        return f"GTVector({body or '0'})"
