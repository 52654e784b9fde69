"""The action of gl(n) on spans of tableaux.

Chevalley generators act through the explicit Gelfand-Tsetlin formulas;
E_ij with |i - j| > 1 is built from them by the commutator recursion
E_ij = [E_{i,j-1}, E_{j-1,j}] (j > i + 1) and E_ij = [E_{i,i-1}, E_{i-1,j}]
(i > j + 1). Products of generators act rightmost factor first.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from django.db import models

from core.exceptions import BoundsError, DomainError
from core.tableaux import Tableau, require_generic
from core.vectors import GTVector
from findim.standard import is_standard


class ActionMode(models.TextChoices):
    GENERIC = 'generic', 'Generic'
    STANDARD = 'standard', 'Standard'


@dataclass(frozen=True, order=True)
class GeneratorIndex:
    """The elementary matrix E_ij"""
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise BoundsError(f"E_{self.i}{self.j}: indices start at 1")

    def check(self, n):
        if self.i > n or self.j > n:
            raise BoundsError(f"{self} is not an element of gl({n})")
        return self

    def __str__(self):
        return f"E_{self.i},{self.j}"


def E(i, j):
    return GeneratorIndex(i, j)


def all_generators(n):
    return [GeneratorIndex(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def chevalley_generators(n):
    """E_{k,k+1}, E_{k+1,k} and E_kk: enough to generate U(gl(n))"""
    generators = [GeneratorIndex(k, k) for k in range(1, n + 1)]
    for k in range(1, n):
        generators += [GeneratorIndex(k, k + 1), GeneratorIndex(k + 1, k)]
    return generators


def _product(values):
    result = Fraction(1)
    for value in values:
        result *= value
    return result


def _denominator(t, k, i, mode):
    row = t.row(k)
    value = _product(row[i - 1] - row[j - 1] for j in range(1, k + 1) if j != i)
    if not value:
        raise DomainError(
            f"row {k} of ({t}) repeats entry {i}; "
            f"the {mode.label.lower()} formulas divide by zero")
    return value


def _keep(target, mode):
    return mode != ActionMode.STANDARD or is_standard(target)


def _raising_terms(t, k, mode):
    terms = []
    for i in range(1, k + 1):
        r_ki = t.entry(k, i)
        numerator = _product(r_ki - t.entry(k + 1, j) for j in range(1, k + 2))
        if not numerator:
            continue
        target = t.moved(k, i, 1)
        if not _keep(target, mode):
            continue
        terms.append((target.shift, -numerator / _denominator(t, k, i, mode)))
    return terms


def _lowering_terms(t, k, mode):
    terms = []
    for i in range(1, k + 1):
        r_ki = t.entry(k, i)
        numerator = _product(r_ki - t.entry(k - 1, j) for j in range(1, k))
        if not numerator:
            continue
        target = t.moved(k, i, -1)
        if not _keep(target, mode):
            continue
        terms.append((target.shift, numerator / _denominator(t, k, i, mode)))
    return terms


def _cartan_scalar(t, k):
    upper = sum(t.row(k), Fraction(0))
    lower = sum(t.row(k - 1), Fraction(0)) if k > 1 else Fraction(0)
    return k - 1 + upper - lower


def _compose(t, outer, inner, mode):
    """outer(inner(t)) as accumulated (shift, coefficient) pairs"""
    pairs = []
    for shift, c in _basis_action(t, inner, mode):
        for target, d in _basis_action(Tableau(t.seed, shift), outer, mode):
            pairs.append((target, c * d))
    return pairs


@lru_cache(maxsize=1 << 18)
def _basis_action(t, g, mode):
    """E_ij applied to one tableau, as a tuple of (shift, coefficient)"""
    i, j = g.i, g.j
    if i == j:
        scalar = _cartan_scalar(t, i)
        pairs = [(t.shift, scalar)] if scalar else []
    elif j == i + 1:
        pairs = _raising_terms(t, i, mode)
    elif i == j + 1:
        pairs = _lowering_terms(t, j, mode)
    else:
        if j > i + 1:
            a, b = GeneratorIndex(i, j - 1), GeneratorIndex(j - 1, j)
        else:
            a, b = GeneratorIndex(i, i - 1), GeneratorIndex(i - 1, j)
        pairs = _compose(t, a, b, mode)
        pairs += [(s, -c) for s, c in _compose(t, b, a, mode)]
    return tuple(GTVector.accumulate(t.seed, pairs).items())


def _require_mode(seed, mode):
    mode = ActionMode(mode)
    if mode == ActionMode.GENERIC:
        require_generic(seed)
    return mode


def _require_row(t, k, last):
    if not 1 <= k <= last:
        raise BoundsError(f"row index {k} outside 1..{last} for n={t.n}")


def act_raising(k, t, mode=ActionMode.GENERIC):
    """E_{k,k+1} T(R)"""
    _require_row(t, k, t.n - 1)
    mode = _require_mode(t.seed, mode)
    return GTVector.accumulate(t.seed, _basis_action(t, GeneratorIndex(k, k + 1), mode))


def act_lowering(k, t, mode=ActionMode.GENERIC):
    """E_{k+1,k} T(R)"""
    _require_row(t, k, t.n - 1)
    mode = _require_mode(t.seed, mode)
    return GTVector.accumulate(t.seed, _basis_action(t, GeneratorIndex(k + 1, k), mode))


def act_cartan(k, t):
    """The eigenvalue of E_kk on T(R)"""
    _require_row(t, k, t.n)
    return _cartan_scalar(t, k)


def act(g, v, mode=ActionMode.GENERIC):
    """Linear extension of E_ij to a GTVector"""
    g.check(v.seed.n)
    mode = _require_mode(v.seed, mode)
    pairs = []
    for shift, c in v.items():
        t = Tableau(v.seed, shift)
        pairs.extend((target, c * d) for target, d in _basis_action(t, g, mode))
    return GTVector.accumulate(v.seed, pairs)


def act_word(word, v, mode=ActionMode.GENERIC):
    """word[0] word[1] ... word[-1] applied to v; the last factor acts first"""
    for g in reversed(list(word)):
        if v.is_zero():
            break
        v = act(g, v, mode)
    return v


def commutator_defect(a, b, v, mode=ActionMode.GENERIC):
    """[E_ij, E_kl] v - (delta_jk E_il - delta_li E_kj) v; zero on every module"""
    defect = act(a, act(b, v, mode), mode) - act(b, act(a, v, mode), mode)
    if a.j == b.i:
        defect = defect - act(GeneratorIndex(a.i, b.j), v, mode)
    if b.j == a.i:
        defect = defect + act(GeneratorIndex(b.i, a.j), v, mode)
    return defect
