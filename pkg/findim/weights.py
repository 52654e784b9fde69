"""Finite-dimensional modules L(lambda) and their standard-tableau bases."""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from action.formulas import act_cartan
from core.exceptions import DomainError
from core.tableaux import Seed, Shift

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HighestWeight:
    """An integral dominant weight lambda_1 >= ... >= lambda_n"""
    lam: tuple

    def __post_init__(self):
        lam = tuple(self.lam)
        if len(lam) < 2:
            raise DomainError("a highest weight needs n >= 2 components")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in lam):
            raise DomainError(f"only integral weights are supported, got {lam}")
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise DomainError(f"weight {lam} is not dominant (weakly decreasing)")
        object.__setattr__(self, 'lam', lam)

    @property
    def n(self):
        return len(self.lam)

    @property
    def top_row(self):
        """l_{n,j} = lambda_j - j + 1"""
        return tuple(x - j for j, x in enumerate(self.lam))

    def __str__(self):
        return '(' + ','.join(str(x) for x in self.lam) + ')'


def highest_weight_seed(lam):
    """The maximal tableau l_{k,i} = l_{n,i}; standard tableaux of lam are
    its shifts"""
    top = lam.top_row
    return Seed(tuple(top[:k] for k in range(lam.n, 0, -1)))


def highest_weight_tableau(lam):
    return highest_weight_seed(lam).tableau()


def _rows_below(upper):
    """Every row interlacing upper: upper[i] >= row[i] > upper[i + 1]"""
    ranges = [range(upper[i + 1] + 1, upper[i] + 1) for i in range(len(upper) - 1)]
    return itertools.product(*ranges)


def standard_tableaux(lam):
    """All standard tableaux with top row lam.top_row, lexicographic on the
    entries read from row n-1 down to row 1"""
    seed = highest_weight_seed(lam)
    found = []

    def extend(rows):
        if len(rows) == lam.n:
            entries = tuple(
                int(x - top)
                for row, base in zip(rows[1:], seed.rows[1:])
                for x, top in zip(row, base)
            )
            found.append(seed.tableau(Shift(entries)))
            return
        for row in _rows_below(rows[-1]):
            extend(rows + [row])

    extend([lam.top_row])
    logger.debug("L%s: %d standard tableaux", lam, len(found))
    return found


def weyl_dimension(lam):
    """prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)"""
    dimension = Fraction(1)
    for i, j in itertools.combinations(range(lam.n), 2):
        dimension *= Fraction(lam.lam[i] - lam.lam[j] + j - i, j - i)
    return int(dimension)


def weight_of(t):
    """The E_kk eigenvalues of t, k = 1..n"""
    return tuple(act_cartan(k, t) for k in range(1, t.n + 1))


def dominant_weights(n, width):
    """Every lambda with lambda_n = 0 and lambda_1 <= width, in lexicographic order"""
    weights = [
        HighestWeight(tuple(sorted(head, reverse=True)) + (0,))
        for head in itertools.combinations_with_replacement(range(width + 1), n - 1)
    ]
    return sorted(weights, key=lambda w: w.lam)
