"""Generators c_mk of the Gelfand-Tsetlin subalgebra and their eigenvalues.

c_mk is the sum, over all index tuples (i_1, ..., i_k) in {1..m}^k, of the
products E_{i_1 i_2} E_{i_2 i_3} ... E_{i_k i_1}. Every tableau is an
eigenvector of c_mk with eigenvalue gamma_mk.
"""
import itertools
import logging
from fractions import Fraction

from core.exceptions import BoundsError, DomainError
from core.vectors import GTVector

from .formulas import ActionMode, GeneratorIndex, act_word

logger = logging.getLogger(__name__)


def _check_indices(m, k, n):
    if not 1 <= k <= m <= n:
        raise BoundsError(f"c_{m},{k} needs 1 <= k <= m <= n={n}")


def gamma_eigenvalue(m, k, t):
    """sum_i (r_mi + m - 1)^k prod_{j != i} (1 - 1/(r_mi - r_mj))"""
    _check_indices(m, k, t.n)
    row = t.row(m)
    total = Fraction(0)
    for i, r_i in enumerate(row):
        term = (r_i + m - 1) ** k
        for j, r_j in enumerate(row):
            if i == j:
                continue
            if r_i == r_j:
                raise DomainError(f"gamma_{m},{k} is undefined: row {m} of ({t}) repeats {r_i}")
            term *= 1 - 1 / (r_i - r_j)
        total += term
    return total


def gamma_words(m, k):
    """The m^k cyclic words E_{i_1 i_2}, ..., E_{i_k i_1} that sum to c_mk"""
    for indices in itertools.product(range(1, m + 1), repeat=k):
        yield [
            GeneratorIndex(indices[a], indices[(a + 1) % k]) for a in range(k)
        ]


def act_gamma_generator(m, k, v, mode=ActionMode.GENERIC):
    _check_indices(m, k, v.seed.n)
    result = GTVector.zero(v.seed)
    count = 0
    for word in gamma_words(m, k):
        result = result + act_word(word, v, mode)
        count += 1
    logger.debug("c_%d,%d: summed %d words over %d terms", m, k, count, len(v))
    return result
