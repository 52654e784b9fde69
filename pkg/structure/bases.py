"""Bases of submodules of V(T(L)) restricted to a box.

U T(R) has the basis N(T(R)) of tableaux Q with Omega+(R) inside
Omega+(Q); the irreducible module containing T(R) has the basis I(T(R))
of tableaux with Omega+(Q) = Omega+(R).
"""
import logging

from core.exceptions import BoundsError
from core.omega import OmegaSet, omega_plus_set, omega_profile, same_class
from core.tableaux import require_generic, require_same_seed, shift_length

logger = logging.getLogger(__name__)


def _scan(seed, box):
    """(tableau, Omega+) over the box, lexicographically by shift"""
    require_generic(seed)
    if len(box.lower) != shift_length(seed.n):
        raise BoundsError(f"box {box} does not fit the shift lattice of n={seed.n}")
    profile = omega_profile(seed)
    logger.debug("scanning %d shifts of %s", box.size, box)
    for t in box.tableaux(seed):
        yield t, profile.plus_set(t.shift)


def basis_N_in_box(r, box):
    target = omega_plus_set(r)
    return [q for q, plus in _scan(r.seed, box) if target <= plus]


def basis_I_in_box(r, box):
    target = omega_plus_set(r)
    return [q for q, plus in _scan(r.seed, box) if plus == target]


def maximal_submodule_basis_in_box(r, box):
    """Tableaux of the unique maximal submodule of U T(R) inside the box"""
    target = omega_plus_set(r)
    return [q for q, plus in _scan(r.seed, box) if target < plus]


def class_partition(seed, box):
    """The box split into I-classes, keyed by their common Omega+"""
    classes = {}
    for t, plus in _scan(seed, box):
        classes.setdefault(plus, []).append(t.shift)
    return {key: classes[key] for key in sorted(classes, key=OmegaSet.canonical)}


def submodule_generators(tableaux):
    """One tableau per minimal Omega+ class; together they generate the
    same submodule as the whole collection"""
    tableaux = sorted(tableaux, key=lambda t: t.shift)
    if not tableaux:
        return []
    require_generic(require_same_seed(*tableaux))
    representatives = {}
    for t in tableaux:
        representatives.setdefault(omega_plus_set(t), t)
    minimal = [
        plus for plus in representatives
        if not any(other < plus for other in representatives)
    ]
    return [representatives[plus] for plus in sorted(minimal, key=OmegaSet.canonical)]


def generates_same_submodule(t1, t2):
    require_generic(require_same_seed(t1, t2))
    return same_class(t1, t2)
