"""Counting the irreducible modules of a generic block.

A generic block holds prod_{p,u} (d_pu + 1) irreducible modules, one per
Omega+ class of B(T(L)). enumerate_omega_classes is the brute-force census
that checks this count on a box.
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from core.conf import gt_setting
from core.exceptions import BoundsError
from core.omega import OmegaSet, OmegaTriple, omega_plus_set, omega_profile
from core.tableaux import Seed, Shift, require_generic, shift_length

from .boxes import Box

logger = logging.getLogger(__name__)


def _check_pair(n, p, u):
    if not 2 <= p <= n or not 1 <= u <= p - 1:
        raise BoundsError(f"(p, u) = ({p}, {u}) needs 2 <= p <= {n} and 1 <= u <= p - 1")


def pairs(n):
    """Every (p, u) with 2 <= p <= n and 1 <= u <= p - 1, top row first"""
    return [(p, u) for p in range(n, 1, -1) for u in range(1, p)]


def linked_positions(seed, p, u):
    """Positions s with (p, s, u) in Omega, keeping the first of each value"""
    _check_pair(seed.n, p, u)
    omega = omega_profile(seed).omega
    positions, values = [], set()
    for s in range(1, p + 1):
        if OmegaTriple(p, s, u) in omega:
            value = seed.entry(p, s)
            if value not in values:
                values.add(value)
                positions.append(s)
    return positions


def d_pu(seed, p, u):
    """Number of distinct r_ps integrally linked to r_{p-1,u}"""
    return len(linked_positions(seed, p, u))


def d_table(seed):
    return {(p, u): d_pu(seed, p, u) for p, u in pairs(seed.n)}


def block_count(seed):
    require_generic(seed)
    return math.prod(d + 1 for d in d_table(seed).values())


def class_signature(t):
    """For each (p, u), how many distinct linked values of row p lie at or
    above r_{p-1,u}; ranges over 0..d_pu and determines Omega+(t)"""
    plus = omega_plus_set(t)
    signature = {}
    for p, u in pairs(t.n):
        values = {t.entry(p, triple.s) for triple in plus if triple.p == p and triple.u == u}
        signature[(p, u)] = len(values)
    return signature


def sufficient_radius(seed):
    """A box radius around the zero shift that meets every Omega+ class"""
    profile = omega_profile(seed)
    if not profile.entries:
        return 0
    return (seed.n - 1) * (profile.max_abs_value + 1)


@dataclass
class ClassPoset:
    """Distinct Omega+ sets met in a box. Each is labelled by the
    lexicographically first shift of the census scan, which varies only the
    coordinates in `varied` and holds the others at the box centre. An edge
    (A, B) means A is covered by B under strict inclusion, that is U T(B) is
    a maximal submodule of U T(A) among the classes found."""
    seed: Seed
    box: Box
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    scanned: int = 0
    varied: tuple = ()
    skipped: bool = False

    @property
    def node_count(self):
        return len(self.nodes)

    def representative(self, omega_plus):
        for plus, shift in self.nodes:
            if plus == omega_plus:
                return shift
        raise KeyError(omega_plus)


def _cover_edges(sets):
    edges = []
    for a in sets:
        for b in sets:
            if a < b and not any(a < c < b for c in sets):
                edges.append((a, b))
    return sorted(edges, key=lambda edge: (edge[0].canonical(), edge[1].canonical()))


def enumerate_omega_classes(seed, box, cap=None):
    """Census of Omega+ classes over the box.

    Only the coordinates that occur in some triple of Omega are varied; the
    rest cannot change Omega+ and stay at the box centre. Scans larger than
    cap are not run and come back with skipped=True.
    """
    require_generic(seed)
    if len(box.lower) != shift_length(seed.n):
        raise BoundsError(f"box {box} does not fit the shift lattice of n={seed.n}")
    cap = gt_setting('CENSUS_SHIFT_CAP') if cap is None else cap
    profile = omega_profile(seed)
    varied = tuple(profile.involved_coordinates())
    size = math.prod(box.upper[i] - box.lower[i] + 1 for i in varied)
    poset = ClassPoset(seed=seed, box=box, varied=varied)
    if size > cap:
        logger.warning("census of (%s) skipped: %d shifts exceed the cap %d", seed, size, cap)
        poset.skipped = True
        return poset

    center = np.array(box.center.entries, dtype=np.int64)
    grid = np.stack(
        np.meshgrid(*[np.arange(box.lower[i], box.upper[i] + 1) for i in varied], indexing='ij'),
        axis=-1,
    ).reshape(-1, len(varied)) if varied else np.zeros((1, 0), dtype=np.int64)
    shifts = np.tile(center, (grid.shape[0], 1))
    shifts[:, list(varied)] = grid

    columns = []
    for _, base, upper, lower in profile.entries:
        value = base - shifts[:, lower]
        if upper is not None:
            value = value + shifts[:, upper]
        columns.append(value >= 0)
    if columns:
        patterns, first = np.unique(np.stack(columns, axis=1), axis=0, return_index=True)
    else:
        patterns, first = [()], [0]

    triples = [triple for triple, *_ in profile.entries]
    nodes = []
    for pattern, index in zip(patterns, first):
        plus = OmegaSet(triple for triple, member in zip(triples, pattern) if member)
        nodes.append((plus, Shift(tuple(int(z) for z in shifts[index]))))
    nodes.sort(key=lambda node: node[1])
    poset.nodes = nodes
    poset.edges = _cover_edges([plus for plus, _ in nodes])
    poset.scanned = int(grid.shape[0])
    logger.debug("census of (%s): %d shifts, %d classes", seed, poset.scanned, len(nodes))
    return poset


def census(seed, radius=None, cap=None):
    """enumerate_omega_classes on the box of the given (or sufficient) radius
    around the zero shift"""
    radius = sufficient_radius(seed) if radius is None else radius
    return enumerate_omega_classes(seed, Box.around(Shift.zero(seed.n), radius), cap)
