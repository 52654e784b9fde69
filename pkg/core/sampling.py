"""Reproducible random seeds and shifts for the verification corpora."""
from fractions import Fraction

import numpy as np

from .conf import gt_setting
from .exceptions import DomainError
from .omega import omega_profile
from .tableaux import Seed, Shift, shift_length


def make_rng(seed=None):
    return np.random.default_rng(gt_setting('DEFAULT_RNG_SEED') if seed is None else seed)


def random_generic_seed(n, rng, denominator=None, spread=None):
    """A generic seed whose entries are integers plus residues mod denominator.

    Rows below the top take pairwise distinct residues, so their entries
    never differ by an integer; the top row draws residues freely. A small
    denominator makes integer links across rows (a nonempty Omega) common.
    """
    denominator = denominator or gt_setting('SEED_DENOMINATOR')
    spread = gt_setting('SEED_SPREAD') if spread is None else spread
    if denominator < n - 1:
        raise DomainError(
            f"denominator {denominator} cannot give {n - 1} distinct residues")
    rows = []
    for k in range(n, 0, -1):
        if k == n:
            residues = rng.integers(0, denominator, size=k)
        else:
            residues = rng.choice(denominator, size=k, replace=False)
        integer_parts = rng.integers(-spread, spread + 1, size=k)
        rows.append(tuple(
            Fraction(int(whole) * denominator + int(residue), denominator)
            for whole, residue in zip(integer_parts, residues)
        ))
    return Seed(tuple(rows))


def random_shift(n, rng, radius):
    return Shift(tuple(int(z) for z in rng.integers(-radius, radius + 1, size=shift_length(n))))


def random_generic_seeds(n, count, rng, nonempty_omega=False, **kwargs):
    """count random generic seeds; with nonempty_omega, redraw until Omega is nonempty"""
    seeds = []
    while len(seeds) < count:
        seed = random_generic_seed(n, rng, **kwargs)
        if nonempty_omega and not omega_profile(seed).entries:
            continue
        seeds.append(seed)
    return seeds
