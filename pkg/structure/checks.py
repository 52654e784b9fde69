"""Closure, census and chain suites for the submodule structure."""
import logging

from core.exceptions import InvariantViolation
from core.omega import omega_plus_set, omega_profile
from core.reports import SuiteReport
from core.sampling import random_shift
from core.tableaux import Shift

from .bases import basis_N_in_box, class_partition
from .blocks import block_count, census
from .boxes import Box
from .closure import closure_bfs, find_intermediate_index, submodule_path

logger = logging.getLogger(__name__)


def _start_points(shifts, every_member):
    if every_member:
        return list(shifts)
    return list(dict.fromkeys((shifts[0], shifts[-1])))


def closure_report(seeds, radius=2, padding=None, every_member=False, report=None):
    """Per seed: the I-classes partition the box, and the closure from a class
    member equals the N-basis and covers the whole class. Closures start from
    the lexicographically smallest and largest member of each class, or from
    every member with every_member=True."""
    report = report or SuiteReport('closure')
    for seed in seeds:
        box = Box.around(Shift.zero(seed.n), radius)
        partition = class_partition(seed, box)
        members = [shift for shifts in partition.values() for shift in shifts]
        report.check(
            f"({seed}) partition",
            len(members) == box.size and len(set(members)) == box.size,
            f"{len(partition)} classes over {box.size} shifts")
        for shifts in partition.values():
            expected = set(basis_N_in_box(seed.tableau(shifts[0]), box))
            whole_class = {seed.tableau(shift) for shift in shifts}
            for start in _start_points(shifts, every_member):
                reached = closure_bfs(seed.tableau(start), box, padding)
                report.check(
                    f"({seed}) from {list(start)}",
                    reached == expected and whole_class <= reached,
                    f"reached {len(reached)}, N-basis {len(expected)}, class {len(whole_class)}")
    return report


def census_report(seeds, cap=None, report=None):
    """Census node count against block_count at the sufficient radius"""
    report = report or SuiteReport('census')
    for seed in seeds:
        poset = census(seed, cap=cap)
        if poset.skipped:
            report.skip('census cap exceeded')
            continue
        expected = block_count(seed)
        report.check(
            f"({seed})", poset.node_count == expected,
            f"{poset.node_count} classes found, block count {expected}")
    return report


def chain_report(seeds, rng, samples, radius=3, report=None):
    """find_intermediate_index and submodule_path on random (seed, z) pairs
    that satisfy the inclusion precondition"""
    report = report or SuiteReport('chain')
    attempts = 0
    checked = 0
    while checked < samples and attempts < 20 * samples:
        seed = seeds[attempts % len(seeds)]
        attempts += 1
        z = random_shift(seed.n, rng, radius)
        profile = omega_profile(seed)
        start, end = profile.plus_set(Shift.zero(seed.n)), profile.plus_set(z)
        if not z.nonzero_coordinates() or not start <= end:
            report.skip('precondition not met')
            continue
        checked += 1
        subject = f"({seed}) z={list(z)}"
        try:
            p, s = find_intermediate_index(seed, z)
            path = submodule_path(seed.tableau(), seed.tableau(z))
        except InvariantViolation as exc:
            report.check(subject, False, str(exc))
            continue
        middle = profile.plus_set(Shift.unit(seed.n, p, s, z.at(p, s)))
        monotone = all(
            omega_plus_set(a) <= omega_plus_set(b) for a, b in zip(path, path[1:]))
        report.check(
            subject, start <= middle <= end and monotone and len(path) == z.l1_norm + 1,
            f"index ({p},{s}), path of {len(path) - 1} steps")
    if checked < samples:
        logger.warning("chain suite: only %d of %d samples met the precondition", checked, samples)
    return report
