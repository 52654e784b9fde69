"""Relation and Gamma-eigenvalue suites for the action engine."""
import logging

from core.reports import SuiteReport
from core.vectors import GTVector

from .formulas import ActionMode, all_generators, commutator_defect
from .gamma import act_gamma_generator, gamma_eigenvalue

logger = logging.getLogger(__name__)


def _has_repeated_entries(row):
    return len(set(row)) < len(row)


def relation_report(tableaux, mode=ActionMode.GENERIC, report=None):
    """commutator_defect over all n^4 generator pairs on each tableau"""
    report = report or SuiteReport('relations')
    for t in tableaux:
        generators = all_generators(t.n)
        v = GTVector.basis(t)
        broken = [
            f"[{a},{b}]"
            for a in generators
            for b in generators
            if not commutator_defect(a, b, v, mode).is_zero()
        ]
        report.check(str(t), not broken, ' '.join(broken))
    return report


def gamma_report(tableaux, mode=ActionMode.GENERIC, report=None):
    """c_mk T = gamma_mk T for every 1 <= k <= m <= n"""
    report = report or SuiteReport('gamma')
    for t in tableaux:
        v = GTVector.basis(t)
        wrong = []
        for m in range(1, t.n + 1):
            if _has_repeated_entries(t.row(m)):
                report.skip('repeated row entries', m)
                continue
            for k in range(1, m + 1):
                expected = gamma_eigenvalue(m, k, t) * v
                if act_gamma_generator(m, k, v, mode) != expected:
                    wrong.append(f"c_{m},{k}")
        report.check(str(t), not wrong, ' '.join(wrong))
    logger.debug("gamma suite: %d tableaux, skipped %s", len(report.records), report.skipped)
    return report
