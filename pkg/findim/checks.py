"""The finite-dimensional suite: L(lambda) validates the action engine."""
from action.checks import gamma_report, relation_report
from action.formulas import ActionMode, GeneratorIndex, act, all_generators
from core.reports import SuiteReport
from core.vectors import GTVector

from .standard import is_standard
from .weights import highest_weight_tableau, standard_tableaux, weight_of, weyl_dimension


def findim_report(lam, relations=True, gamma=True, report=None):
    """Dimension, closure, highest weight and (optionally) the relation and
    Gamma suites on the standard basis of L(lambda)"""
    report = report or SuiteReport('findim')
    basis = standard_tableaux(lam)
    dimension = weyl_dimension(lam)
    report.check(
        f"L{lam} dimension", len(basis) == dimension,
        f"{len(basis)} standard tableaux, Weyl dimension {dimension}")

    shifts = {t.shift for t in basis}
    escaped = []
    for t in basis:
        for g in all_generators(lam.n):
            support = act(g, GTVector.basis(t), ActionMode.STANDARD).support()
            if not support <= shifts:
                escaped.append(f"{g} on {list(t.shift)}")
    report.check(f"L{lam} closure", not escaped and all(is_standard(t) for t in basis),
                 ' '.join(escaped))

    top = highest_weight_tableau(lam)
    raised = [
        GeneratorIndex(k, k + 1) for k in range(1, lam.n)
        if not act(GeneratorIndex(k, k + 1), GTVector.basis(top), ActionMode.STANDARD).is_zero()
    ]
    report.check(
        f"L{lam} highest weight",
        not raised and weight_of(top) == lam.lam,
        ' '.join(str(g) for g in raised))

    if relations:
        relation_report(basis, ActionMode.STANDARD, report)
    if gamma:
        gamma_report(basis, ActionMode.STANDARD, report)
    return report
