from django.test import SimpleTestCase

from action.formulas import ActionMode, E, act
from core.exceptions import DomainError
from core.tableaux import Seed, Shift
from core.vectors import GTVector

from .checks import findim_report
from .standard import is_standard
from .weights import (
    HighestWeight, dominant_weights, highest_weight_tableau, standard_tableaux,
    weight_of, weyl_dimension,
)


def W(*lam):
    return HighestWeight(tuple(lam))


class IsStandardTests(SimpleTestCase):

    def test_gl2_betweenness(self):
        seed = Seed.from_rows((1, -1), (0,))
        self.assertTrue(is_standard(seed.tableau()))
        self.assertFalse(is_standard(seed.tableau(Shift((-1,)))))
        self.assertTrue(is_standard(seed.tableau(Shift((1,)))))
        self.assertFalse(is_standard(seed.tableau(Shift((2,)))))

    def test_non_integral(self):
        self.assertFalse(is_standard(Seed.from_rows((1, -1), ('1/2',)).tableau()))


class HighestWeightTests(SimpleTestCase):

    def test_top_row(self):
        self.assertEqual(W(2, 1, 0).top_row, (2, 0, -2))

    def test_not_dominant(self):
        with self.assertRaises(DomainError):
            W(0, 1)
        with self.assertRaises(DomainError):
            W(1)

    def test_highest_weight_tableau(self):
        t = highest_weight_tableau(W(2, 1, 0))
        self.assertEqual(t.rows, ((2, 0, -2), (2, 0), (2,)))
        self.assertEqual(weight_of(t), (2, 1, 0))

    def test_dominant_weights(self):
        weights = dominant_weights(3, 1)
        self.assertEqual([w.lam for w in weights], [(0, 0, 0), (1, 0, 0), (1, 1, 0)])
        self.assertEqual(len(dominant_weights(4, 4)), 35)


class StandardTableauxTests(SimpleTestCase):

    def test_defining_gl2(self):
        tableaux = standard_tableaux(W(1, 0))
        self.assertEqual([t.entry(1, 1) for t in tableaux], [0, 1])

    def test_trivial_module(self):
        for n in (2, 3, 4):
            self.assertEqual(len(standard_tableaux(W(*[0] * n))), 1)

    def test_defining_gl3(self):
        self.assertEqual(len(standard_tableaux(W(1, 0, 0))), 3)

    def test_lexicographic_and_standard(self):
        tableaux = standard_tableaux(W(2, 1, 0))
        shifts = [t.shift for t in tableaux]
        self.assertEqual(shifts, sorted(shifts))
        self.assertTrue(all(is_standard(t) for t in tableaux))
        self.assertEqual(tableaux[-1], highest_weight_tableau(W(2, 1, 0)))


class WeylDimensionTests(SimpleTestCase):

    def test_known_dimensions(self):
        self.assertEqual(weyl_dimension(W(1, 0)), 2)
        self.assertEqual(weyl_dimension(W(1, 0, 0)), 3)
        self.assertEqual(weyl_dimension(W(2, 1, 0)), 8)

    def test_dimension_match(self):
        for n in (2, 3, 4):
            for lam in dominant_weights(n, 4):
                self.assertEqual(len(standard_tableaux(lam)), weyl_dimension(lam), lam)


class FiniteDimensionalModuleTests(SimpleTestCase):

    def test_highest_weight_is_annihilated(self):
        for n in (2, 3, 4):
            for lam in dominant_weights(n, 2):
                top = GTVector.basis(highest_weight_tableau(lam))
                for k in range(1, n):
                    self.assertTrue(act(E(k, k + 1), top, ActionMode.STANDARD).is_zero())

    def test_adjoint_of_sl3(self):
        report = findim_report(W(2, 1, 0))
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.skipped, {})

    def test_relations_and_gamma_on_small_modules(self):
        for n in (2, 3):
            for lam in dominant_weights(n, 3):
                report = findim_report(lam)
                self.assertTrue(report.passed, (lam, report.failures))

    def test_gamma_on_gl2_modules(self):
        for lam in dominant_weights(2, 3):
            report = findim_report(lam, relations=False)
            self.assertTrue(report.passed, report.failures)
