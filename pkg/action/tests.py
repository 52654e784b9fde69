from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import assume, given, settings as hypothesis_settings

from core.exceptions import BoundsError, DomainError
from core.sampling import make_rng, random_generic_seed, random_shift
from core.tableaux import Seed, Shift, shift_distance
from core.testing import gl_shift, omega_example_seed, seeded_tableaux
from core.vectors import GTVector

from .checks import gamma_report, relation_report
from .formulas import (
    E, ActionMode, act, act_cartan, act_lowering, act_raising, act_word,
    all_generators, commutator_defect,
)
from .gamma import act_gamma_generator, gamma_eigenvalue, gamma_words

STANDARD = ActionMode.STANDARD


def defining_gl2():
    """gl(2), highest weight (1, 0): top row (1, -1), l_11 in {0, 1}"""
    seed = Seed.from_rows((1, -1), (0,))
    return [seed.tableau(Shift((0,))), seed.tableau(Shift((1,)))]


class RaisingTests(SimpleTestCase):

    def test_single_term(self):
        t = Seed.from_rows((1, -1), (0,)).tableau()
        self.assertEqual(act_raising(1, t).items(), [(Shift((1,)), 1)])

    def test_top_of_string(self):
        t = Seed.from_rows((1, -1), (1,)).tableau()
        self.assertTrue(act_raising(1, t, STANDARD).is_zero())

    def test_vanishing_numerator_drops_a_term(self):
        # r_21 = r_31 = 0 kills the delta^{21} term
        t = omega_example_seed().tableau()
        self.assertEqual(act_raising(2, t).items(), [(gl_shift(0, 1, 0), Fraction(-2, 3))])

    def test_boundary_of_the_class(self):
        # omega_{2,1,1} = 0, so r_11 cannot rise
        t = omega_example_seed().tableau()
        self.assertTrue(act_raising(1, t).is_zero())
        self.assertEqual(act_raising(1, t.moved(1, 1, -1)).support(), {gl_shift(0, 0, 0)})

    def test_row_out_of_range(self):
        with self.assertRaises(BoundsError):
            act_raising(2, Seed.from_rows((1, -1), (0,)).tableau())

    def test_non_generic_seed(self):
        t = Seed.from_rows((0, 1, 2), (0, 1), (0,)).tableau()
        with self.assertRaises(DomainError):
            act_raising(1, t)


class LoweringTests(SimpleTestCase):

    def test_gl2_lowering_is_a_plain_shift(self):
        seed = Seed.from_rows((Fraction(1, 2), 3), (Fraction(2, 7),))
        for z in (-2, 0, 5):
            t = seed.tableau(Shift((z,)))
            self.assertEqual(act_lowering(1, t).items(), [(Shift((z - 1,)), 1)])

    def test_one_surviving_term(self):
        t = omega_example_seed().tableau()
        self.assertEqual(act_lowering(2, t).items(), [(gl_shift(0, -1, 0), 1)])

    def test_standard_truncation_at_bottom(self):
        bottom, _ = defining_gl2()
        self.assertTrue(act_lowering(1, bottom, STANDARD).is_zero())
        self.assertFalse(act_lowering(1, bottom).is_zero())


class CartanTests(SimpleTestCase):

    def test_first_row(self):
        self.assertEqual(act_cartan(1, Seed.from_rows((1, 0), (0,)).tableau()), 0)
        t = Seed.from_rows((1, 0), (Fraction(-5, 3),)).tableau()
        self.assertEqual(act_cartan(1, t), Fraction(-5, 3))

    def test_second_row(self):
        t = Seed.from_rows((4, 0, 9), (0, Fraction(1, 2)), (0,)).tableau()
        self.assertEqual(act_cartan(2, t), Fraction(3, 2))

    def test_out_of_range(self):
        with self.assertRaises(BoundsError):
            act_cartan(3, Seed.from_rows((1, 0), (0,)).tableau())


class ActTests(SimpleTestCase):

    def setUp(self):
        self.t = omega_example_seed().tableau(gl_shift(1, -1, 2))
        self.v = GTVector.basis(self.t)

    def test_long_generator_is_a_commutator(self):
        expected = act_word([E(1, 2), E(2, 3)], self.v) - act_word([E(2, 3), E(1, 2)], self.v)
        self.assertEqual(act(E(1, 3), self.v), expected)

    def test_long_lowering_is_a_commutator(self):
        expected = act_word([E(3, 2), E(2, 1)], self.v) - act_word([E(2, 1), E(3, 2)], self.v)
        self.assertEqual(act(E(3, 1), self.v), expected)

    def test_zero_vector(self):
        zero = GTVector.zero(self.t.seed)
        for g in all_generators(3):
            self.assertTrue(act(g, zero).is_zero())

    def test_linearity_on_cartan(self):
        result = act(E(1, 1), 2 * self.v)
        self.assertEqual(result, (2 * self.t.entry(1, 1)) * self.v)

    def test_linear_in_sums(self):
        w = GTVector.basis(self.t.moved(2, 1))
        for g in (E(1, 2), E(3, 1), E(2, 2)):
            self.assertEqual(act(g, self.v + 3 * w), act(g, self.v) + 3 * act(g, w))

    def test_generator_outside_gl_n(self):
        with self.assertRaises(BoundsError):
            act(E(1, 4), self.v)

    def test_mode_from_string(self):
        self.assertEqual(act(E(1, 2), self.v, 'generic'), act(E(1, 2), self.v))


class ActWordTests(SimpleTestCase):

    def test_empty_word(self):
        v = GTVector.basis(omega_example_seed().tableau())
        self.assertEqual(act_word([], v), v)

    def test_rightmost_factor_acts_first(self):
        t = Seed.from_rows((Fraction(1, 3), 2), (Fraction(1, 2),)).tableau()
        v = GTVector.basis(t)
        self.assertEqual(act_word([E(1, 2), E(2, 1)], v), act(E(1, 2), act(E(2, 1), v)))

    def test_length_three_word_stays_local(self):
        t = omega_example_seed().tableau()
        result = act_word([E(1, 2), E(3, 2), E(2, 1)], GTVector.basis(t))
        self.assertTrue(all(shift_distance(t, q) <= 3 for q in result.tableaux()))


class CommutatorDefectTests(SimpleTestCase):

    def test_equal_generators(self):
        v = GTVector.basis(omega_example_seed().tableau())
        for g in all_generators(3):
            self.assertTrue(commutator_defect(g, g, v).is_zero())

    def test_e12_e21_on_random_gl3(self):
        rng = make_rng(3)
        seed = random_generic_seed(3, rng)
        for _ in range(10):
            v = GTVector.basis(seed.tableau(random_shift(3, rng, 3)))
            self.assertTrue(commutator_defect(E(1, 2), E(2, 1), v).is_zero())

    def test_standard_mode_defining_gl2(self):
        report = relation_report(defining_gl2(), STANDARD)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(len(report.records), 2)

    def test_relation_suite_generic(self):
        rng = make_rng(2024)
        for n in (2, 3, 4):
            tableaux = []
            for _ in range(5):
                seed = random_generic_seed(n, rng)
                tableaux += [seed.tableau(random_shift(n, rng, 2)) for _ in range(4)]
            report = relation_report(tableaux)
            self.assertTrue(report.passed, report.failures)

    @given(seeded_tableaux(n=3))
    @hypothesis_settings(max_examples=15, deadline=None)
    def test_relations_hold_on_gl3(self, t):
        self.assertTrue(relation_report([t]).passed)


class GammaTests(SimpleTestCase):

    def test_gl1_eigenvalue(self):
        t = Seed.from_rows((0, 1), (Fraction(7, 5),)).tableau()
        self.assertEqual(gamma_eigenvalue(1, 1, t), Fraction(7, 5))

    def test_hand_evaluation(self):
        t = Seed.from_rows((0, 0, 0), (0, Fraction(1, 2)), (Fraction(9, 4),)).tableau()
        self.assertEqual(gamma_eigenvalue(2, 1, t), Fraction(3, 2))

    @given(seeded_tableaux())
    @hypothesis_settings(max_examples=30, deadline=None)
    def test_c21_is_sum_of_cartans(self, t):
        assume(len(set(t.row(2))) == 2)
        self.assertEqual(gamma_eigenvalue(2, 1, t), act_cartan(1, t) + act_cartan(2, t))

    def test_repeated_entries(self):
        t = Seed.from_rows((1, 1), (0,)).tableau()
        with self.assertRaises(DomainError):
            gamma_eigenvalue(2, 1, t)

    def test_index_bounds(self):
        t = omega_example_seed().tableau()
        with self.assertRaises(BoundsError):
            gamma_eigenvalue(2, 3, t)
        with self.assertRaises(BoundsError):
            act_gamma_generator(4, 1, GTVector.basis(t))

    def test_word_count(self):
        self.assertEqual(len(list(gamma_words(3, 2))), 9)
        self.assertEqual(next(gamma_words(2, 2)), [E(1, 1), E(1, 1)])

    def test_c11_is_e11(self):
        t = Seed.from_rows((0, 1), (Fraction(2, 3),)).tableau(Shift((4,)))
        v = GTVector.basis(t)
        self.assertEqual(act_gamma_generator(1, 1, v), t.entry(1, 1) * v)

    def test_c32_on_generic_gl3(self):
        t = omega_example_seed().tableau(gl_shift(-1, 2, 0))
        v = GTVector.basis(t)
        self.assertEqual(act_gamma_generator(3, 2, v), gamma_eigenvalue(3, 2, t) * v)

    def test_cubic_word_order_on_defining_gl2(self):
        for t in defining_gl2():
            v = GTVector.basis(t)
            self.assertEqual(act_gamma_generator(2, 3, v, STANDARD), gamma_eigenvalue(2, 3, t) * v)

    def test_diagonal_on_random_tableaux(self):
        rng = make_rng(99)
        tableaux = []
        for n in (2, 3):
            seed = random_generic_seed(n, rng)
            tableaux += [seed.tableau(random_shift(n, rng, 2)) for _ in range(10)]
        seed = random_generic_seed(4, rng)
        tableaux += [seed.tableau(random_shift(4, rng, 1)) for _ in range(10)]
        report = gamma_report(tableaux)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(len(report.records), 30)


class LocalityAndModeTests(SimpleTestCase):

    @given(seeded_tableaux(n=3, radius=2))
    @hypothesis_settings(max_examples=25, deadline=None)
    def test_support_within_index_distance(self, t):
        v = GTVector.basis(t)
        for g in all_generators(3):
            for q in act(g, v).tableaux():
                self.assertLessEqual(shift_distance(t, q), abs(g.i - g.j))

    def test_modes_agree_away_from_the_boundary(self):
        # gl(2), highest weight (2, 0): l_11 = 1 has both neighbours standard
        t = Seed.from_rows((2, -1), (1,)).tableau()
        v = GTVector.basis(t)
        for g in all_generators(2):
            self.assertEqual(act(g, v), act(g, v, STANDARD))
