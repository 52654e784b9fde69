import itertools
from fractions import Fraction

from django.apps import apps
from django.core.exceptions import ImproperlyConfigured
from django.db import connections
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st

from .conf import gt_setting
from .exceptions import BoundsError, DomainError, SeedMismatchError
from .omega import (
    OmegaSet, OmegaTriple, all_triples, omega_plus_direct, omega_plus_set,
    omega_profile, omega_pu_split, omega_set, omega_value, same_class,
    seeds_same_irreducible,
)
from .rationals import as_rational, format_rational
from .sampling import make_rng, random_generic_seed, random_shift
from .tableaux import Seed, Shift, coordinate_index, entry, is_generic, shift_coordinates
from .testing import (
    block_example_seed, generic_seeds, gl_shift, irreducible_seed,
    omega_example_seed, seeded_tableaux, shifts,
)
from .vectors import GTVector


def T(p, s, u):
    return OmegaTriple(p, s, u)


class RationalTests(SimpleTestCase):

    def test_strings_and_ints_become_fractions(self):
        self.assertEqual(as_rational('4/6'), Fraction(2, 3))
        self.assertEqual(as_rational(-3), Fraction(-3))

    def test_floats_are_rejected(self):
        with self.assertRaises(TypeError):
            as_rational(0.5)

    def test_format(self):
        self.assertEqual(format_rational(Fraction(-5, 3)), '-5/3')
        self.assertEqual(format_rational(Fraction(4, 2)), '2')


class ShiftTests(SimpleTestCase):

    def test_canonical_coordinate_order(self):
        self.assertEqual(shift_coordinates(3), ((2, 1), (2, 2), (1, 1)))
        self.assertEqual(coordinate_index(4, 1, 1), 5)

    def test_unit_and_arithmetic(self):
        unit = Shift.unit(3, 2, 2)
        self.assertEqual(unit.entries, (0, 1, 0))
        self.assertEqual((unit + unit - Shift.zero(3)).entries, (0, 2, 0))
        self.assertEqual(Shift((1, -2, 3)).l1_norm, 6)

    def test_non_integer_entries_rejected(self):
        with self.assertRaises(DomainError):
            Shift((Fraction(1, 2), 0, 0))

    def test_bad_coordinate(self):
        with self.assertRaises(BoundsError):
            Shift.unit(3, 3, 1)


class EntryTests(SimpleTestCase):

    def test_shifted_bottom_entry(self):
        seed = Seed.from_rows((1, 2), (0,))
        self.assertEqual(entry(seed.tableau(Shift((3,))), 1, 1), 3)

    def test_unshifted_entry(self):
        seed = Seed.from_rows((4, 5), (1,))
        self.assertEqual(entry(seed.tableau(), 2, 1), 4)
        seed3 = Seed.from_rows((0, 0, 0), (1, 2), (0,))
        self.assertEqual(entry(seed3.tableau(), 2, 1), 1)

    def test_exact_addition(self):
        seed = Seed.from_rows((0, 0), (Fraction(1, 3),))
        self.assertEqual(entry(seed.tableau(Shift((-2,))), 1, 1), Fraction(-5, 3))

    def test_top_row_never_shifted(self):
        seed = omega_example_seed()
        t = seed.tableau(gl_shift(5, 5, 5))
        self.assertEqual(t.row(3), seed.top_row)

    def test_out_of_range(self):
        t = omega_example_seed().tableau()
        with self.assertRaises(BoundsError):
            entry(t, 2, 3)
        with self.assertRaises(BoundsError):
            entry(t, 4, 1)

    def test_seed_shape_is_validated(self):
        with self.assertRaises(DomainError):
            Seed.from_rows((0, 1), (0, 1))
        with self.assertRaises(DomainError):
            Seed.from_rows((0,))


class GenericityTests(SimpleTestCase):

    def test_generic_seed(self):
        seed = Seed.from_rows(
            (0, Fraction(1, 3), Fraction(2, 3)), (0, Fraction(4, 3)), (0,))
        self.assertTrue(is_generic(seed))

    def test_integer_difference_in_lower_row(self):
        self.assertFalse(is_generic(Seed.from_rows((0, 1, 2), (0, 1), (0,))))

    def test_top_row_is_unconstrained(self):
        self.assertTrue(is_generic(Seed.from_rows((5, 5), (7,))))

    @given(generic_seeds(), st.data())
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_integer_shifts_preserve_genericity(self, seed, data):
        z = data.draw(shifts(seed.n, radius=5))
        self.assertTrue(is_generic(Seed.from_tableau(seed.tableau(z))))


class OmegaTests(SimpleTestCase):

    def setUp(self):
        self.t = omega_example_seed().tableau()

    def test_omega_values(self):
        self.assertEqual(omega_value(self.t, T(3, 1, 1)), 0)
        self.assertEqual(omega_value(self.t, T(3, 2, 2)), -1)
        self.assertEqual(omega_value(self.t, T(2, 2, 1)), Fraction(4, 3))

    def test_omega_plus_of_example(self):
        self.assertEqual(omega_plus_set(self.t), {T(3, 1, 1), T(2, 1, 1)})

    def test_omega_of_example(self):
        self.assertEqual(omega_set(self.t), {T(3, 1, 1), T(2, 1, 1), T(3, 2, 2)})

    def test_empty_omega(self):
        t = irreducible_seed().tableau()
        self.assertEqual(omega_set(t), set())
        self.assertEqual(omega_plus_set(t), set())

    def test_canonical_serialization(self):
        omega = OmegaSet({T(3, 1, 1), T(2, 1, 1)})
        self.assertEqual(omega.as_lists(), [[2, 1, 1], [3, 1, 1]])

    def test_triple_bounds(self):
        with self.assertRaises(BoundsError):
            OmegaTriple(2, 1, 2)
        with self.assertRaises(BoundsError):
            omega_value(self.t, T(4, 1, 1))

    def test_triple_count(self):
        self.assertEqual(len(all_triples(3)), 8)
        self.assertEqual(len(all_triples(4)), 20)

    def test_pu_split(self):
        split = omega_pu_split(omega_set(self.t))
        self.assertEqual(set(split), {(2, 1), (3, 1), (3, 2)})
        self.assertEqual(split[(3, 2)], {T(3, 2, 2)})

    @given(seeded_tableaux())
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_omega_is_shift_invariant(self, t):
        self.assertEqual(omega_set(t), omega_set(t.seed.tableau()))

    @given(seeded_tableaux())
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_omega_plus_inside_omega(self, t):
        self.assertLessEqual(omega_plus_set(t), omega_set(t))

    @given(seeded_tableaux())
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_profile_agrees_with_definition(self, t):
        self.assertEqual(omega_plus_set(t), omega_plus_direct(t))
        self.assertEqual(omega_profile(t.seed).omega, omega_set(t))


class SameClassTests(SimpleTestCase):

    def setUp(self):
        self.seed = omega_example_seed()

    def test_reflexive(self):
        t = self.seed.tableau(gl_shift(2, -1, 0))
        self.assertTrue(same_class(t, t))

    def test_inside_irreducible_basis(self):
        self.assertTrue(same_class(self.seed.tableau(), self.seed.tableau(gl_shift(-1, 0, -1))))

    def test_leaving_the_class(self):
        self.assertFalse(same_class(self.seed.tableau(), self.seed.tableau(gl_shift(1, 0, 0))))

    def test_seed_mismatch(self):
        with self.assertRaises(SeedMismatchError):
            same_class(self.seed.tableau(), block_example_seed().tableau())

    def test_equivalence_on_a_box(self):
        box = [self.seed.tableau(gl_shift(*z)) for z in itertools.product(range(-1, 2), repeat=3)]
        for a in box:
            for b in box:
                self.assertEqual(same_class(a, b), same_class(b, a))
                if not same_class(a, b):
                    continue
                for c in box:
                    if same_class(b, c):
                        self.assertTrue(same_class(a, c))


class SeedsSameIrreducibleTests(SimpleTestCase):

    def test_reflexive(self):
        seed = omega_example_seed()
        self.assertTrue(seeds_same_irreducible(seed, seed))

    def test_row_permutation(self):
        seed = omega_example_seed()
        swapped = Seed((seed.rows[0], tuple(reversed(seed.rows[1])), seed.rows[2]))
        self.assertTrue(seeds_same_irreducible(seed, swapped))

    def test_shift_changing_omega_plus(self):
        seed = omega_example_seed()
        moved = Seed.from_tableau(seed.tableau(gl_shift(1, 0, 0)))
        self.assertFalse(seeds_same_irreducible(seed, moved))

    def test_shift_inside_class(self):
        seed = omega_example_seed()
        moved = Seed.from_tableau(seed.tableau(gl_shift(-2, 3, -4)))
        self.assertTrue(seeds_same_irreducible(seed, moved))

    def test_non_generic_rejected(self):
        with self.assertRaises(DomainError):
            seeds_same_irreducible(Seed.from_rows((0, 1, 2), (0, 1), (0,)), omega_example_seed())

    @given(generic_seeds(n=3), st.data())
    @hypothesis_settings(max_examples=40, deadline=None)
    def test_symmetric(self, seed, data):
        z = data.draw(shifts(3, radius=2))
        order = data.draw(st.permutations([0, 1]))
        moved = seed.tableau(z).rows
        other = Seed((moved[0], tuple(moved[1][i] for i in order), moved[2]))
        self.assertEqual(seeds_same_irreducible(seed, other), seeds_same_irreducible(other, seed))


class GTVectorTests(SimpleTestCase):

    def setUp(self):
        self.seed = omega_example_seed()
        self.t = self.seed.tableau()

    def test_zero_coefficients_dropped(self):
        v = GTVector(self.seed, {Shift((0, 0, 0)): 0, Shift((1, 0, 0)): Fraction(1, 2)})
        self.assertEqual(len(v), 1)
        self.assertTrue((v - v).is_zero())

    def test_linear_combination(self):
        v = 2 * GTVector.basis(self.t) + GTVector.basis(self.t.moved(1, 1))
        self.assertEqual(v.coefficient(self.t), 2)
        self.assertEqual([s.entries for s, _ in v.items()], [(0, 0, 0), (0, 0, 1)])

    def test_seed_mismatch(self):
        with self.assertRaises(SeedMismatchError):
            GTVector.basis(self.t) + GTVector.basis(block_example_seed().tableau())


class SamplingTests(SimpleTestCase):

    def test_random_seeds_are_generic(self):
        rng = make_rng(7)
        for n in (2, 3, 4):
            for _ in range(10):
                self.assertTrue(is_generic(random_generic_seed(n, rng)))

    def test_reproducible(self):
        first = random_generic_seed(3, make_rng(11)), random_shift(3, make_rng(11), 2)
        second = random_generic_seed(3, make_rng(11)), random_shift(3, make_rng(11), 2)
        self.assertEqual(first, second)

    def test_denominator_too_small(self):
        with self.assertRaises(DomainError):
            random_generic_seed(4, make_rng(0), denominator=2)


class ConfTests(SimpleTestCase):

    @override_settings(GT_MODULES={'CENSUS_SHIFT_CAP': 10})
    def test_override(self):
        self.assertEqual(gt_setting('CENSUS_SHIFT_CAP'), 10)
        self.assertEqual(gt_setting('SCHEMA_VERSION'), '1')

    def test_unknown_key(self):
        with self.assertRaises(ImproperlyConfigured):
            gt_setting('NOPE')

    def test_no_database(self):
        self.assertEqual(connections['default'].settings_dict['ENGINE'], 'django.db.backends.dummy')
        self.assertFalse(apps.is_installed('django.contrib.auth'))
        self.assertTrue(apps.is_installed('rest_framework'))
