import itertools

from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings

from action.formulas import act, chevalley_generators
from core.exceptions import BoundsError, DomainError
from core.omega import OmegaSet, OmegaTriple, omega_plus_set
from core.sampling import make_rng, random_generic_seeds
from core.tableaux import Seed, Shift
from core.testing import (
    block_example_seed, deep_class_seed, generic_seeds, gl_shift,
    irreducible_seed, linked_chain_seed, omega_example_seed,
)
from core.vectors import GTVector

from .bases import (
    basis_I_in_box, basis_N_in_box, class_partition, generates_same_submodule,
    maximal_submodule_basis_in_box, submodule_generators,
)
from .blocks import (
    block_count, census, class_signature, d_pu, d_table, enumerate_omega_classes,
    linked_positions, sufficient_radius,
)
from .boxes import Box
from .checks import census_report, chain_report, closure_report
from .closure import (
    closure_bfs, find_intermediate_index, intermediate_candidates,
    one_step_successors, submodule_path,
)


def cube(radius):
    return Box.around(Shift.zero(3), radius)


def shifts_of(tableaux):
    return sorted(t.shift.entries for t in tableaux)


class BoxTests(SimpleTestCase):

    def test_around(self):
        box = Box.around(gl_shift(1, 0, -1), 1)
        self.assertEqual(box.lower, (0, -1, -2))
        self.assertEqual(box.size, 27)
        self.assertEqual(box.n, 3)
        self.assertEqual(box.center, gl_shift(1, 0, -1))

    def test_membership(self):
        box = cube(2)
        self.assertIn(gl_shift(2, -2, 0), box)
        self.assertNotIn(gl_shift(3, 0, 0), box)
        self.assertTrue(box.contains(omega_example_seed().tableau(gl_shift(1, 1, 1))))

    def test_inflate(self):
        self.assertEqual(cube(1).inflate(2), cube(3))

    def test_lexicographic_scan(self):
        shifts = list(cube(1).shifts())
        self.assertEqual(len(shifts), 27)
        self.assertEqual(shifts, sorted(shifts))
        self.assertEqual(shifts[0], gl_shift(-1, -1, -1))

    def test_invalid(self):
        with self.assertRaises(BoundsError):
            Box.around(Shift.zero(3), -1)
        with self.assertRaises(BoundsError):
            Box((0, 1), (0, 0))


class BasisTests(SimpleTestCase):

    def setUp(self):
        self.seed = omega_example_seed()
        self.r = self.seed.tableau()

    def test_irreducible_basis_of_example(self):
        found = shifts_of(basis_I_in_box(self.r, cube(3)))
        expected = sorted(
            (m, n, k) for m, n, k in itertools.product(range(-3, 4), repeat=3)
            if m <= 0 and k <= m and n > -1)
        self.assertEqual(found, expected)

    def test_submodule_basis_of_example(self):
        found = shifts_of(basis_N_in_box(self.r, cube(2)))
        expected = sorted(
            (m, n, k) for m, n, k in itertools.product(range(-2, 3), repeat=3)
            if m <= 0 and k <= m)
        self.assertEqual(found, expected)

    def test_maximal_submodule_is_the_difference(self):
        box = cube(2)
        n_basis = set(basis_N_in_box(self.r, box))
        i_basis = set(basis_I_in_box(self.r, box))
        maximal = set(maximal_submodule_basis_in_box(self.r, box))
        self.assertLessEqual(i_basis, n_basis)
        self.assertIn(self.r, i_basis)
        self.assertFalse(i_basis & maximal)
        self.assertEqual(i_basis | maximal, n_basis)

    def test_irreducible_module(self):
        seed = irreducible_seed()
        box = cube(1)
        self.assertEqual(len(basis_N_in_box(seed.tableau(), box)), 27)
        self.assertEqual(len(basis_I_in_box(seed.tableau(gl_shift(1, 1, 0)), box)), 27)

    def test_non_generic_seed(self):
        t = Seed.from_rows((0, 1, 2), (0, 1), (0,)).tableau()
        with self.assertRaises(DomainError):
            basis_N_in_box(t, cube(1))

    def test_box_shape_mismatch(self):
        with self.assertRaises(BoundsError):
            basis_I_in_box(self.r, Box.around(Shift.zero(4), 1))

    def test_partition_of_example(self):
        box = cube(2)
        partition = class_partition(self.seed, box)
        self.assertEqual(len(partition), 8)
        members = [s for shifts in partition.values() for s in shifts]
        self.assertEqual(sorted(members), list(box.shifts()))

    def test_generators_of_the_whole_box(self):
        tableaux = list(cube(2).tableaux(self.seed))
        self.assertEqual(submodule_generators(tableaux), [self.seed.tableau(gl_shift(1, 0, 2))])

    def test_generators_of_a_submodule(self):
        generators = submodule_generators(basis_N_in_box(self.r, cube(2)))
        self.assertEqual(generators, [self.seed.tableau(gl_shift(-2, 0, -2))])
        self.assertEqual(submodule_generators([]), [])

    def test_generates_same_submodule(self):
        self.assertTrue(generates_same_submodule(self.r, self.seed.tableau(gl_shift(-1, 0, -1))))
        self.assertFalse(generates_same_submodule(self.r, self.seed.tableau(gl_shift(1, 0, 0))))

    def test_poset_consistency(self):
        box = cube(2)
        representatives = [
            self.seed.tableau(shifts[0]) for shifts in class_partition(self.seed, box).values()]
        for q, r in itertools.product(representatives, repeat=2):
            self.assertEqual(
                omega_plus_set(q) <= omega_plus_set(r),
                set(basis_N_in_box(r, box)) <= set(basis_N_in_box(q, box)))


class SuccessorTests(SimpleTestCase):

    def test_gl2_string(self):
        seed = Seed.from_rows(('1/2', 3), ('1/3',))
        self.assertEqual(
            shifts_of(one_step_successors(seed.tableau())), [(-1,), (0,), (1,)])

    def test_vanishing_coefficient_has_no_successor(self):
        t = omega_example_seed().tableau()
        successors = one_step_successors(t)
        self.assertNotIn(t.moved(1, 1), successors)
        self.assertIn(t.moved(1, 1, -1), successors)


class ClosureTests(SimpleTestCase):

    def test_closure_equals_submodule_basis(self):
        r = omega_example_seed().tableau()
        box = cube(2)
        self.assertEqual(closure_bfs(r, box, 3), set(basis_N_in_box(r, box)))

    def test_zero_padding_is_enough(self):
        r = omega_example_seed().tableau(gl_shift(0, 1, -1))
        box = cube(1)
        self.assertEqual(closure_bfs(r, box, 0), set(basis_N_in_box(r, box)))

    def test_irreducible_module_reaches_whole_box(self):
        r = irreducible_seed().tableau()
        self.assertEqual(len(closure_bfs(r, cube(1), 1)), 27)

    def test_closure_stays_in_the_submodule(self):
        r = block_example_seed().tableau(gl_shift(-1, 0, 1))
        target = omega_plus_set(r)
        for q in closure_bfs(r, cube(2), 2):
            self.assertLessEqual(target, omega_plus_set(q))

    def test_random_gl3_seeds(self):
        seeds = random_generic_seeds(3, 10, make_rng(5), nonempty_omega=True)
        report = closure_report(seeds, radius=2, padding=3)
        self.assertTrue(report.passed, report.failures)
        classes = sum(len(class_partition(seed, cube(2))) for seed in seeds)
        self.assertGreater(len(report.records), 10 + classes)

    def test_every_class_member_reaches_its_class(self):
        report = closure_report([omega_example_seed()], radius=1, padding=3, every_member=True)
        self.assertTrue(report.passed, report.failures)
        # one partition record plus one closure per shift of the 27-box
        self.assertEqual(len(report.records), 28)

    def test_gl4_seed_with_padding_n(self):
        seed = linked_chain_seed()
        box = Box.around(Shift.zero(4), 1)
        expected = set(basis_N_in_box(seed.tableau(), box))
        self.assertEqual(len(expected), 24)
        for start in (Shift.zero(4), Shift((-1,) * 6)):
            r = seed.tableau(start)
            self.assertEqual(omega_plus_set(r), omega_plus_set(seed.tableau()))
            self.assertEqual(closure_bfs(r, box, padding=4), expected)

    def test_irreducible_classes_are_strongly_connected(self):
        seed = omega_example_seed()
        box = cube(2)
        for shifts in class_partition(seed, box).values():
            members = {seed.tableau(s) for s in shifts}
            start = seed.tableau(shifts[-1])
            self.assertLessEqual(members, closure_bfs(start, box, 3))


class IntermediateIndexTests(SimpleTestCase):

    def setUp(self):
        self.seed = omega_example_seed()

    def test_single_coordinate(self):
        self.assertEqual(find_intermediate_index(self.seed, gl_shift(0, 0, -1)), (1, 1))
        self.assertEqual(find_intermediate_index(self.seed, gl_shift(0, 3, 0)), (2, 2))

    def test_only_one_candidate_works(self):
        z = gl_shift(-1, 0, -1)
        self.assertEqual(intermediate_candidates(self.seed, z), [(1, 1)])
        self.assertEqual(find_intermediate_index(self.seed, z), (1, 1))

    def test_zero_shift(self):
        with self.assertRaises(DomainError):
            find_intermediate_index(self.seed, Shift.zero(3))

    def test_precondition(self):
        with self.assertRaises(DomainError):
            find_intermediate_index(self.seed, gl_shift(1, 0, 0))

    def test_chain_suite(self):
        rng = make_rng(13)
        seeds = random_generic_seeds(3, 5, rng, nonempty_omega=True)
        seeds += random_generic_seeds(4, 5, rng, nonempty_omega=True)
        report = chain_report(seeds, rng, samples=100)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(len(report.records), 100)


class SubmodulePathTests(SimpleTestCase):

    def test_path_inside_example(self):
        seed = omega_example_seed()
        r, q = seed.tableau(), seed.tableau(gl_shift(-2, 1, -3))
        path = submodule_path(r, q)
        self.assertEqual(path[0], r)
        self.assertEqual(path[-1], q)
        self.assertEqual(len(path), 7)
        for a, b in zip(path, path[1:]):
            v = GTVector.basis(a)
            self.assertTrue(any(act(g, v).coefficient(b) for g in chevalley_generators(3)))

    def test_trivial_path(self):
        r = omega_example_seed().tableau()
        self.assertEqual(submodule_path(r, r), [r])

    def test_outside_the_submodule(self):
        seed = omega_example_seed()
        with self.assertRaises(DomainError):
            submodule_path(seed.tableau(), seed.tableau(gl_shift(1, 0, 0)))


class BlockTests(SimpleTestCase):

    def test_d_values_of_example(self):
        seed = block_example_seed()
        self.assertEqual(d_pu(seed, 3, 1), 2)
        self.assertEqual(d_pu(seed, 3, 2), 1)
        self.assertEqual(d_pu(seed, 2, 1), 0)
        self.assertEqual(d_table(seed), {(3, 1): 2, (3, 2): 1, (2, 1): 0})
        self.assertEqual(linked_positions(seed, 3, 1), [1, 2])

    def test_block_counts(self):
        self.assertEqual(block_count(block_example_seed()), 6)
        self.assertEqual(block_count(omega_example_seed()), 8)
        self.assertEqual(block_count(irreducible_seed()), 1)
        self.assertEqual(set(d_table(irreducible_seed()).values()), {0})

    def test_repeated_linked_values_count_once(self):
        seed = Seed.from_rows((0, 0, '1/3'), (0, '1/2'), ('1/5',))
        self.assertEqual(linked_positions(seed, 3, 1), [1])
        self.assertEqual(d_pu(seed, 3, 1), 1)

    def test_bounds(self):
        with self.assertRaises(BoundsError):
            d_pu(block_example_seed(), 2, 2)
        with self.assertRaises(BoundsError):
            d_pu(block_example_seed(), 4, 1)

    def test_non_generic(self):
        with self.assertRaises(DomainError):
            block_count(Seed.from_rows((0, 1, 2), (0, 1), (0,)))

    @given(generic_seeds())
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_lower_rows_link_at_most_once(self, seed):
        for (p, u), d in d_table(seed).items():
            if p < seed.n:
                self.assertLessEqual(d, 1)

    def test_class_signature(self):
        seed = omega_example_seed()
        self.assertEqual(
            class_signature(seed.tableau()), {(3, 1): 1, (3, 2): 0, (2, 1): 1})
        top_linked = Seed.from_rows((0, -1, '1/3'), (0, '1/3'), ('5/7',))
        signatures = {
            tuple(class_signature(top_linked.tableau(gl_shift(m, 0, 0))).values())
            for m in range(-3, 3)}
        self.assertEqual({s[0] for s in signatures}, {0, 1, 2})

    def test_sufficient_radius(self):
        self.assertEqual(sufficient_radius(block_example_seed()), 4)
        self.assertEqual(sufficient_radius(deep_class_seed()), 4)
        self.assertEqual(sufficient_radius(irreducible_seed()), 0)


class CensusTests(SimpleTestCase):

    def test_block_example(self):
        seed = block_example_seed()
        self.assertEqual(census(seed, radius=3).node_count, 6)
        poset = census(seed)
        self.assertEqual(poset.node_count, 6)
        self.assertTrue(all(a < b for a, b in poset.edges))
        self.assertEqual(poset.varied, (0, 1))

    def test_omega_example(self):
        poset = census(omega_example_seed(), radius=3)
        self.assertEqual(poset.node_count, 8)
        # the Boolean lattice on three triples has 12 covers
        self.assertEqual(len(poset.edges), 12)
        top = OmegaSet({OmegaTriple(3, 1, 1), OmegaTriple(2, 1, 1), OmegaTriple(3, 2, 2)})
        self.assertEqual(poset.representative(top), gl_shift(-3, -3, -3))

    def test_irreducible(self):
        poset = census(irreducible_seed(), radius=2)
        self.assertEqual(poset.node_count, 1)
        self.assertEqual(poset.edges, [])
        self.assertEqual(poset.scanned, 1)

    def test_class_beyond_omega_plus_two(self):
        seed = deep_class_seed()
        self.assertEqual(block_count(seed), 4)
        self.assertEqual(census(seed, radius=3).node_count, 3)
        self.assertEqual(census(seed, radius=4).node_count, 4)
        self.assertEqual(census(seed).node_count, 4)

    def test_labels_hold_unvaried_coordinates_at_the_centre(self):
        poset = enumerate_omega_classes(block_example_seed(), Box.around(gl_shift(0, 0, 2), 4))
        self.assertEqual(poset.varied, (0, 1))
        self.assertEqual(poset.node_count, 6)
        self.assertTrue(all(shift[2] == 2 for _, shift in poset.nodes))

    def test_cap(self):
        poset = enumerate_omega_classes(block_example_seed(), cube(3), cap=10)
        self.assertTrue(poset.skipped)
        self.assertEqual(poset.nodes, [])

    def test_never_exceeds_block_count(self):
        for seed in random_generic_seeds(3, 5, make_rng(21)):
            self.assertLessEqual(census(seed, radius=1).node_count, block_count(seed))

    def test_counting_corpus(self):
        # n=4 seeds use spread 0 so every sufficient box stays under the cap
        rng = make_rng(17)
        seeds = random_generic_seeds(3, 10, rng) + random_generic_seeds(4, 10, rng, spread=0)
        report = census_report(seeds)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.skipped, {})
        self.assertEqual(len(report.records), 20)

    def test_capped_seeds_are_reported_as_skipped(self):
        report = census_report([block_example_seed(), irreducible_seed()], cap=10)
        self.assertEqual(report.skipped, {'census cap exceeded': 1})
        self.assertEqual(len(report.records), 1)
