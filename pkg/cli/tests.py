import itertools
import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings

from action.formulas import act_cartan
from core.reports import SuiteReport
from core.rationals import format_rational
from core.tableaux import Seed, Shift
from core.testing import (
    block_example_seed, generic_seeds, irreducible_seed, omega_example_seed,
)

from .documents import input_digest, seed_document
from .serializers import SeedDocumentSerializer

NON_GENERIC = Seed.from_rows((0, 1, 2), (0, 1), (0,))


class CommandTestCase(SimpleTestCase):
    """Seed documents in a temporary directory and a call_command wrapper"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write_document(self, document, name='seed.json'):
        path = Path(self.tmp.name) / name
        path.write_text(json.dumps(document))
        return str(path)

    def seed_file(self, seed):
        return self.write_document(seed_document(seed))

    def run_command(self, name, **options):
        out = StringIO()
        call_command(name, stdout=out, **options)
        return out.getvalue()

    def payload(self, name, **options):
        return json.loads(self.run_command(name, **options))['payload']

    def assertExitCode(self, code, name, **options):
        with self.assertRaises(CommandError) as caught:
            self.run_command(name, **options)
        self.assertEqual(caught.exception.returncode, code, str(caught.exception))
        return caught.exception


class SeedDocumentTests(SimpleTestCase):

    @given(generic_seeds())
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_round_trip(self, seed):
        serializer = SeedDocumentSerializer(data=seed_document(seed))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), seed)

    def test_rationals_are_strings(self):
        document = seed_document(omega_example_seed())
        self.assertEqual(document['rows'], [['0', '1/3', '2/3'], ['0', '4/3'], ['0']])

    def test_rejects_floats(self):
        serializer = SeedDocumentSerializer(data={'n': 2, 'rows': [[0.5, '1'], ['0']]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('rows', serializer.errors)

    def test_rejects_wrong_shape(self):
        serializer = SeedDocumentSerializer(data={'n': 3, 'rows': [['0', '1'], ['0']]})
        self.assertFalse(serializer.is_valid())

    def test_digest_depends_on_command(self):
        document = seed_document(omega_example_seed())
        self.assertNotEqual(
            input_digest({'name': 'gt_omega', 'options': {'shift': None}}, document),
            input_digest({'name': 'gt_omega', 'options': {'shift': '1,0,0'}}, document))


class OmegaCommandTests(CommandTestCase):

    def test_example_seed(self):
        payload = self.payload('gt_omega', seed=self.seed_file(omega_example_seed()))
        self.assertEqual(payload['omega_plus'], [[2, 1, 1], [3, 1, 1]])
        self.assertTrue(set(map(tuple, payload['omega_plus'])) <= set(map(tuple, payload['omega'])))
        self.assertEqual(len(payload['values']), 8)
        self.assertEqual(payload['shift'], [0, 0, 0])

    def test_shifted(self):
        payload = self.payload(
            'gt_omega', seed=self.seed_file(omega_example_seed()), shift='1,0,0')
        # r_21 = 1 rises above r_31 = 0
        self.assertEqual(payload['omega_plus'], [[2, 1, 1]])
        payload = self.payload(
            'gt_omega', seed=self.seed_file(omega_example_seed()), shift='-1,0,0')
        self.assertEqual(payload['omega_plus'], [[3, 1, 1]])

    def test_empty_omega(self):
        payload = self.payload('gt_omega', seed=self.seed_file(irreducible_seed()))
        self.assertEqual(payload['omega'], [])
        self.assertEqual(payload['omega_plus'], [])

    def test_non_generic_seed_is_accepted(self):
        payload = self.payload('gt_omega', seed=self.seed_file(NON_GENERIC))
        self.assertEqual(len(payload['omega']), 8)

    def test_malformed_rational(self):
        path = self.write_document({'n': 2, 'rows': [['1/0', '1'], ['0']]})
        error = self.assertExitCode(2, 'gt_omega', seed=path)
        self.assertIn('1/0', str(error))

    def test_shift_of_the_wrong_length(self):
        self.assertExitCode(2, 'gt_omega', seed=self.seed_file(omega_example_seed()), shift='1,0')

    def test_missing_file(self):
        self.assertExitCode(2, 'gt_omega', seed=str(Path(self.tmp.name) / 'absent.json'))

    def test_invalid_json(self):
        path = Path(self.tmp.name) / 'broken.json'
        path.write_text('{"n": 2, "rows": [')
        self.assertExitCode(2, 'gt_omega', seed=str(path))


class ActCommandTests(CommandTestCase):

    def test_gl2_raising(self):
        payload = self.payload(
            'gt_act', seed=self.seed_file(Seed.from_rows((1, -1), (0,))), generator='1,2')
        self.assertEqual(payload['terms'], [{'shift': [1], 'coefficient': '1'}])

    def test_cartan_is_a_scalar(self):
        seed = omega_example_seed()
        payload = self.payload('gt_act', seed=self.seed_file(seed), generator='2,2', shift='1,0,-1')
        expected = format_rational(act_cartan(2, seed.tableau(Shift((1, 0, -1)))))
        self.assertEqual(payload['terms'], [{'shift': [1, 0, -1], 'coefficient': expected}])

    def test_vanishing_coefficient_is_omitted(self):
        payload = self.payload(
            'gt_act', seed=self.seed_file(omega_example_seed()), generator='2,3')
        self.assertEqual(payload['terms'], [{'shift': [0, 1, 0], 'coefficient': '-2/3'}])

    def test_standard_truncation(self):
        payload = self.payload(
            'gt_act', seed=self.seed_file(Seed.from_rows((1, -1), (1,))),
            generator='1,2', mode='standard')
        self.assertEqual(payload['terms'], [])

    def test_non_generic_seed(self):
        self.assertExitCode(3, 'gt_act', seed=self.seed_file(NON_GENERIC), generator='1,2')

    def test_generator_out_of_range(self):
        self.assertExitCode(2, 'gt_act', seed=self.seed_file(omega_example_seed()), generator='1,4')
        self.assertExitCode(2, 'gt_act', seed=self.seed_file(omega_example_seed()), generator='1')


class BasisCommandTests(CommandTestCase):

    def test_irreducible_basis_of_example(self):
        payload = self.payload(
            'gt_basis', seed=self.seed_file(omega_example_seed()), radius=3, which='I')
        expected = sorted(
            [m, n, k] for m, n, k in itertools.product(range(-3, 4), repeat=3)
            if m <= 0 and k <= m and n > -1)
        self.assertEqual(payload['shifts'], expected)
        self.assertEqual(payload['omega_plus'], [[2, 1, 1], [3, 1, 1]])
        self.assertEqual(payload['scanned'], 343)

    def test_submodule_contains_irreducible(self):
        path = self.seed_file(omega_example_seed())
        n_basis = self.payload('gt_basis', seed=path, radius=2, which='N')['shifts']
        i_basis = self.payload('gt_basis', seed=path, radius=2, which='I')['shifts']
        self.assertLess(set(map(tuple, i_basis)), set(map(tuple, n_basis)))

    def test_radius_zero(self):
        path = self.seed_file(omega_example_seed())
        self.assertEqual(self.payload('gt_basis', seed=path, radius=0)['shifts'], [[0, 0, 0]])
        self.assertEqual(
            self.payload('gt_basis', seed=path, radius=0, shift='0,-1,0')['shifts'], [])

    def test_non_generic_seed(self):
        self.assertExitCode(3, 'gt_basis', seed=self.seed_file(NON_GENERIC), radius=1)

    def test_negative_radius(self):
        self.assertExitCode(2, 'gt_basis', seed=self.seed_file(omega_example_seed()), radius=-1)


class BlockCommandTests(CommandTestCase):

    def test_block_example(self):
        payload = self.payload('gt_block', seed=self.seed_file(block_example_seed()))
        self.assertEqual(payload['d_table'], [
            {'p': 3, 'u': 1, 'd': 2}, {'p': 3, 'u': 2, 'd': 1}, {'p': 2, 'u': 1, 'd': 0}])
        self.assertEqual(payload['block_count'], 6)
        self.assertFalse(payload['irreducible'])
        self.assertNotIn('census', payload)

    def test_census_matches(self):
        payload = self.payload('gt_block', seed=self.seed_file(block_example_seed()), census=True)
        census = payload['census']
        self.assertTrue(census['match'])
        self.assertEqual(len(census['classes']), 6)
        self.assertEqual(census['radius'], payload['sufficient_radius'])
        for a, b in census['edges']:
            self.assertLess(
                set(map(tuple, census['classes'][a]['omega_plus'])),
                set(map(tuple, census['classes'][b]['omega_plus'])))

    def test_census_at_given_radius(self):
        payload = self.payload('gt_block', seed=self.seed_file(omega_example_seed()), radius=3)
        self.assertEqual(payload['census']['radius'], 3)
        self.assertTrue(payload['census']['match'])

    def test_irreducible(self):
        payload = self.payload('gt_block', seed=self.seed_file(irreducible_seed()), census=True)
        self.assertEqual(payload['block_count'], 1)
        self.assertTrue(payload['irreducible'])
        self.assertTrue(payload['census']['match'])

    def test_non_generic_seed(self):
        self.assertExitCode(3, 'gt_block', seed=self.seed_file(NON_GENERIC))


class VerifyCommandTests(CommandTestCase):

    def test_findim(self):
        payload = self.payload('gt_verify', suite='findim', weight='2,1,0')
        self.assertTrue(payload['passed'])
        dimension = payload['records'][0]
        self.assertEqual(dimension['subject'], 'L(2,1,0) dimension')
        self.assertIn('Weyl dimension 8', dimension['detail'])

    def test_findim_needs_a_weight(self):
        self.assertExitCode(2, 'gt_verify', suite='findim')

    def test_findim_rejects_non_dominant_weight(self):
        self.assertExitCode(3, 'gt_verify', suite='findim', weight='0,1')

    def test_findim_refuses_a_seed(self):
        error = self.assertExitCode(
            2, 'gt_verify', suite='findim', weight='1,0', seed=self.seed_file(omega_example_seed()))
        self.assertIn('seed', str(error))

    def test_census_on_gl4_checks_every_seed(self):
        payload = self.payload('gt_verify', suite='census', n=4, samples=3, rng_seed=2)
        self.assertTrue(payload['passed'])
        self.assertEqual(payload['skipped'], {})
        self.assertEqual(payload['checked'], 3)

    def test_relations_on_gl3(self):
        payload = self.payload('gt_verify', suite='relations', n=3, samples=20, rng_seed=7)
        self.assertTrue(payload['passed'])
        self.assertEqual(payload['checked'], 20)

    def test_gamma_on_gl2(self):
        payload = self.payload('gt_verify', suite='gamma', n=2, samples=8, rng_seed=3)
        self.assertTrue(payload['passed'])

    def test_relations_on_a_seed_document(self):
        payload = self.payload(
            'gt_verify', suite='relations', seed=self.seed_file(omega_example_seed()), samples=4)
        self.assertTrue(payload['passed'])

    def test_census_and_chain(self):
        census = self.payload('gt_verify', suite='census', seed=self.seed_file(block_example_seed()))
        self.assertTrue(census['passed'])
        self.assertEqual(census['checked'], 1)
        chain = self.payload('gt_verify', suite='chain', n=3, samples=10, rng_seed=11)
        self.assertTrue(chain['passed'])

    def test_closure(self):
        payload = self.payload(
            'gt_verify', suite='closure', seed=self.seed_file(omega_example_seed()), radius=1)
        self.assertTrue(payload['passed'])

    def test_reproducible(self):
        options = {'suite': 'relations', 'n': 2, 'samples': 6, 'rng_seed': 5}
        self.assertEqual(
            self.run_command('gt_verify', **options), self.run_command('gt_verify', **options))

    def test_failed_check_exits_one(self):
        failing = SuiteReport('findim')
        failing.check('L(1,0) dimension', False, 'forced')
        with mock.patch('cli.management.commands.gt_verify.findim_report', return_value=failing):
            out = StringIO()
            with self.assertRaises(CommandError) as caught:
                call_command('gt_verify', suite='findim', weight='1,0', stdout=out)
        self.assertEqual(caught.exception.returncode, 1)
        self.assertFalse(json.loads(out.getvalue())['payload']['passed'])


class DocumentTests(CommandTestCase):

    def test_byte_identical(self):
        path = self.seed_file(omega_example_seed())
        first = self.run_command('gt_omega', seed=path, shift='1,0,-1')
        second = self.run_command('gt_omega', seed=path, shift='1,0,-1')
        self.assertEqual(first, second)

    def test_envelope(self):
        path = self.seed_file(omega_example_seed())
        document = json.loads(self.run_command('gt_act', seed=path, generator='2,1'))
        self.assertEqual(document['schema_version'], '1')
        self.assertEqual(document['command']['name'], 'gt_act')
        self.assertEqual(document['command']['options']['generator'], '2,1')
        self.assertEqual(
            document['input_digest'],
            input_digest(document['command'], seed_document(omega_example_seed())))

    def test_digest_follows_the_seed(self):
        first = json.loads(self.run_command('gt_omega', seed=self.seed_file(omega_example_seed())))
        second = json.loads(self.run_command('gt_omega', seed=self.seed_file(block_example_seed())))
        self.assertNotEqual(first['input_digest'], second['input_digest'])
