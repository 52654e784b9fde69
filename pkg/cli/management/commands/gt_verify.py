import logging
import math

from django.core.management.base import CommandError
from rest_framework import serializers

from action.checks import gamma_report, relation_report
from action.formulas import ActionMode
from core.sampling import make_rng, random_generic_seeds, random_shift
from findim.checks import findim_report
from findim.weights import HighestWeight

from cli.command import EXIT_FAILURE, GTCommand
from cli.serializers import SUITES, VerifyInputSerializer
from structure.checks import census_report, chain_report, closure_report

logger = logging.getLogger(__name__)

DEFAULT_N = 3
# radius of the random shifts fed to the relations and gamma suites
SAMPLE_RADIUS = 2


class Command(GTCommand):
    help = ("Run one verification suite on a seed document, on random generic seeds "
            "of size --n, or (findim) on L(--weight); exits 1 when a check fails")
    input_serializer_class = VerifyInputSerializer
    seed_required = False
    takes_shift = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--suite', choices=SUITES, required=True)
        parser.add_argument('--samples', type=int, help='Sample count (default 20)')
        parser.add_argument('--rng-seed', dest='rng_seed', type=int, help='Random seed')
        parser.add_argument('--n', type=int, help='Size of random seeds (default 3)')
        parser.add_argument('--weight', help='Highest weight "l1,...,ln" for the findim suite')
        parser.add_argument('--radius', type=int, help='Box or shift radius of the suite')

    def _seeds(self, seed, n, count, rng, **kwargs):
        if seed is not None:
            return [seed]
        return random_generic_seeds(n, count, rng, **kwargs)

    def run(self, seed, params):
        options = params.validated_data
        suite, samples = options['suite'], options['samples']
        rng = make_rng(options['rng_seed'])
        n = seed.n if seed is not None else options['n'] or DEFAULT_N
        radius = options['radius']
        logger.info("suite %s: %d samples, rng seed %d", suite, samples, options['rng_seed'])

        if suite == 'findim':
            if seed is not None:
                raise serializers.ValidationError(
                    {'seed': 'the findim suite builds its basis from --weight and takes no --seed'})
            report = findim_report(HighestWeight(options['weight']))
        elif suite in ('relations', 'gamma'):
            seeds = self._seeds(seed, n, math.ceil(samples / 4), rng)
            shift_radius = SAMPLE_RADIUS if radius is None else radius
            tableaux = [
                seeds[i % len(seeds)].tableau(random_shift(n, rng, shift_radius))
                for i in range(samples)
            ]
            check = relation_report if suite == 'relations' else gamma_report
            report = check(tableaux, ActionMode.GENERIC)
        elif suite == 'closure':
            seeds = self._seeds(seed, n, samples, rng, nonempty_omega=True)
            report = closure_report(seeds, radius=2 if radius is None else radius)
        elif suite == 'census':
            # integer parts of 0 keep sufficient boxes of n <= 4 under the cap
            report = census_report(self._seeds(seed, n, samples, rng, spread=0))
        else:
            seeds = self._seeds(seed, n, 5, rng, nonempty_omega=True)
            report = chain_report(seeds, rng, samples, radius=3 if radius is None else radius)
        return report.as_payload()

    def check_outcome(self, payload):
        if not payload['passed']:
            raise CommandError(
                f"suite {payload['suite']}: {payload['failed']} of {payload['checked']} "
                f"checks failed", returncode=EXIT_FAILURE)
