from cli.command import GTCommand
from cli.serializers import BlockInputSerializer
from structure.blocks import block_count, census, d_table, sufficient_radius


class Command(GTCommand):
    help = ("Block structure of a generic seed: the d_pu table and the number of "
            "irreducible modules, optionally checked by a census of Omega+ classes")
    input_serializer_class = BlockInputSerializer
    takes_shift = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--radius', type=int, help='Census box radius')
        parser.add_argument(
            '--census', action='store_true',
            help='Run the census at the sufficient radius when --radius is not given')

    def run(self, seed, params):
        count = block_count(seed)
        table = d_table(seed)
        payload = {
            'n': seed.n,
            'd_table': [{'p': p, 'u': u, 'd': d} for (p, u), d in table.items()],
            'block_count': count,
            'irreducible': count == 1,
            'sufficient_radius': sufficient_radius(seed),
        }
        radius = params.validated_data['radius']
        if radius is None and not params.validated_data['census']:
            return payload
        poset = census(seed, radius)
        index = {plus: number for number, (plus, _) in enumerate(poset.nodes)}
        payload['census'] = {
            'radius': sufficient_radius(seed) if radius is None else radius,
            'scanned': poset.scanned,
            'varied': list(poset.varied),
            'skipped': poset.skipped,
            'classes': [
                {'omega_plus': plus.as_lists(), 'shift': list(shift)}
                for plus, shift in poset.nodes
            ],
            'edges': [[index[a], index[b]] for a, b in poset.edges],
            'match': None if poset.skipped else poset.node_count == count,
        }
        return payload
