from action.formulas import ActionMode, act
from core.rationals import format_rational
from core.vectors import GTVector

from cli.command import GTCommand
from cli.serializers import ActInputSerializer


class Command(GTCommand):
    help = "Apply one generator E_ij to the basis tableau T(L + shift)"
    input_serializer_class = ActInputSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--generator', required=True, help='Generator indices "i,j"')
        parser.add_argument(
            '--mode', choices=ActionMode.values, default=ActionMode.GENERIC,
            help='generic (default) or standard (finite-dimensional truncation)')

    def run(self, seed, params):
        g = params.generator_for(seed)
        mode = ActionMode(params.validated_data['mode'])
        t = seed.tableau(params.shift_for(seed))
        image = act(g, GTVector.basis(t), mode)
        return {
            'n': seed.n,
            'generator': [g.i, g.j],
            'mode': mode.value,
            'shift': list(t.shift),
            'terms': [
                {'shift': list(shift), 'coefficient': format_rational(c)}
                for shift, c in image.items()
            ],
        }
