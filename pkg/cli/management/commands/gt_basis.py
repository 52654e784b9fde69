from core.omega import omega_plus_set
from core.tableaux import Shift

from cli.command import GTCommand
from cli.serializers import BasisInputSerializer
from structure.bases import basis_I_in_box, basis_N_in_box
from structure.boxes import Box


class Command(GTCommand):
    help = ("Basis of U T(R) (which=N) or of the irreducible module holding T(R) "
            "(which=I) inside the box of the given radius around the zero shift; "
            "R = L + shift")
    input_serializer_class = BasisInputSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--radius', type=int, required=True, help='Box radius')
        parser.add_argument('--which', choices=['N', 'I'], default='I')

    def run(self, seed, params):
        r = seed.tableau(params.shift_for(seed))
        radius, which = params.validated_data['radius'], params.validated_data['which']
        box = Box.around(Shift.zero(seed.n), radius)
        basis = (basis_N_in_box if which == 'N' else basis_I_in_box)(r, box)
        return {
            'n': seed.n,
            'which': which,
            'radius': radius,
            'shift': list(r.shift),
            'omega_plus': omega_plus_set(r).as_lists(),
            'scanned': box.size,
            'shifts': [list(q.shift) for q in basis],
        }
