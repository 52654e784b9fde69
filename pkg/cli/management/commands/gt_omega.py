from core.omega import all_triples, omega_plus_set, omega_set, omega_value
from core.rationals import format_rational

from cli.command import GTCommand
from cli.serializers import OmegaInputSerializer


class Command(GTCommand):
    help = "Omega and Omega+ of T(L + shift), with every omega value"
    input_serializer_class = OmegaInputSerializer

    def run(self, seed, params):
        t = seed.tableau(params.shift_for(seed))
        return {
            'n': seed.n,
            'shift': list(t.shift),
            'omega': omega_set(t).as_lists(),
            'omega_plus': omega_plus_set(t).as_lists(),
            'values': [
                {'triple': list(triple), 'value': format_rational(omega_value(t, triple))}
                for triple in all_triples(seed.n)
            ],
        }
