"""Shared plumbing for the gt_* management commands.

Every command validates its flags with an input serializer, runs one
library operation and writes a ResultDocument to standard output. Errors are
turned into CommandError with the exit code of their kind:

    1  a verification or theorem-backed search failed
    2  malformed input (document, flag or index out of range)
    3  a mathematical precondition fails (non-generic seed, zero denominator)
"""
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError, ValidationError

from core.exceptions import BoundsError, DomainError, InvariantViolation, SeedMismatchError

from .documents import load_seed, render_result
from .serializers import CommandInputSerializer

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3


def _flatten(detail, path=''):
    """ValidationError.detail as "field.index: message" lines"""
    if isinstance(detail, dict):
        lines = []
        for key, value in detail.items():
            name = '' if key == 'non_field_errors' else str(key)
            lines.extend(_flatten(value, '.'.join(x for x in (path, name) if x)))
        return lines
    if isinstance(detail, list):
        lines = []
        for index, item in enumerate(detail):
            if isinstance(item, (dict, list)):
                lines.extend(_flatten(item, f"{path}.{index}" if path else str(index)))
            else:
                lines.extend(_flatten(item, path))
        return lines
    return [f"{path}: {detail}" if path else str(detail)]


class GTCommand(BaseCommand):
    """Base class: subclasses set input_serializer_class and implement run()"""
    input_serializer_class = CommandInputSerializer
    seed_required = True
    takes_shift = True

    def add_arguments(self, parser):
        parser.add_argument(
            '--seed', required=self.seed_required,
            help='Path of a seed document {"n": ..., "rows": [[...], ...]}')
        if self.takes_shift:
            parser.add_argument(
                '--shift',
                help='Integer shift "z,z,..." in canonical order (write --shift=-1,0,0 '
                     'when it starts with a minus sign); defaults to zero')

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def run(self, seed, params):
        """Return the payload of the ResultDocument"""
        raise NotImplementedError

    def check_outcome(self, payload):
        """Hook for commands whose success depends on the payload"""

    def handle(self, *args, **options):
        try:
            seed, seed_data = (None, None)
            if options.get('seed'):
                seed, seed_data = load_seed(options['seed'])
            fields = self.input_serializer_class().fields
            params = self.input_serializer_class(data={
                name: options[name] for name in fields if options.get(name) is not None
            })
            params.is_valid(raise_exception=True)
            payload = self.run(seed, params)
        except (ValidationError, ParseError) as exc:
            detail = exc.detail if isinstance(exc, ValidationError) else [str(exc.detail)]
            raise CommandError('; '.join(_flatten(detail)), returncode=EXIT_INPUT)
        except BoundsError as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT)
        except (DomainError, SeedMismatchError) as exc:
            raise CommandError(str(exc), returncode=EXIT_DOMAIN)
        except InvariantViolation as exc:
            logger.error("%s: %s", self.command_name, exc)
            raise CommandError(str(exc), returncode=EXIT_FAILURE)

        self.stdout.write(render_result(self.command_name, params.data, seed_data, payload))
        self.check_outcome(payload)
