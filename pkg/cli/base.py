"""
Shared plumbing for the management commands: argument validation, output
redirection, verbosity and the mapping of library errors onto exit codes.
"""
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from utils.exceptions import IntegrityFailure, InvalidArgument, JordanPartsError, ResourceLimit

USAGE_ERROR = 2
FAILURE = 1

_VERBOSITY_LEVELS = {2: logging.INFO, 3: logging.DEBUG}


class JordanPartsCommand(BaseCommand):
    """
    Subclasses set `request_serializer` and implement `run(data)`, returning the output text.
    """
    request_serializer = None

    def add_arguments(self, parser):
        parser.add_argument('--output', metavar='FILE', help='write to FILE instead of stdout')

    def handle(self, *args, **options):
        level = _VERBOSITY_LEVELS.get(options['verbosity'])
        if level is not None:
            for name in settings.JORDANPARTS_LOGGERS:
                logging.getLogger(name).setLevel(level)
        self.verbosity = options['verbosity']

        data = self.validate(options)
        try:
            text = self.run(data)
        except (InvalidArgument, ResourceLimit) as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        except IntegrityFailure as exc:
            raise CommandError(f'integrity failure: {exc}', returncode=FAILURE)
        except JordanPartsError as exc:
            raise CommandError(str(exc), returncode=FAILURE)

        self.emit(text, options.get('output'))
        self.after_output(data)

    def validate(self, options):
        fields = self.request_serializer().fields
        payload = {name: options[name] for name in fields if options.get(name) is not None}
        serializer = self.request_serializer(data=payload)
        if not serializer.is_valid():
            messages = '; '.join(
                f'{field}: {" ".join(str(error) for error in errors)}'
                for field, errors in serializer.errors.items()
            )
            raise CommandError(messages, returncode=USAGE_ERROR)
        return serializer.validated_data

    def emit(self, text, output=None):
        if not text.endswith('\n'):
            text += '\n'
        if output:
            with open(output, 'w', encoding='utf-8', newline='') as handle:
                handle.write(text)
        else:
            self.stdout.write(text, ending='')

    def after_output(self, data):
        """
        Hook run once the output is written; raise CommandError here to fail after printing.
        """

    def run(self, data):
        raise NotImplementedError
