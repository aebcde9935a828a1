from django.core.management.base import BaseCommand, CommandError

from ...constants import COMMANDS, FORMATS
from ...runner import run
from ...serializers import RunConfigSerializer


class Command(BaseCommand):
    help = 'Run the verification suites for the extended E8 diagram and print a report'

    def add_arguments(self, parser):
        parser.add_argument('command', choices=COMMANDS)
        parser.add_argument('--node', dest='nodes', type=int, action='append',
                            help='node index 0..8, repeatable; default all nine')
        parser.add_argument('--format', default='json', choices=FORMATS)
        parser.add_argument('--budget', type=int, help='seconds per lattice enumeration')
        parser.add_argument('--long', action='store_true', help='also count the Leech kissing number')
        parser.add_argument('--field-order', dest='field_order', type=int,
                            help='evaluate the counting formula in Q(zeta_m) for this m')

    def handle(self, *args, **options):
        data = {key: options[key] for key in ('command', 'format', 'long')}
        for key in ('nodes', 'budget', 'field_order'):
            if options.get(key) is not None:
                data[key] = options[key]
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f'invalid options: {dict(serializer.errors)}')
        result = run(serializer.validated_data)
        self.stdout.write(result.output, ending='')
        if not result.passed:
            raise CommandError(f"{data['command']} failed", returncode=result.exit_code)
