from django.core.management.base import BaseCommand, CommandError

from czx.congruence import congruence_from_pairs
from czx.exceptions import CzError, FormError
from czx.utils import parse_pairs


class Command(BaseCommand):
    """Печатает наименьшую конгруэнцию на 𝒞_ℤ, содержащую заданные пары."""
    help = 'Classifies the congruence generated by pairs, e.g. "((4,0),(1,0));((6,0),(0,0))"'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('pairs', help='semicolon-separated pairs ((a,b),(c,d))')

    def handle(self, *args, **options):
        try:
            spec = congruence_from_pairs(parse_pairs(options['pairs']))
        except (FormError, CzError) as e:
            raise CommandError(str(e), returncode=2)
        self.stdout.write(str(spec))
