from django.core.management.base import BaseCommand, CommandError

from czx.exceptions import CzError, FormError
from czx.models import ext_product, format_element
from czx.utils import parse_ext_element, parse_model


class Command(BaseCommand):
    """Вычисляет произведение слова в модели (левая свёртка) и печатает результат."""
    help = 'Evaluates a word of elements in the given model, e.g. cz_eval --model s3 "(2,5)" z:1'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--model', default='cz', help='cz, s1, s2:k=<k>,n=<n>, s3, s4 or s5:k=<k>,n=<n>')
        parser.add_argument('word', nargs='+', help='elements: (a,b), e1, g:<value>, z:<n>')

    def handle(self, *args, **options):
        try:
            m = parse_model(options['model'])
            word = [parse_ext_element(token, m, 'word') for token in options['word']]
            product = ext_product(m, *word)
        except (FormError, CzError) as e:
            raise CommandError(str(e), returncode=2)
        self.stdout.write(format_element(m, product))
