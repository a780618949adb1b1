import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from czx.exceptions import CzError
from czx.serializers import FORMAT_CHOICES, Report, ReportSerializer, SuiteConfigSerializer, render
from czx.suites import SUITE_NAMES, run_suites
from czx_verify import __version__

logger = logging.getLogger('czx')


def _first_error(detail) -> str:
    """первое сообщение из вложенной структуры ошибок DRF"""
    while isinstance(detail, (dict, list)):
        detail = next(iter(detail.values())) if isinstance(detail, dict) else detail[0]
    return str(detail)


class Command(BaseCommand):
    """
    Запускает проверочные наборы и пишет отчёт в stdout или в файл --out.
    Код возврата: 0 - ни один набор не упал, 1 - есть нарушения, 2 - неверные параметры.
    """
    help = 'Runs verification suites against a model and writes a report'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--model', default='cz', help='cz, s1, s2:k=<k>,n=<n>, s3, s4 or s5:k=<k>,n=<n>')
        parser.add_argument('--window', default=None, help='window lo:hi (default: %s)' % settings.CZX_DEFAULT_WINDOW)
        parser.add_argument('--group-bound', dest='group_bound', default=settings.CZX_GROUP_BOUND)
        parser.add_argument('--tail-bound', dest='tail_bound', default=settings.CZX_TAIL_BOUND)
        parser.add_argument('--suite', dest='suites', action='append', default=[],
                            help='one of %s; repeatable, all suites by default' % ', '.join(SUITE_NAMES))
        parser.add_argument('--out', default=None, help='report path, stdout by default')
        parser.add_argument('--seed', default=settings.CZX_SEED, help='seed of the randomized sub-checks')
        parser.add_argument('--format', dest='report_format', default=settings.CZX_REPORT_FORMAT,
                            choices=[choice[0] for choice in FORMAT_CHOICES])

    def handle(self, *args, **options):
        serializer = SuiteConfigSerializer(data={
            'model': options['model'],
            'window': options['window'] or settings.CZX_DEFAULT_WINDOW,
            'group_bound': options['group_bound'],
            'tail_bound': options['tail_bound'],
            'suites': options['suites'],
            'seed': options['seed'],
        })
        try:
            serializer.is_valid(raise_exception=True)
            cfg = serializer.to_config(settings.CZX_MAX_COUNTEREXAMPLES)
            certificates = run_suites(cfg)
        except ValidationError as e:
            raise CommandError(_first_error(e.detail), returncode=2)
        except CzError as e:
            raise CommandError(str(e), returncode=2)

        report = Report(cfg, certificates, __version__)
        content = render(ReportSerializer(report).data, options['report_format'])
        if options['out']:
            try:
                with open(options['out'], 'w') as f:
                    f.write(content)
            except OSError as e:
                raise CommandError('cannot write report to %s: %s' % (options['out'], e), returncode=2)
            logger.info('report written to %s', options['out'])
        else:
            self.stdout.write(content)

        if report.failed:
            failed = [cert.name for cert in certificates if not cert.passed]
            raise CommandError('suites failed: %s' % ', '.join(failed), returncode=1)
