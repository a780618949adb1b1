import json

import pyaml
from django.utils import timezone
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from .fields import ModelSpecField, WindowField
from .suites import SUITE_NAMES, SuiteConfig, overall_status

FORMAT_JSON = 'json'
FORMAT_YAML = 'yaml'

FORMAT_CHOICES = (
    (FORMAT_JSON, 'json'),
    (FORMAT_YAML, 'yaml'),
)

# наборы, которым нужно хотя бы две точки окна
WIDE_WINDOW_SUITES = ('assoc', 'green')


class SuiteConfigSerializer(serializers.Serializer):
    model = ModelSpecField()
    window = WindowField()
    group_bound = serializers.IntegerField(min_value=0)
    tail_bound = serializers.IntegerField(min_value=1)
    suites = serializers.ListField(child=serializers.ChoiceField(choices=SUITE_NAMES), required=False)
    seed = serializers.IntegerField(required=False, default=0)

    def validate_suites(self, value):
        """убирает повторы, сохраняя порядок; пустой список означает все наборы"""
        return list(dict.fromkeys(value))

    def validate(self, attrs):
        suites = attrs.get('suites') or SUITE_NAMES
        wide = [name for name in suites if name in WIDE_WINDOW_SUITES]
        if wide and attrs['window'].is_degenerate:
            raise serializers.ValidationError({
                'window': ['Window %s is degenerate; suites %s need at least two points.' % (
                    attrs['window'], ', '.join(wide))],
            })
        return attrs

    def to_config(self, max_counterexamples: int = 5) -> SuiteConfig:
        data = self.validated_data
        return SuiteConfig(
            model=data['model'],
            window=data['window'],
            group_bound=data['group_bound'],
            tail_bound=data['tail_bound'],
            suites=tuple(data.get('suites') or ()),
            seed=data.get('seed', 0),
            max_counterexamples=max_counterexamples,
        )


class CertificateSerializer(serializers.Serializer):
    name = serializers.CharField()
    status = serializers.SerializerMethodField()
    checked = serializers.IntegerField()
    violations = serializers.IntegerField()
    skipped = serializers.IntegerField()
    counterexamples = serializers.ListField(child=serializers.DictField())
    notes = serializers.ListField(child=serializers.CharField())

    @staticmethod
    def get_status(obj):
        return obj.status.value


class Report:
    """Отчёт cz_verify: параметры запуска и сертификаты наборов."""
    tool = 'cz_verify'

    def __init__(self, config: SuiteConfig, certificates: list, version: str):
        self.config = config
        self.suites = certificates
        self.version = version
        self.generated_at = timezone.now()
        self.status = overall_status(certificates).value

    @property
    def failed(self) -> bool:
        return self.status == 'fail'


class ReportSerializer(serializers.Serializer):
    tool = serializers.CharField()
    version = serializers.CharField()
    generated_at = serializers.DateTimeField()
    config = SuiteConfigSerializer()
    status = serializers.CharField()
    suites = CertificateSerializer(many=True)

    def to_representation(self, instance):
        """в отчёт попадает фактический список наборов, даже если он не был задан явно"""
        ret = super().to_representation(instance)
        ret['config']['suites'] = [cert.name for cert in instance.suites]
        return ret


def render(data, fmt: str = FORMAT_JSON) -> str:
    """Сериализует данные в JSON (отступ 2) или YAML."""
    content = JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')
    if fmt == FORMAT_YAML:
        out = pyaml.dump(json.loads(content), dst=str)
        return out.decode('utf-8') if isinstance(out, bytes) else out
    return content
