from rest_framework import serializers

from .utils import parse_model, parse_window


class ModelSpecField(serializers.Field):
    """Модель в текстовой форме "s2:k=6,n=2" <-> ModelSpec"""

    def to_internal_value(self, data):
        return parse_model(data, self.field_name)

    def to_representation(self, value):
        return str(value)


class WindowField(serializers.Field):
    """Окно "lo:hi" <-> Window"""

    def to_internal_value(self, data):
        return parse_window(data, self.field_name)

    def to_representation(self, value):
        return str(value)
