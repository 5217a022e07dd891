"""
Validation of command-line arguments before any computation starts.
"""
from django.conf import settings
from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework import serializers

from utils.validators import parse_prime_list, positive_dimension, validate_prime
from .choices import Algorithm, OutputFormat


class PairRequestSerializer(serializers.Serializer):
    r = serializers.IntegerField(validators=[positive_dimension])
    s = serializers.IntegerField(validators=[positive_dimension])


class DecomposeRequestSerializer(PairRequestSerializer):
    p = serializers.IntegerField(validators=[validate_prime])
    algorithm = serializers.ChoiceField(choices=Algorithm.choices, default=Algorithm.AUTO)
    format = serializers.ChoiceField(
        choices=[OutputFormat.TEXT, OutputFormat.JSON], default=OutputFormat.TEXT
    )


class TableRequestSerializer(serializers.Serializer):
    rmax = serializers.IntegerField(validators=[positive_dimension])
    smax = serializers.IntegerField(validators=[positive_dimension])
    p = serializers.IntegerField(validators=[validate_prime])
    algorithm = serializers.ChoiceField(choices=Algorithm.choices, default=Algorithm.AUTO)
    format = serializers.ChoiceField(
        choices=[OutputFormat.CSV, OutputFormat.JSON], default=OutputFormat.CSV
    )
    header = serializers.BooleanField(default=False)


class DeltaRequestSerializer(PairRequestSerializer):
    p = serializers.IntegerField(validators=[validate_prime])

    def validate(self, data):
        if data['r'] > data['s']:
            raise serializers.ValidationError(f"need r <= s, got r={data['r']}, s={data['s']}")
        return data


class DetRequestSerializer(PairRequestSerializer):
    k = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)
    p = serializers.IntegerField(validators=[validate_prime], required=False, allow_null=True, default=None)

    def validate(self, data):
        if data['r'] > data['s']:
            raise serializers.ValidationError(f"need r <= s, got r={data['r']}, s={data['s']}")
        if data['k'] is not None and data['k'] > data['r']:
            raise serializers.ValidationError({'k': f"k must not exceed r = {data['r']}"})
        return data


class PrimeListField(serializers.CharField):
    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        try:
            return parse_prime_list(value)
        except DjangoValidationError as exc:
            raise serializers.ValidationError(exc.messages)


class VerifyRequestSerializer(serializers.Serializer):
    rmax = serializers.IntegerField(validators=[positive_dimension])
    smax = serializers.IntegerField(validators=[positive_dimension])
    primes = PrimeListField()
    oracle_cap = serializers.IntegerField(min_value=0, default=0)
    format = serializers.ChoiceField(
        choices=[OutputFormat.TEXT, OutputFormat.JSON], default=OutputFormat.TEXT
    )


class OracleRequestSerializer(PairRequestSerializer):
    p = serializers.IntegerField(validators=[validate_prime])
    oracle_cap = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)

    def validate(self, data):
        if data['oracle_cap'] is None:
            data['oracle_cap'] = settings.JORDANPARTS_ORACLE_CAP
        return data
