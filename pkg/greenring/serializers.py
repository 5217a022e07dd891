from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from utils.exceptions import IntegrityFailure
from .decompositions import Decomposition


class PartSerializer(serializers.Serializer):
    """
    One summand m V_d of a decomposition.
    """
    dim = serializers.IntegerField(min_value=1)
    mult = serializers.IntegerField(min_value=1)


class DecompositionSerializer(serializers.Serializer):
    """
    Canonical serialized form {"r", "s", "p", "parts": [{"dim", "mult"}, ...]}.

    Parts are emitted in strictly decreasing dim order. Deserializing rebuilds the
    Decomposition, so a payload whose parts do not sum to r*s is rejected.
    """
    r = serializers.IntegerField(min_value=0)
    s = serializers.IntegerField(min_value=0)
    p = serializers.IntegerField(min_value=0)
    parts = PartSerializer(many=True, source='pairs')

    def validate(self, data):
        pairs = [(part['dim'], part['mult']) for part in data['pairs']]
        try:
            data['decomposition'] = Decomposition(
                data['r'], data['s'], data['p'],
                tuple(sorted(pairs, reverse=True))
            )
        except IntegrityFailure as exc:
            raise serializers.ValidationError({'parts': str(exc)})
        return data

    def create(self, validated_data):
        return validated_data['decomposition']


def render_json(data):
    """
    Compact JSON text for already-serialized data.
    """
    return JSONRenderer().render(data).decode('utf-8')
