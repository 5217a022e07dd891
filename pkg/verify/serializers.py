from rest_framework import serializers

from greenring.serializers import PartSerializer


class CrossCheckReportSerializer(serializers.Serializer):
    """
    One verification record: the decomposition each algorithm produced, the
    checker outcomes, the notes and the overall verdict.
    """
    r = serializers.IntegerField(read_only=True)
    s = serializers.IntegerField(read_only=True)
    p = serializers.IntegerField(read_only=True)
    algorithms = serializers.SerializerMethodField()
    checks = serializers.DictField(child=serializers.BooleanField(), read_only=True)
    errors = serializers.DictField(child=serializers.CharField(), read_only=True)
    notes = serializers.ListField(child=serializers.CharField(), read_only=True)
    ok = serializers.BooleanField(read_only=True)
    diagnostics = serializers.SerializerMethodField()

    def get_algorithms(self, obj):
        return {
            name: PartSerializer(decomposition.pairs, many=True).data
            for name, decomposition in obj.algorithms.items()
        }

    def get_diagnostics(self, obj):
        return obj.diagnostics()
