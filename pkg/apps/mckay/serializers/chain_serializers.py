from rest_framework import serializers


class ChainSerializer(serializers.Serializer):
    node = serializers.IntegerField()
    chain = serializers.CharField(help_text='L(i) < middle < E8 as Dynkin labels')
    indices = serializers.ListField(child=serializers.IntegerField(), min_length=2, max_length=2)
    power_map = serializers.CharField(allow_null=True)
