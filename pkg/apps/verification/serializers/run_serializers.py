from django.conf import settings
from rest_framework import serializers

from apps.rootsys.constants import MARKS

from ..constants import COMMANDS, FORMAT_JSON, FORMATS, NODES


class RunConfigSerializer(serializers.Serializer):
    command = serializers.ChoiceField(choices=COMMANDS)
    nodes = serializers.ListField(
        child=serializers.IntegerField(min_value=min(NODES), max_value=max(NODES)),
        required=False,
        allow_empty=False,
    )
    format = serializers.ChoiceField(choices=FORMATS, default=FORMAT_JSON)
    budget = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    long = serializers.BooleanField(default=False)
    field_order = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate_nodes(self, value):
        return sorted(set(value))

    def validate(self, attrs):
        attrs['nodes'] = attrs.get('nodes') or list(NODES)
        if attrs.get('budget') is None:
            attrs['budget'] = settings.MCKAY_TIME_BUDGET
        field_order = attrs.get('field_order')
        if field_order:
            bad = [i for i in attrs['nodes'] if field_order % MARKS[i]]
            if bad:
                raise serializers.ValidationError({
                    'field_order': f'{field_order} is not a multiple of n_i for nodes {bad}'
                })
        else:
            attrs['field_order'] = None
        return attrs
