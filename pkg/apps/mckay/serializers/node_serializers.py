from rest_framework import serializers

from ..constants import ROW_KINDS, ROW_STATUSES


class NodeSummarySerializer(serializers.Serializer):
    i = serializers.IntegerField(min_value=0, max_value=8)
    label = serializers.CharField()
    n = serializers.IntegerField()
    components = serializers.CharField()
    table_value = serializers.CharField(help_text='<e, f> as "p/q"')


class ConwayRowSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=ROW_KINDS)
    element = serializers.CharField()
    scale = serializers.CharField(help_text='rational "p/q" or cyclotomic "n:[c0,c1,...]"')
    target = serializers.CharField()
    status = serializers.ChoiceField(choices=ROW_STATUSES)
    check_status = serializers.CharField()
    checks = serializers.DictField()


class DihedralSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    sigma_order = serializers.IntegerField()
    theta_involution = serializers.BooleanField()
    theta_sigma_theta_is_sigma_inverse = serializers.BooleanField()
    theta_outside_sigma = serializers.BooleanField()
    group_order = serializers.IntegerField()
    passed = serializers.BooleanField()


class NodeReportSerializer(NodeSummarySerializer):
    root_count = serializers.IntegerField()
    coset_counts = serializers.ListField(child=serializers.IntegerField())
    inner_ef = serializers.CharField()
    inner_ef_counting = serializers.CharField()
    inner_ef_u2 = serializers.CharField()
    u2_dim = serializers.IntegerField()
    u2_generated_by_ef = serializers.BooleanField()
    dihedral = DihedralSerializer()
    dihedral_verified = serializers.BooleanField()
    tau_order_E8 = serializers.IntegerField()
    tau_order_dual = serializers.IntegerField()
    tau_order_leech = serializers.IntegerField()
    tau_equals_sigma_inverse_squared = serializers.BooleanField()
    conway_map = ConwayRowSerializer(many=True)
    passed = serializers.BooleanField()
