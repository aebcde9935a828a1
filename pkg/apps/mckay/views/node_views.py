from django.conf import settings
from django.core.cache import cache
from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.exceptions import NotFound
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from apps.exact.exceptions import VerificationError

from ..constants import LABELS
from ..conway import conway_report
from ..reports import node_report, node_summary
from ..serializers import ConwayRowSerializer, NodeReportSerializer, NodeSummarySerializer

NODE_PARAMETER = OpenApiParameter(
    name='pk', type=int, location=OpenApiParameter.PATH,
    description='Node index i of the extended E8 diagram, 0..8',
)


def node_index(value):
    try:
        i = int(value)
    except (TypeError, ValueError):
        raise NotFound(f'unknown node {value!r}')
    if i not in LABELS:
        raise NotFound(f'node {i} outside 0..8')
    return i


def cached(key, compute):
    data = cache.get(key)
    if data is None:
        data = compute()
        cache.set(key, data, settings.MCKAY_REPORT_CACHE_TIMEOUT)
    return data


class NodeViewSet(viewsets.ViewSet):
    permission_classes = [AllowAny]

    @extend_schema(
        responses={200: NodeSummarySerializer(many=True)},
        description='The nine nodes of the extended E8 diagram with their table values',
    )
    def list(self, request):
        data = [node_summary(i) for i in sorted(LABELS)]
        return Response(NodeSummarySerializer(data, many=True).data)

    @extend_schema(
        parameters=[NODE_PARAMETER],
        responses={200: NodeReportSerializer},
        description='Full report of one node, recomputed and cross-checked on first request',
    )
    def retrieve(self, request, pk=None):
        i = node_index(pk)
        try:
            data = cached(f'mckay:node:{i}', lambda: node_report(i).as_json())
        except VerificationError as error:
            return Response(error.as_record(), status=status.HTTP_500_INTERNAL_SERVER_ERROR)
        return Response(NodeReportSerializer(data).data)

    @extend_schema(
        parameters=[NODE_PARAMETER],
        responses={200: ConwayRowSerializer(many=True)},
        description='Rows mapping the node into the moonshine Griess algebra',
    )
    @action(detail=True, methods=['get'])
    def conway(self, request, pk=None):
        i = node_index(pk)
        data = cached(f'mckay:conway:{i}', lambda: [row.as_json() for row in conway_report(i)])
        return Response(ConwayRowSerializer(data, many=True).data)
