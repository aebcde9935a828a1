from drf_spectacular.utils import extend_schema
from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.exact.exceptions import VerificationError
from apps.rootsys.chains import check_intermediate_chains

from ..serializers import ChainSerializer
from .node_views import cached


class ChainListAPIView(APIView):
    permission_classes = [AllowAny]

    @extend_schema(
        responses={200: ChainSerializer(many=True)},
        description='Intermediate lattices L(i) < M < E8 with their indices and power maps',
    )
    def get(self, request):
        try:
            data = cached('mckay:chains', lambda: [c.as_json() for c in check_intermediate_chains()])
        except VerificationError as error:
            return Response(error.as_record(), status=status.HTTP_500_INTERNAL_SERVER_ERROR)
        return Response(ChainSerializer(data, many=True).data)
