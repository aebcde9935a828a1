from .node_serializers import (
    NodeSummarySerializer,
    NodeReportSerializer,
    ConwayRowSerializer,
    DihedralSerializer,
)
from .chain_serializers import (
    ChainSerializer,
)

__all__ = [
    # Nodes
    'NodeSummarySerializer',
    'NodeReportSerializer',
    'ConwayRowSerializer',
    'DihedralSerializer',

    # Chains
    'ChainSerializer',
]
