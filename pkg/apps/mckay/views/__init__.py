from .node_views import (
    NodeViewSet,
)
from .chain_views import (
    ChainListAPIView,
)

__all__ = [
    'NodeViewSet',
    'ChainListAPIView',
]
