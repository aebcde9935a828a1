from .run_serializers import (
    RunConfigSerializer,
)

__all__ = [
    'RunConfigSerializer',
]
