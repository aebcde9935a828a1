from django.urls import include, path
from rest_framework.routers import DefaultRouter

from .views import ChainListAPIView, NodeViewSet

app_name = 'mckay'

router = DefaultRouter()
router.register(r'nodes', NodeViewSet, basename='node')

urlpatterns = [
    path('chains/', ChainListAPIView.as_view(), name='chains'),
    path('', include(router.urls)),
]
