from unittest import mock

from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APIClient

from apps.mckay.exceptions import TableMismatch


class NodeViewSetTest(SimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def test_list(self):
        response = self.client.get(reverse('mckay:node-list'))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(len(response.data), 9)
        self.assertEqual(response.data[3]['label'], '4A')
        self.assertEqual(response.data[7]['table_value'], '0')

    def test_retrieve(self):
        response = self.client.get(reverse('mckay:node-detail', args=[1]))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['inner_ef'], '1/32')
        self.assertEqual(response.data['u2_dim'], 3)

    def test_unknown_node(self):
        for pk in (9, -1, 'x'):
            response = self.client.get(f'/api/mckay/nodes/{pk}/')
            with self.subTest(pk=pk):
                self.assertEqual(response.status_code, status.HTTP_404_NOT_FOUND)

    def test_conway(self):
        response = self.client.get(reverse('mckay:node-conway', args=[2]))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data[-1]['target'], 'u_3A')
        self.assertEqual(response.data[-1]['scale'], '1/45')

    def test_failure_record(self):
        error = TableMismatch(anchor='anchor', detail={'node': 2})
        with mock.patch('apps.mckay.views.node_views.node_report', side_effect=error):
            response = self.client.get(reverse('mckay:node-detail', args=[2]))
        self.assertEqual(response.status_code, status.HTTP_500_INTERNAL_SERVER_ERROR)
        self.assertEqual(response.data['error'], 'TableMismatch')
        self.assertEqual(response.data['anchor'], 'anchor')


class ChainListAPIViewTest(SimpleTestCase):

    def test_chains(self):
        response = APIClient().get(reverse('mckay:chains'))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(all(len(item['indices']) == 2 for item in response.data))
