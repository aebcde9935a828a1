import json
from fractions import Fraction
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from apps.mckay.exceptions import TableMismatch
from apps.verification.checks import CheckResult, run_check
from apps.verification.constants import ANCHORS, VERIFY_CODES, VERIFY_MCKAY
from apps.verification.renderers import diagram_table, power_of_two, render_json, render_markdown, sort_keys
from apps.verification.runner import run
from apps.verification.serializers import RunConfigSerializer

TABLE = ['1/4', '1/32', '13/1024', '1/128', '3/512', '5/1024', '1/256', '0', '1/256']
DOUBLED = ['1', '1/8', '13/2^8', '1/2^5', '3/2^7', '5/2^8', '1/2^6', '0', '1/2^6']
LABELS = ['1A', '2A', '3A', '4A', '5A', '6A', '4B', '2B', '3C']


def fake_report(i):
    return {
        'i': i,
        'label': LABELS[i],
        'n': 1,
        'components': 'E8',
        'root_count': 240,
        'coset_counts': [],
        'inner_ef': TABLE[i],
        'u2_dim': 1,
        'tau_order_E8': 1,
        'tau_order_dual': 1,
        'tau_order_leech': 1,
    }


def fake_suite(passed=True):
    def suite(config):
        return [CheckResult(check=f'node {i}', passed=passed, anchor='claim', detail=fake_report(i))
                for i in config['nodes']]
    return suite


class RunConfigSerializerTest(SimpleTestCase):

    def test_defaults(self):
        serializer = RunConfigSerializer(data={'command': VERIFY_MCKAY})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.validated_data
        self.assertEqual(config['nodes'], list(range(9)))
        self.assertEqual(config['format'], 'json')
        self.assertFalse(config['long'])
        self.assertIsNone(config['field_order'])
        self.assertGreater(config['budget'], 0)

    def test_nodes_are_sorted_and_unique(self):
        serializer = RunConfigSerializer(data={'command': VERIFY_MCKAY, 'nodes': [7, 2, 7]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['nodes'], [2, 7])

    def test_rejects_bad_values(self):
        for data in (
            {'command': 'verify-everything'},
            {'command': VERIFY_MCKAY, 'nodes': [9]},
            {'command': VERIFY_MCKAY, 'budget': 0},
            {'command': VERIFY_MCKAY, 'format': 'html'},
        ):
            with self.subTest(data=data):
                self.assertFalse(RunConfigSerializer(data=data).is_valid())

    def test_field_order_must_be_multiple(self):
        serializer = RunConfigSerializer(data={'command': VERIFY_MCKAY, 'nodes': [4], 'field_order': 12})
        self.assertFalse(serializer.is_valid())
        self.assertIn('field_order', serializer.errors)
        serializer = RunConfigSerializer(data={'command': VERIFY_MCKAY, 'field_order': 60})
        self.assertTrue(serializer.is_valid(), serializer.errors)


class RunCheckTest(SimpleTestCase):

    def test_passing(self):
        result = run_check('codes', 'hamming8', lambda: (True, {'k': 4}))
        self.assertTrue(result.passed)
        self.assertEqual(result.anchor, ANCHORS['hamming8'])
        self.assertIsNone(result.error)

    def test_error_becomes_record(self):
        def failing():
            raise TableMismatch(anchor='exact values', detail={'node': 2})
        result = run_check('node 2', 'table', failing)
        self.assertFalse(result.passed)
        self.assertEqual(result.anchor, 'exact values')
        self.assertEqual(result.error['error'], 'TableMismatch')
        self.assertEqual(result.detail, {'node': 2})

    def test_error_without_anchor_uses_topic(self):
        def failing():
            raise TableMismatch()
        self.assertEqual(run_check('x', 'chains', failing).anchor, ANCHORS['chains'])


class RendererTest(SimpleTestCase):

    def test_sort_keys(self):
        data = sort_keys({'b': [{'d': 1, 'c': 2}], 'a': 0})
        self.assertEqual(list(data), ['a', 'b'])
        self.assertEqual(list(data['b'][0]), ['c', 'd'])

    def test_json_is_stable(self):
        document = {'version': '1', 'command': 'x', 'results': [], 'pass': True}
        text = render_json(document)
        self.assertEqual(text, render_json(dict(reversed(list(document.items())))))
        self.assertEqual(json.loads(text), document)

    def test_power_of_two(self):
        self.assertEqual(power_of_two(Fraction(1, 8)), '1/8')
        self.assertEqual(power_of_two(Fraction(13, 256)), '13/2^8')
        self.assertEqual(power_of_two(Fraction(0)), '0')
        self.assertEqual(power_of_two(Fraction(1)), '1')

    def test_diagram_column(self):
        table = diagram_table([fake_report(i) for i in range(9)])
        rows = table.splitlines()[2:]
        doubled = [row.split(' | ')[7] for row in rows]
        self.assertEqual(doubled, DOUBLED)
        self.assertEqual([row.split(' | ')[0].strip('| ') for row in rows], LABELS)

    def test_markdown_failure_names_claim(self):
        document = {
            'version': '1',
            'command': VERIFY_CODES,
            'pass': False,
            'results': [{'suite': VERIFY_CODES, 'check': 'Z4 code', 'passed': False,
                         'anchor': 'type II', 'error': None, 'detail': {}}],
        }
        text = render_markdown(document)
        self.assertIn('- FAIL Z4 code', text)
        self.assertIn('claim: type II', text)


@override_settings(MCKAY_VERSION='test')
class RunTest(SimpleTestCase):

    def config(self, **extra):
        serializer = RunConfigSerializer(data={'command': VERIFY_MCKAY, **extra})
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def test_json_document(self):
        with mock.patch.dict('apps.verification.runner.SUITES', {VERIFY_MCKAY: fake_suite()}):
            result = run(self.config(nodes=[7]))
        data = json.loads(result.output)
        self.assertEqual(data['version'], 'test')
        self.assertTrue(data['pass'])
        self.assertEqual(len(data['results']), 1)
        self.assertEqual(data['results'][0]['detail']['inner_ef'], '0')
        self.assertEqual(result.exit_code, 0)

    def test_repeated_runs_identical(self):
        with mock.patch.dict('apps.verification.runner.SUITES', {VERIFY_MCKAY: fake_suite()}):
            first = run(self.config()).output
            second = run(self.config()).output
        self.assertEqual(first, second)

    def test_failure_exit_code(self):
        with mock.patch.dict('apps.verification.runner.SUITES', {VERIFY_MCKAY: fake_suite(False)}):
            result = run(self.config(format='markdown'))
        self.assertEqual(result.exit_code, 1)
        self.assertIn('Result: FAIL', result.output)
        self.assertIn('13/2^8', result.output)


class ManagementCommandTest(SimpleTestCase):

    def test_verify_codes(self):
        out = StringIO()
        call_command('mckay', VERIFY_CODES, stdout=out)
        data = json.loads(out.getvalue())
        self.assertTrue(data['pass'])
        self.assertEqual(data['command'], VERIFY_CODES)
        self.assertEqual(len(data['results']), 5)

    def test_failure_raises(self):
        with mock.patch.dict('apps.verification.runner.SUITES', {VERIFY_MCKAY: fake_suite(False)}):
            with self.assertRaises(CommandError) as caught:
                call_command('mckay', VERIFY_MCKAY, '--node', '2', stdout=StringIO())
        self.assertEqual(caught.exception.returncode, 1)

    def test_invalid_node(self):
        with self.assertRaises(CommandError):
            call_command('mckay', VERIFY_MCKAY, '--node', '12', stdout=StringIO())
