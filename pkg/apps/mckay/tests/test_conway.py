from fractions import Fraction

from django.test import SimpleTestCase

from apps.exact.scalars import Cyclotomic
from apps.mckay.constants import COMPONENT_ROW, DIFFERENCE_ROW, RECORDED, SIGMA_ROW
from apps.mckay.conway import conway_report, difference_scale


class ConwayReportTest(SimpleTestCase):

    def test_1a_single_row(self):
        rows = conway_report(0)
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0].target, 't_0')
        self.assertEqual(rows[0].scale, Fraction(1, 32))
        self.assertTrue(rows[0].verified)

    def test_2b_only_sigma_rows(self):
        rows = conway_report(7)
        self.assertEqual([row.kind for row in rows], [SIGMA_ROW, SIGMA_ROW])
        self.assertEqual([row.target for row in rows], ['t_0', 't_1'])

    def test_sigma_rows_are_ising(self):
        for row in conway_report(5)[:6]:
            with self.subTest(element=row.element):
                self.assertTrue(row.verified)
                self.assertEqual(row.checks['central_charge'], '1/2')

    def test_6a_component_rows(self):
        rows = [row for row in conway_report(5) if row.kind == COMPONENT_ROW]
        self.assertEqual([row.target for row in rows], ['t_2A', 'u_3A'])
        a1, a2 = rows
        self.assertEqual(a1.scale, Fraction(1, 32))
        self.assertEqual(a1.checks['central_charge'], '1/2')
        self.assertEqual(a2.checks['central_charge'], '4/5')
        self.assertTrue(a1.verified and a2.verified)

    def test_4a_row_is_recorded(self):
        row = conway_report(3)[-1]
        self.assertEqual(row.target, 'v_4A')
        self.assertEqual(row.scale, Fraction(1, 96))
        self.assertEqual(row.status, RECORDED)
        self.assertEqual(row.checks['central_charge'], '1')

    def test_5a_difference_row(self):
        row = conway_report(4)[-1]
        self.assertEqual(row.kind, DIFFERENCE_ROW)
        self.assertEqual(row.checks['norm'], '8/7')
        self.assertTrue(row.checks['orthogonal'])
        self.assertTrue(row.verified)

    def test_difference_scale(self):
        scale = difference_scale()
        self.assertIsInstance(scale, Cyclotomic)
        self.assertEqual(scale * scale, Fraction(1, 35 * 35 * 5))
        self.assertEqual(scale * Cyclotomic.sqrt5() * 35, -1)

    def test_as_json(self):
        data = conway_report(1)[-1].as_json()
        self.assertEqual(data['element'], 'omega_tilde[A1]')
        self.assertEqual(data['scale'], '1/32')
        self.assertEqual(data['status'], RECORDED)
        self.assertEqual(data['check_status'], 'verified')
