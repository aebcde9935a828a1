from django.test import SimpleTestCase

from apps.verification import suites


class CodesSuiteTest(SimpleTestCase):

    def test_all_checks_pass(self):
        results = suites.codes_suite({'budget': 60})
        self.assertTrue(all(r.passed for r in results), [r.as_json() for r in results if not r.passed])

    def test_construction_a_detail(self):
        passed, detail = suites._construction_a_e8(60)
        self.assertTrue(passed)
        self.assertEqual(detail, {'doubly_even': True, 'det': '256', 'norm4': 240})


class GriessChecksTest(SimpleTestCase):

    def test_conformal_a2(self):
        passed, detail = suites._conformal('A', 2)
        self.assertTrue(passed)
        self.assertEqual(detail['omega_tilde'], '4/5')
        self.assertEqual(detail['s'], '6/5')

    def test_conformal_e7(self):
        passed, detail = suites._conformal('E', 7)
        self.assertTrue(passed)
        self.assertEqual(detail['omega_tilde'], '7/10')

    def test_x_eta_d5(self):
        passed, detail = suites._x_eta('D', 5, 60)
        self.assertTrue(passed)
        self.assertEqual(detail['h'], 8)
        self.assertEqual(detail['cosets'], 4)
        self.assertEqual(detail['minimal_norms'], ['0', '1', '5/4'])

    def test_highest_weight_a3(self):
        passed, detail = suites._highest_weight('A', 3, 60)
        self.assertTrue(passed)
        self.assertEqual(sorted(detail['weights']), ['0', '1', '3/4', '3/4'])

    def test_hamming_vectors(self):
        passed, detail = suites._hamming_e()
        self.assertTrue(passed)
        self.assertEqual(detail['vectors'], 32)

    def test_frames(self):
        self.assertEqual(suites._frames(), (True, {'standard': True, 'hamming': True}))

    def test_weyl(self):
        self.assertEqual(suites._weyl(), (True, {'moved_by': []}))

    def test_tau_module(self):
        passed, detail = suites._tau_module()
        self.assertTrue(passed)
        self.assertEqual(detail['spaces'], 120)

    def test_tau_spectrum(self):
        passed, detail = suites._tau_spectrum()
        self.assertTrue(passed)
        self.assertEqual(sum(detail['spectra'].values()), 256)
        self.assertEqual(detail['spectra']['weight 1 [0:7, 1/16:8, 1/2:1]'], 135)


class MckayChecksTest(SimpleTestCase):

    def test_counting_in_larger_field(self):
        passed, detail = suites._counting_in_field(5, 60)
        self.assertTrue(passed)
        self.assertEqual(detail['value'], '5/1024')

    def test_chains(self):
        passed, detail = suites._chains()
        self.assertTrue(passed)
        self.assertEqual(len(detail['chains']), 5)
