from fractions import Fraction
from itertools import combinations

from django.test import SimpleTestCase

from apps.exact.scalars import Cyclotomic
from apps.griess.context import e8_context, sqrt2_context
from apps.griess.element import GriessElement, conformal_check, inner, product
from apps.griess.exceptions import EmbeddingError
from apps.griess.families import build_hamming_family, build_node_family, build_virasoro_family
from apps.griess.spaces import ModuleSpace, module_act
from apps.lattice.cosets import Coset
from apps.rootsys.e8 import extended_e8_node
from apps.rootsys.systems import build_root_system, expected_central_charge

ONES = (1,) * 8
ZERO = (0,) * 8


def add_words(a, b):
    return tuple((x + y) % 2 for x, y in zip(a, b))


class HammingFamilyTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.family = build_hamming_family()
        cls.ctx = cls.family.ctx
        cls.omega = GriessElement.omega(cls.ctx)
        cls.weight4 = [w for w in cls.family.codewords if sum(w) == 4]

    def test_all_ones_vanishes(self):
        for eps in (0, 1):
            self.assertFalse(self.family.x(eps, ONES))

    def test_x_norms(self):
        for gamma in self.weight4:
            self.assertEqual(inner(self.family.x(0, gamma), self.family.x(0, gamma)), 16)
        self.assertEqual(inner(self.family.x(0, ZERO), self.family.x(1, ZERO)), -16)

    def test_x_products(self):
        for gamma, zeta in combinations(self.weight4, 2):
            total = add_words(gamma, zeta)
            if sum(total) != 4:
                continue
            self.assertEqual(product(self.family.x(0, gamma), self.family.x(0, zeta)),
                             4 * self.family.x(0, total))

    def test_e_depends_on_coset_only(self):
        delta = (1, 1, 0, 0, 0, 0, 0, 0)
        for c in self.family.codewords:
            self.assertIs(self.family.e_hat(0, add_words(delta, c)), self.family.e_hat(0, delta))
        self.assertEqual(len(self.family.e), 32)

    def test_hamming_frame(self):
        frame = self.family.hamming_frame
        self.assertEqual(len(frame), 16)
        total = GriessElement(self.ctx)
        for e in frame:
            self.assertEqual(conformal_check(e), Fraction(1, 2))
            total = total + e
        self.assertEqual(total, self.omega)
        for a, b in combinations(frame, 2):
            self.assertNotEqual(a, b)
            self.assertEqual(inner(a, b), 0)

    def test_inner_product_by_parity(self):
        even = (1, 1, 0, 0, 0, 0, 0, 0)
        odd = (1, 0, 0, 0, 0, 0, 0, 0)
        for eps in (0, 1):
            self.assertEqual(inner(self.family.e_hat(eps, ZERO), self.family.e_hat(eps, even)), 0)
            self.assertEqual(inner(self.family.e_hat(eps, ZERO), self.family.e_hat(eps, odd)), Fraction(1, 32))
        self.assertEqual(inner(self.family.e_hat(0, ZERO), self.family.e_hat(1, odd)), 0)
        self.assertEqual(inner(self.family.e_hat(0, even), self.family.e_hat(1, even)), 0)

    def test_standard_frame(self):
        frame = self.family.standard_frame
        self.assertEqual(len(frame), 16)
        total = GriessElement(self.ctx)
        for e in frame:
            self.assertEqual(conformal_check(e), Fraction(1, 2))
            total = total + e
        self.assertEqual(total, self.omega)


class VirasoroFamilyTest(SimpleTestCase):

    def test_e8_omega_tilde_is_e_hat(self):
        family = build_node_family(extended_e8_node(0))
        (e8,) = family.components
        self.assertEqual(e8.omega_tilde, family.e_hat)
        self.assertEqual(e8.omega, GriessElement.omega(family.ctx))

    def test_component_central_charges(self):
        for i in range(1, 9):
            family = build_node_family(extended_e8_node(i))
            for component in family.components:
                ((letter, rank),) = component.root_system.dynkin_type
                with self.subTest(node=i, component=component.label):
                    self.assertEqual(conformal_check(component.omega_tilde),
                                     expected_central_charge(letter, rank))
                    self.assertEqual(conformal_check(component.omega), rank)
                    self.assertFalse(product(component.s, component.omega_tilde))
                    self.assertEqual(inner(component.s, component.omega_tilde), 0)

    def test_root_not_in_context(self):
        with self.assertRaises(EmbeddingError):
            build_virasoro_family(e8_context(), build_root_system('D', 8))


class NodeFamilyTest(SimpleTestCase):

    def test_node_zero(self):
        family = build_node_family(extended_e8_node(0))
        self.assertEqual(family.f_hat, family.e_hat)
        self.assertEqual(family.X, ())
        self.assertEqual(conformal_check(family.e_hat), Fraction(1, 2))

    def test_coset_sizes(self):
        family = build_node_family(extended_e8_node(3))
        self.assertEqual(len(family.X), 3)
        self.assertEqual(sum(len(x.expo) for x in family.X) + 12 + 40, 240)

    def test_s_annihilates_e_and_x(self):
        for i in range(9):
            family = build_node_family(extended_e8_node(i))
            for k, s in enumerate(family.s):
                with self.subTest(node=i, component=k):
                    self.assertFalse(product(s, family.e_hat))
                    for x in family.X:
                        self.assertFalse(product(s, x))

    def test_f_hat_is_ising(self):
        family = build_node_family(extended_e8_node(4))
        self.assertEqual(conformal_check(family.f_hat), Fraction(1, 2))
        self.assertEqual(family.f_hat.field_order, 5)

    def test_f_hat_twists_x(self):
        family = build_node_family(extended_e8_node(2))
        xi = Cyclotomic.zeta(3)
        twisted = family.e_hat + (family.X[0] * (xi - 1) + family.X[1] * (xi * xi - 1)) / 32
        self.assertEqual(family.f_hat, twisted)


class HighestWeightTest(SimpleTestCase):
    """Minimal vectors of sqrt2(gamma + R) span a highest weight vector of the commutant."""

    def check(self, letter, rank, gamma, weight):
        rs = build_root_system(letter, rank)
        ctx = sqrt2_context(rs)
        family = build_virasoro_family(ctx, rs)
        space = ModuleSpace(ctx, Coset(ctx.N, gamma))
        self.assertEqual(space.weight, weight)
        v = space.minimal_sum()
        self.assertEqual(module_act(family.omega, v), v * weight)
        self.assertFalse(module_act(family.s, v))
        self.assertEqual(module_act(family.omega_tilde, v), v * weight)

    def test_a2_fundamental(self):
        third = Fraction(1, 3)
        self.check('A', 2, (2 * third, -third, -third), Fraction(2, 3))

    def test_a3_middle(self):
        half = Fraction(1, 2)
        self.check('A', 3, (half, half, -half, -half), Fraction(1))

    def test_omega_on_all_cosets(self):
        rs = build_root_system('A', 2)
        ctx = sqrt2_context(rs)
        omega = GriessElement.omega(ctx)
        for coset in (Coset(ctx.N, v) for v in ctx.N.dual_basis):
            space = ModuleSpace(ctx, coset)
            for b in space.basis:
                self.assertEqual(module_act(omega, b), b * space.weight)
