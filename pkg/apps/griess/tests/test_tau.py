from fractions import Fraction

from django.test import SimpleTestCase

from apps.griess.automorphisms import Theta, conjugate, sigma_for_node
from apps.griess.context import e8_context
from apps.griess.element import GriessElement
from apps.griess.exceptions import BadSpectrum
from apps.griess.families import build_node_family
from apps.griess.spaces import (
    LinearMap, ModuleSpace, ModuleVector, combined_order, module_act, weight_two_space,
)
from apps.griess.tau import (
    e_hat_dual_involutions, e_hat_weight_two_involution, f_hat_dual_involutions, f_hat_weight_two_involution,
    tau_involution,
)
from apps.lattice.cosets import Coset
from apps.rootsys.e8 import extended_e8_node

UNIT = (1, 0, 0, 0, 0, 0, 0, 0)
PAIR = (1, 1, 0, 0, 0, 0, 0, 0)


class WeightTwoInvolutionTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.ctx = e8_context()
        cls.space = weight_two_space(cls.ctx)
        cls.e_hat = build_node_family(extended_e8_node(0)).e_hat
        cls.tau = e_hat_weight_two_involution()

    def test_tau_is_theta(self):
        self.assertEqual(self.tau.map, LinearMap.from_function(self.space, Theta()))

    def test_multiplicities(self):
        multiplicities = self.tau.multiplicities
        self.assertEqual(multiplicities[Fraction(2)], 1)
        self.assertEqual(multiplicities[Fraction(1, 16)], 128)
        self.assertEqual(sum(multiplicities.values()), self.space.dimension)

    def test_tau_product_is_sigma_squared_inverse(self):
        for i, order in ((3, 2), (4, 5)):
            node = extended_e8_node(i)
            sigma = sigma_for_node(node)
            tau_f = conjugate(self.tau.map, sigma)
            composite = tau_f.then(self.tau.map)
            with self.subTest(node=i):
                self.assertEqual(composite, LinearMap.from_function(self.space, sigma ** -2))
                self.assertEqual(composite.order(), order)

    def test_tau_f_from_its_own_eigenspaces(self):
        for i in range(9):
            node = extended_e8_node(i)
            sigma = sigma_for_node(node)
            tau_f = f_hat_weight_two_involution(i)
            composite = tau_f.map.then(self.tau.map)
            with self.subTest(node=i):
                self.assertEqual(tau_f.map, conjugate(self.tau.map, sigma))
                self.assertEqual(tau_f.multiplicities, self.tau.multiplicities)
                self.assertEqual(composite.order(), node.n if node.n % 2 else node.n // 2)

    def test_cyclotomic_ising_vector(self):
        self.assertEqual(build_node_family(extended_e8_node(4)).f_hat.field_order, 5)
        tau = f_hat_weight_two_involution(4)
        self.assertTrue(tau.map.then(tau.map).is_identity())
        self.assertNotEqual(tau.map, self.tau.map)


class ModuleInvolutionTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.ctx = e8_context()
        cls.e_hat = build_node_family(extended_e8_node(0)).e_hat

    def test_norm_one_coset(self):
        space = ModuleSpace(self.ctx, Coset(self.ctx.N, UNIT))
        x = tuple(Fraction(a) for a in UNIT)
        minus = tuple(-a for a in x)
        ex = ModuleVector(space, {x: Fraction(1)})
        both = ModuleVector(space, {x: Fraction(1), minus: Fraction(1)})
        self.assertEqual(module_act(self.e_hat, ex), both * Fraction(1, 32))
        tau = tau_involution(self.e_hat, space)
        self.assertEqual(tau(ex), ModuleVector(space, {minus: Fraction(-1)}))

    def test_norm_two_coset(self):
        space = ModuleSpace(self.ctx, Coset(self.ctx.N, PAIR))
        self.assertEqual(space.dimension, 16)
        tau = tau_involution(self.e_hat, space)
        self.assertTrue(tau.map.then(tau.map).is_identity())
        self.assertEqual(sum(tau.multiplicities.values()), 16)
        self.assertEqual(tau.multiplicities[Fraction(1, 2)], 1)

    def test_omega_has_bad_spectrum(self):
        space = ModuleSpace(self.ctx, Coset(self.ctx.N, PAIR))
        with self.assertRaises(BadSpectrum):
            tau_involution(GriessElement.omega(self.ctx), space)

    def test_f_hat_on_dual_cosets(self):
        node = extended_e8_node(2)
        sigma = sigma_for_node(node)
        pairs = list(zip(e_hat_dual_involutions(), f_hat_dual_involutions(2)))
        self.assertEqual(len(pairs), 256)
        for tau_e, tau_f in pairs[:16]:
            self.assertIs(tau_f.space, tau_e.space)
            self.assertEqual(tau_f.map, conjugate(tau_e.map, sigma))
        self.assertEqual(combined_order(tau_f.map.then(tau_e.map) for tau_e, tau_f in pairs), 3)
