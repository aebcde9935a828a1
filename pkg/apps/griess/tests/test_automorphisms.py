from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from apps.exact.scalars import Cyclotomic
from apps.griess.automorphisms import (
    Sigma, Theta, Weyl, apply_automorphism, conjugate, dihedral_check, sigma_for_node,
)
from apps.griess.constants import PROPERTY_SEED
from apps.griess.context import e8_context
from apps.griess.element import GriessElement, inner, product
from apps.griess.exceptions import EmbeddingError
from apps.griess.families import build_node_family
from apps.griess.spaces import LinearMap, weight_two_space
from apps.rootsys.e8 import extended_e8_node

from .test_element import random_even_element

SAMPLES = 200


class SigmaTest(SimpleTestCase):

    def test_sigma_scales_x(self):
        for i in (2, 3, 5):
            node = extended_e8_node(i)
            family = build_node_family(node)
            sigma = sigma_for_node(node)
            for j, x in enumerate(family.X, start=1):
                with self.subTest(node=i, j=j):
                    self.assertEqual(sigma(x), x * Cyclotomic.zeta(node.n, j))

    def test_f_hat_is_sigma_of_e_hat(self):
        for i in range(9):
            node = extended_e8_node(i)
            family = build_node_family(node)
            with self.subTest(node=i):
                self.assertEqual(apply_automorphism(sigma_for_node(node), family.e_hat), family.f_hat)

    def test_sigma_power_and_inverse(self):
        node = extended_e8_node(5)
        x = build_node_family(node).X[0]
        sigma = sigma_for_node(node)
        self.assertEqual((sigma ** 6)(x), x)
        self.assertEqual(sigma.inverse()(sigma(x)), x)

    def test_non_integral_pairing(self):
        ctx = e8_context()
        sigma = Sigma((Fraction(1, 3),) + (Fraction(0),) * 7, 1)
        with self.assertRaises(EmbeddingError):
            sigma(GriessElement.exponential(ctx, (2, 0, 0, 0, 0, 0, 0, 0)))


class DihedralTest(SimpleTestCase):

    def test_dihedral_group_on_weight_two(self):
        space = weight_two_space(e8_context())
        for i in range(9):
            node = extended_e8_node(i)
            with self.subTest(node=i):
                check = dihedral_check(space, sigma_for_node(node))
                self.assertTrue(check.passed, check.as_json())
                self.assertEqual(check.group_order, 2 * node.n)


class WeylTest(SimpleTestCase):

    def test_simple_reflections_fix_e_hat(self):
        node = extended_e8_node(0)
        family = build_node_family(node)
        for root in node.e8.simple_roots:
            self.assertEqual(Weyl(family.ctx, root)(family.e_hat), family.e_hat)

    def test_reflection_is_involution(self):
        ctx = e8_context()
        weyl = Weyl(ctx, ctx.norm4[3])
        self.assertEqual(weyl.reflect(ctx.norm4[3]), tuple(-a for a in ctx.norm4[3]))
        u = GriessElement(ctx, deriv={0: Fraction(1)}, expo={7: Fraction(2)})
        self.assertEqual(weyl(weyl(u)), u)

    def test_conjugate_by_theta(self):
        ctx = e8_context()
        space = weight_two_space(ctx)
        sigma = LinearMap.from_function(space, sigma_for_node(extended_e8_node(3)))
        inverse = LinearMap.from_function(space, sigma_for_node(extended_e8_node(3), -1))
        self.assertEqual(conjugate(sigma, Theta()), inverse)


class PreservationPropertyTest(SimpleTestCase):
    """Automorphisms preserve the product and the form."""

    def test_product_and_form(self):
        ctx = e8_context()
        rng = np.random.default_rng(PROPERTY_SEED + 1)
        automorphisms = [
            Theta(),
            sigma_for_node(extended_e8_node(3)),
            sigma_for_node(extended_e8_node(8)),
            Weyl(ctx, ctx.norm4[11]),
        ]
        for _ in range(SAMPLES):
            u, v = random_even_element(ctx, rng), random_even_element(ctx, rng)
            uv = product(u, v)
            for g in automorphisms:
                self.assertEqual(g(uv), product(g(u), g(v)))
                self.assertEqual(inner(g(u), g(v)), inner(u, v))
