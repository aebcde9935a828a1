from fractions import Fraction

from django.test import SimpleTestCase

from apps.exact.linalg import span_dimension
from apps.griess.automorphisms import Theta, Weyl
from apps.griess.coset import coset_U2, generated_closure
from apps.griess.element import inner
from apps.griess.families import build_node_family
from apps.griess.tau import f_hat_weight_two_involution
from apps.rootsys.e8 import extended_e8_node

INNER_TABLE = {
    0: Fraction(1, 4),
    1: Fraction(1, 32),
    2: Fraction(13, 2 ** 10),
    3: Fraction(1, 2 ** 7),
    4: Fraction(3, 2 ** 9),
    5: Fraction(5, 2 ** 10),
    6: Fraction(1, 2 ** 8),
    7: Fraction(0),
    8: Fraction(1, 2 ** 8),
}


class CosetAlgebraTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.algebras = {i: coset_U2(extended_e8_node(i)) for i in range(9)}

    def test_dimension(self):
        for i, algebra in self.algebras.items():
            node = algebra.node
            with self.subTest(node=i):
                self.assertEqual(algebra.dimension, len(node.components) + node.n - 1)
        self.assertEqual(self.algebras[5].dimension, 8)

    def test_node_zero(self):
        algebra = self.algebras[0]
        self.assertEqual(algebra.dimension, 1)
        self.assertEqual(algebra.e_hat, [Fraction(1)])

    def test_inner_products_match_table(self):
        for i, algebra in self.algebras.items():
            with self.subTest(node=i):
                self.assertEqual(algebra.inner(algebra.e_hat, algebra.f_hat), INNER_TABLE[i])

    def test_coordinates_reproduce_vectors(self):
        for i in (2, 5):
            algebra = self.algebras[i]
            family = build_node_family(algebra.node)
            self.assertEqual(algebra.element(algebra.e_hat), family.e_hat)
            self.assertEqual(algebra.element(algebra.f_hat), family.f_hat)

    def test_structure_constants_match_engine(self):
        algebra = self.algebras[4]
        e = algebra.element(algebra.e_hat)
        square = algebra.product(algebra.e_hat, algebra.e_hat)
        self.assertEqual(algebra.element(square), 2 * e)
        self.assertEqual(inner(e, e), Fraction(1, 4))

    def test_generated_by_e_and_f(self):
        for i, algebra in self.algebras.items():
            span = generated_closure(algebra, [algebra.e_hat, algebra.f_hat])
            with self.subTest(node=i):
                self.assertEqual(span_dimension(span, algebra.field_order), algebra.dimension)

    def test_closure_of_e_alone(self):
        algebra = self.algebras[3]
        self.assertEqual(len(generated_closure(algebra, [algebra.e_hat])), 1)

    def test_2b_node(self):
        algebra = self.algebras[7]
        self.assertFalse(any(algebra.product(algebra.e_hat, algebra.f_hat)))
        self.assertEqual(len(generated_closure(algebra, [algebra.e_hat, algebra.f_hat])), 2)

    def test_theta_commutes_with_weyl_on_u2(self):
        algebra = self.algebras[5]
        ctx = algebra.basis[0].ctx
        theta = Theta()
        for system in algebra.node.component_systems():
            for root in system.simple_roots:
                weyl = Weyl(ctx, root)
                for b in algebra.basis:
                    self.assertEqual(theta(weyl(b)), weyl(theta(b)))

    def test_tau_f_commutes_with_weyl_on_u2(self):
        for i, algebra in self.algebras.items():
            ctx = algebra.basis[0].ctx
            tau_f = f_hat_weight_two_involution(i)
            for system in algebra.node.component_systems():
                for root in system.simple_roots:
                    weyl = Weyl(ctx, root)
                    for b in algebra.basis:
                        with self.subTest(node=i, root=root):
                            self.assertEqual(tau_f(weyl(b)), weyl(tau_f(b)))

    def test_as_json(self):
        data = self.algebras[1].as_json()
        self.assertEqual(len(data['basis']), 3)
        self.assertEqual(len(data['gram']), 3)
