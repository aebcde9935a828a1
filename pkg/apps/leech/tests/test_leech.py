import os
import tempfile
import unittest
from fractions import Fraction
from math import lcm
from unittest import mock

import numpy as np
from django.test import SimpleTestCase

from apps.exact.scalars import multiplicative_order
from apps.griess.context import e8_context
from apps.lattice.even import EvenLattice, load_matrix
from apps.leech.constants import BLOCK_QUOTIENT_ORDER, KISSING_NUMBER, LEECH_RANK
from apps.leech.lattice import (
    block_classes, block_norm4_images, build_leech, certify_minimum, embed_sqrt2E8_cubed,
    kissing_number, sigma_tilde_order, sigma_tilde_phase,
)
from apps.leech.survey import match_shape, minimal_coset_survey
from apps.rootsys.e8 import extended_e8_node

LONG = os.environ.get('MCKAY_LONG') == '1'


class BuildLeechTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.ctx = build_leech()

    def test_rank_and_determinant(self):
        self.assertEqual(self.ctx.rank, LEECH_RANK)
        self.assertEqual(self.ctx.Lambda.det, 1)

    def test_basis_is_even(self):
        gram = self.ctx.Lambda.gram
        for i in range(LEECH_RANK):
            self.assertEqual(gram[i, i] % 2, 0)
            for j in range(LEECH_RANK):
                self.assertEqual(Fraction(gram[i, j]).denominator, 1)

    def test_residue_index(self):
        self.assertEqual(self.ctx.residue_index, 2 ** 7)

    def test_export_basis_round_trip(self):
        with tempfile.NamedTemporaryFile('w', suffix='.txt', delete=False) as handle:
            handle.write(self.ctx.export_basis())
        try:
            rows = load_matrix(handle.name)
        finally:
            os.unlink(handle.name)
        self.assertEqual(EvenLattice(rows).det, 1)
        self.assertTrue(all(Fraction(x).denominator in (1, 2) for row in rows for x in row))


class EmbeddingTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.ctx = build_leech()

    def test_blocks_partition_columns(self):
        columns = sorted(c for block in self.ctx.blocks for c in block)
        self.assertEqual(columns, list(range(LEECH_RANK)))

    def test_embedding_is_reproducible(self):
        self.assertEqual(embed_sqrt2E8_cubed(self.ctx), self.ctx.embedding)

    def test_embedding_gram(self):
        images = self.ctx.embedding
        self.assertEqual(len(images), 24)
        e8 = e8_context().N
        self.assertEqual(self.ctx.Lambda.inner(images[0], images[1]), e8.gram[0, 1])
        self.assertEqual(self.ctx.Lambda.norm(images[16]), e8.gram[0, 0])
        self.assertEqual(self.ctx.Lambda.inner(images[0], images[8]), 0)
        self.assertEqual(self.ctx.Lambda.inner(images[3], images[20]), 0)

    def test_each_copy_has_240_norm_four_vectors(self):
        for block in range(3):
            images = block_norm4_images(self.ctx, block)
            self.assertEqual(len(set(images)), 240)
            for v in images[:40]:
                self.assertIn(v, self.ctx.Lambda)
                self.assertEqual(self.ctx.Lambda.norm(v), 4)

    def test_block_quotient(self):
        self.assertEqual(len(block_classes(self.ctx)), BLOCK_QUOTIENT_ORDER)


class MinimumTest(SimpleTestCase):

    def test_minimum_norm_four(self):
        certificate = certify_minimum(build_leech())
        self.assertTrue(certificate.passed)
        self.assertEqual(certificate.classes, 2 ** 12)

    def test_trivial_class_is_enumerated(self):
        with mock.patch('apps.leech.lattice.nonzero_minimum', return_value=Fraction(2)) as minimum:
            certificate = certify_minimum(build_leech())
        minimum.assert_called_once()
        self.assertEqual(certificate.minimum, 2)
        self.assertEqual(certificate.attained, 1)
        self.assertFalse(certificate.passed)

    @unittest.skipUnless(LONG, 'set MCKAY_LONG=1 for the kissing number')
    def test_kissing_number(self):
        self.assertEqual(kissing_number(build_leech()), KISSING_NUMBER)


class SigmaTildeTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.ctx = build_leech()

    def test_order_is_n(self):
        for i in range(9):
            node = extended_e8_node(i)
            with self.subTest(node=i):
                self.assertEqual(sigma_tilde_order(self.ctx, node), node.n)

    def test_phase_is_a_character(self):
        node = extended_e8_node(5)
        basis = self.ctx.Lambda.basis
        rng = np.random.default_rng(7)
        for _ in range(50):
            a = self.ctx.Lambda.vector([int(x) for x in rng.integers(-2, 3, size=LEECH_RANK)])
            b = self.ctx.Lambda.vector([int(x) for x in rng.integers(-2, 3, size=LEECH_RANK)])
            total = tuple(x + y for x, y in zip(a, b))
            self.assertEqual(sigma_tilde_phase(self.ctx, node, total),
                             sigma_tilde_phase(self.ctx, node, a) * sigma_tilde_phase(self.ctx, node, b))
        order = 1
        for v in basis:
            order = lcm(order, multiplicative_order(sigma_tilde_phase(self.ctx, node, v)))
        self.assertEqual(order, 6)


class CosetSurveyTest(SimpleTestCase):

    def test_survey(self):
        survey = minimal_coset_survey()
        self.assertTrue(survey.passed)
        self.assertEqual(len(survey.cosets), 256)
        self.assertEqual(survey.by_norm, {0: 1, 1: 120, 2: 135})
        for coset in survey.cosets:
            if coset.k == 2:
                a, b = coset.split
                self.assertEqual(sum(x * y for x, y in zip(a, b)), 0)

    def test_match_shape(self):
        half = Fraction(1, 2)
        self.assertEqual(match_shape((0, 0, half, -half, half, 0, half, 0)), 4)
        self.assertIsNone(match_shape((0, 0, -half, -half, -half, 0, half, 0)))
