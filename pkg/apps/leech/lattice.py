"""
The Leech lattice as Construction A of a type II Z4 code, and three
orthogonal copies of sqrt2 E8 inside it carried by the Hamming blocks of the
residue code.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm

from apps.codes.construction import construction_A, residue_code_B
from apps.codes.constants import Z4_LEECH
from apps.codes.duality import is_type_II
from apps.codes.exceptions import BlockMatchNotFound
from apps.codes.loaders import named_code
from apps.codes.matching import find_hamming_blocks
from apps.exact.scalars import Cyclotomic, simplify
from apps.griess.context import e8_context
from apps.lattice.cosets import Coset, coset_min_norm
from apps.lattice.enumeration import nonzero_minimum, vectors_up_to
from apps.lattice.even import dot, export_matrix, lattice_index, lattice_invariants

from .constants import BLOCK_COUNT, BLOCK_QUOTIENT_ORDER, LEECH_MIN_NORM
from .exceptions import CodeCheckFailed, EmbeddingNotFound

logger = logging.getLogger(__name__)


@dataclass
class LeechContext:
    code: object
    Lambda: object
    blocks: tuple = ()
    embedding: tuple = ()

    @property
    def rank(self):
        return self.Lambda.rank

    def place(self, block, v):
        """The ambient vector carrying v (Hamming coordinates) on one block."""
        out = [Fraction(0)] * self.Lambda.ambient_dim
        for t, column in enumerate(self.blocks[block]):
            out[column] = Fraction(v[t])
        return tuple(out)

    def project(self, block, v):
        return tuple(v[column] for column in self.blocks[block])

    def beta_tilde(self, node):
        """sqrt2 (a, 0, 0) for the glue vector a of a node."""
        return self.place(0, node.glue_a)

    @cached_property
    def residue_index(self):
        """[Lambda : A(B(C))]."""
        return lattice_index(construction_A(residue_code_B(self.code)), self.Lambda)

    def export_basis(self):
        return export_matrix(self.Lambda.basis)


@lru_cache(maxsize=None)
def build_leech():
    code = named_code(Z4_LEECH)
    if not is_type_II(code):
        raise CodeCheckFailed(detail={'code': code.name})
    lattice = construction_A(code)
    invariants = lattice_invariants(lattice)
    if not invariants.is_even or invariants.det != 1:
        raise CodeCheckFailed('Construction A is not even unimodular',
                              detail={'even': invariants.is_even, 'det': str(invariants.det)})
    ctx = LeechContext(code=code, Lambda=lattice)
    embed_sqrt2E8_cubed(ctx)
    logger.info('Leech lattice: rank %d, det 1, blocks %s', lattice.rank, ctx.blocks)
    return ctx


def embed_sqrt2E8_cubed(ctx):
    """
    Fix the three 8-column blocks and the images of a basis of each copy of
    sqrt2 E8, checking membership and the block-diagonal Gram matrix.
    """
    try:
        blocks = find_hamming_blocks(residue_code_B(ctx.code))
    except BlockMatchNotFound as error:
        raise EmbeddingNotFound(detail=error.detail) from error
    if len(blocks) != BLOCK_COUNT:
        raise EmbeddingNotFound(detail={'blocks': len(blocks)})
    ctx.blocks = tuple(blocks)
    e8 = e8_context().N
    images = []
    for block in range(BLOCK_COUNT):
        for v in e8.basis:
            image = ctx.place(block, v)
            if image not in ctx.Lambda:
                raise EmbeddingNotFound(detail={'block': block, 'vector': [str(a) for a in v]})
            images.append(image)
    size = e8.rank
    for p, u in enumerate(images):
        for q, w in enumerate(images):
            same = p // size == q // size
            expected = e8.gram[p % size, q % size] if same else 0
            if ctx.Lambda.inner(u, w) != expected:
                raise EmbeddingNotFound('images do not have the Gram matrix of three copies',
                                        detail={'rows': [p, q]})
    ctx.embedding = tuple(images)
    logger.debug('embedded three copies of %s on columns %s', e8.name, ctx.blocks)
    return ctx.embedding


def block_norm4_images(ctx, block):
    """Images of the 240 norm-4 vectors of one copy of sqrt2 E8."""
    return [ctx.place(block, x) for x in e8_context().norm4]


def sigma_tilde_phase(ctx, node, v):
    """exp(2 pi i <beta_tilde, v>) as an exact root of unity."""
    pairing = Fraction(dot(ctx.beta_tilde(node), v)) * ctx.Lambda.scale
    return simplify(Cyclotomic.zeta(pairing.denominator, pairing.numerator))


def sigma_tilde_order(ctx, node):
    order = 1
    beta = ctx.beta_tilde(node)
    for b in ctx.Lambda.basis:
        order = lcm(order, ctx.Lambda.inner(beta, b).denominator)
    logger.debug('node %d: phase order %d on the Leech basis', node.i, order)
    return order


@dataclass(frozen=True)
class BlockClass:
    """A coset of sqrt2E8^3 in Lambda as its three block cosets."""

    cosets: tuple

    def __add__(self, other):
        return BlockClass(tuple(a + b for a, b in zip(self.cosets, other.cosets)))

    def is_trivial(self):
        return all(c.is_trivial() for c in self.cosets)


def block_class(ctx, v):
    lattice = e8_context().N
    return BlockClass(tuple(Coset(lattice, ctx.project(b, v)) for b in range(BLOCK_COUNT)))


def block_classes(ctx):
    """All cosets of sqrt2E8^3 in Lambda, by doubling over the basis."""
    classes = [block_class(ctx, (0,) * ctx.Lambda.ambient_dim)]
    seen = set(classes)
    for b in ctx.Lambda.basis:
        g = block_class(ctx, b)
        if g in seen:
            continue
        if not (g + g).is_trivial():
            raise EmbeddingNotFound('quotient is not elementary abelian', detail={'generator': [str(a) for a in b]})
        new = [c + g for c in classes]
        classes.extend(new)
        seen.update(new)
    if len(classes) != BLOCK_QUOTIENT_ORDER:
        raise EmbeddingNotFound(detail={'classes': len(classes), 'expected': BLOCK_QUOTIENT_ORDER})
    logger.debug('%d cosets of the block sublattice', len(classes))
    return classes


@dataclass(frozen=True)
class MinimumCertificate:
    minimum: int
    classes: int
    attained: int

    @property
    def passed(self):
        return self.minimum == LEECH_MIN_NORM

    def as_json(self):
        return {'minimum': self.minimum, 'classes': self.classes, 'attained_in_classes': self.attained}


def certify_minimum(ctx, budget_seconds=None):
    """
    Minimum norm of Lambda from its decomposition into cosets of sqrt2E8^3:
    the norm of a vector is the sum of its block norms, so every non-trivial
    class contributes the sum of its three block-coset minima, and the
    trivial class contributes the minimum of sqrt2 E8.
    """
    minima = {}

    def block_minimum(coset):
        if coset not in minima:
            minima[coset] = coset_min_norm(coset, budget_seconds=budget_seconds).k
        return minima[coset]

    classes = block_classes(ctx)
    trivial = nonzero_minimum(e8_context().N, budget_seconds=budget_seconds)
    values = []
    for c in classes:
        if c.is_trivial():
            values.append(trivial)
            continue
        values.append(sum(block_minimum(coset) for coset in c.cosets))
    minimum = min(values)
    certificate = MinimumCertificate(
        minimum=int(minimum) if minimum.denominator == 1 else minimum,
        classes=len(classes),
        attained=sum(1 for v in values if v == minimum),
    )
    logger.info('Leech minimum %s over %d classes', minimum, len(classes))
    return certificate


def kissing_number(ctx, budget_seconds=None):
    """Vectors of norm 4 in Lambda, counted class by class from block counts."""
    counts = {}

    def block_counts(coset):
        if coset not in counts:
            found = vectors_up_to(coset.lattice, LEECH_MIN_NORM, shift=coset.shift, budget_seconds=budget_seconds)
            counts[coset] = Counter(value for value, _ in found)
        return counts[coset]

    total = 0
    for c in block_classes(ctx):
        a, b, d = (block_counts(coset) for coset in c.cosets)
        for na, ca in a.items():
            for nb, cb in b.items():
                rest = LEECH_MIN_NORM - na - nb
                if rest >= 0:
                    total += ca * cb * d.get(rest, 0)
    logger.info('kissing number %d', total)
    return total
