import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from apps.codes.constants import HAMMING8
from apps.codes.loaders import named_code
from apps.exact.scalars import Cyclotomic, simplify

from .constants import (
    E_HAT_EXPONENTIAL, E_HAT_OMEGA, FRAME_EXPONENTIAL, FRAME_HEISENBERG, HALF, KEY_NORM,
)
from .context import e8_context
from .element import GriessElement, outer_terms
from .exceptions import EmbeddingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VirasoroFamily:
    root_system: object
    omega: GriessElement
    s: GriessElement
    omega_tilde: GriessElement

    @property
    def label(self):
        return self.root_system.name


def build_virasoro_family(ctx, root_system):
    """
    omega = (1/2h) sum alpha(-1)^2 and
    s = (1/2(h+2)) sum (alpha(-1)^2 - 2(e^a + e^-a)), both over positive
    roots, where a is the key of sqrt2 alpha and alpha(-1)^2 = (1/2) a(-1)^2;
    omega_tilde = omega - s.
    """
    h = root_system.coxeter_number
    squares = defaultdict(Fraction)
    exponentials = {}
    for root in root_system.positive_roots:
        if root not in ctx.N or ctx.N.norm(root) != KEY_NORM:
            raise EmbeddingError(detail={'root_system': root_system.name, 'root': [str(a) for a in root]})
        for key, value in outer_terms(root, HALF).items():
            squares[key] += value
        exponentials[ctx.key(root)] = Fraction(1)
        exponentials[ctx.key(tuple(-a for a in root))] = Fraction(1)
    heisenberg = GriessElement(ctx, quad=squares)
    pairs = GriessElement(ctx, expo=exponentials)
    omega = heisenberg * Fraction(1, 2 * h)
    s = (heisenberg - pairs * 2) * Fraction(1, 2 * (h + 2))
    logger.debug('virasoro family of %s in %s', root_system.name, ctx.name)
    return VirasoroFamily(root_system=root_system, omega=omega, s=s, omega_tilde=omega - s)


def word_key(word):
    return tuple(int(b) for b in word)


def coset_representative(word, codewords):
    """Lexicographically least word of word + code."""
    return min(tuple((a + b) % 2 for a, b in zip(word, c)) for c in codewords)


@dataclass
class HammingFamily:
    ctx: object
    codewords: tuple
    X: dict
    e: dict
    standard_frame: list = field(default_factory=list)

    def x(self, eps, gamma):
        return self.X[(eps, word_key(gamma))]

    def e_hat(self, eps, delta):
        return self.e[(eps, coset_representative(word_key(delta), self.codewords))]

    @property
    def hamming_frame(self):
        """e^0_delta and e^1_zeta over even cosets of the code."""
        return [v for (eps, delta), v in sorted(self.e.items()) if sum(delta) % 2 == 0]


def _parity_sign(eps, x):
    total = sum(x)
    return -1 if eps and (total / 2) % 2 else 1


@lru_cache(maxsize=None)
def build_hamming_family():
    """
    X^eps_gamma, e^eps_delta and the standard frame omega^(+-) in the Hamming
    model of sqrt2 E8.
    """
    ctx = e8_context()
    code = named_code(HAMMING8)
    codewords = tuple(sorted(word_key(w) for w in code.codewords()))
    omega = GriessElement.omega(ctx)

    by_residue = defaultdict(list)
    for k, x in enumerate(ctx.norm4):
        by_residue[tuple(int(a) % 2 for a in x)].append(k)
    X = {}
    for eps in (0, 1):
        for gamma in codewords:
            X[(eps, gamma)] = GriessElement(
                ctx, expo={k: Fraction(_parity_sign(eps, ctx.norm4[k])) for k in by_residue[gamma]})

    words = sorted({coset_representative(tuple((n >> (7 - t)) & 1 for t in range(8)), codewords)
                    for n in range(256)})
    e = {}
    for eps in (0, 1):
        for delta in words:
            total = GriessElement(ctx)
            for gamma in codewords:
                sign = -1 if sum(a * b for a, b in zip(delta, gamma)) % 2 else 1
                total = total + X[(eps, gamma)] * sign
            e[(eps, delta)] = omega * E_HAT_OMEGA + total * E_HAT_EXPONENTIAL

    frame = []
    for j in range(ctx.dim):
        lam = tuple(Fraction(2 * (t == j)) for t in range(ctx.dim))
        heisenberg = GriessElement.heisenberg_square(ctx, lam, FRAME_HEISENBERG)
        pair = GriessElement.exponential(ctx, lam) + GriessElement.exponential(ctx, tuple(-a for a in lam))
        frame.append(heisenberg + pair * FRAME_EXPONENTIAL)
        frame.append(heisenberg - pair * FRAME_EXPONENTIAL)
    logger.debug('hamming family: %d X vectors, %d e vectors', len(X), len(e))
    return HammingFamily(ctx=ctx, codewords=codewords, X=X, e=e, standard_frame=frame)


def coset_index(node, x):
    """The j in 0..n-1 with x in j alpha_i + L(i)."""
    for j in range(node.n):
        if tuple(a - j * r for a, r in zip(x, node.removed_root)) in node.L:
            return j
    raise EmbeddingError(detail={'node': node.i, 'vector': [str(a) for a in x]})


@dataclass(frozen=True)
class NodeFamily:
    node: object
    ctx: object
    e_hat: GriessElement
    f_hat: GriessElement
    X: tuple
    components: tuple

    @property
    def s(self):
        return tuple(c.s for c in self.components)

    @property
    def omega_tilde(self):
        return tuple(c.omega_tilde for c in self.components)

    def component(self, letter, rank):
        """Families of the components of a given type, in component order."""
        return [c for c in self.components if c.root_system.dynkin_type == ((letter, rank),)]


@lru_cache(maxsize=None)
def build_node_family(node):
    """
    e = omega/16 + (1/32)(sum over Phi(L) of e^a + sum_j X^j) and
    f = omega/16 + (1/32)(sum over Phi(L) of e^a + sum_j xi^j X^j).
    """
    ctx = e8_context()
    omega = GriessElement.omega(ctx)
    by_coset = defaultdict(dict)
    for k, x in enumerate(ctx.norm4):
        by_coset[coset_index(node, x)][k] = Fraction(1)
    roots_of_L = GriessElement(ctx, expo=by_coset[0])
    X = tuple(GriessElement(ctx, expo=by_coset[j]) for j in range(1, node.n))
    e_hat = omega * E_HAT_OMEGA + (roots_of_L + _sum(ctx, X)) * E_HAT_EXPONENTIAL
    twisted = _sum(ctx, [X[j - 1] * simplify(Cyclotomic.zeta(node.n, j)) for j in range(1, node.n)])
    f_hat = omega * E_HAT_OMEGA + (roots_of_L + twisted) * E_HAT_EXPONENTIAL
    components = tuple(build_virasoro_family(ctx, rs) for rs in node.component_systems())
    logger.info('node %d: family built (%d X vectors, %d components)', node.i, len(X), len(components))
    return NodeFamily(node=node, ctx=ctx, e_hat=e_hat, f_hat=f_hat, X=X, components=components)


def _sum(ctx, elements):
    total = GriessElement(ctx)
    for element in elements:
        total = total + element
    return total
