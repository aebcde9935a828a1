import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from apps.exact.scalars import format_rational, format_vector
from apps.lattice.even import EvenLattice, dot, lattice_index

from .constants import BRANCH_NODE, E8_NODES, GLUE, LONG_ARM, MARKS, MIDDLE_ARM, SHORT_ARM
from .systems import build_root_system, diagram_arms, dynkin_label, root_system_of

logger = logging.getLogger(__name__)


def label_e8_simple_roots(e8):
    """
    Simple roots of E8 keyed 1..8 by their place in the diagram: 5 is the
    branch node, 8 ends the short arm, 6 and 7 form the middle arm and
    4, 3, 2, 1 the long arm, each arm read from the branch outwards.
    """
    simple = e8.simple_roots
    cartan = e8.cartan_matrix()
    nodes = range(len(simple))
    edges = {k: [j for j in nodes if j != k and cartan[k][j] == -1] for k in nodes}
    branch = next(k for k in nodes if len(edges[k]) == 3)
    arms = sorted(diagram_arms(edges, branch), key=len)
    labels = {BRANCH_NODE: simple[branch]}
    for names, arm in zip((SHORT_ARM, MIDDLE_ARM, LONG_ARM), arms):
        for name, k in zip(names, arm):
            labels[name] = simple[k]
    return labels


@lru_cache(maxsize=None)
def extended_alphas():
    """alpha_0..alpha_8 with alpha_0 the negative of the highest root."""
    e8 = build_root_system('E', 8)
    labelled = label_e8_simple_roots(e8)
    lat = EvenLattice([labelled[j] for j in range(1, 9)], e8.scale)
    highest = max(e8.positive_roots, key=lambda r: (sum(lat.coordinates(r)), r))
    alphas = [tuple(-x for x in highest)] + [labelled[j] for j in range(1, 9)]
    return tuple(alphas)


def extended_relation(alphas):
    """sum_j m_j alpha_j, the zero vector for a correctly labelled diagram."""
    return tuple(sum(m * a[k] for m, a in zip(MARKS, alphas)) for k in range(len(alphas[0])))


def glue_vector(i, alphas):
    divisor, coefficients = GLUE[i]
    return tuple(
        sum((Fraction(c, divisor) * a[k] for c, a in zip(coefficients, alphas) if c), Fraction(0))
        for k in range(len(alphas[0]))
    )


@dataclass(frozen=True)
class ExtendedE8Node:
    i: int
    alphas: tuple
    L: EvenLattice
    n: int
    glue_a: tuple
    components: tuple

    @property
    def removed_root(self):
        return self.alphas[self.i]

    @cached_property
    def e8(self):
        return build_root_system('E', 8)

    @property
    def e8_roots(self):
        return self.e8.roots

    @cached_property
    def root_system(self):
        return root_system_of(self.L)

    def component_systems(self):
        return self.root_system.components()

    def inner(self, u, v):
        return self.e8.scale * dot(u, v)

    def glue_pairings(self):
        return tuple(self.inner(self.glue_a, a) for a in self.alphas)

    def glue_is_valid(self):
        """<a, alpha_j> integral for j != i and -1/n mod Z for j = i."""
        for j, value in enumerate(self.glue_pairings()):
            target = value if j != self.i else value + Fraction(1, self.n)
            if target.denominator != 1:
                return False
        return True

    def as_json(self):
        return {
            'i': self.i,
            'n': self.n,
            'components': dynkin_label(self.components),
            'glue_a': format_vector(self.glue_a),
            'glue_pairings': [format_rational(x) for x in self.glue_pairings()],
        }


@lru_cache(maxsize=None)
def extended_e8_node(i):
    if i not in E8_NODES:
        raise ValueError(f'node {i} outside 0..8')
    e8 = build_root_system('E', 8)
    alphas = extended_alphas()
    kept = [alphas[j] for j in E8_NODES if j != i]
    L = EvenLattice(kept, e8.scale, name=f'L({i})')
    n = lattice_index(L, e8.lattice)
    components = root_system_of(L).dynkin_type
    node = ExtendedE8Node(
        i=i,
        alphas=alphas,
        L=L,
        n=int(n),
        glue_a=glue_vector(i, alphas),
        components=components,
    )
    logger.debug('node %d: L = %s, n = %d', i, dynkin_label(components), node.n)
    return node
