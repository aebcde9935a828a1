import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from apps.codes.constants import HAMMING8
from apps.codes.construction import construction_A
from apps.codes.loaders import named_code
from apps.exact.scalars import format_vector
from apps.lattice.enumeration import short_vectors
from apps.lattice.even import EvenLattice, dot

from .constants import E8_SCALE, E_RANKS, MIN_D_RANK
from .exceptions import NotRootGenerated, UnsupportedType

logger = logging.getLogger(__name__)

ROOT_NORM = 2


def coxeter_number(letter, rank):
    if letter == 'A':
        return rank + 1
    if letter == 'D':
        return 2 * rank - 2
    if letter == 'E':
        return {6: 12, 7: 18, 8: 30}[rank]
    raise UnsupportedType(detail={'letter': letter, 'rank': rank})


def expected_central_charge(letter, rank):
    """Central charge 2l/(h+2) of the coset Virasoro vector of a rank-l component."""
    return Fraction(2 * rank, coxeter_number(letter, rank) + 2)


def is_positive(v):
    """Lexicographic positivity: the first nonzero coordinate is positive."""
    for x in v:
        if x:
            return x > 0
    return False


def weyl_reflection(root, v, scale=1):
    """v - <v, root> root for a root of norm 2 under scale * dot."""
    c = scale * dot(v, root)
    return tuple(a - c * r for a, r in zip(v, root))


@dataclass(frozen=True)
class RootSystem:
    dynkin_type: tuple
    roots: tuple
    simple_roots: tuple
    positive_roots: tuple
    scale: Fraction = Fraction(1)
    name: str = ''
    coxeter_numbers: tuple = field(default=())

    def __repr__(self):
        return f'<RootSystem {self.name or dynkin_label(self.dynkin_type)} |roots|={len(self.roots)}>'

    @property
    def rank(self):
        return len(self.simple_roots)

    @property
    def ambient_dim(self):
        return len(self.simple_roots[0])

    @property
    def coxeter_number(self):
        if len(self.coxeter_numbers) != 1:
            raise ValueError('Coxeter number of a decomposable root system')
        return self.coxeter_numbers[0]

    @cached_property
    def lattice(self):
        return EvenLattice(self.simple_roots, self.scale, self.name or dynkin_label(self.dynkin_type))

    def inner(self, u, v):
        return self.scale * dot(u, v)

    def reflect(self, root, v):
        return weyl_reflection(root, v, self.scale)

    def cartan_matrix(self):
        return [[self.inner(a, b) for b in self.simple_roots] for a in self.simple_roots]

    def components(self):
        """The indecomposable components, in the order of `dynkin_type`."""
        return _split(self)

    def as_json(self):
        return {
            'type': dynkin_label(self.dynkin_type),
            'scale': str(self.scale),
            'simple_roots': [format_vector(r) for r in self.simple_roots],
            'roots': len(self.roots),
            'coxeter_numbers': list(self.coxeter_numbers),
        }


def dynkin_label(dynkin_type):
    if not dynkin_type:
        return '0'
    return '+'.join(f'{letter}{rank}' for letter, rank in dynkin_type)


def _component_order(item):
    (letter, rank), _ = item
    return letter, -rank


def _graph_components(cartan):
    n = len(cartan)
    seen = set()
    groups = []
    for start in range(n):
        if start in seen:
            continue
        stack, group = [start], []
        seen.add(start)
        while stack:
            k = stack.pop()
            group.append(k)
            for j in range(n):
                if j not in seen and cartan[k][j] != 0 and j != k:
                    seen.add(j)
                    stack.append(j)
        groups.append(sorted(group))
    return groups


def classify_diagram(cartan, nodes):
    """Dynkin type (letter, rank) of a connected simply laced diagram."""
    rank = len(nodes)
    edges = {k: [j for j in nodes if j != k and cartan[k][j] == -1] for k in nodes}
    edge_count = sum(len(v) for v in edges.values()) // 2
    if any(cartan[k][j] not in (0, -1) for k in nodes for j in nodes if j != k) \
            or edge_count != rank - 1:
        raise UnsupportedType(detail={'cartan': [[str(cartan[k][j]) for j in nodes] for k in nodes]})
    branches = [k for k in nodes if len(edges[k]) == 3]
    if not branches:
        if any(len(v) > 2 for v in edges.values()):
            raise UnsupportedType(detail={'rank': rank})
        return 'A', rank
    if len(branches) > 1 or any(len(v) > 3 for v in edges.values()):
        raise UnsupportedType(detail={'rank': rank})
    arms = sorted(len(arm) for arm in diagram_arms(edges, branches[0]))
    if arms[:2] == [1, 1]:
        return 'D', rank
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return 'E', rank
    raise UnsupportedType(detail={'arms': arms})


def diagram_arms(edges, branch):
    """Arms of a star-shaped tree, each listed from the branch node outwards."""
    arms = []
    for first in edges[branch]:
        arm, previous, current = [first], branch, first
        while True:
            onward = [j for j in edges[current] if j != previous]
            if not onward:
                break
            previous, current = current, onward[0]
            arm.append(current)
        arms.append(arm)
    return arms


def root_system_from_roots(roots, scale=1, name=''):
    """
    Root data of a finite set of norm-2 vectors closed under negation:
    lexicographic positive system, simple roots, components and their types.
    """
    scale = Fraction(scale)
    roots = tuple(sorted(tuple(r) for r in roots))
    positive = tuple(r for r in roots if is_positive(r))
    positive_set = set(positive)
    sums = set()
    for i, a in enumerate(positive):
        for b in positive[i + 1:]:
            s = tuple(x + y for x, y in zip(a, b))
            if s in positive_set:
                sums.add(s)
    simple = tuple(r for r in positive if r not in sums)
    cartan = [[scale * dot(a, b) for b in simple] for a in simple]
    groups = _graph_components(cartan)
    typed = sorted(((classify_diagram(cartan, g), g) for g in groups), key=_component_order)
    ordered_simple = tuple(simple[k] for _, g in typed for k in g)
    dynkin_type = tuple(t for t, _ in typed)
    counts = _component_root_counts(roots, ordered_simple, [len(g) for _, g in typed], scale)
    coxeter = tuple(c // t[1] for c, t in zip(counts, dynkin_type))
    return RootSystem(
        dynkin_type=dynkin_type,
        roots=roots,
        simple_roots=ordered_simple,
        positive_roots=positive,
        scale=scale,
        name=name,
        coxeter_numbers=coxeter,
    )


def _component_index(lattice, sizes, root):
    coords = lattice.coordinates(root)
    start = 0
    for k, size in enumerate(sizes):
        if any(coords[start:start + size]):
            return k
        start += size
    raise ValueError('zero vector is not a root')


def _component_root_counts(roots, simple, sizes, scale):
    if not simple:
        return ()
    lattice = EvenLattice(simple, scale)
    counts = [0] * len(sizes)
    for r in roots:
        counts[_component_index(lattice, sizes, r)] += 1
    return tuple(counts)


def _split(rs):
    sizes = [rank for _, rank in rs.dynkin_type]
    buckets = [[] for _ in sizes]
    for r in rs.roots:
        buckets[_component_index(rs.lattice, sizes, r)].append(r)
    return [
        root_system_from_roots(bucket, rs.scale, name=f'{letter}{rank}')
        for bucket, (letter, rank) in zip(buckets, rs.dynkin_type)
    ]


@lru_cache(maxsize=None)
def e8_lattice():
    """E8 as Construction A of the Hamming code, under half the dot product."""
    sqrt2e8 = construction_A(named_code(HAMMING8))
    return EvenLattice(sqrt2e8.basis, E8_SCALE, 'E8')


@lru_cache(maxsize=None)
def build_root_system(letter, rank):
    """
    A_n on sum-zero vectors of Z^(n+1), D_n on +-e_i +- e_j, and E6, E7, E8
    inside the Hamming model of E8.
    """
    if letter == 'A' and rank >= 1:
        n = rank + 1
        roots = [tuple(int(k == i) - int(k == j) for k in range(n))
                 for i in range(n) for j in range(n) if i != j]
        rs = root_system_from_roots(roots, name=f'A{rank}')
    elif letter == 'D' and rank >= MIN_D_RANK:
        roots = []
        for i in range(rank):
            for j in range(i + 1, rank):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * rank
                        v[i], v[j] = si, sj
                        roots.append(tuple(v))
        rs = root_system_from_roots(roots, name=f'D{rank}')
    elif letter == 'E' and rank in E_RANKS:
        rs = _e_series(rank)
    else:
        raise UnsupportedType(detail={'letter': letter, 'rank': rank})
    if rs.dynkin_type != ((letter, rank),):
        raise UnsupportedType(detail={'expected': f'{letter}{rank}', 'found': dynkin_label(rs.dynkin_type)})
    logger.debug('built %r', rs)
    return rs


def _e_series(rank):
    lat = e8_lattice()
    e8 = root_system_from_roots(short_vectors(lat, ROOT_NORM), lat.scale, name='E8')
    if rank == 8:
        return e8
    from .e8 import label_e8_simple_roots

    alphas = label_e8_simple_roots(e8)
    # E7 drops alpha_1 from the long arm, E6 drops alpha_1 and alpha_2.
    dropped = {7: (1,), 6: (1, 2)}[rank]
    kept = [alphas[j] for j in range(1, 9) if j not in dropped]
    sub = EvenLattice(kept, lat.scale)
    roots = [r for r in e8.roots if r in sub]
    return root_system_from_roots(roots, lat.scale, name=f'E{rank}')


def classify_root_sublattice(lat):
    """
    Dynkin type of an even lattice generated by its norm-2 vectors, with
    components ordered by letter and decreasing rank.
    """
    return root_system_of(lat).dynkin_type


def root_system_of(lat):
    roots = short_vectors(lat, ROOT_NORM)
    if not roots:
        raise NotRootGenerated(detail={'lattice': lat.name, 'roots': 0})
    rs = root_system_from_roots(roots, lat.scale, name=lat.name)
    if rs.rank != lat.rank or any(b not in rs.lattice for b in lat.basis):
        raise NotRootGenerated(detail={'lattice': lat.name, 'roots': len(roots)})
    return rs
