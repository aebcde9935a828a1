"""
Finite-dimensional spaces the engine works on: the weight-2 space of V_N and
the minimal-weight space of a coset module, plus linear maps between them
stored by their images of a basis.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm

from apps.exact.scalars import format_scalar, simplify
from apps.lattice.cosets import coset_min_norm, dual_cosets

from .constants import HALF, MAX_MAP_ORDER
from .element import GriessElement, quad_form, sparse_dot
from .exceptions import ContextMismatch, LeavesMinimalSpace

logger = logging.getLogger(__name__)


class WeightTwoSpace:
    """
    Basis order: a(-1)b(-1).1 for a <= b, then a(-2).1, then e^x in the order
    of ctx.norm4.
    """

    def __init__(self, ctx):
        self.ctx = ctx
        self.pairs = [(a, b) for a in range(ctx.dim) for b in range(a, ctx.dim)]
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}
        self.deriv_offset = len(self.pairs)
        self.expo_offset = self.deriv_offset + ctx.dim
        self.dimension = self.expo_offset + len(ctx.norm4)

    def zero(self):
        return GriessElement(self.ctx)

    @cached_property
    def basis(self):
        ctx = self.ctx
        quad = [GriessElement(ctx, quad={(a, b): Fraction(1) if a == b else HALF}) for a, b in self.pairs]
        deriv = [GriessElement(ctx, deriv={a: Fraction(1)}) for a in range(ctx.dim)]
        expo = [GriessElement(ctx, expo={k: Fraction(1)}) for k in range(len(ctx.norm4))]
        return tuple(quad + deriv + expo)

    def coordinates(self, u):
        if u.ctx is not self.ctx:
            raise ContextMismatch(detail={'space': self.ctx.name, 'element': u.ctx.name})
        coords = {}
        for (a, b), value in u.quad.items():
            coords[self.pair_index[(a, b)]] = value if a == b else 2 * value
        for a, value in u.deriv.items():
            coords[self.deriv_offset + a] = value
        for k, value in u.expo.items():
            coords[self.expo_offset + k] = value
        return coords

    def dense_coordinates(self, u):
        vector = [Fraction(0)] * self.dimension
        for k, value in self.coordinates(u).items():
            vector[k] = value
        return vector

    def combine(self, terms):
        """sum c * v over (c, v) pairs."""
        quad, deriv, expo = defaultdict(Fraction), defaultdict(Fraction), defaultdict(Fraction)
        for c, v in terms:
            for k, value in v.quad.items():
                quad[k] += c * value
            for k, value in v.deriv.items():
                deriv[k] += c * value
            for k, value in v.expo.items():
                expo[k] += c * value
        return GriessElement(self.ctx, quad, deriv, expo)

    def theta_blocks(self):
        """
        A basis adapted to theta: the theta-even vectors (Heisenberg squares and
        e^x + e^-x) and the theta-odd ones (a(-2).1 and e^x - e^-x), each pair
        listed once under its smaller index.
        """
        ctx = self.ctx
        quad = list(self.basis[:self.deriv_offset])
        deriv = list(self.basis[self.deriv_offset:self.expo_offset])
        even, odd = list(quad), list(deriv)
        for k, j in enumerate(ctx.negation):
            if k < j:
                even.append(GriessElement(ctx, expo={k: Fraction(1), j: Fraction(1)}))
                odd.append(GriessElement(ctx, expo={k: Fraction(1), j: Fraction(-1)}))
        return even, odd

    def theta_coordinates(self, u):
        """Coordinates of u in theta_blocks(), as (even, odd) dense lists."""
        ctx = self.ctx
        coords = self.coordinates(u)
        n_quad = self.deriv_offset
        even = [coords.get(k, Fraction(0)) for k in range(n_quad)]
        odd = [coords.get(self.deriv_offset + a, Fraction(0)) for a in range(ctx.dim)]
        for k, j in enumerate(ctx.negation):
            if k < j:
                a = u.expo.get(k, Fraction(0))
                b = u.expo.get(j, Fraction(0))
                even.append((a + b) * HALF)
                odd.append((a - b) * HALF)
        return even, odd


@lru_cache(maxsize=None)
def weight_two_space(ctx):
    return WeightTwoSpace(ctx)


class ModuleSpace:
    """Minimal-weight space of the V_N-module attached to a coset of N."""

    def __init__(self, ctx, coset, budget_seconds=None):
        if coset.lattice is not ctx.N and coset.lattice.basis != ctx.N.basis:
            raise ContextMismatch(detail={'space': ctx.name, 'coset': repr(coset)})
        self.ctx = ctx
        self.coset = coset
        minimum = coset_min_norm(coset, budget_seconds=budget_seconds)
        self.k = minimum.k
        self.reps = tuple(sorted(minimum.reps))
        self.index = {y: k for k, y in enumerate(self.reps)}
        self.dimension = len(self.reps)

    def __repr__(self):
        return f'<ModuleSpace {self.coset!r} min={self.k} dim={self.dimension}>'

    @property
    def weight(self):
        return self.k * HALF

    def zero(self):
        return ModuleVector(self, {})

    @cached_property
    def basis(self):
        return tuple(ModuleVector(self, {y: Fraction(1)}) for y in self.reps)

    def minimal_sum(self):
        """sum of e^y over all minimal vectors y of the coset."""
        return ModuleVector(self, {y: Fraction(1) for y in self.reps})

    def coordinates(self, v):
        return {self.index[y]: c for y, c in v.terms.items()}

    def combine(self, terms):
        total = defaultdict(Fraction)
        for c, v in terms:
            for y, value in v.terms.items():
                total[y] += c * value
        return ModuleVector(self, total)


class ModuleVector:
    __slots__ = ('space', 'terms')

    def __init__(self, space, terms):
        cleaned = {}
        for y, c in terms.items():
            if not c:
                continue
            y = tuple(y)
            if y not in space.index:
                raise LeavesMinimalSpace(detail={
                    'vector': [str(a) for a in y],
                    'minimum': str(space.k),
                })
            cleaned[y] = c
        self.space = space
        self.terms = cleaned

    def _check(self, other):
        if other.space is not self.space:
            raise ContextMismatch(detail={'left': repr(self.space), 'right': repr(other.space)})

    def __add__(self, other):
        self._check(other)
        return self.space.combine([(1, self), (1, other)])

    def __sub__(self, other):
        self._check(other)
        return self.space.combine([(1, self), (-1, other)])

    def __mul__(self, scalar):
        return ModuleVector(self.space, {y: c * scalar for y, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.space is other.space and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f'<ModuleVector {self.space!r} terms={len(self.terms)}>'

    def as_json(self):
        return [[[str(a) for a in y], format_scalar(simplify(c))] for y, c in sorted(self.terms.items())]


def module_act(u, v):
    """
    u_1 v for a weight-2 element u and a minimal-weight module vector v.

    e^x_1 e^y is e^(x+y) when <x, y> = -2 and vanishes otherwise; every such
    x + y is again minimal in the coset, so the action is found by walking
    the minimal vectors y' and testing whether y' - y is a key.
    """
    space = v.space
    ctx = u.ctx
    if space.ctx is not ctx:
        raise ContextMismatch(detail={'element': ctx.name, 'module': repr(space)})
    g = ctx.scale
    out = defaultdict(Fraction)
    for y, c in v.terms.items():
        weight = Fraction(0)
        if u.quad:
            weight = weight + g * g * quad_form(u.quad, y)
        if u.deriv:
            weight = weight - g * sparse_dot(u.deriv, y)
        if weight:
            out[y] += weight * c
        if not u.expo:
            continue
        for target in space.reps:
            k = ctx.index.get(tuple(t - s for t, s in zip(target, y)))
            if k is None:
                continue
            coefficient = u.expo.get(k)
            if coefficient:
                out[target] += coefficient * c
    return ModuleVector(space, out)


def dual_module_spaces(ctx, budget_seconds=None):
    """Minimal-weight spaces of all cosets of N in its dual, in discovery order."""
    spaces = [ModuleSpace(ctx, coset, budget_seconds) for coset in dual_cosets(ctx.N)]
    logger.debug('%s: %d dual cosets, total minimal dimension %d',
                 ctx.name, len(spaces), sum(s.dimension for s in spaces))
    return spaces


class LinearMap:
    """A linear map of a space into itself, stored as the images of its basis."""

    def __init__(self, space, images):
        self.space = space
        self.images = tuple(images)

    @classmethod
    def from_function(cls, space, function):
        return cls(space, [function(b) for b in space.basis])

    @classmethod
    def identity(cls, space):
        return cls(space, space.basis)

    def __call__(self, v):
        coords = self.space.coordinates(v)
        return self.space.combine((c, self.images[k]) for k, c in coords.items())

    def then(self, other):
        """other after self."""
        return LinearMap(self.space, [other(image) for image in self.images])

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.space is other.space and self.images == other.images

    __hash__ = None

    def is_identity(self):
        return all(image == b for image, b in zip(self.images, self.space.basis))

    def order(self, bound=MAX_MAP_ORDER):
        power = self
        for k in range(1, bound + 1):
            if power.is_identity():
                return k
            power = power.then(self)
        raise ValueError(f'linear map has order above {bound}')


def combined_order(maps, bound=MAX_MAP_ORDER):
    """Order of a block-diagonal map given by its blocks."""
    order = 1
    for m in maps:
        order = lcm(order, m.order(bound))
    return order
