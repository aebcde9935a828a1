import logging
from collections import defaultdict
from fractions import Fraction
from math import lcm

from apps.exact.scalars import format_scalar, is_rational, scalar_order, simplify

from .constants import HALF
from .exceptions import ContextMismatch, NotConformal

logger = logging.getLogger(__name__)


def _clean(mapping):
    return {k: v for k, v in (mapping or {}).items() if v}


def quad_form(quad, x):
    """x^T Q x for a symmetric Q stored on its upper triangle."""
    total = Fraction(0)
    for (a, b), value in quad.items():
        term = value * x[a] * x[b]
        total = total + (term if a == b else 2 * term)
    return total


def quad_apply(quad, d):
    """Q d as a sparse vector."""
    out = defaultdict(Fraction)
    for (a, b), value in quad.items():
        out[a] += value * d.get(b, 0)
        if a != b:
            out[b] += value * d.get(a, 0)
    return out


def sparse_dot(d, x):
    return sum((value * x[a] for a, value in d.items()), Fraction(0))


def outer_terms(x, weight):
    """Upper-triangle entries of weight * x x^T."""
    nonzero = [(a, c) for a, c in enumerate(x) if c]
    return {(a, b): weight * ca * cb for i, (a, ca) in enumerate(nonzero) for b, cb in nonzero[i:]}


class GriessElement:
    """
    Weight-2 vector of V_N: sum Q_ab a(-1)b(-1).1 + sum d_a a(-2).1 + sum c_x e^x.

    `quad` holds the symmetric matrix Q on its upper triangle, `deriv` the
    vector d and `expo` the coefficients c keyed by indices of ctx.norm4.
    """

    __slots__ = ('ctx', 'quad', 'deriv', 'expo')

    def __init__(self, ctx, quad=None, deriv=None, expo=None):
        self.ctx = ctx
        self.quad = _clean(quad)
        self.deriv = _clean(deriv)
        self.expo = _clean(expo)

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def heisenberg_square(cls, ctx, x, coefficient=1):
        """coefficient * x(-1)^2.1 for an ambient vector x."""
        return cls(ctx, quad=outer_terms(x, coefficient))

    @classmethod
    def exponential(cls, ctx, x, coefficient=1):
        return cls(ctx, expo={ctx.key(x): coefficient})

    @classmethod
    def omega(cls, ctx):
        Q = ctx.omega_matrix
        return cls(ctx, quad={(a, b): Q[a, b] for a in range(ctx.dim) for b in range(a, ctx.dim)})

    def _check(self, other):
        if other.ctx is not self.ctx:
            raise ContextMismatch(detail={'left': self.ctx.name, 'right': other.ctx.name})

    def _combine(self, other, sign):
        self._check(other)
        parts = []
        for mine, theirs in ((self.quad, other.quad), (self.deriv, other.deriv), (self.expo, other.expo)):
            merged = dict(mine)
            for k, v in theirs.items():
                merged[k] = merged.get(k, 0) + sign * v
            parts.append(merged)
        return GriessElement(self.ctx, *parts)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        return GriessElement(
            self.ctx,
            {k: v * scalar for k, v in self.quad.items()},
            {k: v * scalar for k, v in self.deriv.items()},
            {k: v * scalar for k, v in self.expo.items()},
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / scalar)

    def __eq__(self, other):
        if not isinstance(other, GriessElement):
            return NotImplemented
        return (self.ctx is other.ctx and self.quad == other.quad
                and self.deriv == other.deriv and self.expo == other.expo)

    __hash__ = None

    def __bool__(self):
        return bool(self.quad or self.deriv or self.expo)

    def __repr__(self):
        return (f'<GriessElement {self.ctx.name} quad={len(self.quad)} '
                f'deriv={len(self.deriv)} expo={len(self.expo)}>')

    def scalars(self):
        yield from self.quad.values()
        yield from self.deriv.values()
        yield from self.expo.values()

    @property
    def field_order(self):
        order = 1
        for value in self.scalars():
            order = lcm(order, scalar_order(value))
        return order

    def is_rational(self):
        return all(is_rational(v) for v in self.scalars())

    def as_json(self):
        ctx = self.ctx
        return {
            'quad': [[a, b, format_scalar(simplify(v))] for (a, b), v in sorted(self.quad.items())],
            'deriv': [[a, format_scalar(simplify(v))] for a, v in sorted(self.deriv.items())],
            'expo': [[[str(c) for c in ctx.norm4[k]], format_scalar(simplify(v))]
                     for k, v in sorted(self.expo.items())],
        }


def product(u, v):
    """u_1 v under the trivial cocycle."""
    u._check(v)
    ctx = u.ctx
    g = ctx.scale
    keys = ctx.norm4
    quad = defaultdict(Fraction)
    deriv = defaultdict(Fraction)
    expo = defaultdict(Fraction)

    if u.quad and v.quad:
        Qu, Qv = ctx.dense(u.quad), ctx.dense(v.quad)
        R = (Qu.dot(Qv) + Qv.dot(Qu)) * (2 * g)
        for a in range(ctx.dim):
            for b in range(a, ctx.dim):
                quad[(a, b)] += R[a, b]

    if u.quad and v.deriv:
        for a, value in quad_apply(u.quad, v.deriv).items():
            deriv[a] += 4 * g * value

    # Heisenberg parts act diagonally on e^x, from either side.
    for left, right in ((u, v), (v, u)):
        if not right.expo:
            continue
        for k, c in right.expo.items():
            x = keys[k]
            weight = Fraction(0)
            if left.quad:
                weight = weight + g * g * quad_form(left.quad, x)
            if left.deriv:
                weight = weight - g * sparse_dot(left.deriv, x)
            if weight:
                expo[k] += weight * c

    if u.expo and v.expo:
        _exponential_products(ctx, u.expo, v.expo, quad, deriv, expo)

    return GriessElement(ctx, quad, deriv, expo)


def _exponential_products(ctx, left, right, quad, deriv, expo):
    neighbours = ctx.neighbours
    if len(left) <= len(right):
        for i, c in left.items():
            for j, k in neighbours[i]:
                d = right.get(j)
                if d:
                    expo[k] += c * d
    else:
        for j, d in right.items():
            for i, k in neighbours[j]:
                c = left.get(i)
                if c:
                    expo[k] += c * d
    # e^x_1 e^-x = (1/2)(x(-1)^2 + x(-2)).1
    for i, c in left.items():
        d = right.get(ctx.negation[i])
        if not d:
            continue
        x = ctx.norm4[i]
        weight = HALF * c * d
        for key, value in outer_terms(x, weight).items():
            quad[key] += value
        for a, coordinate in enumerate(x):
            if coordinate:
                deriv[a] += weight * coordinate


def inner(u, v):
    """The invariant form, from u_3 v = <u, v>.1."""
    u._check(v)
    ctx = u.ctx
    g = ctx.scale
    total = Fraction(0)
    for key, value in u.quad.items():
        other = v.quad.get(key)
        if other:
            a, b = key
            total = total + (2 * g * g) * value * other * (1 if a == b else 2)
    for a, value in u.deriv.items():
        other = v.deriv.get(a)
        if other:
            total = total + 2 * g * value * other
    for k, value in u.expo.items():
        other = v.expo.get(ctx.negation[k])
        if other:
            total = total + value * other
    return simplify(total)


def conformal_check(e):
    """Central charge 2<e, e> of e when e_1 e = 2e, else NotConformal."""
    residual = product(e, e) - 2 * e
    if residual:
        raise NotConformal(detail={
            'context': e.ctx.name,
            'residual_terms': len(residual.quad) + len(residual.deriv) + len(residual.expo),
        })
    charge = simplify(2 * inner(e, e))
    logger.debug('conformal vector in %s with central charge %s', e.ctx.name, format_scalar(charge))
    return charge
