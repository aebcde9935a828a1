import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from apps.exact.linalg import identity_matrix
from apps.exact.scalars import Cyclotomic, simplify

from .constants import SIGMA, THETA, WEYL
from .element import GriessElement
from .exceptions import EmbeddingError
from .spaces import LinearMap, ModuleVector

logger = logging.getLogger(__name__)


class Sigma:
    """
    e^y -> exp(-pi i <beta, y>)^power e^y, identity on the Heisenberg part.
    `n` bounds the denominators of <beta, y>.
    """

    kind = SIGMA

    def __init__(self, beta, n, power=1):
        self.beta = tuple(Fraction(b) for b in beta)
        self.n = n
        self.power = power

    def __repr__(self):
        return f'<Sigma n={self.n} power={self.power}>'

    def exponent(self, ctx, y):
        """m with exp(-pi i <beta, y>) = zeta_(2n)^m."""
        value = -self.n * ctx.inner(self.beta, y)
        if value.denominator != 1:
            raise EmbeddingError(detail={'pairing': str(ctx.inner(self.beta, y)), 'n': self.n})
        return int(value)

    def phase(self, ctx, y):
        m = self.power * self.exponent(ctx, y)
        return simplify(Cyclotomic.zeta(2 * self.n, m))

    def inverse(self):
        return Sigma(self.beta, self.n, -self.power)

    def __pow__(self, k):
        return Sigma(self.beta, self.n, self.power * k)

    def __call__(self, u):
        if isinstance(u, ModuleVector):
            ctx = u.space.ctx
            return ModuleVector(u.space, {y: c * self.phase(ctx, y) for y, c in u.terms.items()})
        ctx = u.ctx
        expo = {k: c * self.phase(ctx, ctx.norm4[k]) for k, c in u.expo.items()}
        return GriessElement(ctx, u.quad, u.deriv, expo)


def sigma_for_node(node, power=1):
    """sigma of an extended E8 node, acting in the Hamming model of sqrt2 E8."""
    return Sigma(node.glue_a, node.n, power)


class Theta:
    """x(-n) -> -x(-n), e^x -> e^-x."""

    kind = THETA

    def __repr__(self):
        return '<Theta>'

    def inverse(self):
        return self

    def __call__(self, u):
        if isinstance(u, ModuleVector):
            return ModuleVector(u.space, {tuple(-a for a in y): c for y, c in u.terms.items()})
        ctx = u.ctx
        return GriessElement(
            ctx,
            u.quad,
            {a: -c for a, c in u.deriv.items()},
            {ctx.negation[k]: c for k, c in u.expo.items()},
        )


class Weyl:
    """The reflection in a key r, applied to every tensor factor."""

    kind = WEYL

    def __init__(self, ctx, root):
        self.ctx = ctx
        self.root = tuple(Fraction(a) for a in root)
        norm = ctx.inner(self.root, self.root)
        factor = 2 * ctx.scale / norm
        r = np.array(self.root, dtype=object)
        self.matrix = identity_matrix(ctx.dim) - np.outer(r, r) * factor

    def __repr__(self):
        return f'<Weyl {self.root}>'

    def inverse(self):
        return self

    def reflect(self, v):
        return tuple(self.matrix.dot(np.array(v, dtype=object)))

    def __call__(self, u):
        if isinstance(u, ModuleVector):
            return ModuleVector(u.space, {self.reflect(y): c for y, c in u.terms.items()})
        ctx = self.ctx
        S = self.matrix
        quad = {}
        if u.quad:
            Q = S.dot(ctx.dense(u.quad)).dot(S)
            quad = {(a, b): Q[a, b] for a in range(ctx.dim) for b in range(a, ctx.dim)}
        deriv = {}
        if u.deriv:
            d = S.dot(np.array([u.deriv.get(a, Fraction(0)) for a in range(ctx.dim)], dtype=object))
            deriv = dict(enumerate(d))
        expo = {ctx.key(self.reflect(ctx.norm4[k])): c for k, c in u.expo.items()}
        return GriessElement(ctx, quad, deriv, expo)


def apply_automorphism(automorphism, u):
    return automorphism(u)


def conjugate(linear_map, g):
    """g . m . g^-1 for an automorphism g."""
    g_inverse = g.inverse()
    space = linear_map.space
    return LinearMap(space, [g(linear_map(g_inverse(b))) for b in space.basis])


@dataclass(frozen=True)
class DihedralCheck:
    n: int
    sigma_order: int
    theta_involution: bool
    inverting: bool
    theta_outside: bool

    @property
    def group_order(self):
        return 2 * self.sigma_order if self.theta_outside else self.sigma_order

    @property
    def passed(self):
        return (self.sigma_order == self.n and self.theta_involution
                and self.inverting and self.theta_outside)

    def as_json(self):
        return {
            'n': self.n,
            'sigma_order': self.sigma_order,
            'theta_involution': self.theta_involution,
            'theta_sigma_theta_is_sigma_inverse': self.inverting,
            'theta_outside_sigma': self.theta_outside,
            'group_order': self.group_order,
        }


def dihedral_check(space, sigma):
    """<sigma, theta> on a space: relation, orders, and theta not a power of sigma."""
    theta = Theta()
    sigma_map = LinearMap.from_function(space, sigma)
    theta_map = LinearMap.from_function(space, theta)
    inverse_map = LinearMap.from_function(space, sigma.inverse())
    sigma_order = sigma_map.order()
    inverting = theta_map.then(sigma_map).then(theta_map) == inverse_map
    theta_involution = theta_map.then(theta_map).is_identity()
    powers = [LinearMap.from_function(space, sigma ** k) for k in range(sigma_order)]
    theta_outside = all(theta_map != p for p in powers)
    check = DihedralCheck(
        n=sigma.n,
        sigma_order=sigma_order,
        theta_involution=theta_involution,
        inverting=inverting,
        theta_outside=theta_outside,
    )
    logger.debug('dihedral check: %s', check.as_json())
    return check
