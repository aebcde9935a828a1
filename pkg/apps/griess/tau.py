"""
Involutions of Ising vectors on finite-dimensional pieces.

For an Ising vector e the operator e_1 is diagonalizable with eigenvalues in
a known finite set on the weight-2 space and on minimal-weight module
spaces. The involution is -1 on the 1/16-eigenspace and +1 elsewhere. The
eigenspace projector is the Lagrange polynomial of the operator, evaluated
on integer coefficient slices over Q(zeta_m), so Ising vectors with
cyclotomic coefficients go through the same path as rational ones.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from apps.exact.exceptions import NonRational
from apps.exact.linalg import CyclotomicMatrix, identity_matrix, solve
from apps.exact.scalars import as_rational, format_rational
from apps.rootsys.e8 import extended_e8_node

from .automorphisms import Theta
from .constants import MODULE_SPECTRUM, TWISTED_WEIGHT, WEIGHT_TWO_SPECTRUM
from .element import product
from .exceptions import BadSpectrum
from .families import build_node_family
from .spaces import LinearMap, ModuleSpace, dual_module_spaces, module_act, weight_two_space

logger = logging.getLogger(__name__)


@dataclass
class Involution:
    """tau_e on one space, with the eigenvalue multiplicities of e there."""

    map: LinearMap
    multiplicities: dict

    @property
    def space(self):
        return self.map.space

    def __call__(self, v):
        return self.map(v)

    def as_json(self):
        return {format_rational(k): v for k, v in sorted(self.multiplicities.items())}


def action_matrix(vectors, coordinates, act):
    """Matrix whose column j is coordinates(act(vectors[j]))."""
    return CyclotomicMatrix.from_columns([coordinates(act(v)) for v in vectors])


def _rational_trace(value, n, spectrum):
    try:
        return as_rational(value)
    except NonRational:
        raise BadSpectrum('trace outside Q', detail={
            'dimension': n, 'spectrum': [format_rational(v) for v in spectrum],
        }) from None


def twisted_projector(matrix, spectrum):
    """
    Projector onto the 1/16-eigenspace of a CyclotomicMatrix that must be
    diagonalizable with eigenvalues in `spectrum`, and the multiplicities of
    each eigenvalue.
    """
    n = matrix.size
    if n == 0:
        return matrix, {value: 0 for value in spectrum}
    d = int(matrix.divisor)
    A = matrix.numerators()
    factors = {value: A.shifted(value.denominator, value.numerator * d) for value in spectrum}

    partial = None
    scale = Fraction(1)
    for value in spectrum:
        if value == TWISTED_WEIGHT:
            continue
        partial = factors[value] if partial is None else partial @ factors[value]
        scale *= value.denominator * d * (TWISTED_WEIGHT - value)
    if not (partial @ factors[TWISTED_WEIGHT]).is_zero():
        raise BadSpectrum(detail={'dimension': n, 'spectrum': [format_rational(v) for v in spectrum]})

    # Multiplicities from the power traces tr(M^k), k < |spectrum|.
    traces = [Fraction(n)]
    power = None
    for k in range(1, len(spectrum)):
        if power is not None and k == len(spectrum) - 1:
            value = power.product_trace(A)
        else:
            power = A if power is None else power @ A
            value = power.trace()
        traces.append(_rational_trace(value, n, spectrum) / d ** k)
    vandermonde = [[value ** k for value in spectrum] for k in range(len(spectrum))]
    counts = solve(vandermonde, traces)
    multiplicities = {value: int(count) for value, count in zip(spectrum, counts)}

    return CyclotomicMatrix(partial.order, partial.slices, scale), multiplicities


def _reflection(projector):
    return identity_matrix(projector.size) - projector.to_dense() * 2


def _apply(matrix, vector):
    return list(matrix.dot(np.array(vector, dtype=object)))


def _column_images(space, T, basis):
    """Images of the basis under the matrix T, read off its columns."""
    n = len(basis)
    return [space.combine((T[i, j], basis[i]) for i in range(n) if T[i, j]) for j in range(n)]


def weight_two_involution(e, space=None):
    """tau_e on the weight-2 space of V_N."""
    space = space or weight_two_space(e.ctx)
    act = lambda v: product(e, v)  # noqa: E731
    if Theta()(e) == e:
        # e_1 commutes with theta, so the theta-even and theta-odd blocks split.
        even, odd = space.theta_blocks()
        M_even = action_matrix(even, lambda u: space.theta_coordinates(u)[0], act)
        M_odd = action_matrix(odd, lambda u: space.theta_coordinates(u)[1], act)
        P_even, m_even = twisted_projector(M_even, WEIGHT_TWO_SPECTRUM)
        P_odd, m_odd = twisted_projector(M_odd, WEIGHT_TWO_SPECTRUM)
        T_even, T_odd = _reflection(P_even), _reflection(P_odd)
        multiplicities = {k: m_even[k] + m_odd[k] for k in WEIGHT_TWO_SPECTRUM}

        def apply(u):
            a, b = space.theta_coordinates(u)
            return space.combine(list(zip(_apply(T_even, a), even)) + list(zip(_apply(T_odd, b), odd)))

        linear_map = LinearMap.from_function(space, apply)
    else:
        basis = space.basis
        M = action_matrix(basis, space.dense_coordinates, act)
        P, multiplicities = twisted_projector(M, WEIGHT_TWO_SPECTRUM)
        linear_map = LinearMap(space, _column_images(space, _reflection(P), basis))

    involution = Involution(linear_map, multiplicities)
    logger.info('tau on weight 2 of %s over Q(zeta_%d): multiplicities %s',
                e.ctx.name, e.field_order, involution.as_json())
    return involution


def module_involution(e, space):
    """tau_e on the minimal-weight space of a coset module."""
    basis = space.basis

    def dense(v):
        coords = space.coordinates(v)
        return [coords.get(k, Fraction(0)) for k in range(space.dimension)]

    M = action_matrix(basis, dense, lambda v: module_act(e, v))
    P, multiplicities = twisted_projector(M, MODULE_SPECTRUM)
    involution = Involution(LinearMap(space, _column_images(space, _reflection(P), basis)), multiplicities)
    logger.debug('tau on %r: multiplicities %s', space, involution.as_json())
    return involution


def tau_involution(e, space):
    if isinstance(space, ModuleSpace):
        return module_involution(e, space)
    return weight_two_involution(e, space)


@lru_cache(maxsize=None)
def e_hat_weight_two_involution():
    """tau of the node-independent e_hat on weight 2 of V_sqrt2E8."""
    family = build_node_family(extended_e8_node(0))
    return tau_involution(family.e_hat, weight_two_space(family.ctx))


@lru_cache(maxsize=None)
def e_hat_dual_involutions():
    """tau of e_hat on the minimal-weight space of every coset of sqrt2 E8 in its dual."""
    family = build_node_family(extended_e8_node(0))
    return tuple(tau_involution(family.e_hat, space)
                 for space in dual_module_spaces(family.ctx))


@lru_cache(maxsize=None)
def f_hat_weight_two_involution(i):
    """tau of f_hat for node i on weight 2, from the eigenspaces of f_hat."""
    family = build_node_family(extended_e8_node(i))
    return tau_involution(family.f_hat, e_hat_weight_two_involution().space)


@lru_cache(maxsize=None)
def f_hat_dual_involutions(i):
    """tau of f_hat for node i on the same dual coset spaces as e_hat_dual_involutions."""
    family = build_node_family(extended_e8_node(i))
    return tuple(tau_involution(family.f_hat, tau.space) for tau in e_hat_dual_involutions())
