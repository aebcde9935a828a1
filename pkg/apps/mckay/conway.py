import logging
from dataclasses import dataclass, field
from fractions import Fraction

from apps.exact.scalars import Cyclotomic, format_rational, format_scalar, simplify
from apps.griess.automorphisms import sigma_for_node
from apps.griess.element import conformal_check, inner
from apps.griess.exceptions import NotConformal
from apps.griess.families import build_node_family
from apps.rootsys.e8 import extended_e8_node
from apps.rootsys.systems import dynkin_label, expected_central_charge

from .constants import (
    COMPONENT_ROW, CONWAY_ROWS, DIFFERENCE_ROW, RECORDED, SIGMA_ROW, VERIFIED,
)

logger = logging.getLogger(__name__)

SIGMA_SCALE = Fraction(1, 32)
ISING_CHARGE = Fraction(1, 2)


@dataclass(frozen=True)
class ConwayRow:
    """One line of the map into the Griess algebra of the moonshine module."""

    kind: str
    element: str
    scale: object
    target: str
    verified: bool
    checks: dict = field(default_factory=dict)

    @property
    def status(self):
        # The scale itself needs Conway's normalization and is never checked here.
        return RECORDED

    @property
    def check_status(self):
        return VERIFIED if self.verified else 'failed'

    def as_json(self):
        return {
            'kind': self.kind,
            'element': self.element,
            'scale': format_scalar(self.scale),
            'target': self.target,
            'status': self.status,
            'check_status': self.check_status,
            'checks': self.checks,
        }


def _charge_checks(element, expected):
    try:
        charge = conformal_check(element)
    except NotConformal as error:
        return False, {'conformal': False, 'error': error.as_record()}
    return charge == expected, {
        'conformal': True,
        'central_charge': format_scalar(charge),
        'expected_central_charge': format_rational(expected),
    }


def difference_scale():
    """-1/(35 sqrt5)."""
    return simplify(Fraction(-1) / (Cyclotomic.sqrt5() * 35))


def _sigma_rows(node, family):
    rows = []
    for j in range(node.n):
        element = sigma_for_node(node, power=j)(family.e_hat)
        verified, checks = _charge_checks(element, ISING_CHARGE)
        rows.append(ConwayRow(
            kind=SIGMA_ROW,
            element=f'sigma^{j} e_hat',
            scale=SIGMA_SCALE,
            target=f't_{j}',
            verified=verified,
            checks=checks,
        ))
    return rows


def _component_row(family, component, scale, target):
    letter, rank = component
    omega_tilde = family.component(letter, rank)[0].omega_tilde
    verified, checks = _charge_checks(omega_tilde, expected_central_charge(letter, rank))
    return ConwayRow(
        kind=COMPONENT_ROW,
        element=f'omega_tilde[{dynkin_label((component,))}]',
        scale=scale,
        target=target,
        verified=verified,
        checks=checks,
    )


def _difference_row(family, component, target):
    """omega_tilde^1 - omega_tilde^2 for the two equal components."""
    letter, rank = component
    first, second = (c.omega_tilde for c in family.component(letter, rank))
    difference = first - second
    norm = simplify(inner(difference, difference))
    expected = expected_central_charge(letter, rank)
    orthogonal = simplify(inner(first, second)) == 0
    return ConwayRow(
        kind=DIFFERENCE_ROW,
        element=f'omega_tilde^1 - omega_tilde^2 [{dynkin_label((component,))}]',
        scale=difference_scale(),
        target=target,
        verified=orthogonal and norm == expected,
        checks={
            'orthogonal': orthogonal,
            'norm': format_scalar(norm),
            'expected_norm': format_rational(expected),
        },
    )


def conway_report(i):
    """
    The rows sending sigma^j e_hat and the component conformal vectors of a
    node into the moonshine Griess algebra, each with what can be checked
    locally: conformality and central charge, or for the difference row its
    norm <w, w> = c/2 + c/2.
    """
    node = extended_e8_node(i)
    family = build_node_family(node)
    rows = _sigma_rows(node, family)
    for kind, component, scale, target in CONWAY_ROWS[i]:
        if kind == DIFFERENCE_ROW:
            rows.append(_difference_row(family, component, target))
        else:
            rows.append(_component_row(family, component, scale, target))
    failed = [row.element for row in rows if not row.verified]
    if failed:
        logger.warning('node %d: correspondence rows failed their checks: %s', i, failed)
    return rows
