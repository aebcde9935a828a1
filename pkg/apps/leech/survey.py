import logging
from collections import Counter
from dataclasses import dataclass

from apps.exact.scalars import format_rational, format_vector
from apps.griess.context import e8_context
from apps.lattice.cosets import coset_min_norm, dual_cosets
from apps.lattice.enumeration import short_vectors
from apps.lattice.even import EvenLattice

from .constants import COSET_SHAPES, DUAL_COSET_COUNT, DUAL_MIN_NORMS
from .exceptions import ShapeMismatch

logger = logging.getLogger(__name__)

SORTED_SHAPES = [tuple(sorted(shape, reverse=True)) for shape in COSET_SHAPES]


@dataclass(frozen=True)
class CosetShape:
    k: int
    representative: tuple
    shape: int
    split: tuple = ()

    def as_json(self):
        data = {
            'min_norm': format_rational(self.k),
            'representative': format_vector(self.representative),
            'shape': self.shape,
        }
        if self.split:
            data['split'] = [format_vector(v) for v in self.split]
        return data


@dataclass(frozen=True)
class CosetSurvey:
    cosets: tuple

    @property
    def by_norm(self):
        return dict(sorted(Counter(int(c.k) for c in self.cosets).items()))

    @property
    def by_shape(self):
        return dict(sorted(Counter(c.shape for c in self.cosets).items()))

    @property
    def passed(self):
        return len(self.cosets) == DUAL_COSET_COUNT and set(self.by_norm) <= set(DUAL_MIN_NORMS)

    def as_json(self):
        return {
            'cosets': len(self.cosets),
            'by_min_norm': {str(k): v for k, v in self.by_norm.items()},
            'by_shape': {str(k): v for k, v in self.by_shape.items()},
        }


def match_shape(vector):
    key = tuple(sorted(vector, reverse=True))
    for number, shape in enumerate(SORTED_SHAPES):
        if key == shape:
            return number
    return None


def orthogonal_split(vector, unit_vectors, lattice):
    """a + b = vector with a, b of norm 1."""
    for a in unit_vectors:
        b = tuple(x - y for x, y in zip(vector, a))
        if lattice.norm(b) == 1:
            return a, b
    return None


def minimal_coset_survey(budget_seconds=None):
    """
    Every coset of sqrt2 E8 in its dual: its minimum, a minimal
    representative of one of the listed shapes, and for minimum 2 a
    splitting into two orthogonal norm-1 vectors of the dual.
    """
    lattice = e8_context().N
    dual = EvenLattice(lattice.dual_basis, lattice.scale, name='dual(sqrt2E8)')
    unit_vectors = short_vectors(dual, 1, budget_seconds=budget_seconds)
    found = []
    for coset in dual_cosets(lattice):
        minimum = coset_min_norm(coset, budget_seconds=budget_seconds)
        detail = {'coset': repr(coset), 'min_norm': format_rational(minimum.k)}
        if minimum.k not in DUAL_MIN_NORMS:
            raise ShapeMismatch('minimum outside 0, 1, 2', detail=detail)
        matched = [(match_shape(v), v) for v in minimum.reps]
        matched = [(number, v) for number, v in matched if number is not None]
        if not matched:
            raise ShapeMismatch(detail=detail)
        number, rep = min(matched)
        split = ()
        if minimum.k == 2:
            split = orthogonal_split(rep, unit_vectors, dual)
            if split is None:
                raise ShapeMismatch('no orthogonal norm-1 splitting', detail=detail)
        found.append(CosetShape(k=minimum.k, representative=rep, shape=number, split=split))
    survey = CosetSurvey(cosets=tuple(found))
    logger.info('dual coset survey: %s', survey.as_json())
    return survey
