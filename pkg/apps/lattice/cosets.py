import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from apps.exact.scalars import format_rational

from .enumeration import vectors_up_to
from .even import as_vector

logger = logging.getLogger(__name__)

INITIAL_COSET_BOUND = Fraction(1, 2)


class Coset:
    """shift + lattice, for a shift in the rational span of the lattice."""

    __slots__ = ('lattice', 'shift', '_coords')

    def __init__(self, lattice, shift=None):
        self.lattice = lattice
        if shift is None:
            shift = (Fraction(0),) * lattice.ambient_dim
        self.shift = as_vector(shift)
        self._coords = tuple(c - floor(c) for c in lattice.coordinates(self.shift))

    @property
    def reduced_coordinates(self):
        """Basis coordinates of the shift, reduced into [0, 1)."""
        return self._coords

    def is_trivial(self):
        return not any(self._coords)

    def __eq__(self, other):
        if not isinstance(other, Coset):
            return NotImplemented
        return self.lattice is other.lattice and self._coords == other._coords

    def __hash__(self):
        return hash(self._coords)

    def __add__(self, other):
        if isinstance(other, Coset):
            other = other.shift
        return Coset(self.lattice, tuple(a + b for a, b in zip(self.shift, as_vector(other))))

    def __neg__(self):
        return Coset(self.lattice, tuple(-a for a in self.shift))

    def __contains__(self, vector):
        difference = tuple(a - b for a, b in zip(as_vector(vector), self.shift))
        return difference in self.lattice

    def __repr__(self):
        coords = ', '.join(format_rational(c) for c in self._coords)
        return f'Coset({self.lattice!r}, [{coords}])'


def canonical_rep(coset):
    """The coset vector whose basis coordinates all lie in [0, 1)."""
    return coset.lattice.vector(coset.reduced_coordinates)


@dataclass(frozen=True)
class CosetMinimum:
    k: Fraction
    reps: tuple


def coset_min_norm(coset, budget_seconds=None):
    """
    Minimum norm k over the coset and every vector achieving it.

    The search bound starts small and doubles; it never exceeds the norm of
    the canonical representative, so the loop always terminates.
    """
    lat = coset.lattice
    ceiling = lat.norm(canonical_rep(coset))
    bound = min(INITIAL_COSET_BOUND, ceiling)
    while True:
        found = vectors_up_to(lat, bound, shift=coset.shift, budget_seconds=budget_seconds)
        if found:
            k = found[0][0]
            reps = tuple(v for value, v in found if value == k)
            logger.debug('%r: minimum %s with %d vectors', coset, k, len(reps))
            return CosetMinimum(k=k, reps=reps)
        bound = min(bound * 2, ceiling)


def dual_cosets(lat):
    """
    Representatives of lat*/lat, found by a breadth-first walk over the dual
    basis. Returned in order of discovery from the trivial coset.
    """
    start = Coset(lat)
    seen = {start}
    order = [start]
    queue = deque([start])
    generators = lat.dual_basis
    while queue:
        current = queue.popleft()
        for g in generators:
            nxt = current + g
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    logger.debug('%r: %d dual cosets', lat, len(order))
    return order
