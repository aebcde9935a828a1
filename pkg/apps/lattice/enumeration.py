"""
Exact Fincke-Pohst enumeration.

Bounds come from the rational LDL decomposition of the Gram matrix; interval
end points are computed with integer square roots and corrected exactly, so
no floating point enters the search.
"""
import logging
import time
from fractions import Fraction
from math import floor, isqrt

from apps.exact.scalars import as_fraction, format_rational

from .constants import BUDGET_CHECK_INTERVAL
from .even import ldl
from .exceptions import EnumerationBudgetExceeded

logger = logging.getLogger(__name__)


def _within(z, a, b):
    """z <= a + sqrt(b) for rationals a and b >= 0."""
    d = z - a
    return d <= 0 or d * d <= b


def floor_plus_sqrt(a, b):
    """Largest integer z with z <= a + sqrt(b)."""
    z = floor(a) + isqrt(floor(b))
    while _within(z + 1, a, b):
        z += 1
    return z


def ceil_minus_sqrt(a, b):
    """Smallest integer z with z >= a - sqrt(b)."""
    return -floor_plus_sqrt(-a, b)


class _Search:

    def __init__(self, lat, bound, shift, deadline):
        self.lat = lat
        self.bound = as_fraction(bound)
        self.q, self.mu = ldl(lat.gram)
        self.shift = shift
        self.deadline = deadline
        self.nodes = 0
        self.found = []
        self.t = [Fraction(0)] * lat.rank

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % BUDGET_CHECK_INTERVAL == 0:
            if time.monotonic() > self.deadline:
                raise EnumerationBudgetExceeded(detail={
                    'lattice': self.lat.name,
                    'bound': format_rational(self.bound),
                    'nodes': self.nodes,
                })

    def run(self):
        if self.lat.rank:
            self._descend(self.lat.rank - 1, Fraction(0))
        return self.found

    def _descend(self, level, partial):
        self._tick()
        t, mu, q = self.t, self.mu[level], self.q[level]
        center = -sum((mu[j] * t[j] for j in range(level + 1, self.lat.rank) if t[j]), Fraction(0))
        radius_sq = (self.bound - partial) / q
        offset = center - self.shift[level]
        lo = ceil_minus_sqrt(offset, radius_sq)
        hi = floor_plus_sqrt(offset, radius_sq)
        for z in range(lo, hi + 1):
            t[level] = z + self.shift[level]
            y = t[level] - center
            value = partial + q * y * y
            if value > self.bound:
                continue
            if level == 0:
                self.found.append((value, tuple(t)))
            else:
                self._descend(level - 1, value)
        t[level] = Fraction(0)


def vectors_up_to(lat, bound, shift=None, budget_seconds=None):
    """
    All vectors v of lat (or of the coset shift + lat) with norm(v) <= bound,
    as (norm, ambient vector) pairs sorted by norm and then lexicographically.
    """
    if shift is None:
        shift_coords = [Fraction(0)] * lat.rank
    else:
        shift_coords = list(lat.coordinates(shift))
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    search = _Search(lat, bound, shift_coords, deadline)
    found = search.run()
    logger.debug('enumerated %s up to %s: %d vectors, %d nodes',
                 lat, bound, len(found), search.nodes)
    return sorted((value, lat.vector(coords)) for value, coords in found)


def short_vectors(lat, norm, budget_seconds=None):
    """All lattice vectors of exactly the given norm, sorted lexicographically."""
    norm = as_fraction(norm)
    return sorted(v for value, v in vectors_up_to(lat, norm, budget_seconds=budget_seconds)
                  if value == norm)


def nonzero_minimum(lat, budget_seconds=None):
    """Smallest norm of a nonzero vector, searched up to the shortest basis norm."""
    bound = min(lat.norm(b) for b in lat.basis)
    return min(value for value, v in vectors_up_to(lat, bound, budget_seconds=budget_seconds) if any(v))
