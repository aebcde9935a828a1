from fractions import Fraction
from functools import lru_cache
from math import lcm

from sympy import Poly, cyclotomic_poly, symbols, totient

from .constants import CYCLOTOMIC_SEPARATOR, RATIONAL_SEPARATOR
from .exceptions import NonRational

_x = symbols('x')


@lru_cache(maxsize=None)
def cyclotomic_modulus(order):
    """
    Coefficients of the order-th cyclotomic polynomial, lowest degree first.
    The polynomial is monic, so the last entry is always 1.
    """
    coeffs = Poly(cyclotomic_poly(order, _x), _x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def field_degree(order):
    return int(totient(order))


def _reduce(order, coeffs):
    modulus = cyclotomic_modulus(order)
    degree = len(modulus) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, degree - 1, -1):
        top = coeffs[k]
        if top:
            shift = k - degree
            for m in range(degree + 1):
                coeffs[shift + m] -= top * modulus[m]
    coeffs = coeffs[:degree]
    coeffs += [0] * (degree - len(coeffs))
    return tuple(Fraction(c) for c in coeffs)


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f'not an exact rational: {value!r}')


class Cyclotomic:
    """
    Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1),
    reduced modulo the N-th cyclotomic polynomial.
    """

    __slots__ = ('order', 'coeffs')

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise ValueError('cyclotomic order must be positive')
        self.order = order
        self.coeffs = _reduce(order, coeffs)

    @classmethod
    def zeta(cls, order, power=1):
        power %= order
        coeffs = [0] * (power + 1)
        coeffs[power] = 1
        return cls(order, coeffs)

    @classmethod
    def from_rational(cls, value, order=1):
        return cls(order, [as_fraction(value)])

    @classmethod
    def sqrt5(cls):
        """sqrt(5) = 1 + 2(zeta_5 + zeta_5^4)."""
        return cls(5, [1, 2, 0, 0, 2])

    def embed(self, order):
        if order % self.order:
            raise ValueError(f'Q(zeta_{self.order}) does not embed in Q(zeta_{order})')
        if order == self.order:
            return self
        step = order // self.order
        coeffs = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            coeffs[j * step] = c
        return Cyclotomic(order, coeffs)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self, other
            common = lcm(self.order, other.order)
            return self.embed(common), other.embed(common)
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.from_rational(other, self.order)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [c * other for c in self.coeffs])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        product = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        product[i + j] += x * y
        return Cyclotomic(a.order, product)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError('inverse of zero in a cyclotomic field')
        rational = self.rational_or_none()
        if rational is not None:
            return Cyclotomic.from_rational(1 / rational, self.order)
        # Solve self * y = 1 through the multiplication matrix over Q.
        from .linalg import solve

        degree = len(self.coeffs)
        columns = []
        for k in range(degree):
            basis = [0] * (k + 1)
            basis[k] = 1
            columns.append((self * Cyclotomic(self.order, basis)).coeffs)
        matrix = [[columns[k][row] for k in range(degree)] for row in range(degree)]
        target = [Fraction(1)] + [Fraction(0)] * (degree - 1)
        return Cyclotomic(self.order, solve(matrix, target))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [c / other for c in self.coeffs])
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Cyclotomic.from_rational(1, self.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conjugate(self):
        """Complex conjugation zeta -> zeta^(-1)."""
        coeffs = [Fraction(0)] * self.order
        for j, c in enumerate(self.coeffs):
            coeffs[(-j) % self.order] += c
        return Cyclotomic(self.order, coeffs)

    def rational_or_none(self):
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def as_rational(self):
        value = self.rational_or_none()
        if value is None:
            raise NonRational(detail={'value': format_scalar(self)})
        return value

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.rational_or_none() == other
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def reduced(self):
        """The same value over Q(zeta_d) for the smallest d dividing the order."""
        from .linalg import express_in_span

        for d in range(1, self.order):
            if self.order % d:
                continue
            columns = [Cyclotomic.zeta(d, j).embed(self.order).coeffs for j in range(field_degree(d))]
            coefficients = express_in_span(columns, self.coeffs)
            if coefficients is not None:
                return Cyclotomic(d, coefficients)
        return self

    def __hash__(self):
        rational = self.rational_or_none()
        if rational is not None:
            return hash(rational)
        low = self.reduced()
        return hash((low.order, low.coeffs))

    def __repr__(self):
        return f'Cyclotomic({format_scalar(self)})'


def as_rational(value):
    if isinstance(value, Cyclotomic):
        return value.as_rational()
    return as_fraction(value)


def is_rational(value):
    return not isinstance(value, Cyclotomic) or value.rational_or_none() is not None


def scalar_order(value):
    return value.order if isinstance(value, Cyclotomic) else 1


def simplify(value):
    """Collapse a cyclotomic value that happens to be rational."""
    if isinstance(value, Cyclotomic):
        rational = value.rational_or_none()
        return value if rational is None else rational
    return as_fraction(value)


def multiplicative_order(value, bound=10_000):
    """Order of a root of unity given as a Cyclotomic or as +-1."""
    one = Fraction(1)
    power = value
    for k in range(1, bound + 1):
        if power == one:
            return k
        power = power * value
    raise ValueError(f'{value!r} is not a root of unity of order <= {bound}')


def format_rational(value):
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}{RATIONAL_SEPARATOR}{value.denominator}'


def parse_rational(text):
    text = text.strip()
    if RATIONAL_SEPARATOR in text:
        numerator, denominator = text.split(RATIONAL_SEPARATOR)
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(text))


def format_scalar(value):
    if isinstance(value, Cyclotomic):
        entries = ','.join(format_rational(c) for c in value.coeffs)
        return f'{value.order}{CYCLOTOMIC_SEPARATOR}[{entries}]'
    return format_rational(value)


def parse_scalar(text):
    text = text.strip()
    if CYCLOTOMIC_SEPARATOR in text:
        order, entries = text.split(CYCLOTOMIC_SEPARATOR, 1)
        entries = entries.strip()[1:-1]
        coeffs = [parse_rational(e) for e in entries.split(',')] if entries else []
        return Cyclotomic(int(order), coeffs)
    return parse_rational(text)


def format_vector(vector):
    return [format_rational(c) for c in vector]
