import logging

from apps.exact.linalg import inverse_matrix

from .z4 import Z4Code, euclidean_weight, inner4

logger = logging.getLogger(__name__)


def dual_code(code, name=None):
    """
    The dual under the standard inner product mod q, for q = 2 or 4.

    With M = {x in Z^n : x mod q in C}, a vector y is orthogonal to C mod q
    exactly when y lies in q M*, so the dual is q M* reduced mod q.
    """
    q = code.modulus
    basis = code.lift_lattice.hermite_form()
    inverse = inverse_matrix(basis)
    rows = []
    for k in range(code.length):
        column = [q * inverse[r, k] for r in range(code.length)]
        if any(x.denominator != 1 for x in column):
            raise ValueError(f'{code!r}: lifted lattice does not contain {q}Z^n')
        rows.append(tuple(int(x) % q for x in column))
    dual = type(code)(code.length, rows, name=name or f'{code.name}^perp')
    logger.debug('dual of %r is %r', code, dual)
    return dual


def is_self_orthogonal(code):
    gens = code.generators
    return all(inner4(g, h) == 0 for i, g in enumerate(gens) for h in gens[i:])


def is_type_II(code):
    """
    Self-dual with every Euclidean weight divisible by 8.

    Euclidean weight mod 8 is additive on a self-orthogonal code, so checking
    the generators settles every codeword.
    """
    if not isinstance(code, Z4Code):
        raise TypeError('type II is a property of Z4 codes')
    if code.cardinality != 2 ** code.length:
        logger.info('%r: cardinality %d is not 2^%d', code, code.cardinality, code.length)
        return False
    if not is_self_orthogonal(code):
        logger.info('%r: generators are not orthogonal mod 4', code)
        return False
    if any(euclidean_weight(g) % 8 for g in code.generators):
        logger.info('%r: a generator has Euclidean weight not divisible by 8', code)
        return False
    return code == dual_code(code)
