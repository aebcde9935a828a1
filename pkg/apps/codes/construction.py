from fractions import Fraction

from apps.lattice.even import EvenLattice

from .binary import BinaryCode
from .constants import BINARY, QUATERNARY


def construction_A(code):
    """
    Binary codes give {x in Z^n : x mod 2 in C}; Z4 codes give
    (1/2){x in Z^n : x mod 4 in C}.
    """
    basis = code.lift_lattice.hermite_form()
    if code.modulus == BINARY:
        return EvenLattice(basis, name=f'A({code.name})')
    if code.modulus == QUATERNARY:
        half = Fraction(1, 2)
        return EvenLattice([tuple(half * x for x in row) for row in basis],
                           name=f'A4({code.name})')
    raise ValueError(f'no Construction A over Z{code.modulus}')


def residue_code_B(code):
    """The binary code {b : 2b in C} of a Z4 code."""
    rows = [tuple(x % 2 for x in r) for r in code.order4_rows]
    rows += [tuple(x // 2 for x in r) for r in code.order2_rows]
    return BinaryCode(code.length, rows, name=f'B({code.name})')
