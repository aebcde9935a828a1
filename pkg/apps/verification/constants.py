from apps.mckay.constants import TABLE_ANCHOR

VERIFY_MCKAY = 'verify-mckay'
VERIFY_GRIESS = 'verify-griess'
VERIFY_LEECH = 'verify-leech'
VERIFY_CODES = 'verify-codes'
VERIFY_ALL = 'verify-all'

COMMANDS = [VERIFY_MCKAY, VERIFY_GRIESS, VERIFY_LEECH, VERIFY_CODES, VERIFY_ALL]

# Suites run by verify-all, in output order.
ALL_SUITES = [VERIFY_CODES, VERIFY_GRIESS, VERIFY_LEECH, VERIFY_MCKAY]

FORMAT_JSON = 'json'
FORMAT_MARKDOWN = 'markdown'
FORMATS = [FORMAT_JSON, FORMAT_MARKDOWN]

JSON_INDENT = 2

NODES = list(range(9))

# Indecomposable root systems covered by the conformal-vector and
# highest-weight suites.
TESTED_TYPES = (
    [('A', n) for n in range(1, 9)]
    + [('D', n) for n in range(4, 9)]
    + [('E', n) for n in (6, 7, 8)]
)

# Claims each check refers to.
ANCHORS = {
    'table': TABLE_ANCHOR,
    'hamming8': 'the [8,4,4] Hamming code is doubly even and self-dual',
    'reed_muller': 'RM(4,1) is the dual code of RM(4,2)',
    'z4_code': 'type II self-dual Z4-code of length 24',
    'construction_a_e8': 'A(H8) = sqrt2 E8: doubly even, det 256, 240 vectors of norm 4',
    'hamming_blocks': 'B(C) contains a subcode isomorphic to H8+H8+H8',
    'conformal': 's and omega_tilde are mutually orthogonal conformal vectors',
    'x_eta': '|X_eta| = kh, where h is the Coxeter number',
    'highest_weight': 'highest weight vector of highest weight (0,k)',
    'hamming_e': 'e^eps_delta is a conformal vector of central charge 1/2',
    'frames': 'a Virasoro frame of the fixed-point subalgebra',
    'weyl': 'e_hat is fixed by the Weyl group of E8',
    'dihedral': 'sigma and theta generate a dihedral group of order 2n_i',
    'tau_theta': 'tau_e = theta on the weight-2 space',
    'tau_module': 'tau_e(e^x) = -e^(-x) for x of norm 1',
    'tau_spectrum': 'e acts on minimal-weight spaces with eigenvalues in {0, 1/2, 1/16}',
    'leech_lattice': 'Lambda = A4(C) is even unimodular of rank 24',
    'leech_residue': '[Lambda : A(B(C))] = 2^7',
    'leech_embedding': 'an explicit embedding of sqrt2 E8^3 into the Leech lattice',
    'leech_minimum': 'the Leech lattice has no vectors of norm 2',
    'leech_sigma': '|tau_e tau_f| = n_i on V_Lambda',
    'leech_survey': 'a coset representative whose square norm is minimum',
    'kissing_number': 'the Leech lattice has 196560 vectors of norm 4',
    'chains': 'intermediate lattices with indices multiplying to n_i',
}

MARKDOWN_COLUMNS = [
    'label', 'i', 'n_i', 'L(i)', '|Phi|', '|H_j|', '<e,f>', '<2e,2f>', 'dim U2', 'tau orders',
]
