"""
The checks behind each command. Every check function returns
(passed, detail) and is wrapped by run_check into a CheckResult.
"""
import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations

from apps.codes.constants import HAMMING8, RM41, RM42, Z4_LEECH
from apps.codes.construction import construction_A, residue_code_B
from apps.codes.duality import dual_code, is_type_II
from apps.codes.loaders import named_code
from apps.codes.matching import find_hamming_blocks
from apps.exact.scalars import format_rational
from apps.griess.automorphisms import Theta, Weyl, dihedral_check, sigma_for_node
from apps.griess.constants import ISING_CENTRAL_CHARGE, MODULE_SPECTRUM
from apps.griess.context import sqrt2_context
from apps.griess.element import GriessElement, conformal_check, inner, product
from apps.griess.families import build_hamming_family, build_node_family, build_virasoro_family
from apps.griess.spaces import LinearMap, ModuleSpace, ModuleVector, module_act, weight_two_space
from apps.griess.tau import e_hat_dual_involutions, e_hat_weight_two_involution
from apps.lattice.cosets import Coset, coset_min_norm, dual_cosets
from apps.lattice.counting import count_X_eta
from apps.lattice.enumeration import short_vectors
from apps.lattice.even import lattice_invariants
from apps.leech.constants import BLOCK_COUNT, KISSING_NUMBER, LEECH_RANK
from apps.leech.lattice import (
    block_norm4_images, build_leech, certify_minimum, kissing_number, sigma_tilde_order,
)
from apps.leech.survey import minimal_coset_survey
from apps.mckay.constants import LABELS, ROOT_COUNTS, TABLE_VALUES
from apps.mckay.reports import counting_inner_product, node_report
from apps.rootsys.chains import check_intermediate_chains
from apps.rootsys.e8 import extended_e8_node
from apps.rootsys.systems import build_root_system, dynkin_label, expected_central_charge

from .checks import run_check
from .constants import (
    TESTED_TYPES, VERIFY_CODES, VERIFY_GRIESS, VERIFY_LEECH, VERIFY_MCKAY,
)

logger = logging.getLogger(__name__)

E8_NORM4_COUNT = 240
E8_DET = 256
LEECH_RESIDUE_INDEX = 2 ** 7
Z4_CARDINALITY = 2 ** 24
FRAME_SIZE = 16
NORM_ONE_WEIGHT = Fraction(1, 2)
NORM_TWO_WEIGHT = Fraction(1)
# Multiplicities of 0, 1/2, 1/16 on a weight-1 space.
NORM_TWO_MULTIPLICITIES = {Fraction(0): 7, Fraction(1, 2): 1, Fraction(1, 16): 8}


# --- codes ---

def _hamming8():
    code = named_code(HAMMING8)
    return dual_code(code) == code and code.is_doubly_even(), {
        'weight_distribution': list(code.weight_distribution()),
    }


def _reed_muller():
    rm41, rm42 = named_code(RM41), named_code(RM42)
    return dual_code(rm42) == rm41, {'dimensions': [rm41.dimension, rm42.dimension]}


def _z4_code():
    code = named_code(Z4_LEECH)
    passed = is_type_II(code) and code.cardinality == Z4_CARDINALITY and dual_code(code) == code
    return passed, {'k1': code.k1, 'k2': code.k2, 'cardinality': code.cardinality}


def _construction_a_e8(budget):
    lattice = construction_A(named_code(HAMMING8))
    invariants = lattice_invariants(lattice)
    count = len(short_vectors(lattice, 4, budget_seconds=budget))
    passed = invariants.is_doubly_even and invariants.det == E8_DET and count == E8_NORM4_COUNT
    return passed, {
        'doubly_even': invariants.is_doubly_even,
        'det': format_rational(invariants.det),
        'norm4': count,
    }


def _hamming_blocks():
    blocks = find_hamming_blocks(residue_code_B(named_code(Z4_LEECH)))
    return len(blocks) == BLOCK_COUNT, {'blocks': [list(b) for b in blocks]}


def codes_suite(config):
    return [
        run_check('Hamming [8,4,4] code', 'hamming8', _hamming8),
        run_check('Reed-Muller duality', 'reed_muller', _reed_muller),
        run_check('Z4 code of length 24', 'z4_code', _z4_code),
        run_check('Construction A of the Hamming code', 'construction_a_e8', _construction_a_e8,
                  config['budget']),
        run_check('Hamming blocks in the residue code', 'hamming_blocks', _hamming_blocks),
    ]


# --- Griess algebra ---

def _conformal(letter, rank):
    rs = build_root_system(letter, rank)
    family = build_virasoro_family(sqrt2_context(rs), rs)
    expected = expected_central_charge(letter, rank)
    charge = conformal_check(family.omega_tilde)
    s_charge = conformal_check(family.s)
    orthogonal = not product(family.s, family.omega_tilde) and inner(family.s, family.omega_tilde) == 0
    passed = charge == expected and s_charge == rank - expected and orthogonal
    return passed, {
        'omega_tilde': format_rational(charge),
        's': format_rational(s_charge),
        'orthogonal': orthogonal,
    }


def _x_eta(letter, rank, budget):
    rs = build_root_system(letter, rank)
    h = rs.coxeter_number
    mismatches = []
    minima = []
    for coset in dual_cosets(rs.lattice):
        minimum = coset_min_norm(coset, budget_seconds=budget)
        minima.append(minimum.k)
        for eta in minimum.reps:
            count = count_X_eta(rs, coset, eta)
            if count != minimum.k * h:
                mismatches.append({'coset': repr(coset), 'count': count})
    return not mismatches, {
        'h': h,
        'cosets': len(minima),
        'minimal_norms': sorted({format_rational(k) for k in minima}),
        'mismatches': mismatches[:5],
    }


def _highest_weight(letter, rank, budget):
    rs = build_root_system(letter, rank)
    ctx = sqrt2_context(rs)
    family = build_virasoro_family(ctx, rs)
    failed = []
    weights = []
    for coset in dual_cosets(rs.lattice):
        space = ModuleSpace(ctx, Coset(ctx.N, coset.shift), budget)
        v = space.minimal_sum()
        weights.append(space.weight)
        if module_act(family.s, v) or module_act(family.omega_tilde, v) != v * space.weight:
            failed.append(repr(coset))
    return not failed, {'weights': [format_rational(k) for k in weights], 'failed': failed}


def _hamming_e():
    family = build_hamming_family()
    charges = {key: conformal_check(e) for key, e in family.e.items()}
    wrong = []
    for (a, e), (b, f) in combinations(family.e.items(), 2):
        (eps, delta), (eps2, delta2) = a, b
        odd = sum((x + y) % 2 for x, y in zip(delta, delta2)) % 2
        expected = Fraction(1, 32) if eps == eps2 and odd else Fraction(0)
        if inner(e, f) != expected:
            wrong.append([eps, list(delta), eps2, list(delta2)])
    passed = all(c == ISING_CENTRAL_CHARGE for c in charges.values()) and not wrong
    return passed, {'vectors': len(charges), 'wrong_inner_products': wrong[:5]}


def _frame(frame, omega):
    charges_ok = all(conformal_check(e) == ISING_CENTRAL_CHARGE for e in frame)
    orthogonal = all(inner(a, b) == 0 for a, b in combinations(frame, 2))
    total = GriessElement(omega.ctx)
    for e in frame:
        total = total + e
    return len(frame) == FRAME_SIZE and charges_ok and orthogonal and total == omega


def _frames():
    family = build_hamming_family()
    omega = GriessElement.omega(family.ctx)
    standard = _frame(family.standard_frame, omega)
    hamming = _frame(family.hamming_frame, omega)
    return standard and hamming, {'standard': standard, 'hamming': hamming}


def _weyl():
    node = extended_e8_node(0)
    family = build_node_family(node)
    moved = [i for i, root in enumerate(node.e8.simple_roots, start=1)
             if Weyl(family.ctx, root)(family.e_hat) != family.e_hat]
    return not moved, {'moved_by': moved}


def _dihedral(i):
    node = extended_e8_node(i)
    family = build_node_family(node)
    check = dihedral_check(weight_two_space(family.ctx), sigma_for_node(node))
    return check.passed, check.as_json()


def _tau_theta():
    tau = e_hat_weight_two_involution()
    is_theta = tau.map == LinearMap.from_function(tau.space, Theta())
    return is_theta, {'theta': is_theta, 'multiplicities': tau.as_json()}


def _tau_module():
    failed = []
    spaces = 0
    for tau in e_hat_dual_involutions():
        if tau.space.weight != NORM_ONE_WEIGHT:
            continue
        spaces += 1
        for x in tau.space.reps:
            minus = tuple(-a for a in x)
            if tau(ModuleVector(tau.space, {x: Fraction(1)})) != ModuleVector(tau.space, {minus: Fraction(-1)}):
                failed.append(repr(tau.space))
    return spaces > 0 and not failed, {'spaces': spaces, 'failed': failed[:5]}


def _tau_spectrum():
    counts = Counter()
    wrong = []
    for tau in e_hat_dual_involutions():
        multiplicities = {k: v for k, v in tau.multiplicities.items() if v}
        if not set(multiplicities) <= set(MODULE_SPECTRUM):
            wrong.append(repr(tau.space))
        if tau.space.weight == NORM_TWO_WEIGHT and multiplicities != NORM_TWO_MULTIPLICITIES:
            wrong.append(repr(tau.space))
        key = ', '.join(f'{format_rational(k)}:{v}' for k, v in sorted(multiplicities.items()))
        counts[f'weight {format_rational(tau.space.weight)} [{key}]'] += 1
    return not wrong, {'spectra': dict(sorted(counts.items())), 'wrong': wrong[:5]}


def griess_suite(config):
    budget = config['budget']
    results = []
    for letter, rank in TESTED_TYPES:
        label = dynkin_label(((letter, rank),))
        results.append(run_check(f'conformal vectors of {label}', 'conformal', _conformal, letter, rank))
        results.append(run_check(f'root pairs X_eta for {label}', 'x_eta', _x_eta, letter, rank, budget))
        results.append(run_check(f'highest weight vectors for {label}', 'highest_weight',
                                 _highest_weight, letter, rank, budget))
    results.append(run_check('Hamming conformal vectors', 'hamming_e', _hamming_e))
    results.append(run_check('Virasoro frames', 'frames', _frames))
    results.append(run_check('Weyl invariance of e_hat', 'weyl', _weyl))
    for i in config['nodes']:
        results.append(run_check(f'dihedral group of node {i}', 'dihedral', _dihedral, i))
    results.append(run_check('tau on weight 2', 'tau_theta', _tau_theta))
    results.append(run_check('tau on norm-1 cosets', 'tau_module', _tau_module))
    results.append(run_check('spectrum on minimal-weight spaces', 'tau_spectrum', _tau_spectrum))
    return results


# --- Leech lattice ---

def _leech_lattice():
    ctx = build_leech()
    gram = ctx.Lambda.gram
    even = all(gram[i, i] % 2 == 0 for i in range(ctx.rank))
    passed = ctx.rank == LEECH_RANK and ctx.Lambda.det == 1 and even
    return passed, {'rank': ctx.rank, 'det': format_rational(ctx.Lambda.det), 'even': even}


def _leech_residue():
    index = build_leech().residue_index
    return index == LEECH_RESIDUE_INDEX, {'index': int(index)}


def _leech_embedding():
    ctx = build_leech()
    sizes = []
    for block in range(BLOCK_COUNT):
        images = block_norm4_images(ctx, block)
        sizes.append(len({v for v in images if v in ctx.Lambda and ctx.Lambda.norm(v) == 4}))
    return all(s == E8_NORM4_COUNT for s in sizes), {'blocks': [list(b) for b in ctx.blocks], 'norm4': sizes}


def _leech_minimum(budget):
    certificate = certify_minimum(build_leech(), budget_seconds=budget)
    return certificate.passed, certificate.as_json()


def _leech_sigma(i):
    node = extended_e8_node(i)
    order = sigma_tilde_order(build_leech(), node)
    return order == node.n, {'order': order, 'n': node.n}


def _leech_survey(budget):
    survey = minimal_coset_survey(budget_seconds=budget)
    return survey.passed, survey.as_json()


def _kissing_number(budget):
    logger.info('counting norm-4 vectors of the Leech lattice')
    count = kissing_number(build_leech(), budget_seconds=budget)
    return count == KISSING_NUMBER, {'norm4': count}


def leech_suite(config):
    budget = config['budget']
    results = [
        run_check('Leech lattice from the Z4 code', 'leech_lattice', _leech_lattice),
        run_check('residue code index', 'leech_residue', _leech_residue),
        run_check('three copies of sqrt2 E8', 'leech_embedding', _leech_embedding),
        run_check('minimum norm', 'leech_minimum', _leech_minimum, budget),
    ]
    for i in config['nodes']:
        results.append(run_check(f'phase order for node {i}', 'leech_sigma', _leech_sigma, i))
    results.append(run_check('cosets of sqrt2 E8 in its dual', 'leech_survey', _leech_survey, budget))
    if config['long']:
        results.append(run_check('kissing number', 'kissing_number', _kissing_number, budget))
    return results


# --- extended E8 diagram ---

def _node(i):
    report = node_report(i)
    return report.passed, report.as_json()


def _counting_in_field(i, field_order):
    node = extended_e8_node(i)
    root_count, coset_counts = ROOT_COUNTS[i]
    value = counting_inner_product(node.n, root_count, coset_counts, field_order)
    return value == TABLE_VALUES[i], {'field_order': field_order, 'value': format_rational(value)}


def _chains():
    chains = check_intermediate_chains()
    return True, {'chains': [c.as_json() for c in chains]}


def mckay_suite(config):
    results = []
    for i in config['nodes']:
        results.append(run_check(f'node {i} ({LABELS[i]})', 'table', _node, i))
        if config.get('field_order'):
            results.append(run_check(f'counting formula for node {i} in a larger field', 'table',
                                     _counting_in_field, i, config['field_order']))
    results.append(run_check('intermediate lattices', 'chains', _chains))
    return results


SUITES = {
    VERIFY_CODES: codes_suite,
    VERIFY_GRIESS: griess_suite,
    VERIFY_LEECH: leech_suite,
    VERIFY_MCKAY: mckay_suite,
}
