import logging
from dataclasses import dataclass

from apps.lattice.even import lattice_index, sublattice

from .constants import CHAINS
from .e8 import extended_e8_node
from .exceptions import ChainViolation
from .systems import classify_root_sublattice, dynkin_label

logger = logging.getLogger(__name__)

E8_TYPE = (('E', 8),)


@dataclass(frozen=True)
class Chain:
    node: int
    lower: tuple
    middle: tuple
    indices: tuple
    power_map: str

    @property
    def statement(self):
        return ' < '.join(dynkin_label(t) for t in (self.lower, self.middle, E8_TYPE))

    def as_json(self):
        return {
            'node': self.node,
            'chain': self.statement,
            'indices': list(self.indices),
            'power_map': self.power_map,
        }


def intermediate_lattice(node, step):
    """L(i) + Z * step * alpha_i inside E8."""
    e8 = node.e8.lattice
    extra = tuple(step * x for x in node.removed_root)
    return sublattice(e8, list(node.L.basis) + [extra], name=f'L({node.i})+{step}a{node.i}')


def check_intermediate_chains():
    """
    Realize every intermediate lattice as L(i) + Z d alpha_i, classify it and
    confirm the inclusions and that the two indices multiply to n_i.
    """
    chains = []
    for entry in CHAINS:
        node = extended_e8_node(entry['node'])
        e8 = node.e8.lattice
        middle = intermediate_lattice(node, entry['step'])
        found = classify_root_sublattice(middle)
        lower_index = int(lattice_index(node.L, middle))
        upper_index = int(lattice_index(middle, e8))
        included = all(b in middle for b in node.L.basis) and all(b in e8 for b in middle.basis)
        anchor = ' < '.join(dynkin_label(t) for t in (node.components, entry['middle'], E8_TYPE))
        if not included or found != entry['middle'] or lower_index * upper_index != node.n:
            raise ChainViolation(anchor=anchor, detail={
                'node': node.i,
                'middle': dynkin_label(found),
                'indices': [lower_index, upper_index],
                'n': node.n,
                'included': included,
            })
        chain = Chain(
            node=node.i,
            lower=node.components,
            middle=found,
            indices=(lower_index, upper_index),
            power_map=entry['power_map'],
        )
        logger.debug('chain %s with indices %s', chain.statement, chain.indices)
        chains.append(chain)
    return chains
