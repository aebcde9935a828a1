import logging

from .binary import BinaryCode, parse_word
from .constants import HAMMING8_GENERATORS, HAMMING_BLOCK_LENGTH
from .exceptions import BlockMatchNotFound
from .gf2 import dot2, find_kernel

logger = logging.getLogger(__name__)


def block_subcode(code, columns):
    """Codewords supported inside `columns`, restricted to those columns."""
    outside = [c for c in range(code.length) if c not in set(columns)]
    G = code.matrix
    if not len(G):
        return BinaryCode(len(columns), (), name=f'{code.name}|block')
    combos = find_kernel(G[:, outside].T, G.shape[0]) if outside else None
    words = G if combos is None else dot2(combos, G)
    return BinaryCode(len(columns), words[:, list(columns)], name=f'{code.name}|block')


def _match(subcode, pattern):
    """
    Permutation p of the block columns with every pattern row, moved by p,
    inside subcode. Backtracks column by column and tests each pattern row as
    soon as its support is placed.
    """
    n = len(pattern[0])
    supports = [[j for j, bit in enumerate(row) if bit] for row in pattern]
    ready = [[] for _ in range(n)]
    for k, support in enumerate(supports):
        ready[max(support)].append(k)
    image = [None] * n
    free = set(range(n))

    def place(depth):
        if depth == n:
            return True
        for col in sorted(free):
            image[depth] = col
            ok = True
            for k in ready[depth]:
                word = [0] * n
                for j in supports[k]:
                    word[image[j]] = 1
                if word not in subcode:
                    ok = False
                    break
            if ok:
                free.remove(col)
                if place(depth + 1):
                    return True
                free.add(col)
        image[depth] = None
        return False

    return tuple(image) if place(0) else None


def find_hamming_blocks(code, blocks=None):
    """
    For each 8-column block, a column order under which the block carries a
    copy of the Hamming [8,4,4] code inside `code`. Returns absolute column
    indices per block.
    """
    if blocks is None:
        blocks = [
            tuple(range(start, start + HAMMING_BLOCK_LENGTH))
            for start in range(0, code.length, HAMMING_BLOCK_LENGTH)
        ]
    pattern = [parse_word(w) for w in HAMMING8_GENERATORS]
    found = []
    for number, columns in enumerate(blocks):
        subcode = block_subcode(code, columns)
        image = _match(subcode, pattern)
        if image is None:
            raise BlockMatchNotFound(detail={'block': number, 'subcode_dimension': subcode.dimension})
        logger.debug('block %d: Hamming copy on columns %s', number, image)
        found.append(tuple(columns[j] for j in image))
    return found
