import logging
from functools import lru_cache
from pathlib import Path

from django.conf import settings

from .binary import BinaryCode
from .constants import (
    BINARY, CODE_COMMENT, DATA_FILES, HAMMING8, HAMMING8_GENERATORS, QUATERNARY, RM41, RM42,
    Z4_LEECH,
)
from .duality import dual_code
from .exceptions import InvalidCodeFile, UnknownCode
from .z4 import Z4Code

logger = logging.getLogger(__name__)


def read_generators(path, modulus):
    """One generator per line; spaces inside a line are ignored."""
    path = Path(path)
    rows = []
    for number, line in enumerate(path.read_text().splitlines(), start=1):
        line = line.split(CODE_COMMENT, 1)[0]
        digits = ''.join(line.split())
        if not digits:
            continue
        if not digits.isdigit() or any(int(d) >= modulus for d in digits):
            raise InvalidCodeFile(detail={'file': path.name, 'line': number})
        rows.append(tuple(int(d) for d in digits))
    if not rows or len({len(r) for r in rows}) != 1:
        raise InvalidCodeFile(detail={'file': path.name, 'rows': len(rows)})
    return rows


def load_code(path, modulus, name=''):
    rows = read_generators(path, modulus)
    cls = BinaryCode if modulus == BINARY else Z4Code
    return cls(len(rows[0]), rows, name=name)


def data_path(name, data_dir=None):
    return Path(data_dir or settings.MCKAY_DATA_DIR) / DATA_FILES[name]


@lru_cache(maxsize=None)
def _named_code(name, data_dir):
    if name == HAMMING8:
        return BinaryCode.from_words(HAMMING8_GENERATORS, name=HAMMING8)
    if name == RM41:
        return load_code(data_path(RM41, data_dir), BINARY, name=RM41)
    if name == RM42:
        return dual_code(_named_code(RM41, data_dir), name=RM42)
    if name == Z4_LEECH:
        return load_code(data_path(Z4_LEECH, data_dir), QUATERNARY, name=Z4_LEECH)
    raise UnknownCode(detail={'name': name})


def named_code(name, data_dir=None):
    code = _named_code(name, str(data_dir or settings.MCKAY_DATA_DIR))
    logger.debug('loaded %r', code)
    return code
