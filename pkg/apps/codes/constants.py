HAMMING8 = 'Hamming8'
RM41 = 'RM41'
RM42 = 'RM42'
Z4_LEECH = 'Z4Leech'

# [8,4,4] extended Hamming code; any doubly even self-dual choice is equivalent.
HAMMING8_GENERATORS = [
    '11110000',
    '00111100',
    '00001111',
    '01100110',
]

DATA_FILES = {
    RM41: 'rm41.txt',
    Z4_LEECH: 'z4_leech.txt',
}

CODE_COMMENT = '#'

BINARY = 2
QUATERNARY = 4

HAMMING_BLOCK_LENGTH = 8
