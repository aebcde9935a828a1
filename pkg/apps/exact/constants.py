RATIONAL_SEPARATOR = '/'
CYCLOTOMIC_SEPARATOR = ':'

# Largest cyclotomic order checked by the self-tests of the field arithmetic.
MAX_TESTED_ORDER = 12
