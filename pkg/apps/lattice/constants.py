# How often (in search nodes) the enumeration looks at the clock.
BUDGET_CHECK_INTERVAL = 4096

# Separator-free text format for matrices: one row per line, "p/q" entries.
MATRIX_COMMENT = '#'
