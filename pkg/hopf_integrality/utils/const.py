HOPF_INTEGRALITY_GB_BUDGET = 'HOPF_INTEGRALITY_GB_BUDGET'
HOPF_INTEGRALITY_WITNESS_BUDGET = 'HOPF_INTEGRALITY_WITNESS_BUDGET'
HOPF_INTEGRALITY_POWER_DEGREE_LIMIT = 'HOPF_INTEGRALITY_POWER_DEGREE_LIMIT'

# Buchberger pair reductions before giving up
DEFAULT_GB_BUDGET = 20000
# unknowns of a single witness-search linear system
DEFAULT_WITNESS_BUDGET = 20000
DEFAULT_POWER_DEGREE_LIMIT = 256

DEFAULT_DEGREE_BOUND = 8
DEFAULT_MONIC_DEGREE = 8
DEFAULT_COEFF_DEGREE = 8

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_BOUND = 3
