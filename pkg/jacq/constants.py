SEEDS_J3 = (0, 1, 1)
SEEDS_J3_LUCAS = (2, 1, 5)
SEEDS_J2 = (0, 1)
SEEDS_J2_LUCAS = (2, 1)

# aw1^n + bw2^n for n mod 3, and its Lucas counterpart
RESIDUE_U = (2, -3, 1)
RESIDUE_V = (6, -9, 3)

DEFAULT_MAX_R = 8
MAX_R_ENV_VAR = "JACQ_MAX_R"

BENCH_METHODS = ("recurrence", "matrix", "binet", "closed-form")

# cached terms per sequence; larger indices are iterated from the last cached window
TERM_TABLE_LIMIT = 8192

LOGGER_NAME = "jacq"
