# Application constants
PROG_NAME = "qptool"

# Default configuration
SETTINGS_FILE = "settings.json"
SETTINGS_ENV_VAR = "QP_SETTINGS_FILE"
DEFAULT_CANONICAL_MAX_ORDER = 8
DEFAULT_ENUMERATE_MAX_ORDER = 7
DEFAULT_SYMPLECTIC_MAX_ORDER = 81
DEFAULT_CATALOG_DIR = ""
DEFAULT_WORKERS = 1
DEFAULT_RANDOM_SEED = 20080601

# Hard limits that settings cannot raise
CANONICAL_ORDER_LIMIT = 8
ENUMERATE_ORDER_LIMIT = 7
MAX_WORKERS = 64

# Catalog persistence
CATALOG_INDEX_TEMPLATE = "catalog-{order}.json"
CATALOG_ORDER_DIR_TEMPLATE = "order-{order}"
CATALOG_ENTRY_TEMPLATE = "quandle-{index:03d}.txt"

# Text formats
COMMENT_PREFIX = "#"
POLY_VARIABLES = ("s", "t")
ZPOLY_VARIABLE = "z"

# CLI exit codes
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_INPUT_ERROR = 2

# Census of quandles up to isomorphism, orders 1..7
QUANDLE_CENSUS = {1: 1, 2: 1, 3: 3, 4: 7, 5: 22, 6: 73, 7: 298}

# Construct families accepted by the CLI
CONSTRUCT_FAMILIES = (
    "trivial",
    "alexander",
    "dihedral",
    "conjugation",
    "symmetric-conjugation",
    "homogeneous",
    "symplectic",
    "constant-rack",
)
