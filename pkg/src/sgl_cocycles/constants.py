__license__ = "MIT"
__all__ = (
    "DEFAULT_BETA",
    "DEFAULT_FORMAT",
    "DEFAULT_JOBS",
    "DEFAULT_MAX_SUPPORT",
    "DEFAULT_NB_SAMPLES",
    "DEFAULT_RANGE",
    "DEFAULT_RANK",
    "DEFAULT_REL_PATH",
    "DEFAULT_REPORT_ENCODING",
    "DEFAULT_SAMPLE_DEGREE",
    "DEFAULT_SEED",
    "EXPONENT_BOUND",
    "FORMATS",
    "MAX_BASENAME_LENGTH",
    "MAX_BETA",
    "MAX_RANGE",
    "MAX_RANK",
    "MIN_BETA",
    "MIN_RANGE",
    "SWEEP_BETAS",
)

DEFAULT_RANK = 1
DEFAULT_BETA = 0
DEFAULT_RANGE = 6
DEFAULT_NB_SAMPLES = 200
DEFAULT_MAX_SUPPORT = 6
DEFAULT_SAMPLE_DEGREE = 4
DEFAULT_SEED = 0
DEFAULT_JOBS = 1
DEFAULT_FORMAT = "json"
DEFAULT_REPORT_ENCODING = "utf-8"

MAX_RANK = 3
MIN_BETA = -4
MAX_BETA = 4
MIN_RANGE = 2
MAX_RANGE = 12

# Exponents are machine-width integers.
EXPONENT_BOUND = 2**63 - 1

FORMATS = ("json", "csv", "md")

DEFAULT_REL_PATH = "sgl_cocycles"
MAX_BASENAME_LENGTH = 120

# Twists covered by the ``--grid`` sweeps.
SWEEP_BETAS = tuple(range(-2, 4))
