"""
Runtime configuration: module-level defaults, overridable through the
environment.
"""
import os
import logging

logger = logging.getLogger("config")


def _env_int(name, default, minimum=1):
    """
    Read a positive integer from the environment.

    Args:
        name (str): Environment variable name
        default (int): Value used when the variable is unset or invalid
        minimum (int): Smallest accepted value

    Returns:
        int: Parsed value or the default
    """
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default
    if value < minimum:
        logger.warning(f"Ignoring {name}={raw!r}: must be >= {minimum}, using {default}")
        return default
    return value


# Enumeration caps
MAX_BASIS_ELEMENTS = _env_int("NILMULT_MAX_BASIS", 10**7)
MAX_LYNDON_WORDS = _env_int("NILMULT_MAX_LYNDON", 10**7)

# Widest exact integer (in bits) any computation may produce
MAX_INTEGER_BITS = _env_int("NILMULT_MAX_BITS", 65536)

# Process count for verification suites; 1 keeps everything in-process
WORKERS = _env_int("NILMULT_WORKERS", 1)

LOG_LEVEL = os.environ.get("LOG_LEVEL", "WARNING").upper()
CONSOLE_WIDTH = _env_int("NILMULT_CONSOLE_WIDTH", 100, minimum=40)

# Default scan ranges for the verification suites
DEFAULT_RANGES = {
    "witt": {"max_n": 12, "max_d": 4},
    "schur": {"max_order": 4096, "primes": (2, 3, 5)},
    "bound": {"max_n": 25, "max_c": 4},
    "thm34": {"max_n": 25, "max_c": 4},
    "inequalities": {"max_n": 12, "max_c": 4, "max_n_iii": 40, "max_n_sandwich": 25},
}
