import logging
import os
from typing import Final

import dotenv

logger = logging.getLogger(__name__)

DISPLAY_DIGITS: Final[int] = 15
DIGITS_ENV_VAR: Final[str] = "HYPERELLIPTIC_CENTER_DIGITS"

PQ_TABLE_M_MAX: Final[int] = 12

# Larger action matrices are left out of text output.
TEXT_MATRIX_MAX_SIZE: Final[int] = 13

EXIT_OK: Final[int] = 0
EXIT_USAGE: Final[int] = 2
EXIT_PARSE: Final[int] = 3
EXIT_INVALID_CURVE: Final[int] = 4
EXIT_UNDETERMINED: Final[int] = 5
EXIT_INTERNAL: Final[int] = 6

EXIT_CODES_HELP: Final[str] = (
    "Exit codes: 0 success, 2 usage error, 3 spec parse error, 4 invalid curve, "
    "5 undetermined automorphism group, 6 internal consistency failure."
)


def load_display_digits() -> int:
    """Digits used for numerical approximations, from the environment or a .env file."""
    dotenv.load_dotenv()
    raw = os.getenv(DIGITS_ENV_VAR)
    if raw is None:
        return DISPLAY_DIGITS
    try:
        digits = int(raw)
    except ValueError:
        digits = 0
    if digits < 1:
        logger.warning("Ignoring %s=%r, using %d digits", DIGITS_ENV_VAR, raw, DISPLAY_DIGITS)
        return DISPLAY_DIGITS
    return digits
