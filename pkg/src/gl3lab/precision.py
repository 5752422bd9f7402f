"""Working precision for the extended-precision accumulation paths."""

import os

ENV_VAR = "GL3LAB_DIGITS"

_DEFAULT = 30
_LO, _HI = 15, 60


def working_digits() -> int:
    """Decimal digits used by the mpmath-backed accumulations.

    Read from the GL3LAB_DIGITS environment variable and clamped to
    [15, 60]; defaults to 30.
    """
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return _DEFAULT
    try:
        digits = int(raw)
    except ValueError:
        return _DEFAULT
    return min(max(digits, _LO), _HI)
