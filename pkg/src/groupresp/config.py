"""Numeric tolerance and enumeration caps, overridable per invocation."""

import os

# Absolute tolerance for every probability/value comparison in the library.
EPS = 1e-9

# Margin used when an axiom demands a strict inequality.
STRICT_MARGIN = 1e-12

_DEFAULT_CAP = 10**6
_ENV_CAP = "GROUPRESP_ENUM_CAP"

_cap = None


def enumeration_cap() -> int:
    """Maximum number of strategies/scenarios an enumeration may produce."""
    global _cap
    if _cap is not None:
        return _cap
    raw = os.environ.get(_ENV_CAP)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return _DEFAULT_CAP


def set_enumeration_cap(value):
    """Override the cap for this process; None restores the default."""
    global _cap
    _cap = None if value is None else max(1, int(value))


def set_eps(value):
    global EPS
    if value is not None:
        if value <= 0:
            raise ValueError("EPS must be positive")
        EPS = float(value)
