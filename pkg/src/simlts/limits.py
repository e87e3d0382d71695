"""Scale caps for the brute-force oracles and gadget construction.

The enumeration cap can be overridden with the SIMLTS_ORACLE_CAP
environment variable; the others are per-call keyword arguments with
these defaults.
"""

import os

DEFAULT_ENUMERATION_CAP = 1_000_000
DEFAULT_SAT_MAX_VARS = 20
DEFAULT_GADGET_MAX_VARS = 24
DEFAULT_GADGET_MAX_STATES = 1_000_000


def enumeration_cap() -> int:
    raw = os.environ.get("SIMLTS_ORACLE_CAP")
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"SIMLTS_ORACLE_CAP must be an integer, got {raw!r}")
    if cap <= 0:
        raise ValueError("SIMLTS_ORACLE_CAP must be positive")
    return cap
