"""Size caps shared by constructions and enumerations.

``RINGLAB_CAP`` overrides the ring-order cap and ``RINGLAB_ENUM_CAP`` the
ideal-lattice enumeration cap. Both are read on every call so tests can
monkeypatch the environment.
"""

from __future__ import annotations

import os

DEFAULT_ORDER_CAP = 512
DEFAULT_ENUM_CAP = 128
# Upper bound on tuples a bounded polynomial scan may visit.
DEFAULT_POLY_BUDGET = 20_000_000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return default
    return int(raw)


def order_cap() -> int:
    return _env_int("RINGLAB_CAP", DEFAULT_ORDER_CAP)


def enum_cap() -> int:
    return _env_int("RINGLAB_ENUM_CAP", DEFAULT_ENUM_CAP)


def poly_budget() -> int:
    return _env_int("RINGLAB_POLY_BUDGET", DEFAULT_POLY_BUDGET)
