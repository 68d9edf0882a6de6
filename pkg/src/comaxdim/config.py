"""Size caps for enumeration and exact solving.

Every cap can be overridden through ``COMAXDIM_ENUM_CAP``,
``COMAXDIM_SOLVE_CAP`` and ``COMAXDIM_BRUTE_CAP``; explicit arguments
(and CLI flags) take precedence over the environment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

DEFAULT_ENUM_CAP = 2**20
DEFAULT_SOLVE_CAP = 300
DEFAULT_BRUTE_CAP = 30

_ENV = {
    "enum_cap": "COMAXDIM_ENUM_CAP",
    "solve_cap": "COMAXDIM_SOLVE_CAP",
    "brute_cap": "COMAXDIM_BRUTE_CAP",
}


@dataclass(frozen=True)
class Limits:
    enum_cap: int = DEFAULT_ENUM_CAP  # max number of ideals enumerated
    solve_cap: int = DEFAULT_SOLVE_CAP  # max vertices for exact independence
    brute_cap: int = DEFAULT_BRUTE_CAP  # max vertices for definitional oracles

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "Limits":
        environ = os.environ if environ is None else environ
        values = {}
        for field, var in _ENV.items():
            raw = environ.get(var)
            if raw is not None and raw.strip():
                try:
                    values[field] = int(raw)
                except ValueError:
                    raise ValueError(f"{var} must be an integer, got {raw!r}") from None
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_(self, **overrides) -> "Limits":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def default_limits() -> Limits:
    return Limits.from_env()
