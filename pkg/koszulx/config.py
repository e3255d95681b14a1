"""Session configuration."""

import os
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import Literal

from sympy import isprime

__all__ = ["SessionConfig", "default_characteristic", "ENV_DEFAULT_P"]

ENV_DEFAULT_P = "KV_DEFAULT_P"
_FALLBACK_P = 32003
MIN_DEGREE_CAP = 12


def default_characteristic() -> int:
    """Return the default field characteristic.

    The environment variable ``KV_DEFAULT_P`` overrides the built-in default
    of 32003.

    Raises
    ------
    ValueError
        If the environment variable is set to something that is not a prime.
    """
    raw = os.environ.get(ENV_DEFAULT_P)
    if raw is None or raw.strip() == "":
        return _FALLBACK_P
    try:
        p = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_DEFAULT_P} must be an integer, got {raw!r}") from None
    if not isprime(p):
        raise ValueError(f"{ENV_DEFAULT_P} must be prime, got {p}")
    return p


@dataclass(frozen=True)
class SessionConfig:
    """Settings shared by every computation of a command-line session.

    Parameters
    ----------
    p : int, optional
        Field characteristic; defaults to :func:`default_characteristic`.
    seed : int, default=0
        Seed of every random draw (64-bit).
    degree_cap : int, default=120
        Largest degree a Hilbert function is evaluated in; at least 12.
    output : {'text', 'json'}, default='text'
        Report format.
    workers : int, default=1
        Number of processes used by verification suites.

    Raises
    ------
    ValueError
        If `p` is not prime, `degree_cap` is below 12, `seed` does not fit in
        64 bits or `workers` is not positive.
    """

    p: int = dataclass_field(default_factory=default_characteristic)
    seed: int = 0
    degree_cap: int = 120
    output: Literal["text", "json"] = "text"
    workers: int = 1

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.degree_cap < MIN_DEGREE_CAP:
            raise ValueError(
                f"degree_cap must be at least {MIN_DEGREE_CAP}, got {self.degree_cap}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.output not in ("text", "json"):
            raise ValueError(f"output must be 'text' or 'json', got {self.output}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")

    @property
    def field(self):
        """Return the shared prime field of the session."""
        from koszulx.classes.field import GF

        return GF(self.p)
