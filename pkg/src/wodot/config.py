"""Budgets and caps for the exhaustive operations."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, fields
from typing import Iterator


@dataclass
class Settings:
    # groups larger than this are refused by span/stabilizer/enumeration helpers
    order_cap: int = 64
    # W⊙S DP refuses more than 2**mask_bits states
    mask_bits: int = 24
    # max number of multiplicity vectors walked by subsequence enumeration
    enum_budget: int = 1 << 20
    # max r for the permutation oracle (r! assignments)
    perm_budget: int = 8

    def validate(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"{f.name} must be positive")


settings = Settings()


@contextmanager
def override(**changes: int) -> Iterator[Settings]:
    """Temporarily change budgets, e.g. ``with override(order_cap=128): ...``."""
    old = {k: getattr(settings, k) for k in changes}
    for k, v in changes.items():
        if not hasattr(settings, k):
            raise AttributeError(f"unknown setting {k!r}")
        setattr(settings, k, v)
    try:
        settings.validate()
        yield settings
    finally:
        for k, v in old.items():
            setattr(settings, k, v)
