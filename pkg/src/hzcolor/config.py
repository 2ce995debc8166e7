"""Run configuration shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .search import DEFAULT_EDGE_BOUND
from .verifier import CHECK_GROUPS


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    bound: int = DEFAULT_EDGE_BOUND
    budget: int = 1000
    corpus: tuple[str, ...] = ()
    output: str | None = None
    hz_mode: bool = True
    checks: tuple[str, ...] = field(default_factory=lambda: tuple(CHECK_GROUPS))
    workers: int = 1

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for name in ("bound", "budget", "workers"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        unknown = set(self.checks) - set(CHECK_GROUPS)
        if unknown:
            raise ValueError(f"unknown check groups {sorted(unknown)}")
