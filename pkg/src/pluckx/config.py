"""Per-invocation settings assembled from command-line options."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a report; equal configs and inputs give identical output."""

    seed: int = 0
    trials: int = 100
    samples: int = 20
    input: str | None = None
    output: str | None = None
