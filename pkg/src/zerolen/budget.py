"""Search-effort accounting and the worker pool shared by the enumeration modules."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

DEFAULT_MAX_NODES = 400_000_000
_ENV_VAR = "ZEROLEN_MAX_NODES"

T = TypeVar("T")
R = TypeVar("R")


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed its node budget; never truncates."""


def max_nodes() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_NODES
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from exc


_global_nodes = 0


def global_nodes() -> int:
    """Total nodes ticked by every counter in this process (telemetry)."""
    return _global_nodes


class NodeCounter:
    """Monotone counter with a hard cap; tick in batches to keep overhead low."""

    __slots__ = ("count", "limit")

    def __init__(self, limit: int | None = None):
        self.count = 0
        self.limit = max_nodes() if limit is None else limit

    def tick(self, n: int = 1) -> None:
        global _global_nodes
        self.count += n
        _global_nodes += n
        if self.count > self.limit:
            raise ResourceLimitError(
                f"search exceeded the node budget of {self.limit} "
                f"(set {_ENV_VAR} to raise it)"
            )


def parallel_map(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> list[R]:
    """Order-preserving map over a thread pool; threads=1 stays inline."""
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
