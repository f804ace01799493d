"""Coefficients of the binomial expansion of (1 - t)**(1/5).

Writing (1 - t)**(1/5) = 1 - sum_{k>=1} c_k t**k, every c_k is positive and

    c_1 = 1/5,    c_{k+1} = (5k - 1) / (5(k + 1)) * c_k.

The recurrence is the production path. ``coefficient_closed_form`` unrolls
it into a direct product and exists so the two can be checked against each
other.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

from .errors import CapacityError

DEFAULT_CAPACITY = 200
CAPACITY_ENV_VAR = "BRING_SOLVER_MAX_K"


def _next_coefficient(k: int, c_k: float) -> float:
    return (5 * k - 1) / (5 * (k + 1)) * c_k


@dataclass(frozen=True)
class CoefficientTable:
    """Immutable table c_1..c_K, indexed from 1 like the math."""

    values: Tuple[float, ...]

    @property
    def max_index(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, k: int) -> float:
        if not 1 <= k <= len(self.values):
            raise CapacityError(k, len(self.values))
        return self.values[k - 1]

    @property
    def last(self) -> float:
        return self.values[-1]

    def require(self, index: int) -> None:
        """Raise CapacityError unless c_index is present."""
        if index > len(self.values):
            raise CapacityError(index, len(self.values))

    def extend(self, max_index: int) -> "CoefficientTable":
        """Return a table continued by the recurrence up to ``max_index``.

        The existing entries are reused unchanged, so an extended table agrees
        bit-for-bit with one generated at the larger size directly.
        """
        if max_index <= len(self.values):
            return self
        values = list(self.values)
        while len(values) < max_index:
            k = len(values)
            values.append(_next_coefficient(k, values[-1]))
        return CoefficientTable(tuple(values))


def generate_coefficients(max_index: int) -> CoefficientTable:
    """Generate c_1..c_K by the recurrence seeded with c_1 = 1/5.

    Args:
        max_index: Number of coefficients K, at least 1.

    Raises:
        ValueError: If ``max_index`` is not a positive integer.
    """
    if isinstance(max_index, bool) or not isinstance(max_index, int) or max_index < 1:
        raise ValueError(f"max_index must be a positive integer, got {max_index!r}")
    return CoefficientTable((0.2,)).extend(max_index)


def coefficient_closed_form(k: int) -> float:
    """c_k as the product (1/5) * prod_{j=1}^{k-1} (5j - 1) / (5(j + 1)).

    Factors are multiplied in left to right. Used as a check on the
    recurrence, not for production evaluation.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    product = 0.2
    for j in range(1, k):
        product *= (5 * j - 1) / (5 * (j + 1))
    return product


def configured_capacity() -> int:
    """Default table capacity, honouring the BRING_SOLVER_MAX_K override."""
    raw = os.environ.get(CAPACITY_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAPACITY
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{CAPACITY_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{CAPACITY_ENV_VAR} must be positive, got {value}")
    return value


@lru_cache(maxsize=8)
def _cached_table(max_index: int) -> CoefficientTable:
    return generate_coefficients(max_index)


def default_table() -> CoefficientTable:
    """Shared table sized by :func:`configured_capacity`."""
    return _cached_table(configured_capacity())


def table_for(max_index: int) -> CoefficientTable:
    """Default table, extended by the recurrence if it is shorter than ``max_index``."""
    return _cached_table(max(configured_capacity(), max_index))
