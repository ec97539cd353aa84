"""Faces of the polytopes cut out by (0,1) support patterns.

A pattern B selects the face of matrices supported inside B. Vertex counts
come in closed form from the row sums; the enumerator deliberately takes the
slow road instead, filtering the global extreme-point enumeration through
the support condition, so counting and enumerating stay two independent
routes to the same answer.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Iterator

from centrostoch.core import (
    DEFAULT_ENUMERATION_CAP,
    Matrix,
    NoRowSupportError,
    NotCentrosymmetricError,
    PatternError,
    is_centrosymmetric,
)
from centrostoch.extremes import (
    enumerate_extreme_centro,
    enumerate_extreme_stochastic,
)

__all__ = [
    "FacePattern",
    "has_row_support_stochastic",
    "has_row_support_centro",
    "count_face_vertices_stochastic",
    "count_face_vertices_centro",
    "enumerate_face_vertices",
]


class FacePattern:
    """Immutable (0,1) matrix used as a support pattern."""

    __slots__ = ("matrix",)

    def __init__(self, rows) -> None:
        mat = rows if isinstance(rows, Matrix) else Matrix(rows)
        if not mat.is_zero_one():
            raise PatternError("a face pattern must have entries 0 and 1 only")
        object.__setattr__(self, "matrix", mat)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("FacePattern is immutable")

    @property
    def nrows(self) -> int:
        return self.matrix.nrows

    @property
    def ncols(self) -> int:
        return self.matrix.ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def at(self, i: int, j: int):
        return self.matrix.at(i, j)

    def row_sum(self, i: int):
        return self.matrix.row_sum(i)

    def rotate_pi(self) -> "FacePattern":
        return FacePattern(self.matrix.rotate_pi())

    def is_centrosymmetric(self) -> bool:
        return is_centrosymmetric(self.matrix)

    def meet(self, other: "FacePattern") -> "FacePattern":
        """Entrywise minimum with another pattern."""
        return FacePattern(self.matrix.entrywise_min(other.matrix))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FacePattern):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((FacePattern, self.matrix))

    def __repr__(self) -> str:
        return f"FacePattern({self.matrix!r})"


def _coerce(pattern) -> FacePattern:
    return pattern if isinstance(pattern, FacePattern) else FacePattern(pattern)


def has_row_support_stochastic(pattern) -> bool:
    """True iff every row of the pattern contains a 1."""
    b = _coerce(pattern)
    return all(b.row_sum(i) > 0 for i in range(1, b.nrows + 1))


def has_row_support_centro(pattern) -> bool:
    """True iff every row of B meet B-rotated contains a 1.

    That is the support condition a centrosymmetric stochastic matrix can
    actually use, since its support is closed under the half turn.
    """
    b = _coerce(pattern)
    core = b.meet(b.rotate_pi())
    return all(core.row_sum(i) > 0 for i in range(1, core.nrows + 1))


def count_face_vertices_stochastic(pattern) -> int:
    """Number of extreme points supported inside the pattern: the product
    of its row sums. Raises NoRowSupportError when some row is all zero."""
    b = _coerce(pattern)
    if not has_row_support_stochastic(b):
        raise NoRowSupportError("pattern has an all-zero row")
    return prod(int(b.row_sum(i)) for i in range(1, b.nrows + 1))


def count_face_vertices_centro(pattern) -> int:
    """Number of centrosymmetric extreme points supported inside the
    pattern.

    The pattern must itself be centrosymmetric (normalize with B meet
    B-rotated first otherwise). The count is the product of the top-half
    row sums, times ceil(c / 2) for the center row sum c when the row count
    is odd. Raises NotCentrosymmetricError / NoRowSupportError.
    """
    b = _coerce(pattern)
    if not b.is_centrosymmetric():
        raise NotCentrosymmetricError(
            "count needs a centrosymmetric pattern; meet it with its rotation first"
        )
    if not has_row_support_centro(b):
        raise NoRowSupportError("pattern has an all-zero row")
    m = b.nrows
    half = m // 2
    top = prod(int(b.row_sum(i)) for i in range(1, half + 1))
    if m % 2 == 0:
        return top
    center = int(b.row_sum(half + 1))
    return top * ((center + 1) // 2)


def enumerate_face_vertices(
    pattern,
    centro: bool = False,
    cap: int = DEFAULT_ENUMERATION_CAP,
    check: bool = True,
) -> Iterator[Matrix]:
    """Lazily yield the extreme points supported inside the pattern.

    Runs the global extreme-point enumeration for the pattern's shape and
    keeps the matrices whose support the pattern dominates; the closed-form
    counters take no part in it. With `check` (the default) the same
    preconditions as the counters are enforced up front; `check=False`
    allows unsupported patterns, for which the enumeration is simply empty.
    Raises EnumerationCapError when the global enumeration exceeds `cap`.
    """
    b = _coerce(pattern)
    m, n = b.shape
    if centro:
        if not b.is_centrosymmetric():
            raise NotCentrosymmetricError(
                "enumeration needs a centrosymmetric pattern"
            )
        if check and not has_row_support_centro(b):
            raise NoRowSupportError("pattern has an all-zero row")
        candidates: Iterable[Matrix] = enumerate_extreme_centro(m, n, cap=cap)
    else:
        if check and not has_row_support_stochastic(b):
            raise NoRowSupportError("pattern has an all-zero row")
        candidates = (
            r.to_matrix() for r in enumerate_extreme_stochastic(m, n, cap=cap)
        )

    def generate() -> Iterator[Matrix]:
        for mat in candidates:
            if all(b.at(i, j) == 1 for i, j in mat.support()):
                yield mat

    return generate()
