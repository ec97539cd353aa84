"""Extreme points of the stochastic and centrosymmetric stochastic polytopes.

Two independent routes to extremality live here. The structural predicates
(`is_extreme_stochastic`, `is_extreme_centro`) check the known shape of the
extreme points directly. The oracle (`is_extreme_oracle`) knows nothing about
that shape: it applies the general vertex criterion, testing by exact rank
whether the only support-preserving perturbation with zero row sums (and, on
request, half-turn symmetry) is zero. Tests play the two routes against each
other; library code never mixes them.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator

from centrostoch.core import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    Matrix,
    NotCentrosymmetricError,
    NotStochasticError,
    RectPermMatrix,
    ShapeError,
    _rank,
    is_centrosymmetric,
    is_stochastic,
)

__all__ = [
    "is_extreme_stochastic",
    "is_extreme_centro",
    "enumerate_extreme_stochastic",
    "enumerate_extreme_centro",
    "is_extreme_oracle",
]

_HALF = Fraction(1, 2)


def _one_per_row(a: Matrix, skip_row: int = 0) -> bool:
    # (0,1) rows with exactly one 1 each; skip_row (1-based) is exempted.
    for i, row in enumerate(a.entries, 1):
        if i == skip_row:
            continue
        ones = 0
        for x in row:
            if x == 1:
                ones += 1
            elif x != 0:
                return False
        if ones != 1:
            return False
    return True


def is_extreme_stochastic(a: Matrix) -> bool:
    """True iff `a` is a rectangular permutation matrix.

    Those are exactly the extreme points of the polytope of row-stochastic
    matrices of the given shape.
    """
    return _one_per_row(a)


def is_extreme_centro(a: Matrix) -> bool:
    """Structural test for extremality in the centrosymmetric polytope.

    For even row count the extreme points are the centrosymmetric
    rectangular permutation matrices. For odd row count every row except the
    center one carries a single 1, and the center row is either a 1 on the
    middle column (odd column count) or a mirrored pair of 1/2 entries.
    Returns False for anything outside the polytope.
    """
    if not is_stochastic(a) or not is_centrosymmetric(a):
        return False
    m, n = a.shape
    if m % 2 == 0:
        return _one_per_row(a)
    center = m // 2 + 1
    if not _one_per_row(a, skip_row=center):
        return False
    nonzero = [(j, x) for j, x in enumerate(a.row(center), 1) if x != 0]
    if len(nonzero) == 1:
        j, x = nonzero[0]
        return x == 1 and j == n + 1 - j
    if len(nonzero) == 2:
        (j1, x1), (j2, x2) = nonzero
        return x1 == _HALF and x2 == _HALF and j2 == n + 1 - j1
    return False


def _check_sizes(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ShapeError(f"matrix sizes must be positive, got {m} x {n}")


def enumerate_extreme_stochastic(
    m: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[RectPermMatrix]:
    """All n^m rectangular permutation matrices of shape m x n, lazily.

    Output is in lexicographic order of the column assignments. Raises
    EnumerationCapError up front when n^m exceeds `cap`.
    """
    _check_sizes(m, n)
    total = n**m
    if total > cap:
        raise EnumerationCapError(f"{total} extreme points exceed the cap of {cap}")

    def generate() -> Iterator[RectPermMatrix]:
        for cols in itertools.product(range(1, n + 1), repeat=m):
            yield RectPermMatrix(cols, n)

    return generate()


def _center_rows(n: int) -> list[tuple[Fraction, ...]]:
    # the admissible center rows for odd row count, in column order
    rows = []
    for j in range(1, (n + 1) // 2 + 1):
        mirror = n + 1 - j
        row = [Fraction(0)] * n
        if j == mirror:
            row[j - 1] = Fraction(1)
        else:
            row[j - 1] = _HALF
            row[mirror - 1] = _HALF
        rows.append(tuple(row))
    return rows


def enumerate_extreme_centro(
    m: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[Matrix]:
    """All extreme points of the centrosymmetric polytope, lazily.

    There are n^(m/2) for even m and ceil(n/2) * n^((m-1)/2) for odd m; the
    top half runs lexicographically, and for odd m the center row cycles
    fastest. Raises EnumerationCapError up front when the count exceeds
    `cap`.
    """
    _check_sizes(m, n)
    half_rows = m // 2
    if m % 2 == 0:
        total = n**half_rows
    else:
        total = ((n + 1) // 2) * n**half_rows
    if total > cap:
        raise EnumerationCapError(f"{total} extreme points exceed the cap of {cap}")

    def unit_row(col: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(1) if j == col else Fraction(0) for j in range(1, n + 1))

    def generate() -> Iterator[Matrix]:
        centers = None if m % 2 == 0 else _center_rows(n)
        for cols in itertools.product(range(1, n + 1), repeat=half_rows):
            top = [unit_row(c) for c in cols]
            bottom = [unit_row(n + 1 - c) for c in reversed(cols)]
            if centers is None:
                yield Matrix(top + bottom)
            else:
                for center in centers:
                    yield Matrix(top + [center] + bottom)

    return generate()


def is_extreme_oracle(a: Matrix, centro: bool = False) -> bool:
    """Vertex test straight from the definition, by exact rank.

    `a` is extreme iff the only matrix supported inside supp(a) with zero
    row sums (and equal to its own half-turn rotation when `centro`) is the
    zero matrix. That solution space is the null space of a small exact
    linear system; `a` is extreme iff the system's rank equals the number of
    support positions. Raises NotStochasticError / NotCentrosymmetricError
    when `a` is outside the polytope in question.
    """
    if not is_stochastic(a):
        raise NotStochasticError("oracle input must be row-stochastic")
    if centro and not is_centrosymmetric(a):
        raise NotCentrosymmetricError("oracle input must be centrosymmetric")
    m, n = a.shape
    support = sorted(a.support())
    index = {pos: k for k, pos in enumerate(support)}
    nvars = len(support)
    rows: list[list[Fraction]] = []
    for i in range(1, m + 1):
        row = [Fraction(0)] * nvars
        hit = False
        for j in range(1, n + 1):
            k = index.get((i, j))
            if k is not None:
                row[k] = Fraction(1)
                hit = True
        if hit:
            rows.append(row)
    if centro:
        for (i, j), k in index.items():
            mirror = (m + 1 - i, n + 1 - j)
            if (i, j) < mirror:
                row = [Fraction(0)] * nvars
                row[k] = Fraction(1)
                row[index[mirror]] = Fraction(-1)
                rows.append(row)
    return _rank(rows) == nvars
