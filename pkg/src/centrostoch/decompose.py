"""Greedy decomposition of stochastic matrices into extreme points.

The common engine marks each row's smallest positive entry (leftmost on
ties), peels off the marked rectangular permutation matrix with the largest
exactly feasible coefficient, renormalizes, and repeats. Everything else in
the module is bookkeeping around that loop: pairing terms with their
half-turn rotations for the centrosymmetric polytope, and splitting the
pairs that are not yet extreme.
"""

from __future__ import annotations

from fractions import Fraction

from centrostoch.core import (
    ConvexCombination,
    Matrix,
    NotCentrosymmetricError,
    NotStochasticError,
    RectPermMatrix,
    SplitError,
    is_centrosymmetric,
    is_stochastic,
)
from centrostoch.extremes import is_extreme_centro

__all__ = [
    "decompose_stochastic",
    "decompose_centro_halves",
    "split_noncentrosymmetric",
    "decompose_centrosymmetric",
]

_HALF = Fraction(1, 2)


def _mark(a: Matrix) -> tuple[RectPermMatrix, Fraction]:
    # smallest positive entry of each row, leftmost winning ties; the peel
    # coefficient is the smallest marked value
    cols = []
    smallest = None
    for row in a.entries:
        best_col = None
        best = None
        for j, x in enumerate(row, 1):
            if x > 0 and (best is None or x < best):
                best = x
                best_col = j
        cols.append(best_col)
        if smallest is None or best < smallest:
            smallest = best
    return RectPermMatrix(cols, a.ncols), smallest


def _greedy_terms(a: Matrix) -> list[tuple[Fraction, RectPermMatrix]]:
    if not is_stochastic(a):
        raise NotStochasticError("decomposition input must be row-stochastic")
    terms: list[tuple[Fraction, RectPermMatrix]] = []
    weight = Fraction(1)
    current = a
    while True:
        picked, coeff = _mark(current)
        if coeff == 1:
            # every row is a single 1: the remainder is itself extreme
            terms.append((weight, picked))
            return terms
        terms.append((weight * coeff, picked))
        # peel and renormalize; the marked positions that attain coeff
        # become exact zeros, so the loop strictly shrinks the support
        current = (current - picked.to_matrix() * coeff) * (1 / (1 - coeff))
        weight *= 1 - coeff


def decompose_stochastic(a: Matrix) -> ConvexCombination:
    """Write a stochastic matrix as a convex combination of rectangular
    permutation matrices.

    The result recombines to `a` exactly and has at most nnz(a) - m + 1
    terms. Raises NotStochasticError otherwise.
    """
    return ConvexCombination((c, r.to_matrix()) for c, r in _greedy_terms(a))


def decompose_centro_halves(a: Matrix) -> ConvexCombination:
    """Decompose a centrosymmetric stochastic matrix into half-turn pairs.

    Each greedy term R is replaced by (R + R^pi) / 2, which is again
    centrosymmetric and stochastic but not necessarily extreme. Raises
    NotStochasticError / NotCentrosymmetricError on bad input.
    """
    if not is_stochastic(a):
        raise NotStochasticError("input must be row-stochastic")
    if not is_centrosymmetric(a):
        raise NotCentrosymmetricError("input must be centrosymmetric")
    return ConvexCombination(
        (c, (r.to_matrix() + r.rotate_pi().to_matrix()) * _HALF)
        for c, r in _greedy_terms(a)
    )


def split_noncentrosymmetric(
    r: RectPermMatrix,
) -> tuple[RectPermMatrix, RectPermMatrix]:
    """Split R + R^pi into two distinct centrosymmetric rectangular
    permutation matrices Q1 + Q2.

    Each row of R + R^pi holds two unit entries (possibly stacked); row i of
    Q1 takes the leftmost, row i of Q2 the other, for i in the top half, and
    the bottom halves mirror. Requires an even number of rows and a
    non-centrosymmetric R; raises SplitError otherwise.
    """
    if r.nrows % 2 != 0:
        raise SplitError("splitting needs an even number of rows")
    if r.is_centrosymmetric():
        raise SplitError("input is already centrosymmetric")
    n = r.ncols
    half = r.nrows // 2
    rotated = r.rotate_pi()
    first = []
    second = []
    for i in range(half):
        c1 = r.row_to_col[i]
        c2 = rotated.row_to_col[i]
        first.append(min(c1, c2))
        second.append(max(c1, c2))
    q1 = first + [n + 1 - c for c in reversed(first)]
    q2 = second + [n + 1 - c for c in reversed(second)]
    return RectPermMatrix(q1, n), RectPermMatrix(q2, n)


def _reinsert_center(
    q: RectPermMatrix, center: tuple[Fraction, ...]
) -> Matrix:
    rows = q.to_matrix().entries
    half = len(rows) // 2
    return Matrix(rows[:half] + (center,) + rows[half:])


def decompose_centrosymmetric(a: Matrix) -> ConvexCombination:
    """Write a centrosymmetric stochastic matrix as a convex combination of
    extreme points of the centrosymmetric polytope.

    Runs the greedy loop, pairs each term with its rotation, and splits any
    pair that is not yet extreme; for an odd number of rows the center row
    is deleted before splitting and the averaged center row is reinserted
    into both halves. Every output term passes is_extreme_centro.
    """
    if not is_stochastic(a):
        raise NotStochasticError("input must be row-stochastic")
    if not is_centrosymmetric(a):
        raise NotCentrosymmetricError("input must be centrosymmetric")
    m, n = a.shape
    terms: list[tuple[Fraction, Matrix]] = []
    for coeff, r in _greedy_terms(a):
        paired = (r.to_matrix() + r.rotate_pi().to_matrix()) * _HALF
        if is_extreme_centro(paired):
            terms.append((coeff, paired))
            continue
        if m % 2 == 0:
            q1, q2 = split_noncentrosymmetric(r)
            terms.append((coeff * _HALF, q1.to_matrix()))
            terms.append((coeff * _HALF, q2.to_matrix()))
        else:
            # delete the center row, split the even remainder, then give
            # both halves the averaged center row
            half = m // 2
            trimmed = RectPermMatrix(
                r.row_to_col[:half] + r.row_to_col[half + 1 :], n
            )
            q1, q2 = split_noncentrosymmetric(trimmed)
            center = paired.row(half + 1)
            terms.append((coeff * _HALF, _reinsert_center(q1, center)))
            terms.append((coeff * _HALF, _reinsert_center(q2, center)))
    return ConvexCombination(terms)
