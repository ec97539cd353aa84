"""Exact rational matrices and the structural predicates shared by every module.

Scalars are `fractions.Fraction` throughout, so every operation in this
package is exact and every equality test is bit-for-bit; there are no
tolerances anywhere. Matrices, row-pattern matrices and convex combinations
are immutable values: operations return fresh objects, and instances are safe
to hash, reuse and share.

Positions are 1-based in the public API (`at(i, j)`, supports, graph edges),
matching the usual combinatorial conventions for these objects. Internal
storage is ordinary 0-based tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Rational",
    "DEFAULT_ENUMERATION_CAP",
    "CentrostochError",
    "ShapeError",
    "NotStochasticError",
    "NotCentrosymmetricError",
    "SplitError",
    "NoRowSupportError",
    "PatternError",
    "NotForestError",
    "EnumerationCapError",
    "Matrix",
    "RectPermMatrix",
    "ConvexCombination",
    "rotate_pi",
    "is_stochastic",
    "is_centrosymmetric",
    "rank_of_family",
]

# The scalar type used everywhere. Fraction keeps values reduced with a
# positive denominator, which is exactly the normal form the package needs.
Rational = Fraction

DEFAULT_ENUMERATION_CAP = 10**6


class CentrostochError(Exception):
    """Base class for domain errors raised by this package."""


class ShapeError(CentrostochError):
    """Operands have missing, ragged, or incompatible dimensions."""


class NotStochasticError(CentrostochError):
    """A row-stochastic matrix was required."""


class NotCentrosymmetricError(CentrostochError):
    """A centrosymmetric input was required."""


class SplitError(CentrostochError):
    """The half-turn splitting construction was applied outside its domain."""


class NoRowSupportError(CentrostochError):
    """A face pattern without row support was given to a vertex routine."""


class PatternError(CentrostochError):
    """A (0,1) pattern with the required row structure was expected."""


class NotForestError(CentrostochError):
    """A forest graph was required."""


class EnumerationCapError(CentrostochError):
    """An enumeration would produce more items than the configured cap."""


def _to_rational(value) -> Fraction:
    # floats are rejected rather than converted: Fraction(0.1) is not 1/10,
    # and silently accepting it would poison every exactness guarantee.
    if isinstance(value, float):
        raise TypeError(
            "float entries are not allowed in exact matrices; pass a "
            "Fraction, an int, or a string such as '1/2' or '0.3'"
        )
    return Fraction(value)


class Matrix:
    """Immutable dense m x n matrix over the rationals.

    Rows are given as any iterable of iterables of Fraction-convertible
    values (ints, Fractions, strings like ``'7/10'``); floats raise
    TypeError. Entry access is 1-based via :meth:`at`.
    """

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, rows: Iterable[Iterable]) -> None:
        data = tuple(tuple(_to_rational(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ShapeError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ShapeError("all rows must have the same length")
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def at(self, i: int, j: int) -> Fraction:
        """Entry in row i, column j, both 1-based."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"position ({i}, {j}) outside {self.nrows} x {self.ncols}")
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[Fraction, ...]:
        """Row i as a tuple, 1-based."""
        if not 1 <= i <= self.nrows:
            raise IndexError(f"row {i} outside 1..{self.nrows}")
        return self.entries[i - 1]

    def row_sum(self, i: int) -> Fraction:
        return sum(self.row(i), Fraction(0))

    def support(self) -> frozenset[tuple[int, int]]:
        """1-based positions of the nonzero entries."""
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if x != 0
        )

    def nnz(self) -> int:
        return sum(1 for row in self.entries for x in row if x != 0)

    def is_zero_one(self) -> bool:
        return all(x == 0 or x == 1 for row in self.entries for x in row)

    def rotate_pi(self) -> "Matrix":
        return rotate_pi(self)

    def entrywise_min(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix(
            tuple(min(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )

    def __add__(self, other) -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )

    def __sub__(self, other) -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )

    def __mul__(self, scalar) -> "Matrix":
        c = _to_rational(scalar)
        return Matrix(tuple(x * c for x in row) for row in self.entries)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"Matrix([{rows}])"


def rotate_pi(a: Matrix) -> Matrix:
    """Half-turn rotation: entry (i, j) moves to (m+1-i, n+1-j)."""
    return Matrix(tuple(row[::-1] for row in a.entries[::-1]))


def is_stochastic(a: Matrix) -> bool:
    """True iff every entry is nonnegative and every row sums to exactly 1."""
    for row in a.entries:
        if any(x < 0 for x in row):
            return False
        if sum(row) != 1:
            return False
    return True


def is_centrosymmetric(a: Matrix) -> bool:
    """True iff the matrix equals its half-turn rotation."""
    m, n = a.shape
    e = a.entries
    for i in range((m + 1) // 2):
        for j in range(n):
            if e[i][j] != e[m - 1 - i][n - 1 - j]:
                return False
    return True


class RectPermMatrix:
    """Rectangular permutation matrix: a (0,1)-matrix with one 1 per row.

    Stored compactly as the 1-based column of each row's single 1. There is
    no constraint across rows, so an m x n instance exists for every one of
    the n^m column assignments.
    """

    __slots__ = ("nrows", "ncols", "row_to_col")

    def __init__(self, row_to_col: Sequence[int], ncols: int) -> None:
        cols = tuple(int(c) for c in row_to_col)
        if not cols:
            raise ShapeError("a matrix needs at least one row")
        if ncols < 1:
            raise ShapeError("a matrix needs at least one column")
        for c in cols:
            if not 1 <= c <= ncols:
                raise ShapeError(f"column {c} outside 1..{ncols}")
        object.__setattr__(self, "nrows", len(cols))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "row_to_col", cols)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("RectPermMatrix is immutable")

    @classmethod
    def from_matrix(cls, a: Matrix) -> "RectPermMatrix":
        """Read a rectangular permutation matrix off a Matrix.

        Raises PatternError when some entry is not 0/1 or some row does not
        have exactly one 1.
        """
        cols = []
        for i, row in enumerate(a.entries, 1):
            ones = [j for j, x in enumerate(row, 1) if x == 1]
            if len(ones) != 1 or any(x != 0 and x != 1 for x in row):
                raise PatternError(f"row {i} does not carry exactly one 1")
            cols.append(ones[0])
        return cls(cols, a.ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_matrix(self) -> Matrix:
        n = self.ncols
        return Matrix(
            tuple(1 if j == c else 0 for j in range(1, n + 1))
            for c in self.row_to_col
        )

    def rotate_pi(self) -> "RectPermMatrix":
        n = self.ncols
        return RectPermMatrix([n + 1 - c for c in reversed(self.row_to_col)], n)

    def is_centrosymmetric(self) -> bool:
        n = self.ncols
        cols = self.row_to_col
        return all(cols[i] + cols[-1 - i] == n + 1 for i in range(len(cols)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RectPermMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.row_to_col == other.row_to_col

    def __hash__(self) -> int:
        return hash((self.ncols, self.row_to_col))

    def __repr__(self) -> str:
        return f"RectPermMatrix({list(self.row_to_col)}, ncols={self.ncols})"


class ConvexCombination:
    """Convex combination of equally shaped matrices.

    Terms are (coefficient, matrix) pairs. Construction merges repeated
    matrices by adding their coefficients (first occurrence fixes the order),
    then requires every merged coefficient to lie in (0, 1] and the total to
    be exactly 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple]) -> None:
        merged: dict[Matrix, Fraction] = {}
        for coeff, mat in terms:
            if not isinstance(mat, Matrix):
                raise TypeError("terms must pair a coefficient with a Matrix")
            merged[mat] = merged.get(mat, Fraction(0)) + _to_rational(coeff)
        if not merged:
            raise ShapeError("a convex combination needs at least one term")
        shapes = {mat.shape for mat in merged}
        if len(shapes) != 1:
            raise ShapeError(f"terms mix shapes: {sorted(shapes)}")
        total = Fraction(0)
        for mat, coeff in merged.items():
            if not 0 < coeff <= 1:
                raise ValueError(f"coefficient {coeff} outside (0, 1]")
            total += coeff
        if total != 1:
            raise ValueError(f"coefficients sum to {total}, not 1")
        object.__setattr__(
            self, "terms", tuple((coeff, mat) for mat, coeff in merged.items())
        )

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("ConvexCombination is immutable")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Fraction, Matrix]]:
        return iter(self.terms)

    def combine(self) -> Matrix:
        """Evaluate the combination exactly."""
        coeff, mat = self.terms[0]
        acc = mat * coeff
        for coeff, mat in self.terms[1:]:
            acc = acc + mat * coeff
        return acc

    def __repr__(self) -> str:
        inner = ", ".join(f"({c}, {m!r})" for c, m in self.terms)
        return f"ConvexCombination([{inner}])"


def _rank(rows: list[list[Fraction]]) -> int:
    """Rank of a list of coordinate vectors by exact Gaussian elimination.

    Mutates its argument; callers pass throwaway copies.
    """
    if not rows:
        return 0
    nrows = len(rows)
    ncols = len(rows[0])
    pivots = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(pivots, nrows):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[pivots], rows[pivot_row] = rows[pivot_row], rows[pivots]
        pivot = rows[pivots][col]
        for r in range(pivots + 1, nrows):
            factor = rows[r][col]
            if factor:
                ratio = factor / pivot
                target = rows[r]
                source = rows[pivots]
                for c in range(col, ncols):
                    target[c] -= source[c] * ratio
        pivots += 1
        if pivots == nrows:
            break
    return pivots


def rank_of_family(family: Iterable[Matrix]) -> int:
    """Exact rank of a family of equally shaped matrices, flattened row-major.

    The empty family has rank 0. Shapes must agree.
    """
    mats = list(family)
    if not mats:
        return 0
    shape = mats[0].shape
    for mat in mats:
        if mat.shape != shape:
            raise ShapeError(f"shape mismatch: {shape} vs {mat.shape}")
    vectors = [[x for row in mat.entries for x in row] for mat in mats]
    return _rank(vectors)
