"""
Exact rational linear algebra: fraction-free rank and span membership
"""

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

from valuta.errors import AlgebraError, DimensionMismatch

Number = Union[int, Fraction]


class ExactMatrix:
    """Rectangular matrix of rationals, immutable once built"""

    def __init__(self, rows: Sequence[Sequence[Number]]):
        rows = [tuple(Fraction(v) for v in row) for row in rows]
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise DimensionMismatch(f"rows have different lengths: {sorted(widths)}")
        self._rows = tuple(rows)
        self._cols = widths.pop() if widths else 0

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self._rows), self._cols

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self._rows)]) if self._rows else ExactMatrix([])

    def integer_rows(self) -> List[List[int]]:
        """Each row multiplied by the lcm of its denominators"""
        out = []
        for row in self._rows:
            scale = lcm(*(v.denominator for v in row)) if row else 1
            out.append([int(v * scale) for v in row])
        return out

    def rank(self) -> int:
        _, pivots = bareiss_echelon(self.integer_rows())
        return len(pivots)

    def __repr__(self):
        return f"ExactMatrix(shape={self.shape})"


class SpanSolution:
    """Coefficients expressing a target vector over a list of generators"""

    def __init__(self, coefficients: List[Fraction], is_unique: bool):
        self.coefficients = coefficients
        self.is_unique = is_unique

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def integer_coefficients(self) -> List[int]:
        return [int(c) for c in self.coefficients]

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coefficients)
        return f"SpanSolution([{shown}], unique={self.is_unique}, integral={self.is_integral})"


def bareiss_echelon(rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form; returns the reduced rows and pivot columns

    After step r every entry below the pivot row is an (r+1)-minor of the
    input, so the division by the previous pivot is exact.
    """
    a = [list(row) for row in rows]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        p = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pivot = a[r][c]
        for i in range(r + 1, n_rows):
            factor = a[i][c]
            for j in range(c + 1, n_cols):
                a[i][j] = (a[i][j] * pivot - factor * a[r][j]) // previous
            a[i][c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return a, pivots


def exact_rank(matrix: Union[ExactMatrix, Sequence[Sequence[Number]]]) -> int:
    if not isinstance(matrix, ExactMatrix):
        matrix = ExactMatrix(matrix)
    return matrix.rank()


def solve_in_span(generators: Sequence[Sequence[Number]], target: Sequence[Number]) -> Optional[SpanSolution]:
    """Rational c with sum(c_i * generators[i]) == target, or None outside the span

    Free variables are set to zero when the generators are dependent.
    """
    dim = len(target)
    for index, g in enumerate(generators):
        if len(g) != dim:
            raise DimensionMismatch(
                f"generator {index} has length {len(g)}, target has length {dim}"
            )
    m = len(generators)
    if m == 0:
        return SpanSolution([], True) if all(v == 0 for v in target) else None

    # One equation per coordinate, one unknown per generator, target last
    augmented = ExactMatrix([[g[row] for g in generators] + [target[row]] for row in range(dim)])
    echelon, pivots = bareiss_echelon(augmented.integer_rows())
    if m in pivots:
        return None

    coefficients = [Fraction(0)] * m
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = echelon[r]
        acc = Fraction(row[m])
        for j in range(c + 1, m):
            if row[j]:
                acc -= row[j] * coefficients[j]
        coefficients[c] = acc / row[c]

    for row in range(dim):
        value = sum(coefficients[i] * generators[i][row] for i in range(m))
        if value != target[row]:
            raise AlgebraError(f"span solution fails to reproduce coordinate {row}")

    return SpanSolution(coefficients, is_unique=len(pivots) == m)
