"""Smith normal form of integer matrices."""
from dataclasses import dataclass
from typing import Sequence

from sympy import Matrix, eye, zeros


@dataclass(frozen=True)
class IntMatrix:
    """A rows × cols matrix of integers."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(entries: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Builds a matrix from nested rows. `cols` is needed when there are no rows."""
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        width = len(rows[0]) if rows else (cols or 0)
        return IntMatrix(len(rows), width, rows)

    def to_sympy(self) -> Matrix:
        """The same matrix as a sympy `Matrix`."""
        if self.rows == 0:
            return zeros(0, self.cols)
        return Matrix(self.entries)


@dataclass(frozen=True)
class SmithForm:
    """
    Invariant factors d₁ | d₂ | … (zeros last), the rank, and unimodular
    `left`, `right` with left·M·right = diag(factors).
    """

    factors: tuple[int, ...]
    rank: int
    left: Matrix
    right: Matrix

    @property
    def torsion(self) -> tuple[int, ...]:
        """Factors above 1."""
        return tuple(d for d in self.factors[: self.rank] if d > 1)


def smith_normal_form(matrix: IntMatrix) -> SmithForm:
    """Reduces `matrix` by unimodular row and column operations."""
    M = matrix.to_sympy()
    rows, cols = matrix.rows, matrix.cols
    L, R = eye(rows), eye(cols)

    t = 0
    while t < min(rows, cols):
        nonzero = [(i, j) for i in range(t, rows) for j in range(t, cols) if M[i, j] != 0]
        if not nonzero:
            break

        while True:
            i, j = min(
                ((i, j) for i in range(t, rows) for j in range(t, cols) if M[i, j] != 0),
                key=lambda ij: (abs(M[ij[0], ij[1]]), ij),
            )
            M.row_swap(t, i)
            L.row_swap(t, i)
            M.col_swap(t, j)
            R.col_swap(t, j)

            pivot = M[t, t]
            reduced = True
            for i in range(t + 1, rows):
                q = M[i, t] // pivot
                if q:
                    M.row_op(i, lambda v, k, q=q: v - q * M[t, k])
                    L.row_op(i, lambda v, k, q=q: v - q * L[t, k])
                reduced = reduced and M[i, t] == 0
            for j in range(t + 1, cols):
                q = M[t, j] // pivot
                if q:
                    M.col_op(j, lambda v, k, q=q: v - q * M[k, t])
                    R.col_op(j, lambda v, k, q=q: v - q * R[k, t])
                reduced = reduced and M[t, j] == 0
            if not reduced:
                continue

            bad = next(
                (
                    i
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if M[i, j] % pivot != 0
                ),
                None,
            )
            if bad is None:
                break
            # Bring the offending row in; the next pass shrinks the pivot.
            M.row_op(t, lambda v, k, bad=bad: v + M[bad, k])
            L.row_op(t, lambda v, k, bad=bad: v + L[bad, k])

        if M[t, t] < 0:
            M.row_op(t, lambda v, k: -v)
            L.row_op(t, lambda v, k: -v)
        t += 1

    factors = tuple(int(M[k, k]) for k in range(min(rows, cols)))
    return SmithForm(factors, t, L, R)


def verify_smith_form(matrix: IntMatrix, form: SmithForm) -> bool:
    """Re-multiplies the transforms and checks they are unimodular."""
    rows, cols = matrix.rows, matrix.cols
    diagonal = zeros(rows, cols)
    for k, d in enumerate(form.factors):
        diagonal[k, k] = d

    if form.left * matrix.to_sympy() * form.right != diagonal:
        return False
    if abs(form.left.det()) != 1 or abs(form.right.det()) != 1:
        return False
    nonzero = [d for d in form.factors if d != 0]
    return len(nonzero) == form.rank and all(
        b % a == 0 for a, b in zip(nonzero, nonzero[1:])
    )
