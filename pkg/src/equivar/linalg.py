"""Exact rational matrices and row reduction.

Everything here works over Fraction.  No floats enter: the degree-by-degree
fixed-space computations downstream are only trustworthy in exact arithmetic.
Vectors are plain lists of Fraction; matrices for elimination are lists of
row lists.  RatMatrix is the immutable matrix type used for group elements.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected exact rational, got {type(x).__name__}")


class RatMatrix:
    """Immutable matrix over the rationals, row-major storage."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        ents = tuple(_frac(e) for e in entries)
        if len(ents) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(ents)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ents)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, (Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols, self.rows,
            (self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other[k, j] for k in range(self.cols)), Fraction(0)))
        return RatMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product, exact."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != {self.cols}")
        v = [_frac(x) for x in vec]
        return tuple(
            sum((self.row(i)[k] * v[k] for k in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def inverse(self) -> "RatMatrix":
        """Gauss-Jordan inverse; raises ValueError if singular."""
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = 1 / aug[col][col]
            aug[col] = [x * inv_p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return RatMatrix(n, n, (aug[i][n + j] for i in range(n) for j in range(n)))

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except ValueError:
            return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"RatMatrix[{body}]"


def block_diag(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Block-diagonal stack of two matrices."""
    n, m = a.rows + b.rows, a.cols + b.cols
    ents = []
    for i in range(n):
        for j in range(m):
            if i < a.rows and j < a.cols:
                ents.append(a[i, j])
            elif i >= a.rows and j >= a.cols:
                ents.append(b[i - a.rows, j - a.cols])
            else:
                ents.append(Fraction(0))
    return RatMatrix(n, m, ents)


# ---------------------------------------------------------------------------
# Row reduction over the rationals.


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.

    Returns the nonzero rows (pivots normalized to 1, zeros above and below)
    and the pivot column indices.  Column order is significant: pivots are
    always chosen in the first column, scanning rows top-down; this is what
    makes every downstream basis deterministic.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        sel = next((r for r in range(pr, len(m)) if m[r][pc] != 0), None)
        if sel is None:
            continue
        m[pr], m[sel] = m[sel], m[pr]
        inv_p = 1 / m[pr][pc]
        m[pr] = [x * inv_p for x in m[pr]]
        for r in range(len(m)):
            if r != pr and m[r][pc] != 0:
                f = m[r][pc]
                m[r] = [a - f * b for a, b in zip(m[r], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(m):
            break
    return m[:pr], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


class Echelon:
    """Incremental row space.

    add() returns True when the vector enlarges the span.  Each stored row is
    reduced against all earlier rows at insertion time, so insertion-order
    elimination stays sound.
    """

    def __init__(self) -> None:
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def residual(self, vec: Sequence[Fraction]) -> list[Fraction]:
        v = list(vec)
        for row, p in zip(self._rows, self._pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.residual(vec))

    def add(self, vec: Sequence[Fraction]) -> bool:
        v = self.residual(vec)
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        inv_p = 1 / v[p]
        self._rows.append([x * inv_p for x in v])
        self._pivots.append(p)
        return True


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space of the matrix.

    One vector per free column, in ascending free-column order, with a 1 in
    the free coordinate.
    """
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_free_zero(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """Solve A x = b exactly; free variables are set to zero.

    A is given by rows; unknowns correspond to columns.  Returns None when
    the system is inconsistent.  With columns supplied in a canonical order,
    setting free variables to zero is the deterministic tie-break used
    throughout: the solution is supported on the earliest independent
    columns.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x
