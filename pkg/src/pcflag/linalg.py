"""Exact linear algebra over cyclotomic fields.

Square matrices of CyclotomicNumber entries with Gaussian elimination,
Faddeev-LeVerrier characteristic polynomials and nullspace bases. Rank
decisions are exact; there are no tolerances.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .errors import ConductorMismatch, NonInvertibleGenerator


class CycMatrix:
    """Immutable square matrix over Q(zeta_n)."""

    __slots__ = ("rank", "conductor", "entries", "_hash")

    def __init__(self, entries) -> None:
        rows = tuple(tuple(e for e in row) for row in entries)
        r = len(rows)
        if any(len(row) != r for row in rows):
            raise ValueError("matrix must be square")
        conductors = {e.conductor for row in rows for e in row}
        if len(conductors) > 1:
            n = 1
            for c in conductors:
                n = n * c // _gcd(n, c)
            rows = tuple(tuple(e.promote(n) for e in row) for row in rows)
            conductor = n
        else:
            conductor = conductors.pop() if conductors else 1
        object.__setattr__(self, "rank", r)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "_hash", hash(rows))

    def __setattr__(self, *args):
        raise AttributeError("CycMatrix is immutable")

    @staticmethod
    def identity(r: int, conductor: int = 1) -> "CycMatrix":
        one = CyclotomicNumber.one(conductor)
        zero = CyclotomicNumber.zero(conductor)
        return CycMatrix(
            [[one if i == j else zero for j in range(r)] for i in range(r)]
        )

    @staticmethod
    def from_rational_rows(rows, conductor: int = 1) -> "CycMatrix":
        return CycMatrix(
            [
                [CyclotomicNumber(conductor, [Fraction(v)]) for v in row]
                for row in rows
            ]
        )

    def promote(self, n: int) -> "CycMatrix":
        if n == self.conductor:
            return self
        return CycMatrix([[e.promote(n) for e in row] for row in self.entries])

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        a, b = self, other
        if a.conductor != b.conductor:
            raise ConductorMismatch(
                f"matrix conductors differ: {a.conductor} vs {b.conductor}"
            )
        r = a.rank
        bt = list(zip(*b.entries))
        out = []
        for i in range(r):
            row = a.entries[i]
            out_row = []
            for j in range(r):
                col = bt[j]
                acc = row[0] * col[0]
                for t in range(1, r):
                    acc = acc + row[t] * col[t]
                out_row.append(acc)
            out.append(out_row)
        return CycMatrix(out)

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def scale(self, c) -> "CycMatrix":
        return CycMatrix([[e * c for e in row] for row in self.entries])

    def trace(self) -> CyclotomicNumber:
        acc = self.entries[0][0]
        for i in range(1, self.rank):
            acc = acc + self.entries[i][i]
        return acc

    def charpoly(self) -> list[CyclotomicNumber]:
        """Coefficients of det(lambda*I - M): [a_r, ..., a_1, 1] low to high.

        Faddeev-LeVerrier; exact over the field.
        """
        r = self.rank
        n = self.conductor
        one = CyclotomicNumber.one(n)
        coeffs = [one]  # leading coefficient
        m = CycMatrix.identity(r, n)
        for k in range(1, r + 1):
            m = self @ m
            c = m.trace() * Fraction(-1, k)
            coeffs.append(c)
            if k < r:
                m = _add_scalar(m, c)
        # coeffs are [1, a_1, ..., a_r] high to low; return low to high
        return list(reversed(coeffs))

    def det(self) -> CyclotomicNumber:
        a_r = self.charpoly()[0]
        return a_r if self.rank % 2 == 0 else -a_r

    def inverse(self) -> "CycMatrix":
        r = self.rank
        n = self.conductor
        aug = [
            list(self.entries[i])
            + [
                CyclotomicNumber.one(n) if i == j else CyclotomicNumber.zero(n)
                for j in range(r)
            ]
            for i in range(r)
        ]
        aug = _row_reduce(aug, r)
        for i in range(r):
            if aug[i][i].is_zero():
                raise NonInvertibleGenerator("matrix is singular")
        return CycMatrix([row[r:] for row in aug])

    def order(self, cap: int = 10000) -> int:
        """Multiplicative order of the matrix; CapExceeded past cap."""
        from .errors import CapExceeded

        ident = CycMatrix.identity(self.rank, self.conductor)
        x = self
        for k in range(1, cap + 1):
            if x == ident:
                return k
            x = x @ self
        raise CapExceeded(f"matrix order exceeds {cap}")

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.conductor != other.conductor:
            n = self.conductor * other.conductor // _gcd(
                self.conductor, other.conductor
            )
            return self.promote(n).entries == other.promote(n).entries
        return self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "CycMatrix(" + "; ".join(
            ", ".join(repr(e) for e in row) for row in self.entries
        ) + ")"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _add_scalar(m: CycMatrix, c: CyclotomicNumber) -> CycMatrix:
    rows = [list(row) for row in m.entries]
    for i in range(m.rank):
        rows[i][i] = rows[i][i] + c
    return CycMatrix(rows)


def _row_reduce(rows: list[list[CyclotomicNumber]], ncols_pivot: int):
    """In-place Gauss-Jordan over the pivot columns; returns rows."""
    nrows = len(rows)
    pivot_row = 0
    for col in range(ncols_pivot):
        pr = None
        for i in range(pivot_row, nrows):
            if not rows[i][col].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [e * inv for e in rows[pivot_row]]
        for i in range(nrows):
            if i != pivot_row and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [
                    a - f * b for a, b in zip(rows[i], rows[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return rows


def nullspace(rows: list[list[CyclotomicNumber]]) -> list[list[CyclotomicNumber]]:
    """Basis of the right nullspace of a (possibly rectangular) matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    conductor = rows[0][0].conductor if rows[0] else 1
    work = [list(r) for r in rows]
    work = _row_reduce(work, ncols)
    pivots = []
    for row in work:
        for j, e in enumerate(row):
            if not e.is_zero():
                pivots.append(j)
                break
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    zero = CyclotomicNumber.zero(conductor)
    one = CyclotomicNumber.one(conductor)
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for i, p in enumerate(pivots):
            vec[p] = -work[i][f]
        basis.append(vec)
    return basis


def matrix_rank(rows: list[list[CyclotomicNumber]]) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    work = _row_reduce([list(r) for r in rows], ncols)
    return sum(1 for row in work if any(not e.is_zero() for e in row))


def rational_matrix_rank(rows: list[list[Fraction]]) -> int:
    """Rank of an integer/rational matrix, exact."""
    if not rows or not rows[0]:
        return 0
    work = [[Fraction(v) for v in row] for row in rows]
    nrows, ncols = len(work), len(work[0])
    rank = 0
    for col in range(ncols):
        pr = None
        for i in range(rank, nrows):
            if work[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for i in range(nrows):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
