"""Exact linear algebra over the rationals.

The workhorse is :func:`sparse_kernel`, which takes the rows of a matrix as
sparse ``{column: value}`` maps.  Rows are first brought to echelon form with
fraction-free integer elimination (rows are scaled to primitive integer
vectors) and the resulting pivot rows are then reduced over ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .ncpoly import Coeff, normalize

SparseRow = Dict[int, Coeff]


def _primitive(row: Dict[int, Coeff]) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row with positive leading entry."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    ints = {c: int(v * den) for c, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


def echelon(rows: Iterable[Mapping[int, Coeff]]) -> Dict[int, Dict[int, int]]:
    """Integer row echelon form: ``{pivot column: primitive row}``.

    Every stored row has its pivot as its smallest column index and no
    entries in earlier pivot columns of rows added before it.
    """
    pivots: Dict[int, Dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        if not row:
            continue
        row = _primitive(row)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = _primitive(row)
                break
            a, b = row[lead], prow[lead]
            g = gcd(a, b)
            sa, sb = b // g, a // g
            new: Dict[int, int] = {}
            for c, v in row.items():
                new[c] = v * sa
            for c, v in prow.items():
                x = new.get(c, 0) - v * sb
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
    return pivots


def _reduced(pivots: Dict[int, Dict[int, int]]) -> Dict[int, Dict[int, Fraction]]:
    """Reduced row echelon form (pivot entries 1, zeros above and below pivots)."""
    order = sorted(pivots, reverse=True)
    done: Dict[int, Dict[int, Fraction]] = {}
    for p in order:
        row = pivots[p]
        lead = row[p]
        cur: Dict[int, Fraction] = {c: Fraction(v, lead) for c, v in row.items()}
        for q in sorted(c for c in cur if c != p and c in done):
            f = cur.get(q)
            if not f:
                continue
            for c, v in done[q].items():
                x = cur.get(c, 0) - f * v
                if x:
                    cur[c] = x
                else:
                    cur.pop(c, None)
        done[p] = cur
    return dict(sorted(done.items()))


def sparse_kernel(rows: Iterable[Mapping[int, Coeff]], ncols: int) -> List[Tuple[Coeff, ...]]:
    """Null space basis of the matrix with the given sparse rows and ``ncols`` columns.

    One vector per non-pivot column ``f``: entry 1 at ``f``, zeros at the other
    free columns.  Vectors are listed by increasing free column.
    """
    rref = _reduced(echelon(rows))
    free = [c for c in range(ncols) if c not in rref]
    out = []
    for f in free:
        vec: List[Coeff] = [0] * ncols
        vec[f] = 1
        for p, row in rref.items():
            v = row.get(f)
            if v:
                vec[p] = normalize(-v)
        out.append(tuple(vec))
    return out


def sparse_rank(rows: Iterable[Mapping[int, Coeff]]) -> int:
    return len(echelon(rows))


def canonical_basis(vectors: Sequence[Sequence[Coeff]]) -> List[Tuple[int, ...]]:
    """Deterministic basis of the span: reduced echelon rows, cleared of denominators.

    Rows are sorted by leading coordinate; each is a primitive integer vector
    with positive leading entry.
    """
    if not vectors:
        return []
    n = len(vectors[0])
    rows = ({i: v for i, v in enumerate(vec) if v} for vec in vectors)
    rref = _reduced(echelon(rows))
    out = []
    for p in sorted(rref):
        prim = _primitive(rref[p])
        out.append(tuple(prim.get(i, 0) for i in range(n)))
    return out


class RationalMatrix:
    """Dense exact-rational matrix (row-major)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        self._data = [tuple(normalize(v) for v in row) for row in data]
        self.rows = len(self._data)
        if cols is None:
            if not self._data:
                raise ValueError("column count is required for an empty matrix")
            cols = len(self._data[0])
        self.cols = cols
        if any(len(r) != cols for r in self._data):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: Tuple[int, int]) -> Coeff:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Tuple[Coeff, ...]:
        return self._data[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def sparse_rows(self) -> List[SparseRow]:
        return [{j: v for j, v in enumerate(r) if v} for r in self._data]

    def rank(self) -> int:
        return sparse_rank(self.sparse_rows())

    def kernel(self) -> List[Tuple[Coeff, ...]]:
        return kernel(self)

    def rref(self) -> "RationalMatrix":
        red = _reduced(echelon(self.sparse_rows()))
        out = [[row.get(j, 0) for j in range(self.cols)] for _, row in sorted(red.items())]
        out += [[0] * self.cols for _ in range(self.rows - len(out))]
        return RationalMatrix(out, self.cols)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(r) for r in self._data]!r})"


def kernel(M: RationalMatrix) -> List[Tuple[Coeff, ...]]:
    """Exact null space basis in reduced echelon form, sorted by leading coordinate."""
    raw = sparse_kernel(M.sparse_rows(), M.cols)
    red = _reduced(echelon({i: v for i, v in enumerate(vec) if v} for vec in raw))
    return [tuple(normalize(row.get(j, 0)) for j in range(M.cols)) for _, row in sorted(red.items())]


def rank(M: RationalMatrix) -> int:
    return M.rank()
