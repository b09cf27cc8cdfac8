"""
Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``{index: value}`` with no stored zeros; values are
``int`` or ``Fraction``.  Matrices are column-major dicts of such vectors.
Row reduction keeps a reduced echelon basis and picks each pivot as the
entry of smallest bit size, which keeps the coefficients small on the
larger spaces.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

Vec = dict


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def to_rational(x) -> Rational:
    """Parse an int, Fraction or ``"num/den"`` string."""
    if isinstance(x, (int, Fraction)):
        return _clean(x)
    if isinstance(x, str):
        return _clean(Fraction(x))
    raise TypeError(f"cannot read {x!r} as a rational")


def rational_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _height(x) -> int:
    if isinstance(x, int):
        return abs(x).bit_length()
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


# ---------------------------------------------------------------------------
# vectors

def vec_add(u: Vec, v: Vec, c=1) -> Vec:
    """``u + c v`` as a new dict."""
    out = dict(u)
    vec_iadd(out, v, c)
    return out


def vec_iadd(u: Vec, v: Vec, c=1) -> None:
    if not c:
        return
    for k, x in v.items():
        y = u.get(k, 0) + c * x
        if y:
            u[k] = _clean(y)
        else:
            u.pop(k, None)


def vec_scale(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: _clean(c * x) for k, x in v.items()}


def vec_from_dense(values) -> Vec:
    return {i: _clean(x) for i, x in enumerate(values) if x}


def vec_to_dense(v: Vec, size: int) -> list:
    out = [0] * size
    for k, x in v.items():
        out[k] = x
    return out


# ---------------------------------------------------------------------------
# matrices

class SparseMatrix:
    """An ``nrows x ncols`` matrix stored column by column."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Mapping[int, Vec] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = {}
        if cols:
            for c, col in cols.items():
                col = {r: _clean(x) for r, x in col.items() if x}
                if col:
                    self.cols[c] = col

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable) -> "SparseMatrix":
        """Build from ``(row, col, value)`` triples; repeated cells add up."""
        cols: dict = {}
        for r, c, x in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            col = cols.setdefault(c, {})
            col[r] = col.get(r, 0) + x
        return cls(nrows, ncols, cols)

    @classmethod
    def from_columns(cls, nrows: int, columns: list) -> "SparseMatrix":
        return cls(nrows, len(columns), {c: v for c, v in enumerate(columns)})

    @classmethod
    def from_dense(cls, rows: list) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls.from_entries(nrows, ncols, ((r, c, x) for r, row in enumerate(rows)
                                               for c, x in enumerate(row) if x))

    def entries(self):
        """``(row, col, value)`` in row-major order."""
        out = [(r, c, x) for c, col in self.cols.items() for r, x in col.items()]
        out.sort()
        return out

    def __getitem__(self, rc):
        r, c = rc
        return self.cols.get(c, {}).get(r, 0)

    def column(self, c: int) -> Vec:
        return self.cols.get(c, {})

    def rows(self) -> list:
        """Row vectors as sparse dicts (index = column)."""
        out = [dict() for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, x in col.items():
                out[r][c] = x
        return out

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for c, x in v.items():
            col = self.cols.get(c)
            if col:
                vec_iadd(out, col, x)
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseMatrix(self.nrows, other.ncols,
                            {c: self.apply(col) for c, col in other.cols.items()})

    def _combine(self, other: "SparseMatrix", c) -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        cols = {k: dict(v) for k, v in self.cols.items()}
        for k, v in other.cols.items():
            col = cols.setdefault(k, {})
            vec_iadd(col, v, c)
        return SparseMatrix(self.nrows, self.ncols, cols)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            {k: vec_scale(v, c) for k, v in self.cols.items()})

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, dict(enumerate(self.rows())))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not self.cols

    def nnz(self) -> int:
        return sum(len(v) for v in self.cols.values())

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.shape == other.shape
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.shape, tuple(self.entries())))

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, x in col.items():
                out[r][c] = x
        return out

    def flatten(self) -> Vec:
        """The matrix as one vector indexed by ``row * ncols + col``."""
        return {r * self.ncols + c: x for c, col in self.cols.items() for r, x in col.items()}

    def submatrix(self, rows: list, cols: list) -> "SparseMatrix":
        rpos = {r: i for i, r in enumerate(rows)}
        out = {}
        for j, c in enumerate(cols):
            col = self.cols.get(c)
            if col:
                out[j] = {rpos[r]: x for r, x in col.items() if r in rpos}
        return SparseMatrix(len(rows), len(cols), out)

    def rank(self) -> int:
        return rank(self.cols.values())

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def block_matrix(blocks: list) -> SparseMatrix:
    """Assemble a matrix from a rectangular grid of blocks (``None`` = zero)."""
    heights = []
    for row in blocks:
        h = next((b.nrows for b in row if b is not None), None)
        if h is None:
            raise ValueError("block row with no block")
        heights.append(h)
    widths = []
    for j in range(len(blocks[0])):
        w = next((row[j].ncols for row in blocks if row[j] is not None), None)
        if w is None:
            raise ValueError("block column with no block")
        widths.append(w)
    entries = []
    r0 = 0
    for i, row in enumerate(blocks):
        c0 = 0
        for j, b in enumerate(row):
            if b is not None:
                entries.extend((r0 + r, c0 + c, x) for r, c, x in b.entries())
            c0 += widths[j]
        r0 += heights[i]
    return SparseMatrix.from_entries(sum(heights), sum(widths), entries)


# ---------------------------------------------------------------------------
# row reduction

class Echelon:
    """A subspace held in reduced row echelon form.

    ``pivots`` maps each pivot index to its basis vector, which has a 1 in
    that position and a 0 in every other pivot position.
    """

    __slots__ = ("pivots", "late")

    def __init__(self, vectors: Iterable[Vec] = (), late: int | None = None):
        # indices >= late become pivots only when nothing else is left
        self.pivots: dict = {}
        self.late = late
        for v in vectors:
            self.add(v)

    def copy(self) -> "Echelon":
        e = Echelon(late=self.late)
        e.pivots = {p: dict(b) for p, b in self.pivots.items()}
        return e

    def reduce(self, v: Vec) -> Vec:
        out = dict(v)
        hits = [p for p in out if p in self.pivots]
        for p in hits:
            c = out.get(p, 0)
            if c:
                vec_iadd(out, self.pivots[p], -c)
        return out

    def add(self, v: Vec):
        """Insert ``v``; returns the new basis vector, or None if dependent."""
        r = self.reduce(v)
        if not r:
            return None
        cands = [k for k in r if self.late is None or k < self.late] or list(r)
        p = min(cands, key=lambda k: (_height(r[k]), k))
        piv = r[p]
        if piv != 1:
            r = {k: _clean(Fraction(x) / piv) for k, x in r.items()}
        for b in self.pivots.values():
            c = b.get(p, 0)
            if c:
                vec_iadd(b, r, -c)
        self.pivots[p] = r
        return r

    def __contains__(self, v: Vec) -> bool:
        return not self.reduce(v)

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis(self) -> list:
        return [self.pivots[p] for p in sorted(self.pivots)]

    def pivot_list(self) -> list:
        return sorted(self.pivots)

    def coords(self, v: Vec) -> dict:
        """Coordinates of ``v`` (assumed in the span) keyed by pivot index."""
        return {p: v[p] for p in self.pivots if p in v}


def rank(vectors: Iterable[Vec]) -> int:
    return Echelon(vectors).rank


def nullspace(rows: Iterable[Vec], ncols: int) -> list:
    """Basis of ``{x : row . x = 0 for every row}``.

    The basis vector attached to a free index ``f`` has ``x[f] = 1`` and
    vanishes on every other free index, so the coordinates of a solution
    are its values on the free indices.
    """
    ech = Echelon(rows)
    free = [c for c in range(ncols) if c not in ech.pivots]
    fpos = {f: i for i, f in enumerate(free)}
    basis = [{f: 1} for f in free]
    for p, b in ech.pivots.items():
        for c, x in b.items():
            if c != p:
                basis[fpos[c]][p] = _clean(-x)
    return basis, free


def solve(rows: list, rhs: list, ncols: int):
    """One solution of ``rows . x = rhs`` or None if inconsistent."""
    aug = ncols
    ech = Echelon(late=aug)
    for row, b in zip(rows, rhs):
        v = dict(row)
        if b:
            v[aug] = _clean(b)
        ech.add(v)
    if aug in ech.pivots:
        return None
    x: Vec = {}
    for p, b in ech.pivots.items():
        c = b.get(aug, 0)
        if c:
            x[p] = c
    return x
