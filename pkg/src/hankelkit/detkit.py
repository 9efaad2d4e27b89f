"""Exact dense matrices and three interchangeable determinant engines.

Engines:

* ``laplace`` - cofactor expansion, capped at 8x8; the brute-force reference
  the other engines are checked against.
* ``bareiss`` - fraction-free elimination, the default workhorse. Rows are
  scaled to integers first, so intermediate values stay integral and every
  division is exact.
* ``dodgson`` - condensation by 2x2 blocks. Each step divides by an interior
  entry of the layer two steps back; if one of those divisors is zero the
  whole computation falls back to ``bareiss`` (deterministic, unlike the
  classical re-randomization workaround) and the fallback is recorded.

All engines return identical exact values on every square matrix. The module
also builds Hankel matrices and the column-deleted moment matrices described
by :class:`DSpec`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NotSquare, SizeCapExceeded, SpecOutOfRange
from .scalars import as_rational, format_rational

ENGINES = ("laplace", "bareiss", "dodgson")
LAPLACE_SIZE_CAP = 8


class DenseMatrix:
    """Immutable row-major matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        entries = tuple(as_rational(e) for e in entries)
        if rows * cols != len(entries):
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__  # noqa: B018 -- slots class, plain assignment below
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("need at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("all rows must have the same length")
        return cls(len(rows), width, [e for row in rows for e in row])

    def __getitem__(self, key):
        r, c = key
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols} matrix")
        return self.entries[r * self.cols + c]

    def row(self, r) -> tuple:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def to_rows(self) -> list:
        """Mutable copy as a list of row lists."""
        return [list(self.row(r)) for r in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            self.cols,
            self.rows,
            [self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows)],
        )

    def with_swapped_rows(self, i, j) -> "DenseMatrix":
        """New matrix with rows i and j exchanged."""
        rows = self.to_rows()
        rows[i], rows[j] = rows[j], rows[i]
        return DenseMatrix.from_rows(rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(format_rational(e) for e in self.row(r)) for r in range(self.rows)
        )
        return f"DenseMatrix({self.rows}x{self.cols}: {body})"

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [format_rational(e) for e in self.entries],
        }

    @classmethod
    def from_dict(cls, doc) -> "DenseMatrix":
        if not isinstance(doc, dict):
            raise ValueError("matrix document must be a JSON object")
        try:
            rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
        except KeyError as exc:
            raise ValueError(f"matrix document missing key {exc}") from None
        if not isinstance(rows, int) or not isinstance(cols, int) or not isinstance(entries, list):
            raise ValueError("matrix document needs integer dims and an entry list")
        return cls(rows, cols, entries)


@dataclass(frozen=True)
class DetResult:
    """Determinant value plus how it was obtained.

    ``max_numer_bits`` is the largest numerator bit length among the scalars
    the engine produced along the way (inputs included), a proxy for
    intermediate expression swell.
    """

    value: Fraction
    engine: str
    fallback: bool
    max_numer_bits: int

    def to_dict(self) -> dict:
        return {
            "value": format_rational(self.value),
            "engine": self.engine,
            "fallback": self.fallback,
        }


def _require_square(matrix):
    if not matrix.is_square():
        raise NotSquare(f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}")


def _note(track, value):
    # track is a one-cell list holding the max numerator bit length so far
    if track is not None:
        bits = (value.numerator if isinstance(value, Fraction) else value).bit_length()
        if bits > track[0]:
            track[0] = bits


def laplace_det(matrix: DenseMatrix) -> Fraction:
    """Determinant by cofactor expansion along the first row.

    Factorial cost, hence the size cap; useful exactly because it is too
    simple to be wrong.
    """
    return _laplace_checked(matrix, None)


def _laplace_checked(matrix, track):
    _require_square(matrix)
    if matrix.rows > LAPLACE_SIZE_CAP:
        raise SizeCapExceeded(
            f"laplace engine is capped at {LAPLACE_SIZE_CAP}x{LAPLACE_SIZE_CAP}, "
            f"got {matrix.rows}x{matrix.rows}"
        )
    return _laplace(matrix.to_rows(), track)


def _laplace(rows, track):
    n = len(rows)
    if n == 1:
        _note(track, rows[0][0])
        return rows[0][0]
    total = Fraction(0)
    top = rows[0]
    rest = rows[1:]
    sign = 1
    for c in range(n):
        if top[c]:
            minor = [row[:c] + row[c + 1 :] for row in rest]
            term = sign * top[c] * _laplace(minor, track)
            _note(track, term)
            total += term
            _note(track, total)
        sign = -sign
    return total


def bareiss_det(matrix: DenseMatrix) -> Fraction:
    """Determinant by fraction-free elimination with row-swap pivoting."""
    _require_square(matrix)
    return _bareiss(matrix.to_rows(), None)


def _bareiss(rows, track):
    n = len(rows)
    # clear denominators row by row; det scales by the product of the lcms
    scale = 1
    grid = []
    for row in rows:
        mult = lcm(*(e.denominator for e in row))
        scale *= mult
        grid.append([int(e * mult) for e in row])
        for v in grid[-1]:
            _note(track, v)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if grid[k][k] == 0:
            for i in range(k + 1, n):
                if grid[i][k]:
                    grid[k], grid[i] = grid[i], grid[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = grid[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: classical Bareiss invariant
                value = (pivot * grid[i][j] - grid[i][k] * grid[k][j]) // prev
                grid[i][j] = value
                _note(track, value)
        prev = pivot
    return Fraction(sign * grid[-1][-1], scale)


def dodgson_det(matrix: DenseMatrix) -> Fraction:
    """Determinant by condensation; falls back to bareiss on zero interiors."""
    value, _ = _dodgson_or_fallback(matrix, None)
    return value


def _dodgson_or_fallback(matrix, track):
    _require_square(matrix)
    rows = matrix.to_rows()
    condensed = _condense(rows, track)
    if condensed is None:
        return _bareiss(matrix.to_rows(), track), True
    return condensed, False


def _condense(rows, track):
    n = len(rows)
    for row in rows:
        for v in row:
            _note(track, v)
    if n == 1:
        return rows[0][0]
    prev = rows
    cur = [
        [prev[i][j] * prev[i + 1][j + 1] - prev[i][j + 1] * prev[i + 1][j] for j in range(n - 1)]
        for i in range(n - 1)
    ]
    for row in cur:
        for v in row:
            _note(track, v)
    while len(cur) > 1:
        size = len(cur) - 1
        nxt = [[None] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                divisor = prev[i + 1][j + 1]
                if divisor == 0:
                    return None
                value = (
                    cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                ) / divisor
                nxt[i][j] = value
                _note(track, value)
        prev, cur = cur, nxt
    return cur[0][0]


def det(matrix: DenseMatrix, engine: str = "auto") -> Fraction:
    """Dispatch to one of the engines; ``auto`` means bareiss."""
    return det_full(matrix, engine).value


def det_full(matrix: DenseMatrix, engine: str = "auto") -> DetResult:
    """Like :func:`det` but returns the value with engine metadata."""
    name = "bareiss" if engine == "auto" else engine
    track = [0]
    fallback = False
    if name == "laplace":
        value = _laplace_checked(matrix, track)
    elif name == "bareiss":
        _require_square(matrix)
        value = _bareiss(matrix.to_rows(), track)
    elif name == "dodgson":
        value, fallback = _dodgson_or_fallback(matrix, track)
    else:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES} or 'auto'")
    return DetResult(value, name, fallback, track[0])


def hankel_matrix(seq, offset: int, size: int) -> DenseMatrix:
    """The size x size matrix with entry (i, j) = seq(i + j + offset)."""
    if offset < 0:
        raise ValueError(f"need offset >= 0, got {offset}")
    if size < 1:
        raise ValueError(f"need size >= 1, got {size}")
    return DenseMatrix(size, size, [seq(i + j + offset) for i in range(size) for j in range(size)])


@dataclass(frozen=True)
class DSpec:
    """Parameters of a column-deleted moment determinant.

    The underlying matrix takes moment columns a..b, deletes column j, keeps
    rows 0..b-a-1 (entry = moment(column + row)) and adds ``lam`` to the
    bottom-right entry only. For j outside [a, b] no matrix exists and the
    determinant is 0 by convention.
    """

    j: int
    a: int
    b: int
    lam: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))

    @property
    def size(self) -> int:
        return self.b - self.a


def d_matrix(seq, spec: DSpec) -> DenseMatrix:
    """The matrix behind a :class:`DSpec`; needs moments up to 2b-a-1."""
    if spec.a < 0:
        raise SpecOutOfRange(f"need a >= 0, got a={spec.a}")
    if spec.b <= spec.a:
        raise SpecOutOfRange(f"need b > a for a nonempty matrix, got a={spec.a}, b={spec.b}")
    if spec.j < spec.a or spec.j > spec.b:
        raise SpecOutOfRange(
            f"column j={spec.j} outside [{spec.a}, {spec.b}]; "
            "no matrix exists there (d_det defines the value as 0)"
        )
    cols = [c for c in range(spec.a, spec.b + 1) if c != spec.j]
    size = spec.b - spec.a
    entries = [seq(c + r) for r in range(size) for c in cols]
    if spec.lam:
        entries[-1] = entries[-1] + spec.lam
    return DenseMatrix(size, size, entries)


def d_det(seq, spec: DSpec, engine: str = "auto") -> Fraction:
    """Determinant of the spec'd matrix; 0 by convention for j outside [a, b].

    The degenerate b == a case (empty matrix) evaluates to 1 so that the
    lambda-affinity relation holds down to 1x1 matrices.
    """
    if spec.a < 0 or spec.b < spec.a:
        raise SpecOutOfRange(f"need 0 <= a <= b, got a={spec.a}, b={spec.b}")
    if spec.j < spec.a or spec.j > spec.b:
        return Fraction(0)
    if spec.b == spec.a:
        return Fraction(1)
    return det(d_matrix(seq, spec), engine)
