"""Dense exact linear algebra over Q(rho).

Matrices store integer coordinate pairs over one shared positive denominator,
so elimination can run fraction-free (Montante/Bareiss) and products stay in
integer arithmetic.  A mod-p rank certificate (numpy, int64) accelerates
span_dimension; every non-certified case falls back to exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .field import EisensteinRational, parse_scalar, render

Scalar = Union[EisensteinRational, int, Fraction]

# Primes p = 1 (mod 3) with 144*p^2 < 2^63, paired with a cube root of unity
# mod p, so Z[rho] maps into GF(p) and 12x12 products cannot overflow int64.
_MODP_WITNESSES = ((252209047, 198893897), (252208981, 100820147))


class SingularMatrixError(ValueError):
    """Matrix has no inverse; callers may retry with a fresh specialization."""


def _pair(value: Scalar) -> tuple[Fraction, Fraction]:
    if isinstance(value, EisensteinRational):
        return value.re, value.rho
    return Fraction(value), Fraction(0)


def _gcd_all(den: int, ints: Iterable[int]) -> int:
    g = den
    for x in ints:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return 1
    return g


class ExactMatrix:
    """Immutable dense matrix over Q(rho)."""

    __slots__ = ("rows", "cols", "_a", "_b", "_den")

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        pairs = []
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows in matrix literal")
            pairs.extend(_pair(v) for v in row)
        den = 1
        for re, rho in pairs:
            den = den * re.denominator // math.gcd(den, re.denominator)
            den = den * rho.denominator // math.gcd(den, rho.denominator)
        a = [int(re * den) for re, _ in pairs]
        b = [int(rho * den) for _, rho in pairs]
        self._init_raw(rows, cols, a, b, den)

    def _init_raw(self, rows: int, cols: int, a: list[int], b: list[int], den: int) -> None:
        if den < 0:
            den, a, b = -den, [-x for x in a], [-x for x in b]
        g = _gcd_all(den, a)
        if g > 1:
            g = _gcd_all(g, b)
        if g > 1:
            den //= g
            a = [x // g for x in a]
            b = [x // g for x in b]
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def _raw(cls, rows: int, cols: int, a: list[int], b: list[int], den: int) -> ExactMatrix:
        m = cls.__new__(cls)
        m._init_raw(rows, cols, a, b, den)
        return m

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        a = [0] * (n * n)
        for i in range(n):
            a[i * n + i] = 1
        return cls._raw(n, n, a, [0] * (n * n), 1)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls._raw(rows, cols, [0] * (rows * cols), [0] * (rows * cols), 1)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> ExactMatrix:
        n = len(values)
        grid = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(grid)

    def entry(self, i: int, j: int) -> EisensteinRational:
        k = i * self.cols + j
        return EisensteinRational(
            Fraction(self._a[k], self._den), Fraction(self._b[k], self._den)
        )

    def __getitem__(self, key: tuple[int, int]) -> EisensteinRational:
        return self.entry(*key)

    def to_lists(self) -> list[list[EisensteinRational]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        # _init_raw normalizes, so representations are canonical
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._den == other._den
            and self._a == other._a
            and self._b == other._b
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, den={self._den})"

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        g = math.gcd(self._den, other._den)
        ls, lo = other._den // g, self._den // g
        a = [x * ls + y * lo for x, y in zip(self._a, other._a)]
        b = [x * ls + y * lo for x, y in zip(self._b, other._b)]
        return ExactMatrix._raw(self.rows, self.cols, a, b, self._den * ls)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix._raw(
            self.rows, self.cols, [-x for x in self._a], [-x for x in self._b], self._den
        )

    def __mul__(self, scalar: Scalar) -> ExactMatrix:
        re, rho = _pair(scalar)
        s = (re.denominator * rho.denominator) // math.gcd(
            re.denominator, rho.denominator
        )
        p, q = int(re * s), int(rho * s)
        a = [p * x - q * y for x, y in zip(self._a, self._b)]
        b = [p * y + q * x - q * y for x, y in zip(self._a, self._b)]
        return ExactMatrix._raw(self.rows, self.cols, a, b, self._den * s)

    __rmul__ = __mul__

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m, k = self.rows, other.cols, self.cols
        sa, sb, oa, ob = self._a, self._b, other._a, other._b
        a = [0] * (n * m)
        b = [0] * (n * m)
        for i in range(n):
            base = i * k
            for j in range(m):
                acc_a = 0
                acc_b = 0
                for t in range(k):
                    x, y = sa[base + t], sb[base + t]
                    u, v = oa[t * m + j], ob[t * m + j]
                    acc_a += x * u - y * v
                    acc_b += x * v + y * u - y * v
                a[i * m + j] = acc_a
                b[i * m + j] = acc_b
        return ExactMatrix._raw(n, m, a, b, self._den * other._den)

    def __pow__(self, exponent: int) -> ExactMatrix:
        if self.rows != self.cols:
            raise ValueError("only square matrices can be raised to a power")
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = ExactMatrix.identity(self.rows)
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def trace(self) -> EisensteinRational:
        if self.rows != self.cols:
            raise ValueError(f"trace of non-square {self.rows}x{self.cols} matrix")
        n = self.cols
        ta = sum(self._a[i * n + i] for i in range(n))
        tb = sum(self._b[i * n + i] for i in range(n))
        return EisensteinRational(Fraction(ta, self._den), Fraction(tb, self._den))

    def is_zero(self) -> bool:
        return not (any(self._a) or any(self._b))

    def _elimination(self, augment: bool) -> tuple:
        """Fraction-free Gauss-Jordan on the integer part (Montante scheme).

        Returns (swap_sign, last_pivot, table) where table is the final
        augmented grid of coordinate pairs; the left block ends as pivot*I.
        """
        n = self.rows
        width = 2 * n if augment else n
        table = []
        for i in range(n):
            row = [(self._a[i * n + j], self._b[i * n + j]) for j in range(n)]
            if augment:
                row += [(1, 0) if j == i else (0, 0) for j in range(n)]
            table.append(row)
        sign = 1
        prev = (1, 0)
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if table[r][col] != (0, 0):
                    pivot_row = r
                    break
            if pivot_row is None:
                raise SingularMatrixError(
                    f"matrix is singular (no pivot in column {col})"
                )
            if pivot_row != col:
                table[col], table[pivot_row] = table[pivot_row], table[col]
                sign = -sign
            pa, pb = table[col][col]
            pr = table[col]
            ga, gb = prev
            prev_is_one = (ga, gb) == (1, 0)
            gn = ga * ga - ga * gb + gb * gb
            gca = ga - gb
            targets = range(n) if augment else range(col + 1, n)
            for r in targets:
                if r == col:
                    continue
                fa, fb = table[r][col]
                row = table[r]
                for c in range(width):
                    xa, xb = row[c]
                    ya, yb = pr[c]
                    # pivot*x - factor*pivot_row_entry, then exact /prev
                    za = (pa * xa - pb * xb) - (fa * ya - fb * yb)
                    zb = (pa * xb + pb * xa - pb * xb) - (fa * yb + fb * ya - fb * yb)
                    if prev_is_one:
                        row[c] = (za, zb)
                    else:
                        wa = za * gca + zb * gb  # z * conj(prev), re part
                        wb = zb * ga - za * gb
                        qa, ra_ = divmod(wa, gn)
                        qb, rb_ = divmod(wb, gn)
                        if ra_ or rb_:
                            raise ArithmeticError("non-exact division in elimination")
                        row[c] = (qa, qb)
                row[col] = (0, 0)
            prev = (pa, pb)
        return sign, prev, table

    def determinant(self) -> EisensteinRational:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return EisensteinRational(1)
        try:
            sign, (pa, pb), _ = self._elimination(augment=False)
        except SingularMatrixError:
            return EisensteinRational(0)
        d = self._den ** self.rows
        return EisensteinRational(Fraction(sign * pa, d), Fraction(sign * pb, d))

    def inverse(self) -> ExactMatrix:
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        if n == 0:
            return self
        _, (pa, pb), table = self._elimination(augment=True)
        # left block is now pivot*I, right block is pivot * M_int^{-1};
        # multiply by conj(pivot) to make the denominator a rational integer
        norm = pa * pa - pa * pb + pb * pb
        ca, cb = pa - pb, -pb
        den = self._den
        a = [0] * (n * n)
        b = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                xa, xb = table[i][n + j]
                a[i * n + j] = den * (xa * ca - xb * cb)
                b[i * n + j] = den * (xa * cb + xb * ca - xb * cb)
        return ExactMatrix._raw(n, n, a, b, norm)

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [render(self.entry(i, j)) for j in range(self.cols)]
                for i in range(self.rows)
            ],
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> ExactMatrix:
        rows, cols = int(payload["rows"]), int(payload["cols"])
        entries = payload["entries"]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match declared rows/cols")
        return cls([[parse_scalar(text) for text in row] for row in entries])


@dataclass(frozen=True)
class BlockLayout:
    """Named block sizes along rows and columns of an assembled matrix."""

    row_blocks: tuple[tuple[str, int], ...]
    col_blocks: tuple[tuple[str, int], ...]

    def __init__(
        self,
        row_blocks: Iterable[tuple[str, int]],
        col_blocks: Iterable[tuple[str, int]],
    ):
        object.__setattr__(self, "row_blocks", tuple(row_blocks))
        object.__setattr__(self, "col_blocks", tuple(col_blocks))

    @property
    def rows(self) -> int:
        return sum(size for _, size in self.row_blocks)

    @property
    def cols(self) -> int:
        return sum(size for _, size in self.col_blocks)


class _BlockMarker:
    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


IDENTITY = _BlockMarker("IDENTITY")
ZERO = _BlockMarker("ZERO")


def assemble_blocks(
    layout: BlockLayout,
    blocks: Mapping[tuple[str, str], Union[ExactMatrix, _BlockMarker]],
) -> ExactMatrix:
    """Build a flat matrix from named blocks; missing blocks are zero."""
    row_offsets = {}
    offset = 0
    for label, size in layout.row_blocks:
        row_offsets[label] = (offset, size)
        offset += size
    total_rows = offset
    col_offsets = {}
    offset = 0
    for label, size in layout.col_blocks:
        col_offsets[label] = (offset, size)
        offset += size
    total_cols = offset

    grid: list[list[Scalar]] = [[0] * total_cols for _ in range(total_rows)]
    for (rlabel, clabel), block in blocks.items():
        if rlabel not in row_offsets or clabel not in col_offsets:
            raise ValueError(f"unknown block {(rlabel, clabel)} for this layout")
        r0, rsize = row_offsets[rlabel]
        c0, csize = col_offsets[clabel]
        if block is ZERO:
            continue
        if block is IDENTITY:
            if rsize != csize:
                raise ValueError(
                    f"block {(rlabel, clabel)} is {rsize}x{csize}, identity needs square"
                )
            for i in range(rsize):
                grid[r0 + i][c0 + i] = 1
            continue
        if (block.rows, block.cols) != (rsize, csize):
            raise ValueError(
                f"block {(rlabel, clabel)} is {block.rows}x{block.cols}, "
                f"layout wants {rsize}x{csize}"
            )
        for i in range(rsize):
            for j in range(csize):
                grid[r0 + i][c0 + j] = block.entry(i, j)
    return ExactMatrix(grid)


def _span_dimension_mod_p(
    generators: Sequence[ExactMatrix], n: int, p: int, root: int
) -> int | None:
    """Rank of the generated algebra over GF(p), or None if p divides a denominator.

    The mod-p rank is at most the exact rank, so a full n^2 certifies the
    exact answer; anything less is inconclusive.
    """
    images = []
    for g in generators:
        if g._den % p == 0:
            return None
        inv_den = pow(g._den, -1, p)
        flat = [
            (a + root * b) % p * inv_den % p for a, b in zip(g._a, g._b)
        ]
        images.append(np.array(flat, dtype=np.int64).reshape(n, n))

    size = n * n
    basis = np.zeros((size, size), dtype=np.int64)
    pivots: list[int] = []

    def reduce_and_insert(vec: np.ndarray) -> np.ndarray | None:
        if pivots:
            coeffs = vec[pivots]
            vec = (vec - coeffs @ basis[: len(pivots)]) % p
        nz = np.nonzero(vec)[0]
        if nz.size == 0:
            return None
        lead = int(nz[0])
        vec = vec * pow(int(vec[lead]), -1, p) % p
        rows = basis[: len(pivots)]
        col = rows[:, lead]
        mask = col != 0
        if mask.any():
            rows[mask] = (rows[mask] - np.outer(col[mask], vec)) % p
        basis[len(pivots)] = vec
        pivots.append(lead)
        return vec

    frontier = []
    eye = np.zeros(size, dtype=np.int64)
    eye[:: n + 1] = 1
    for seed in [eye] + [m.reshape(-1) % p for m in images]:
        added = reduce_and_insert(seed.copy())
        if added is not None:
            frontier.append(added.reshape(n, n))
    while frontier and len(pivots) < size:
        current = frontier.pop()
        for img in images:
            candidate = (img @ current) % p
            added = reduce_and_insert(candidate.reshape(-1))
            if added is not None:
                frontier.append(added.reshape(n, n))
                if len(pivots) == size:
                    return size
    return len(pivots)


def _span_dimension_exact(generators: Sequence[ExactMatrix], n: int) -> int:
    size = n * n
    basis: list[list[EisensteinRational]] = []
    pivots: list[int] = []

    def reduce_and_insert(vec: list[EisensteinRational]):
        for row, lead in zip(basis, pivots):
            c = vec[lead]
            if c:
                for k in range(size):
                    if row[k]:
                        vec[k] = vec[k] - c * row[k]
        lead = next((k for k in range(size) if vec[k]), None)
        if lead is None:
            return None
        inv = vec[lead].inverse()
        vec = [v * inv for v in vec]
        for row, rl in zip(basis, pivots):
            c = row[lead]
            if c:
                for k in range(size):
                    if vec[k]:
                        row[k] = row[k] - c * vec[k]
        basis.append(vec)
        pivots.append(lead)
        return vec

    gens = [g.to_lists() for g in generators]
    identity = ExactMatrix.identity(n).to_lists()

    def flatten(mat: list[list[EisensteinRational]]) -> list[EisensteinRational]:
        return [mat[i][j] for i in range(n) for j in range(n)]

    def matmul(x: list[list[EisensteinRational]], y: list[list[EisensteinRational]]):
        return [
            [
                sum((x[i][t] * y[t][j] for t in range(n)), EisensteinRational(0))
                for j in range(n)
            ]
            for i in range(n)
        ]

    frontier = []
    for seed in [identity] + gens:
        added = reduce_and_insert(flatten(seed))
        if added is not None:
            frontier.append([added[i * n : (i + 1) * n] for i in range(n)])
    while frontier and len(pivots) < size:
        current = frontier.pop()
        for g in gens:
            added = reduce_and_insert(flatten(matmul(g, current)))
            if added is not None:
                frontier.append([added[i * n : (i + 1) * n] for i in range(n)])
    return len(pivots)


def span_dimension(generators: Sequence[ExactMatrix], ambient: int) -> int:
    """Dimension of the unital algebra spanned by {I} + generators.

    Closes the linear span under left multiplication by the generators.  A
    mod-p full-rank result is a valid certificate (mod-p rank never exceeds
    the exact rank); all other outcomes are recomputed exactly.
    """
    for g in generators:
        if (g.rows, g.cols) != (ambient, ambient):
            raise ValueError(f"generator is {g.rows}x{g.cols}, expected {ambient}x{ambient}")
    if ambient == 0:
        return 0
    if not generators:
        return 1
    for p, root in _MODP_WITNESSES:
        rank = _span_dimension_mod_p(generators, ambient, p, root)
        if rank == ambient * ambient:
            return rank
        if rank is not None:
            break
    return _span_dimension_exact(generators, ambient)
