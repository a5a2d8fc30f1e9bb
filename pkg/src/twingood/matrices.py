"""Exact matrices over commutative supported rings.

Provides arithmetic, determinants, inversion, and two-sided diagonal
reduction P*M*Q = D with invertible P, Q.  Entries stay in the ring's
canonical value format; all arithmetic is exact (Python integers
underneath, no floating point, no overflow).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConstructionVerificationFailed,
    NotSquare,
    RingMismatch,
    ShapeMismatch,
    UnsupportedRing,
)
from .rings import ProductRing, Ring, Zmod, crt_combine, factorize


class Matrix:
    """Immutable rectangular matrix over a commutative ring."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows):
        if not ring.commutative:
            raise UnsupportedRing(f"matrices take commutative scalar rings, got {ring}")
        rows = tuple(tuple(row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeMismatch("ragged rows")
        try:
            rows = tuple(tuple(ring.canon(x) for x in row) for row in rows)
        except ValueError as exc:
            raise RingMismatch(str(exc)) from None
        self.ring = ring
        self.rows = rows

    @classmethod
    def _wrap(cls, ring, rows):
        # internal fast path: rows are already canonical tuples
        m = object.__new__(cls)
        m.ring = ring
        m.rows = rows
        return m

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero(), ring.one()
        return cls._wrap(ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, ring: Ring, nrows: int, ncols: int) -> "Matrix":
        z = ring.zero()
        return cls._wrap(ring, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def diagonal(cls, ring: Ring, entries) -> "Matrix":
        entries = [ring.canon(e) for e in entries]
        z = ring.zero()
        n = len(entries)
        return cls._wrap(ring, tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix) and other.ring == self.ring and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return f"Matrix({self.ring}, {[list(r) for r in self.rows]})"

    def _check_same_ring(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check_same_ring(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} + {other.nrows}x{other.ncols}")
        add = self.ring.add
        return Matrix._wrap(
            self.ring,
            tuple(tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __sub__(self, other):
        self._check_same_ring(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} - {other.nrows}x{other.ncols}")
        sub = self.ring.sub
        return Matrix._wrap(
            self.ring,
            tuple(tuple(sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __neg__(self):
        neg = self.ring.neg
        return Matrix._wrap(self.ring, tuple(tuple(neg(x) for x in row) for row in self.rows))

    def __matmul__(self, other):
        self._check_same_ring(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        dot = self.ring.dot
        cols = tuple(zip(*other.rows)) if other.rows else ()
        return Matrix._wrap(
            self.ring, tuple(tuple(dot(row, col) for col in cols) for row in self.rows)
        )

    def transpose(self):
        return Matrix._wrap(self.ring, tuple(zip(*self.rows)) if self.rows else ())

    def is_diagonal(self) -> bool:
        z = self.ring.zero()
        return all(x == z for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j)

    def diagonal_entries(self) -> list:
        return [self.rows[i][i] for i in range(min(self.nrows, self.ncols))]

    # -- determinant -------------------------------------------------------

    def det(self):
        if not self.is_square:
            raise NotSquare(f"{self.nrows}x{self.ncols}")
        n = self.nrows
        ring = self.ring
        if n == 0:
            return ring.one()
        if n <= 4:
            return _det_cofactor(ring, self.rows)
        if isinstance(ring, ProductRing):
            comps = _product_split(self)
            return tuple(c.det() for c in comps)
        if ring.is_field:
            return _det_gauss(ring, self.rows)
        if isinstance(ring, Zmod):
            # lift to plain integers, run fraction-free elimination, reduce
            return _det_bareiss([[int(x) for x in row] for row in self.rows]) % ring.n
        raise UnsupportedRing(str(ring))

    def adjugate(self) -> "Matrix":
        """Transpose of the cofactor matrix; M * adj(M) = det(M) * I."""
        if not self.is_square:
            raise NotSquare(f"{self.nrows}x{self.ncols}")
        n = self.nrows
        ring = self.ring
        if n == 0:
            return self
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = tuple(
                    tuple(x for cj, x in enumerate(row) if cj != j)
                    for ri, row in enumerate(self.rows)
                    if ri != i
                )
                c = _det_cofactor(ring, minor) if n - 1 <= 4 else Matrix._wrap(ring, minor).det()
                out[j][i] = c if (i + j) % 2 == 0 else ring.neg(c)
        return Matrix._wrap(ring, tuple(tuple(r) for r in out))

    # -- inversion ---------------------------------------------------------

    def invert(self):
        """Two-sided inverse, or None when det is not a unit."""
        if not self.is_square:
            raise NotSquare(f"{self.nrows}x{self.ncols}")
        ring = self.ring
        n = self.nrows
        if n == 0:
            return self
        if isinstance(ring, ProductRing):
            invs = []
            for comp in _product_split(self):
                inv = comp.invert()
                if inv is None:
                    return None
                invs.append(inv)
            return _product_join(ring, invs)
        if ring.is_field:
            rows = _gauss_jordan(ring, self.rows, lambda x: x != ring.zero())
            return None if rows is None else Matrix._wrap(ring, rows)
        if isinstance(ring, Zmod):
            fac = factorize(ring.n)
            if len(fac) == 1:
                p = fac[0][0]
                rows = _gauss_jordan(ring, self.rows, lambda x: x % p != 0)
                return None if rows is None else Matrix._wrap(ring, rows)
            invs = []
            for comp in _crt_split(self):
                inv = comp.invert()
                if inv is None:
                    return None
                invs.append(inv)
            return _crt_join(ring, invs)
        raise UnsupportedRing(str(ring))

    def is_invertible(self) -> bool:
        return self.ring.is_unit(self.det())


# function-style aliases for the operator methods
def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return a - b


def identity(ring: Ring, n: int) -> Matrix:
    return Matrix.identity(ring, n)


def zero(ring: Ring, nrows: int, ncols: int) -> Matrix:
    return Matrix.zeros(ring, nrows, ncols)


def random_matrix(ring: Ring, nrows: int, ncols: int, rng) -> Matrix:
    """Uniform random matrix; deterministic given the rng state."""
    return Matrix._wrap(
        ring, tuple(tuple(ring.random_element(rng) for _ in range(ncols)) for _ in range(nrows))
    )


# ---------------------------------------------------------------------------
# determinant / inversion internals


def _det_cofactor(ring, rows):
    n = len(rows)
    if n == 0:
        return ring.one()
    if n == 1:
        return rows[0][0]
    if n == 2:
        return ring.sub(ring.mul(rows[0][0], rows[1][1]), ring.mul(rows[0][1], rows[1][0]))
    acc = ring.zero()
    for j, x in enumerate(rows[0]):
        if x == ring.zero():
            continue
        minor = tuple(tuple(y for cj, y in enumerate(row) if cj != j) for row in rows[1:])
        term = ring.mul(x, _det_cofactor(ring, minor))
        acc = ring.add(acc, term) if j % 2 == 0 else ring.sub(acc, term)
    return acc


def _det_gauss(ring, rows):
    n = len(rows)
    m = [list(r) for r in rows]
    det = ring.one()
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != ring.zero()), None)
        if pivot is None:
            return ring.zero()
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = ring.neg(det)
        det = ring.mul(det, m[k][k])
        inv = ring.unit_inverse(m[k][k])
        for i in range(k + 1, n):
            if m[i][k] == ring.zero():
                continue
            f = ring.mul(m[i][k], inv)
            m[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(m[i], m[k])]
    return det


def _det_bareiss(m):
    """Fraction-free determinant of an integer matrix (exact divisions)."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _gauss_jordan(ring, rows, pivot_ok):
    """Invert via row reduction, pivoting only on entries where pivot_ok.

    Correct whenever unit entries are exactly those passing pivot_ok and the
    ring is local (fields, Z/p^k): an invertible matrix always offers a unit
    pivot in every elimination column.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    b = [list(r) for r in Matrix.identity(ring, n).rows]
    for k in range(n):
        pivot = next((i for i in range(k, n) if pivot_ok(a[i][k])), None)
        if pivot is None:
            return None
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            b[k], b[pivot] = b[pivot], b[k]
        inv = ring.unit_inverse(a[k][k])
        a[k] = [ring.mul(inv, x) for x in a[k]]
        b[k] = [ring.mul(inv, x) for x in b[k]]
        for i in range(n):
            if i == k or a[i][k] == ring.zero():
                continue
            f = a[i][k]
            a[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[i], a[k])]
            b[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(b[i], b[k])]
    return tuple(tuple(r) for r in b)


# ---------------------------------------------------------------------------
# component splitting (products and CRT)


def _product_split(m: Matrix) -> list[Matrix]:
    ring = m.ring
    out = []
    for idx, comp in enumerate(ring.components):
        out.append(Matrix._wrap(comp, tuple(tuple(x[idx] for x in row) for row in m.rows)))
    return out


def _product_join(ring: ProductRing, mats) -> Matrix:
    rows = []
    for rowparts in zip(*(mm.rows for mm in mats)):
        rows.append(tuple(tuple(vals) for vals in zip(*rowparts)))
    if not mats[0].rows:
        rows = []
    return Matrix._wrap(ring, tuple(rows))


def _crt_split(m: Matrix) -> list[Matrix]:
    n = m.ring.n
    out = []
    for p, e in factorize(n):
        q = p**e
        out.append(Matrix._wrap(Zmod(q), tuple(tuple(x % q for x in row) for row in m.rows)))
    return out


def _crt_join(ring: Zmod, mats) -> Matrix:
    moduli = [mm.ring.n for mm in mats]
    rows = []
    for rowparts in zip(*(mm.rows for mm in mats)):
        rows.append(tuple(crt_combine(vals, moduli) for vals in zip(*rowparts)))
    return Matrix._wrap(ring, tuple(rows))


# ---------------------------------------------------------------------------
# diagonal reduction


@dataclass(frozen=True)
class DiagonalReductionCertificate:
    """Invertible P, Q and diagonal D with P*M*Q = D."""

    P: Matrix
    D: Matrix
    Q: Matrix

    def verify(self, m: Matrix) -> bool:
        if not self.D.is_diagonal():
            return False
        if (self.P @ m) @ self.Q != self.D:
            return False
        return self.P.is_invertible() and self.Q.is_invertible()


def diagonal_reduction(m: Matrix) -> DiagonalReductionCertificate:
    """Reduce a square matrix to normalized diagonal form.

    Fields get the rank normal form diag(1,...,1,0,...,0); Z/p^k pivots on
    a minimum-valuation entry and normalizes diagonals to powers of p in
    nondecreasing valuation order; composite moduli split through the CRT
    and products reduce componentwise.  A matrix that is already in
    normalized diagonal form passes through with P = Q = I.
    """
    if not m.is_square:
        raise NotSquare(f"{m.nrows}x{m.ncols}")
    ring = m.ring
    n = m.nrows
    if n == 0:
        eye = Matrix.identity(ring, 0)
        return DiagonalReductionCertificate(eye, m, eye)
    if _is_normalized_diagonal(m):
        eye = Matrix.identity(ring, n)
        return DiagonalReductionCertificate(eye, m, eye)
    if isinstance(ring, ProductRing):
        certs = [diagonal_reduction(c) for c in _product_split(m)]
        cert = DiagonalReductionCertificate(
            _product_join(ring, [c.P for c in certs]),
            _product_join(ring, [c.D for c in certs]),
            _product_join(ring, [c.Q for c in certs]),
        )
    elif ring.is_field:
        cert = _reduce_field(m)
    elif isinstance(ring, Zmod):
        fac = factorize(ring.n)
        if len(fac) == 1:
            cert = _reduce_local(m, fac[0][0], fac[0][1])
        else:
            certs = [diagonal_reduction(c) for c in _crt_split(m)]
            cert = DiagonalReductionCertificate(
                _crt_join(ring, [c.P for c in certs]),
                _crt_join(ring, [c.D for c in certs]),
                _crt_join(ring, [c.Q for c in certs]),
            )
    else:
        raise UnsupportedRing(str(ring))
    if not cert.verify(m):
        raise ConstructionVerificationFailed(f"diagonal reduction replay failed over {ring}")
    return cert


def _is_normalized_diagonal(m: Matrix) -> bool:
    if not m.is_diagonal():
        return False
    ring = m.ring
    diag = m.diagonal_entries()
    if isinstance(ring, ProductRing):
        return all(_is_normalized_diagonal(c) for c in _product_split(m))
    if ring.is_field:
        flags = [x == ring.one() for x in diag]
        if not all(x == ring.one() or x == ring.zero() for x in diag):
            return False
        return flags == sorted(flags, reverse=True)
    if isinstance(ring, Zmod):
        fac = factorize(ring.n)
        if len(fac) > 1:
            return all(_is_normalized_diagonal(c) for c in _crt_split(m))
        p, e = fac[0]
        vals = []
        for x in diag:
            v = _p_valuation(x, p, e)
            if x != pow(p, v, p**e):
                return False
            vals.append(v)
        return vals == sorted(vals)
    return False


def _p_valuation(x: int, p: int, e: int) -> int:
    """Valuation of the canonical representative in Z/p^e; v(0) = e."""
    if x == 0:
        return e
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _reduce_field(m: Matrix) -> DiagonalReductionCertificate:
    ring = m.ring
    n = m.nrows
    zero_v = ring.zero()
    d = [list(r) for r in m.rows]
    p_rows = [list(r) for r in Matrix.identity(ring, n).rows]
    q_cols = [list(r) for r in Matrix.identity(ring, n).rows]

    def col_op(j_dst, j_src, f):
        # col_dst -= f * col_src, tracked in Q (acting on the right)
        for row in d:
            row[j_dst] = ring.sub(row[j_dst], ring.mul(f, row[j_src]))
        for row in q_cols:
            row[j_dst] = ring.sub(row[j_dst], ring.mul(f, row[j_src]))

    for k in range(n):
        pivot = next(
            ((i, j) for j in range(k, n) for i in range(k, n) if d[i][j] != zero_v), None
        )
        if pivot is None:
            break
        i0, j0 = pivot
        if i0 != k:
            d[k], d[i0] = d[i0], d[k]
            p_rows[k], p_rows[i0] = p_rows[i0], p_rows[k]
        if j0 != k:
            for row in d:
                row[k], row[j0] = row[j0], row[k]
            for row in q_cols:
                row[k], row[j0] = row[j0], row[k]
        inv = ring.unit_inverse(d[k][k])
        d[k] = [ring.mul(inv, x) for x in d[k]]
        p_rows[k] = [ring.mul(inv, x) for x in p_rows[k]]
        for i in range(k + 1, n):
            if d[i][k] == zero_v:
                continue
            f = d[i][k]
            d[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(d[i], d[k])]
            p_rows[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(p_rows[i], p_rows[k])]
        for j in range(k + 1, n):
            if d[k][j] != zero_v:
                col_op(j, k, d[k][j])
    return DiagonalReductionCertificate(
        Matrix._wrap(ring, tuple(tuple(r) for r in p_rows)),
        Matrix._wrap(ring, tuple(tuple(r) for r in d)),
        Matrix._wrap(ring, tuple(tuple(r) for r in q_cols)),
    )


def _reduce_local(m: Matrix, p: int, e: int) -> DiagonalReductionCertificate:
    """Reduction over the local ring Z/p^e via minimum-valuation pivots."""
    ring = m.ring
    q = p**e
    n = m.nrows
    d = [list(r) for r in m.rows]
    p_rows = [list(r) for r in Matrix.identity(ring, n).rows]
    q_cols = [list(r) for r in Matrix.identity(ring, n).rows]
    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                v = _p_valuation(d[i][j], p, e)
                if best is None or v < best[0]:
                    best = (v, i, j)
        if best is None or best[0] >= e:
            break
        v0, i0, j0 = best
        if i0 != k:
            d[k], d[i0] = d[i0], d[k]
            p_rows[k], p_rows[i0] = p_rows[i0], p_rows[k]
        if j0 != k:
            for row in d:
                row[k], row[j0] = row[j0], row[k]
            for row in q_cols:
                row[k], row[j0] = row[j0], row[k]
        unit_part = d[k][k] // p**v0
        inv = pow(unit_part, -1, q)
        d[k] = [(inv * x) % q for x in d[k]]
        p_rows[k] = [(inv * x) % q for x in p_rows[k]]
        # pivot is now exactly p^v0 and divides everything in sight
        for i in range(k + 1, n):
            if d[i][k] == 0:
                continue
            f = d[i][k] // p**v0
            d[i] = [(x - f * y) % q for x, y in zip(d[i], d[k])]
            p_rows[i] = [(x - f * y) % q for x, y in zip(p_rows[i], p_rows[k])]
        for j in range(k + 1, n):
            if d[k][j] == 0:
                continue
            g = d[k][j] // p**v0
            for row in d:
                row[j] = (row[j] - g * row[k]) % q
            for row in q_cols:
                row[j] = (row[j] - g * row[k]) % q
    return DiagonalReductionCertificate(
        Matrix._wrap(ring, tuple(tuple(r) for r in p_rows)),
        Matrix._wrap(ring, tuple(tuple(r) for r in d)),
        Matrix._wrap(ring, tuple(tuple(r) for r in q_cols)),
    )
