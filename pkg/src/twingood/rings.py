"""Exact arithmetic for small finite rings.

Supported families: Z/n, GF(p^k), finite products of those, and square
matrix rings over a commutative base.  Every element has one canonical
value (plain int for Z/n and GF, tuple for products, tuple-of-row-tuples
for matrix rings), equality is value equality, and every operation is a
pure function, so values are safe to share across threads.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd, isqrt

from .errors import (
    ExhaustionBoundExceeded,
    NotUnitRegular,
    RingParseError,
    UnsupportedRing,
)

DEFAULT_EXHAUSTION_BOUND = 1 << 16

# Largest field order for which full lookup tables are precomputed.
_GF_TABLE_LIMIT = 256


# ---------------------------------------------------------------------------
# Integer helpers


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as [(p, e)] with ascending p."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def crt_combine(residues, moduli) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; x in [0, prod)."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        g, s, _ = extended_gcd(m, mi)
        assert g == 1, "moduli must be pairwise coprime"
        x = (x + (r - x) * s * m) % (m * mi)
        m *= mi
    return x


# ---------------------------------------------------------------------------
# Polynomial helpers over Z/p (coefficient lists in ascending degree)


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(a, b, p):
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(da - db + 1, 0)
    for i in range(da - db, -1, -1):
        coeff = (a[i + db] * inv_lead) % p
        if coeff:
            q[i] = coeff
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - coeff * bj) % p
    return _poly_trim(q), _poly_trim(a)


def _poly_ext_gcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g over Z/p[x]."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim([(x - y) % p for x, y in itertools.zip_longest(s0, _poly_mul(q, s1, p), fillvalue=0)])
        t0, t1 = t1, _poly_trim([(x - y) % p for x, y in itertools.zip_longest(t0, _poly_mul(q, t1, p), fillvalue=0)])
    return r0, s0, t0


def _poly_is_irreducible(poly, p):
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for m in range(p**d):
            div = _digits(m, p, d) + [1]
            _, rem = _poly_divmod(poly, div, p)
            if not rem:
                return False
    return True


def _digits(m, p, k):
    """m written base p, little endian, padded to length k."""
    out = []
    for _ in range(k):
        out.append(m % p)
        m //= p
    return out


def _undigits(digits, p):
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


@lru_cache(maxsize=None)
def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over Z/p.

    Candidates x^k + c_{k-1}x^{k-1} + ... + c_0 are scanned in increasing
    order of the base-p integer c_0 + c_1 p + ..., so the choice is
    reproducible across runs without any external table.
    """
    for m in range(p**k):
        cand = _digits(m, p, k) + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z/{p}")


# ---------------------------------------------------------------------------
# Ring classes


class Ring:
    """Abstract finite ring; subclasses fix the canonical value format."""

    order: int
    commutative: bool

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, m: int):
        """Image of the integer m under the unique ring map Z -> R."""
        raise NotImplementedError

    def canon(self, raw):
        """Validate/normalize a raw value; raises ValueError if foreign."""
        raise NotImplementedError

    def unit_inverse(self, a):
        """Two-sided inverse of a, or None when a is not a unit."""
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        return self.unit_inverse(a) is not None

    def iter_elements(self):
        """All elements exactly once, in canonical order."""
        raise NotImplementedError

    def dot(self, xs, ys):
        acc = self.zero()
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    @property
    def is_field(self) -> bool:
        return False

    def random_element(self, rng):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class Zmod(Ring):
    """Integers modulo n; values are residues in [0, n)."""

    commutative = True

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("Z/n needs n >= 2")
        self.n = n
        self.order = n
        self._prime = is_prime(n)

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def from_int(self, m):
        return m % self.n

    def canon(self, raw):
        if not isinstance(raw, int) or isinstance(raw, bool):
            raise ValueError(f"{raw!r} is not a Z/{self.n} value")
        return raw % self.n

    def unit_inverse(self, a):
        try:
            return pow(a, -1, self.n)
        except ValueError:
            return None

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def iter_elements(self):
        return iter(range(self.n))

    def dot(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.n

    @property
    def is_field(self):
        return self._prime

    def random_element(self, rng):
        return rng.randrange(self.n)

    def __eq__(self, other):
        return isinstance(other, Zmod) and other.n == self.n

    def __hash__(self):
        return hash(("Zmod", self.n))

    def __str__(self):
        return f"Z/{self.n}"


class GaloisField(Ring):
    """GF(p^k) with a fixed reproducible modulus polynomial.

    Values are integers in [0, p^k): the base-p digits of v are the
    coefficients (ascending degree) of the reduced polynomial.
    """

    commutative = True

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"GF characteristic {p} is not prime")
        if k < 1:
            raise ValueError("GF extension degree must be >= 1")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = _find_irreducible(p, k)
        self._mul_table = None
        self._inv_table = None
        if self.order <= _GF_TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self):
        q = self.order
        mul = [[0] * q for _ in range(q)]
        inv = [None] * q
        for a in range(q):
            for b in range(a, q):
                v = self._mul_poly(a, b)
                mul[a][b] = v
                mul[b][a] = v
                if v == 1:
                    inv[a] = b
                    inv[b] = a
        self._mul_table = mul
        self._inv_table = inv

    def _mul_poly(self, a, b):
        prod = _poly_mul(_digits(a, self.p, self.k), _digits(b, self.p, self.k), self.p)
        if len(prod) >= self.k + 1:
            _, prod = _poly_divmod(prod, list(self.modulus), self.p)
        return _undigits(prod, self.p)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        out, mult = 0, 1
        while a or b:
            out += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        out, mult = 0, 1
        while a:
            out += (-a % self.p) * mult
            a //= self.p
            mult *= self.p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_poly(a, b)

    def from_int(self, m):
        return m % self.p

    def canon(self, raw):
        if not isinstance(raw, int) or isinstance(raw, bool) or not 0 <= raw < self.order:
            raise ValueError(f"{raw!r} is not a GF({self.order}) value")
        return raw

    def coeffs(self, a) -> tuple[int, ...]:
        """Coefficient vector of a, ascending degree, length k."""
        return tuple(_digits(a, self.p, self.k))

    def from_coeffs(self, cs) -> int:
        if len(cs) != self.k:
            raise ValueError(f"GF({self.order}) needs {self.k} coefficients, got {len(cs)}")
        return _undigits([c % self.p for c in cs], self.p)

    def unit_inverse(self, a):
        if a == 0:
            return None
        if self._inv_table is not None:
            return self._inv_table[a]
        g, s, _ = _poly_ext_gcd(_digits(a, self.p, self.k), list(self.modulus), self.p)
        scale = pow(g[0], -1, self.p)
        return _undigits(_poly_mul(s, [scale], self.p), self.p)

    def is_unit(self, a):
        return a != 0

    def iter_elements(self):
        return iter(range(self.order))

    def dot(self, xs, ys):
        if self._mul_table is not None:
            mul = self._mul_table
            acc = 0
            if self.p == 2:
                for x, y in zip(xs, ys):
                    acc ^= mul[x][y]
                return acc
            for x, y in zip(xs, ys):
                acc = self.add(acc, mul[x][y])
            return acc
        return super().dot(xs, ys)

    @property
    def is_field(self):
        return True

    def random_element(self, rng):
        return rng.randrange(self.order)

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (other.p, other.k) == (self.p, self.k)

    def __hash__(self):
        return hash(("GF", self.p, self.k))

    def __str__(self):
        return f"GF({self.order})"


class ProductRing(Ring):
    """Direct product of rings; values are tuples, one slot per component."""

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("product ring needs at least one component")
        self.components = components
        self.order = 1
        for c in components:
            self.order *= c.order
        self.commutative = all(c.commutative for c in components)

    def zero(self):
        return tuple(c.zero() for c in self.components)

    def one(self):
        return tuple(c.one() for c in self.components)

    def add(self, a, b):
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def sub(self, a, b):
        return tuple(c.sub(x, y) for c, x, y in zip(self.components, a, b))

    def neg(self, a):
        return tuple(c.neg(x) for c, x in zip(self.components, a))

    def mul(self, a, b):
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def from_int(self, m):
        return tuple(c.from_int(m) for c in self.components)

    def canon(self, raw):
        if not isinstance(raw, tuple) or len(raw) != len(self.components):
            raise ValueError(f"{raw!r} is not a {self} value")
        return tuple(c.canon(x) for c, x in zip(self.components, raw))

    def unit_inverse(self, a):
        out = []
        for c, x in zip(self.components, a):
            inv = c.unit_inverse(x)
            if inv is None:
                return None
            out.append(inv)
        return tuple(out)

    def is_unit(self, a):
        return all(c.is_unit(x) for c, x in zip(self.components, a))

    def iter_elements(self):
        return itertools.product(*(c.iter_elements() for c in self.components))

    def random_element(self, rng):
        return tuple(c.random_element(rng) for c in self.components)

    def __eq__(self, other):
        return isinstance(other, ProductRing) and other.components == self.components

    def __hash__(self):
        return hash(("Product", self.components))

    def __str__(self):
        return " x ".join(str(c) for c in self.components)


class MatrixRing(Ring):
    """Full ring of size x size matrices over a commutative base ring.

    Values are tuples of row tuples of base values.  This ring only ever
    appears as a whole object fed to the goodness oracle; matrices that get
    decomposed live in twingood.matrices over a commutative scalar ring.
    """

    def __init__(self, base: Ring, size: int):
        if size < 1:
            raise ValueError("matrix ring size must be >= 1")
        if not base.commutative:
            raise ValueError("matrix ring base must be commutative")
        self.base = base
        self.size = size
        self.order = base.order ** (size * size)
        self.commutative = size == 1

    def zero(self):
        z = self.base.zero()
        return tuple((z,) * self.size for _ in range(self.size))

    def one(self):
        z, o = self.base.zero(), self.base.one()
        return tuple(tuple(o if i == j else z for j in range(self.size)) for i in range(self.size))

    def add(self, a, b):
        base = self.base
        return tuple(tuple(base.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(tuple(base.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(tuple(base.neg(x) for x in row) for row in a)

    def mul(self, a, b):
        base = self.base
        cols = tuple(zip(*b))
        return tuple(tuple(base.dot(row, col) for col in cols) for row in a)

    def from_int(self, m):
        z, v = self.base.zero(), self.base.from_int(m)
        return tuple(tuple(v if i == j else z for j in range(self.size)) for i in range(self.size))

    def canon(self, raw):
        if not isinstance(raw, tuple) or len(raw) != self.size:
            raise ValueError(f"{raw!r} is not a {self} value")
        rows = []
        for row in raw:
            if not isinstance(row, tuple) or len(row) != self.size:
                raise ValueError(f"{raw!r} is not a {self} value")
            rows.append(tuple(self.base.canon(x) for x in row))
        return tuple(rows)

    def unit_inverse(self, a):
        from .matrices import Matrix

        inv = Matrix(self.base, a).invert()
        return None if inv is None else inv.rows

    def iter_elements(self):
        n = self.size
        for flat in itertools.product(list(self.base.iter_elements()), repeat=n * n):
            yield tuple(flat[i * n : (i + 1) * n] for i in range(n))

    def random_element(self, rng):
        return tuple(
            tuple(self.base.random_element(rng) for _ in range(self.size)) for _ in range(self.size)
        )

    @property
    def is_field(self):
        return self.size == 1 and self.base.is_field

    def __eq__(self, other):
        return isinstance(other, MatrixRing) and (other.base, other.size) == (self.base, self.size)

    def __hash__(self):
        return hash(("MatrixRing", self.base, self.size))

    def __str__(self):
        return f"M({self.size}, {self.base})"


# ---------------------------------------------------------------------------
# Bounded enumeration


@lru_cache(maxsize=None)
def _elements_cached(ring: Ring) -> tuple:
    return tuple(ring.iter_elements())


@lru_cache(maxsize=None)
def _units_cached(ring: Ring) -> tuple:
    return tuple(x for x in _elements_cached(ring) if ring.is_unit(x))


def _check_bound(ring: Ring, bound: int):
    if ring.order > bound:
        raise ExhaustionBoundExceeded(ring, bound)


def elements(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> list:
    """All elements in canonical order; refuses rings above the bound."""
    _check_bound(ring, bound)
    return list(_elements_cached(ring))


def units(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> list:
    """All units in canonical order."""
    _check_bound(ring, bound)
    return list(_units_cached(ring))


def unit_set(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> frozenset:
    _check_bound(ring, bound)
    return frozenset(_units_cached(ring))


def idempotents(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> list:
    """Elements with e*e == e, in canonical order."""
    _check_bound(ring, bound)
    return [e for e in _elements_cached(ring) if ring.mul(e, e) == e]


# ---------------------------------------------------------------------------
# Structure computations


def jacobson_radical(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> frozenset:
    """The Jacobson radical as a set of values.

    Z/n is answered structurally (multiples of the product of the distinct
    primes dividing n); everything else falls back to the quasi-regularity
    scan, which is exact on finite rings.
    """
    if isinstance(ring, Zmod):
        return frozenset(range(0, ring.n, radical(ring.n)))
    return jacobson_radical_exhaustive(ring, bound)


def jacobson_radical_exhaustive(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> frozenset:
    """{x : 1 - r*x is a unit for every r}; valid in any finite ring."""
    elems = elements(ring, bound)
    one = ring.one()
    out = []
    for x in elems:
        if all(ring.is_unit(ring.sub(one, ring.mul(r, x))) for r in elems):
            out.append(x)
    return frozenset(out)


def unit_regular_decompose(ring: Ring, a, bound: int = DEFAULT_EXHAUSTION_BOUND):
    """Factor a = e*u with e idempotent and u a unit, first hit in canonical order.

    Fields short-circuit (0 -> (0,1), else (1,a)).  Raises NotUnitRegular when
    no factorization exists, which flags the ring as not von Neumann regular
    at a; callers should then lift through the radical instead.
    """
    if not ring.commutative:
        raise UnsupportedRing(f"unit-regular decomposition needs a commutative ring, got {ring}")
    a = ring.canon(a)
    if ring.is_field:
        if a == ring.zero():
            return ring.zero(), ring.one()
        return ring.one(), a
    us = units(ring, bound)
    for e in idempotents(ring, bound):
        for u in us:
            if ring.mul(e, u) == a:
                return e, u
    raise NotUnitRegular(ring, a)


def has_factor_Z2_or_Z3(ring: Ring) -> bool:
    """Whether some factor ring of R is the 2- or 3-element field.

    Structural rules: Z/n factors onto Z/2 or Z/3 exactly when 2|n or 3|n;
    a field does only when it *is* that field; a product does when some
    component does.  Two-sided ideals of M_m(R) are M_m(I), so a matrix
    ring of size m >= 2 has no factor of prime order whatsoever.
    """
    if isinstance(ring, Zmod):
        return ring.n % 2 == 0 or ring.n % 3 == 0
    if isinstance(ring, GaloisField):
        return ring.order in (2, 3)
    if isinstance(ring, ProductRing):
        return any(has_factor_Z2_or_Z3(c) for c in ring.components)
    if isinstance(ring, MatrixRing):
        return has_factor_Z2_or_Z3(ring.base) if ring.size == 1 else False
    raise UnsupportedRing(str(ring))


# ---------------------------------------------------------------------------
# Exhaustive ideal enumeration (cross-check oracle for the factor test)


def _extend_subgroup(ring: Ring, group: frozenset, g) -> frozenset:
    """Smallest additive subgroup containing group and g."""
    if g in group:
        return group
    multiples = []
    cur = g
    while cur not in group:
        multiples.append(cur)
        cur = ring.add(cur, g)
    out = set(group)
    for m in multiples:
        out.update(ring.add(h, m) for h in group)
    return frozenset(out)


def ideal_generated_by(ring: Ring, gens, bound: int = DEFAULT_EXHAUSTION_BOUND) -> frozenset:
    """Two-sided ideal generated by gens, computed by closure."""
    elems = elements(ring, bound)
    group = frozenset({ring.zero()})
    work = list(gens)
    while work:
        g = work.pop()
        if g in group:
            continue
        group = _extend_subgroup(ring, group, g)
        for r in elems:
            work.append(ring.mul(r, g))
            work.append(ring.mul(g, r))
    return group


def two_sided_ideals(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> list[frozenset]:
    """Every two-sided ideal, smallest first (brute-force lattice closure)."""
    elems = elements(ring, bound)
    ideals = {frozenset({ring.zero()})}
    for x in elems:
        ideals.add(ideal_generated_by(ring, [x], bound))
    # close under ideal sum; the additive join of two ideals is already an ideal
    changed = True
    while changed:
        changed = False
        pairs = list(ideals)
        for i, a in enumerate(pairs):
            for b in pairs[i + 1 :]:
                join = a
                for g in b:
                    join = _extend_subgroup(ring, join, g)
                if join not in ideals:
                    ideals.add(join)
                    changed = True
    return sorted(ideals, key=lambda s: (len(s), sorted(map(repr, s))))


def has_factor_Z2_or_Z3_exhaustive(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND) -> bool:
    """Ideal-enumeration cross-check: is there an ideal of index 2 or 3?

    A unital quotient of prime order p is the field Z/p, so checking the
    index is enough.
    """
    n = ring.order
    return any(n == len(ideal) * q for ideal in two_sided_ideals(ring, bound) for q in (2, 3))


# ---------------------------------------------------------------------------
# Descriptor grammar: Z/12, GF(4), GF(2,2), Z/2 x Z/3, M(2, Z/2)


def _split_top_level(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise RingParseError(f"unbalanced parentheses in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise RingParseError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return parts


def _parse_single(text: str) -> Ring:
    if text.startswith("Z/"):
        body = text[2:]
        if not body.isdigit():
            raise RingParseError(f"bad modulus in {text!r}")
        try:
            return Zmod(int(body))
        except ValueError as exc:
            raise RingParseError(str(exc)) from None
    if text.startswith("GF(") and text.endswith(")"):
        body = text[3:-1]
        parts = body.split(",")
        try:
            if len(parts) == 1:
                q = int(parts[0])
                fac = factorize(q) if q >= 2 else []
                if len(fac) != 1:
                    raise RingParseError(f"{q} is not a prime power")
                return GaloisField(*fac[0])
            if len(parts) == 2:
                return GaloisField(int(parts[0]), int(parts[1]))
        except RingParseError:
            raise
        except ValueError as exc:
            raise RingParseError(f"bad field descriptor {text!r}: {exc}") from None
        raise RingParseError(f"bad field descriptor {text!r}")
    if text.startswith("M(") and text.endswith(")"):
        body = text[2:-1]
        head = _split_top_level(body, ",")
        if len(head) < 2 or not head[0].isdigit():
            raise RingParseError(f"bad matrix ring descriptor {text!r}")
        size = int(head[0])
        base = _parse_stripped(",".join(head[1:]))
        try:
            return MatrixRing(base, size)
        except ValueError as exc:
            raise RingParseError(str(exc)) from None
    raise RingParseError(f"cannot parse ring descriptor {text!r}")


def _parse_stripped(text: str) -> Ring:
    factors = _split_top_level(text, "x")
    if len(factors) == 1:
        return _parse_single(factors[0])
    return ProductRing(_parse_single(f) for f in factors)


def parse_ring(text: str) -> Ring:
    """Parse a ring descriptor; whitespace is ignored everywhere."""
    stripped = "".join(text.split())
    if not stripped:
        raise RingParseError("empty ring descriptor")
    return _parse_stripped(stripped)


def parse_family(text: str) -> list[Ring]:
    """Parse a sweep family: comma list of descriptors, Z/a..b and
    M(k, Z/a..b) ranges (both ends inclusive)."""
    stripped = "".join(text.split())
    if not stripped:
        return []
    out: list[Ring] = []
    for item in _split_top_level(stripped, ","):
        if not item:
            raise RingParseError("empty family item")
        lo_hi = _range_form(item)
        if lo_hi is not None:
            kind, size, lo, hi = lo_hi
            if lo > hi:
                raise RingParseError(f"empty range in {item!r}")
            for n in range(lo, hi + 1):
                ring = Zmod(n)
                out.append(ring if kind == "Z" else MatrixRing(ring, size))
        else:
            out.append(_parse_stripped(item))
    return out


def _range_form(item: str):
    if item.startswith("Z/") and ".." in item:
        lo, _, hi = item[2:].partition("..")
        if lo.isdigit() and hi.isdigit():
            return "Z", 0, int(lo), int(hi)
        raise RingParseError(f"bad range {item!r}")
    if item.startswith("M(") and item.endswith(")") and ".." in item:
        body = _split_top_level(item[2:-1], ",")
        if len(body) == 2 and body[0].isdigit() and body[1].startswith("Z/"):
            lo, _, hi = body[1][2:].partition("..")
            if lo.isdigit() and hi.isdigit():
                return "M", int(body[0]), int(lo), int(hi)
        raise RingParseError(f"bad range {item!r}")
    return None
