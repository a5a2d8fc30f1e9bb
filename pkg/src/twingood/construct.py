"""Constructions of twin units: a unit U with M+U and M-U both invertible.

Four routes, picked by a dispatcher per ring component and matrix size:

* size >= 3: conjugate a companion-style unit built from the diagonal
  reduction of M (works over any commutative supported ring once reduced),
* size == 2: an idempotent/unit splitting of the reduced diagonal plus a
  fixed 2x2 unit V whose closed-form inverses are re-verified on the spot,
* size == 1: direct search over the units of a field with at least 4
  elements,
* square moduli: solve over the radical quotient and lift entrywise.

Every certificate is replayed (six exact identity products) before it is
returned; a replay failure raises instead of returning a bad witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .errors import (
    ConstructionVerificationFailed,
    ExhaustionBoundExceeded,
    FieldTooSmall,
    NotSquare,
    NotTwinGood,
    NotTwoGood,
    QuotientUnsolvable,
    UnsupportedRing,
)
from .matrices import (
    Matrix,
    _crt_join,
    _crt_split,
    _product_join,
    _product_split,
    diagonal_reduction,
)
from .rings import (
    DEFAULT_EXHAUSTION_BOUND,
    GaloisField,
    ProductRing,
    Ring,
    Zmod,
    factorize,
    radical,
    unit_regular_decompose,
)

METHOD_EDR = "edr"
METHOD_ABELIAN = "abelian2x2"
METHOD_ELEMENT = "element"
METHOD_LIFTED = "lifted"
METHOD_PRODUCT = "product"


@dataclass(frozen=True)
class TwinCertificate:
    """A verified twin decomposition: U, its inverse, and both sum inverses."""

    ring: Ring
    M: Matrix
    U: Matrix
    U_inv: Matrix
    M_plus_U_inv: Matrix
    M_minus_U_inv: Matrix
    method: str
    verified: bool = False


def verify_twin_certificate(cert: TwinCertificate) -> bool:
    """Replay all six identity products exactly."""
    n = cert.M.nrows
    eye = Matrix.identity(cert.ring, n)
    plus = cert.M + cert.U
    minus = cert.M - cert.U
    for a, b in ((cert.U, cert.U_inv), (plus, cert.M_plus_U_inv), (minus, cert.M_minus_U_inv)):
        if a @ b != eye or b @ a != eye:
            return False
    return True


def _sealed(cert: TwinCertificate) -> TwinCertificate:
    cert = replace(cert, verified=verify_twin_certificate(cert))
    if not cert.verified:
        raise ConstructionVerificationFailed(
            f"{cert.method} twin certificate failed replay over {cert.ring}"
        )
    return cert


# ---------------------------------------------------------------------------
# size >= 3: companion-style unit for a diagonal matrix


def edr_twin_unit(diag_entries, ring: Ring) -> TwinCertificate:
    """Twin unit for D = diag(d1..dn), n >= 3.

    U has a 1 in the top-right corner, 1s on the subdiagonal, and dn*d1 in
    the bottom-left corner.  Its inverse has the closed form: 1s on the
    superdiagonal, -dn*d1 at (n-2, 1), and 1 at (n-1, 0) (0-indexed).
    det(D+U) = (-1)^(n+1) and det(D-U) = -1, so both sums are invertible
    over every commutative ring.
    """
    d = [ring.canon(x) for x in diag_entries]
    n = len(d)
    if n < 3:
        raise ValueError(f"companion twin unit needs at least 3 diagonal entries, got {n}")
    z, one = ring.zero(), ring.one()
    corner = ring.mul(d[n - 1], d[0])

    u_rows = [[z] * n for _ in range(n)]
    u_rows[0][n - 1] = one
    for i in range(n - 1):
        u_rows[i + 1][i] = one
    u_rows[n - 1][0] = ring.add(u_rows[n - 1][0], corner)

    v_rows = [[z] * n for _ in range(n)]
    for i in range(n - 1):
        v_rows[i][i + 1] = one
    v_rows[n - 2][1] = ring.sub(v_rows[n - 2][1], corner)
    v_rows[n - 1][0] = one

    u = Matrix(ring, u_rows)
    u_inv = Matrix(ring, v_rows)
    eye = Matrix.identity(ring, n)
    if u @ u_inv != eye or u_inv @ u != eye:
        raise ConstructionVerificationFailed("closed-form companion inverse failed")

    dm = Matrix.diagonal(ring, d)
    plus_inv = (dm + u).invert()
    minus_inv = (dm - u).invert()
    if plus_inv is None or minus_inv is None:
        raise ConstructionVerificationFailed("companion twin sums were not invertible")
    return _sealed(
        TwinCertificate(ring, dm, u, u_inv, plus_inv, minus_inv, METHOD_EDR)
    )


# ---------------------------------------------------------------------------
# size == 2 over unit-regular commutative rings


def abelian_twin_unit_2x2(m: Matrix, bound: int = DEFAULT_EXHAUSTION_BOUND) -> TwinCertificate:
    """Twin unit for a 2x2 matrix over a commutative unit-regular ring.

    Pipeline: reduce to diag(a, b); split a = e1*u, b = e2*v into
    idempotent times unit; the fixed unit V = [[0,-1],[-1,-e2]] makes both
    E-V and E+V units with closed-form inverses, so Uf*V is a twin unit for
    the reduced matrix and conjugating back finishes.  NotUnitRegular
    bubbles up when the splitting fails; route through radical lifting then.
    """
    ring = m.ring
    if m.nrows != 2 or m.ncols != 2:
        raise NotSquare(f"expected 2x2, got {m.nrows}x{m.ncols}")
    red = diagonal_reduction(m)
    a = red.D.rows[0][0]
    b = red.D.rows[1][1]
    e1, u = unit_regular_decompose(ring, a, bound)
    e2, v = unit_regular_decompose(ring, b, bound)

    one = ring.one()
    neg_one = ring.neg(one)
    two = ring.from_int(2)
    four = ring.from_int(4)
    e1e2 = ring.mul(e1, e2)

    uf = Matrix.diagonal(ring, [u, v])
    uf_inv = Matrix.diagonal(ring, [ring.unit_inverse(u), ring.unit_inverse(v)])
    em = Matrix.diagonal(ring, [e1, e2])
    if uf @ em != red.D:
        raise ConstructionVerificationFailed("idempotent*unit splitting does not rebuild D")

    vm = Matrix(ring, [[ring.zero(), neg_one], [neg_one, ring.neg(e2)]])
    vm_inv = Matrix(ring, [[e2, neg_one], [neg_one, ring.zero()]])
    emv_inv = Matrix(
        ring,
        [
            [ring.sub(ring.mul(four, e1e2), ring.mul(two, e2)), ring.sub(one, ring.mul(two, e1e2))],
            [ring.sub(one, ring.mul(two, e1e2)), ring.sub(ring.mul(two, e1e2), e1)],
        ],
    )
    epv_inv = Matrix(ring, [[ring.zero(), neg_one], [neg_one, ring.neg(e1)]])

    eye = Matrix.identity(ring, 2)
    for lhs, rhs in ((vm, vm_inv), (em - vm, emv_inv), (em + vm, epv_inv)):
        if lhs @ rhs != eye or rhs @ lhs != eye:
            raise ConstructionVerificationFailed("closed-form 2x2 inverse failed replay")

    w = uf @ vm
    w_inv = vm_inv @ uf_inv
    p_inv = red.P.invert()
    q_inv = red.Q.invert()
    if p_inv is None or q_inv is None:
        raise ConstructionVerificationFailed("reduction transforms were not invertible")

    u_mat = (p_inv @ w) @ q_inv
    u_inv = (red.Q @ w_inv) @ red.P
    plus_inv = (red.Q @ (epv_inv @ uf_inv)) @ red.P
    minus_inv = (red.Q @ (emv_inv @ uf_inv)) @ red.P
    return _sealed(
        TwinCertificate(ring, m, u_mat, u_inv, plus_inv, minus_inv, METHOD_ABELIAN)
    )


# ---------------------------------------------------------------------------
# size == 1 over a field


def division_twin_unit(ring: Ring, x) -> TwinCertificate:
    """First unit u (canonical order) with x+u and x-u nonzero in a field.

    At most the two units x and -x are excluded, so any field with at least
    4 elements has a witness; the 2- and 3-element fields do not, and raise
    FieldTooSmall.
    """
    if not ring.is_field:
        raise UnsupportedRing(f"element-level twin units need a field, got {ring}")
    if ring.order < 4:
        raise FieldTooSmall(ring)
    x = ring.canon(x)
    zero = ring.zero()
    found = None
    for u in ring.iter_elements():
        if u == zero:
            continue
        if ring.add(x, u) != zero and ring.sub(x, u) != zero:
            found = u
            break
    if found is None:
        raise ConstructionVerificationFailed(f"no twin unit for {x!r} in {ring}")
    m = Matrix(ring, [[x]])
    u_mat = Matrix(ring, [[found]])
    u_inv = Matrix(ring, [[ring.unit_inverse(found)]])
    plus_inv = Matrix(ring, [[ring.unit_inverse(ring.add(x, found))]])
    minus_inv = Matrix(ring, [[ring.unit_inverse(ring.sub(x, found))]])
    return _sealed(
        TwinCertificate(ring, m, u_mat, u_inv, plus_inv, minus_inv, METHOD_ELEMENT)
    )


# ---------------------------------------------------------------------------
# lifting along the radical of Z/n


def lift_mod_radical(m: Matrix, solver=None) -> TwinCertificate:
    """Solve the twin problem over Z/rad(n) and lift entrywise to Z/n.

    Units lift along the nilpotent kernel, so the smallest preimage of each
    entry of the quotient witness is already a witness upstairs; only the
    three inverses are recomputed.  The solver defaults to twin_decompose.
    """
    ring = m.ring
    if not isinstance(ring, Zmod):
        raise UnsupportedRing(f"radical lifting is defined for Z/n, got {ring}")
    rad = radical(ring.n)
    if rad == ring.n:
        raise ValueError(f"Z/{ring.n} has trivial radical; nothing to lift")
    if solver is None:
        solver = twin_decompose
    quotient = Zmod(rad)
    m_bar = Matrix(quotient, tuple(tuple(x % rad for x in row) for row in m.rows))
    try:
        sub = solver(m_bar)
    except (NotTwinGood, FieldTooSmall) as exc:
        raise QuotientUnsolvable(
            f"twin problem unsolvable over the radical quotient Z/{rad} of Z/{ring.n}: {exc}"
        ) from exc
    u = Matrix(ring, sub.U.rows)  # smallest preimage per entry
    u_inv = u.invert()
    plus_inv = (m + u).invert()
    minus_inv = (m - u).invert()
    if u_inv is None or plus_inv is None or minus_inv is None:
        raise ConstructionVerificationFailed("lifted witness lost invertibility")
    return _sealed(
        TwinCertificate(ring, m, u, u_inv, plus_inv, minus_inv, METHOD_LIFTED)
    )


# ---------------------------------------------------------------------------
# dispatcher


def twin_decompose(m: Matrix, bound: int = DEFAULT_EXHAUSTION_BOUND) -> TwinCertificate:
    """Find a verified twin unit for any square matrix over Z/n, GF(p^k),
    or a product of such rings.

    Raises NotTwinGood exactly when some component boils down to a 1x1
    problem over a residue field with 2 or 3 elements.
    """
    if not m.is_square:
        raise NotSquare(f"{m.nrows}x{m.ncols}")
    ring = m.ring
    if m.nrows == 0:
        eye = Matrix.identity(ring, 0)
        return _sealed(TwinCertificate(ring, m, eye, eye, eye, eye, METHOD_EDR))
    if isinstance(ring, ProductRing):
        certs = []
        for comp in _product_split(m):
            try:
                certs.append(twin_decompose(comp, bound))
            except NotTwinGood as exc:
                raise NotTwinGood(
                    f"component {comp.ring} of {ring}: {exc}",
                    component=exc.component or comp.ring,
                    quotient=exc.quotient,
                ) from None
        cert = TwinCertificate(
            ring,
            m,
            _product_join(ring, [c.U for c in certs]),
            _product_join(ring, [c.U_inv for c in certs]),
            _product_join(ring, [c.M_plus_U_inv for c in certs]),
            _product_join(ring, [c.M_minus_U_inv for c in certs]),
            METHOD_PRODUCT,
        )
        return _sealed(cert)
    if isinstance(ring, GaloisField):
        return _twin_over_field(m, bound)
    if isinstance(ring, Zmod):
        fac = factorize(ring.n)
        if len(fac) == 1:
            if fac[0][1] == 1:
                return _twin_over_field(m, bound)
            try:
                return lift_mod_radical(m, solver=lambda mb: twin_decompose(mb, bound))
            except QuotientUnsolvable as exc:
                raise NotTwinGood(
                    f"{ring}: {exc}", component=ring, quotient=Zmod(fac[0][0])
                ) from None
        certs = []
        for comp in _crt_split(m):
            try:
                certs.append(twin_decompose(comp, bound))
            except NotTwinGood as exc:
                raise NotTwinGood(
                    f"component {comp.ring} of {ring}: {exc}",
                    component=exc.component or comp.ring,
                    quotient=exc.quotient,
                ) from None
        cert = TwinCertificate(
            ring,
            m,
            _crt_join(ring, [c.U for c in certs]),
            _crt_join(ring, [c.U_inv for c in certs]),
            _crt_join(ring, [c.M_plus_U_inv for c in certs]),
            _crt_join(ring, [c.M_minus_U_inv for c in certs]),
            METHOD_PRODUCT,
        )
        return _sealed(cert)
    raise UnsupportedRing(str(ring))


def _twin_over_field(m: Matrix, bound: int) -> TwinCertificate:
    ring = m.ring
    n = m.nrows
    if n == 1:
        try:
            return division_twin_unit(ring, m.rows[0][0])
        except FieldTooSmall as exc:
            raise NotTwinGood(
                f"1x1 over {ring}: the field has only {ring.order} elements",
                component=ring,
                quotient=ring,
            ) from exc
    if n == 2:
        return abelian_twin_unit_2x2(m, bound)
    red = diagonal_reduction(m)
    sub = edr_twin_unit(red.D.diagonal_entries(), ring)
    p_inv = red.P.invert()
    q_inv = red.Q.invert()
    if p_inv is None or q_inv is None:
        raise ConstructionVerificationFailed("reduction transforms were not invertible")
    u = (p_inv @ sub.U) @ q_inv
    u_inv = (red.Q @ sub.U_inv) @ red.P
    plus_inv = (red.Q @ sub.M_plus_U_inv) @ red.P
    minus_inv = (red.Q @ sub.M_minus_U_inv) @ red.P
    return _sealed(TwinCertificate(ring, m, u, u_inv, plus_inv, minus_inv, METHOD_EDR))


# ---------------------------------------------------------------------------
# sums of two units


def two_sum_decompose(m: Matrix, bound: int = DEFAULT_EXHAUSTION_BOUND):
    """Write M = U1 + U2 with both summands invertible.

    Twin route first (U1 = M+U, U2 = -U).  If the matrix is not twin-good,
    fall back to an exhaustive search for a unit u1 with M - u1 invertible,
    which covers rings like Z/3 that are 2-good without being twin-good.
    """
    if not m.is_square:
        raise NotSquare(f"{m.nrows}x{m.ncols}")
    try:
        cert = twin_decompose(m, bound)
        return m + cert.U, -cert.U
    except NotTwinGood as twin_failure:
        ring = m.ring
        n = m.nrows
        if ring.order ** (n * n) > bound:
            raise ExhaustionBoundExceeded(ring, bound) from twin_failure
        elems = list(ring.iter_elements())
        for flat in itertools.product(elems, repeat=n * n):
            rows = tuple(flat[i * n : (i + 1) * n] for i in range(n))
            u1 = Matrix(ring, rows)
            if not u1.is_invertible():
                continue
            u2 = m - u1
            if u2.is_invertible():
                return u1, u2
        raise NotTwoGood(f"{m!r} is not a sum of two units") from twin_failure
