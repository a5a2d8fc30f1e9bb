"""Structured-text formats for matrices, certificates and reports.

All documents are plain text with one `key: value` field per line, stable
field order, and a trailing newline, so they diff cleanly in golden tests.
Element literals are ring-directed: integers for Z/n, coefficient tuples
(ascending degree) for GF(p^k) with k >= 2, component tuples for products,
and bracketed rows for matrix-ring values.  A bare integer is always
accepted where a field element is expected and means m * 1.
"""

from __future__ import annotations

from .construct import TwinCertificate
from .errors import DocumentParseError, RingParseError
from .matrices import Matrix
from .oracle import GoodnessReport
from .rings import GaloisField, MatrixRing, ProductRing, Ring, Zmod, parse_ring

# ---------------------------------------------------------------------------
# element literals


def format_value(ring: Ring, value) -> str:
    if isinstance(ring, Zmod):
        return str(value)
    if isinstance(ring, GaloisField):
        if ring.k == 1:
            return str(value)
        return "(" + ", ".join(str(c) for c in ring.coeffs(value)) + ")"
    if isinstance(ring, ProductRing):
        return "(" + ", ".join(format_value(c, v) for c, v in zip(ring.components, value)) + ")"
    if isinstance(ring, MatrixRing):
        return _format_rows(ring.base, value)
    raise DocumentParseError(f"no literal format for {ring}")


def _format_rows(ring: Ring, rows) -> str:
    return "[" + ", ".join("[" + ", ".join(format_value(ring, x) for x in row) + "]" for row in rows) + "]"


def _scan_node(s: str, i: int):
    n = len(s)
    while i < n and s[i].isspace():
        i += 1
    if i >= n:
        raise DocumentParseError("unexpected end of literal")
    ch = s[i]
    if ch in "([":
        close = ")" if ch == "(" else "]"
        tag = "P" if ch == "(" else "B"
        items = []
        i += 1
        while True:
            while i < n and s[i].isspace():
                i += 1
            if i < n and s[i] == close:
                return (tag, items), i + 1
            node, i = _scan_node(s, i)
            items.append(node)
            while i < n and s[i].isspace():
                i += 1
            if i < n and s[i] == ",":
                i += 1
                continue
            if i < n and s[i] == close:
                return (tag, items), i + 1
            raise DocumentParseError(f"expected ',' or '{close}' near position {i} in {s!r}")
    j = i + 1 if ch in "+-" else i
    k = j
    while k < n and s[k].isdigit():
        k += 1
    if k == j:
        raise DocumentParseError(f"expected a value near position {i} in {s!r}")
    return int(s[i:k]), k


def _node_to_value(ring: Ring, node):
    if isinstance(node, int):
        if isinstance(ring, Zmod):
            return node % ring.n
        if isinstance(ring, GaloisField):
            return ring.from_int(node)
        raise DocumentParseError(f"bare integer {node} is not a {ring} literal")
    tag, items = node
    if isinstance(ring, GaloisField) and tag == "P":
        if len(items) != ring.k or not all(isinstance(x, int) for x in items):
            raise DocumentParseError(f"GF({ring.order}) literal needs {ring.k} integer coefficients")
        return ring.from_coeffs(items)
    if isinstance(ring, ProductRing) and tag == "P":
        if len(items) != len(ring.components):
            raise DocumentParseError(
                f"product literal needs {len(ring.components)} components, got {len(items)}"
            )
        return tuple(_node_to_value(c, x) for c, x in zip(ring.components, items))
    if isinstance(ring, MatrixRing) and tag == "B":
        if len(items) != ring.size or not all(
            isinstance(r, tuple) and r[0] == "B" and len(r[1]) == ring.size for r in items
        ):
            raise DocumentParseError(f"matrix-ring literal must be {ring.size}x{ring.size}")
        return tuple(tuple(_node_to_value(ring.base, x) for x in row[1]) for row in items)
    raise DocumentParseError(f"literal {node!r} does not fit ring {ring}")


def parse_value(ring: Ring, text: str):
    node, end = _scan_node(text, 0)
    if text[end:].strip():
        raise DocumentParseError(f"trailing characters in literal {text!r}")
    return _node_to_value(ring, node)


# ---------------------------------------------------------------------------
# matrix documents


def format_matrix_doc(m: Matrix) -> str:
    return f"ring: {m.ring}\nrows: {_format_rows(m.ring, m.rows)}\n"


def _doc_fields(text: str) -> dict[str, str]:
    fields: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise DocumentParseError(f"expected 'key: value', got {line!r}")
        key = key.strip()
        if key in fields:
            raise DocumentParseError(f"duplicate field {key!r}")
        fields[key] = value.strip()
    return fields


def _parse_rows_field(ring: Ring, text: str) -> Matrix:
    node, end = _scan_node(text, 0)
    if text[end:].strip():
        raise DocumentParseError(f"trailing characters after rows in {text!r}")
    if not (isinstance(node, tuple) and node[0] == "B"):
        raise DocumentParseError("rows must be a bracketed list of rows")
    rows = []
    for row in node[1]:
        if not (isinstance(row, tuple) and row[0] == "B"):
            raise DocumentParseError("each row must be a bracketed list")
        rows.append([_node_to_value(ring, x) for x in row[1]])
    return Matrix(ring, rows)


def parse_matrix_doc(text: str) -> Matrix:
    fields = _doc_fields(text)
    for key in ("ring", "rows"):
        if key not in fields:
            raise DocumentParseError(f"matrix document is missing the {key!r} field")
    try:
        ring = parse_ring(fields["ring"])
    except RingParseError as exc:
        raise DocumentParseError(str(exc)) from None
    if not ring.commutative:
        raise DocumentParseError(f"matrix files take commutative scalar rings, got {ring}")
    return _parse_rows_field(ring, fields["rows"])


# ---------------------------------------------------------------------------
# certificate documents


_CERT_MATRIX_FIELDS = ("M", "U", "U_inv", "M_plus_U_inv", "M_minus_U_inv")


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_bool(text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise DocumentParseError(f"expected true/false, got {text!r}")


def format_certificate_doc(cert: TwinCertificate, two_sum=None) -> str:
    lines = [
        "kind: twin-certificate",
        f"method: {cert.method}",
        f"verified: {_fmt_bool(cert.verified)}",
        f"ring: {cert.ring}",
    ]
    for name in _CERT_MATRIX_FIELDS:
        lines.append(f"{name}: {_format_rows(cert.ring, getattr(cert, name).rows)}")
    if two_sum is not None:
        u1, u2 = two_sum
        lines.append(f"two_sum_U1: {_format_rows(cert.ring, u1.rows)}")
        lines.append(f"two_sum_U2: {_format_rows(cert.ring, u2.rows)}")
    return "\n".join(lines) + "\n"


def parse_certificate_doc(text: str) -> TwinCertificate:
    fields = _doc_fields(text)
    if fields.get("kind") != "twin-certificate":
        raise DocumentParseError("not a twin-certificate document")
    for key in ("method", "verified", "ring", *_CERT_MATRIX_FIELDS):
        if key not in fields:
            raise DocumentParseError(f"certificate is missing the {key!r} field")
    try:
        ring = parse_ring(fields["ring"])
    except RingParseError as exc:
        raise DocumentParseError(str(exc)) from None
    mats = {name: _parse_rows_field(ring, fields[name]) for name in _CERT_MATRIX_FIELDS}
    return TwinCertificate(
        ring=ring,
        M=mats["M"],
        U=mats["U"],
        U_inv=mats["U_inv"],
        M_plus_U_inv=mats["M_plus_U_inv"],
        M_minus_U_inv=mats["M_minus_U_inv"],
        method=fields["method"],
        verified=_parse_bool(fields["verified"]),
    )


# ---------------------------------------------------------------------------
# goodness reports


def _fmt_usn(usn) -> str:
    return str(usn)


def format_report_doc(report: GoodnessReport) -> str:
    lines = ["kind: goodness-report", f"ring: {report.ring}"]
    if report.error is not None:
        lines.append(f"error: {report.error}")
        lines.append(f"criterion_prediction: {_fmt_bool(report.criterion_prediction)}")
        return "\n".join(lines) + "\n"
    witness = (
        "none"
        if report.twin_failure_witness is None
        else format_value(report.ring, report.twin_failure_witness)
    )
    k_good = " ".join(f"{k}={_fmt_bool(v)}" for k, v in sorted(report.k_good_status.items()))
    lines += [
        f"twin_good: {_fmt_bool(report.twin_good)}",
        f"twin_failure_witness: {witness}",
        f"k_good: {k_good}",
        f"unit_sum_number: {_fmt_usn(report.unit_sum_number)}",
        f"criterion_prediction: {_fmt_bool(report.criterion_prediction)}",
        f"agreement: {_fmt_bool(report.agreement)}",
    ]
    return "\n".join(lines) + "\n"


_TABLE_HEADER = "ring\ttwin_good\tusn\tprediction\tagreement\terror"


def format_sweep_table(reports) -> str:
    """One tab-separated row per ring, suitable for diffing."""
    lines = [_TABLE_HEADER]
    for r in reports:
        if r.error is not None:
            lines.append(f"{r.ring}\t-\t-\t{_fmt_bool(r.criterion_prediction)}\t-\t{r.error}")
        else:
            lines.append(
                f"{r.ring}\t{_fmt_bool(r.twin_good)}\t{_fmt_usn(r.unit_sum_number)}"
                f"\t{_fmt_bool(r.criterion_prediction)}\t{_fmt_bool(r.agreement)}\t"
            )
    return "\n".join(lines) + "\n"
