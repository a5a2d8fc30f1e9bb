"""Ring-core behavior: enumeration, units, radical, idempotents, parsing."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twingood import (
    ExhaustionBoundExceeded,
    GaloisField,
    MatrixRing,
    NotUnitRegular,
    ProductRing,
    RingParseError,
    Zmod,
    elements,
    has_factor_Z2_or_Z3,
    has_factor_Z2_or_Z3_exhaustive,
    idempotents,
    jacobson_radical,
    jacobson_radical_exhaustive,
    parse_family,
    parse_ring,
    unit_regular_decompose,
    units,
)
from twingood.rings import factorize, radical

from conftest import commutative_test_rings


def oracle_rings():
    """Rings the exhaustive cross-check oracles run on (order <= 2^8)."""
    return commutative_test_rings(36) + [
        GaloisField(2, 4),
        GaloisField(5, 2),
        GaloisField(3, 3),
        GaloisField(2, 5),
        MatrixRing(Zmod(2), 2),
        MatrixRing(Zmod(3), 2),
        MatrixRing(Zmod(4), 2),
        MatrixRing(GaloisField(2, 2), 2),
        MatrixRing(Zmod(6), 1),
    ]


# ---------------------------------------------------------------------------
# enumeration


def test_elements_zmod4():
    assert elements(Zmod(4)) == [0, 1, 2, 3]


def test_elements_gf4():
    assert len(elements(GaloisField(2, 2))) == 4


def test_elements_product():
    assert len(elements(ProductRing([Zmod(2), Zmod(3)]))) == 6


def test_elements_unique_and_count():
    for ring in oracle_rings():
        es = elements(ring)
        assert len(es) == ring.order
        assert len(set(es)) == ring.order


def test_exhaustion_bound():
    with pytest.raises(ExhaustionBoundExceeded):
        elements(Zmod(100_000))
    assert len(elements(Zmod(100_000), bound=100_000)) == 100_000
    with pytest.raises(ExhaustionBoundExceeded):
        units(Zmod(40), bound=10)


# ---------------------------------------------------------------------------
# units


def test_unit_examples():
    z6 = Zmod(6)
    assert z6.is_unit(5) and z6.unit_inverse(5) == 5
    assert not z6.is_unit(2) and z6.unit_inverse(2) is None
    gf4 = GaloisField(2, 2)
    for x in range(1, 4):
        inv = gf4.unit_inverse(x)
        assert inv is not None and gf4.mul(x, inv) == 1


def test_is_unit_matches_exhaustive_search():
    for ring in oracle_rings():
        es = elements(ring)
        one = ring.one()
        for x in es:
            brute = next((y for y in es if ring.mul(x, y) == one and ring.mul(y, x) == one), None)
            inv = ring.unit_inverse(x)
            assert (inv is None) == (brute is None), (ring, x)
            if inv is not None:
                assert ring.mul(x, inv) == one and ring.mul(inv, x) == one


def test_unit_counts_of_matrix_rings():
    assert len(units(MatrixRing(Zmod(2), 2))) == 6
    assert len(units(MatrixRing(Zmod(3), 2))) == 48
    assert len(units(MatrixRing(Zmod(2), 3))) == 168


# ---------------------------------------------------------------------------
# ring axioms


AXIOM_EXHAUSTIVE = [
    Zmod(2), Zmod(3), Zmod(4), Zmod(6), Zmod(8), Zmod(12),
    GaloisField(2, 2), GaloisField(2, 3), GaloisField(3, 2), GaloisField(2, 4),
    ProductRing([Zmod(2), Zmod(3)]),
    MatrixRing(Zmod(2), 2),
]

AXIOM_SAMPLED = [
    Zmod(25), Zmod(36), GaloisField(5, 2), GaloisField(3, 3), GaloisField(2, 5),
    MatrixRing(Zmod(3), 2), MatrixRing(Zmod(4), 2),
    ProductRing([Zmod(4), Zmod(9)]),
]


def _check_axioms(ring, triples):
    zero, one = ring.zero(), ring.one()
    for a, b, c in triples:
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.mul(ring.add(b, c), a) == ring.add(ring.mul(b, a), ring.mul(c, a))
        assert ring.add(a, b) == ring.add(b, a)
        if ring.commutative:
            assert ring.mul(a, b) == ring.mul(b, a)
        assert ring.add(a, zero) == a
        assert ring.mul(a, one) == a and ring.mul(one, a) == a
        assert ring.add(a, ring.neg(a)) == zero
        assert ring.sub(a, b) == ring.add(a, ring.neg(b))


def test_ring_axioms_exhaustive_small():
    # full triple loops are kept to rings of order <= 16; larger members of
    # the order-<=2^8 family are covered by the seeded sampling test below
    for ring in AXIOM_EXHAUSTIVE:
        es = elements(ring)
        triples = [(a, b, c) for a in es for b in es for c in es]
        _check_axioms(ring, triples)


def test_ring_axioms_sampled_large():
    rng = random.Random(4242)
    for ring in AXIOM_SAMPLED:
        triples = [
            (ring.random_element(rng), ring.random_element(rng), ring.random_element(rng))
            for _ in range(3000)
        ]
        _check_axioms(ring, triples)


@given(st.integers(2, 200), st.integers(), st.integers(), st.integers())
@settings(max_examples=200)
def test_zmod_matches_integer_arithmetic(n, a, b, c):
    ring = Zmod(n)
    x, y, z = a % n, b % n, c % n
    assert ring.add(x, y) == (a + b) % n
    assert ring.mul(x, y) == (a * b) % n
    assert ring.sub(x, y) == (a - b) % n
    assert ring.mul(x, ring.add(y, z)) == (a * (b + c)) % n


# ---------------------------------------------------------------------------
# Jacobson radical


def test_radical_examples():
    assert jacobson_radical(Zmod(4)) == frozenset({0, 2})
    assert jacobson_radical(Zmod(6)) == frozenset({0})
    m2f2 = MatrixRing(Zmod(2), 2)
    assert jacobson_radical(m2f2) == frozenset({m2f2.zero()})


def test_radical_structural_matches_generic():
    for n in range(2, 65):
        assert jacobson_radical(Zmod(n)) == jacobson_radical_exhaustive(Zmod(n)), n


def test_radical_of_fields_is_zero():
    for q in ((2, 2), (2, 3), (3, 2), (5, 1)):
        ring = GaloisField(*q)
        assert jacobson_radical(ring) == frozenset({0})


# ---------------------------------------------------------------------------
# idempotent * unit factorization


def test_unit_regular_examples():
    z5 = Zmod(5)
    assert unit_regular_decompose(z5, 0) == (0, 1)
    assert unit_regular_decompose(z5, 2) == (1, 2)
    assert unit_regular_decompose(Zmod(6), 3) == (3, 1)
    with pytest.raises(NotUnitRegular):
        unit_regular_decompose(Zmod(4), 2)


def test_idempotents_of_z6():
    assert idempotents(Zmod(6)) == [0, 1, 3, 4]


def test_unit_regular_squarefree_total():
    for n in (6, 10, 15, 30):
        ring = Zmod(n)
        for a in elements(ring):
            e, u = unit_regular_decompose(ring, a)
            assert ring.mul(e, e) == e
            assert ring.is_unit(u)
            assert ring.mul(e, u) == a


def test_unit_regular_fails_somewhere_with_square_factor():
    for n in (4, 8, 9, 12, 18):
        ring = Zmod(n)
        failures = 0
        for a in elements(ring):
            try:
                unit_regular_decompose(ring, a)
            except NotUnitRegular:
                failures += 1
        assert failures > 0, n


def test_unit_regular_deterministic_first_hit():
    ring = Zmod(15)
    for a in elements(ring):
        first = unit_regular_decompose(ring, a)
        # replay the documented scan order independently
        es = idempotents(ring)
        us = units(ring)
        brute = next(((e, u) for e in es for u in us if ring.mul(e, u) == a), None)
        assert first == brute


# ---------------------------------------------------------------------------
# factor-ring criterion


def test_has_factor_examples():
    assert has_factor_Z2_or_Z3(Zmod(12)) is True
    assert has_factor_Z2_or_Z3(GaloisField(2, 2)) is False
    assert has_factor_Z2_or_Z3(MatrixRing(Zmod(2), 2)) is False
    assert has_factor_Z2_or_Z3(MatrixRing(Zmod(2), 1)) is True
    assert has_factor_Z2_or_Z3(ProductRing([GaloisField(2, 2), Zmod(9)])) is True


def test_has_factor_matches_ideal_enumeration():
    for ring in oracle_rings():
        assert has_factor_Z2_or_Z3(ring) == has_factor_Z2_or_Z3_exhaustive(ring), str(ring)


# ---------------------------------------------------------------------------
# Galois fields


def test_gf_modulus_choices():
    assert GaloisField(2, 2).modulus == (1, 1, 1)
    assert GaloisField(2, 3).modulus == (1, 1, 0, 1)
    assert GaloisField(3, 2).modulus == (1, 0, 1)
    assert GaloisField(2, 4).modulus == (1, 1, 0, 0, 1)


def test_gf_modulus_deterministic():
    assert GaloisField(5, 2).modulus == GaloisField(5, 2).modulus
    assert GaloisField(7, 1).modulus == GaloisField(7, 1).modulus


def test_gf_inverse_law():
    for p, k in ((2, 2), (2, 3), (3, 2), (5, 2)):
        ring = GaloisField(p, k)
        for x in range(1, ring.order):
            assert ring.mul(x, ring.unit_inverse(x)) == 1


def test_gf_coeff_round_trip():
    ring = GaloisField(3, 2)
    for x in elements(ring):
        assert ring.from_coeffs(ring.coeffs(x)) == x


def test_gf_rejects_bad_parameters():
    with pytest.raises(ValueError):
        GaloisField(4, 2)
    with pytest.raises(ValueError):
        GaloisField(2, 0)


# ---------------------------------------------------------------------------
# descriptor parsing


def test_parse_round_trips():
    for text in ("Z/12", "GF(4)", "GF(2,2)", "Z/2 x Z/3", "M(2, Z/2)", "GF(9) x Z/5", "M(2, Z/2 x Z/3)"):
        ring = parse_ring(text)
        assert parse_ring(str(ring)) == ring


def test_parse_whitespace_insensitive():
    assert parse_ring(" Z / 12 ") == Zmod(12)
    assert parse_ring("M( 2 , Z/2 )") == MatrixRing(Zmod(2), 2)
    assert parse_ring("Z/2xZ/3") == ProductRing([Zmod(2), Zmod(3)])


def test_parse_gf_forms_agree():
    assert parse_ring("GF(4)") == parse_ring("GF(2,2)") == GaloisField(2, 2)


def test_parse_errors():
    for bad in ("", "Q/5", "Z/1", "Z/x", "GF(6)", "GF(0)", "M(0, Z/2)", "M(2)", "Z/2 x", "GF(2", "M(2, M(2, Z/2) x Z/3"):
        with pytest.raises(RingParseError):
            parse_ring(bad)


def test_parse_family():
    fam = parse_family("Z/2..4, GF(4), M(2, Z/2..3)")
    assert [str(r) for r in fam] == ["Z/2", "Z/3", "Z/4", "GF(4)", "M(2, Z/2)", "M(2, Z/3)"]
    assert parse_family("") == []
    assert parse_family(" Z/5 ") == [Zmod(5)]
    with pytest.raises(RingParseError):
        parse_family("Z/5..3")
    with pytest.raises(RingParseError):
        parse_family("Z/a..b")


# ---------------------------------------------------------------------------
# misc structure


def test_from_int_is_ring_hom():
    for ring in commutative_test_rings(36):
        for m in range(-5, 12):
            expected = ring.zero()
            for _ in range(abs(m)):
                expected = ring.add(expected, ring.one())
            if m < 0:
                expected = ring.neg(expected)
            assert ring.from_int(m) == expected, (str(ring), m)


def test_matrix_ring_requires_commutative_base():
    with pytest.raises(ValueError):
        MatrixRing(MatrixRing(Zmod(2), 2), 2)


def test_number_theory_helpers():
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(97) == [(97, 1)]
    assert radical(72) == 6
    assert radical(30) == 30


def test_random_element_deterministic():
    ring = ProductRing([Zmod(4), GaloisField(2, 2)])
    a = [ring.random_element(random.Random(7)) for _ in range(10)]
    b = [ring.random_element(random.Random(7)) for _ in range(10)]
    assert a == b
