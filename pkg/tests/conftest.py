"""Shared ring families and helpers for the test suite."""

import pytest

from twingood import GaloisField, ProductRing, Zmod


def commutative_test_rings(max_order):
    """Deterministic commutative family: Z/n, small Galois fields, products."""
    rings = [Zmod(n) for n in range(2, min(max_order, 36) + 1)]
    rings += [
        GaloisField(p, k)
        for p, k in ((2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5))
        if p**k <= max_order
    ]
    products = [
        ProductRing([Zmod(2), Zmod(3)]),
        ProductRing([Zmod(2), Zmod(2)]),
        ProductRing([Zmod(3), Zmod(3)]),
        ProductRing([Zmod(4), Zmod(9)]),
        ProductRing([GaloisField(2, 2), Zmod(5)]),
        ProductRing([Zmod(6), Zmod(6)]),
        ProductRing([Zmod(2), Zmod(2), Zmod(2)]),
        ProductRing([GaloisField(2, 2), GaloisField(3, 2)]),
    ]
    rings += [r for r in products if r.order <= max_order]
    return rings


@pytest.fixture
def small_rings():
    return commutative_test_rings(16)
