"""Certified root disks versus an independent eigenvalue-based oracle."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_roots, random_monic
from skewrec.errors import PolynomialError, PrecisionExhausted
from skewrec.poly import LEHMER_POLY, IntPoly
from skewrec.roots import roots_certified


def assert_disks_cover_oracle(f, disks, slack=1e-7):
    """Each oracle root must lie in some disk (up to oracle error)."""
    oracle = list(brute_roots(f))
    assert len(disks) == f.degree
    for r in oracle:
        assert any(
            abs(complex(r) - d.center) <= d.radius + slack for d in disks
        ), f"oracle root {r} not covered for {f}"


class TestAgainstOracle:
    @pytest.mark.parametrize(
        "coeffs",
        [
            (1, -3, 1),
            (-1, -1, 1),
            (2, 0, 1),
            (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1),
            (5, 4, 3, 2, 1),
            (-2, 0, 0, 0, 0, 0, 1),
        ],
    )
    def test_known_polynomials(self, coeffs):
        f = IntPoly(coeffs)
        disks = roots_certified(f, tol=1e-10)
        assert_disks_cover_oracle(f, disks)
        assert all(d.radius <= 1e-10 for d in disks)

    def test_random_polynomials(self, rng):
        for _ in range(40):
            f = random_monic(rng, 8, 6)
            disks = roots_certified(f, tol=1e-8)
            assert_disks_cover_oracle(f, disks)


class TestStructure:
    def test_roots_at_zero_are_exact(self):
        f = IntPoly([0, 0, 0, 1, -3, 1]).shift(0)  # t^3 (t^2 - 3t + 1)
        disks = roots_certified(f, tol=1e-12)
        zeros = [d for d in disks if d.center == 0 and d.radius == 0.0]
        assert len(zeros) == 3
        assert len(disks) == 5

    def test_multiplicities_replicated(self):
        f = IntPoly([-2, 1]) ** 3 * IntPoly([1, 1]) ** 2
        disks = roots_certified(f, tol=1e-10)
        assert len(disks) == 5
        near_two = [d for d in disks if abs(d.center - 2) < 1e-9]
        near_minus_one = [d for d in disks if abs(d.center + 1) < 1e-9]
        assert len(near_two) == 3 and len(near_minus_one) == 2

    def test_non_monic_squarefree(self):
        f = IntPoly([1, -3, 2])  # (2t - 1)(t - 1)
        disks = roots_certified(f, tol=1e-12)
        assert_disks_cover_oracle(f, disks)
        mods = sorted(abs(d.center) for d in disks)
        assert abs(mods[0] - 0.5) < 1e-10 and abs(mods[1] - 1.0) < 1e-10

    def test_radii_never_exceed_tolerance(self, rng):
        for _ in range(10):
            f = random_monic(rng, 6, 4)
            for tol in (1e-6, 1e-12):
                disks = roots_certified(f, tol=tol)
                assert all(d.radius <= tol for d in disks)

    def test_determinism(self):
        a = roots_certified(LEHMER_POLY, tol=1e-12)
        b = roots_certified(LEHMER_POLY, tol=1e-12)
        assert [(d.center, d.radius) for d in a] == [
            (d.center, d.radius) for d in b
        ]


class TestErrors:
    def test_zero_polynomial_rejected(self):
        with pytest.raises(PolynomialError):
            roots_certified(IntPoly([]))

    def test_nonpositive_tolerance_rejected(self):
        with pytest.raises(PolynomialError):
            roots_certified(IntPoly([1, 1]), tol=0.0)

    def test_precision_exhausted_is_raised(self):
        with pytest.raises(PrecisionExhausted):
            roots_certified(LEHMER_POLY, tol=1e-40, max_bits=64)

    def test_constant_polynomial_has_no_roots(self):
        assert roots_certified(IntPoly([7])) == []


class TestSerialization:
    def test_disk_json(self):
        (disk,) = roots_certified(IntPoly([-2, 1]), tol=1e-12)
        doc = disk.to_json()
        assert set(doc) == {"re", "im", "radius"}
        assert float(doc["re"]) == disk.center.real
