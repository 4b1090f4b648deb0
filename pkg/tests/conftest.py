"""Shared oracles and generators for the test suite.

The oracles here deliberately avoid the package's own algorithms:
root-based quantities come from numpy's eigenvalue-based root finder,
characteristic polynomials from naive cofactor expansion, and number
theory from sympy.  Tests compare certified results against these
independent implementations.
"""

from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from skewrec.poly import ONE, IntPoly, cyclotomic, euler_phi

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def brute_roots(f: IntPoly) -> np.ndarray:
    """Roots via numpy's companion-matrix eigenvalues (independent oracle)."""
    return np.roots(list(reversed(f.coeffs)))


def brute_mahler(f: IntPoly) -> float:
    prod = abs(f.leading)
    for r in brute_roots(f):
        prod *= max(1.0, abs(r))
    return float(prod)


def brute_house(f: IntPoly) -> float:
    return float(max(abs(r) for r in brute_roots(f)))


def charpoly_cofactor(m) -> IntPoly:
    """det(tI - M) by cofactor expansion over polynomial entries.

    Exponential in the size; intended for matrices up to about 6x6.
    """
    n = m.size
    t = IntPoly((0, 1))
    entries = [
        [
            (t if i == j else IntPoly(())) - IntPoly((m[i, j],))
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(rows, cols):
        if len(cols) == 1:
            return entries[rows[0]][cols[0]]
        acc = IntPoly(())
        top = rows[0]
        rest = rows[1:]
        for pos, c in enumerate(cols):
            minor = det(rest, cols[:pos] + cols[pos + 1:])
            term = entries[top][c] * minor
            acc = acc + term if pos % 2 == 0 else acc - term
        return acc

    return det(tuple(range(n)), tuple(range(n)))


def cyclotomic_products(max_degree: int):
    """Every product of cyclotomic polynomials of total degree <= max_degree.

    Products are generated as multisets of orders (each multiset once),
    excluding the empty product.
    """
    orders = [
        n
        for n in range(1, 2 * max_degree * max_degree + 1)
        if euler_phi(n) <= max_degree
    ]

    def rec(start: int, remaining: int, acc: IntPoly):
        for idx in range(start, len(orders)):
            d = euler_phi(orders[idx])
            if d > remaining:
                continue
            p = acc * cyclotomic(orders[idx])
            yield p
            yield from rec(idx, remaining - d, p)

    yield from rec(0, max_degree, ONE)


def random_monic(rng: random.Random, max_degree: int, height: int) -> IntPoly:
    """A random monic polynomial with nonzero constant term."""
    degree = rng.randint(1, max_degree)
    while True:
        coeffs = [rng.randint(-height, height) for _ in range(degree)]
        if coeffs[0] != 0:
            return IntPoly(coeffs + [1])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260825)
