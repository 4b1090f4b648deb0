"""Mahler measure, house, and exact Kronecker classification.

The quantities with certified enclosures (mahler, house) are computed
from certified root disks; the near-unit-circle headache — deciding
whether a root modulus equals 1 — is never decided numerically.
Instead:

  * is_kronecker is an exact integer decision procedure (Graeffe
    iteration with a binomial coefficient bound and cycle detection);
  * before root finding, all cyclotomic factors are stripped exactly by
    gcd with t**N - 1 over the finitely many N whose totient fits the
    degree, so the factors that would pin root disks onto the unit
    circle are gone and contribute their exact factor 1.

Roots of a Salem-type factor still sit on the circle; the disk product
remains a sound enclosure for them because max(1, .) is applied to the
whole modulus interval of each disk component.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

import numpy

from . import _dyadic as dy
from .enclosure import Enclosure
from .errors import PolynomialError, PrecisionExhausted
from .poly import (
    IntPoly,
    divrem_exact,
    div_exact,
    euler_phi,
    gcd_primitive,
    squarefree_decomposition,
)
from .roots import DEFAULT_MAX_BITS, _certified_disks, components

__all__ = [
    "graeffe",
    "is_kronecker",
    "kronecker_free_part",
    "mahler",
    "house",
    "mahler_graeffe_oracle",
    "mahler_lower_bound",
    "MeasureResult",
    "measure",
]


def graeffe(f: IntPoly) -> IntPoly:
    """The root-squaring transform: a polynomial whose roots are the squares.

    Splitting f(t) = e(t**2) + t*o(t**2) gives f(t)*f(-t) = g(t**2) with
    g = e**2 - t*o**2.  The sign is normalized so that the leading
    coefficient of the result equals lc(f)**2; in particular monic input
    stays monic.  Everything is exact integer arithmetic.
    """
    if f.is_zero():
        raise PolynomialError("graeffe of the zero polynomial")
    even = IntPoly(f.coeffs[0::2])
    odd = IntPoly(f.coeffs[1::2])
    g = even * even - (odd * odd).shift(1)
    if f.degree % 2 == 1:
        g = -g
    assert g.degree == f.degree and g.leading == f.leading**2
    return g


def _strip_t_powers(f: IntPoly) -> tuple[int, IntPoly]:
    k = 0
    coeffs = f.coeffs
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
        k += 1
    return k, IntPoly(coeffs)


def is_kronecker(f: IntPoly) -> bool:
    """Exact decision: are all roots of f in {0} union the unit circle?

    For monic integer f this is equivalent to Mahler measure 1, i.e. f is
    t**k times a product of cyclotomic polynomials.  The procedure strips
    t-powers and then iterates the Graeffe transform: if all roots lie on
    the circle, every iterate has coefficients bounded by the central
    binomial coefficient C(d, floor(d/2)), so the integer iterates live in
    a finite set and must eventually repeat (answer: yes).  If some root
    lies off the circle, the measure of the iterates grows like M**(2**k),
    which forces a coefficient past the bound (answer: no).  Either way
    the loop terminates, with no floating arithmetic anywhere.
    """
    if f.is_zero():
        raise PolynomialError("is_kronecker of the zero polynomial")
    if not f.is_monic():
        raise PolynomialError("is_kronecker requires monic input")
    _, g = _strip_t_powers(f)
    if g.degree == 0:
        return True
    d = g.degree
    bound = math.comb(d, d // 2)
    seen = {g.coeffs}
    while True:
        if any(abs(c) > bound for c in g.coeffs):
            return False
        g = graeffe(g)
        if g.coeffs in seen:
            return True
        seen.add(g.coeffs)


def _max_cyclotomic_order(d: int) -> int:
    """Largest N with euler_phi(N) <= d (totient lower bound gives N <= 2*d*d)."""
    best = 1
    for n in range(1, 2 * d * d + 1):
        if euler_phi(n) <= d:
            best = n
    return best


def kronecker_free_part(f: IntPoly) -> tuple[IntPoly, int, int]:
    """Split monic f into t**k * (cyclotomic product) * u with u cyclotomic-free.

    Returns (u, degree of the cyclotomic part, k).  Any cyclotomic factor
    of f has order N with euler_phi(N) <= deg f, and divides t**N - 1, so
    repeatedly dividing out gcd(f, t**N - 1) over all such N removes every
    cyclotomic factor including multiplicities.
    """
    if not f.is_monic():
        raise PolynomialError("kronecker_free_part requires monic input")
    k, u = _strip_t_powers(f)
    d = u.degree
    stripped = 0
    if d == 0:
        return u, 0, k
    for n in range(1, _max_cyclotomic_order(d) + 1):
        # work with (t**n - 1) mod u to keep the gcd inputs small
        tn = IntPoly((-1,) + (0,) * (n - 1) + (1,))
        while u.degree > 0:
            _, r = divrem_exact(tn, u)
            if r.is_zero():
                g = u
            else:
                g = gcd_primitive(u, r)
            if g.degree == 0:
                break
            u = div_exact(u, g)
            stripped += g.degree
    return u, stripped, k


# -- certified enclosures --------------------------------------------------


def _disk_data(f: IntPoly, tol: Fraction, max_bits: int):
    """Certified disks for the squarefree parts of monic cyclotomic-free f.

    Yields (disks, multiplicity) pairs plus the largest precision used.
    """
    bits = 0
    out = []
    for p, mult in squarefree_decomposition(f):
        disks, prec = _certified_disks(p, tol, max_bits)
        bits = max(bits, prec)
        out.append((disks, mult))
    return out, bits


def mahler(
    f: IntPoly, tol: float = 1e-10, max_bits: int = DEFAULT_MAX_BITS
) -> Enclosure:
    """Certified enclosure of the Mahler measure of a monic f, width <= tol.

    M(f) is the product of max(1, |alpha|) over all roots.  Kronecker
    inputs return the exact point [1, 1].  Otherwise the cyclotomic part
    is stripped (factor exactly 1) and the remaining roots are enclosed by
    certified disks; overlapping disks are grouped into components, and a
    component of k disks contributes a factor interval raised to the k-th
    power, which keeps the product sound even when disks cannot be told
    apart.  All interval arithmetic is exact rational until the final
    outward float conversion.
    """
    if not f.is_monic():
        raise PolynomialError("mahler requires monic input")
    if is_kronecker(f):
        return Enclosure(1.0, 1.0, 0)
    u, _, _ = kronecker_free_part(f)
    root_tol = Fraction(min(tol, 1.0)) / (8 * (f.degree + 1) * _height_bound(f))
    while True:
        parts, bits = _disk_data(u, root_tol, max_bits)
        lo, hi = Fraction(1), Fraction(1)
        for disks, mult in parts:
            for group in components(disks):
                g_lo = max(Fraction(1), min(disks[i].mod_lo for i in group))
                g_hi = max(Fraction(1), max(disks[i].mod_hi for i in group))
                lo *= (g_lo ** len(group)) ** mult
                hi *= (g_hi ** len(group)) ** mult
        lo = max(lo, Fraction(1))
        enc = Enclosure.from_bounds(lo, hi, bits)
        if enc.width <= tol:
            return enc
        _check_float_floor(lo, hi, enc, tol, max_bits)
        root_tol /= 16


def _height_bound(f: IntPoly) -> int:
    """Integer upper bound for M(f), from the coefficient l2 norm."""
    s = sum(c * c for c in f.coeffs)
    return max(1, math.isqrt(s) + 1)


def _check_float_floor(
    lo: Fraction, hi: Fraction, enc: Enclosure, tol: float, max_bits: int
) -> None:
    """Abort refinement when double endpoints are the binding constraint.

    Enclosures carry float endpoints, so their width can never drop below
    about one ulp of the value.  If the exact rational interval is already
    four times tighter than the request while the rounded enclosure is
    not, further root refinement cannot help and would loop forever.
    """
    if hi - lo <= Fraction(tol) / 4:
        raise PrecisionExhausted(
            f"enclosure width {enc.width:.3g} cannot reach {tol:.3g} with "
            "float endpoints",
            max_bits,
        )


def house(
    f: IntPoly, tol: float = 1e-10, max_bits: int = DEFAULT_MAX_BITS
) -> Enclosure:
    """Certified enclosure of the house (largest root modulus), width <= tol.

    For monic input: [0, 0] for a pure power of t, the exact point [1, 1]
    for Kronecker input with a nonzero root, and otherwise a disk-based
    enclosure of the largest modulus, with the cyclotomic part stripped
    first (it contributes exactly 1).  The lower bound uses the fact that
    each certified disk contains at least one root.  Non-monic input is
    enclosed directly from root disks without exact stripping.
    """
    if f.is_zero() or f.degree < 1:
        raise PolynomialError("house requires degree >= 1")
    if not f.is_monic():
        return _house_direct(f, tol, max_bits)
    k, u = _strip_t_powers(f)
    if u.degree == 0:
        return Enclosure(0.0, 0.0, 0)
    if is_kronecker(f):
        return Enclosure(1.0, 1.0, 0)
    u, stripped, _ = kronecker_free_part(u)
    has_unit_root = stripped > 0
    root_tol = Fraction(min(tol, 1.0)) / 4
    while True:
        parts, bits = _disk_data(u, root_tol, max_bits)
        lo = Fraction(1) if has_unit_root else Fraction(0)
        hi = lo
        for disks, _ in parts:
            for d in disks:
                lo = max(lo, d.mod_lo)
                hi = max(hi, d.mod_hi)
        # monic with a nonzero root forces house >= 1
        lo = max(lo, Fraction(1))
        hi = max(hi, Fraction(1))
        enc = Enclosure.from_bounds(lo, hi, bits)
        if enc.width <= tol:
            return enc
        _check_float_floor(lo, hi, enc, tol, max_bits)
        root_tol /= 16


def _house_direct(f: IntPoly, tol: float, max_bits: int) -> Enclosure:
    k, u = _strip_t_powers(f)
    if u.degree == 0:
        return Enclosure(0.0, 0.0, 0)
    root_tol = Fraction(min(tol, 1.0)) / 4
    while True:
        disks, bits = _certified_disks(u, root_tol, max_bits)
        lo = max(d.mod_lo for d in disks)
        hi = max(d.mod_hi for d in disks)
        if k:
            hi = max(hi, Fraction(0))
        enc = Enclosure.from_bounds(lo, hi, bits)
        if enc.width <= tol:
            return enc
        _check_float_floor(lo, hi, enc, tol, max_bits)
        root_tol /= 16


def mahler_lower_bound(f: IntPoly, steps: int = 6) -> float:
    """A cheap certified lower bound for M(f), used to prune searches.

    After k Graeffe steps, M(f)**(2**k) = M(f_k) >= ||f_k||_2 / 2**d
    (coefficient j of f_k is at most C(d, j) * M(f_k) in absolute value),
    so the 2**k-th root of that quotient bounds M(f) from below.  The
    float evaluation rounds downward by a generous margin.
    """
    if not f.is_monic():
        raise PolynomialError("mahler_lower_bound requires monic input")
    g = f
    for _ in range(steps):
        g = graeffe(g)
    s = sum(c * c for c in g.coeffs)
    # log2 ||f_k||_2 = log2(s)/2, computed safely for huge integers
    bl = s.bit_length()
    mant = s >> max(0, bl - 53)
    log2_s = math.log2(mant) + max(0, bl - 53)
    log2_bound = (log2_s / 2 - f.degree) / (1 << steps)
    return max(1.0, 2.0 ** (log2_bound - 1e-9))


def mahler_graeffe_oracle(f: IntPoly, iterations: int = 8) -> float:
    """Uncertified Mahler estimate from exact Graeffe iterates, for testing.

    The polynomial is Graeffe-iterated exactly; a repeat among the integer
    iterates proves measure 1 and returns exactly 1.0.  Otherwise the
    measure of the last iterate f_k is evaluated as its Jensen mean
    exp(avg log |f_k| on the unit circle) by a trapezoidal rule on scaled
    floats, and the 2**k-th root is taken.  Off-circle root contributions
    to the quadrature error decay doubly exponentially in the iteration
    count, so the estimate converges to M(f) as iterations grow.  This
    path shares nothing with the certified root-disk pipeline.
    """
    if not f.is_monic():
        raise PolynomialError("mahler_graeffe_oracle requires monic input")
    if iterations < 0:
        raise PolynomialError("iterations must be nonnegative")
    g = f
    seen = {g.coeffs}
    for _ in range(iterations):
        g = graeffe(g)
        if g.coeffs in seen:
            return 1.0
        seen.add(g.coeffs)
    top = max(abs(c) for c in g.coeffs)
    shift = max(0, top.bit_length() - 53)

    def scaled(c: int) -> float:
        return float(c >> shift if c >= 0 else -((-c) >> shift))

    coeffs = numpy.array([scaled(c) for c in g.coeffs], dtype=float)
    n_nodes = 16384
    theta = 2.0 * numpy.pi * (numpy.arange(n_nodes) + 0.5) / n_nodes
    values = numpy.abs(numpy.polyval(coeffs[::-1], numpy.exp(1j * theta)))
    values = numpy.maximum(values, 1e-300)
    mean_log = float(numpy.mean(numpy.log(values))) + shift * math.log(2.0)
    return math.exp(max(0.0, mean_log) / (1 << iterations))


# -- aggregate result -------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class MeasureResult:
    """Everything the measure command reports about one polynomial."""

    mahler: Enclosure
    house: Enclosure
    is_kronecker: bool
    root_count_outside_unit_circle: int
    root_count_certified: bool

    def to_json(self) -> dict:
        return {
            "mahler": self.mahler.to_json(),
            "house": self.house.to_json(),
            "is_kronecker": self.is_kronecker,
            "root_count_outside_unit_circle": self.root_count_outside_unit_circle,
            "root_count_certified": self.root_count_certified,
        }


def measure(
    f: IntPoly, tol: float = 1e-10, max_bits: int = DEFAULT_MAX_BITS
) -> MeasureResult:
    """Certified Mahler/house enclosures plus exact classification data.

    The root count outside the unit circle is exact whenever every disk
    is resolved against the circle; Salem-type roots on the circle leave
    straddling disks, in which case the count is a certified lower bound
    and the certified flag is False.
    """
    if not f.is_monic():
        raise PolynomialError("measure requires monic input")
    kron = is_kronecker(f)
    if kron:
        return MeasureResult(Enclosure(1.0, 1.0, 0), house(f, tol, max_bits),
                             True, 0, True)
    m = mahler(f, tol, max_bits)
    h = house(f, tol, max_bits)
    u, _, _ = kronecker_free_part(f)
    parts, _ = _disk_data(u, Fraction(min(tol, 1e-6)), max_bits)
    outside = 0
    certified = True
    for disks, mult in parts:
        for d in disks:
            if d.mod_lo > 1:
                outside += mult
            elif not d.mod_hi < 1:
                certified = False
    return MeasureResult(m, h, False, outside, certified)
