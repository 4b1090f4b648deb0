"""Height-bounded searches over reciprocal and skew-reciprocal families.

A search space fixes the symmetry class, an even degree 2d, and a height
bound H; members are monic, the free coefficients are c_d..c_(2d-1), each
ranging over [-H, H] in lexicographic order, and the bottom half is
derived from the class identity (c_k = c_(2d-k), respectively
c_k = (-1)**(d+k) * c_(2d-k)).  Enumeration size is exactly (2H+1)**d.

Minimum searches run in two phases so that results are bit-identical for
any worker count:

  * phase 1 scans fixed chunks (one per value of the first free
    coefficient), excluding Kronecker members exactly and computing a
    base enclosure per surviving member; chunks share no state, so the
    schedule cannot influence anything;
  * phase 2 keeps every candidate whose certified lower bound does not
    exceed the smallest certified upper bound, then refines this set at
    progressively finer tolerances until a single witness remains or the
    escalation budget is spent; unresolved ties are reported in full.

For Mahler searches a cheap Graeffe-based lower bound participates in
candidate elimination unconditionally; the prune flag only controls
whether members disqualified by that bound alone skip the expensive
enclosure computation.  Pruned or not, reports are identical.
"""

from __future__ import annotations

import dataclasses
import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator, Optional

from .enclosure import Enclosure, log_of_fraction
from .errors import BudgetExceeded, PolynomialError, PrecisionExhausted
from .measure import house, is_kronecker, mahler, mahler_lower_bound
from .poly import BREUSCH_BOUND, IntPoly
from .roots import DEFAULT_MAX_BITS
from .structure import NonreciprocalWitness, decompose_skew_reciprocal

__all__ = [
    "SearchSpace",
    "SearchReport",
    "enumerate_space",
    "min_mahler",
    "min_house",
    "SequenceRow",
    "SequenceTable",
    "sequence_table",
    "DecompositionSurvey",
    "verify_decomposition_over_space",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 5_000_000
_ESCALATION_ROUNDS = 3

RECIPROCAL = "reciprocal"
SKEW = "skew_reciprocal"


@dataclasses.dataclass(frozen=True)
class SearchSpace:
    """The family of monic degree-2d polynomials of one symmetry class."""

    kind: str
    degree: int
    height: int

    def __post_init__(self):
        if self.kind not in (RECIPROCAL, SKEW):
            raise PolynomialError(f"unknown kind {self.kind!r}")
        if self.degree < 2 or self.degree % 2 != 0:
            raise PolynomialError("degree must be even and >= 2")
        if self.height < 0:
            raise PolynomialError("height must be >= 0")

    @property
    def half_degree(self) -> int:
        return self.degree // 2

    @property
    def size(self) -> int:
        return (2 * self.height + 1) ** self.half_degree

    def member(self, free: tuple[int, ...]) -> IntPoly:
        """The member with free coefficients (c_d, ..., c_(2d-1))."""
        d = self.half_degree
        if len(free) != d:
            raise PolynomialError("free coefficient vector has wrong length")
        coeffs = [0] * (self.degree + 1)
        coeffs[self.degree] = 1
        for offset, c in enumerate(free):
            coeffs[d + offset] = c
        for k in range(d):
            mirror = coeffs[self.degree - k]
            if self.kind == RECIPROCAL:
                coeffs[k] = mirror
            else:
                coeffs[k] = (-1) ** (d + k) * mirror
        return IntPoly(coeffs)

    def free_vector(self, f: IntPoly) -> tuple[int, ...]:
        d = self.half_degree
        return tuple(f[d + i] for i in range(d))

    def contains(self, f: IntPoly) -> bool:
        if f.degree != self.degree or not f.is_monic():
            return False
        free = self.free_vector(f)
        if any(abs(c) > self.height for c in free):
            return False
        return self.member(free) == f

    def free_vectors(self) -> Iterator[tuple[int, ...]]:
        rng = range(-self.height, self.height + 1)
        return itertools.product(rng, repeat=self.half_degree)

    def free_vectors_with_first(self, first: int) -> Iterator[tuple[int, ...]]:
        rng = range(-self.height, self.height + 1)
        rest = itertools.product(rng, repeat=self.half_degree - 1)
        return ((first,) + tail for tail in rest)

    def to_json(self) -> dict:
        return {"kind": self.kind, "degree": self.degree, "height": self.height}


def enumerate_space(space: SearchSpace) -> Iterator[IntPoly]:
    """All members in lexicographic order of the free coefficient vector."""
    for free in space.free_vectors():
        yield space.member(free)


# -- phase 1 -----------------------------------------------------------------

# per-candidate record: (free, kronecker?, lower_bound_float|None,
#                        (lo, hi, bits)|None)
_Record = tuple[tuple[int, ...], bool, Optional[float], Optional[tuple]]


def _scan_chunk(args) -> list[_Record]:
    (kind, degree, height, first, quantity, tol0, prune, max_bits) = args
    space = SearchSpace(kind, degree, height)
    records: list[_Record] = []
    best_hi: Optional[float] = None
    for free in space.free_vectors_with_first(first):
        f = space.member(free)
        if is_kronecker(f):
            records.append((free, True, None, None))
            continue
        if quantity == "mahler":
            gb = mahler_lower_bound(f)
            if prune and best_hi is not None and gb > best_hi:
                records.append((free, False, gb, None))
                continue
            enc = mahler(f, tol0, max_bits)
        else:
            gb = None
            enc = house(f, tol0, max_bits)
        if best_hi is None or enc.hi < best_hi:
            best_hi = enc.hi
        records.append((free, False, gb, (enc.lo, enc.hi, enc.bits)))
    return records


@dataclasses.dataclass(frozen=True)
class SearchReport:
    """Outcome of a minimum search, deterministic for a given configuration."""

    space: SearchSpace
    quantity: str
    tol: float
    enumerated: int
    excluded_kronecker: int
    minimum: Optional[Enclosure]
    witnesses: tuple[IntPoly, ...]
    witness_enclosures: tuple[Enclosure, ...]
    precision_escalations: int
    precision_exhausted: bool

    def to_json(self) -> dict:
        return {
            "space": self.space.to_json(),
            "quantity": self.quantity,
            "tol": repr(self.tol),
            "enumerated": self.enumerated,
            "excluded_kronecker": self.excluded_kronecker,
            "minimum": self.minimum.to_json() if self.minimum else None,
            "witnesses": [list(w.coeffs) for w in self.witnesses],
            "witness_enclosures": [e.to_json() for e in self.witness_enclosures],
            "precision_escalations": self.precision_escalations,
            "precision_exhausted": self.precision_exhausted,
        }


def _min_search(
    space: SearchSpace,
    quantity: str,
    tol: float,
    jobs: int,
    prune: bool,
    max_bits: int,
    budget: int,
) -> SearchReport:
    if space.size > budget:
        raise BudgetExceeded(
            f"{quantity} search over {space.kind} degree {space.degree}",
            space.size,
            budget,
        )
    tol0 = max(tol, 1e-6)
    chunk_args = [
        (space.kind, space.degree, space.height, first, quantity, tol0,
         prune, max_bits)
        for first in range(-space.height, space.height + 1)
    ]
    if jobs <= 1 or space.half_degree == 0:
        chunk_results = [_scan_chunk(a) for a in chunk_args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk_results = list(pool.map(_scan_chunk, chunk_args))
    records: list[_Record] = [r for chunk in chunk_results for r in chunk]

    enumerated = len(records)
    assert enumerated == space.size
    kron = sum(1 for r in records if r[1])
    measured = [
        (free, Enclosure(*enc), gb)
        for free, is_kron, gb, enc in records
        if enc is not None
    ]
    if not measured:
        return SearchReport(space, quantity, tol, enumerated, kron, None,
                            (), (), 0, False)

    measure_fn = mahler if quantity == "mahler" else house

    def lower(entry) -> float:
        free, enc, gb = entry
        return max(enc.lo, gb) if gb is not None else enc.lo

    min_hi = min(enc.hi for _, enc, _ in measured)
    active = [e for e in measured if lower(e) <= min_hi]

    escalations = 0
    exhausted = False
    cur_tol = tol
    while True:
        refined = []
        for free, enc, gb in active:
            f = space.member(free)
            try:
                enc = measure_fn(f, cur_tol, max_bits)
            except PrecisionExhausted:
                exhausted = True
            refined.append((free, enc, gb))
        min_hi = min(enc.hi for _, enc, _ in refined)
        active = [e for e in refined if lower(e) <= min_hi]
        if len(active) <= 1 or escalations >= _ESCALATION_ROUNDS or exhausted:
            break
        escalations += 1
        cur_tol /= 16
    minimum = Enclosure(
        min(enc.lo for _, enc, _ in active),
        min_hi,
        max(enc.bits for _, enc, _ in active),
    )
    witnesses = tuple(space.member(free) for free, _, _ in active)
    enclosures = tuple(enc for _, enc, _ in active)
    return SearchReport(
        space, quantity, tol, enumerated, kron, minimum, witnesses,
        enclosures, escalations, exhausted,
    )


def min_mahler(
    space: SearchSpace,
    tol: float = 1e-10,
    jobs: int = 1,
    prune: bool = True,
    max_bits: int = DEFAULT_MAX_BITS,
    budget: int = DEFAULT_BUDGET,
) -> SearchReport:
    """Minimum Mahler measure over the non-Kronecker members of the space.

    Membership in the "measure > 1" side is decided exactly by the
    Kronecker test, never by a numeric threshold; the minimum and every
    reported witness carry certified enclosures.  Results are identical
    for any jobs count and for prune on/off.
    """
    return _min_search(space, "mahler", tol, jobs, prune, max_bits, budget)


def min_house(
    space: SearchSpace,
    tol: float = 1e-10,
    jobs: int = 1,
    max_bits: int = DEFAULT_MAX_BITS,
    budget: int = DEFAULT_BUDGET,
) -> SearchReport:
    """Minimum house over the non-Kronecker members of the space."""
    return _min_search(space, "house", tol, jobs, False, max_bits, budget)


# -- sequence table ----------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SequenceRow:
    """Row i: minima over both classes in degree 2**i at one height bound."""

    i: int
    degree: int
    height: int
    mahler_reciprocal: Optional[Enclosure]
    mahler_skew: Optional[Enclosure]
    house_reciprocal: Optional[Enclosure]
    house_skew: Optional[Enclosure]
    r: Optional[Enclosure]  # 2**i * log(min house, reciprocal)
    s: Optional[Enclosure]  # 2**i * log(min house, skew)
    q: Optional[Enclosure]  # running product of r_j / s_j
    breusch_check: Optional[bool]  # s_i >= min(r_(i-1), log(1179/1000)), certified

    def to_json(self) -> dict:
        opt = lambda e: e.to_json() if e is not None else None
        return {
            "i": self.i,
            "degree": self.degree,
            "height": self.height,
            "mahler_reciprocal": opt(self.mahler_reciprocal),
            "mahler_skew": opt(self.mahler_skew),
            "house_reciprocal": opt(self.house_reciprocal),
            "house_skew": opt(self.house_skew),
            "r": opt(self.r),
            "s": opt(self.s),
            "q": opt(self.q),
            "breusch_check": self.breusch_check,
        }


@dataclasses.dataclass(frozen=True)
class SequenceTable:
    rows: tuple[SequenceRow, ...]

    def to_json(self) -> dict:
        return {"rows": [row.to_json() for row in self.rows]}

    def to_csv(self) -> str:
        header = [
            "i", "degree", "height",
            "mahler_reciprocal_lo", "mahler_reciprocal_hi",
            "mahler_skew_lo", "mahler_skew_hi",
            "house_reciprocal_lo", "house_reciprocal_hi",
            "house_skew_lo", "house_skew_hi",
            "r_lo", "r_hi", "s_lo", "s_hi", "q_lo", "q_hi",
            "breusch_check",
        ]
        lines = [",".join(header)]
        for row in self.rows:
            cells = [str(row.i), str(row.degree), str(row.height)]
            for enc in (row.mahler_reciprocal, row.mahler_skew,
                        row.house_reciprocal, row.house_skew,
                        row.r, row.s, row.q):
                if enc is None:
                    cells.extend(["", ""])
                else:
                    cells.extend([repr(enc.lo), repr(enc.hi)])
            cells.append("" if row.breusch_check is None
                         else str(row.breusch_check).lower())
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def sequence_table(
    max_i: int,
    heights: list[int],
    tol: float = 1e-10,
    jobs: int = 1,
    max_bits: int = DEFAULT_MAX_BITS,
    budget: int = DEFAULT_BUDGET,
) -> SequenceTable:
    """Minima tables over degrees 2**i, i = 1..max_i, one height per row.

    Each row runs four searches (Mahler and house, both classes).  The
    telescoping product q_m multiplies the certified ratio enclosures
    r_i/s_i row by row.  The work estimate for every row is checked
    against the budget before anything runs.
    """
    if max_i < 1:
        raise PolynomialError("max_i must be >= 1")
    if len(heights) != max_i:
        raise PolynomialError("need exactly one height per row")
    for i in range(1, max_i + 1):
        size = (2 * heights[i - 1] + 1) ** (2 ** (i - 1))
        if size > budget:
            raise BudgetExceeded(f"table row i={i}", size, budget)
    log_breusch = log_of_fraction(Fraction(BREUSCH_BOUND))
    rows = []
    q: Optional[Enclosure] = Enclosure(1.0, 1.0, 0)
    prev_r: Optional[Enclosure] = None
    for i in range(1, max_i + 1):
        height = heights[i - 1]
        degree = 2**i
        args = dict(tol=tol, jobs=jobs, max_bits=max_bits, budget=budget)
        rep_m_rec = min_mahler(SearchSpace(RECIPROCAL, degree, height), **args)
        rep_m_skew = min_mahler(SearchSpace(SKEW, degree, height), **args)
        rep_h_rec = min_house(SearchSpace(RECIPROCAL, degree, height), **args)
        rep_h_skew = min_house(SearchSpace(SKEW, degree, height), **args)
        r = s = None
        if rep_h_rec.minimum is not None:
            r = rep_h_rec.minimum.log().scaled(degree)
        if rep_h_skew.minimum is not None:
            s = rep_h_skew.minimum.log().scaled(degree)
        if q is not None and r is not None and s is not None:
            q = q * (r / s)
        else:
            q = None
        check = None
        if s is not None and prev_r is not None:
            # certified one-sided comparison s_i >= min(r_(i-1), log(1179/1000))
            threshold_hi = min(prev_r.hi, log_breusch.hi)
            check = s.lo >= threshold_hi
        rows.append(
            SequenceRow(
                i, degree, height,
                rep_m_rec.minimum, rep_m_skew.minimum,
                rep_h_rec.minimum, rep_h_skew.minimum,
                r, s, q, check,
            )
        )
        prev_r = r
    return SequenceTable(tuple(rows))


# -- decomposition survey ----------------------------------------------------


@dataclasses.dataclass(frozen=True)
class DecompositionSurvey:
    """Exhaustive decomposition of a skew-reciprocal space, with measure audit.

    Every non-Kronecker member decomposes into exactly one of the two
    cases; for witness-case members the Mahler enclosure is checked
    against the nonreciprocal lower bound 1179/1000 (with a 1e-9 slack on
    the certified side).  A DecompositionFalsified raised during the scan
    propagates: falsification is a diagnosis, not a report row.
    """

    space: SearchSpace
    enumerated: int
    excluded_kronecker: int
    square_substitution_count: int
    witness_count: int
    min_witness_mahler: Optional[Enclosure]
    witnesses_below_bound: int

    @property
    def all_witnesses_above_bound(self) -> bool:
        return self.witnesses_below_bound == 0

    def to_json(self) -> dict:
        return {
            "space": self.space.to_json(),
            "enumerated": self.enumerated,
            "excluded_kronecker": self.excluded_kronecker,
            "square_substitution_count": self.square_substitution_count,
            "witness_count": self.witness_count,
            "min_witness_mahler": (
                self.min_witness_mahler.to_json()
                if self.min_witness_mahler else None
            ),
            "witnesses_below_bound": self.witnesses_below_bound,
            "all_witnesses_above_bound": self.all_witnesses_above_bound,
        }


def verify_decomposition_over_space(
    space: SearchSpace,
    tol: float = 1e-8,
    max_bits: int = DEFAULT_MAX_BITS,
    budget: int = DEFAULT_BUDGET,
) -> DecompositionSurvey:
    if space.kind != SKEW:
        raise PolynomialError("decomposition survey needs a skew-reciprocal space")
    if space.size > budget:
        raise BudgetExceeded("decomposition survey", space.size, budget)
    slack = BREUSCH_BOUND - Fraction(1, 10**9)
    kron = squares = witnesses = below = 0
    min_mahler_enc: Optional[Enclosure] = None
    for f in enumerate_space(space):
        if is_kronecker(f):
            kron += 1
            continue
        outcome = decompose_skew_reciprocal(f)
        if isinstance(outcome, NonreciprocalWitness):
            witnesses += 1
            enc = mahler(f, tol, max_bits)
            if Fraction(enc.lo) <= slack:
                below += 1
            if min_mahler_enc is None or enc.hi < min_mahler_enc.hi:
                min_mahler_enc = enc
        else:
            squares += 1
    return DecompositionSurvey(
        space, space.size, kron, squares, witnesses, min_mahler_enc, below
    )
