"""Hyperplane-arrangement combinatorics: the intersection lattice with its
Moebius function, characteristic/Poincare data and complement Betti numbers,
no-broken-circuit counts, and the integer-factorization report for the
Poincare polynomial.

Flats are affine subspaces, canonicalized as the reduced row echelon form of
their defining linear systems (exact rational arithmetic), so deduplication
and containment are plain tuple operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .polyring import GREVLEX, Polynomial, PolynomialRing
from .verdicts import NO, UNKNOWN, YES, Verdict

__all__ = [
    "Arrangement", "Flat", "FlatLattice", "build_lattice",
    "poincare_polynomial", "betti", "nbc_betti", "terao_factorization",
    "lct_arrangement_report", "arrangement_to_polynomial", "cone",
    "deletion", "restriction_poincare", "parse_arrangement_file",
]

DEFAULT_HYPERPLANE_LIMIT = 14

_Row = tuple[Fraction, ...]
_System = tuple[_Row, ...]


class Arrangement:
    """A finite set of affine hyperplanes given by degree-one equations."""

    def __init__(self, ring: PolynomialRing, forms: Sequence[Polynomial]):
        forms = tuple(forms)
        for f in forms:
            if f.ring != ring:
                raise ValueError("hyperplane form from a different ring")
            if f.total_degree() != 1:
                raise ValueError(f"hyperplane forms must have total degree 1: {f}")
        rows = [_form_row(f) for f in forms]
        for i, j in combinations(range(len(rows)), 2):
            if _proportional(rows[i], rows[j]):
                raise ValueError(
                    f"repeated hyperplane: {forms[i]} and {forms[j]} are proportional")
        self.ring = ring
        self.forms = forms

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def __len__(self):
        return len(self.forms)

    def __repr__(self):
        return f"Arrangement({', '.join(str(f) for f in self.forms)})"

    def is_central(self) -> bool:
        """True when all hyperplanes share a common point."""
        if not self.forms:
            return True
        system = _echelon(tuple(_form_row(f) for f in self.forms))
        return system is not None


def _form_row(f: Polynomial) -> _Row:
    """Equation row (a_1, ..., a_n, b) for the hyperplane a.x + b = 0."""
    n = f.ring.nvars
    coeffs = [Fraction(0)] * (n + 1)
    for e, c in f.iter_terms():
        if not any(e):
            coeffs[n] = c
        else:
            i = next(k for k, x in enumerate(e) if x)
            coeffs[i] = c
    return tuple(coeffs)


def _proportional(a: _Row, b: _Row) -> bool:
    pivot = next((i for i, v in enumerate(a) if v), None)
    if pivot is None or not b[pivot]:
        return False
    ratio = b[pivot] / a[pivot]
    return all(y == ratio * x for x, y in zip(a, b))


def _echelon(rows: Iterable[_Row]) -> _System | None:
    """Canonical reduced echelon form of a linear system; None when
    inconsistent (the subspace is empty)."""
    work = [list(r) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    out: list[list[Fraction]] = []
    rank = 0
    for col in range(ncols - 1):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        work[rank] = [v / pv for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    for row in work[rank:]:
        if row[-1]:
            return None  # 0 = b with b nonzero
    return tuple(tuple(r) for r in work[:rank])


def _contains(outer: _System, inner: _System) -> bool:
    """Solution set of `outer` contains that of `inner`."""
    merged = _echelon(inner + outer)
    return merged == inner


@dataclass(frozen=True)
class Flat:
    """One element of the intersection lattice."""

    system: _System
    rank: int
    mobius: int


class FlatLattice:
    """All nonempty intersections, ordered by reverse inclusion, with the
    Moebius function computed by the standard recursion from the bottom."""

    def __init__(self, flats: Sequence[Flat]):
        self.flats = tuple(flats)

    def __len__(self):
        return len(self.flats)

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    def rank(self) -> int:
        return max(f.rank for f in self.flats) if self.flats else 0

    def leq(self, lower: Flat, upper: Flat) -> bool:
        """lower <= upper in the lattice (upper is the smaller subspace)."""
        return _contains(lower.system, upper.system)


def _close_under_intersection(hyperplanes: Sequence[_System]) -> list[_System]:
    ambient: _System = ()
    seen = {ambient}
    frontier = [ambient]
    while frontier:
        nxt = []
        for flat in frontier:
            for h in hyperplanes:
                meet = _echelon(flat + h)
                if meet is not None and meet not in seen:
                    seen.add(meet)
                    nxt.append(meet)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), s))


def _lattice_from_systems(hyperplanes: Sequence[_System], base_rank: int = 0) -> FlatLattice:
    systems = _close_under_intersection(hyperplanes)
    ranks = [len(s) - base_rank for s in systems]
    mobius: list[int] = []
    for i, s in enumerate(systems):
        if i == 0:
            mobius.append(1)
            continue
        total = 0
        for j in range(i):
            if ranks[j] < ranks[i] and _contains(systems[j], s):
                total += mobius[j]
        mobius.append(-total)
    return FlatLattice([Flat(s, r, m) for s, r, m in zip(systems, ranks, mobius)])


def build_lattice(arrangement: Arrangement,
                  limit: int = DEFAULT_HYPERPLANE_LIMIT) -> FlatLattice:
    """The intersection lattice; empty intersections are dropped."""
    if len(arrangement) > limit:
        raise ValueError(
            f"arrangement has {len(arrangement)} hyperplanes, limit is {limit}")
    systems = []
    for f in arrangement.forms:
        sys_ = _echelon((_form_row(f),))
        if sys_ is None:
            raise AssertionError("a degree-one form cannot be inconsistent")
        systems.append(sys_)
    return _lattice_from_systems(systems)


_T_RING = PolynomialRing(["t"])


def poincare_polynomial(arrangement: Arrangement,
                        lattice: FlatLattice | None = None) -> Polynomial:
    """sum over flats of |mobius| * t^rank, in a univariate ring over t."""
    if lattice is None:
        lattice = build_lattice(arrangement)
    terms: dict[tuple[int, ...], Fraction] = {}
    for flat in lattice.flats:
        key = (flat.rank,)
        terms[key] = terms.get(key, Fraction(0)) + abs(flat.mobius)
    return Polynomial(_T_RING, terms)


def betti(arrangement: Arrangement, lattice: FlatLattice | None = None) -> tuple[int, ...]:
    """Complement Betti numbers: the coefficient list of the Poincare
    polynomial (b_0 = 1)."""
    poly = poincare_polynomial(arrangement, lattice)
    degree = poly.total_degree()
    return tuple(int(poly.coefficient((k,))) for k in range(degree + 1))


# -- no-broken-circuit counts ------------------------------------------------------


def _normal_rank(rows: Sequence[_Row], subset: Iterable[int]) -> int:
    chosen = [rows[i][:-1] for i in subset]
    system = _echelon(tuple(r + (Fraction(0),) for r in chosen))
    return len(system) if system is not None else 0


def nbc_betti(arrangement: Arrangement,
              order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Counts of no-broken-circuit subsets by cardinality.

    Independent of the chosen hyperplane ordering, and equal to the
    complement Betti numbers.  Central arrangements are counted directly;
    affine ones through the cone, dividing the resulting polynomial by
    (1 + t) exactly.
    """
    m = len(arrangement)
    if order is None:
        order = tuple(range(m))
    else:
        order = tuple(order)
        if sorted(order) != list(range(m)):
            raise ValueError("order must be a permutation of the hyperplane indices")
    if m == 0:
        return (1,)
    if not arrangement.is_central():
        coned = cone(arrangement)
        # the added hyperplane is first; keep the requested relative order
        lifted_order = (0,) + tuple(i + 1 for i in order)
        counts = nbc_betti(coned, lifted_order)
        return _divide_by_one_plus_t(counts)
    rows = [_form_row(f) for f in arrangement.forms]
    position = {h: k for k, h in enumerate(order)}
    circuits: list[frozenset[int]] = []
    broken: list[frozenset[int]] = []
    for size in range(2, m + 1):
        for subset in combinations(range(m), size):
            s = frozenset(subset)
            if any(c <= s for c in circuits):
                continue
            if _normal_rank(rows, subset) < size:
                circuits.append(s)
                least = min(s, key=lambda h: position[h])
                broken.append(s - {least})
    max_rank = _normal_rank(rows, range(m))
    counts = [0] * (max_rank + 1)
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            s = frozenset(subset)
            if not any(b <= s for b in broken):
                counts[size] += 1
    return tuple(counts)


def _divide_by_one_plus_t(counts: Sequence[int]) -> tuple[int, ...]:
    # exact division of sum c_k t^k by (1 + t)
    out = []
    carry = 0
    for c in counts[:-1]:
        value = c - carry
        out.append(value)
        carry = value
    if counts[-1] != carry:
        raise AssertionError("cone counts must be divisible by 1 + t")
    return tuple(out)


# -- reports ------------------------------------------------------------------------


def terao_factorization(arrangement: Arrangement,
                        lattice: FlatLattice | None = None) -> Verdict:
    """Does the Poincare polynomial factor as a product of (1 + e*t) with
    non-negative integer e?

    Free arrangements always pass, so YES is reported as consistency with
    freeness, never as a proof of it.
    """
    rule = "poincare-integer-factorization"
    poly = poincare_polynomial(arrangement, lattice)
    degree = poly.total_degree()
    coeffs = [int(poly.coefficient((k,))) for k in range(degree + 1)]
    remaining = coeffs
    exponents: list[int] = []
    while len(remaining) > 1 and remaining[-1] > 0:
        leading = remaining[-1]
        divisors = [d for d in range(1, leading + 1) if leading % d == 0]
        for e in divisors:
            quotient, ok = _divide_linear(remaining, e)
            if ok:
                exponents.append(e)
                remaining = quotient
                break
        else:
            break
    if remaining != [1]:
        return Verdict(NO, rule, certificate={
            "poincare": str(poly),
            "partial_exponents": sorted(exponents),
            "irreducible_remainder": _coeffs_to_str(remaining),
        })
    exponents.sort()
    return Verdict(YES, rule, certificate={
        "poincare": str(poly),
        "exponents": exponents,
        "note": "necessary condition: consistent with freeness, not a proof of it",
    })


def _divide_linear(coeffs: Sequence[int], e: int) -> tuple[list[int], bool]:
    """Divide sum c_k t^k by (1 + e t) over the integers; ([], False) when
    the division is not exact."""
    n = len(coeffs) - 1
    quotient = [0] * n
    rest = list(coeffs)
    for k in range(n, 0, -1):
        if rest[k] % e != 0:
            return [], False
        q = rest[k] // e
        quotient[k - 1] = q
        rest[k] = 0
        rest[k - 1] -= q
    if rest[0] != 0:
        return [], False
    return quotient, True


def _coeffs_to_str(coeffs: Sequence[int]) -> str:
    terms = {(k,): Fraction(c) for k, c in enumerate(coeffs) if c}
    return str(Polynomial(_T_RING, terms))


def lct_arrangement_report(arrangement: Arrangement,
                           lattice: FlatLattice | None = None) -> Verdict:
    """Comparison-property report for an arrangement.

    YES when the essential rank is at most 4 (a cited result); beyond that
    the general question is a conjecture and the verdict stays UNKNOWN.
    The minimal-integral-root condition holds for every arrangement, which
    is recorded as an annotation.
    """
    rule = "low-rank-arrangement"
    if lattice is None:
        lattice = build_lattice(arrangement)
    rank = lattice.rank()
    notes = ("the minimal-integral-root condition on the functional equation "
             "holds for every hyperplane arrangement (known result)",)
    if rank <= 4:
        return Verdict(YES, rule,
                       certificate={"essential_rank": rank,
                                    "hyperplanes": len(arrangement)},
                       caveats=notes)
    return Verdict(UNKNOWN, rule,
                   reason=f"essential rank {rank} exceeds 4; the general question "
                          "is a standing conjecture",
                   caveats=notes + ("conjectured to hold for every arrangement",))


# -- constructions --------------------------------------------------------------------


def arrangement_to_polynomial(arrangement: Arrangement) -> Polynomial:
    """The product of the defining forms, for routing into divisor checks."""
    product = arrangement.ring.one()
    for f in arrangement.forms:
        product = product * f
    return product


def cone(arrangement: Arrangement) -> Arrangement:
    """Homogenize with one extra variable; the new hyperplane comes first."""
    ring = arrangement.ring
    (zname,) = ring.fresh_names("z0", 1)
    ext = PolynomialRing((zname,) + ring.variables)
    z = ext.variable(zname)
    forms = [z]
    for f in arrangement.forms:
        lifted = ext.zero()
        for e, c in f.iter_terms():
            if any(e):
                lifted = lifted + ext.monomial((0,) + e, c)
            else:
                lifted = lifted + z.scale(c)
        forms.append(lifted)
    return Arrangement(ext, forms)


def deletion(arrangement: Arrangement, index: int) -> Arrangement:
    forms = list(arrangement.forms)
    del forms[index]
    return Arrangement(arrangement.ring, forms)


def restriction_poincare(arrangement: Arrangement, index: int) -> Polynomial:
    """Poincare polynomial of the arrangement induced on one hyperplane
    (flats get their rank relative to that hyperplane)."""
    h_system = _echelon((_form_row(arrangement.forms[index]),))
    traces = []
    seen = set()
    for k, f in enumerate(arrangement.forms):
        if k == index:
            continue
        meet = _echelon(h_system + (_form_row(f),))
        if meet is None or meet == h_system:
            continue
        if meet not in seen:
            seen.add(meet)
            traces.append(meet)
    lattice = _lattice_from_restriction(h_system, traces)
    terms: dict[tuple[int, ...], Fraction] = {}
    for flat in lattice.flats:
        key = (flat.rank,)
        terms[key] = terms.get(key, Fraction(0)) + abs(flat.mobius)
    return Polynomial(_T_RING, terms)


def _lattice_from_restriction(ground: _System, traces: Sequence[_System]) -> FlatLattice:
    seen = {ground}
    frontier = [ground]
    while frontier:
        nxt = []
        for flat in frontier:
            for tr in traces:
                meet = _echelon(flat + tr)
                if meet is not None and meet not in seen:
                    seen.add(meet)
                    nxt.append(meet)
        frontier = nxt
    systems = sorted(seen, key=lambda s: (len(s), s))
    base = len(ground)
    ranks = [len(s) - base for s in systems]
    mobius: list[int] = []
    for i, s in enumerate(systems):
        if i == 0:
            mobius.append(1)
            continue
        total = 0
        for j in range(i):
            if ranks[j] < ranks[i] and _contains(systems[j], s):
                total += mobius[j]
        mobius.append(-total)
    return FlatLattice([Flat(s, r, m) for s, r, m in zip(systems, ranks, mobius)])


def parse_arrangement_file(text: str, variables: Sequence[str]) -> Arrangement:
    """One degree-one form per line; blank lines and '#' comments skipped."""
    ring = PolynomialRing(variables)
    forms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        form = ring.parse(line)
        if form.total_degree() != 1:
            raise ValueError(f"line {lineno}: not a degree-one form: {line!r}")
        forms.append(form)
    return Arrangement(ring, forms)
