"""Buchberger engine over Q: reduced Groebner bases, normal forms, ideal
membership, elimination, Krull dimension and zero-dimensional quotient data.

Plain Buchberger with both classical pair criteria is enough at the scale
this library targets (a handful of variables, moderate degrees).  Every
computation carries a resource budget; exhausting it raises
:class:`BudgetExceeded` rather than ever returning a wrong answer.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import (GREVLEX, Exponents, MonomialOrder, Polynomial,
                       PolynomialRing)

__all__ = [
    "Budget", "BudgetExceeded", "Ideal", "QuotientBasis",
    "buchberger", "normal_form", "ideal_membership", "elimination_ideal",
    "krull_dimension", "krull_dimension_with_witness", "quotient_basis",
    "divide_exact", "polynomial_gcd", "is_squarefree",
    "local_dimension_at_origin",
]

DEFAULT_MAX_PAIRS = 20000


class BudgetExceeded(RuntimeError):
    """A pair-count, degree or wall-clock ceiling was hit; the computation is
    incomplete (never wrong)."""

    def __init__(self, what: str, label: str = ""):
        detail = f"{what}" + (f" while computing {label}" if label else "")
        super().__init__(detail)
        self.what = what
        self.label = label


@dataclass
class Budget:
    """Resource ceilings for one top-level computation.

    `max_pairs` counts S-pairs actually processed across all Buchberger runs
    charged to this budget; `timeout_seconds` is wall-clock from creation;
    `max_degree` caps the total degree of any new basis element.
    """

    max_pairs: int | None = DEFAULT_MAX_PAIRS
    timeout_seconds: float | None = None
    max_degree: int | None = None
    label: str = ""
    pairs_used: int = 0
    _started: float = field(default_factory=time.monotonic)

    def charge_pair(self):
        self.pairs_used += 1
        if self.max_pairs is not None and self.pairs_used > self.max_pairs:
            raise BudgetExceeded(f"pair budget of {self.max_pairs} exhausted", self.label)
        self.check_time()

    def check_time(self):
        if (self.timeout_seconds is not None
                and time.monotonic() - self._started > self.timeout_seconds):
            raise BudgetExceeded(f"time budget of {self.timeout_seconds}s exhausted",
                                 self.label)

    def check_degree(self, degree: int):
        if self.max_degree is not None and degree > self.max_degree:
            raise BudgetExceeded(f"degree bound {self.max_degree} exceeded", self.label)


def _budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget()


# -- division ----------------------------------------------------------------


def _divides(a: Exponents, b: Exponents) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _quotient(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def normal_form(f: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder = GREVLEX,
                budget: Budget | None = None) -> Polynomial:
    """Full remainder of `f` under multivariate division by `basis`.

    With `basis` a Groebner basis this is the unique normal form; membership
    in the generated ideal is equivalent to a zero result.
    """
    budget = _budget(budget)
    divisors = []
    for g in basis:
        if g.is_zero:
            continue
        lm = g.leading_monomial(order)
        lc = g._terms[lm]
        tail = [(e, c) for e, c in g._terms.items() if e != lm]
        divisors.append((lm, lc, tail))
    if not divisors or f.is_zero:
        return f
    key = order.key
    p = dict(f._terms)
    remainder: dict[Exponents, Fraction] = {}
    steps = 0
    while p:
        e = max(p, key=key)
        c = p.pop(e)
        for lm, lc, tail in divisors:
            if _divides(lm, e):
                q_exp = _quotient(e, lm)
                q_c = c / lc
                for te, tc in tail:
                    ne = tuple(a + b for a, b in zip(te, q_exp))
                    s = p.get(ne, Fraction(0)) - q_c * tc
                    if s:
                        p[ne] = s
                    else:
                        p.pop(ne, None)
                break
        else:
            remainder[e] = c
        steps += 1
        if steps % 256 == 0:
            budget.check_time()
    return Polynomial(f.ring, remainder)


def divide_exact(f: Polynomial, g: Polynomial,
                 order: MonomialOrder = GREVLEX) -> Polynomial | None:
    """The quotient f/g when the division is exact, else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return f
    lm = g.leading_monomial(order)
    lc = g._terms[lm]
    key = order.key
    p = dict(f._terms)
    quotient: dict[Exponents, Fraction] = {}
    while p:
        e = max(p, key=key)
        if not _divides(lm, e):
            return None
        q_exp = _quotient(e, lm)
        q_c = p.pop(e) / lc
        quotient[q_exp] = q_c
        for te, tc in g._terms.items():
            if te == lm:
                continue
            ne = tuple(a + b for a, b in zip(te, q_exp))
            s = p.get(ne, Fraction(0)) - q_c * tc
            if s:
                p[ne] = s
            else:
                p.pop(ne, None)
    return Polynomial(f.ring, quotient)


# -- Buchberger ---------------------------------------------------------------


def _lcm_exps(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x > y else y for x, y in zip(a, b))


def buchberger(generators: Sequence[Polynomial],
               order: MonomialOrder = GREVLEX,
               budget: Budget | None = None) -> list[Polynomial]:
    """The reduced Groebner basis of the ideal generated by `generators`.

    Output is monic, self-reduced, sorted by ascending leading monomial and
    unique for the order.  Both classical pair criteria (coprime leading
    terms and the chain criterion) prune the pair queue.
    """
    budget = _budget(budget)
    gens = [g.primitive() for g in generators if not g.is_zero]
    if not gens:
        return []
    ring = gens[0].ring
    if any(g.is_constant for g in gens):
        return [ring.one()]
    # dedupe while preserving first-seen order
    seen = set()
    G: list[Polynomial] = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            G.append(g)
    leads = [g.leading_monomial(order) for g in G]
    key = order.key

    done: set[frozenset[int]] = set()
    queue: list[tuple[tuple, int, int, Exponents]] = []

    def push_pairs(t: int):
        lt = leads[t]
        for i in range(t):
            lcm = _lcm_exps(leads[i], lt)
            pair = frozenset((i, t))
            if lcm == tuple(a + b for a, b in zip(leads[i], lt)):
                done.add(pair)  # coprime leading terms: S-poly reduces to zero
                continue
            heapq.heappush(queue, ((sum(lcm), key(lcm)), i, t, lcm))

    for t in range(1, len(G)):
        push_pairs(t)

    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        pair = frozenset((i, j))
        if pair in done:
            continue
        done.add(pair)
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in pair:
                continue
            if (_divides(leads[k], lcm)
                    and frozenset((i, k)) in done and frozenset((j, k)) in done):
                skip = True
                break
        if skip:
            continue
        budget.charge_pair()
        gi, gj = G[i], G[j]
        s = (gi.multiply_term(_quotient(lcm, leads[i]), Fraction(1) / gi._terms[leads[i]])
             - gj.multiply_term(_quotient(lcm, leads[j]), Fraction(1) / gj._terms[leads[j]]))
        r = normal_form(s, G, order, budget)
        if r.is_zero:
            continue
        r = r.primitive()
        budget.check_degree(r.total_degree())
        G.append(r)
        leads.append(r.leading_monomial(order))
        push_pairs(len(G) - 1)

    return _reduce_basis(G, order, budget)


def _reduce_basis(G: list[Polynomial], order: MonomialOrder,
                  budget: Budget) -> list[Polynomial]:
    leads = [g.leading_monomial(order) for g in G]
    keep = []
    for i, lm in enumerate(leads):
        redundant = any(
            j != i and _divides(leads[j], lm)
            and (leads[j] != lm or j < i)
            for j in range(len(G)))
        if not redundant:
            keep.append(i)
    minimal = [G[i] for i in keep]
    reduced = []
    for i, g in enumerate(minimal):
        others = reduced + minimal[i + 1:]
        r = normal_form(g, others, order, budget)
        if not r.is_zero:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return reduced


class Ideal:
    """An ideal given by generators, with a lazily cached reduced basis.

    The cache is populated atomically (compute, then swap) so sharing one
    Ideal between threads is safe; all values involved are immutable.
    """

    def __init__(self, generators: Sequence[Polynomial],
                 order: MonomialOrder = GREVLEX,
                 ring: PolynomialRing | None = None):
        gens = tuple(g for g in generators if not g.is_zero)
        if ring is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty ideal")
            ring = gens[0].ring
        if any(g.ring != ring for g in gens):
            raise ValueError("generators from different rings")
        self.ring = ring
        self.generators = gens
        self.order = order
        self._gb: tuple[Polynomial, ...] | None = None

    def groebner_basis(self, budget: Budget | None = None) -> tuple[Polynomial, ...]:
        gb = self._gb
        if gb is None:
            gb = tuple(buchberger(self.generators, self.order, budget))
            self._gb = gb
        return gb

    def normal_form(self, f: Polynomial, budget: Budget | None = None) -> Polynomial:
        return normal_form(f, self.groebner_basis(budget), self.order, budget)

    def contains(self, f: Polynomial, budget: Budget | None = None) -> bool:
        return self.normal_form(f, budget).is_zero

    @property
    def is_unit_ideal(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"


def ideal_membership(f: Polynomial, ideal: Ideal, budget: Budget | None = None) -> bool:
    return ideal.contains(f, budget)


def elimination_ideal(ideal: Ideal, keep, budget: Budget | None = None) -> Ideal:
    """Generators of the intersection with the subring on the `keep` variables.

    `keep` may hold names or indices.  The result lives in the same ambient
    ring; its generators only involve kept variables.
    """
    ring = ideal.ring
    keep_idx = {v if isinstance(v, int) else ring.index(v) for v in keep}
    drop = [i for i in range(ring.nvars) if i not in keep_idx]
    if not drop:
        return Ideal(ideal.generators, ideal.order, ring)
    order = MonomialOrder.elimination(drop)
    gb = buchberger(ideal.generators, order, budget)
    kept = [g for g in gb if not (g.support() & set(drop))]
    return Ideal(kept, GREVLEX, ring)


def krull_dimension(ideal: Ideal, budget: Budget | None = None) -> int:
    d, _ = krull_dimension_with_witness(ideal, budget)
    return d


def krull_dimension_with_witness(ideal: Ideal,
                                 budget: Budget | None = None) -> tuple[int, tuple[int, ...]]:
    """Dimension of the vanishing set, with a maximal independent variable set.

    A variable subset S is independent modulo the leading-term ideal when no
    leading monomial has support inside S; the dimension is the largest size
    of such a set.
    """
    from itertools import combinations

    gb = ideal.groebner_basis(budget)
    if any(g.is_constant for g in gb):
        raise ValueError("empty variety: the ideal is the whole ring")
    supports = []
    for g in gb:
        lm = g.leading_monomial(ideal.order)
        supports.append(frozenset(i for i, e in enumerate(lm) if e))
    n = ideal.ring.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size, subset
    raise AssertionError("unreachable: the empty set is always independent")


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of a quotient ring; finite iff zero-dimensional.

    `monomials` is None when the quotient is infinite dimensional, in which
    case `dimension` is None too.
    """

    monomials: tuple[Exponents, ...] | None
    dimension: int | None

    @property
    def finite(self) -> bool:
        return self.dimension is not None


_ENUMERATION_CAP = 1_000_000


def quotient_basis(ideal: Ideal, budget: Budget | None = None) -> QuotientBasis:
    """Monomials outside the leading-term ideal, when finitely many."""
    gb = ideal.groebner_basis(budget)
    ring = ideal.ring
    n = ring.nvars
    if any(g.is_constant for g in gb):
        return QuotientBasis((), 0)
    leads = [g.leading_monomial(ideal.order) for g in gb]
    box = [None] * n
    for lm in leads:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if box[i] is None or lm[i] < box[i]:
                box[i] = lm[i]
    if any(b is None for b in box):
        return QuotientBasis(None, None)
    size = 1
    for b in box:
        size *= b
        if size > _ENUMERATION_CAP:
            raise BudgetExceeded("quotient basis enumeration too large")
    from itertools import product

    monomials = []
    for exps in product(*(range(b) for b in box)):
        if not any(_divides(lm, exps) for lm in leads):
            monomials.append(exps)
    monomials.sort(key=GREVLEX.key)
    return QuotientBasis(tuple(monomials), len(monomials))


# -- linear algebra over a finite quotient -------------------------------------


def _multiplication_matrix(ideal: Ideal, var: int, basis: Sequence[Exponents],
                           budget: Budget | None) -> list[list[Fraction]]:
    ring = ideal.ring
    index = {m: i for i, m in enumerate(basis)}
    cols = []
    for m in basis:
        shifted = list(m)
        shifted[var] += 1
        nf = ideal.normal_form(ring.monomial(tuple(shifted)), budget)
        col = [Fraction(0)] * len(basis)
        for e, c in nf.iter_terms():
            col[index[e]] = c
        cols.append(col)
    # column-major in, row-major out
    return [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]


def _mat_mul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        row = a[i]
        for t in range(k):
            v = row[t]
            if v:
                bt = b[t]
                oi = out[i]
                for j in range(m):
                    if bt[j]:
                        oi[j] += v * bt[j]
    return out


def _mat_pow(a, n):
    size = len(a)
    result = [[Fraction(1) if i == j else Fraction(0) for j in range(size)]
              for i in range(size)]
    base = a
    while n:
        if n & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        n >>= 1
    return result


def _rank(rows) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def local_dimension_at_origin(ideal: Ideal, budget: Budget | None = None) -> int:
    """Dimension of the local factor at the origin of a finite quotient.

    The quotient splits over the points of the variety; the factor at the
    origin is the joint generalized kernel of the coordinate multiplication
    operators, computed by exact linear algebra.
    """
    qb = quotient_basis(ideal, budget)
    if not qb.finite:
        raise ValueError("the quotient is not finite dimensional")
    d = qb.dimension
    if d == 0:
        return 0
    basis = qb.monomials
    # fast path: variety already concentrated at the origin
    ring = ideal.ring
    if all(ideal.contains(ring.variable(i) ** d, budget) for i in range(ring.nvars)):
        return d
    stacked = []
    for i in range(ring.nvars):
        m = _multiplication_matrix(ideal, i, basis, budget)
        stacked.extend(_mat_pow(m, d))
    return d - _rank(stacked)


# -- gcd and squarefreeness ------------------------------------------------------


def polynomial_gcd(f: Polynomial, g: Polynomial,
                   budget: Budget | None = None) -> Polynomial:
    """Monic gcd computed through the intersection of principal ideals."""
    if f.is_zero:
        return g.monic(GREVLEX)
    if g.is_zero:
        return f.monic(GREVLEX)
    if f.is_constant or g.is_constant:
        return f.ring.one()
    ring = f.ring
    (t_name,) = ring.fresh_names("t_", 1)
    ext = ring.extended([t_name])
    t = ext.variable(t_name)
    fe = f.lifted(ext)
    ge = g.lifted(ext)
    ideal = Ideal([t * fe, (ext.one() - t) * ge],
                  MonomialOrder.elimination([ext.index(t_name)]), ext)
    kept = elimination_ideal(ideal, range(ring.nvars), budget).generators
    lcm_candidates = [p.restricted(ring) for p in kept]
    if len(lcm_candidates) != 1:
        raise AssertionError("intersection of principal ideals must be principal")
    lcm = lcm_candidates[0]
    quotient = divide_exact(f * g, lcm)
    if quotient is None:
        raise AssertionError("product is always divisible by the lcm")
    return quotient.monic(GREVLEX)


def is_squarefree(h: Polynomial, budget: Budget | None = None) -> bool:
    """True when h has no repeated factor (via gcd with the partials)."""
    if h.is_zero:
        return False
    g = h
    for i in range(h.ring.nvars):
        if g.is_constant:
            return True
        g = polynomial_gcd(g, h.partial_derivative(i), budget)
    return g.is_constant
