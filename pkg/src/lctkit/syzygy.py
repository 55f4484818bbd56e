"""Groebner bases for submodules of free modules, syzygies, and what they
buy us for divisors: generators of the logarithmic derivation module,
determinant (Saito) freeness certificates, and order-1 annihilator
generators.

Module monomials are (position, exponent) pairs under a position-over-term
order.  Syzygies come from the classic component-elimination construction:
the kernel of R^k -> R, e_i -> f_i, is read off the basis vectors whose
carrier component vanishes.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .groebner import Budget, _budget, _divides, _lcm_exps, _quotient, divide_exact
from .polyring import GREVLEX, Exponents, MonomialOrder, Polynomial, PolynomialRing
from .verdicts import UNKNOWN, YES, Verdict, frac_str

__all__ = [
    "ModuleVector", "LogDerivation", "SaitoCertificate", "Order1Operator",
    "syzygy_module", "module_contains", "lift", "log_derivations",
    "saito_check", "saito_search", "ann1_generators", "anns1_generators",
    "determinant", "determinant_cofactor",
]

DEFAULT_SAITO_BUDGET = 2000

_MTerm = tuple[int, Exponents]
_MVec = dict[_MTerm, Fraction]


@dataclass(frozen=True)
class ModuleVector:
    """An element of a free module, one polynomial per component."""

    components: tuple[Polynomial, ...]

    def dot(self, polys: Sequence[Polynomial]) -> Polynomial:
        if len(polys) != len(self.components):
            raise ValueError("rank mismatch")
        total = self.components[0].ring.zero()
        for a, f in zip(self.components, polys):
            total = total + a * f
        return total

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


# -- raw module arithmetic ------------------------------------------------------


def _vec_from_polys(polys: Sequence[Polynomial], offset: int = 0) -> _MVec:
    out: _MVec = {}
    for pos, p in enumerate(polys):
        for e, c in p.iter_terms():
            out[(pos + offset, e)] = c
    return out


def _vec_to_polys(vec: _MVec, rank: int, ring: PolynomialRing) -> tuple[Polynomial, ...]:
    buckets: list[dict[Exponents, Fraction]] = [{} for _ in range(rank)]
    for (pos, e), c in vec.items():
        buckets[pos][e] = c
    return tuple(Polynomial(ring, b) for b in buckets)


def _vec_lead(vec: _MVec, mkey) -> _MTerm:
    return max(vec, key=mkey)


def _vec_sub_scaled(target: _MVec, source: _MVec, coeff: Fraction,
                    shift: Exponents) -> None:
    for (pos, e), c in source.items():
        key = (pos, tuple(a + b for a, b in zip(e, shift)))
        s = target.get(key, Fraction(0)) - coeff * c
        if s:
            target[key] = s
        else:
            target.pop(key, None)


def _vec_primitive(vec: _MVec, mkey) -> _MVec:
    if not vec:
        return vec
    den_lcm = 1
    for c in vec.values():
        d = c.denominator
        g = _igcd(den_lcm, d)
        den_lcm = den_lcm // g * d
    num_gcd = 0
    for c in vec.values():
        num_gcd = _igcd(num_gcd, abs(c.numerator * (den_lcm // c.denominator)))
    factor = Fraction(den_lcm, num_gcd)
    if vec[_vec_lead(vec, mkey)] < 0:
        factor = -factor
    return {k: c * factor for k, c in vec.items()}


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _module_normal_form(vec: _MVec, basis: list[_MVec], mkey,
                        budget: Budget) -> _MVec:
    divisors = []
    for g in basis:
        lead = _vec_lead(g, mkey)
        divisors.append((lead[0], lead[1], g[lead], g))
    p = dict(vec)
    remainder: _MVec = {}
    steps = 0
    while p:
        term = max(p, key=mkey)
        pos, e = term
        c = p.pop(term)
        for gpos, ge, gc, g in divisors:
            if gpos == pos and _divides(ge, e):
                shift = _quotient(e, ge)
                q = c / gc
                p[term] = c  # reinstate, the subtraction removes it exactly
                _vec_sub_scaled(p, g, q, shift)
                break
        else:
            remainder[term] = c
        steps += 1
        if steps % 256 == 0:
            budget.check_time()
    return remainder


def _module_buchberger(vectors: list[_MVec], order: MonomialOrder,
                       budget: Budget) -> list[_MVec]:
    ring_key = order.key

    def mkey(term: _MTerm):
        return (-term[0], ring_key(term[1]))

    G = [_vec_primitive(v, mkey) for v in vectors if v]
    if not G:
        return []
    leads = [_vec_lead(g, mkey) for g in G]
    done: set[frozenset[int]] = set()
    queue: list[tuple[tuple, int, int, Exponents]] = []

    def push_pairs(t: int):
        tpos, te = leads[t]
        for i in range(t):
            ipos, ie = leads[i]
            if ipos != tpos:
                continue
            lcm = _lcm_exps(ie, te)
            heapq.heappush(queue, ((sum(lcm), ring_key(lcm)), i, t, lcm))

    for t in range(1, len(G)):
        push_pairs(t)

    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        pair = frozenset((i, j))
        if pair in done:
            continue
        done.add(pair)
        pos = leads[i][0]
        skip = False
        for k in range(len(G)):
            if k in pair or leads[k][0] != pos:
                continue
            if (_divides(leads[k][1], lcm)
                    and frozenset((i, k)) in done and frozenset((j, k)) in done):
                skip = True
                break
        if skip:
            continue
        budget.charge_pair()
        s: _MVec = {}
        _vec_sub_scaled(s, G[i], Fraction(-1) / G[i][leads[i]], _quotient(lcm, leads[i][1]))
        _vec_sub_scaled(s, G[j], Fraction(1) / G[j][leads[j]], _quotient(lcm, leads[j][1]))
        r = _module_normal_form(s, G, mkey, budget)
        if not r:
            continue
        r = _vec_primitive(r, mkey)
        budget.check_degree(max(sum(e) for _, e in r))
        G.append(r)
        leads.append(_vec_lead(r, mkey))
        push_pairs(len(G) - 1)

    # minimalize and tail-reduce
    keep = []
    for i, lead in enumerate(leads):
        redundant = any(
            j != i and leads[j][0] == lead[0] and _divides(leads[j][1], lead[1])
            and (leads[j][1] != lead[1] or j < i)
            for j in range(len(G)))
        if not redundant:
            keep.append(i)
    minimal = [G[i] for i in keep]
    reduced: list[_MVec] = []
    for i, g in enumerate(minimal):
        others = reduced + minimal[i + 1:]
        r = _module_normal_form(g, others, mkey, budget) if others else g
        if r:
            lead = _vec_lead(r, mkey)
            lc = r[lead]
            reduced.append({k: c / lc for k, c in r.items()})
    reduced.sort(key=lambda v: mkey(_vec_lead(v, mkey)))
    return reduced


# -- public module operations --------------------------------------------------


def syzygy_module(polys: Sequence[Polynomial],
                  order: MonomialOrder = GREVLEX,
                  budget: Budget | None = None) -> list[ModuleVector]:
    """Generators of the relation module { s : sum_i s_i f_i = 0 }.

    Works in a free module with one extra carrier component holding f_i;
    basis elements whose carrier vanishes are exactly the syzygies.
    """
    budget = _budget(budget)
    polys = list(polys)
    if not polys or all(p.is_zero for p in polys):
        raise ValueError("syzygies need at least one nonzero polynomial")
    ring = polys[0].ring
    k = len(polys)
    zero_e = (0,) * ring.nvars
    vectors = []
    for i, f in enumerate(polys):
        vec: _MVec = {(0, e): c for e, c in f.iter_terms()}
        vec[(i + 1, zero_e)] = Fraction(1)
        vectors.append(vec)
    basis = _module_buchberger(vectors, order, budget)
    out = []
    for vec in basis:
        if all(pos != 0 for pos, _ in vec):
            shifted = {(pos - 1, e): c for (pos, e), c in vec.items()}
            out.append(ModuleVector(_vec_to_polys(shifted, k, ring)))
    return out


def module_contains(target: ModuleVector, generators: Sequence[ModuleVector],
                    order: MonomialOrder = GREVLEX,
                    budget: Budget | None = None) -> bool:
    """Membership of a vector in the submodule spanned by `generators`."""
    budget = _budget(budget)
    vecs = [_vec_from_polys(g.components) for g in generators]
    vecs = [v for v in vecs if v]
    if not vecs:
        return all(c.is_zero for c in target.components)
    basis = _module_buchberger(vecs, order, budget)
    ring_key = order.key

    def mkey(term: _MTerm):
        return (-term[0], ring_key(term[1]))

    r = _module_normal_form(_vec_from_polys(target.components), basis, mkey, budget)
    return not r


def lift(f: Polynomial, generators: Sequence[Polynomial],
         order: MonomialOrder = GREVLEX,
         budget: Budget | None = None) -> list[Polynomial] | None:
    """Cofactors q with f = sum_i q_i g_i, or None when f is not a member.

    Same carrier construction as :func:`syzygy_module`; reducing (f, 0,...)
    tracks the cofactors in the tail components.
    """
    budget = _budget(budget)
    gens = list(generators)
    ring = f.ring
    k = len(gens)
    zero_e = (0,) * ring.nvars
    vectors = []
    for i, g in enumerate(gens):
        vec: _MVec = {(0, e): c for e, c in g.iter_terms()}
        vec[(i + 1, zero_e)] = Fraction(1)
        vectors.append(vec)
    basis = _module_buchberger(vectors, order, budget)
    ring_key = order.key

    def mkey(term: _MTerm):
        return (-term[0], ring_key(term[1]))

    r = _module_normal_form({(0, e): c for e, c in f.iter_terms()}, basis, mkey, budget)
    if any(pos == 0 for pos, _ in r):
        return None
    shifted = {(pos - 1, e): -c for (pos, e), c in r.items()}
    return list(_vec_to_polys(shifted, k, ring))


# -- logarithmic derivations ----------------------------------------------------


@dataclass(frozen=True)
class LogDerivation:
    """A vector field sum_i a_i d_i together with its eigenvalue part c,
    bound by the exact relation sum_i a_i dh/dx_i = c * h."""

    coefficients: tuple[Polynomial, ...]
    eigen: Polynomial

    def apply(self, f: Polynomial) -> Polynomial:
        total = f.ring.zero()
        for i, a in enumerate(self.coefficients):
            total = total + a * f.partial_derivative(i)
        return total

    def validates(self, h: Polynomial) -> bool:
        return self.apply(h) == self.eigen * h

    def max_coefficient_degree(self) -> int:
        return max(a.total_degree() for a in self.coefficients)

    def __str__(self):
        ring = self.eigen.ring
        parts = []
        for name, a in zip(ring.variables, self.coefficients):
            if not a.is_zero:
                parts.append(f"({a})*d_{name}")
        body = " + ".join(parts) if parts else "0"
        return f"{body}  [eigenvalue {self.eigen}]"


@dataclass(frozen=True)
class SaitoCertificate:
    """n logarithmic derivations whose coefficient determinant is a nonzero
    rational multiple of the divisor equation; the identity is exact."""

    basis: tuple[LogDerivation, ...]
    unit: Fraction
    determinant: Polynomial

    def check(self, h: Polynomial) -> bool:
        if any(not d.validates(h) for d in self.basis):
            return False
        matrix = [list(d.coefficients) for d in self.basis]
        det = determinant_cofactor(matrix)
        return det == h.scale(self.unit) and self.unit != 0

    def to_dict(self) -> dict:
        return {
            "basis": [[str(a) for a in d.coefficients] + [str(d.eigen)]
                      for d in self.basis],
            "unit": frac_str(self.unit),
            "determinant": str(self.determinant),
        }


_log_cache: dict[tuple[Polynomial, MonomialOrder], tuple[LogDerivation, ...]] = {}


def log_derivations(h: Polynomial, order: MonomialOrder = GREVLEX,
                    budget: Budget | None = None) -> tuple[LogDerivation, ...]:
    """A generating set of the logarithmic derivation module of V(h),
    realized as the syzygies of (dh/dx_1, ..., dh/dx_n, -h)."""
    if h.is_zero or h.is_constant:
        raise ValueError("the divisor equation must be nonconstant")
    cached = _log_cache.get((h, order))
    if cached is not None:
        return cached
    n = h.ring.nvars
    partials = [h.partial_derivative(i) for i in range(n)]
    syzygies = syzygy_module(partials + [-h], order, budget)
    result = tuple(
        LogDerivation(vec.components[:n], vec.components[n]) for vec in syzygies)
    _log_cache[(h, order)] = result
    return result


# -- determinants of polynomial matrices ----------------------------------------


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free (Bareiss) determinant; every division is exact."""
    n = len(matrix)
    ring = matrix[0][0].ring
    if any(len(row) != n for row in matrix):
        raise ValueError("square matrix required")
    a = [list(row) for row in matrix]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero), None)
            if swap is None:
                return ring.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q = divide_exact(num, prev)
                if q is None:
                    raise AssertionError("Bareiss division must be exact")
                a[i][j] = q
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant_cofactor(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Plain Laplace expansion; the independent re-check for certificates."""
    n = len(matrix)
    ring = matrix[0][0].ring
    if n == 1:
        return matrix[0][0]
    total = ring.zero()
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [[row[col] for col in range(n) if col != j] for row in matrix[1:]]
        cofactor = entry * determinant_cofactor(minor)
        total = total + cofactor if j % 2 == 0 else total - cofactor
    return total


# -- Saito criterion -------------------------------------------------------------


def saito_check(h: Polynomial, candidate: Sequence[LogDerivation],
                validate: bool = True) -> tuple[Verdict, SaitoCertificate | None]:
    """Determinant test: YES with a certificate when det equals a nonzero
    rational multiple of h.  Freeness is never refuted here; a failed
    candidate yields UNKNOWN."""
    n = h.ring.nvars
    if len(candidate) != n:
        raise ValueError(f"need exactly {n} derivations, got {len(candidate)}")
    if validate:
        for d in candidate:
            if not d.validates(h):
                raise ValueError(f"candidate is not logarithmic for the divisor: {d}")
    matrix = [list(d.coefficients) for d in candidate]
    det = determinant(matrix)
    if det.is_zero:
        return Verdict(UNKNOWN, "saito-determinant",
                       reason="candidate determinant vanishes"), None
    quotient = divide_exact(det, h)
    if quotient is not None and quotient.is_constant and not quotient.is_zero:
        unit = quotient.constant_coefficient
        cert = SaitoCertificate(tuple(candidate), unit, det)
        return Verdict(YES, "saito-determinant", certificate=cert.to_dict()), cert
    return Verdict(UNKNOWN, "saito-determinant",
                   reason="candidate determinant is not a unit multiple of the divisor"), None


def saito_search(h: Polynomial, subset_budget: int = DEFAULT_SAITO_BUDGET,
                 budget: Budget | None = None) -> tuple[Verdict, SaitoCertificate | None]:
    """Search n-subsets of the computed derivation generators for a
    determinant certificate.  Subsets are tried by ascending estimated
    determinant degree; the first hit wins.  Exhaustion yields UNKNOWN
    (freeness is never refuted by searching)."""
    n = h.ring.nvars
    generators = log_derivations(h, GREVLEX, budget)
    if len(generators) < n:
        return Verdict(UNKNOWN, "saito-determinant",
                       reason=f"only {len(generators)} derivation generators for rank {n}"), None
    degrees = [d.max_coefficient_degree() for d in generators]
    subsets = sorted(combinations(range(len(generators)), n),
                     key=lambda s: (sum(degrees[i] for i in s), s))
    tried = 0
    for subset in subsets:
        if tried >= subset_budget:
            return Verdict(UNKNOWN, "saito-determinant",
                           reason=f"subset budget of {subset_budget} exhausted"), None
        tried += 1
        verdict, cert = saito_check(h, [generators[i] for i in subset], validate=False)
        if verdict.value == YES:
            return verdict, cert
    return Verdict(UNKNOWN, "saito-determinant",
                   reason=f"no certificate among {tried} candidate bases"), None


# -- order-1 annihilators ---------------------------------------------------------


@dataclass(frozen=True)
class Order1Operator:
    """An order-1 operator derived from a logarithmic derivation.

    With v = sum_i vector[i] d_i and the exact relation v(h) = scalar * h:
    the operator v + scalar annihilates 1/h, and v - scalar*s annihilates
    the formal power h^s.  `s_power` picks the intended reading.
    """

    vector: tuple[Polynomial, ...]
    scalar: Polynomial
    s_power: bool = False

    def verify(self, h: Polynomial) -> bool:
        total = h.ring.zero()
        for i, a in enumerate(self.vector):
            total = total + a * h.partial_derivative(i)
        return total == self.scalar * h

    def __str__(self):
        ring = self.scalar.ring
        parts = []
        for name, a in zip(ring.variables, self.vector):
            if not a.is_zero:
                parts.append(f"({a})*d_{name}")
        body = " + ".join(parts) if parts else "0"
        if self.s_power:
            return f"{body} - ({self.scalar})*s" if not self.scalar.is_zero else body
        return f"{body} + ({self.scalar})" if not self.scalar.is_zero else body


def _operator_family(h: Polynomial, s_power: bool,
                     budget: Budget | None) -> list[Order1Operator]:
    if h.is_zero:
        raise ValueError("zero divisor equation")
    if h.constant_coefficient != 0:
        raise ValueError("the divisor equation must vanish at the origin")
    return [Order1Operator(d.coefficients, d.eigen, s_power)
            for d in log_derivations(h, GREVLEX, budget)]


def ann1_generators(h: Polynomial, budget: Budget | None = None) -> list[Order1Operator]:
    """Generators of the order-at-most-1 annihilators of 1/h.

    Each operator P = v + c satisfies v(h) = c*h exactly, hence P kills 1/h
    as a rational-function identity.  Only the order-1 layer is produced;
    higher-order generation is out of scope here.
    """
    return _operator_family(h, s_power=False, budget=budget)


def anns1_generators(h: Polynomial, budget: Budget | None = None) -> list[Order1Operator]:
    """Generators of the order-at-most-1 annihilators of h^s, of the shape
    v - c*s with v(h) = c*h (so v(h^s) = c*s*h^s formally)."""
    return _operator_family(h, s_power=True, budget=budget)
