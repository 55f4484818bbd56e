"""Independent reference implementations used only to cross-check the
library.  Deliberately naive and kept free of the engine's code paths:
the Buchberger oracle runs criterion-free FIFO completion, membership is
bounded-degree exact linear algebra, the Whitney sum and chamber counts
come straight from their definitions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from lctkit.linprog import feasible_strict
from lctkit.polyring import GREVLEX, Polynomial, PolynomialRing


# -- criterion-free Buchberger ---------------------------------------------------


def _lead(f: Polynomial, order):
    return f.leading_monomial(order)


def _reduce_full(f: Polynomial, basis, order):
    ring = f.ring
    p = f
    remainder = ring.zero()
    while not p.is_zero:
        e = p.leading_monomial(order)
        c = p.leading_coefficient(order)
        for g in basis:
            ge = g.leading_monomial(order)
            if all(a <= b for a, b in zip(ge, e)):
                shift = tuple(b - a for a, b in zip(ge, e))
                p = p - g.multiply_term(shift, c / g.leading_coefficient(order))
                break
        else:
            term = ring.monomial(e, c)
            remainder = remainder + term
            p = p - term
    return remainder


def naive_reduced_groebner(generators, order=GREVLEX):
    """FIFO Buchberger without pair criteria, then minimalization and full
    interreduction.  Exponentially slower than the engine; only for tiny
    inputs."""
    basis = [g for g in generators if not g.is_zero]
    if not basis:
        return []
    ring = basis[0].ring
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        gi, gj = basis[i], basis[j]
        ei, ej = _lead(gi, order), _lead(gj, order)
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        s = (gi.multiply_term(tuple(l - a for l, a in zip(lcm, ei)),
                              Fraction(1) / gi.leading_coefficient(order))
             - gj.multiply_term(tuple(l - a for l, a in zip(lcm, ej)),
                                Fraction(1) / gj.leading_coefficient(order)))
        r = _reduce_full(s, basis, order)
        if not r.is_zero:
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimalize
    keep = []
    leads = [_lead(g, order) for g in basis]
    for i, lm in enumerate(leads):
        if not any(j != i and all(a <= b for a, b in zip(leads[j], lm))
                   and (leads[j] != lm or j < i) for j in range(len(basis))):
            keep.append(basis[i])
    reduced = []
    for i, g in enumerate(keep):
        others = reduced + keep[i + 1:]
        r = _reduce_full(g, others, order) if others else g
        if not r.is_zero:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(_lead(g, order)))
    return reduced


# -- bounded-degree membership by linear algebra -----------------------------------


def _monomials_up_to(ring: PolynomialRing, degree: int):
    n = ring.nvars
    out = []
    for exps in product(range(degree + 1), repeat=n):
        if sum(exps) <= degree:
            out.append(exps)
    return out


def membership_by_linear_algebra(f: Polynomial, generators, cofactor_degree: int) -> bool:
    """Is f a combination sum q_i g_i with deg q_i <= cofactor_degree?

    Sets up the exact linear system over the unknown cofactor coefficients
    and decides solvability by Gaussian elimination.
    """
    ring = f.ring
    monos = _monomials_up_to(ring, cofactor_degree)
    columns = []  # one column per (generator, cofactor monomial)
    support = set(e for e, _ in f.iter_terms())
    for g in generators:
        for m in monos:
            shifted = g.multiply_term(m, Fraction(1))
            columns.append(dict(shifted.iter_terms()))
            support.update(shifted._terms)
    rows = sorted(support)
    row_index = {e: i for i, e in enumerate(rows)}
    matrix = [[Fraction(0)] * (len(columns) + 1) for _ in rows]
    for j, col in enumerate(columns):
        for e, c in col.items():
            matrix[row_index[e]][j] = c
    for e, c in f.iter_terms():
        matrix[row_index[e]][-1] = c
    return _solvable(matrix)


def _solvable(matrix) -> bool:
    rows = [row[:] for row in matrix]
    ncols = len(rows[0]) - 1
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return all(not row[-1] or any(row[:-1]) for row in rows)


# -- arrangement oracles -------------------------------------------------------------


def _linear_data(form: Polynomial):
    n = form.ring.nvars
    normal = [Fraction(0)] * n
    constant = Fraction(0)
    for e, c in form.iter_terms():
        if any(e):
            normal[next(i for i, x in enumerate(e) if x)] = c
        else:
            constant = c
    return normal, constant


def _subset_rank(normals, subset) -> int:
    rows = [list(normals[i]) for i in subset]
    rank = 0
    for col in range(len(normals[0]) if normals else 0):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _subset_consistent(forms, subset) -> bool:
    if not subset:
        return True
    rows = []
    for i in subset:
        normal, constant = _linear_data(forms[i])
        rows.append(normal + [-constant])
    # solvable iff rank of [A] equals rank of [A|b]
    coeff_rank = _subset_rank([r[:-1] for r in rows], range(len(rows)))
    full_rank = _subset_rank(rows, range(len(rows)))
    return coeff_rank == full_rank


def whitney_poincare_coefficients(arrangement) -> list[int]:
    """sum over central subsets S of (-1)^|S| (-t)^rank(S), as coefficients."""
    forms = arrangement.forms
    normals = [_linear_data(f)[0] for f in forms]
    m = len(forms)
    coeffs: dict[int, int] = {}
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            if not _subset_consistent(forms, subset):
                continue
            r = _subset_rank(normals, subset)
            sign = (-1) ** size * (-1) ** r
            coeffs[r] = coeffs.get(r, 0) + sign
    top = max(coeffs) if coeffs else 0
    return [coeffs.get(k, 0) for k in range(top + 1)]


def chamber_count(arrangement) -> int:
    """Number of open sign chambers of the real arrangement, each decided
    by exact strict-feasibility linear programming."""
    forms = arrangement.forms
    m = len(forms)
    n = arrangement.ring.nvars
    data = [_linear_data(f) for f in forms]
    count = 0
    for signs in product((1, -1), repeat=m):
        rows, kinds, rhs = [], [], []
        for sign, (normal, constant) in zip(signs, data):
            rows.append([sign * a for a in normal])
            kinds.append(">=")
            rhs.append(-sign * constant)
        if feasible_strict(rows, kinds, rhs, n):
            count += 1
    return count


def milnor_product_formula(weights) -> Fraction:
    """Product over the weights of (1/w - 1); counts the Milnor number of a
    weighted homogeneous isolated singularity with normalized degree 1."""
    total = Fraction(1)
    for w in weights:
        total *= (Fraction(1) / w - 1)
    return total
