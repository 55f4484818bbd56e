"""A deterministic corpus of weighted homogeneous isolated singularities in
two and three variables with small Milnor number: diagonal exponent sums
plus sparse perturbation monomials of the same weighted degree, filtered by
the engine's isolation gate (the cross-checked invariants are independent
mathematics, so the filter does not bias them)."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from lctkit.diagnostics import find_weights, jacobian_ideal
from lctkit.groebner import quotient_basis
from lctkit.polyring import Polynomial, PolynomialRing

MAX_MILNOR = 40


def _diagonal(ring: PolynomialRing, exponents) -> Polynomial:
    poly = ring.zero()
    for i, k in enumerate(exponents):
        poly = poly + ring.variable(i) ** k
    return poly


def _perturbations(exponents):
    """Interior monomials of weighted degree exactly 1 for weights 1/k_i."""
    n = len(exponents)
    out = []
    for exps in product(*(range(1, k) for k in exponents)):
        if sum(Fraction(e, k) for e, k in zip(exps, exponents)) == 1:
            out.append(exps)
    return out


def _isolated_at_origin(h: Polynomial) -> bool:
    if find_weights(h) is None:
        return False
    jac = jacobian_ideal(h)
    qb = quotient_basis(jac)
    if not qb.finite or qb.dimension == 0:
        return False
    power = qb.dimension
    ring = h.ring
    return all(jac.contains(ring.variable(i) ** power) for i in range(ring.nvars))


def generate(count: int = 20, seed: int = 2024) -> list[Polynomial]:
    rng = random.Random(seed)
    shapes = []
    for a, b in product(range(2, 7), repeat=2):
        if (a - 1) * (b - 1) <= MAX_MILNOR:
            shapes.append((a, b))
    for a, b, c in product(range(2, 6), repeat=3):
        if (a - 1) * (b - 1) * (c - 1) <= MAX_MILNOR:
            shapes.append((a, b, c))
    perturbable = [s for s in shapes if _perturbations(s)]
    corpus: list[Polynomial] = []
    seen = set()
    while len(corpus) < count:
        perturb = perturbable and rng.random() < 0.5
        exponents = rng.choice(perturbable if perturb else shapes)
        n = len(exponents)
        ring = PolynomialRing([f"x{i}" for i in range(1, n + 1)])
        h = _diagonal(ring, exponents)
        if perturb:
            exps = rng.choice(_perturbations(exponents))
            coeff = rng.choice([1, -1, 2, Fraction(1, 2)])
            h = h + ring.monomial(exps, coeff)
        if h in seen:
            continue
        if _isolated_at_origin(h):
            seen.add(h)
            corpus.append(h)
    return corpus
