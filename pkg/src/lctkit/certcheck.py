"""Independent re-validation of verdict certificates.

Each checker re-derives the claimed identity from the certificate payload
with as little shared machinery as possible: determinants are re-expanded
by cofactors rather than by the fraction-free path, membership identities
are re-multiplied term by term, and combinatorial data is recomputed.
"""

from __future__ import annotations

from fractions import Fraction

from . import diagnostics
from .groebner import Ideal, buchberger, normal_form
from .polyring import GREVLEX, Polynomial, WeightSystem, weighted_degree
from .syzygy import LogDerivation, determinant_cofactor
from .verdicts import NO, UNKNOWN, YES

__all__ = ["verify_entry"]


def verify_entry(entry: dict, subject) -> bool:
    """Re-check one serialized report entry against its subject.

    `subject` is the divisor Polynomial for polynomial conditions or the
    Arrangement for arrangement conditions.  UNKNOWN entries are vacuously
    valid.  Unrecognized rules fail closed.
    """
    if entry["value"] == UNKNOWN:
        return True
    checker = _CHECKERS.get(entry["rule"])
    if checker is None:
        return False
    try:
        return checker(entry, subject)
    except Exception:
        return False


def _parse_in_ring(ring, text: str) -> Polynomial:
    return ring.parse(text)


def _check_weights(entry, h: Polynomial) -> bool:
    if entry["value"] == NO:
        return diagnostics.find_weights(h) is None
    weights = WeightSystem([Fraction(w) for w in entry["certificate"]["weights"]])
    return all(weighted_degree(e, weights) == 1 for e, _ in h.iter_terms())


def _check_isolated(entry, h: Polynomial) -> bool:
    again = diagnostics.isolated_singularity_at_origin(h)
    if again.value != entry["value"]:
        return False
    if entry["value"] == YES:
        cert = entry["certificate"]
        return (again.certificate["tjurina_number"] == cert["tjurina_number"]
                and again.certificate["milnor_number"] == cert["milnor_number"])
    return True


def _check_membership(entry, h: Polynomial) -> bool:
    ring = h.ring
    cofactors = [_parse_in_ring(ring, q) for q in entry["certificate"]["cofactors"]]
    if len(cofactors) != ring.nvars:
        return False
    total = ring.zero()
    for i, q in enumerate(cofactors):
        total = total + q * h.partial_derivative(i)
    return total == h


def _check_mu_tau(entry, h: Polynomial) -> bool:
    mu, tau = diagnostics.milnor_tjurina(h)
    cert = entry["certificate"]
    if cert["milnor_number"] != mu or cert["tjurina_number"] != tau:
        return False
    return entry["value"] == (YES if mu == tau else NO)


def _check_degree_window(entry, h: Polynomial) -> bool:
    cert = entry["certificate"]
    weights = WeightSystem([Fraction(w) for w in cert["weights"]])
    if any(weighted_degree(e, weights) != 1 for e, _ in h.iter_terms()):
        return False
    total = weights.total
    n = h.ring.nvars
    forbidden = {Fraction(k) - total for k in range(1, n - 1)}
    if entry["value"] == NO:
        degree = Fraction(cert["offending_degree"])
        monomial = _parse_in_ring(h.ring, cert["offending_monomial"])
        ((exps, coeff),) = list(monomial.iter_terms())
        if coeff != 1 or weighted_degree(exps, weights) != degree:
            return False
        if degree not in forbidden:
            return False
        jac = diagnostics.jacobian_ideal(h)
        return jac.normal_form(monomial) == monomial  # still a standard monomial
    degrees = {Fraction(d) for d in cert["basis_degrees"]}
    wm = diagnostics.weight_multiset(h)
    return degrees == set(wm.degree_set) and not (degrees & forbidden)


def _check_bernstein(entry, h: Polynomial) -> bool:
    roots = diagnostics.bernstein_whis(h)
    return roots.as_pairs() == [tuple(p) for p in entry["certificate"]["roots"]]


def _check_integral_roots(entry, h: Polynomial) -> bool:
    again = diagnostics.condition_B_whis(h)
    if again.value != entry["value"]:
        return False
    if entry["value"] == NO:
        return (entry["certificate"]["offending_integral_root"]
                == again.certificate["offending_integral_root"])
    return True


def _basis_from_cert(rows, ring) -> list[LogDerivation]:
    out = []
    for row in rows:
        coefficients = tuple(_parse_in_ring(ring, s) for s in row[:-1])
        eigen = _parse_in_ring(ring, row[-1])
        out.append(LogDerivation(coefficients, eigen))
    return out


def _check_saito(entry, h: Polynomial) -> bool:
    cert = entry["certificate"]
    basis = _basis_from_cert(cert["basis"], h.ring)
    if len(basis) != h.ring.nvars:
        return False
    if any(not d.validates(h) for d in basis):
        return False
    unit = Fraction(cert["unit"])
    if unit == 0:
        return False
    det = determinant_cofactor([list(d.coefficients) for d in basis])
    return det == h.scale(unit)


def _check_symbol_dimension(entry, h: Polynomial) -> bool:
    cert = entry["certificate"]
    ring = h.ring
    n = ring.nvars
    basis = _basis_from_cert(cert["basis"], ring)
    if any(not d.validates(h) for d in basis):
        return False
    ext = ring.extended(ring.fresh_names("xi", n))
    symbols = []
    for d in basis:
        s = ext.zero()
        for j, a in enumerate(d.coefficients):
            s = s + a.lifted(ext) * ext.variable(n + j)
        symbols.append(s)
    from .groebner import krull_dimension

    dim = krull_dimension(Ideal(symbols, GREVLEX, ext))
    if dim != cert["symbol_dimension"]:
        return False
    return entry["value"] == (YES if dim == n else NO)


def _check_conormal(entry, h: Polynomial) -> bool:
    cert = entry["certificate"]
    ring = h.ring
    n = ring.nvars
    xi_names = ring.fresh_names("xi", n)
    (lam_name,) = ring.extended(xi_names).fresh_names("lam", 1)
    ext = ring.extended(xi_names + [lam_name])
    lam = ext.variable(lam_name)
    graph = [lam * h.partial_derivative(i).lifted(ext) for i in range(n)]
    gen_ring = ring.extended(xi_names)
    generators = [_parse_in_ring(gen_ring, s) for s in cert["generators"]]
    linear = [_parse_in_ring(gen_ring, s) for s in cert["linear_generators"]]
    xi_indices = set(range(n, 2 * n))
    for g in linear:
        if max(sum(e[i] for i in xi_indices) for e, _ in g.iter_terms()) > 1:
            return False
    # every generator must vanish identically on xi_i = lam * dh/dx_i
    for g in generators:
        value = ext.zero()
        for e, c in g.iter_terms():
            term = ext.constant(c)
            for i in range(n):
                if e[i]:
                    term = term * ext.variable(i) ** e[i]
            for i in range(n):
                if e[n + i]:
                    term = term * graph[i] ** e[n + i]
            value = value + term
        if not value.is_zero:
            return False
    gb = buchberger(linear) if linear else []
    return all(normal_form(g, gb).is_zero for g in generators)


def _check_smooth(entry, h: Polynomial) -> bool:
    partials = [h.partial_derivative(i) for i in range(h.ring.nvars)]
    return Ideal(partials + [h], GREVLEX, h.ring).is_unit_ideal


def _check_wh_free(entry, h: Polynomial) -> bool:
    cert = entry["certificate"]
    weights = WeightSystem([Fraction(w) for w in cert["weights"]])
    if any(weighted_degree(e, weights) != 1 for e, _ in h.iter_terms()):
        return False
    saito_entry = {"value": YES, "rule": "saito-determinant",
                   "certificate": cert["saito"]}
    return _check_saito(saito_entry, h)


def _check_operators(entry, h: Polynomial) -> bool:
    ring = h.ring
    for op in entry["certificate"]["operators"]:
        vector = [_parse_in_ring(ring, s) for s in op["vector"]]
        scalar = _parse_in_ring(ring, op["scalar"])
        total = ring.zero()
        for i, a in enumerate(vector):
            total = total + a * h.partial_derivative(i)
        if total != scalar * h:
            return False
    return True


def _check_factorization(entry, arrangement) -> bool:
    from .arrangement import poincare_polynomial

    poly = poincare_polynomial(arrangement)
    if entry["value"] == NO:
        from .arrangement import terao_factorization

        return terao_factorization(arrangement).value == NO
    ring = poly.ring
    t = ring.variable(0)
    product = ring.one()
    for e in entry["certificate"]["exponents"]:
        product = product * (ring.one() + t.scale(e))
    return product == poly


def _check_low_rank(entry, arrangement) -> bool:
    from .arrangement import build_lattice

    rank = build_lattice(arrangement).rank()
    return rank == entry["certificate"]["essential_rank"] and rank <= 4


_CHECKERS = {
    "weight-solve": _check_weights,
    "singular-locus-at-origin": _check_isolated,
    "jacobian-membership": _check_membership,
    "origin-quasihomogeneity": _check_mu_tau,
    "plane-curve-origin-quasihomogeneity": _check_mu_tau,
    "wh-isolated-degree-window": _check_degree_window,
    "bernstein-closed-form": _check_bernstein,
    "integral-root-scan": _check_integral_roots,
    "saito-determinant": _check_saito,
    "symbol-ideal-dimension": _check_symbol_dimension,
    "conormal-linear-generation": _check_conormal,
    "smooth-divisor": _check_smooth,
    "wh-free-divisor": _check_wh_free,
    "order-one-annihilators": _check_operators,
    "poincare-integer-factorization": _check_factorization,
    "low-rank-arrangement": _check_low_rank,
}
