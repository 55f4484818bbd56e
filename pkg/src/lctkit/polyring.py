"""Exact sparse multivariate polynomial arithmetic over the rationals.

Values are immutable and every operation is exact: coefficients are
`fractions.Fraction` throughout, exponent vectors are plain int tuples,
and floating point input is rejected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Exponents = tuple[int, ...]

__all__ = [
    "ParseError",
    "PolynomialRing",
    "Polynomial",
    "MonomialOrder",
    "WeightSystem",
    "parse_polynomial",
    "partial_derivative",
    "weighted_degree",
    "is_weighted_homogeneous",
    "euler_apply",
    "to_fraction",
]


def to_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``p/q`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


class ParseError(ValueError):
    """Syntax or name error in polynomial text, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PolynomialRing:
    """A polynomial ring over Q with named variables in a fixed order."""

    __slots__ = ("variables", "_index")

    def __init__(self, variables: Sequence[str]):
        names = tuple(str(v) for v in variables)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        for name in names:
            if not name or not (name[0].isalpha() or name[0] == "_"):
                raise ValueError(f"invalid variable name {name!r}")
            if not all(c.isalnum() or c == "_" for c in name):
                raise ValueError(f"invalid variable name {name!r}")
        self.variables = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self.variables!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = to_fraction(value)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, which) -> "Polynomial":
        i = which if isinstance(which, int) else self.index(which)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        e = tuple(int(x) for x in exps)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValueError(f"bad exponent vector {exps!r} for {self!r}")
        c = to_fraction(coeff)
        return Polynomial(self, {e: c} if c else {})

    def polynomial(self, terms: Mapping[Exponents, object]) -> "Polynomial":
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in terms.items():
            e = tuple(int(x) for x in exps)
            if len(e) != self.nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {exps!r} for {self!r}")
            c = to_fraction(coeff)
            if c:
                out[e] = out.get(e, Fraction(0)) + c
                if not out[e]:
                    del out[e]
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        return _Parser(text, self).parse()

    def extended(self, extra: Sequence[str]) -> "PolynomialRing":
        """A ring with the same variables followed by `extra` new ones."""
        return PolynomialRing(self.variables + tuple(extra))

    def fresh_names(self, base: str, count: int) -> list[str]:
        """`count` names derived from `base` that avoid every existing name."""
        names = []
        taken = set(self.variables)
        for k in range(1, count + 1):
            name = f"{base}{k}" if count > 1 else base
            while name in taken:
                name = "_" + name
            taken.add(name)
            names.append(name)
        return names

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"PolynomialRing({', '.join(self.variables)})"


class MonomialOrder:
    """A term order on exponent vectors, exposed as a sort key.

    Supported kinds: lex, grevlex, weighted grevlex, and block (elimination)
    orders whose leading block is compared first by grevlex.  All are
    multiplicative well-orders with 1 as the minimum.
    """

    __slots__ = ("kind", "data", "_memo")

    def __init__(self, kind: str, data=None):
        self.kind = kind
        self.data = data
        self._memo: dict[Exponents, tuple] = {}

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def weighted_grevlex(cls, weights: Sequence) -> "MonomialOrder":
        w = tuple(to_fraction(x) for x in weights)
        if any(x <= 0 for x in w):
            raise ValueError("order weights must be positive")
        return cls("wgrevlex", w)

    @classmethod
    def elimination(cls, lead_vars: Iterable[int]) -> "MonomialOrder":
        """Block order eliminating `lead_vars` (they dominate the comparison)."""
        lead = tuple(sorted(set(int(i) for i in lead_vars)))
        if not lead:
            raise ValueError("elimination order needs a nonempty leading block")
        return cls("block", lead)

    def key(self, exps: Exponents) -> tuple:
        memo = self._memo
        k = memo.get(exps)
        if k is None:
            k = self._key(exps)
            memo[exps] = k
        return k

    def _key(self, e: Exponents) -> tuple:
        kind = self.kind
        if kind == "grevlex":
            return (sum(e), tuple(-x for x in reversed(e)))
        if kind == "lex":
            return e
        if kind == "wgrevlex":
            w = self.data
            return (sum(wi * xi for wi, xi in zip(w, e)),
                    tuple(-x for x in reversed(e)))
        if kind == "block":
            lead = self.data
            lead_set = set(lead)
            head = tuple(e[i] for i in lead)
            tail = tuple(x for i, x in enumerate(e) if i not in lead_set)
            return (sum(head), tuple(-x for x in reversed(head)),
                    sum(tail), tuple(-x for x in reversed(tail)))
        raise ValueError(f"unknown order kind {kind!r}")

    def max_exponents(self, exps_iter: Iterable[Exponents]) -> Exponents:
        return max(exps_iter, key=self.key)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind and self.data == other.data)

    def __hash__(self):
        return hash((self.kind, self.data))

    def __repr__(self):
        return f"MonomialOrder({self.kind}{'' if self.data is None else ', ' + repr(self.data)})"


GREVLEX = MonomialOrder.grevlex()
LEX = MonomialOrder.lex()


class Polynomial:
    """Immutable sparse polynomial: a map from exponent vectors to nonzero
    rationals.  Equal polynomials have identical term maps regardless of any
    term order."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Exponents, Fraction]):
        self.ring = ring
        self._terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def iter_terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    def term_map(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    @property
    def constant_coefficient(self) -> Fraction:
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def support(self) -> set[int]:
        """Indices of variables that actually occur."""
        out: set[int] = set()
        for e in self._terms:
            for i, x in enumerate(e):
                if x:
                    out.add(i)
        return out

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in g._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in g._terms.items():
            s = out.get(e, Fraction(0)) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g - self

    def __mul__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        if not self._terms or not g._terms:
            return self.ring.zero()
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in g._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = to_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * v for e, v in self._terms.items()})

    def multiply_term(self, exps: Exponents, coeff: Fraction) -> "Polynomial":
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring, {
            tuple(a + b for a, b in zip(e, exps)): c * coeff
            for e, c in self._terms.items()
        })

    # -- calculus and grading ----------------------------------------------

    def partial_derivative(self, which) -> "Polynomial":
        """Exact formal partial derivative with respect to one variable."""
        i = which if isinstance(which, int) else self.ring.index(which)
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        out: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                s = out.get(e2, Fraction(0)) + c * k
                if s:
                    out[e2] = s
                else:
                    del out[e2]
        return Polynomial(self.ring, out)

    def evaluate(self, values: Sequence) -> Fraction:
        point = [to_fraction(v) for v in values]
        if len(point) != self.ring.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term *= v ** k
            total += term
        return total

    # -- term-order dependent views ------------------------------------------

    def sorted_terms(self, order: MonomialOrder, reverse: bool = True):
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]),
                      reverse=reverse)

    def leading_monomial(self, order: MonomialOrder) -> Exponents:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    def primitive(self) -> "Polynomial":
        """Integer-coprime coefficients with a positive grevlex-leading one."""
        if not self._terms:
            return self
        coeffs = list(self._terms.values())
        den_lcm = 1
        for c in coeffs:
            d = c.denominator
            g = _gcd(den_lcm, d)
            den_lcm = den_lcm // g * d
        num_gcd = 0
        for c in coeffs:
            num_gcd = _gcd(num_gcd, abs(c.numerator * (den_lcm // c.denominator)))
        factor = Fraction(den_lcm, num_gcd)
        if self.leading_coefficient(GREVLEX) < 0:
            factor = -factor
        return self.scale(factor)

    def lifted(self, target: PolynomialRing) -> "Polynomial":
        """Reinterpret in a ring that contains all of this ring's variables."""
        mapping = [target.index(name) for name in self.ring.variables]
        out: dict[Exponents, Fraction] = {}
        zeros = [0] * target.nvars
        for e, c in self._terms.items():
            e2 = zeros[:]
            for i, x in enumerate(e):
                if x:
                    e2[mapping[i]] = x
            out[tuple(e2)] = c
        return Polynomial(target, out)

    def restricted(self, target: PolynomialRing) -> "Polynomial":
        """Project to a subring; raises if a missing variable occurs."""
        positions = []
        target_names = set(target.variables)
        for i, name in enumerate(self.ring.variables):
            positions.append(target.index(name) if name in target_names else None)
        out: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            e2 = [0] * target.nvars
            for i, x in enumerate(e):
                if not x:
                    continue
                if positions[i] is None:
                    raise ValueError(
                        f"variable {self.ring.variables[i]!r} occurs but is not in the target ring")
                e2[positions[i]] = x
            out[tuple(e2)] = c
        return Polynomial(target, out)

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- printing ---------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for e, c in self.sorted_terms(GREVLEX):
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"<{self} over {self.ring.variables}>"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class WeightSystem:
    """Positive rational weights for the variables, with a weight `degree`.

    The normalized form rescales so the degree is 1; the Euler field of the
    system is sum_i w_i x_i d/dx_i.
    """

    __slots__ = ("weights", "degree")

    def __init__(self, weights: Sequence, degree=1):
        self.weights = tuple(to_fraction(w) for w in weights)
        self.degree = to_fraction(degree)
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be strictly positive")
        if self.degree <= 0:
            raise ValueError("weight degree must be strictly positive")

    def normalized(self) -> "WeightSystem":
        if self.degree == 1:
            return self
        return WeightSystem([w / self.degree for w in self.weights], 1)

    @property
    def total(self) -> Fraction:
        """The sum of the weights."""
        return sum(self.weights, Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, WeightSystem)
                and self.weights == other.weights and self.degree == other.degree)

    def __hash__(self):
        return hash((self.weights, self.degree))

    def __repr__(self):
        return f"WeightSystem({[str(w) for w in self.weights]}, degree={self.degree})"


def weighted_degree(exps: Sequence[int], weights: WeightSystem) -> Fraction:
    """Weighted degree sum_i w_i * e_i of a single exponent vector."""
    if len(exps) != len(weights.weights):
        raise ValueError("exponent vector length does not match the weights")
    return sum((w * e for w, e in zip(weights.weights, exps)), Fraction(0))


def is_weighted_homogeneous(f: Polynomial, weights: WeightSystem) -> bool:
    """True when every term of `f` has the same weighted degree."""
    degrees = {weighted_degree(e, weights) for e, _ in f.iter_terms()}
    return len(degrees) <= 1


def euler_apply(f: Polynomial, weights: WeightSystem) -> Polynomial:
    """Apply the Euler field sum_i w_i x_i d/dx_i; equals d*f exactly when
    `f` is weighted homogeneous of weighted degree d."""
    if len(weights.weights) != f.ring.nvars:
        raise ValueError("weight count does not match the ring")
    out: dict[Exponents, Fraction] = {}
    for e, c in f.iter_terms():
        scale = weighted_degree(e, weights)
        if scale:
            out[e] = c * scale
    return Polynomial(f.ring, out)


def partial_derivative(f: Polynomial, which) -> Polynomial:
    """Module-level spelling of :meth:`Polynomial.partial_derivative`."""
    return f.partial_derivative(which)


# -- parsing ---------------------------------------------------------------

_SYMBOLS = set("+-*^()/")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _SYMBOLS:
            tokens.append((c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    """Recursive-descent parser for `+ - * ^` expressions over declared
    variables with integer and ``p/q`` literals.  Implicit multiplication
    (``2x``) is a syntax error."""

    def __init__(self, text: str, ring: PolynomialRing):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        poly = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name", "("):
                raise ParseError(
                    f"missing operator before {tok[1]!r} (implicit multiplication is not allowed)",
                    tok[2])
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return poly

    def expression(self) -> Polynomial:
        poly = self.term()
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> Polynomial:
        poly = self.signed_factor()
        while True:
            tok = self.peek()
            if tok[0] == "*":
                self.advance()
                poly = poly * self.signed_factor()
            elif tok[0] in ("int", "name", "("):
                raise ParseError(
                    f"missing operator before {tok[1]!r} (implicit multiplication is not allowed)",
                    tok[2])
            else:
                return poly

    def signed_factor(self) -> Polynomial:
        sign = 1
        while self.peek()[0] in "+-":
            if self.advance()[0] == "-":
                sign = -sign
        poly = self.power()
        return poly if sign > 0 else -poly

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            return base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok[0] == "int":
            value = int(tok[1])
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", den_tok[2])
                return self.ring.constant(Fraction(value, den))
            return self.ring.constant(value)
        if tok[0] == "name":
            if tok[1] not in self.ring._index:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            return self.ring.variable(tok[1])
        if tok[0] == "(":
            poly = self.expression()
            closing = self.advance()
            if closing[0] != ")":
                raise ParseError("unbalanced parenthesis", closing[2])
            return poly
        if tok[0] == "/":
            raise ParseError("division is only allowed between integer literals", tok[2])
        raise ParseError(f"unexpected {tok[1]!r}" if tok[1] else "unexpected end of input",
                         tok[2])


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse `text` in a fresh ring over `variables`.

    Round trip guarantee: parsing the canonical printed form of any
    polynomial returns an equal polynomial.
    """
    return PolynomialRing(variables).parse(text)
