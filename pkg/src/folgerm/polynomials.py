"""Exact multivariate polynomials over the rationals.

A polynomial in 2 or 3 variables is stored sparsely as a map from exponent
tuples to nonzero ``Fraction`` coefficients.  Variables are named ``x, y``
(arity 2) or ``x, y, z`` (arity 3).  All arithmetic is exact; nothing in this
module ever touches floating point.

Printing uses a fixed term order (total degree, then lexicographic with
``x > y > z``, highest first) so that ``str`` output is canonical and survives
a parse/print round trip.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Mapping

Monomial = tuple[int, ...]

VAR_NAMES = ("x", "y", "z")


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


def _print_key(monomial: Monomial) -> tuple:
    # Highest total degree first, ties by lex with x > y > z.
    return (-sum(monomial), tuple(-e for e in monomial))


class Poly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        if nvars not in (2, 3):
            raise ValueError(f"unsupported arity {nvars}; expected 2 or 3")
        clean: dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            if len(monomial) != nvars or any(e < 0 for e in monomial):
                raise ValueError(f"bad exponent tuple {monomial!r} for arity {nvars}")
            value = Fraction(coeff)
            if value:
                clean[tuple(monomial)] = value
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Fraction | int) -> Poly:
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> Poly:
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Monomial, coeff: Fraction | int = 1) -> Poly:
        return cls(len(exponents), {tuple(exponents): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Maximal total degree of a term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def order(self) -> int:
        """Minimal total degree of a term (the multiplicity at the origin)."""
        if not self._terms:
            raise ValueError("the zero polynomial has no order")
        return min(sum(m) for m in self._terms)

    def degree_in(self, var: int) -> int:
        if not self._terms:
            return -1
        return max(m[var] for m in self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check_arity(self, other: Poly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: Poly | Fraction | int) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        self._check_arity(other)
        result = dict(self._terms)
        for monomial, coeff in other._terms.items():
            total = result.get(monomial, 0) + coeff
            if total:
                result[monomial] = total
            else:
                result.pop(monomial, None)
        return Poly(self.nvars, result)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Poly | Fraction | int) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other: Fraction | int) -> Poly:
        return Poly.constant(self.nvars, other) - self

    def __mul__(self, other: Poly | Fraction | int) -> Poly:
        if not isinstance(other, Poly):
            value = Fraction(other)
            if not value:
                return Poly.zero(self.nvars)
            return Poly(self.nvars, {m: c * value for m, c in self._terms.items()})
        self._check_arity(other)
        result: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                total = result.get(key, 0) + c1 * c2
                if total:
                    result[key] = total
                else:
                    result.pop(key, None)
        return Poly(self.nvars, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.nvars, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.nvars, frozenset(self._terms.items())))
            )
        return self._hash

    # -- calculus and structure -------------------------------------------

    def diff(self, var: int) -> Poly:
        result: dict[Monomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            e = monomial[var]
            if e == 0:
                continue
            lowered = list(monomial)
            lowered[var] = e - 1
            result[tuple(lowered)] = coeff * e
        return Poly(self.nvars, result)

    def substitute(self, images: Mapping[int, Poly]) -> Poly:
        """Substitute ``images[i]`` for variable ``i`` (identity if missing)."""
        nvars_out = None
        for image in images.values():
            if nvars_out is None:
                nvars_out = image.nvars
            elif image.nvars != nvars_out:
                raise ValueError("substitution images disagree on arity")
        if nvars_out is None:
            nvars_out = self.nvars
        base: list[Poly] = []
        for i in range(self.nvars):
            if i in images:
                base.append(images[i])
            else:
                if nvars_out != self.nvars:
                    raise ValueError("partial substitution must preserve arity")
                base.append(Poly.variable(self.nvars, i))
        # Cache powers of each image up to the needed exponent.
        powers: list[list[Poly]] = []
        for i in range(self.nvars):
            top = self.degree_in(i)
            cache = [Poly.constant(nvars_out, 1)]
            for _ in range(max(top, 0)):
                cache.append(cache[-1] * base[i])
            powers.append(cache)
        total = Poly.zero(nvars_out)
        for monomial, coeff in self._terms.items():
            term = Poly.constant(nvars_out, coeff)
            for i, e in enumerate(monomial):
                if e:
                    term = term * powers[i][e]
            total = total + term
        return total

    def shift(self, offsets: Iterable[Fraction | int]) -> Poly:
        """Translate: substitute ``x_i + offset_i`` for each variable."""
        images = {}
        for i, value in enumerate(offsets):
            value = Fraction(value)
            if value:
                images[i] = Poly.variable(self.nvars, i) + value
        return self.substitute(images) if images else self

    def evaluate(self, point: Iterable[Fraction | int]) -> Fraction:
        values = [Fraction(v) for v in point]
        if len(values) != self.nvars:
            raise ValueError("point arity mismatch")
        total = Fraction(0)
        for monomial, coeff in self._terms.items():
            product = coeff
            for value, e in zip(values, monomial):
                product *= value**e
            total += product
        return total

    def homogeneous_part(self, degree: int) -> Poly:
        return Poly(
            self.nvars, {m: c for m, c in self._terms.items() if sum(m) == degree}
        )

    def lowest_form(self) -> Poly:
        """Homogeneous part of minimal total degree (the initial form)."""
        return self.homogeneous_part(self.order())

    def is_homogeneous(self) -> bool:
        if not self._terms:
            return True
        degrees = {sum(m) for m in self._terms}
        return len(degrees) == 1

    # -- normalization -----------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-primitive; 0 for zero."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for coeff in self._terms.values():
            num = _int_gcd(num, coeff.numerator)
            den = den * coeff.denominator // _int_gcd(den, coeff.denominator)
        return Fraction(num, den)

    def primitive(self) -> Poly:
        """Integer-primitive scalar multiple with positive printed lead."""
        if not self._terms:
            return self
        scaled = self * (1 / self.content())
        lead = min(scaled._terms, key=_print_key)
        if scaled._terms[lead] < 0:
            scaled = -scaled
        return scaled

    # -- printing ----------------------------------------------------------

    def to_string(self) -> str:
        if not self._terms:
            return "0"
        names = VAR_NAMES[: self.nvars]
        pieces: list[str] = []
        for monomial in sorted(self._terms, key=_print_key):
            coeff = self._terms[monomial]
            factors = []
            for name, e in zip(names, monomial):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.to_string()!r})"


# -- parsing ---------------------------------------------------------------
#
# expr   := ('+'|'-')? term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := base ('^' nat)?
# base   := var | rational | parameter | '(' expr ')'
#
# The leading sign extension admits inputs like "-y".  A parameter is any
# identifier other than a variable name; it must be bound to a rational in
# the ``parameters`` mapping and is substituted during parsing.


class _Parser:
    def __init__(self, text: str, nvars: int, parameters: Mapping[str, Fraction]):
        self.text = text
        self.nvars = nvars
        self.parameters = parameters
        self.pos = 0

    def error(self, message: str) -> PolyParseError:
        return PolyParseError(message, min(self.pos, len(self.text)))

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self) -> Poly:
        value = self.parse_expr()
        if self.peek():
            raise self.error(f"unexpected character {self.peek()!r}")
        return value

    def parse_expr(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        total = self.parse_term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            term = self.parse_term()
            total = total + term if op == "+" else total - term
        return total

    def parse_term(self) -> Poly:
        product = self.parse_factor()
        while self.peek() == "*":
            self.take()
            product = product * self.parse_factor()
        return product

    def parse_factor(self) -> Poly:
        base = self.parse_base()
        if self.peek() == "^":
            self.take()
            exponent = self.parse_nat()
            base = base**exponent
        return base

    def parse_base(self) -> Poly:
        ch = self.peek()
        if ch == "(":
            self.take()
            inner = self.parse_expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.take()
            return inner
        if ch.isdigit():
            return Poly.constant(self.nvars, self.parse_rational())
        if ch.isalpha() or ch == "_":
            name = self.parse_name()
            if name in VAR_NAMES:
                index = VAR_NAMES.index(name)
                if index >= self.nvars:
                    self.pos -= len(name)
                    raise self.error(
                        f"variable {name!r} not available with {self.nvars} variables"
                    )
                return Poly.variable(self.nvars, index)
            if name in self.parameters:
                return Poly.constant(self.nvars, self.parameters[name])
            self.pos -= len(name)
            raise self.error(f"unknown parameter {name!r}")
        if ch == "":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {ch!r}")

    def parse_nat(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an exponent")
        return int(self.text[start : self.pos])

    def parse_rational(self) -> Fraction:
        numerator = self.parse_nat()
        save = self.pos
        self.skip_space()
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            denominator = self.parse_nat()
            if denominator == 0:
                raise self.error("zero denominator")
            return Fraction(numerator, denominator)
        self.pos = save
        return Fraction(numerator)

    def parse_name(self) -> str:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]


def parse_poly(
    text: str, nvars: int, parameters: Mapping[str, Fraction] | None = None
) -> Poly:
    """Parse an expression into a polynomial; parameters become rationals."""
    return _Parser(text, nvars, parameters or {}).parse()


# -- divisibility and gcd --------------------------------------------------


def try_exact_div(numerator: Poly, denominator: Poly) -> Poly | None:
    """Return ``numerator / denominator`` when the division is exact.

    Long division with a single divisor under the printing order; a single
    divisor is a Groebner basis of the ideal it generates, so a vanishing
    remainder is equivalent to divisibility.
    """
    if denominator.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if numerator.is_zero:
        return Poly.zero(numerator.nvars)
    numerator._check_arity(denominator)
    lead = min(denominator._terms, key=_print_key)
    lead_coeff = denominator._terms[lead]
    quotient: dict[Monomial, Fraction] = {}
    rest = dict(numerator._terms)
    while rest:
        top = min(rest, key=_print_key)
        delta = tuple(a - b for a, b in zip(top, lead))
        if any(e < 0 for e in delta):
            return None
        factor = rest[top] / lead_coeff
        quotient[delta] = factor
        for monomial, coeff in denominator._terms.items():
            key = tuple(a + b for a, b in zip(delta, monomial))
            total = rest.get(key, 0) - factor * coeff
            if total:
                rest[key] = total
            else:
                rest.pop(key, None)
    return Poly(numerator.nvars, quotient)


def divides(denominator: Poly, numerator: Poly) -> bool:
    return try_exact_div(numerator, denominator) is not None


def _coeff_in_var(p: Poly, var: int, power: int) -> Poly:
    result = {}
    for monomial, coeff in p.items():
        if monomial[var] == power:
            flat = list(monomial)
            flat[var] = 0
            result[tuple(flat)] = coeff
    return Poly(p.nvars, result)


def _pseudo_rem(f: Poly, g: Poly, var: int) -> Poly:
    dg = g.degree_in(var)
    lead_g = _coeff_in_var(g, var, dg)
    r = f
    while not r.is_zero and r.degree_in(var) >= dg:
        dr = r.degree_in(var)
        lead_r = _coeff_in_var(r, var, dr)
        shift = Poly.monomial(
            tuple(dr - dg if i == var else 0 for i in range(f.nvars))
        )
        r = lead_g * r - lead_r * shift * g
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor, normalized to an integer-primitive poly.

    Primitive pseudo-remainder sequences in the last active variable, with
    contents handled by recursion on the remaining variables.  Desk-scale
    degrees only, which is all the callers ever produce.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    a._check_arity(b)
    var = None
    for i in reversed(range(a.nvars)):
        if a.degree_in(i) > 0 or b.degree_in(i) > 0:
            var = i
            break
    if var is None:
        return Poly.constant(a.nvars, 1)

    def content_in(p: Poly) -> Poly:
        coeffs = [
            _coeff_in_var(p, var, k)
            for k in range(p.degree_in(var) + 1)
        ]
        coeffs = [c for c in coeffs if not c.is_zero]
        result = coeffs[0]
        for c in coeffs[1:]:
            result = poly_gcd(result, c)
        return result

    ca, cb = content_in(a), content_in(b)
    f = try_exact_div(a, ca)
    g = try_exact_div(b, cb)
    assert f is not None and g is not None
    if f.degree_in(var) < g.degree_in(var):
        f, g = g, f
    while not g.is_zero:
        r = _pseudo_rem(f, g, var)
        f = g
        if r.is_zero:
            g = Poly.zero(a.nvars)
        else:
            cr = content_in(r)
            g = try_exact_div(r, cr)
            assert g is not None
    return (poly_gcd(ca, cb) * f).primitive()


def is_squarefree(p: Poly) -> bool:
    """No repeated factors: gcd with all partial derivatives is constant."""
    if p.is_zero:
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    g = p
    for var in range(p.nvars):
        d = p.diff(var)
        if not d.is_zero:
            g = poly_gcd(g, d)
    return g.total_degree() == 0


def dehomogenize(p: Poly, axis: int) -> Poly:
    """Set variable ``axis`` to 1, returning a polynomial in the others."""
    if p.nvars != 3:
        raise ValueError("dehomogenize expects a 3-variable polynomial")
    keep = [i for i in range(3) if i != axis]
    result: dict[Monomial, Fraction] = {}
    for monomial, coeff in p.items():
        key = (monomial[keep[0]], monomial[keep[1]])
        total = result.get(key, 0) + coeff
        if total:
            result[key] = total
        else:
            result.pop(key, None)
    return Poly(2, result)
