"""Exact sparse multivariate polynomials and rational functions over Q.

Coefficients are `fractions.Fraction`; a polynomial is a mapping from
exponent tuples to nonzero coefficients, tied to a `Chart` (an ordered
tuple of variable names).  All normal forms used elsewhere in the
package are fixed here:

* terms are ordered by graded lexicographic order (total degree first,
  then lexicographic in chart order),
* GCDs, contents and squarefree parts are normalized to integer
  coefficients with trivial integer content and a positive leading
  coefficient,
* rational functions are reduced pairs whose denominator carries that
  same normalization.

The GCD is a primitive polynomial remainder sequence in a chosen main
variable, recursing on the coefficient ring.  That is entirely adequate
at the degrees this package works with, and it keeps every operation
exact; there is deliberately no factorization and no Groebner machinery
here.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Coeff = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


class ChartMismatchError(ValueError):
    """Raised when operands live on different charts."""


class ExactDivisionError(ValueError):
    """Raised when an exact polynomial division leaves a remainder."""


@dataclass(frozen=True)
class Chart:
    """An ordered tuple of affine coordinate names, e.g. ``Chart(("x", "y"))``."""

    variables: Tuple[str, ...]

    def __post_init__(self) -> None:
        if isinstance(self.variables, list):
            object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a chart needs at least one variable")
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name: {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names in chart")

    @property
    def size(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a coordinate of {self}") from None

    def var(self, name: str) -> "Poly":
        """The coordinate ``name`` as a polynomial."""
        return Poly.variable(self, name)

    def vars(self) -> Tuple["Poly", ...]:
        return tuple(Poly.variable(self, v) for v in self.variables)

    def zero_exponents(self) -> Exponents:
        return (0,) * len(self.variables)

    def __str__(self) -> str:
        return "(" + ", ".join(self.variables) + ")"


def _as_fraction(value: Coeff) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be int or Fraction, got {type(value).__name__}")


def glex_key(exponents: Exponents) -> Tuple[int, Exponents]:
    """Sort key for graded lexicographic order (larger key = larger monomial)."""
    return (sum(exponents), exponents)


class Poly:
    """A polynomial over Q on a fixed chart, stored sparsely.

    Instances are immutable by convention: the term dict is never
    mutated after construction, so polynomials can be shared, compared
    and hashed freely.
    """

    __slots__ = ("chart", "terms")

    def __init__(self, chart: Chart, terms: Mapping[Exponents, Coeff]):
        clean: Dict[Exponents, Fraction] = {}
        width = chart.size
        for exps, coeff in terms.items():
            if len(exps) != width:
                raise ValueError(f"exponent tuple {exps} does not fit chart {chart}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _as_fraction(coeff)
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("Poly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart) -> "Poly":
        return cls(chart, {})

    @classmethod
    def one(cls, chart: Chart) -> "Poly":
        return cls.constant(chart, 1)

    @classmethod
    def constant(cls, chart: Chart, value: Coeff) -> "Poly":
        return cls(chart, {chart.zero_exponents(): _as_fraction(value)})

    @classmethod
    def variable(cls, chart: Chart, name: str) -> "Poly":
        exps = [0] * chart.size
        exps[chart.index(name)] = 1
        return cls(chart, {tuple(exps): Fraction(1)})

    # -- basic structure -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def is_one(self) -> bool:
        return self.terms == {self.chart.zero_exponents(): Fraction(1)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.chart.zero_exponents(), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: Union[str, int]) -> int:
        k = var if isinstance(var, int) else self.chart.index(var)
        if not self.terms:
            return -1
        return max(e[k] for e in self.terms)

    def leading_term(self) -> Tuple[Exponents, Fraction]:
        """Largest term in graded lexicographic order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exps = max(self.terms, key=glex_key)
        return exps, self.terms[exps]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> Iterator[Tuple[Exponents, Fraction]]:
        for exps in sorted(self.terms, key=glex_key, reverse=True):
            yield exps, self.terms[exps]

    def _require_chart(self, other: "Poly") -> None:
        if self.chart != other.chart:
            raise ChartMismatchError(f"charts differ: {self.chart} vs {other.chart}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Union["Poly", Coeff]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.chart, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._require_chart(other)
        acc = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = acc.get(exps, Fraction(0)) + coeff
            if s:
                acc[exps] = s
            else:
                acc.pop(exps, None)
        return Poly(self.chart, acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.chart, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["Poly", Coeff]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.chart, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Union["Poly", Coeff]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Poly.zero(self.chart)
            return Poly(self.chart, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._require_chart(other)
        acc: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, Fraction(0)) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return Poly(self.chart, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.one(self.chart)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.chart, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.chart == other.chart and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.chart, frozenset(self.terms.items())))

    # -- calculus and evaluation ------------------------------------------

    def partial(self, var: Union[str, int]) -> "Poly":
        """Formal partial derivative with respect to one chart variable."""
        k = var if isinstance(var, int) else self.chart.index(var)
        acc: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            if exps[k] == 0:
                continue
            e = list(exps)
            e[k] -= 1
            acc[tuple(e)] = coeff * exps[k]
        return Poly(self.chart, acc)

    def homogeneous_part(self, degree: int) -> "Poly":
        return Poly(self.chart, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def evaluate(self, point: Sequence[Coeff]) -> Fraction:
        if len(point) != self.chart.size:
            raise ValueError("point has wrong dimension")
        vals = [_as_fraction(p) for p in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute a polynomial for each chart variable.

        All images must share one chart; the result lives on it.
        """
        if len(images) != self.chart.size:
            raise ValueError("need one image per chart variable")
        target = images[0].chart
        for img in images:
            if img.chart != target:
                raise ChartMismatchError("substitution images live on different charts")
        powers: list[Dict[int, Poly]] = [dict() for _ in images]
        result = Poly.zero(target)
        for exps, coeff in self.terms.items():
            term = Poly.constant(target, coeff)
            for k, e in enumerate(exps):
                if not e:
                    continue
                cache = powers[k]
                if e not in cache:
                    cache[e] = images[k] ** e
                term = term * cache[e]
            result = result + term
        return result

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.chart}, {format_poly(self)!r})"


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_poly(p: Poly) -> str:
    """Canonical text form: graded-lex descending, explicit ``*`` and ``^``.

    The output re-parses to the same polynomial, which the CLI relies on.
    """
    if p.is_zero():
        return "0"
    pieces = []
    for exps, coeff in p.sorted_terms():
        factors = []
        for name, e in zip(p.chart.variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        mag = abs(coeff)
        if not mono:
            body = _format_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_fraction(mag)}*{mono}"
        pieces.append((coeff < 0, body))
    negative, body = pieces[0]
    out = ("-" if negative else "") + body
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


# ---------------------------------------------------------------------------
# GCD machinery
# ---------------------------------------------------------------------------


def rational_content(p: Poly) -> Fraction:
    """The positive rational c with p/c integer-primitive; 0 for the zero poly."""
    if p.is_zero():
        return Fraction(0)
    num = 0
    den = 1
    for coeff in p.terms.values():
        num = math.gcd(num, abs(coeff.numerator))
        den = den * coeff.denominator // math.gcd(den, coeff.denominator)
    return Fraction(num, den)


def normalize(p: Poly) -> Poly:
    """Scale to integer coefficients, content 1, positive leading coefficient."""
    if p.is_zero():
        return p
    unit = rational_content(p)
    if p.leading_coefficient() < 0:
        unit = -unit
    return p * (1 / unit)


def _coeff_in(p: Poly, k: int, d: int) -> Poly:
    """Coefficient of x_k^d, as a polynomial with the x_k exponent cleared."""
    acc: Dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms.items():
        if exps[k] == d:
            e = list(exps)
            e[k] = 0
            acc[tuple(e)] = coeff
    return Poly(p.chart, acc)


def _shift(p: Poly, k: int, d: int) -> Poly:
    """Multiply by x_k^d."""
    if d == 0 or p.is_zero():
        return p
    acc: Dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms.items():
        e = list(exps)
        e[k] += d
        acc[tuple(e)] = coeff
    return Poly(p.chart, acc)


def _pseudo_rem(f: Poly, g: Poly, k: int) -> Poly:
    """Pseudo-remainder of f by g in the variable x_k (deg_k g >= 1)."""
    dg = g.degree_in(k)
    lcg = _coeff_in(g, k, dg)
    r = f
    while not r.is_zero() and r.degree_in(k) >= dg:
        dr = r.degree_in(k)
        lcr = _coeff_in(r, k, dr)
        r = lcg * r - _shift(lcr * g, k, dr - dg)
    return r


def _content_in(p: Poly, k: int) -> Poly:
    coeffs = [_coeff_in(p, k, d) for d in range(p.degree_in(k) + 1)]
    c = Poly.zero(p.chart)
    for q in coeffs:
        if q.is_zero():
            continue
        c = _gcd_impl(c, q)
        if c.is_constant():
            break
    return c if not c.is_constant() else Poly.one(p.chart)


def _gcd_impl(p: Poly, q: Poly) -> Poly:
    """A gcd of p and q, up to a rational unit."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    main = -1
    for k in range(p.chart.size):
        if p.degree_in(k) > 0 or q.degree_in(k) > 0:
            main = k
            break
    if main < 0:
        return Poly.one(p.chart)  # both constants
    cp = _content_in(p, main)
    cq = _content_in(q, main)
    c = _gcd_impl(cp, cq)
    # keep every element of the remainder sequence integer-primitive:
    # without the rational normalization the coefficient bit-length
    # doubles per step
    a = normalize(divexact(p, cp))
    b = normalize(divexact(q, cq))
    if a.degree_in(main) < b.degree_in(main):
        a, b = b, a
    # primitive remainder sequence in x_main
    while True:
        if b.is_zero():
            g = a
            break
        if b.degree_in(main) == 0:
            g = Poly.one(p.chart)
            break
        r = _pseudo_rem(a, b, main)
        a = b
        b = r if r.is_zero() else normalize(divexact(r, _content_in(r, main)))
    return c * g


def gcd(p: Poly, q: Poly) -> Poly:
    """Normalized greatest common divisor in Q[chart].

    gcd(0, 0) = 0; otherwise the result is integer-primitive with a
    positive leading coefficient.
    """
    if p.chart != q.chart:
        raise ChartMismatchError("gcd operands on different charts")
    if p.is_zero() and q.is_zero():
        return p
    return normalize(_gcd_impl(p, q))


def content(polys: Sequence[Poly]) -> Poly:
    """Normalized GCD of a non-empty family of polynomials."""
    it = iter(polys)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("content of an empty family") from None
    for p in it:
        acc = gcd(acc, p)
        if acc.is_one():
            break
    return normalize(acc) if not acc.is_zero() else acc


def divexact(f: Poly, g: Poly) -> Poly:
    """Exact quotient f/g; raises ExactDivisionError if g does not divide f."""
    if f.chart != g.chart:
        raise ChartMismatchError("division operands on different charts")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_constant():
        return f * (1 / g.constant_value())
    quotient: Dict[Exponents, Fraction] = {}
    ge, gc = g.leading_term()
    r = f
    while not r.is_zero():
        re_, rc = r.leading_term()
        qe = tuple(a - b for a, b in zip(re_, ge))
        if any(e < 0 for e in qe):
            raise ExactDivisionError(f"({g}) does not divide ({f})")
        qc = rc / gc
        quotient[qe] = qc
        r = r - _shift_mono(g, qe) * qc
    return Poly(f.chart, quotient)


def _shift_mono(p: Poly, exps: Exponents) -> Poly:
    if all(e == 0 for e in exps):
        return p
    return Poly(p.chart, {tuple(a + b for a, b in zip(e, exps)): c for e, c in p.terms.items()})


def divides(g: Poly, f: Poly) -> bool:
    """True iff g divides f exactly (g nonzero)."""
    try:
        divexact(f, g)
        return True
    except ExactDivisionError:
        return False


def lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly.zero(p.chart)
    return normalize(divexact(p * q, gcd(p, q)))


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct irreducible factors of p, normalized.

    Computed as p / gcd(p, dp/dx_1, ..., dp/dx_n); characteristic zero
    makes that quotient exactly the radical of a non-constant p.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no squarefree part")
    if p.is_constant():
        return Poly.one(p.chart)
    g = p
    for k in range(p.chart.size):
        g = _gcd_impl(g, p.partial(k))
        if g.is_constant():
            break
    return normalize(divexact(p, normalize(g)))


def poly_det(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    chart = rows[0][0].chart
    m = [list(row) for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = Poly.one(chart)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot_row is None:
                return Poly.zero(chart)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = Poly.zero(chart)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def resultant(p: Poly, q: Poly, var: Union[str, int]) -> Poly:
    """Resultant of p and q with respect to one variable (Sylvester determinant)."""
    if p.chart != q.chart:
        raise ChartMismatchError("resultant operands on different charts")
    k = var if isinstance(var, int) else p.chart.index(var)
    dp = p.degree_in(k)
    dq = q.degree_in(k)
    if p.is_zero() or q.is_zero():
        return Poly.zero(p.chart)
    if dp <= 0 and dq <= 0:
        return Poly.one(p.chart)
    if dp <= 0:
        return p**dq
    if dq <= 0:
        return q**dp
    pc = [_coeff_in(p, k, d) for d in range(dp, -1, -1)]
    qc = [_coeff_in(q, k, d) for d in range(dq, -1, -1)]
    size = dp + dq
    zero = Poly.zero(p.chart)
    rows = []
    for i in range(dq):
        rows.append([zero] * i + pc + [zero] * (size - dp - 1 - i))
    for i in range(dp):
        rows.append([zero] * i + qc + [zero] * (size - dq - 1 - i))
    return poly_det(rows)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """A reduced fraction of polynomials on a shared chart.

    Invariants: gcd(num, den) is constant, the denominator is
    integer-primitive with positive leading coefficient (so a
    polynomial is stored with denominator exactly 1), and the zero
    function is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Union[Poly, None] = None):
        if den is None:
            den = Poly.one(num.chart)
        if num.chart != den.chart:
            raise ChartMismatchError("numerator and denominator on different charts")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(num.chart)
        elif den.is_one():
            pass
        else:
            if not den.is_constant():
                g = gcd(num, den)
                if not g.is_constant():
                    num = divexact(num, g)
                    den = divexact(den, g)
            if den.is_constant():
                num = num * (1 / den.constant_value())
                den = Poly.one(num.chart)
            else:
                unit = rational_content(den)
                if den.leading_coefficient() < 0:
                    unit = -unit
                if unit != 1:
                    num = num * (1 / unit)
                    den = den * (1 / unit)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("RatFunc is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RatFunc":
        """Wrap an already-coprime pair, doing only unit normalization.

        Arithmetic below keeps pairs coprime by Henrici-style
        cross-cancellation, so the constructor's full gcd is redundant
        on those paths.
        """
        obj = object.__new__(cls)
        if num.is_zero():
            den = Poly.one(num.chart)
        elif den.is_constant():
            if not den.is_one():
                num = num * (1 / den.constant_value())
                den = Poly.one(num.chart)
        else:
            unit = rational_content(den)
            if den.leading_coefficient() < 0:
                unit = -unit
            if unit != 1:
                num = num * (1 / unit)
                den = den * (1 / unit)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p)

    @classmethod
    def constant(cls, chart: Chart, value: Coeff) -> "RatFunc":
        return cls(Poly.constant(chart, value))

    @classmethod
    def zero(cls, chart: Chart) -> "RatFunc":
        return cls(Poly.zero(chart))

    # -- structure --------------------------------------------------------

    @property
    def chart(self) -> Chart:
        return self.num.chart

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> Poly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not polynomial")
        return self.num

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def _coerce(self, other: Union["RatFunc", Poly, Coeff]) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.constant(self.chart, other))
        raise TypeError(f"cannot combine RatFunc with {type(other).__name__}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Union["RatFunc", Poly, Coeff]) -> "RatFunc":
        o = self._coerce(other)
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num + o.num)
        g = gcd(self.den, o.den)
        if g.is_constant():
            # coprime denominators: the cross sum is already reduced
            return RatFunc._reduced(
                self.num * o.den + o.num * self.den, self.den * o.den
            )
        left = divexact(self.den, g)
        right = divexact(o.den, g)
        num = self.num * right + o.num * left
        den = g * left * right
        h = gcd(num, g)  # any surviving common factor divides g
        if not h.is_constant():
            num = divexact(num, h)
            den = divexact(den, h)
        return RatFunc._reduced(num, den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._reduced(-self.num, self.den)

    def __sub__(self, other: Union["RatFunc", Poly, Coeff]) -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union[Poly, Coeff]) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other: Union["RatFunc", Poly, Coeff]) -> "RatFunc":
        o = self._coerce(other)
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num)
        num1, den2 = self.num, o.den
        g1 = gcd(num1, den2)
        if not g1.is_constant():
            num1 = divexact(num1, g1)
            den2 = divexact(den2, g1)
        num2, den1 = o.num, self.den
        g2 = gcd(num2, den1)
        if not g2.is_constant():
            num2 = divexact(num2, g2)
            den1 = divexact(den1, g2)
        return RatFunc._reduced(num1 * num2, den1 * den2)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["RatFunc", Poly, Coeff]) -> "RatFunc":
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return self * RatFunc(o.den, o.num)

    def __rtruediv__(self, other: Union[Poly, Coeff]) -> "RatFunc":
        return self._coerce(other) / self

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            try:
                other = self._coerce(other)
            except TypeError:  # pragma: no cover
                return NotImplemented
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- calculus -----------------------------------------------------------

    def partial(self, var: Union[str, int]) -> "RatFunc":
        """Partial derivative (quotient rule)."""
        if self.den.is_one():
            return RatFunc(self.num.partial(var))
        dn = self.num.partial(var)
        dd = self.den.partial(var)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def evaluate(self, point: Sequence[Coeff]) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at {tuple(point)}")
        return self.num.evaluate(point) / d

    def substitute(self, images: Sequence[Poly]) -> "RatFunc":
        """Compose with a polynomial map (one image per chart variable)."""
        num = self.num.substitute(images)
        den = self.den.substitute(images)
        if den.is_zero():
            raise ZeroDivisionError("substitution lands in the polar locus")
        return RatFunc(num, den)

    def __str__(self) -> str:
        if self.den.is_one():
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self!s})"


def clear_denominators(fs: Iterable[RatFunc]) -> Tuple[Poly, ...]:
    """Scale a family of rational functions to polynomials by their common
    denominator, returning the numerators of f * lcm(dens)."""
    fs = tuple(fs)
    if not fs:
        raise ValueError("empty family")
    chart = fs[0].chart
    common = Poly.one(chart)
    for f in fs:
        common = lcm(common, f.den)
    out = []
    for f in fs:
        out.append(f.num * divexact(common, f.den))
    return tuple(out)
