"""Exact scalars: univariate polynomials in ``h`` with rational coefficients.

Every tensor component produced by the engine is a :class:`Scalar`.  Plain
rationals are :class:`fractions.Fraction` and embed as constant polynomials.
Real roots of polynomials of degree at most two are represented exactly by
:class:`ExactRoot` (a rational, or ``offset + sign*sqrt(radicand)``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Scalar",
    "H",
    "ZERO",
    "ONE",
    "ExactRoot",
    "Domain",
    "REAL_LINE",
    "Sign",
    "ScalarError",
    "UnsupportedDegree",
    "IdenticallyZero",
    "NotDivisible",
    "as_scalar",
    "parse_rational",
    "format_rational",
    "exact_roots",
    "roots_in",
    "common_roots",
    "vanishes_at",
    "sign_on",
    "rational_between",
]

Number = Union[int, Fraction]


class ScalarError(ValueError):
    """Base class for exact-arithmetic failures."""


class UnsupportedDegree(ScalarError):
    pass


class IdenticallyZero(ScalarError):
    """Raised by root extraction when the polynomial is zero for every h."""


class NotDivisible(ScalarError):
    pass


def parse_rational(text: str | int | Fraction) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ScalarError(f"not a rational number: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Scalar:
    """Immutable polynomial in ``h`` over Q, stored in ascending degree.

    Trailing zero coefficients are stripped on construction, so equal
    polynomials have identical coefficient tuples.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number | str] = ()):
        c = [parse_rational(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, value: Number | str) -> Scalar:
        return cls((value,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ScalarError(f"{self} depends on h")
        return self._c[0] if self._c else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    # ring operations ---------------------------------------------------------

    def __add__(self, other: Scalar | Number) -> Scalar:
        o = as_scalar(other)
        n = max(len(self._c), len(o._c))
        return Scalar(self.coefficient(i) + o.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-x for x in self._c)

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other: Scalar | Number) -> Scalar:
        return self + (-as_scalar(other))

    def __rsub__(self, other: Number) -> Scalar:
        return as_scalar(other) - self

    def __mul__(self, other: Scalar | Number) -> Scalar:
        o = as_scalar(other)
        if not self._c or not o._c:
            return ZERO
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            raise ScalarError("negative powers are not polynomials")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other: Scalar | Number) -> Scalar:
        q, r = divmod(self, as_scalar(other))
        if not r.is_zero():
            raise NotDivisible(f"{self} is not divisible by {other}")
        return q

    def __divmod__(self, other: Scalar) -> tuple[Scalar, Scalar]:
        d = as_scalar(other)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._c)
        quot = [Fraction(0)] * max(len(rem) - len(d._c) + 1, 0)
        lead = d._c[-1]
        for k in range(len(quot) - 1, -1, -1):
            f = rem[k + len(d._c) - 1] / lead
            quot[k] = f
            if f:
                for j, b in enumerate(d._c):
                    rem[k + j] -= f * b
        return Scalar(quot), Scalar(rem[: len(d._c) - 1])

    # comparisons ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Scalar.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    # evaluation ---------------------------------------------------------------

    def __call__(self, h0: Number | str) -> Fraction:
        return self.evaluate(h0)

    def evaluate(self, h0: Number | str) -> Fraction:
        """Horner evaluation at a rational point."""
        x = parse_rational(h0)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def evaluate_naive(self, h0: Number | str) -> Fraction:
        x = parse_rational(h0)
        return sum((a * x**i for i, a in enumerate(self._c)), Fraction(0))

    def specialize(self, h0: Number | str) -> Scalar:
        return Scalar.const(self.evaluate(h0))

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self._c:
            return Fraction(0)
        den = math.lcm(*(a.denominator for a in self._c))
        num = math.gcd(*(a.numerator for a in self._c))
        return Fraction(num, den)

    # serialization ------------------------------------------------------------

    def to_json(self) -> list[str]:
        return [format_rational(a) for a in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str | int] | str | int) -> Scalar:
        if isinstance(data, (str, int)):
            return cls.const(data)
        if not isinstance(data, (list, tuple)):
            raise ScalarError(f"bad scalar serialization: {data!r}")
        return cls(data)

    def __repr__(self) -> str:
        return f"Scalar({self.to_json()!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = "h" if i == 1 else f"h^{i}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{mono}"
                else:
                    body = f"({format_rational(mag)}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def factored(self) -> str | None:
        """``c(p)`` with c the content and p ascending; None for monomials or c = 1."""
        if sum(1 for a in self._c if a) < 2:
            return None
        c = self.content()
        if c == 1:
            return None
        prim = Scalar(a / c for a in self._c)
        terms = []
        for i, a in enumerate(prim._c):
            if not a:
                continue
            mono = "" if i == 0 else ("h" if i == 1 else f"h^{i}")
            mag = abs(a)
            body = format_rational(mag) if (i == 0 or mag != 1) else ""
            terms.append(("-" if a < 0 else "+", body + mono))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        s += "".join(sg + t for sg, t in terms[1:])
        return f"{format_rational(c)}({s})"


def as_scalar(x: Scalar | Number | str) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar.const(x)


ZERO = Scalar()
ONE = Scalar.const(1)
H = Scalar((0, 1))


@dataclass(frozen=True)
class ExactRoot:
    """A real number ``offset + sign*sqrt(radicand)``.

    ``kind == "rational"`` roots keep their value in ``offset`` with
    ``radicand == 0``.  Surd roots always carry a radicand that is not the
    square of a rational, so two equal numbers have equal representations.
    """

    kind: str
    offset: Fraction = Fraction(0)
    radicand: Fraction = Fraction(0)
    sign: int = 1

    @classmethod
    def rational(cls, value: Number) -> ExactRoot:
        return cls("rational", Fraction(value))

    @classmethod
    def surd(cls, radicand: Number, sign: int = 1, offset: Number = 0) -> ExactRoot:
        p = Fraction(radicand)
        if p < 0:
            raise ScalarError("negative radicand")
        r = _rational_sqrt(p)
        if r is not None:
            return cls.rational(Fraction(offset) + sign * r)
        return cls("surd", Fraction(offset), p, 1 if sign > 0 else -1)

    @property
    def value(self) -> Fraction:
        if self.kind != "rational":
            raise ScalarError(f"{self} is irrational")
        return self.offset

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    def __float__(self) -> float:
        return float(self.offset) + self.sign * math.sqrt(self.radicand)

    def compare(self, q: Number) -> int:
        """Exact sign of ``self - q``."""
        a = self.offset - Fraction(q)
        if self.kind == "rational":
            return (a > 0) - (a < 0)
        s = self.sign
        if (a >= 0 and s > 0) or (a <= 0 and s < 0):
            return s
        d = self.radicand - a * a
        d_sign = (d > 0) - (d < 0)
        return d_sign * s

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational", "value": format_rational(self.offset)}
        out = {"kind": "surd", "radicand": format_rational(self.radicand), "sign": self.sign}
        if self.offset:
            out["offset"] = format_rational(self.offset)
        return out

    @classmethod
    def from_json(cls, data: dict) -> ExactRoot:
        if data.get("kind") == "rational":
            return cls.rational(parse_rational(data["value"]))
        if data.get("kind") == "surd":
            return cls.surd(
                parse_rational(data["radicand"]),
                int(data["sign"]),
                parse_rational(data.get("offset", "0")),
            )
        raise ScalarError(f"bad root serialization: {data!r}")

    def __str__(self) -> str:
        if self.kind == "rational":
            return format_rational(self.offset)
        # sqrt(a/b) = sqrt(a*b)/b, which is how such values are usually printed
        num = self.radicand.numerator * self.radicand.denominator
        den = self.radicand.denominator
        k = _square_part(num)
        rest = num // (k * k)
        coef = Fraction(k, den)
        body = f"√{rest}" if coef == 1 else (
            f"{coef.numerator}√{rest}" if coef.denominator == 1
            else (f"√{rest}/{coef.denominator}" if coef.numerator == 1
                  else f"{coef.numerator}√{rest}/{coef.denominator}"))
        sign = "-" if self.sign < 0 else ""
        if self.offset:
            return f"{format_rational(self.offset)}{'-' if self.sign < 0 else '+'}{body}"
        return sign + body


def _square_part(n: int) -> int:
    """Largest k with k*k dividing n (n > 0)."""
    k, out, d = n, 1, 2
    while d * d <= k:
        while k % (d * d) == 0:
            k //= d * d
            out *= d
        if k % d == 0:
            k //= d
        d += 1
    return out


def _rational_sqrt(p: Fraction) -> Fraction | None:
    n, d = p.numerator, p.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_roots(s: Scalar) -> list[ExactRoot]:
    """All distinct real roots of a polynomial of degree at most two, ascending."""
    if s.is_zero():
        raise IdenticallyZero("the zero polynomial vanishes for every h")
    if s.degree > 2:
        raise UnsupportedDegree(f"degree {s.degree} > 2: {s}")
    if s.degree == 0:
        return []
    if s.degree == 1:
        b, a = s.coefficients
        return [ExactRoot.rational(-b / a)]
    c, b, a = s.coefficients
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    centre = -b / (2 * a)
    if disc == 0:
        return [ExactRoot.rational(centre)]
    radicand = disc / (4 * a * a)
    return [ExactRoot.surd(radicand, -1, centre), ExactRoot.surd(radicand, 1, centre)]


def vanishes_at(s: Scalar, root: ExactRoot) -> bool:
    """Exact test of ``s(root) == 0``, computed in Q(sqrt(radicand))."""
    if root.is_rational:
        return s.evaluate(root.offset) == 0
    # x = o + t*sqrt(p); track a + b*sqrt(p)
    o, t, p = root.offset, Fraction(root.sign), root.radicand
    a, b = Fraction(0), Fraction(0)
    for c in reversed(s.coefficients):
        a, b = a * o + b * t * p + c, a * t + b * o
    return a == 0 and b == 0


@dataclass(frozen=True)
class Domain:
    """Closed interval of admissible h values; ``None`` means unbounded."""

    lower: Fraction | None = None
    upper: Fraction | None = None

    def contains(self, root: ExactRoot | Number) -> bool:
        r = root if isinstance(root, ExactRoot) else ExactRoot.rational(root)
        if self.lower is not None and r.compare(self.lower) < 0:
            return False
        if self.upper is not None and r.compare(self.upper) > 0:
            return False
        return True

    def __str__(self) -> str:
        if self.lower is None and self.upper is None:
            return "h ∈ ℝ"
        if self.lower is None:
            return f"h ≤ {format_rational(self.upper)}"
        if self.upper is None:
            return f"h ≥ {format_rational(self.lower)}"
        return f"{format_rational(self.lower)} ≤ h ≤ {format_rational(self.upper)}"

    def to_json(self) -> dict:
        return {
            "lower": None if self.lower is None else format_rational(self.lower),
            "upper": None if self.upper is None else format_rational(self.upper),
        }


REAL_LINE = Domain()


def roots_in(s: Scalar, domain: Domain = REAL_LINE) -> list[ExactRoot]:
    return [r for r in exact_roots(s) if domain.contains(r)]


def common_roots(polys: Iterable[Scalar], domain: Domain = REAL_LINE) -> list[ExactRoot] | None:
    """Roots in ``domain`` shared by every polynomial.

    Returns ``None`` when all polynomials are identically zero.  Root
    extraction runs on the lowest-degree nonzero member; the remaining
    members are checked exactly at each candidate.
    """
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return None
    pivot = min(nonzero, key=lambda p: p.degree)
    return [r for r in roots_in(pivot, domain) if all(vanishes_at(p, r) for p in nonzero)]


def rational_between(lo: ExactRoot | None, hi: ExactRoot | None) -> Fraction:
    """A rational strictly between two distinct reals (``None`` = infinite)."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(math.floor(float(hi)) - 1)
    if hi is None:
        return Fraction(math.ceil(float(lo)) + 1)
    a, b = float(lo), float(hi)
    cand = Fraction((a + b) / 2)
    if lo.compare(cand) < 0 and hi.compare(cand) > 0:
        return cand
    # both endpoints rational in every case the float guess can miss by rounding
    if lo.is_rational and hi.is_rational:
        return (lo.offset + hi.offset) / 2
    raise ScalarError(f"cannot separate {lo} and {hi}")


class Sign(enum.Enum):
    ZERO = "zero"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONNEGATIVE = "non-negative"
    NONPOSITIVE = "non-positive"
    INDEFINITE = "indefinite"


def sign_on(s: Scalar, domain: Domain = REAL_LINE) -> Sign:
    """Exact sign classification of ``s`` over ``domain``.

    ``a*h^2 + b`` with ``a*b >= 0`` is decided from the coefficients alone.
    Otherwise ``s`` is evaluated at its roots and at one rational point in
    every open interval they cut from the domain.
    """
    if s.is_zero():
        return Sign.ZERO
    if s.degree in (0, 2) and s.coefficient(1) == 0:
        a, b = s.coefficient(2), s.coefficient(0)
        if a >= 0 and b >= 0:
            return Sign.POSITIVE if b > 0 else _restrict_nonneg(s, domain, Sign.NONNEGATIVE)
        if a <= 0 and b <= 0:
            return Sign.NEGATIVE if b < 0 else _restrict_nonneg(s, domain, Sign.NONPOSITIVE)
    signs = _sampled_signs(s, domain)
    return _sign_from_set(signs)


def _restrict_nonneg(s: Scalar, domain: Domain, weak: Sign) -> Sign:
    # a*h^2 with a != 0 vanishes only at h = 0
    if domain.contains(0):
        return weak
    return Sign.POSITIVE if weak is Sign.NONNEGATIVE else Sign.NEGATIVE


def _sampled_signs(s: Scalar, domain: Domain) -> set[int]:
    roots = roots_in(s, domain)
    ends = [q for q in (domain.lower, domain.upper) if q is not None]
    interior = [r for r in roots if all(r.compare(q) != 0 for q in ends)]
    lo = None if domain.lower is None else ExactRoot.rational(domain.lower)
    hi = None if domain.upper is None else ExactRoot.rational(domain.upper)
    marks = [lo, *interior, hi]
    signs = {0} if roots else set()
    for q in ends:
        v = s.evaluate(q)
        signs.add((v > 0) - (v < 0))
    for a, b in zip(marks, marks[1:]):
        if a is not None and b is not None and a == b:
            continue
        v = s.evaluate(rational_between(a, b))
        signs.add((v > 0) - (v < 0))
    return signs


def _sign_from_set(signs: set[int]) -> Sign:
    if signs == {0}:
        return Sign.ZERO
    if 1 in signs and -1 in signs:
        return Sign.INDEFINITE
    if 1 in signs:
        return Sign.NONNEGATIVE if 0 in signs else Sign.POSITIVE
    return Sign.NONPOSITIVE if 0 in signs else Sign.NEGATIVE
