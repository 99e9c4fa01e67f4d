"""Rational-function germs at +infinity: a computable non-archimedean ordered field.

A germ is a quotient p(n)/q(n) of integer-coefficient polynomials, ordered by
eventual dominance as n grows without bound.  The field contains a copy of the
rationals (constant germs), genuine infinitesimals such as 1/n, and infinite
elements such as n**2, so it serves as an exactly decidable model of the
hyperreal quantities that expansiveness arguments quantify over: every order
comparison, standard part and infinitesimal-closeness test below is computed
with integer arithmetic and is exact.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union


class DivisionByZeroGerm(ZeroDivisionError):
    """Raised when dividing by the zero germ."""


class InfiniteGerm(ValueError):
    """Raised when asking for the standard part of an infinite germ."""


class PerturbationNotInfinitesimal(ValueError):
    """Raised when a perturbed point is not infinitely close to its base point."""


# ---------------------------------------------------------------------------
# Integer polynomials, represented as coefficient tuples, lowest degree first.
# The zero polynomial is the empty tuple.

Poly = tuple

def _trim(coeffs: Iterable[int]) -> Poly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _deg(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def _lead(p: Poly) -> int:
    return p[-1] if p else 0


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _psub(a: Poly, b: Poly) -> Poly:
    return _padd(a, _pneg(b))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _content(p: Poly) -> int:
    return math.gcd(*p) if p else 0


def _primitive(p: Poly) -> Poly:
    """Divide out the integer content and make the leading coefficient positive."""
    if not p:
        return ()
    c = _content(p)
    q = tuple(x // c for x in p)
    return q if q[-1] > 0 else _pneg(q)


def _pdivmod_frac(a: Poly, b: Poly):
    """Polynomial division over Q; returns (quotient, remainder) with Fraction coefficients."""
    rem = [Fraction(c) for c in a]
    quo = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    db, lb = _deg(b), b[-1]
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        k = len(rem) - 1 - db
        f = rem[-1] / lb
        quo[k] = f
        for i in range(len(b)):
            rem[k + i] -= f * b[i]
        rem.pop()
    return quo, rem


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)  # a nonzero constant is coprime to everything, primitively
    x, y = a, b
    while y:
        _, rem = _pdivmod_frac(x, y)
        # clear denominators so the loop stays in integer polynomials
        rem_t = _trim(rem)
        if not rem_t:
            x, y = y, ()
            break
        den = math.lcm(*(f.denominator for f in rem_t))
        x, y = y, _primitive(tuple(int(f * den) for f in rem_t))
    return _primitive(x)


def _pdiv_exact(a: Poly, b: Poly) -> Poly:
    quo, rem = _pdivmod_frac(a, b)
    assert not any(rem), "inexact polynomial division"
    return _trim(int(f) for f in quo)


def _peval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pstr(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            term = f"{mag}n" if i == 1 else f"{mag}n^{i}"
        parts.append(("-" if c < 0 else "+", term))
    sign0, term0 = parts[0]
    s = ("-" if sign0 == "-" else "") + term0
    for sign, term in parts[1:]:
        s += f" {sign} {term}"
    return s


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Germ:
    """A rational function of n, identified with its germ at +infinity.

    The representation is normalized: numerator and denominator are coprime
    integer polynomials and the denominator has positive leading coefficient.
    Two germs are equal exactly when their normalized representations match.
    The order is the eventual order: g > h when g(n) > h(n) for every
    sufficiently large n, decided by the sign of the leading numerator
    coefficient of g - h.
    """

    num: Poly
    den: Poly

    def __post_init__(self):
        if not self.den:
            raise DivisionByZeroGerm("denominator is the zero polynomial")
        num, den = _trim(self.num), _trim(self.den)
        if not num:
            num, den = (), (1,)
        else:
            g = _pgcd(num, den)
            if _deg(g) > 0 or g != (1,):
                num, den = _pdiv_exact(num, g), _pdiv_exact(den, g)
            c = math.gcd(_content(num), _content(den))
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
            if den[-1] < 0:
                num, den = _pneg(num), _pneg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_fraction(q) -> "Germ":
        q = Fraction(q)
        return Germ((q.numerator,), (q.denominator,))

    @staticmethod
    def variable() -> "Germ":
        """The germ of the identity function n."""
        return Germ((0, 1), (1,))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Germ":
        if isinstance(other, Germ):
            return other
        return Germ.from_fraction(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Germ(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                    _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return Germ(_pneg(self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return Germ(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero:
            raise DivisionByZeroGerm("division by the zero germ")
        return Germ(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __abs__(self):
        return self if self.sign() >= 0 else -self

    # -- order ---------------------------------------------------------------

    def sign(self) -> int:
        """Eventual sign at +infinity: -1, 0, or +1."""
        return 0 if not self.num else (1 if self.num[-1] > 0 else -1)

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    # -- classification ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_infinitesimal(self) -> bool:
        return _deg(self.num) < _deg(self.den)

    @property
    def is_infinite(self) -> bool:
        return _deg(self.num) > _deg(self.den)

    @property
    def is_finite(self) -> bool:
        return not self.is_infinite

    @property
    def is_standard(self) -> bool:
        """True when the germ is a constant rational."""
        return _deg(self.num) <= 0 and _deg(self.den) == 0

    def classify(self) -> "GermClass":
        return classify(self)

    def standard_part(self) -> Fraction:
        return standard_part(self)

    def evaluate(self, n: int) -> Fraction:
        """Value at the integer n (n must avoid the finitely many denominator roots)."""
        d = _peval(self.den, Fraction(n))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at n={n}")
        return _peval(self.num, Fraction(n)) / d

    def comparison_bound(self) -> int:
        """An integer B such that the eventual sign is the actual sign for all n > B.

        Cauchy root bound applied to numerator and denominator: past every real
        root of either polynomial, the sign of the quotient is frozen.
        """
        bound = 1
        for p in (self.num, self.den):
            if len(p) > 1:
                lead = abs(p[-1])
                m = max(abs(c) for c in p[:-1])
                bound = max(bound, 1 + (m + lead - 1) // lead)
        return bound

    def __str__(self):
        if _deg(self.den) == 0 and self.den[0] == 1:
            return _pstr(self.num)
        num = _pstr(self.num) if _deg(self.num) <= 0 else f"({_pstr(self.num)})"
        den = _pstr(self.den) if _deg(self.den) <= 0 else f"({_pstr(self.den)})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Germ({self})"


N = Germ.variable()


@dataclass(frozen=True)
class GermClass:
    """Trichotomy of a germ: infinitesimal, finite appreciable, or infinite.

    kind is one of "infinitesimal", "appreciable", "infinite".  The zero germ
    counts as infinitesimal.  Appreciable germs carry their standard part,
    infinite germs their eventual sign.
    """

    kind: str
    standard_part: Optional[Fraction] = None
    sign: Optional[int] = None


def classify(g: Germ) -> GermClass:
    dn, dd = _deg(g.num), _deg(g.den)
    if dn > dd:
        return GermClass("infinite", sign=g.sign())
    if dn == dd:
        return GermClass("appreciable", standard_part=Fraction(g.num[-1], g.den[-1]))
    return GermClass("infinitesimal", standard_part=Fraction(0))


def germ_arith(a: Germ, b: Germ, op: str) -> Germ:
    """Field arithmetic dispatch; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def compare(a: Germ, b: Germ) -> int:
    """Eventual order at +infinity: -1 (Less), 0 (Equal), +1 (Greater)."""
    return (a - b).sign()


def standard_part(a: Germ) -> Fraction:
    """The unique rational s with a - s infinitesimal; defined for finite germs."""
    if a.is_infinite:
        raise InfiniteGerm(f"{a} has no standard part")
    cls = classify(a)
    return cls.standard_part


def infinitely_close(a: Germ, b: Germ) -> bool:
    """True when a - b is infinitesimal."""
    return (a - b).is_infinitesimal


@dataclass(frozen=True)
class HyperInteger:
    """An element of the integer fragment: a polynomial germ with integer values.

    The underlying germ must have denominator 1; it is infinite exactly when
    its degree is at least 1, with the sign of the leading coefficient.
    """

    germ: Germ

    def __post_init__(self):
        if self.germ.den != (1,):
            raise ValueError("hyperinteger must be an integer-coefficient polynomial")

    @staticmethod
    def from_polynomial(coeffs: Sequence[int]) -> "HyperInteger":
        return HyperInteger(Germ(tuple(coeffs), (1,)))

    @staticmethod
    def from_int(k: int) -> "HyperInteger":
        return HyperInteger(Germ((k,), (1,)))

    @property
    def is_infinite(self) -> bool:
        return _deg(self.germ.num) >= 1

    @property
    def is_positive_infinite(self) -> bool:
        return self.is_infinite and self.germ.sign() > 0

    def __add__(self, other):
        return HyperInteger(self.germ + other.germ)

    def __mul__(self, other):
        return HyperInteger(self.germ * other.germ)

    def __str__(self):
        return str(self.germ)


# ---------------------------------------------------------------------------
# Two-sided distance-perturbation check.


@dataclass(frozen=True)
class LemmaCheckResult:
    """Outcome of the perturbation lemma on a germ quadruple.

    For standard points a, b and perturbations a' ~ a, b' ~ b, two implications
    are evaluated with the germ |a' - b'| playing the role of the extended
    distance: (1) |a' - b'| > r implies |a - b| >= r, and (2) |a - b| > r
    implies st(|a' - b'|) >= r.  Each implication is reported as triggered
    (hypothesis held) and verified (conclusion held); summary is one of
    "both_hold", "part1_holds", "part2_holds", "not_applicable".
    """

    part1_triggered: bool
    part1_verified: bool
    part2_triggered: bool
    part2_verified: bool
    st_distance: Optional[Fraction]

    @property
    def summary(self) -> str:
        if self.part1_triggered and self.part2_triggered:
            return "both_hold" if (self.part1_verified and self.part2_verified) else "violated"
        if self.part1_triggered:
            return "part1_holds" if self.part1_verified else "violated"
        if self.part2_triggered:
            return "part2_holds" if self.part2_verified else "violated"
        return "not_applicable"


def lemma_transfer_check(a: Germ, b: Germ, a_perturb: Germ, b_perturb: Germ,
                         r) -> LemmaCheckResult:
    """Evaluate both perturbation implications on a germ quadruple.

    a and b must be standard (constant) germs and the perturbations must be
    infinitely close to them; r is a positive rational threshold.
    """
    r = Fraction(r)
    if not (a.is_standard and b.is_standard):
        raise ValueError("base points must be standard germs")
    if not infinitely_close(a_perturb, a):
        raise PerturbationNotInfinitesimal("a' is not infinitely close to a")
    if not infinitely_close(b_perturb, b):
        raise PerturbationNotInfinitesimal("b' is not infinitely close to b")

    dist_std = abs(standard_part(a) - standard_part(b))
    dist_germ = abs(a_perturb - b_perturb)
    r_germ = Germ.from_fraction(r)

    part1_triggered = dist_germ > r_germ
    part1_verified = part1_triggered and dist_std >= r

    part2_triggered = dist_std > r
    st_dist = standard_part(dist_germ) if dist_germ.is_finite else None
    part2_verified = part2_triggered and st_dist is not None and st_dist >= r

    return LemmaCheckResult(part1_triggered, part1_verified,
                            part2_triggered, part2_verified, st_dist)


# ---------------------------------------------------------------------------
# Parser for germ literals and calculator expressions.
#
# Grammar: expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
# unary := '-' unary | power ; power := atom ('^' INT)? ;
# atom := INT | 'n' | '(' expr ')' | FUNC '(' expr {',' expr} ')'
# Adjacency such as "3n^2" or "(n+1)(n+2)" means multiplication.

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(n)\b|(st|compare|close|classify)\b|([()+\-*/^,]))")

_FUNCS = ("st", "compare", "close", "classify")


class GermParseError(ValueError):
    pass


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise GermParseError(f"unexpected character at {text[pos:]!r}")
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("var", "n"))
        elif m.group(3):
            tokens.append(("func", m.group(3)))
        else:
            tokens.append(("op", m.group(4)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok != ("op", value):
            raise GermParseError(f"expected {value!r}, got {tok[1]!r}")

    def parse_expr(self):
        value = self.parse_term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.take()[1]
            rhs = self.parse_term()
            value = self._arith(value, rhs, "add" if op == "+" else "sub")
        return value

    def parse_term(self):
        value = self.parse_unary()
        while True:
            kind, val = self.peek()
            if (kind, val) in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.parse_unary()
                value = self._arith(value, rhs, "mul" if val == "*" else "div")
            elif kind in ("int", "var", "func") or (kind, val) == ("op", "("):
                rhs = self.parse_unary()  # implicit multiplication
                value = self._arith(value, rhs, "mul")
            else:
                return value

    def parse_unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            value = self.parse_unary()
            return self._neg(value)
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise GermParseError("exponent must be a nonnegative integer")
            self._require_germ(base, "^")
            result = Germ.from_fraction(1)
            for _ in range(val):
                result = result * base
            return result
        return base

    def parse_atom(self):
        kind, val = self.take()
        if kind == "int":
            return Germ.from_fraction(val)
        if kind == "var":
            return Germ.variable()
        if kind == "func":
            self.expect("(")
            args = [self.parse_expr()]
            while self.peek() == ("op", ","):
                self.take()
                args.append(self.parse_expr())
            self.expect(")")
            return self._call(val, args)
        if (kind, val) == ("op", "("):
            value = self.parse_expr()
            self.expect(")")
            return value
        raise GermParseError(f"unexpected token {val!r}")

    @staticmethod
    def _require_germ(value, where):
        if not isinstance(value, Germ):
            raise GermParseError(f"verdict value cannot be used with {where!r}")

    def _arith(self, a, b, op):
        self._require_germ(a, op)
        self._require_germ(b, op)
        return germ_arith(a, b, op)

    def _neg(self, a):
        self._require_germ(a, "-")
        return -a

    def _call(self, name, args):
        def arity(k):
            if len(args) != k:
                raise GermParseError(f"{name} takes {k} argument(s)")
            for a in args:
                self._require_germ(a, name)

        if name == "st":
            arity(1)
            return Germ.from_fraction(standard_part(args[0]))
        if name == "compare":
            arity(2)
            return {-1: "Less", 0: "Equal", 1: "Greater"}[compare(args[0], args[1])]
        if name == "close":
            arity(2)
            return infinitely_close(args[0], args[1])
        if name == "classify":
            arity(1)
            return classify(args[0]).kind
        raise GermParseError(f"unknown function {name!r}")


GermExprResult = Union[Germ, str, bool]


def evaluate_expression(text: str) -> GermExprResult:
    """Evaluate a calculator expression; returns a germ, a verdict string, or a bool."""
    parser = _Parser(_tokenize(text))
    value = parser.parse_expr()
    if parser.peek() != ("end", None):
        raise GermParseError(f"trailing input at {parser.peek()[1]!r}")
    return value


def parse_germ(text: str) -> Germ:
    """Parse a germ literal such as "(3n^2+2)/(n+1)"."""
    value = evaluate_expression(text)
    if not isinstance(value, Germ):
        raise GermParseError("expression is a verdict, not a germ")
    return value
