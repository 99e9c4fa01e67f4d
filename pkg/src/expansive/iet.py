"""Interval exchange transformations on [0, 1) with exact algebraic arithmetic.

Points and breakpoints live in the number field generated by sqrt(2) and
sqrt(3), represented by rational coordinates over the basis {1, sqrt2, sqrt3,
sqrt6}.  Zero tests are exact (coordinate-wise); sign tests of nonzero
elements refine interval enclosures of the square roots until the interval
misses 0, which always terminates.  Orbits, itineraries into the 3-symbol
shift, and breakpoint-avoidance (regularity) checks are all exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .sequences import Alphabet, Word


class DivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero field element."""


class OutOfDomain(ValueError):
    """Raised when applying the exchange to a point outside [0, 1)."""


class IrregularOrbit(ValueError):
    """Raised when an operation requires the orbit to avoid the breakpoints."""


def _sqrt_enclosure(m: int, bits: int) -> Tuple[Fraction, Fraction]:
    """Dyadic interval containing sqrt(m), of width 2^-bits."""
    scaled = math.isqrt(m << (2 * bits))
    return Fraction(scaled, 1 << bits), Fraction(scaled + 1, 1 << bits)


@dataclass(frozen=True)
class FieldElem:
    """q0 + q1*sqrt2 + q2*sqrt3 + q3*sqrt6 with rational coordinates.

    Equality is coordinate-wise (the basis is linearly independent over the
    rationals), so it is exact; order comparisons go through sign().
    """

    coords: Tuple[Fraction, Fraction, Fraction, Fraction]

    @staticmethod
    def of(q0=0, q1=0, q2=0, q3=0) -> "FieldElem":
        return FieldElem((Fraction(q0), Fraction(q1), Fraction(q2), Fraction(q3)))

    @staticmethod
    def rational(q) -> "FieldElem":
        return FieldElem.of(Fraction(q))

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __add__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "FieldElem":
        return FieldElem(tuple(-a for a in self.coords))

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        return FieldElem((
            a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3,
            a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ))

    def _conjugate(self, flip2: bool, flip3: bool) -> "FieldElem":
        q0, q1, q2, q3 = self.coords
        s2 = -1 if flip2 else 1
        s3 = -1 if flip3 else 1
        return FieldElem((q0, s2 * q1, s3 * q2, s2 * s3 * q3))

    def inverse(self) -> "FieldElem":
        if self.is_zero:
            raise DivisionByZero("zero field element")
        c1 = self._conjugate(True, False)
        c2 = self._conjugate(False, True)
        c3 = self._conjugate(True, True)
        prod = c1 * c2 * c3
        norm = (self * prod).coords[0]  # the full conjugate product is rational
        return FieldElem(tuple(q / norm for q in prod.coords))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inverse()

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def sign(self) -> int:
        """Exact sign via adaptive-precision interval evaluation.

        The exact zero test comes first; for a nonzero element, enclosures of
        the roots are refined until the interval for the value excludes 0.
        """
        if self.is_zero:
            return 0
        q0, q1, q2, q3 = self.coords
        bits = 24
        while bits <= (1 << 16):
            lo, hi = Fraction(q0), Fraction(q0)
            for q, m in ((q1, 2), (q2, 3), (q3, 6)):
                if q == 0:
                    continue
                slo, shi = _sqrt_enclosure(m, bits)
                if q > 0:
                    lo, hi = lo + q * slo, hi + q * shi
                else:
                    lo, hi = lo + q * shi, hi + q * slo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise RuntimeError("sign determination did not converge")  # unreachable

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        q0, q1, q2, q3 = self.coords
        return float(q0) + float(q1) * math.sqrt(2) + float(q2) * math.sqrt(3) \
            + float(q3) * math.sqrt(6)

    def __str__(self):
        names = ("", "*sqrt2", "*sqrt3", "*sqrt6")
        parts = [f"{q}{nm}" for q, nm in zip(self.coords, names) if q]
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def to_json(self) -> dict:
        den = math.lcm(*(q.denominator for q in self.coords))
        return {"q": [int(q * den) for q in self.coords], "div": den}

    @staticmethod
    def from_json(data) -> "FieldElem":
        if isinstance(data, str):
            return FieldElem.rational(Fraction(data))
        div = int(data.get("div", 1))
        q = list(data["q"]) + [0] * (4 - len(data["q"]))
        return FieldElem(tuple(Fraction(int(v), div) for v in q))


ZERO = FieldElem.of(0)
ONE = FieldElem.of(1)
SQRT2 = FieldElem.of(0, 1)
SQRT3 = FieldElem.of(0, 0, 1)
SQRT6 = FieldElem.of(0, 0, 0, 1)


def field_ops(u: FieldElem, v: FieldElem, op: str):
    """Arithmetic/compare dispatch; op in {add, sub, mul, div, compare}."""
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    if op == "compare":
        return (u - v).sign()
    raise ValueError(f"unknown op {op!r}")


class IetMap:
    """Exchange of the three intervals [0,a), [a,b), [b,1).

    perm lists the source intervals in their left-to-right order on the
    target: perm = (3, 1, 2) sends the order 1,2,3 to 3,1,2, which for equal
    lengths is rotation by a third.  Offsets are derived so that the images
    tile [0, 1); the map is a bijection off the breakpoint orbit, with an
    explicit inverse exchange.
    """

    ROTATION = (3, 1, 2)

    def __init__(self, a: FieldElem, b: FieldElem, perm: Sequence[int] = ROTATION):
        if not (ZERO < a and a < b and b < ONE):
            raise ValueError("breakpoints must satisfy 0 < a < b < 1")
        self.a, self.b = a, b
        self.perm = tuple(perm)
        if sorted(self.perm) != [1, 2, 3]:
            raise ValueError("perm must be a permutation of (1, 2, 3)")
        lengths = {1: a, 2: b - a, 3: ONE - b}
        starts = {1: ZERO, 2: a, 3: b}
        self.offsets = {}
        cursor = ZERO
        self.target_cuts = []  # breakpoints of the inverse exchange
        for j in self.perm:
            self.offsets[j] = cursor - starts[j]
            cursor = cursor + lengths[j]
            self.target_cuts.append(cursor)

    def interval_of(self, x: FieldElem) -> int:
        if x < ZERO or x >= ONE:
            raise OutOfDomain(f"{x} outside [0, 1)")
        if x < self.a:
            return 1
        if x < self.b:
            return 2
        return 3

    def apply(self, x: FieldElem) -> FieldElem:
        return x + self.offsets[self.interval_of(x)]

    def apply_inverse(self, y: FieldElem) -> FieldElem:
        if y < ZERO or y >= ONE:
            raise OutOfDomain(f"{y} outside [0, 1)")
        for cut, j in zip(self.target_cuts, self.perm):
            if y < cut:
                return y - self.offsets[j]
        return y - self.offsets[self.perm[-1]]

    def iterate(self, x: FieldElem, k: int) -> FieldElem:
        step = self.apply if k >= 0 else self.apply_inverse
        for _ in range(abs(k)):
            x = step(x)
        return x

    @property
    def breakpoints(self) -> Tuple[FieldElem, FieldElem, FieldElem]:
        return (ZERO, self.a, self.b)

    def is_rationally_independent(self) -> bool:
        """Exact test that {1, a, b} is linearly independent over the rationals."""
        cols = [ONE.coords, self.a.coords, self.b.coords]
        matrix = [[Fraction(cols[c][r]) for c in range(3)] for r in range(4)]
        rank = 0
        for col in range(3):
            pivot = next((r for r in range(rank, 4) if matrix[r][col]), None)
            if pivot is None:
                return False
            matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
            inv = 1 / matrix[rank][col]
            matrix[rank] = [v * inv for v in matrix[rank]]
            for r in range(4):
                if r != rank and matrix[r][col]:
                    f = matrix[r][col]
                    matrix[r] = [v - f * p for v, p in zip(matrix[r], matrix[rank])]
            rank += 1
        return rank == 3

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(),
                "perm": list(self.perm)}

    @staticmethod
    def from_json(data: dict) -> "IetMap":
        return IetMap(FieldElem.from_json(data["a"]), FieldElem.from_json(data["b"]),
                      tuple(data.get("perm", IetMap.ROTATION)))

    @staticmethod
    def example() -> "IetMap":
        """Rotation-type exchange with a = sqrt2/2, b = sqrt3/2."""
        return IetMap(FieldElem.of(0, Fraction(1, 2)),
                      FieldElem.of(0, 0, Fraction(1, 2)))


ITINERARY_ALPHABET = Alphabet(3)


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    horizon: int
    first_irregular_time: Optional[int] = None


def is_regular(t: IetMap, x: FieldElem, horizon: int) -> RegularityResult:
    """Scan T^n(x) for |n| <= horizon against {0, a, b}, exactly.

    The first hit in the order 0, +1, -1, +2, -2, ... is reported (smallest
    |n|, forward preferred).
    """
    bps = t.breakpoints
    fwd = bwd = x
    if any(fwd == p for p in bps):
        return RegularityResult(False, horizon, 0)
    for n in range(1, horizon + 1):
        fwd = t.apply(fwd)
        if any(fwd == p for p in bps):
            return RegularityResult(False, horizon, n)
        bwd = t.apply_inverse(bwd)
        if any(bwd == p for p in bps):
            return RegularityResult(False, horizon, -n)
    return RegularityResult(True, horizon)


@dataclass(frozen=True)
class ItineraryResult:
    """Interval labels along the orbit: window[k + radius] labels T^k(x)."""

    window: Word
    radius: int
    regular: bool
    first_irregular_time: Optional[int] = None

    def label(self, k: int) -> int:
        return self.window[k + self.radius]

    def to_json(self) -> dict:
        return {"radius": self.radius,
                "window": "".join(str(s) for s in self.window),
                "regular": self.regular,
                "first_irregular_time": self.first_irregular_time}


def itinerary(t: IetMap, x: FieldElem, radius: int) -> ItineraryResult:
    labels = [0] * (2 * radius + 1)
    point = x
    for k in range(0, radius + 1):
        labels[k + radius] = t.interval_of(point)
        if k < radius:
            point = t.apply(point)
    point = x
    for k in range(-1, -radius - 1, -1):
        point = t.apply_inverse(point)
        labels[k + radius] = t.interval_of(point)
    reg = is_regular(t, x, radius)
    return ItineraryResult(tuple(labels), radius, reg.regular,
                           reg.first_irregular_time)


def check_commutation(t: IetMap, x: FieldElem, radius: int) -> bool:
    """Exact check that the itinerary of T(x) is the shifted itinerary of x.

    Requires the orbit to be regular out to radius + 1 so both windows carry
    honest interval labels.
    """
    reg = is_regular(t, x, radius + 1)
    if not reg.regular:
        raise IrregularOrbit(f"orbit hits a breakpoint at time {reg.first_irregular_time}")
    base = itinerary(t, x, radius + 1)
    image = itinerary(t, t.apply(x), radius)
    return all(image.label(k) == base.label(k + 1) for k in range(-radius, radius + 1))
