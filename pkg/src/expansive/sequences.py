"""Bi-infinite symbolic sequences with a canonical finite description.

A sequence is periodic toward each end with a finite central modification:
a left word repeated toward -infinity, a patch, and a right word repeated
toward +infinity.  Construction reduces every description to a canonical
normal form, so equality of sequences is plain structural equality.  The
metric sum |x(i) - y(i)| * 2^(-|i|) is computed exactly as a rational, with
tail contributions folded by closed-form geometric series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

Word = Tuple[int, ...]


class AlphabetMismatch(ValueError):
    """Raised when an operation mixes sequences over different alphabets."""


@dataclass(frozen=True)
class Alphabet:
    """Symbols are the integers 1..size; the symbol distance is |a - b|."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("alphabet size must be >= 1")

    @property
    def delta(self) -> int:
        """Maximum symbol distance, size - 1."""
        return self.size - 1

    def check_symbol(self, s: int) -> None:
        if not (1 <= s <= self.size):
            raise ValueError(f"symbol {s} outside alphabet 1..{self.size}")


def _primitive_word(w: Word) -> Word:
    """Shortest word whose repetition equals the repetition of w."""
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w == w[:p] * (n // p):
            return w[:p]
    return w


def _check_same_alphabet(x: "PatchedPeriodicSequence", y: "PatchedPeriodicSequence"):
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"{x.alphabet} vs {y.alphabet}")


@dataclass(frozen=True)
class PatchedPeriodicSequence:
    """A bi-infinite sequence: left tail | patch | right tail.

    Anchoring convention: the left word is read right-to-left from the patch
    boundary (its last letter occupies the position immediately before the
    patch); the right word starts immediately after the patch.  symbol_at is
    total over Z.

    The constructor canonicalizes: tail words are primitive, the patch is the
    exact non-periodic core (its start is the largest e such that positions
    below e repeat with the left period, its end the smallest s such that
    positions from s on repeat with the right period), and a globally periodic
    sequence is stored with offset 0 and an empty patch.  Equality of
    sequences is therefore equality of the five fields.
    """

    alphabet: Alphabet
    left: Word
    patch: Word
    offset: int
    right: Word

    def __post_init__(self):
        left = tuple(self.left)
        patch = tuple(self.patch)
        right = tuple(self.right)
        if not left or not right:
            raise ValueError("tail words must be nonempty")
        for s in left + patch + right:
            self.alphabet.check_symbol(s)
        left = _primitive_word(left)
        right = _primitive_word(right)
        canon = _canonicalize(left, patch, self.offset, right)
        object.__setattr__(self, "left", canon[0])
        object.__setattr__(self, "patch", canon[1])
        object.__setattr__(self, "offset", canon[2])
        object.__setattr__(self, "right", canon[3])

    # -- basic anatomy --------------------------------------------------------

    @property
    def patch_start(self) -> int:
        return self.offset

    @property
    def patch_end(self) -> int:
        """First position of the right tail."""
        return self.offset + len(self.patch)

    def symbol_at(self, i: int) -> int:
        if i < self.offset:
            return self.left[(i - self.offset) % len(self.left)]
        if i < self.patch_end:
            return self.patch[i - self.offset]
        return self.right[(i - self.patch_end) % len(self.right)]

    def window(self, lo: int, hi: int) -> Word:
        """Symbols at positions lo..hi-1."""
        return tuple(self.symbol_at(i) for i in range(lo, hi))

    def shift(self, k: int) -> "PatchedPeriodicSequence":
        """The sequence i -> self(i + k); shift(1) is the usual left shift."""
        return PatchedPeriodicSequence(self.alphabet, self.left, self.patch,
                                       self.offset - k, self.right)

    def mirror(self) -> "PatchedPeriodicSequence":
        """The reflected sequence i -> self(-i); cached after the first call."""
        cached = getattr(self, "_mirror", None)
        if cached is not None:
            return cached
        lo = self.offset - len(self.left)
        hi = self.patch_end + len(self.right)
        out = PatchedPeriodicSequence(
            self.alphabet,
            tuple(reversed(self.right)),
            tuple(reversed(self.window(lo, hi))),
            -hi + 1,
            tuple(reversed(self.left)),
        )
        object.__setattr__(self, "_mirror", out)
        return out

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def constant(alphabet: Alphabet, symbol: int) -> "PatchedPeriodicSequence":
        return PatchedPeriodicSequence(alphabet, (symbol,), (), 0, (symbol,))

    @staticmethod
    def periodic(alphabet: Alphabet, word: Sequence[int]) -> "PatchedPeriodicSequence":
        """The bi-infinite repetition of word, anchored so word starts at 0."""
        w = tuple(word)
        return PatchedPeriodicSequence(alphabet, w, (), 0, w)

    def with_patch(self, patch: Sequence[int], offset: int) -> "PatchedPeriodicSequence":
        """Overwrite positions offset.. with the given symbols."""
        patch = tuple(patch)
        lo = min(self.offset, offset)
        hi = max(self.patch_end, offset + len(patch))
        # re-anchor the tail words at the widened patch boundaries
        new_left = tuple(self.symbol_at(lo - len(self.left) + j)
                         for j in range(len(self.left)))
        new_right = tuple(self.symbol_at(hi + j) for j in range(len(self.right)))
        window = list(self.window(lo, hi))
        for j, s in enumerate(patch):
            window[offset + j - lo] = s
        return PatchedPeriodicSequence(self.alphabet, new_left, tuple(window),
                                       lo, new_right)

    def __str__(self):
        word = "".join(str(s) for s in self.patch) if self.patch else "-"
        lw = "".join(str(s) for s in self.left)
        rw = "".join(str(s) for s in self.right)
        return f"({lw})^inf [{word}@{self.offset}] ({rw})^inf"


def _canonicalize(left: Word, patch: Word, offset: int, right: Word):
    """Reduce a raw description to the canonical normal form.

    The raw description already defines the sequence via the anchoring rule;
    this computes the intrinsic right-periodicity start s* and left-periodicity
    end e* and re-reads all words from the sequence itself.  Checking the
    periodicity condition on a window of width (left period + right period)
    beyond the patch suffices: outside that window the condition propagates by
    tail periodicity.
    """
    p_l, p_r = len(left), len(right)
    s = offset + len(patch)

    def raw(i: int) -> int:
        if i < offset:
            return left[(i - offset) % p_l]
        if i < s:
            return patch[i - offset]
        return right[(i - s) % p_r]

    # right scan: failures of x(i) == x(i + p_r)
    right_fail = [i for i in range(offset - p_l - p_r, s) if raw(i) != raw(i + p_r)]
    if not right_fail:
        return _canonical_periodic(raw, p_r)
    s_star = right_fail[-1] + 1

    # left scan: failures of x(i) == x(i - p_l)
    left_fail = None
    for i in range(offset, s + p_l + p_r):
        if raw(i) != raw(i - p_l):
            left_fail = i
            break
    if left_fail is None:
        return _canonical_periodic(raw, p_l)
    e_star = min(left_fail, s_star)

    new_left = tuple(raw(e_star - p_l + j) for j in range(p_l))
    new_patch = tuple(raw(i) for i in range(e_star, s_star))
    new_right = tuple(raw(s_star + j) for j in range(p_r))
    return (new_left, new_patch, e_star, new_right)


def _canonical_periodic(raw, period: int):
    """Canonical form of a globally periodic sequence: offset 0, empty patch."""
    word = tuple(raw(j) for j in range(period))
    word = _primitive_word(word)
    return (word, (), 0, word)


def shift(x: PatchedPeriodicSequence, k: int) -> PatchedPeriodicSequence:
    return x.shift(k)


# ---------------------------------------------------------------------------
# Difference sets.


@dataclass(frozen=True)
class DifferenceSet:
    """Exact description of { i : x(i) != y(i) } for a patched-periodic pair.

    Positions below lo follow the left residue pattern modulo left_period,
    positions at or above hi follow the right pattern modulo right_period
    (residues of i - hi), and the finitely many positions in [lo, hi) are
    listed explicitly.  The set is finite exactly when both residue patterns
    are empty.
    """

    lo: int
    hi: int
    left_period: int
    left_residues: frozenset
    center: Tuple[int, ...]
    right_period: int
    right_residues: frozenset

    @property
    def is_finite(self) -> bool:
        return not self.left_residues and not self.right_residues

    @property
    def is_infinite(self) -> bool:
        return not self.is_finite

    @property
    def bounded_above(self) -> bool:
        return not self.right_residues

    @property
    def bounded_below(self) -> bool:
        return not self.left_residues

    @property
    def is_empty(self) -> bool:
        return self.is_finite and not self.center

    def finite_positions(self) -> Tuple[int, ...]:
        if not self.is_finite:
            raise ValueError("difference set is infinite")
        return self.center

    def contains(self, i: int) -> bool:
        if i < self.lo:
            return (i - self.lo) % self.left_period in self.left_residues
        if i >= self.hi:
            return (i - self.hi) % self.right_period in self.right_residues
        return i in self.center

    def to_json(self) -> dict:
        out = {
            "finite": self.is_finite,
            "bounded_above": self.bounded_above,
            "bounded_below": self.bounded_below,
        }
        if self.is_finite:
            out["positions"] = list(self.center)
        else:
            out["center"] = list(self.center)
            out["left"] = {"start": self.lo, "period": self.left_period,
                           "residues": sorted(self.left_residues)}
            out["right"] = {"start": self.hi, "period": self.right_period,
                            "residues": sorted(self.right_residues)}
        return out


def difference_set(x: PatchedPeriodicSequence, y: PatchedPeriodicSequence) -> DifferenceSet:
    _check_same_alphabet(x, y)
    m_l = math.lcm(len(x.left), len(y.left))
    m_r = math.lcm(len(x.right), len(y.right))
    lo = min(x.patch_start, y.patch_start)
    hi = max(x.patch_end, y.patch_end)
    left_res = frozenset((i - lo) % m_l for i in range(lo - m_l, lo)
                         if x.symbol_at(i) != y.symbol_at(i))
    right_res = frozenset((i - hi) % m_r for i in range(hi, hi + m_r)
                          if x.symbol_at(i) != y.symbol_at(i))
    center = tuple(i for i in range(lo, hi) if x.symbol_at(i) != y.symbol_at(i))
    return DifferenceSet(lo, hi, m_l, left_res, center, m_r, right_res)


# ---------------------------------------------------------------------------
# The metric.


def _diff_profile(x, y):
    """(lo, hi, c, left_pattern, right_pattern): magnitudes |x(i) - y(i)|.

    c(i) is exact on [lo - m_l, hi + m_r) via the callable, the patterns give
    one full period of the left tail (anchored at lo) and right tail (at hi).
    """
    m_l = math.lcm(len(x.left), len(y.left))
    m_r = math.lcm(len(x.right), len(y.right))
    lo = min(x.patch_start, y.patch_start)
    hi = max(x.patch_end, y.patch_end)

    def c(i: int) -> int:
        return abs(x.symbol_at(i) - y.symbol_at(i))

    left_pat = tuple(c(lo - m_l + t) for t in range(m_l))
    right_pat = tuple(c(hi + t) for t in range(m_r))
    return lo, hi, c, left_pat, right_pat


def metric_exact(x: PatchedPeriodicSequence, y: PatchedPeriodicSequence) -> Fraction:
    """Exact value of sum_i |x(i) - y(i)| * 2^(-|i|)."""
    _check_same_alphabet(x, y)
    lo, hi, c, left_pat, right_pat = _diff_profile(x, y)
    m_l, m_r = len(left_pat), len(right_pat)
    w = max(abs(lo), abs(hi), 1)

    # explicit center: common denominator 2^w
    center_num = sum(c(i) << (w - abs(i)) for i in range(-w, w + 1))
    total = Fraction(center_num, 1 << w)

    # right tail: positions i > w, pattern index (i - hi) mod m_r; each residue
    # class {w+1+t+k*m_r : k >= 0} contributes a geometric series
    right_num = sum(right_pat[(w + 1 + t - hi) % m_r] << (m_r - 1 - t) for t in range(m_r))
    total += Fraction(right_num, (1 << w) * ((1 << m_r) - 1))

    # left tail: positions i < -w, pattern index (i - lo) mod m_l, |i| = -i
    left_num = sum(left_pat[(-w - 1 - t - lo) % m_l] << (m_l - 1 - t) for t in range(m_l))
    total += Fraction(left_num, (1 << w) * ((1 << m_l) - 1))
    return total


@dataclass(frozen=True)
class MetricInterval:
    """Certified dyadic bounds: lower <= true metric value <= upper."""

    lower: Fraction
    upper: Fraction

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


def metric_window(x: PatchedPeriodicSequence, y: PatchedPeriodicSequence,
                  radius: int) -> MetricInterval:
    """Partial sum over |i| <= radius plus the 2*delta*2^(-radius) tail bound."""
    _check_same_alphabet(x, y)
    if radius < 1:
        raise ValueError("radius must be positive")
    num = sum(abs(x.symbol_at(i) - y.symbol_at(i)) << (radius - abs(i))
              for i in range(-radius, radius + 1))
    lower = Fraction(num, 1 << radius)
    tail = Fraction(2 * x.alphabet.delta, 1 << radius)
    return MetricInterval(lower, lower + tail)


# ---------------------------------------------------------------------------
# JSON interchange: {"left":"12","patch":"313","offset":-1,"right":"2"},
# symbols as digits for alphabets up to 9, comma-separated integers beyond.


def _word_from_text(text: str, wide: bool) -> Word:
    if text == "":
        return ()
    if wide or "," in text:
        return tuple(int(part) for part in text.split(","))
    return tuple(int(ch) for ch in text)


def _word_to_text(word: Word, size: int) -> str:
    if size <= 9:
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)


def sequence_from_json(data: dict) -> PatchedPeriodicSequence:
    declared = int(data["alphabet"]) if "alphabet" in data else None
    wide = declared is not None and declared > 9
    left = _word_from_text(data["left"], wide)
    right = _word_from_text(data["right"], wide)
    patch = _word_from_text(data.get("patch", ""), wide)
    offset = int(data.get("offset", 0))
    size = declared if declared is not None else max(left + right + patch)
    return PatchedPeriodicSequence(Alphabet(size), left, patch, offset, right)


def sequence_to_json(x: PatchedPeriodicSequence) -> dict:
    size = x.alphabet.size
    return {
        "left": _word_to_text(x.left, size),
        "patch": _word_to_text(x.patch, size),
        "offset": x.offset,
        "right": _word_to_text(x.right, size),
        "alphabet": size,
    }
