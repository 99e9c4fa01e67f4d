"""Decision procedures and certifiers for separation behavior.

Separation analysis of a patched-periodic pair is exact: beyond the patch the
per-shift distance d_n = d(shift^n x, shift^n y) satisfies the recurrence
d_{n+m} = d_n + C * 2^(-n) along each residue class modulo the combined right
tail period m, with a single computable constant C.  Every class therefore
converges monotonically to an exactly computable limit, which decides all but
finitely many comparisons with the threshold at once; the finitely many
remaining times are scanned directly.

The doubly-asymptotic decision for vertex shifts runs on the pair graph
(product of the graph with itself): a distinct pair with finite difference
set exists exactly when some off-diagonal pair state is reachable from, and
can reach, diagonal states lying on diagonal cycles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .sequences import (Alphabet, PatchedPeriodicSequence, Word,
                        difference_set, metric_exact)
from .systems import NotEssential, Sft


class NonpositiveConstant(ValueError):
    """Raised for a separation constant that is not positive."""


class EqualPoints(ValueError):
    """Raised when a pairwise analysis requires two distinct points."""


class ConstantOutOfRange(ValueError):
    """Raised for vertex-shift verdicts with a constant outside (0, 1)."""


class BadConstant(ValueError):
    """Raised for window certificates with a constant outside (0, 1)."""


class NonpositiveAlpha(ValueError):
    """Raised for a nonpositive continuity target."""


SEPARATES_INFINITELY = "separates_infinitely"
SEPARATES_FINITELY = "separates_finitely"


# ---------------------------------------------------------------------------
# Exact per-shift distances and infinitude of separation times.


class _ShiftDistances:
    """Exact evaluator of n -> d(shift^n x, shift^n y) for n >= 0.

    Splits the difference profile into an explicit window plus geometric
    tails whose phases are aligned with the tail periods; d(n) costs a
    handful of exact rational operations.
    """

    def __init__(self, x: PatchedPeriodicSequence, y: PatchedPeriodicSequence):
        self.m_l = math.lcm(len(x.left), len(y.left))
        self.m_r = math.lcm(len(x.right), len(y.right))
        self.lo = min(x.patch_start, y.patch_start)
        self.hi = max(x.patch_end, y.patch_end)
        self._x, self._y = x, y
        self._c: Dict[int, int] = {}

        # aligned explicit-window bottom at or below 0
        q = 1
        while self.lo - q * self.m_l > 0:
            q += 1
        self.e_lo = self.lo - q * self.m_l

        self.left_pat = tuple(self.c(self.lo - self.m_l + t) for t in range(self.m_l))
        self.right_pat = tuple(self.c(self.hi + t) for t in range(self.m_r))
        sl = sum(v << t for t, v in enumerate(self.left_pat))
        sr = sum(v << t for t, v in enumerate(self.right_pat))

        # G = sum_{j < e_lo} c(j) 2^j, and the unit right tail
        # sum_{j >= e_hi} c(j) 2^(e_hi - j) for any e_hi aligned with hi mod m_r
        self.tail_left = Fraction(sl, (1 << self.m_l) - 1) * _pow2(self.e_lo)
        self.tail_right_unit = Fraction(sum(v << (self.m_r - t) for t, v in
                                            enumerate(self.right_pat)),
                                        (1 << self.m_r) - 1)

        # A = sum_{j < hi} c(j) 2^j ;  B = sum of one right period below hi
        a = self.tail_left
        for j in range(self.e_lo, self.hi):
            if self.c(j):
                a += self.c(j) * _pow2(j)
        b = Fraction(sr) * _pow2(self.hi - self.m_r)
        # d_{n+m_r} = d_n + C 2^(-n) for n >= hi ; limits use E = C/(1-2^(-m_r))
        self.C = b - a * Fraction((1 << self.m_r) - 1, 1 << self.m_r)
        self.E = self.C * Fraction(1 << self.m_r, (1 << self.m_r) - 1)
        self.base = max(self.hi, 0)
        self._d_cache: Dict[int, Fraction] = {}

    def c(self, j: int) -> int:
        v = self._c.get(j)
        if v is None:
            v = abs(self._x.symbol_at(j) - self._y.symbol_at(j))
            self._c[j] = v
        return v

    def d(self, n: int) -> Fraction:
        """Exact metric distance of the pair shifted by n (n >= 0)."""
        cached = self._d_cache.get(n)
        if cached is not None:
            return cached
        q = 1
        while self.hi + q * self.m_r <= n:
            q += 1
        e_hi = self.hi + q * self.m_r
        span = max(n - self.e_lo, e_hi - 1 - n)
        num = 0
        for j in range(self.e_lo, e_hi):
            v = self.c(j)
            if v:
                num += v << (span - abs(j - n))
        total = Fraction(num, 1 << span) if num else Fraction(0)
        if self.tail_left:
            total += self.tail_left * _pow2(-n)
        if self.tail_right_unit:
            total += self.tail_right_unit * _pow2(n - e_hi)
        self._d_cache[n] = total
        return total

    def limit(self, n_base: int) -> Fraction:
        """Limit of d along the residue class of n_base (n_base >= base)."""
        return self.d(n_base) + self.E * _pow2(-n_base)

    def times_above(self, c: Fraction, stride: int = 1):
        """The set {n >= 0, stride | n : d(n) > c}, exactly.

        Returns ("infinite", None) or ("finite", tuple of the times).
        """
        period = math.lcm(self.m_r, stride)
        top = self.base + period
        explicit = [n for n in range(0, top, stride) if self.d(n) > c]

        tail_times: List[int] = []
        for rho in range(0, period, stride):
            n0 = self.base + ((rho - self.base) % period)
            lam = self.limit(n0)
            if lam > c or (lam == c and self.C < 0):
                return ("infinite", None)
            if self.C < 0 and lam < c:
                # d(n) = lam - E 2^(-n) with E < 0: finitely many n with d > c
                n = n0 + period
                while -self.E > (c - lam) * _pow2(n):
                    tail_times.append(n)
                    n += period
        return ("finite", tuple(sorted(set(explicit) | set(tail_times))))


def _pow2(k: int) -> Fraction:
    return Fraction(1 << k, 1) if k >= 0 else Fraction(1, 1 << -k)


def _tail_weight(m: int) -> Fraction:
    """sum_{i > m} 2^(-|i|), exactly."""
    if m >= 0:
        return _pow2(-m)
    return 3 - 2 * _pow2(m)


@dataclass(frozen=True)
class SeparationTimes:
    """Exact two-sided verdict on {n in Z : d(shift^n x, shift^n y) > c}."""

    infinite: bool
    times: Optional[Tuple[int, ...]] = None  # present when finite

    @property
    def max_abs_time(self) -> Optional[int]:
        if self.infinite or not self.times:
            return None
        return max(abs(t) for t in self.times)


def separation_times(x: PatchedPeriodicSequence, y: PatchedPeriodicSequence,
                     c: Fraction, stride: int = 1) -> SeparationTimes:
    """Decide the full separation-time set of a patched-periodic pair.

    With stride k only times that are multiples of k are considered (the
    separation set of the k-th power map, rescaled).
    """
    pos = _ShiftDistances(x, y).times_above(c, stride)
    neg = _ShiftDistances(x.mirror(), y.mirror()).times_above(c, stride)
    if pos[0] == "infinite" or neg[0] == "infinite":
        return SeparationTimes(True)
    times = set(pos[1]) | {-t for t in neg[1] if t != 0}
    return SeparationTimes(False, tuple(sorted(times)))


@dataclass(frozen=True)
class SeparationReport:
    """Per-time classification over a horizon plus the exact global verdict."""

    constant: Fraction
    horizon: int
    distances: Dict[int, Fraction]
    times: Dict[int, str]          # "above" | "at_or_below"
    verdict: SeparationTimes

    def to_json(self) -> dict:
        order = sorted(self.distances)
        out = {
            "constant": _frac_str(self.constant),
            "horizon": self.horizon,
            "times": {str(n): self.times[n] for n in order},
            "distances": {str(n): _frac_str(self.distances[n]) for n in order},
        }
        if self.verdict.infinite:
            out["verdict"] = {"kind": "infinite"}
        else:
            out["verdict"] = {"kind": "finite",
                              "separation_times": list(self.verdict.times),
                              "max_abs_time": self.verdict.max_abs_time}
        return out


def separation_report(x: PatchedPeriodicSequence, y: PatchedPeriodicSequence,
                      c, horizon: int) -> SeparationReport:
    c = Fraction(c)
    if c <= 0:
        raise NonpositiveConstant("separation constant must be positive")
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    pos = _ShiftDistances(x, y)
    neg = _ShiftDistances(x.mirror(), y.mirror())
    distances = {}
    for n in range(-horizon, horizon + 1):
        distances[n] = pos.d(n) if n >= 0 else neg.d(-n)
    times = {n: ("above" if d > c else "at_or_below") for n, d in distances.items()}
    return SeparationReport(c, horizon, distances, times, separation_times(x, y, c))


def nonstandard_expansive_pair(x: PatchedPeriodicSequence,
                               y: PatchedPeriodicSequence, c) -> str:
    """Exact pairwise verdict: does the pair separate above c infinitely often?"""
    c = Fraction(c)
    if c <= 0:
        raise NonpositiveConstant("separation constant must be positive")
    if x == y:
        raise EqualPoints("points must be distinct")
    return SEPARATES_INFINITELY if separation_times(x, y, c).infinite \
        else SEPARATES_FINITELY


# ---------------------------------------------------------------------------
# Asymptotic verdicts.

ASYMPTOTIC = "asymptotic"
NOT_ASYMPTOTIC = "not_asymptotic"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class AsymptoticVerdict:
    positive: str
    negative: str

    @property
    def doubly(self) -> bool:
        return self.positive == ASYMPTOTIC and self.negative == ASYMPTOTIC

    def to_json(self) -> dict:
        return {"positive": self.positive, "negative": self.negative,
                "doubly": self.doubly}


def asymptotic_verdict(x: PatchedPeriodicSequence,
                       y: PatchedPeriodicSequence) -> AsymptoticVerdict:
    """Exact orbit-convergence verdict for a patched-periodic pair.

    The pair is positively asymptotic exactly when the difference set is
    bounded above: past its maximum the shifted pairs agree on ever longer
    central windows, so the distance tends to 0; an unbounded difference set
    keeps the distance at least 2^0 at infinitely many shifts.
    """
    diff = difference_set(x, y)
    return AsymptoticVerdict(
        positive=ASYMPTOTIC if diff.bounded_above else NOT_ASYMPTOTIC,
        negative=ASYMPTOTIC if diff.bounded_below else NOT_ASYMPTOTIC,
    )


# ---------------------------------------------------------------------------
# Doubly asymptotic pairs in a vertex shift, via the pair graph.


@dataclass(frozen=True)
class PairGraphResult:
    exists: bool
    witness: Optional[Tuple[PatchedPeriodicSequence, PatchedPeriodicSequence]] = None


def _pair_successors(s: Sft, state, reverse=False):
    u, v = state
    if reverse:
        return [(a, b) for a in s._pred[u] for b in s._pred[v]]
    return [(a, b) for a in s._succ[u] for b in s._succ[v]]


def _reach(s: Sft, sources, reverse=False) -> Set[Tuple[int, int]]:
    seen = set(sources)
    frontier = list(sources)
    while frontier:
        state = frontier.pop()
        for nxt in _pair_successors(s, state, reverse):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _greedy_shortest_path(s: Sft, start, targets: Set, reverse=False):
    """Deterministic shortest path from start into targets.

    Distances to the target set are computed exactly; the path then always
    takes the lexicographically smallest next state that stays on a shortest
    path, so the result is reproducible.
    """
    dist = {t: 0 for t in targets}
    frontier = sorted(targets)
    while frontier:
        nxt = []
        for state in frontier:
            for p in _pair_successors(s, state, not reverse):
                if p not in dist:
                    dist[p] = dist[state] + 1
                    nxt.append(p)
        frontier = sorted(nxt)
    if start not in dist:
        return None
    path = [start]
    current = start
    while dist[current] > 0:
        current = min(p for p in _pair_successors(s, current, reverse)
                      if dist.get(p) == dist[current] - 1)
        path.append(current)
    return path


def sft_doubly_asymptotic_exists(s: Sft) -> PairGraphResult:
    """Decide whether the vertex shift has a distinct doubly asymptotic pair.

    Such a pair is a pair-graph walk that is eventually diagonal in both
    directions with an off-diagonal excursion in between; the eventually
    diagonal ends must follow diagonal cycles.  The witness, when one exists,
    is assembled from the lexicographically smallest qualifying excursion and
    shortest cycles at its endpoints.
    """
    cyc = s.cycle_vertices()
    if not cyc:
        raise NotEssential("no cycles")
    diag = {(w, w) for w in cyc}
    forward = _reach(s, diag, reverse=False)
    backward = _reach(s, diag, reverse=True)
    qualifying = sorted(state for state in forward & backward
                        if state[0] != state[1])
    if not qualifying:
        return PairGraphResult(False)
    target = qualifying[0]

    into = _greedy_shortest_path(s, target, diag, reverse=True)
    outof = _greedy_shortest_path(s, target, diag, reverse=False)
    into.reverse()
    excursion = into + outof[1:]

    w = excursion[0][0]
    z = excursion[-1][0]
    left_cycle = s.shortest_cycle_word(w)
    right_cycle = s.shortest_cycle_word(z)
    right_word = right_cycle[1:] + right_cycle[:1]

    x = PatchedPeriodicSequence(s.alphabet, left_cycle,
                                tuple(p[0] for p in excursion), 0, right_word)
    y = PatchedPeriodicSequence(s.alphabet, left_cycle,
                                tuple(p[1] for p in excursion), 0, right_word)
    return PairGraphResult(True, (x, y))


@dataclass(frozen=True)
class SftExpansivenessResult:
    nonstandard_expansive: bool
    witness: Optional[Tuple[PatchedPeriodicSequence, PatchedPeriodicSequence]] = None
    witness_separates_finitely: Optional[bool] = None


def nonstandard_expansive_sft(s: Sft, c) -> SftExpansivenessResult:
    """Verdict for a vertex shift with constant c in (0, 1).

    Any two distinct points of a vertex shift differ at some position i and
    hence satisfy d(shift^i x, shift^i y) >= 1 > c, so the shift is expansive
    for every such c; the verdict therefore reduces to the absence of doubly
    asymptotic pairs.  A negative answer carries a witness pair, cross-checked
    to separate only finitely often.
    """
    c = Fraction(c)
    if not (0 < c < 1):
        raise ConstantOutOfRange("constant must lie in (0, 1)")
    res = sft_doubly_asymptotic_exists(s)
    if not res.exists:
        return SftExpansivenessResult(True)
    x, y = res.witness
    finitely = nonstandard_expansive_pair(x, y, c) == SEPARATES_FINITELY
    return SftExpansivenessResult(False, res.witness, finitely)


# ---------------------------------------------------------------------------
# Word languages for the uniform-window certifiers.


class SftLanguage:
    """Exact admissible-word oracle of a vertex shift."""

    def __init__(self, s: Sft):
        self.sft = s
        self.alphabet = s.alphabet

    def words(self, length: int) -> List[Word]:
        return list(self.sft.words(length))


class EmpiricalLanguage:
    """Finite-sample word oracle: all subwords of the given sample windows.

    Certificates over this oracle are evidence relative to the sample, not
    statements about the full system.
    """

    def __init__(self, alphabet: Alphabet, samples: Iterable[Sequence[int]]):
        self.alphabet = alphabet
        self.samples = [tuple(w) for w in samples]

    def words(self, length: int) -> List[Word]:
        out = set()
        for w in self.samples:
            for i in range(len(w) - length + 1):
                out.add(w[i:i + length])
        return sorted(out)


@dataclass(frozen=True)
class WindowCertificate:
    """Outcome of the uniform-window search.

    kind is "step_certified" (every admissible pair separated by epsilon at
    time 0 must differ, hence separate above c, at some time n < |i| < m),
    "refuted" (a concrete pair separated by epsilon whose entire separation
    set lies in [-n, n]), "sequence_certified", or "unknown".
    """

    epsilon: Fraction
    c: Fraction
    kind: str
    n: Optional[int] = None
    m: Optional[int] = None
    note: str = ""
    witness: Optional[Tuple[PatchedPeriodicSequence, PatchedPeriodicSequence]] = None
    sequence: Optional[Tuple[int, ...]] = None

    def to_json(self) -> dict:
        out = {"epsilon": _frac_str(self.epsilon), "c": _frac_str(self.c),
               "kind": self.kind}
        if self.n is not None:
            out["n"] = self.n
        if self.m is not None:
            out["m"] = self.m
        if self.note:
            out["note"] = self.note
        if self.sequence is not None:
            out["sequence"] = list(self.sequence)
        if self.witness is not None:
            from .sequences import sequence_to_json
            out["witness"] = [sequence_to_json(self.witness[0]),
                              sequence_to_json(self.witness[1])]
        return out


def _central_window(epsilon: Fraction, delta: int) -> int:
    """Smallest K >= 0 with 2*delta*2^(-K) <= epsilon: an epsilon-separated
    pair must differ at some position |i| <= K."""
    k = 0
    while 2 * delta > epsilon * (1 << k):
        k += 1
    return k


def _extend_to_cycle(s: Sft, v: int, backward: bool) -> Tuple[Word, Word]:
    """(connector, cycle_word): a path from/to a cycle vertex plus its cycle.

    backward=True gives states before v: tail cycle word and the connector
    ending just before v; backward=False the mirror for states after v.
    """
    cyc = s.cycle_vertices()
    chain = [v]
    current = v
    while current not in cyc:
        nbrs = s._pred[current] if backward else s._succ[current]
        current = min(nbrs)
        chain.append(current)
    connector = tuple(reversed(chain[1:])) if backward else tuple(chain[1:])
    cycle = s.shortest_cycle_word(current)
    if backward:
        return connector, cycle
    return connector, cycle[1:] + cycle[:1]


def _refuter_scan(lang: SftLanguage, epsilon: Fraction, n: int, c: Fraction):
    """Search for a pair with d > epsilon whose separation set lies in [-n, n].

    For c < 1 any difference at position i forces separation at time i, so a
    refuting pair differs only at positions |i| <= n; it is found among word
    pairs on [-(n+1), n+1] agreeing at both endpoints, extended by equal
    periodic tails.  The window distance already equals the exact distance.
    """
    s = lang.sft
    radius = n + 1
    words = lang.words(2 * radius + 1)
    buckets: Dict[Tuple[int, int], List[Word]] = {}
    for w in words:
        buckets.setdefault((w[0], w[-1]), []).append(w)

    for key in sorted(buckets):
        group = buckets[key]
        for u, v in itertools.combinations(group, 2):
            d_window = sum(Fraction(abs(a - b), 1 << abs(i - radius))
                           for i, (a, b) in enumerate(zip(u, v)))
            if d_window <= epsilon:
                continue
            pre, left_cycle = _extend_to_cycle(s, u[0], backward=True)
            post, right_word = _extend_to_cycle(s, u[-1], backward=False)
            offset = -radius - len(pre)
            x = PatchedPeriodicSequence(s.alphabet, left_cycle,
                                        pre + u + post, offset, right_word)
            y = PatchedPeriodicSequence(s.alphabet, left_cycle,
                                        pre + v + post, offset, right_word)
            if metric_exact(x, y) <= epsilon:
                continue
            verdict = separation_times(x, y, c)
            if verdict.infinite:
                continue
            if all(abs(t) <= n for t in verdict.times):
                return x, y
    return None


def uniform_window_step(lang, epsilon, n: int, c, m_max: int) -> WindowCertificate:
    """Search for m > n such that every epsilon-separated admissible pair
    separates above c at some time n < |i| < m.

    Certification is word-level and exact for vertex-shift languages: a
    difference at an annulus position forces separation above any c < 1.
    Refutation produces a concrete patched-periodic pair whose separation
    set is confined to [-n, n] (which defeats every m at once); refuters are
    only searched for vertex-shift languages.
    """
    epsilon = Fraction(epsilon)
    c = Fraction(c)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if not (0 < c < 1):
        raise BadConstant("constant must lie in (0, 1)")
    delta = lang.alphabet.delta
    if delta == 0 or epsilon >= 3 * delta:
        return WindowCertificate(epsilon, c, "step_certified", n=n, m=n + 1,
                                 note="vacuous: no pair is separated by epsilon")
    k_eps = _central_window(epsilon, delta)

    if isinstance(lang, SftLanguage):
        found = _refuter_scan(lang, epsilon, n, c)
        if found:
            return WindowCertificate(epsilon, c, "refuted", n=n,
                                     witness=found,
                                     note="pair separates only inside [-n, n]")

    for m in range(max(n + 1, k_eps + 1), m_max + 1):
        words = lang.words(2 * m + 1)
        annulus = [i for i in range(-m, m + 1) if n < abs(i) < m]
        center = [i for i in range(-k_eps, k_eps + 1)]
        buckets: Dict[Word, Dict[Word, Word]] = {}
        for w in words:
            sig = tuple(w[i + m] for i in annulus)
            mid = tuple(w[i + m] for i in center)
            buckets.setdefault(sig, {}).setdefault(mid, w)
        certified = True
        for sig, mids in buckets.items():
            if len(mids) < 2:
                continue
            group = sorted(mids.values())
            for u, v in itertools.combinations(group, 2):
                d_upper = sum(Fraction(abs(a - b), 1 << abs(i - m))
                              for i, (a, b) in enumerate(zip(u, v)))
                d_upper += 2 * delta * _pow2(-m)
                if d_upper > epsilon:
                    certified = False
                    break
            if not certified:
                break
        if certified:
            return WindowCertificate(
                epsilon, c, "step_certified", n=n, m=m,
                note=f"all admissible words of length {2 * m + 1} checked")
    return WindowCertificate(epsilon, c, "unknown", n=n,
                             note=f"no certificate up to m_max={m_max}")


def window_sequence(lang, epsilon, c, count: int, m_max: int) -> WindowCertificate:
    """Greedy strictly monotone window sequence: n(1)=1, n(k+1) = certified m."""
    epsilon = Fraction(epsilon)
    c = Fraction(c)
    if count == 0:
        return WindowCertificate(epsilon, c, "sequence_certified", sequence=())
    ns = [1]
    while len(ns) < count:
        step = uniform_window_step(lang, epsilon, ns[-1], c, m_max)
        if step.kind != "step_certified":
            return step
        ns.append(step.m)
    return WindowCertificate(epsilon, c, "sequence_certified",
                             sequence=tuple(ns))


# ---------------------------------------------------------------------------
# Constant transport under conjugacy and powers.


@dataclass(frozen=True)
class TransportBound:
    """delta with the guarantee d(u,v) < delta => d(inv u, inv v) < alpha."""

    alpha: Fraction
    inverse_radius: int
    window: int
    delta: Fraction


def transport_bound(alpha, inverse_radius: int, alphabet: Alphabet) -> TransportBound:
    """Uniform-continuity constant for the inverse of a radius-r code.

    N is the smallest positive window with 2*delta*2^(-N) < alpha; agreement
    on [-(N+r), N+r] survives the inverse code and pins the images within
    2*delta*2^(-N) < alpha.
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise NonpositiveAlpha("alpha must be positive")
    if inverse_radius < 0:
        raise ValueError("inverse radius must be >= 0")
    delta_sym = alphabet.delta
    n = 1
    while 2 * delta_sym >= alpha * (1 << n):
        n += 1
    return TransportBound(alpha, inverse_radius, n,
                          _pow2(-(n + inverse_radius)))


def transport_constant(alpha, inverse_radius: int, alphabet: Alphabet) -> Fraction:
    return transport_bound(alpha, inverse_radius, alphabet).delta


@dataclass(frozen=True)
class PowerTransportRecord:
    """Separation verdicts of a pair under the shift and under its k-th power.

    delta = 2^-(N+k) with 2*Delta*2^(-N) <= c guarantees: if the power map
    stays within delta at a time, the base map stays within c for the k
    following times; hence finite separation under the power (with delta)
    forces finite separation under the base map (with c).
    """

    k: int
    constant: Fraction
    delta: Fraction
    base_verdict: SeparationTimes
    power_verdict: SeparationTimes

    @property
    def implication_holds(self) -> bool:
        return self.power_verdict.infinite or not self.base_verdict.infinite

    def to_json(self) -> dict:
        def v(t: SeparationTimes):
            return {"kind": "infinite"} if t.infinite else \
                {"kind": "finite", "max_abs_time": t.max_abs_time}
        return {"k": self.k, "constant": _frac_str(self.constant),
                "delta": _frac_str(self.delta),
                "base": v(self.base_verdict), "power": v(self.power_verdict),
                "implication_holds": self.implication_holds}


def power_separation_transport(x: PatchedPeriodicSequence,
                               y: PatchedPeriodicSequence, c,
                               k: int) -> PowerTransportRecord:
    c = Fraction(c)
    if x == y:
        raise EqualPoints("points must be distinct")
    if c <= 0:
        raise NonpositiveConstant("constant must be positive")
    if k < 1:
        raise ValueError("power must be >= 1")
    delta_sym = x.alphabet.delta
    n = 1
    while 2 * delta_sym > c * (1 << n):
        n += 1
    delta = _pow2(-(n + k))
    base = separation_times(x, y, c)
    power = separation_times(x, y, delta, stride=k)
    return PowerTransportRecord(k, c, delta, base, power)


# ---------------------------------------------------------------------------
# Three-valued separation classification on finite itinerary windows.


@dataclass(frozen=True)
class WindowSeparationReport:
    """Separation classification from radius-N windows only.

    Entries are "above", "at_or_below" or "undecided"; the infinitude verdict
    from a finite window is always unknown_at_horizon.
    """

    constant: Fraction
    horizon: int
    times: Dict[int, str]
    verdict: str = "unknown_at_horizon"

    def to_json(self) -> dict:
        return {"constant": _frac_str(self.constant), "horizon": self.horizon,
                "times": {str(n): s for n, s in sorted(self.times.items())},
                "verdict": self.verdict}


def separation_report_windows(wx: Sequence[int], wy: Sequence[int],
                              alphabet: Alphabet, c, horizon: int) -> WindowSeparationReport:
    """Classify per-shift separation given only central windows of two points.

    The windows are symbol lists indexed -N..N.  For each |n| <= horizon the
    shifted distance is bracketed by the known terms plus a delta-weighted
    bound on the unseen tails.
    """
    c = Fraction(c)
    if c <= 0:
        raise NonpositiveConstant("separation constant must be positive")
    if len(wx) != len(wy) or len(wx) % 2 == 0:
        raise ValueError("windows must share an odd length")
    radius = len(wx) // 2
    if horizon > radius:
        raise ValueError("horizon exceeds window radius")
    delta = alphabet.delta
    times = {}
    for nshift in range(-horizon, horizon + 1):
        lower = Fraction(0)
        for j in range(-radius, radius + 1):
            mag = abs(wx[j + radius] - wy[j + radius])
            if mag:
                lower += mag * _pow2(-abs(j - nshift))
        unseen = _tail_weight(radius - nshift) + _tail_weight(radius + nshift)
        upper = lower + delta * unseen
        if lower > c:
            times[nshift] = "above"
        elif upper <= c:
            times[nshift] = "at_or_below"
        else:
            times[nshift] = "undecided"
    return WindowSeparationReport(c, horizon, times)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
