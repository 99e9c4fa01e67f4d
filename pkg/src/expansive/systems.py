"""Dynamical systems over symbolic points.

Subshifts of finite type are vertex shifts: the space of bi-infinite paths in
a finite directed graph, with the shift map.  Sliding block codes are the
computable shift-commuting maps between such spaces, and SystemMap packages
shift powers and coded maps under composition and powers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

from .sequences import (Alphabet, AlphabetMismatch, PatchedPeriodicSequence, Word)


class NotEssential(ValueError):
    """Raised when a graph has no bi-infinite paths at all."""


class NotInvertible(ValueError):
    """Raised when a negative power is requested of a map with no known inverse."""


class Sft:
    """A vertex shift: bi-infinite paths in a directed graph on vertices 1..k.

    Construction prunes the graph to its essential core (every surviving vertex
    has an incoming and an outgoing edge among survivors); the pruned part can
    never appear in a bi-infinite path.  Membership tests use the original
    edge set, which gives the same answer: a sequence whose adjacent pairs are
    all edges is itself a bi-infinite path, so it lives in the core.
    """

    def __init__(self, vertex_count: int, edges: Iterable[Tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError("vertex count must be >= 1")
        self.vertex_count = vertex_count
        self.alphabet = Alphabet(vertex_count)
        edge_set = set()
        for u, v in edges:
            self.alphabet.check_symbol(u)
            self.alphabet.check_symbol(v)
            edge_set.add((u, v))
        self.edges: FrozenSet[Tuple[int, int]] = frozenset(edge_set)
        self.core_vertices, self.core_edges = self._prune()
        if not self.core_vertices:
            raise NotEssential("graph has no bi-infinite paths")
        self._succ = {u: sorted(v for (a, v) in self.core_edges if a == u)
                      for u in self.core_vertices}
        self._pred = {v: sorted(u for (u, a) in self.core_edges if a == v)
                      for v in self.core_vertices}

    def _prune(self):
        verts = set(range(1, self.vertex_count + 1))
        edges = set(self.edges)
        while True:
            outs = {u for u, _ in edges}
            ins = {v for _, v in edges}
            keep = {v for v in verts if v in outs and v in ins}
            if keep == verts:
                return frozenset(verts), frozenset(edges)
            verts = keep
            edges = {(u, v) for (u, v) in edges if u in verts and v in verts}
            if not verts:
                return frozenset(), frozenset()

    # -- membership and words -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def contains(self, x: PatchedPeriodicSequence) -> bool:
        """True when every adjacent symbol pair of x is an edge.

        It suffices to check one full period of each tail, the patch, and the
        two junctions; the window below covers all of them.
        """
        if x.alphabet.size != self.vertex_count:
            raise AlphabetMismatch(
                f"sequence over 1..{x.alphabet.size}, shift over 1..{self.vertex_count}")
        lo = x.patch_start - len(x.left) - 1
        hi = x.patch_end + len(x.right) + 1
        return all(self.has_edge(x.symbol_at(i), x.symbol_at(i + 1))
                   for i in range(lo, hi))

    def is_word(self, w: Sequence[int]) -> bool:
        return all(self.has_edge(w[i], w[i + 1]) for i in range(len(w) - 1))

    def words(self, length: int) -> Iterator[Word]:
        """All admissible words of the given length (paths in the core)."""
        if length == 0:
            yield ()
            return
        stack = [(v,) for v in sorted(self.core_vertices)]
        while stack:
            w = stack.pop()
            if len(w) == length:
                yield w
            else:
                for v in reversed(self._succ[w[-1]]):
                    stack.append(w + (v,))

    def cycle_vertices(self) -> FrozenSet[int]:
        """Core vertices that lie on some cycle."""
        out = set()
        for v in self.core_vertices:
            seen = set(self._succ[v])
            frontier = list(seen)
            while frontier:
                u = frontier.pop()
                if u == v:
                    break
                for w in self._succ[u]:
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
            if v in seen:
                out.add(v)
        return frozenset(out)

    def shortest_cycle_word(self, v: int) -> Word:
        """Deterministic shortest cycle through v, as the word (v, c1, .., c_末-1).

        Repeating the word toward either infinity and gluing at v gives a valid
        path.  Ties between equal-length cycles break lexicographically.
        """
        dist_to_v: Dict[int, int] = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for p in self._pred[u]:
                    if p not in dist_to_v:
                        dist_to_v[p] = dist_to_v[u] + 1
                        nxt.append(p)
            frontier = nxt
        best = min((dist_to_v[u] for u in self._succ[v] if u in dist_to_v),
                   default=None)
        if best is None:
            raise ValueError(f"vertex {v} lies on no cycle")
        cycle = [v]
        current = min(u for u in self._succ[v] if dist_to_v.get(u, -1) == best)
        remaining = best
        while current != v:
            cycle.append(current)
            remaining -= 1
            current = min(u for u in self._succ[current]
                          if dist_to_v.get(u, -1) == remaining)
        return tuple(cycle)

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count,
                "edges": sorted(list(e) for e in self.edges)}

    @staticmethod
    def from_json(data: dict) -> "Sft":
        return Sft(int(data["vertices"]), [tuple(e) for e in data["edges"]])

    @staticmethod
    def full_shift(k: int) -> "Sft":
        return Sft(k, itertools.product(range(1, k + 1), repeat=2))

    def __repr__(self):
        return f"Sft(vertices={self.vertex_count}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class SlidingBlockCode:
    """A local rule applied along the sequence: y(i) = rule(x(i-m .. i+a)).

    The rule must be total on words of length memory + anticipation + 1 over
    the source alphabet.
    """

    memory: int
    anticipation: int
    rule: Dict[Word, int]
    source_alphabet: Alphabet
    target_alphabet: Alphabet

    def __post_init__(self):
        if self.memory < 0 or self.anticipation < 0:
            raise ValueError("memory and anticipation must be >= 0")
        width = self.window_width
        for w in itertools.product(range(1, self.source_alphabet.size + 1), repeat=width):
            if w not in self.rule:
                raise ValueError(f"rule is missing word {w}")
            self.target_alphabet.check_symbol(self.rule[w])

    @property
    def window_width(self) -> int:
        return self.memory + self.anticipation + 1

    @property
    def radius(self) -> int:
        return max(self.memory, self.anticipation)

    def apply(self, x: PatchedPeriodicSequence) -> PatchedPeriodicSequence:
        """Image of a patched-periodic point; tails map to tails."""
        if x.alphabet != self.source_alphabet:
            raise AlphabetMismatch("sequence is not over the code's source alphabet")

        def out(i: int) -> int:
            return self.rule[x.window(i - self.memory, i + self.anticipation + 1)]

        # y(i) is left-tail periodic once the whole input window sits in the
        # left tail (i + a < patch start), and right-periodic symmetrically.
        start = x.patch_start - self.anticipation
        end = x.patch_end + self.memory
        left = tuple(out(start - len(x.left) + j) for j in range(len(x.left)))
        right = tuple(out(end + j) for j in range(len(x.right)))
        patch = tuple(out(i) for i in range(start, end))
        return PatchedPeriodicSequence(self.target_alphabet, left, patch, start, right)

    def slide_word(self, w: Sequence[int]) -> Word:
        """Apply the rule at every position of w where the window fits."""
        width = self.window_width
        return tuple(self.rule[tuple(w[i:i + width])]
                     for i in range(len(w) - width + 1))

    def compose(self, inner: "SlidingBlockCode") -> "SlidingBlockCode":
        """The code computing self after inner (window widths add)."""
        if inner.target_alphabet != self.source_alphabet:
            raise AlphabetMismatch("inner code's target must match outer code's source")
        m = self.memory + inner.memory
        a = self.anticipation + inner.anticipation
        rule = {}
        for w in itertools.product(range(1, inner.source_alphabet.size + 1),
                                   repeat=m + a + 1):
            mid = inner.slide_word(w)
            rule[w] = self.rule[mid]
        return SlidingBlockCode(m, a, rule, inner.source_alphabet, self.target_alphabet)

    @staticmethod
    def identity(alphabet: Alphabet) -> "SlidingBlockCode":
        rule = {(s,): s for s in range(1, alphabet.size + 1)}
        return SlidingBlockCode(0, 0, rule, alphabet, alphabet)

    @staticmethod
    def relabeling(alphabet: Alphabet, mapping: Dict[int, int],
                   target: Optional[Alphabet] = None) -> "SlidingBlockCode":
        rule = {(s,): mapping[s] for s in range(1, alphabet.size + 1)}
        return SlidingBlockCode(0, 0, rule, alphabet, target or alphabet)

    @staticmethod
    def from_json(data: dict, source: Alphabet, target: Alphabet) -> "SlidingBlockCode":
        def parse_word(text: str) -> Word:
            if "," in text:
                return tuple(int(p) for p in text.split(","))
            return tuple(int(ch) for ch in text)

        rule = {parse_word(k): int(v) for k, v in data["rule"].items()}
        return SlidingBlockCode(int(data["memory"]), int(data["anticipation"]),
                                rule, source, target)


@dataclass(frozen=True)
class SystemMap:
    """Either a pure shift power or a sliding block code followed by a shift power.

    A coded map is invertible only when an explicit inverse code is attached;
    shift powers are always invertible.
    """

    shift_amount: int = 1
    code: Optional[SlidingBlockCode] = None
    inverse_code: Optional[SlidingBlockCode] = None

    @property
    def invertible(self) -> bool:
        return self.code is None or self.inverse_code is not None

    def apply(self, x: PatchedPeriodicSequence) -> PatchedPeriodicSequence:
        y = self.code.apply(x) if self.code is not None else x
        return y.shift(self.shift_amount)

    def power(self, k: int) -> "SystemMap":
        """The map applied exactly k times (k may be negative when invertible)."""
        if k == 0:
            alph = self.code.source_alphabet if self.code else None
            ident = SlidingBlockCode.identity(alph) if alph else None
            return SystemMap(0, ident, ident)
        if k < 0:
            return self.inverse().power(-k)
        if self.code is None:
            return SystemMap(self.shift_amount * k)
        composed = self.code
        inv = self.inverse_code
        for _ in range(k - 1):
            composed = composed.compose(self.code)
            inv = inv.compose(self.inverse_code) if inv is not None else None
        return SystemMap(self.shift_amount * k, composed, inv)

    def inverse(self) -> "SystemMap":
        if self.code is None:
            return SystemMap(-self.shift_amount)
        if self.inverse_code is None:
            raise NotInvertible("coded map has no attached inverse code")
        return SystemMap(-self.shift_amount, self.inverse_code, self.code)


def compose_power(f: SystemMap, k: int) -> SystemMap:
    return f.power(k)


def apply_code(code: SlidingBlockCode, x: PatchedPeriodicSequence) -> PatchedPeriodicSequence:
    return code.apply(x)


def sft_contains(s: Sft, x: PatchedPeriodicSequence) -> bool:
    return s.contains(x)


# ---------------------------------------------------------------------------
# Finite-horizon conjugacy verification.


@dataclass(frozen=True)
class ConjugacyCheck:
    """Finite-horizon certificate that (code, inverse) conjugate S onto T.

    verified means: on every admissible word up to the horizon, code maps
    S-words to T-words, inverse maps back to the exact middle, and the same in
    the other direction; plus shift commutation on sample points.  This is a
    certificate at the stated horizon, not a proof.
    """

    verified: bool
    horizon: int
    counterexample: Optional[Word] = None
    direction: Optional[str] = None


def verify_conjugacy(code: SlidingBlockCode, inverse: SlidingBlockCode,
                     s: Sft, t: Sft, horizon: int) -> ConjugacyCheck:
    width = code.window_width + inverse.window_width - 1
    if horizon < width:
        horizon = width

    def check_direction(outer: SlidingBlockCode, back: SlidingBlockCode,
                        src: Sft, dst: Sft, name: str) -> Optional[ConjugacyCheck]:
        for length in range(width, horizon + 1):
            for w in src.words(length):
                image = outer.slide_word(w)
                if not dst.is_word(image):
                    return ConjugacyCheck(False, horizon, w, name + ":image")
                middle = back.slide_word(image)
                lo = outer.memory + back.memory
                if middle != w[lo:lo + len(middle)]:
                    return ConjugacyCheck(False, horizon, w, name + ":roundtrip")
        return None

    bad = check_direction(code, inverse, s, t, "forward")
    if bad:
        return bad
    bad = check_direction(inverse, code, t, s, "backward")
    if bad:
        return bad

    # shift commutation on concrete points built from cycles of S
    for v in sorted(s.cycle_vertices()):
        word = s.shortest_cycle_word(v)
        x = PatchedPeriodicSequence.periodic(s.alphabet, word)
        if code.apply(x.shift(1)) != code.apply(x).shift(1):
            return ConjugacyCheck(False, horizon, word, "commutation")
    return ConjugacyCheck(True, horizon)
