import itertools
import random

import pytest

from conftest import random_sequence
from expansive.sequences import (Alphabet, AlphabetMismatch,
                                 PatchedPeriodicSequence, metric_exact)
from expansive.systems import (NotEssential, Sft, SlidingBlockCode, SystemMap,
                               verify_conjugacy)

A2 = Alphabet(2)
A3 = Alphabet(3)
GOLDEN = Sft(2, [(1, 1), (1, 2), (2, 1)])
FULL2 = Sft.full_shift(2)


class TestSft:
    def test_full_shift_contains_everything(self, rng):
        for _ in range(50):
            x = random_sequence(rng, size=2)
            assert FULL2.contains(x)

    def test_golden_mean(self):
        all2 = PatchedPeriodicSequence.constant(A2, 2)
        assert not GOLDEN.contains(all2)
        all1 = PatchedPeriodicSequence.constant(A2, 1)
        assert GOLDEN.contains(all1)
        assert GOLDEN.contains(all1.with_patch([2], 0))
        assert not GOLDEN.contains(all1.with_patch([2, 2], 0))

    def test_membership_matches_pair_scan(self, rng):
        """Oracle: scan a wide window of adjacent pairs directly."""
        for _ in range(300):
            x = random_sequence(rng, size=2)
            expected = all(GOLDEN.has_edge(x.symbol_at(i), x.symbol_at(i + 1))
                           for i in range(-30, 30))
            assert GOLDEN.contains(x) == expected

    def test_shift_invariance(self, rng):
        for _ in range(100):
            x = random_sequence(rng, size=2)
            k = rng.randint(-6, 6)
            assert GOLDEN.contains(x) == GOLDEN.contains(x.shift(k))

    def test_pruning(self):
        # vertex 3 is a dead end and must be pruned; 1 <-> 2 remains
        s = Sft(3, [(1, 2), (2, 1), (1, 3)])
        assert s.core_vertices == frozenset({1, 2})
        with pytest.raises(NotEssential):
            Sft(2, [(1, 2)])

    def test_words(self):
        words2 = set(GOLDEN.words(2))
        assert words2 == {(1, 1), (1, 2), (2, 1)}
        assert all(GOLDEN.is_word(w) for w in GOLDEN.words(5))
        assert len(list(FULL2.words(4))) == 16

    def test_cycles(self):
        assert GOLDEN.cycle_vertices() == frozenset({1, 2})
        assert GOLDEN.shortest_cycle_word(1) == (1,)
        assert GOLDEN.shortest_cycle_word(2) == (2, 1)
        chain = Sft(3, [(1, 1), (1, 2), (2, 3), (3, 3)])
        assert chain.cycle_vertices() == frozenset({1, 3})

    def test_alphabet_mismatch(self):
        x3 = PatchedPeriodicSequence.constant(A3, 1)
        with pytest.raises(AlphabetMismatch):
            GOLDEN.contains(x3)


def swap_code():
    return SlidingBlockCode.relabeling(A3, {1: 3, 2: 2, 3: 1})


class TestSlidingBlockCode:
    def test_identity(self, rng):
        ident = SlidingBlockCode.identity(A3)
        for _ in range(50):
            x = random_sequence(rng)
            assert ident.apply(x) == x

    def test_relabeling(self):
        one = PatchedPeriodicSequence.constant(A3, 1)
        assert swap_code().apply(one) == PatchedPeriodicSequence.constant(A3, 3)

    def test_window_rule_against_direct_evaluation(self, rng):
        """Radius-1 rule on 2 symbols: compare against per-position application."""
        rule = {w: 1 + (w[0] + w[2]) % 2 for w in
                itertools.product((1, 2), repeat=3)}
        code = SlidingBlockCode(1, 1, rule, A2, A2)
        for _ in range(200):
            x = random_sequence(rng, size=2)
            y = code.apply(x)
            for i in range(-30, 31):
                assert y.symbol_at(i) == rule[x.window(i - 1, i + 2)]

    def test_commutes_with_shift(self, rng):
        rule = {w: 1 + (w[0] * w[1]) % 2 for w in
                itertools.product((1, 2), repeat=2)}
        code = SlidingBlockCode(0, 1, rule, A2, A2)
        for _ in range(200):
            x = random_sequence(rng, size=2)
            assert code.apply(x.shift(1)) == code.apply(x).shift(1)

    def test_totality_enforced(self):
        with pytest.raises(ValueError):
            SlidingBlockCode(0, 0, {(1,): 1}, A2, A2)

    def test_from_json(self, rng):
        spec = {"memory": 0, "anticipation": 1,
                "rule": {"11": "1", "12": "2", "21": "2", "22": "1"}}
        code = SlidingBlockCode.from_json(spec, A2, A2)
        assert code.radius == 1
        x = PatchedPeriodicSequence.periodic(A2, (1, 2))
        y = code.apply(x)
        for i in range(-10, 11):
            assert y.symbol_at(i) == 2  # every window is 12 or 21


class TestSystemMap:
    def test_shift_power(self, rng):
        sigma = SystemMap(1)
        for _ in range(50):
            x = random_sequence(rng)
            assert sigma.power(3).apply(x) == x.shift(3)
            assert sigma.power(-1).apply(sigma.apply(x)) == x

    def test_coded_power_matches_iteration(self, rng):
        rule = {w: 1 + (w[0] + w[1]) % 2 for w in
                itertools.product((1, 2), repeat=2)}
        code = SlidingBlockCode(0, 1, rule, A2, A2)
        f = SystemMap(1, code)
        f2 = f.power(2)
        for _ in range(100):
            x = random_sequence(rng, size=2)
            assert f2.apply(x) == f.apply(f.apply(x))

    def test_negative_power_requires_inverse(self):
        rule = {w: w[0] for w in itertools.product((1, 2), repeat=2)}
        code = SlidingBlockCode(0, 1, rule, A2, A2)
        from expansive.systems import NotInvertible
        with pytest.raises(NotInvertible):
            SystemMap(1, code).power(-1)

    def test_invertible_relabeling_power(self, rng):
        fwd = SlidingBlockCode.relabeling(A2, {1: 2, 2: 1})
        f = SystemMap(1, fwd, fwd)
        for _ in range(50):
            x = random_sequence(rng, size=2)
            assert f.power(-2).apply(f.power(2).apply(x)) == x


def pair_block_presentation(s: Sft):
    """Recode a vertex shift to its edge (2-block) presentation.

    The forward code reads pairs, the inverse recovers the first component
    with one step of memory; together they form a conjugacy with inverse
    radius 1.
    """
    pairs = sorted(s.words(2))
    enc = {p: i + 1 for i, p in enumerate(pairs)}
    target_alpha = Alphabet(len(pairs))
    fwd_rule = {}
    for w in itertools.product(range(1, s.vertex_count + 1), repeat=2):
        fwd_rule[w] = enc.get(w, 1)  # junk value on non-admissible words
    fwd = SlidingBlockCode(0, 1, fwd_rule, s.alphabet, target_alpha)
    dec = {i: p for p, i in enc.items()}
    inv_rule = {}
    for w in itertools.product(range(1, len(pairs) + 1), repeat=2):
        inv_rule[w] = dec[w[0]][1]
    inv = SlidingBlockCode(1, 0, inv_rule, target_alpha, s.alphabet)
    edges = {(enc[p], enc[q]) for p in pairs for q in pairs if p[1] == q[0]}
    return fwd, inv, Sft(len(pairs), edges)


class TestVerifyConjugacy:
    def test_identity(self):
        ident = SlidingBlockCode.identity(A2)
        res = verify_conjugacy(ident, ident, GOLDEN, GOLDEN, 6)
        assert res.verified

    def test_involution_on_full_shift(self):
        swap = SlidingBlockCode.relabeling(A2, {1: 2, 2: 1})
        res = verify_conjugacy(swap, swap, FULL2, FULL2, 6)
        assert res.verified

    def test_pair_block_conjugacy(self):
        fwd, inv, edge_shift = pair_block_presentation(GOLDEN)
        res = verify_conjugacy(fwd, inv, GOLDEN, edge_shift, 7)
        assert res.verified

    def test_broken_inverse_found(self):
        swap = SlidingBlockCode.relabeling(A2, {1: 2, 2: 1})
        broken = SlidingBlockCode.relabeling(A2, {1: 2, 2: 2})
        res = verify_conjugacy(swap, broken, FULL2, FULL2, 6)
        assert not res.verified
        assert res.counterexample is not None
        assert len(res.counterexample) <= 3  # within 2r+1 for r=1

    def test_conjugacy_transports_agreement(self, rng):
        """metric(code x, code y) < 2^-(N+r') forces metric(x, y) <= 2d 2^-N."""
        fwd, inv, _ = pair_block_presentation(GOLDEN)
        delta = GOLDEN.alphabet.delta
        for _ in range(200):
            x = random_sequence(rng, size=2)
            if not GOLDEN.contains(x):
                continue
            n = rng.randint(1, 6)
            y = x.with_patch([x.symbol_at(-n - 9)], -n - 9)
            if not GOLDEN.contains(y):
                continue
            u, v = fwd.apply(x), fwd.apply(y)
            if metric_exact(u, v) < 1 / (2 ** (n + inv.radius) * 1):
                from fractions import Fraction
                assert metric_exact(x, y) <= Fraction(2 * delta, 2 ** n)
