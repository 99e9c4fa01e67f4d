import random
from fractions import Fraction

import pytest

from expansive.germ import (DivisionByZeroGerm, Germ, GermParseError,
                            HyperInteger, InfiniteGerm,
                            PerturbationNotInfinitesimal, classify, compare,
                            evaluate_expression, germ_arith, infinitely_close,
                            lemma_transfer_check, parse_germ, standard_part)

N = Germ.variable()


def random_germ(rng, max_deg=4, zero_ok=True):
    num = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, max_deg + 1)))
    den = ()
    while not any(den):
        den = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, max_deg + 1)))
    g = Germ(num, den)
    if not zero_ok and g.is_zero:
        return Germ((1,) + num, den)
    return g


def test_arith_examples():
    assert germ_arith(N, Germ.from_fraction(1), "add") == N + 1
    assert germ_arith(N + 1, N, "sub") == Germ.from_fraction(1)
    d = germ_arith(Germ.from_fraction(1), N * N + 1, "div")
    assert d.is_infinitesimal
    with pytest.raises(DivisionByZeroGerm):
        germ_arith(N, Germ.from_fraction(0), "div")


def test_compare_examples():
    # n^2/(n+1) vs n-1: difference is 1/(n+1), positive for large n
    lhs = (N * N) / (N + 1)
    rhs = N - 1
    assert compare(lhs, rhs) == 1
    for n in (10, 100, 1000):
        assert lhs.evaluate(n) > rhs.evaluate(n)
    assert compare(2 * N + 5, 3 * N) == -1
    assert 2 * Germ.from_fraction(5).evaluate(1) + 5 > 3  # crossover is at n=5
    assert (2 * N + 5).evaluate(6) < (3 * N).evaluate(6)
    g = random_germ(random.Random(1))
    assert compare(g, g) == 0


def test_standard_part():
    g = (3 * N + 2) / (N + 1)
    assert standard_part(g) == 3
    # long-division cross-check by evaluation at a huge argument
    assert abs(float(g.evaluate(10 ** 6)) - 3) < 1e-5
    assert standard_part(Germ.from_fraction(1) / (N * N + 1)) == 0
    assert standard_part(Germ.from_fraction(5)) == 5
    with pytest.raises(InfiniteGerm):
        standard_part(N)


def test_infinitely_close():
    assert infinitely_close((N + 1) / N, Germ.from_fraction(1))
    assert not infinitely_close(N, N + 1)
    assert infinitely_close((2 * N * N + N) / (N * N), Germ.from_fraction(2))
    assert classify((2 * N * N + N) / (N * N) - 2).kind == "infinitesimal"


def test_classification():
    assert classify(Germ.from_fraction(0)).kind == "infinitesimal"
    assert classify(N).kind == "infinite"
    assert classify(N).sign == 1
    assert classify(-N * N + N).sign == -1
    c = classify((3 * N + 2) / (N + 1))
    assert c.kind == "appreciable" and c.standard_part == 3


def test_field_axioms_random(rng):
    for _ in range(1000):
        a, b, c = (random_germ(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        if not a.is_zero:
            assert a * (Germ.from_fraction(1) / a) == Germ.from_fraction(1)
        assert a - a == Germ.from_fraction(0)


def test_order_axioms_random(rng):
    for _ in range(1000):
        a, b, c = (random_germ(rng) for _ in range(3))
        assert (compare(a, b), compare(b, a)) in ((0, 0), (1, -1), (-1, 1))
        # translation invariance, positive-multiplication invariance
        assert compare(a + c, b + c) == compare(a, b)
        pos = random_germ(rng) * random_germ(rng)
        pos = pos * pos + Germ.from_fraction(1)  # strictly positive
        assert compare(a * pos, b * pos) == compare(a, b)
        # transitivity spot check
        if compare(a, b) <= 0 and compare(b, c) <= 0:
            assert compare(a, c) <= 0


def test_st_idempotent(rng):
    for _ in range(500):
        g = random_germ(rng)
        if g.is_infinite:
            continue
        s = standard_part(g)
        assert (g - s).is_infinitesimal
        assert standard_part(g - s) == 0


def test_eventual_order_matches_evaluation(rng):
    for _ in range(300):
        a, b = random_germ(rng), random_germ(rng)
        d = a - b
        if d.is_zero:
            continue
        bound = d.comparison_bound()
        for n in (bound + 1, bound + 17, bound + 301):
            assert (d.evaluate(n) > 0) == (d.sign() > 0)


def test_hyperinteger():
    lam = HyperInteger.from_polynomial([0, 2])  # 2n
    assert lam.is_infinite and lam.is_positive_infinite
    assert not HyperInteger.from_int(-3).is_infinite
    neg = HyperInteger.from_polynomial([0, -1])
    assert neg.is_infinite and not neg.is_positive_infinite
    with pytest.raises(ValueError):
        HyperInteger(N / 2)
    assert (lam + HyperInteger.from_int(1)).germ == 2 * N + 1


class TestLemmaCheck:
    def test_both_parts(self):
        one, two = Germ.from_fraction(1), Germ.from_fraction(2)
        res = lemma_transfer_check(one, two, one + 1 / N, two - 1 / N,
                                   Fraction(3, 4))
        assert res.part1_triggered and res.part1_verified
        assert res.part2_triggered and res.part2_verified
        assert res.summary == "both_hold"
        assert res.st_distance == 1

    def test_not_applicable(self):
        zero = Germ.from_fraction(0)
        res = lemma_transfer_check(zero, zero, 1 / N, -1 / N, 1)
        assert res.summary == "not_applicable"

    def test_part2(self):
        zero, one = Germ.from_fraction(0), Germ.from_fraction(1)
        res = lemma_transfer_check(zero, one, 1 / N, one, Fraction(1, 2))
        assert res.part2_triggered and res.part2_verified
        assert res.st_distance == 1

    def test_precondition(self):
        zero, one = Germ.from_fraction(0), Germ.from_fraction(1)
        with pytest.raises(PerturbationNotInfinitesimal):
            lemma_transfer_check(zero, one, one, one, 1)

    def test_random_quadruples(self, rng):
        """Both implications hold for arbitrary infinitesimal perturbations."""
        for _ in range(1000):
            a = Germ.from_fraction(Fraction(rng.randint(-8, 8), rng.randint(1, 8)))
            b = Germ.from_fraction(Fraction(rng.randint(-8, 8), rng.randint(1, 8)))
            eps1 = random_infinitesimal(rng)
            eps2 = random_infinitesimal(rng)
            r = Fraction(rng.randint(1, 8), rng.randint(1, 8))
            res = lemma_transfer_check(a, b, a + eps1, b + eps2, r)
            if res.part1_triggered:
                assert res.part1_verified
            if res.part2_triggered:
                assert res.part2_verified


def random_infinitesimal(rng):
    num = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 2)))
    den_deg = len(num) + rng.randint(1, 2)
    den = tuple(rng.randint(-4, 4) for _ in range(den_deg - 1)) + (rng.randint(1, 4),)
    return Germ(num, den)


class TestParser:
    def test_literal(self):
        g = parse_germ("(3n^2+2)/(n+1)")
        assert g == (3 * N * N + 2) / (N + 1)

    def test_calculator(self):
        assert str(evaluate_expression("st((3n+2)/(n+1))")) == "3"
        assert evaluate_expression("compare(n^2/(n+1), n-1)") == "Greater"
        assert evaluate_expression("close((n+1)/n, 1)") is True
        assert evaluate_expression("classify(1/(n^2+1))") == "infinitesimal"

    def test_implicit_multiplication(self):
        assert parse_germ("3n^2") == 3 * N * N
        assert parse_germ("(n+1)(n-1)") == N * N - 1

    def test_rejects_garbage(self):
        with pytest.raises(GermParseError):
            parse_germ("st(1,2)")
        with pytest.raises(GermParseError):
            parse_germ("n +")
        with pytest.raises(GermParseError):
            parse_germ("compare(1,2) + 1")
