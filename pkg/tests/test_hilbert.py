"""Hilbert symbols against the congruence oracle, plus algebraic identities."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatsqrt.hilbert import hasse_invariant, hilbert_symbol, reciprocity_check
from quatsqrt.places import REAL, Place
from quatsqrt.rationals import squarefree_part

from oracles import hilbert_oracle_finite, hilbert_oracle_real

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
PLACES = (REAL,) + tuple(Place.finite(p) for p in SMALL_PRIMES)

nonzero_ints = st.integers(min_value=-60, max_value=60).filter(lambda n: n != 0)
nonzero_rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
).filter(lambda q: q != 0)


class TestKnownValues:
    def test_classics(self):
        two = Place.finite(2)
        assert hilbert_symbol(-1, -1, REAL) == -1
        assert hilbert_symbol(-1, -1, two) == -1
        assert hilbert_symbol(-1, -1, Place.finite(3)) == 1
        assert hilbert_symbol(2, 3, two) == -1
        assert hilbert_symbol(2, 3, Place.finite(3)) == -1
        assert hilbert_symbol(2, 3, Place.finite(5)) == 1
        assert hilbert_symbol(1, 1, REAL) == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            hilbert_symbol(0, 1, REAL)
        with pytest.raises(ValueError):
            hilbert_symbol(1, 0, REAL)

    def test_square_class_invariance(self):
        v = Place.finite(3)
        assert hilbert_symbol(Fraction(8, 9), 15, v) == hilbert_symbol(2, 15, v)
        assert hilbert_symbol(Fraction(-1, 2), 5, v) == hilbert_symbol(-2, 5, v)


class TestAgainstOracle:
    def test_moderate_box(self):
        # The acceptance suite runs the full |a|,|b| <= 30 box; keep a fast slice here.
        for a in range(-12, 13):
            for b in range(-12, 13):
                if a == 0 or b == 0:
                    continue
                assert hilbert_symbol(a, b, REAL) == hilbert_oracle_real(a, b), (a, b)
                for p in (2, 3, 5):
                    got = hilbert_symbol(a, b, Place.finite(p))
                    want = hilbert_oracle_finite(a, b, p)
                    assert got == want, (a, b, p)

    @given(nonzero_ints, nonzero_ints, st.sampled_from(SMALL_PRIMES))
    @settings(max_examples=60)
    def test_random_against_oracle(self, a, b, p):
        assert hilbert_symbol(a, b, Place.finite(p)) == hilbert_oracle_finite(a, b, p)


class TestIdentities:
    @given(nonzero_rationals, nonzero_rationals, st.sampled_from(PLACES))
    def test_symmetry_and_values(self, a, b, v):
        s = hilbert_symbol(a, b, v)
        assert s in (-1, 1)
        assert s == hilbert_symbol(b, a, v)
        assert s * s == 1  # the symbol is its own inverse

    @given(
        nonzero_rationals, nonzero_rationals, nonzero_rationals, st.sampled_from(PLACES)
    )
    def test_bimultiplicative(self, a, b, c, v):
        assert hilbert_symbol(a * b, c, v) == hilbert_symbol(a, c, v) * hilbert_symbol(
            b, c, v
        )

    @given(nonzero_rationals, st.sampled_from(PLACES))
    def test_norm_identities(self, a, v):
        assert hilbert_symbol(a, -a, v) == 1
        if a != 1:
            assert hilbert_symbol(a, 1 - a, v) == 1
        assert hilbert_symbol(a, a * a, v) == 1


class TestHasseInvariant:
    def test_low_dimensions(self):
        assert hasse_invariant([], REAL) == 1
        assert hasse_invariant([Fraction(-7)], Place.finite(2)) == 1

    def test_matches_pair_product(self):
        entries = [Fraction(2), Fraction(-3), Fraction(5, 7)]
        for v in PLACES:
            expected = (
                hilbert_symbol(entries[0], entries[1], v)
                * hilbert_symbol(entries[0], entries[2], v)
                * hilbert_symbol(entries[1], entries[2], v)
            )
            assert hasse_invariant(entries, v) == expected

    def test_zero_entry_rejected(self):
        with pytest.raises(ValueError):
            hasse_invariant([1, 0], REAL)


class TestReciprocity:
    def test_examples(self):
        assert reciprocity_check(2, 3)
        assert reciprocity_check(-1, -1)
        assert reciprocity_check(Fraction(-15, 7), Fraction(9, 22))

    @given(nonzero_rationals, nonzero_rationals)
    @settings(max_examples=200)
    def test_random(self, a, b):
        assert reciprocity_check(a, b)

    def test_product_really_needs_every_place(self):
        # (2,3) is -1 at 2 and 3 and +1 elsewhere; dropping a place breaks it.
        sa, _ = squarefree_part(2)
        sb, _ = squarefree_part(3)
        symbols = [hilbert_symbol(2, 3, v) for v in PLACES]
        assert symbols.count(-1) == 2
