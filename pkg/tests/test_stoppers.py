import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardstrings.errors import EmptyInput, InvalidLevel, MixedLengths, NonBinarySymbol, NotPowerOfTwo
from hardstrings.stoppers import (
    pad_to_power_of_two,
    stopper,
    stopper_runs,
    stoppers_transform,
    transform_set,
    transformed_length,
)
from hardstrings.strings import SymbolString, edit_distance, hamming, stopper_symbol

from oracles import levenshtein, stoppers_tau


def _plain(s: SymbolString) -> list:
    """Package symbols in the oracle's tagged form."""
    return [str(c) if c in (0, 1) else ("c", c - 3) for c in s.codes]


def test_stopper_lengths():
    assert stopper(1) == SymbolString([stopper_symbol(1)] * 12)
    assert stopper(2) == SymbolString([stopper_symbol(2)] * 24)
    with pytest.raises(InvalidLevel):
        stopper(0)


def test_padding():
    assert pad_to_power_of_two("101").to_text() == "1010"
    assert pad_to_power_of_two("10").to_text() == "10"
    assert pad_to_power_of_two("10110").to_text() == "10110000"
    with pytest.raises(EmptyInput):
        pad_to_power_of_two("")
    with pytest.raises(NonBinarySymbol):
        pad_to_power_of_two("1$")
    with pytest.raises(NotPowerOfTwo):
        pad_to_power_of_two("101", 6)


def test_transform_examples():
    assert stoppers_transform("0").to_text() == "0"
    out = stoppers_transform("01")
    assert out == SymbolString([0] + [stopper_symbol(1)] * 12 + [1])
    assert len(stoppers_transform("01101001")) == 152


def test_transform_errors():
    with pytest.raises(NotPowerOfTwo):
        stoppers_transform("011")
    with pytest.raises(NonBinarySymbol):
        stoppers_transform("0$")
    with pytest.raises(NotPowerOfTwo):
        transformed_length(6)


@pytest.mark.parametrize("d", [1, 2, 4, 8, 16, 32])
def test_transform_agrees_with_oracle(d):
    for v in (0, 1, (1 << d) - 1, 0b1011 % (1 << d)):
        bits = format(v, f"0{d}b")
        tau = stoppers_transform(bits)
        assert _plain(tau) == stoppers_tau(bits)
        assert len(tau) == transformed_length(d) == d * (1 + 6 * (d.bit_length() - 1))


def test_transform_set():
    a, b = transform_set(["01", "10"])
    assert a.to_text() == "0 " + "c1 " * 12 + "1"
    assert b.to_text() == "1 " + "c1 " * 12 + "0"
    assert transform_set([]) == []
    padded = transform_set(["101", "011"])
    assert [len(x) for x in padded] == [transformed_length(4)] * 2
    with pytest.raises(MixedLengths):
        transform_set(["01", "011"])


@pytest.mark.parametrize("d", [1, 2, 4])
def test_edit_equals_hamming_exhaustive_against_textbook_dp(d):
    xs = ["".join(bits) for bits in itertools.product("01", repeat=d)]
    taus = {x: stoppers_tau(x) for x in xs}
    for x, y in itertools.combinations_with_replacement(xs, 2):
        assert levenshtein(taus[x], taus[y]) == hamming(x, y)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([8, 16]).flatmap(
    lambda d: st.tuples(st.text("01", min_size=d, max_size=d), st.text("01", min_size=d, max_size=d))))
def test_edit_equals_hamming_random(pair):
    x, y = pair
    assert edit_distance(stoppers_transform(x), stoppers_transform(y)) == hamming(x, y)


def test_stopper_runs():
    runs = stopper_runs(stoppers_transform("0110"))
    assert runs == {1: [12, 12], 2: [24]}
