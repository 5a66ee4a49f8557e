import numpy as np
import pytest

from hardstrings.errors import (
    AlphabetClash,
    EmptySet,
    LengthMismatch,
    ParamError,
    ReductionError,
    TooLarge,
)
from hardstrings.gapstrings import GapMode, GapString, edit_gap, mismatch_gap, verify_gap
from hardstrings.instance import Instance, Mode
from hardstrings.reduction import (
    bichromatic_closest_pair,
    block_start,
    build_text,
    dict_lookup_via_text,
    offset_scan,
    transform_instance,
    verify_edit_offsets,
    verify_offset_exclusion,
    wrap_query,
)
from hardstrings.solvers import dict_lookup_brute
from hardstrings.stoppers import transformed_length
from hardstrings.strings import SymbolString, edit_distance, hamming

from oracles import levenshtein

GAP2 = GapString("$#$#", 2, GapMode.MISMATCH)


def pairs(answers):
    return [(a.dict_index, a.distance) for a in answers]


def test_build_text_examples():
    art = build_text(Instance(["01", "11"], mode=Mode.EDIT))
    assert art.text.to_text() == "$$##01$$##11$$##"
    assert len(art.text) == 3 * 4 + 2 * 2
    art = build_text(Instance(["01"]), GAP2)
    assert art.text.to_text() == "$#$#01$#$#"
    with pytest.raises(AlphabetClash):
        build_text(Instance(["$0"]))


def test_build_text_layout():
    strings = ["0110", "1100", "0001"]
    art = build_text(Instance(strings))
    assert len(art.text) == 3 * 12 + 2 * 4
    for i, s in enumerate(strings, start=1):
        start = block_start(i, 4)
        assert start == (3 * (i - 1) + 2) * 4 + 1
        assert art.text[start - 1:start + 3].to_text() == s
        assert art.text[start - 1 - 8:start - 1] == art.gap.symbols
    assert art.dictionary() == [SymbolString.parse(s) for s in strings]


def test_build_text_preconditions():
    with pytest.raises(EmptySet):
        build_text(Instance([]))
    with pytest.raises(ParamError):
        build_text(Instance(["01"], k=2))
    with pytest.raises(ParamError):
        build_text(Instance(["0101"], k=2), epsilon=1.0)
    with pytest.raises(ParamError):
        build_text(Instance(["01"], mode=Mode.EDIT), GAP2)
    with pytest.raises(LengthMismatch):
        build_text(Instance(["0101"]), GAP2)


def test_wrap_query():
    assert wrap_query("00", GAP2).to_text() == "$#$#00$#$#"
    assert wrap_query("01", edit_gap(2)).to_text() == "$$##01$$##"
    with pytest.raises(AlphabetClash):
        wrap_query("0$", GAP2)
    with pytest.raises(LengthMismatch):
        wrap_query("000", GAP2)


def test_lookup_examples():
    art = build_text(Instance(["01", "11"]), GAP2)
    assert pairs(dict_lookup_via_text(art, "00", 1)) == [(1, 1)]
    assert pairs(dict_lookup_via_text(art, "00", 0)) == []
    for mode in Mode:
        art = build_text(Instance(["01", "11"], mode=mode), GAP2 if mode is Mode.HAMMING else None)
        assert pairs(dict_lookup_via_text(art, "01", 0)) == [(1, 0)]


def _random_case(rng, max_d, max_count):
    d = int(rng.integers(2, max_d + 1))
    strings = [SymbolString(r) for r in rng.integers(0, 2, (int(rng.integers(1, max_count + 1)), d)).tolist()]
    q = SymbolString(rng.integers(0, 2, d).tolist())
    return strings, q, int(rng.integers(0, d))


@pytest.mark.parametrize("mode", list(Mode))
def test_lookup_matches_brute(mode):
    rng = np.random.default_rng(21)
    for _ in range(150):
        strings, q, k = _random_case(rng, 8, 8)
        inst = Instance(strings, k, mode)
        art = build_text(inst)
        assert pairs(dict_lookup_via_text(art, q, k)) == pairs(dict_lookup_brute(inst, q, k))
        if mode is Mode.HAMMING:
            assert verify_offset_exclusion(art, q, k)
        else:
            assert verify_edit_offsets(art, q, k)


def _edit_offsets_oracle(strings, q, k):
    d = len(q)
    g = "$" * d + "#" * d
    text = g + "".join(s + g for s in strings)
    pattern = g + q + g
    best = min(levenshtein(q, s) for s in strings)
    for s in range(len(text)):
        for length in range(max(0, len(pattern) - k), len(pattern) + k + 1):
            if s + length > len(text):
                break
            e = levenshtein(text[s:s + length], pattern)
            if e <= k and best > e:
                return False
    return True


def test_edit_offsets_against_substring_oracle():
    assert verify_edit_offsets(build_text(Instance(["01", "11"], mode=Mode.EDIT)), "00", 1)
    rng = np.random.default_rng(5)
    for _ in range(15):
        strings, q, k = _random_case(rng, 4, 4)
        art = build_text(Instance(strings, k, Mode.EDIT))
        bits = [s.to_text() for s in strings]
        assert verify_edit_offsets(art, q, k) == _edit_offsets_oracle(bits, q.to_text(), k)


def test_edit_offsets_limits():
    art = build_text(Instance(["0101"] * 4, mode=Mode.EDIT))
    with pytest.raises(TooLarge):
        verify_edit_offsets(art, "0000", 1, limit=100)
    with pytest.raises(ParamError):
        verify_offset_exclusion(art, "0000", 1)


def test_offset_scan_windows():
    art = build_text(Instance(["01", "11"]), GAP2)
    scan = offset_scan(art, "00")
    assert len(scan) == len(art.text) - 5 * 2 + 1
    assert [s for s, _, aligned in scan if aligned] == [1, 7]
    pattern = wrap_query("00", GAP2)
    for s, dist, _ in scan:
        assert dist == hamming(art.text[s - 1:s - 1 + 10], pattern)


def test_failing_gap_negative_control():
    # "$$##" fails the gap property at d=2 but happens not to admit a close
    # misaligned window; a constant gap at d=4 does.
    assert not verify_gap("$$##", 2)
    art = build_text(Instance(["01", "11"], k=1), "$$##")
    assert art.gap.mode is GapMode.CUSTOM
    bad = build_text(Instance(["0000", "0000"], k=3), "$" * 8)
    assert not verify_offset_exclusion(bad, "0000", 3)
    with pytest.raises(ReductionError):
        dict_lookup_via_text(bad, "0000", 3)


def test_transform_instance():
    out = transform_instance(Instance(["01", "10"], k=1))
    assert out.mode is Mode.EDIT and out.k == 1
    assert len(out.strings[0]) == transformed_length(2) == 14
    assert edit_distance(*out.strings) == 2
    same = transform_instance(Instance(["00", "00"]))
    assert edit_distance(*same.strings) == 0
    with pytest.raises(AlphabetClash):
        transform_instance(out)
    with pytest.raises(AlphabetClash):
        transform_instance(Instance(["0$"]))


def test_transform_instance_preserves_pairwise_distances():
    rng = np.random.default_rng(8)
    strings = [SymbolString(r) for r in rng.integers(0, 2, (6, 8)).tolist()]
    out = transform_instance(Instance(strings)).strings
    for i in range(6):
        for j in range(i + 1, 6):
            assert edit_distance(out[i], out[j]) == hamming(strings[i], strings[j])


def test_closest_pair():
    assert bichromatic_closest_pair(["00"], ["00"]) == (1, 1, 0)
    assert bichromatic_closest_pair(["00", "11"], ["01"]) == (1, 1, 1)
    assert bichromatic_closest_pair(["0011"], ["011"], Mode.EDIT) == (1, 1, 1)
    with pytest.raises(EmptySet):
        bichromatic_closest_pair([], ["0"])
    with pytest.raises(LengthMismatch):
        bichromatic_closest_pair(["00"], ["000"])


def test_mismatch_gap_default_is_exhaustive_at_small_d():
    assert build_text(Instance(["0110"])).gap == mismatch_gap(4)
