import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tonalmath.errors import DomainError
from tonalmath.pitch import PITCH_CLASSES
from tonalmath.scales import (IONIAN, NAMED_PATTERNS, IntervalPattern, SegmentConstraint, common_note_count,
                              enumerate_symmetric_scales, harmonizer_mode, major_scale_set, mode_rotation,
                              name_of_pattern)

PHRYGIAN = (1, 2, 2, 2, 1, 2, 2)
DORIAN = (2, 1, 2, 2, 2, 1, 2)
DOUBLE_HARMONIC = (1, 3, 1, 2, 1, 3, 1)


def brute_force_symmetric(allowed=(1, 2, 3), link=2):
    """All 7-step sequences (outer steps from ``allowed``) that close the octave with equal halves around ``link``."""
    out = []
    for outer in itertools.product(allowed, repeat=6):
        steps = outer[:3] + (link,) + outer[3:]
        if sum(steps) == 12 and steps[:3] == steps[4:]:
            out.append(steps)
    return sorted(out)


MAJOR_OFFSETS = {0, 2, 4, 5, 7, 9, 11}


def oracle_major_set(tonic_pc):
    return {(tonic_pc + o) % 12 for o in MAJOR_OFFSETS}


def steps_of(patterns):
    return [p.steps for p in patterns]


def test_default_enumeration_is_the_four_named_scales():
    got = enumerate_symmetric_scales()
    assert set(steps_of(got)) == {IONIAN.steps, PHRYGIAN, DORIAN, DOUBLE_HARMONIC}
    assert sorted(name_of_pattern(p) for p in got) == ["Dorian", "Double Harmonic Major", "Ionian", "Phrygian"]


def test_without_large_step_rule_matches_brute_force():
    got = enumerate_symmetric_scales(SegmentConstraint(large_step_rule=False))
    assert steps_of(got) == brute_force_symmetric()
    assert len(got) == 6
    assert [name_of_pattern(p) for p in got].count("unknown") == 2


def test_infeasible_sum():
    assert enumerate_symmetric_scales(SegmentConstraint(allowed_steps=frozenset({2}))) == []
    assert enumerate_symmetric_scales(SegmentConstraint(link_step=1)) == []


@pytest.mark.parametrize("link", [2, 4, 6])
def test_other_links_match_brute_force(link):
    got = enumerate_symmetric_scales(SegmentConstraint(link_step=link, large_step_rule=False,
                                                       allowed_steps=frozenset({1, 2, 3})))
    assert steps_of(got) == brute_force_symmetric(link=link)


def test_enumeration_invariants():
    for rule in (True, False):
        for p in enumerate_symmetric_scales(SegmentConstraint(large_step_rule=rule)):
            assert sum(p.steps) == 12
            assert p.steps[:3] == p.steps[4:]
            assert p.steps[3] == 2


def test_lydian_is_not_segment_symmetric():
    lydian = NAMED_PATTERNS["Lydian"]
    assert lydian.steps[:3] != lydian.steps[4:]
    assert lydian not in enumerate_symmetric_scales(SegmentConstraint(large_step_rule=False))


@pytest.mark.parametrize("steps", [(2, 2, 1, 2, 2, 2), (2, 2, 2, 2, 2, 2, 2), (0, 2, 2, 2, 2, 2, 2)])
def test_invalid_patterns(steps):
    with pytest.raises(DomainError):
        IntervalPattern(steps)


def test_parse_pattern():
    assert IntervalPattern.parse("2-2-1-2-2-2-1") == IONIAN
    assert IntervalPattern.parse("2212221") == IONIAN
    assert IntervalPattern.parse("Phrygian").steps == PHRYGIAN
    with pytest.raises(DomainError):
        IntervalPattern.parse("2-x-1")


def test_mode_rotation_examples():
    assert mode_rotation(IONIAN, 3).steps == PHRYGIAN
    assert mode_rotation(IONIAN, 2).steps == DORIAN
    assert mode_rotation(IONIAN, 1) == IONIAN
    assert name_of_pattern(mode_rotation(IONIAN, 3)) == "Phrygian"


@pytest.mark.parametrize("degree", [0, 8])
def test_mode_rotation_degree_range(degree):
    with pytest.raises(DomainError):
        mode_rotation(IONIAN, degree)


patterns = st.sampled_from(list(NAMED_PATTERNS.values()) + enumerate_symmetric_scales(
    SegmentConstraint(large_step_rule=False)))


@given(patterns, st.integers(1, 7), st.integers(1, 7))
def test_rotation_composes(p, d1, d2):
    # rotating by (d1-1) then (d2-1) is a single rotation by (d1+d2-2) mod 7
    once = mode_rotation(mode_rotation(p, d1), d2)
    assert once == mode_rotation(p, (d1 + d2 - 2) % 7 + 1)


@given(patterns)
def test_seven_successive_rotations_return(p):
    q = p
    for _ in range(7):
        q = mode_rotation(q, 2)
    assert q == p


def test_rotate_three_then_six():
    assert mode_rotation(mode_rotation(IONIAN, 3), 6) == mode_rotation(IONIAN, 1)


@pytest.mark.parametrize("tonic,expected", [
    ("C", {"C", "D", "E", "F", "G", "A", "B"}),
    ("D", {"D", "E", "F#", "G", "A", "B", "C#"}),
])
def test_major_scale_set(tonic, expected):
    assert major_scale_set(tonic) == expected


def test_g_major_has_f_sharp():
    g = major_scale_set("G")
    assert "F#" in g and "F" not in g


@pytest.mark.parametrize("pc", range(12))
def test_major_scale_set_matches_offsets(pc):
    assert {PITCH_CLASSES.index(n) for n in major_scale_set(pc)} == oracle_major_set(pc)
    assert len(major_scale_set(pc)) == 7


@pytest.mark.parametrize("tonic,other,count", [("D", "A", 6), ("D", "F#", 3), ("D", "D", 7), ("C", "Gb", 2)])
def test_common_note_count(tonic, other, count):
    assert common_note_count(tonic, other) == count


def test_common_note_count_symmetric_and_identity():
    for a, b in itertools.product(range(12), repeat=2):
        n = common_note_count(a, b)
        assert n == common_note_count(b, a)
        assert n == len(oracle_major_set(a) & oracle_major_set(b))
        assert (n == 7) == (a == b)


@pytest.mark.parametrize("pc", range(12))
def test_fifth_apart_shares_six(pc):
    assert common_note_count(pc, (pc + 7) % 12) == 6
    assert common_note_count(pc, (pc + 4) % 12) == 3


@pytest.mark.parametrize("steps,name", [
    ((2, 2, 1, 2, 2, 2, 1), "Ionian"),
    ((1, 3, 1, 2, 1, 3, 1), "Double Harmonic Major"),
    ((2, 2, 2, 1, 2, 2, 1), "Lydian"),
    ((2, 1, 2, 2, 1, 3, 1), "Harmonic Minor"),
    ((1, 1, 3, 2, 1, 1, 3), "unknown"),
])
def test_name_of_pattern(steps, name):
    assert name_of_pattern(IntervalPattern(steps)) == name


def test_harmonizer_mode():
    assert harmonizer_mode("D", "F#")[::2] == (3, "Phrygian")
    assert harmonizer_mode("D", "A")[::2] == (5, "Mixolydian")
    assert harmonizer_mode("D", "D")[::2] == (1, "Ionian")
    assert harmonizer_mode("D", "F") is None
