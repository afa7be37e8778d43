import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tonalmath.coincidence import detect_coincidences
from tonalmath.consonance import (TRIAD_QUALITIES, TriadQuality, rank_triads, shared_event_times,
                                  triad_frequencies, triad_sync_time)
from tonalmath.errors import DomainError


def oracle_sync(root, quality, delta, agreement, horizon):
    """Exhaustive search over every pair of events from the two upper-note dyads."""
    f0, f1, f2 = triad_frequencies(root, quality)
    a = detect_coincidences(f0, f1, delta, horizon)
    b = detect_coincidences(f0, f2, delta, horizon)
    best = None
    for ea in a:
        for eb in b:
            if abs(ea.time - eb.time) <= agreement:
                t = (ea.time + eb.time) / 2
                if best is None or t < best:
                    best = t
    return best


# sync times for root D2, delta 7.5e-4, agreement 5e-3, horizon 2.6, frozen from oracle_sync
D2_SYNC = {
    "major": 0.05440,
    "diminished": 0.06810,
    "sus4": 0.08172,
    "sus2": 0.10905,
    "minor": 0.21795,
    "augmented": 0.62662,
}


@pytest.mark.parametrize("name", list(TRIAD_QUALITIES))
def test_sync_time_matches_oracle(name):
    r = triad_sync_time("D2", name, 7.5e-4, 5e-3, 2.6)
    assert r.sync_time == pytest.approx(oracle_sync("D2", name, 7.5e-4, 5e-3, 2.6), abs=1e-15)
    assert r.sync_time == pytest.approx(D2_SYNC[name], abs=5e-5)


@pytest.mark.parametrize("name,published", [("major", 0.054), ("sus4", 0.081), ("sus2", 0.1091), ("minor", 0.21)])
def test_sync_time_near_published(name, published):
    assert triad_sync_time("D2", name, horizon=2.6).sync_time == pytest.approx(published, abs=0.02)


def test_hz_root_equals_table_root_for_d2():
    for name in TRIAD_QUALITIES:
        by_name = triad_sync_time("D2", name, horizon=2.6).sync_time
        by_hz = triad_sync_time(73.42, name, horizon=2.6).sync_time
        assert by_hz == pytest.approx(by_name, abs=1e-3)


def test_report_consistency():
    a_delta, agreement, horizon = 7.5e-4, 5e-3, 2.6
    for name, q in TRIAD_QUALITIES.items():
        r = triad_sync_time("D2", q, a_delta, agreement, horizon)
        f0, f1, f2 = r.frequencies
        first = detect_coincidences(f0, f1, a_delta, horizon)
        second = detect_coincidences(f0, f2, a_delta, horizon)
        e1, e2 = r.events
        assert e1 in first.events and e2 in second.events
        assert abs(e1.time - e2.time) <= agreement
        assert min(e1.time, e2.time) <= r.sync_time <= max(e1.time, e2.time)
        assert r.sync_time == shared_event_times(first, second, agreement)[0]


def test_no_sync_within_short_horizon():
    r = triad_sync_time("D2", "augmented", horizon=0.3)
    assert r.sync_time is None and r.events is None


def test_unknown_quality():
    with pytest.raises(DomainError):
        triad_sync_time("D2", "lydian")
    with pytest.raises(DomainError):
        TriadQuality("bad", (0, 7))


def test_rank_order_d2():
    ranked = rank_triads("D2", horizon=2.6)
    assert [r.name for r in ranked] == ["major", "diminished", "sus4", "sus2", "minor", "augmented"]


def test_rank_single():
    ranked = rank_triads("A3", ["major"])
    assert len(ranked) == 1 and ranked[0].name == "major"


def test_rank_unsynced_last():
    ranked = rank_triads("D2", horizon=0.3)
    assert ranked[-1].sync_time is None
    times = [r.sync_time for r in ranked if r.sync_time is not None]
    assert times == sorted(times)


def test_d3_same_order_as_d2():
    d2 = rank_triads("D2", delta=7.5e-4, agreement=5e-3, horizon=2.6)
    d3 = rank_triads("D3", delta=7.5e-4 / 2, agreement=5e-3 / 2, horizon=1.3)
    assert [r.name for r in d3] == [r.name for r in d2]
    for a, b in zip(d2, d3):
        assert b.sync_time == pytest.approx(a.sync_time / 2, abs=1e-3)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.5, 4.0))
def test_rank_invariant_under_scaling(s):
    base = rank_triads(73.42, horizon=2.0)
    scaled = rank_triads(73.42 * s, delta=7.5e-4 / s, agreement=5e-3 / s, horizon=2.0 / s)
    assert [r.name for r in scaled] == [r.name for r in base]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(list(TRIAD_QUALITIES)), st.floats(0.5, 2.6), st.floats(0.0, 1.0))
def test_larger_horizon_never_later(name, horizon, extra):
    short = triad_sync_time("D2", name, horizon=horizon).sync_time
    long = triad_sync_time("D2", name, horizon=horizon + extra).sync_time
    if short is not None:
        assert long is not None and long <= short


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(list(TRIAD_QUALITIES)), st.floats(1e-3, 5e-3), st.floats(0.0, 5e-3))
def test_larger_agreement_never_later(name, agreement, extra):
    tight = triad_sync_time("D2", name, agreement=agreement, horizon=2.6).sync_time
    loose = triad_sync_time("D2", name, agreement=agreement + extra, horizon=2.6).sync_time
    if tight is not None:
        assert loose is not None and loose <= tight


# --- shared events ---------------------------------------------------------

def test_subdominant_minor_sixth_clash(d2_analyses):
    times = shared_event_times(d2_analyses[5], d2_analyses[8], 5e-3)
    assert any(abs(t - 0.163) < 2e-3 for t in times)


def test_self_shared_events(d2_analyses):
    a = d2_analyses[4]
    times = shared_event_times(a, a, 1e-6)
    assert times == pytest.approx(a.times.tolist())


def test_mediant_dominant_earliest(d2_analyses):
    times = shared_event_times(d2_analyses[4], d2_analyses[7], 5e-3)
    assert times[0] == pytest.approx(0.054, abs=1e-3)
    assert times == sorted(times)


def test_mismatched_tonics():
    a = detect_coincidences(73.42, 110.0, 7.5e-4, 0.5)
    b = detect_coincidences(73.0, 110.0, 7.5e-4, 0.5)
    with pytest.raises(DomainError):
        shared_event_times(a, b)
