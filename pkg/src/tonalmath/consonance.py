"""
Triad consonance by time-to-sync, and shared coincidence events.

A triad is scored by how soon both of its upper notes coincide with the root
at (nearly) the same moment: take the root's coincidence events with each
upper note and look for the earliest pair that agrees within ``agreement``.
Lower sync times rank as more consonant.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .coincidence import DEFAULT_DELTA, DyadAnalysis, detect_coincidences
from .errors import DomainError
from .pitch import NoteName, parse_note, table_frequency

__all__ = [
    "DEFAULT_AGREEMENT",
    "DEFAULT_TRIAD_HORIZON",
    "TriadQuality",
    "TRIAD_QUALITIES",
    "TriadConsonanceReport",
    "triad_frequencies",
    "triad_sync_time",
    "rank_triads",
    "shared_event_times",
    "shared_event_pairs",
]

DEFAULT_AGREEMENT = 5e-3
DEFAULT_TRIAD_HORIZON = 2.0


@dataclass(frozen=True)
class TriadQuality:
    name: str
    offsets: tuple

    def __post_init__(self):
        if len(self.offsets) != 2 or not all(0 < o < 12 for o in self.offsets):
            raise DomainError(f"triad offsets must be two semitone values in 1..11: {self.offsets}")


TRIAD_QUALITIES = {
    q.name: q
    for q in (
        TriadQuality("major", (4, 7)),
        TriadQuality("minor", (3, 7)),
        TriadQuality("sus2", (2, 7)),
        TriadQuality("sus4", (5, 7)),
        TriadQuality("augmented", (4, 8)),
        TriadQuality("diminished", (3, 6)),
    )
}


@dataclass(frozen=True)
class TriadConsonanceReport:
    quality: TriadQuality
    sync_time: float | None
    events: tuple | None
    agreement: float
    frequencies: tuple = ()

    @property
    def name(self) -> str:
        return self.quality.name


def _quality(q) -> TriadQuality:
    if isinstance(q, TriadQuality):
        return q
    try:
        return TRIAD_QUALITIES[q]
    except KeyError:
        raise DomainError(f"unknown triad quality {q!r}; known: {', '.join(TRIAD_QUALITIES)}") from None


def triad_frequencies(root, quality) -> tuple:
    """Root and upper-note frequencies of a triad.

    A note name (``'D2'``, ``NoteName``) takes every note from the rounded
    12-TET table. A number is a root in Hz; upper notes are then exact
    equal-tempered multiples of it.
    """
    quality = _quality(quality)
    if isinstance(root, (str, NoteName)):
        y = parse_note(root)
        return tuple(table_frequency(y + o) for o in (0, *quality.offsets))
    root = float(root)
    if not root > 0:
        raise DomainError("root frequency must be positive")
    return (root, *(root * 2.0 ** (o / 12) for o in quality.offsets))


def shared_event_pairs(a: DyadAnalysis, b: DyadAnalysis, agreement: float) -> list:
    """Every ``(mean_time, event_a, event_b)`` with event times within ``agreement``, ascending."""
    if a.tonic != b.tonic:
        raise DomainError(f"analyses have different tonics ({a.tonic} vs {b.tonic})")
    if not agreement > 0:
        raise DomainError("agreement must be positive")
    b_times = [e.time for e in b.events]
    pairs = []
    for ea in a.events:
        lo = bisect.bisect_left(b_times, ea.time - agreement)
        hi = bisect.bisect_right(b_times, ea.time + agreement)
        for eb in b.events[lo:hi]:
            pairs.append(((ea.time + eb.time) / 2, ea, eb))
    pairs.sort(key=lambda p: (p[0], p[1].time))
    return pairs


def shared_event_times(a: DyadAnalysis, b: DyadAnalysis, agreement: float = DEFAULT_AGREEMENT) -> list:
    """Times at which both analyses have an event, within ``agreement`` seconds."""
    return [t for t, _, _ in shared_event_pairs(a, b, agreement)]


def triad_sync_time(root, quality, delta: float = DEFAULT_DELTA, agreement: float = DEFAULT_AGREEMENT,
                    horizon: float = DEFAULT_TRIAD_HORIZON) -> TriadConsonanceReport:
    """Earliest moment both upper notes of a triad coincide with the root.

    Returns a report whose ``sync_time`` is ``None`` when no pair of events
    agrees within the horizon.
    """
    quality = _quality(quality)
    freqs = triad_frequencies(root, quality)
    f0, f1, f2 = freqs
    first = detect_coincidences(f0, f1, delta, horizon)
    second = detect_coincidences(f0, f2, delta, horizon)
    pairs = shared_event_pairs(first, second, agreement)
    if not pairs:
        return TriadConsonanceReport(quality, None, None, agreement, freqs)
    t, e1, e2 = pairs[0]
    return TriadConsonanceReport(quality, t, (e1, e2), agreement, freqs)


def rank_triads(root, qualities=None, delta: float = DEFAULT_DELTA, agreement: float = DEFAULT_AGREEMENT,
                horizon: float = DEFAULT_TRIAD_HORIZON) -> list:
    """Triad reports sorted by sync time; triads that never sync go last."""
    if qualities is None:
        qualities = TRIAD_QUALITIES.values()
    reports = [triad_sync_time(root, q, delta, agreement, horizon) for q in qualities]
    return sorted(reports, key=lambda r: (r.sync_time is None, r.sync_time or 0.0, r.name))
