"""
Near-simultaneous rising zeros of two sinusoids.

A tone ``sin(2*pi*f*t)`` crosses zero upwards at ``t = n/f``. Two tones are
said to coincide when a rising zero of each falls within ``delta`` seconds of
the other; the coincidence is reported at the midpoint of the two zeros.
The resulting event streams, taken against a fixed tonic, are what the
chromatic-interval table and the triad ranking are built from.

>>> a = detect_coincidences(73.42, 110.0, 7.5e-4, 0.1)
>>> [round(t, 4) for t in a.times.tolist()]
[0.0273, 0.0545, 0.0818]
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import AmbiguousPairingError, DomainError, InsufficientDataError
from .pitch import parse_note, table_frequency

__all__ = [
    "DEFAULT_DELTA",
    "PATTERN_DELTA",
    "DEFAULT_HORIZON",
    "DEFAULT_MATCH_TOLERANCE",
    "CHROMATIC_ROLES",
    "CoincidenceEvent",
    "DyadAnalysis",
    "PatternKind",
    "DifferencePattern",
    "rising_zeros",
    "detect_coincidences",
    "classify_differences",
    "inversion_partner",
    "pattern_similarity",
    "chromatic_analyses",
]

DEFAULT_DELTA = 7.5e-4
# Tighter pairing used for pattern classification; admissible window is
# roughly 2.8e-4..4.8e-4 for the D2 reproduction register.
PATTERN_DELTA = DEFAULT_DELTA / 2
DEFAULT_HORIZON = 2.6
DEFAULT_MATCH_TOLERANCE = 2e-3

# (semitones above the tonic, role name), in the row order of the published table
CHROMATIC_ROLES = (
    (2, "Supertonic"),
    (4, "Mediant"),
    (5, "Sub-Dominant"),
    (7, "Dominant"),
    (9, "Sub-Mediant"),
    (11, "Leading Tone"),
    (1, "Minor Second"),
    (3, "Minor Third"),
    (6, "Tritone"),
    (8, "Minor Sixth"),
    (10, "Minor Seventh"),
)


@dataclass(frozen=True)
class CoincidenceEvent:
    time: float
    gap: float
    n: int
    m: int


@dataclass(frozen=True)
class DyadAnalysis:
    """All coincidence events of a tonic and one other tone over ``[0, horizon]``."""

    tonic: float
    other: float
    delta: float
    horizon: float
    events: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    @property
    def times(self) -> np.ndarray:
        return np.array([e.time for e in self.events], dtype=float)

    @property
    def gaps(self) -> np.ndarray:
        return np.array([e.gap for e in self.events], dtype=float)

    def differences(self) -> np.ndarray:
        return np.diff(self.times)

    def tightened(self, delta: float) -> "DyadAnalysis":
        """Events whose gap is within a smaller ``delta``.

        Equal to re-running the detection with that tolerance, since pairing
        is unique once ``delta`` is below half of either period.
        """
        if delta > self.delta:
            raise DomainError("can only tighten to a smaller delta")
        kept = tuple(e for e in self.events if e.gap <= delta)
        return DyadAnalysis(self.tonic, self.other, delta, self.horizon, kept)


def rising_zeros(f: float, horizon: float) -> np.ndarray:
    """Upward zero crossings ``n/f`` (n >= 1) of ``sin(2*pi*f*t)`` up to ``horizon``."""
    if not (f > 0 and horizon > 0):
        raise DomainError(f"frequency and horizon must be positive (f={f}, horizon={horizon})")
    count = math.floor(f * horizon)
    # floor of the product can be off by one against the exact test n/f <= horizon
    while (count + 1) / f <= horizon:
        count += 1
    while count > 0 and count / f > horizon:
        count -= 1
    return np.arange(1, count + 1) / f


def detect_coincidences(f0: float, f1: float, delta: float = DEFAULT_DELTA,
                        horizon: float = DEFAULT_HORIZON) -> DyadAnalysis:
    """Pair rising zeros of two tones that fall within ``delta`` of each other.

    The two sorted zero streams are merged linearly. A pair is emitted when
    the current heads are within ``delta``; otherwise the earlier head is
    dropped. Each zero takes part in at most one event.

    Raises
    ------
    DomainError
        Non-positive frequency, tolerance or horizon.
    AmbiguousPairingError
        ``delta`` is not below half of the shorter period, so a zero could
        have two candidate partners.
    """
    if not (f0 > 0 and f1 > 0):
        raise DomainError("frequencies must be positive")
    if not delta > 0:
        raise DomainError("delta must be positive")
    if not delta < min(1 / f0, 1 / f1) / 2:
        raise AmbiguousPairingError(
            f"delta={delta} must be below half the shorter period ({min(1 / f0, 1 / f1) / 2:.6g} s)")
    a = rising_zeros(f0, horizon).tolist()
    b = rising_zeros(f1, horizon).tolist()
    events = []
    i = j = 0
    while i < len(a) and j < len(b):
        ta, tb = a[i], b[j]
        gap = abs(ta - tb)
        if gap <= delta:
            events.append(CoincidenceEvent((ta + tb) / 2, gap, i + 1, j + 1))
            i += 1
            j += 1
        elif ta < tb:
            i += 1
        else:
            j += 1
    return DyadAnalysis(f0, f1, delta, horizon, tuple(events))


class PatternKind(enum.Enum):
    PERIODIC = "periodic"
    ALTERNATING = "alternating"
    CYCLIC = "cyclic"
    IRREGULAR = "irregular"


@dataclass(frozen=True)
class DifferencePattern:
    kind: PatternKind
    values: tuple = ()
    match_tolerance: float = DEFAULT_MATCH_TOLERANCE
    note: str = ""

    @property
    def period(self) -> int:
        return len(self.values)

    def __str__(self):
        if self.kind is PatternKind.IRREGULAR:
            return "irregular" + (f" ({self.note})" if self.note else "")
        return f"{self.kind.value}(" + ", ".join(f"{v:.4f}" for v in self.values) + ")"


def _classes_match(diffs: np.ndarray, k: int, tol: float):
    classes = [diffs[r::k] for r in range(k)]
    if any(len(c) == 0 or np.ptp(c) > tol for c in classes):
        return None
    means = [float(c.mean()) for c in classes]
    return means


def classify_differences(events, match_tolerance: float = DEFAULT_MATCH_TOLERANCE) -> DifferencePattern:
    """Classify the spacing between consecutive events.

    ``events`` is a :class:`DyadAnalysis` or a sequence of event times. The
    simplest fitting description wins: periodic, then alternating, then a
    repeating cycle of three or four differences. Each cycle position must
    be internally consistent within ``match_tolerance``, and every position
    must be seen at least twice.
    """
    times = events.times if isinstance(events, DyadAnalysis) else np.asarray(events, dtype=float)
    if len(times) < 4:
        return DifferencePattern(PatternKind.IRREGULAR, (), match_tolerance,
                                 note=f"insufficient data: {len(times)} events")
    diffs = np.diff(times)
    if np.ptp(diffs) <= match_tolerance:
        return DifferencePattern(PatternKind.PERIODIC, (float(diffs.mean()),), match_tolerance)
    for k, kind in ((2, PatternKind.ALTERNATING), (3, PatternKind.CYCLIC), (4, PatternKind.CYCLIC)):
        if len(diffs) < 2 * k:
            break
        means = _classes_match(diffs, k, match_tolerance)
        if means is None:
            continue
        if k == 2 and abs(means[0] - means[1]) <= match_tolerance:
            continue
        return DifferencePattern(kind, tuple(means), match_tolerance)
    return DifferencePattern(PatternKind.IRREGULAR, (), match_tolerance)


def inversion_partner(interval: int) -> int:
    """Interval that complements ``interval`` to an octave (minor 2nd <-> major 7th)."""
    if not 0 <= interval <= 12:
        raise DomainError(f"interval must lie in 0..12 semitones, got {interval}")
    return 12 - interval


def _quantized(analysis: DyadAnalysis, quantum: float) -> Counter:
    return Counter(int(round(d / quantum)) for d in analysis.differences())


def pattern_similarity(a: DyadAnalysis, b: DyadAnalysis, quantum: float) -> float:
    """Jaccard similarity of the quantized consecutive-difference multisets."""
    if len(a) == 0 or len(b) == 0:
        raise InsufficientDataError("both analyses need at least one event")
    if not quantum > 0:
        raise DomainError("quantum must be positive")
    qa, qb = _quantized(a, quantum), _quantized(b, quantum)
    union = sum((qa | qb).values())
    if union == 0:
        # single-event analyses have no differences; identical iff both empty
        return 1.0
    return sum((qa & qb).values()) / union


def chromatic_analyses(tonic="D2", delta: float = DEFAULT_DELTA,
                       horizon: float = DEFAULT_HORIZON) -> dict:
    """Dyad analyses of a tonic against each of the eleven chromatic intervals.

    Frequencies come from the rounded 12-TET table. Keys are semitone offsets.
    """
    y0 = parse_note(tonic)
    f0 = table_frequency(y0)
    return {s: detect_coincidences(f0, table_frequency(y0 + s), delta, horizon)
            for s, _ in CHROMATIC_ROLES}
