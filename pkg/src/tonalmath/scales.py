"""
Heptatonic step patterns: segment-symmetric enumeration, modes and common notes.

A scale is written as its seven steps in semitones, e.g. Ionian is
``(2, 2, 1, 2, 2, 2, 1)``. Splitting it between degrees 4 and 5 gives two
three-step segments joined by a whole tone; a pattern is segment-symmetric
when both segments are identical.

>>> [name_of_pattern(p) for p in enumerate_symmetric_scales()]
['Phrygian', 'Double Harmonic Major', 'Dorian', 'Ionian']
>>> name_of_pattern(mode_rotation(IONIAN, 3))
'Phrygian'
>>> common_note_count("D", "A")
6
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DomainError
from .pitch import parse_pitch_class, pitch_class_name

__all__ = [
    "IntervalPattern",
    "SegmentConstraint",
    "NAMED_PATTERNS",
    "IONIAN",
    "enumerate_symmetric_scales",
    "mode_rotation",
    "major_scale_set",
    "common_note_count",
    "name_of_pattern",
    "harmonizer_mode",
]


@dataclass(frozen=True, order=True)
class IntervalPattern:
    steps: tuple

    def __post_init__(self):
        steps = tuple(int(s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) != 7 or any(s <= 0 for s in steps):
            raise DomainError(f"a heptatonic pattern needs 7 positive steps: {steps}")
        if sum(steps) != 12:
            raise DomainError(f"steps must sum to an octave (12): {steps}")

    @classmethod
    def parse(cls, text: str) -> "IntervalPattern":
        """Accept ``'2-2-1-2-2-2-1'``, ``'2,2,1,...'`` or ``'2212221'``."""
        text = text.strip()
        if text in NAMED_PATTERNS:
            return NAMED_PATTERNS[text]
        parts = text.replace(",", "-").replace(" ", "-").split("-")
        if len(parts) == 1:
            parts = list(parts[0])
        try:
            return cls(tuple(int(p) for p in parts if p))
        except ValueError:
            raise DomainError(f"cannot parse step pattern {text!r}") from None

    def degrees(self) -> tuple:
        """Semitone offsets of the seven degrees from the tonic."""
        return tuple(itertools.accumulate((0,) + self.steps[:-1]))

    def pitch_classes(self, tonic) -> frozenset:
        t = parse_pitch_class(tonic)
        return frozenset(pitch_class_name(t + d) for d in self.degrees())

    def __str__(self):
        return "-".join(map(str, self.steps))


IONIAN = IntervalPattern((2, 2, 1, 2, 2, 2, 1))

NAMED_PATTERNS = {
    "Ionian": IONIAN,
    "Dorian": IntervalPattern((2, 1, 2, 2, 2, 1, 2)),
    "Phrygian": IntervalPattern((1, 2, 2, 2, 1, 2, 2)),
    "Lydian": IntervalPattern((2, 2, 2, 1, 2, 2, 1)),
    "Mixolydian": IntervalPattern((2, 2, 1, 2, 2, 1, 2)),
    "Aeolian": IntervalPattern((2, 1, 2, 2, 1, 2, 2)),
    "Locrian": IntervalPattern((1, 2, 2, 1, 2, 2, 2)),
    "Double Harmonic Major": IntervalPattern((1, 3, 1, 2, 1, 3, 1)),
    "Harmonic Minor": IntervalPattern((2, 1, 2, 2, 1, 3, 1)),
}
_NAMES_BY_STEPS = {p.steps: name for name, p in NAMED_PATTERNS.items()}


@dataclass(frozen=True)
class SegmentConstraint:
    """Shape of a segment-symmetric scale.

    ``large_step_rule`` admits a 3-semitone step only in the middle of a
    segment with a semitone on both sides, as in the double harmonic major.
    """

    segment_length: int = 3
    link_step: int = 2
    allowed_steps: frozenset = field(default_factory=lambda: frozenset({1, 2, 3}))
    large_step_rule: bool = True


def _large_steps_flanked(segment) -> bool:
    for i, s in enumerate(segment):
        if s == 3:
            if i == 0 or i == len(segment) - 1:
                return False
            if segment[i - 1] != 1 or segment[i + 1] != 1:
                return False
    return True


def enumerate_symmetric_scales(constraint: SegmentConstraint = SegmentConstraint()) -> list:
    """All patterns ``segment + (link,) + segment`` closing the octave, sorted by steps."""
    remainder = 12 - constraint.link_step
    if remainder % 2 or 2 * constraint.segment_length + 1 != 7:
        return []
    target = remainder // 2
    found = []
    for segment in itertools.product(sorted(constraint.allowed_steps), repeat=constraint.segment_length):
        if sum(segment) != target:
            continue
        if constraint.large_step_rule and not _large_steps_flanked(segment):
            continue
        found.append(IntervalPattern(segment + (constraint.link_step,) + segment))
    return sorted(found)


def mode_rotation(pattern: IntervalPattern, degree: int) -> IntervalPattern:
    """The same step cycle started from ``degree`` (1..7)."""
    if not 1 <= degree <= 7:
        raise DomainError(f"degree must be in 1..7, got {degree}")
    k = degree - 1
    return IntervalPattern(pattern.steps[k:] + pattern.steps[:k])


def major_scale_set(tonic) -> frozenset:
    return IONIAN.pitch_classes(tonic)


def common_note_count(tonic, other) -> int:
    return len(major_scale_set(tonic) & major_scale_set(other))


def name_of_pattern(pattern: IntervalPattern) -> str:
    return _NAMES_BY_STEPS.get(pattern.steps, "unknown")


def harmonizer_mode(tonic, other):
    """Mode occupied by a harmonizer starting on ``other`` inside ``tonic``'s major scale.

    Returns ``(degree, pattern, name)``, or ``None`` when ``other`` is not
    diatonic to the tonic's major scale.
    """
    t, o = parse_pitch_class(tonic), parse_pitch_class(other)
    offsets = IONIAN.degrees()
    interval = (o - t) % 12
    if interval not in offsets:
        return None
    degree = offsets.index(interval) + 1
    pattern = mode_rotation(IONIAN, degree)
    return degree, pattern, name_of_pattern(pattern)
