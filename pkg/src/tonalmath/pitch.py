"""
Note indices, note names and the exponential note-frequency model.

Piano keys are numbered 1..88 from A0 to C8. Frequencies grow exponentially
with the index, ``x = c * exp(k * y)``; the constants published for the
model were fitted through A2 (y=25, 110 Hz) and A#4 (y=50, 466.16 Hz).

>>> round(model_frequency(PAPER_MODEL, 25), 3)
110.0
>>> index_of(NoteName.parse("A4"))
49
>>> str(name_of(18))
'D2'
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass

from .errors import InvalidAnchorError, NoteParseError, NoteRangeError

__all__ = [
    "PITCH_CLASSES",
    "NoteName",
    "ExponentialPitchModel",
    "PAPER_MODEL",
    "REFERENCE_PITCH",
    "fit_exponential_model",
    "model_frequency",
    "equal_temperament_frequency",
    "table_frequency",
    "index_of",
    "name_of",
    "parse_note",
    "parse_pitch_class",
    "pitch_class_name",
    "model_deviation",
]

PITCH_CLASSES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

_FLATS = {"Db": "C#", "Eb": "D#", "Gb": "F#", "Ab": "G#", "Bb": "A#",
          "Cb": "B", "Fb": "E", "E#": "F", "B#": "C"}

PIANO_KEYS = 88
A4_INDEX = 49
REFERENCE_PITCH = 440.0

# index of C in octave 0 on the piano numbering (A0 = 1, so C0 sits below the keyboard)
_C0_INDEX = -8

_NOTE_RE = re.compile(r"^\s*([A-Ga-g])([#b]?)(-?\d+)\s*$")
_PC_RE = re.compile(r"^\s*([A-Ga-g])([#b]?)\s*$")


def _canonical_pc(letter: str, accidental: str) -> int:
    name = letter.upper() + accidental
    # wrap-around spellings shift the octave; handled by the caller
    name = _FLATS.get(name, name)
    return PITCH_CLASSES.index(name)


def parse_pitch_class(text) -> int:
    """Parse ``'D'``, ``'F#'``, ``'Bb'`` or an integer 0..11 into a pitch-class number."""
    if isinstance(text, int):
        if not 0 <= text < 12:
            raise NoteParseError(f"pitch class out of range: {text}")
        return text
    m = _PC_RE.match(str(text))
    if not m:
        raise NoteParseError(f"not a pitch class: {text!r}")
    return _canonical_pc(m.group(1), m.group(2))


def pitch_class_name(pc: int) -> str:
    return PITCH_CLASSES[pc % 12]


def check_index(y: int, extended: bool = False) -> int:
    if isinstance(y, float) and y.is_integer():
        y = int(y)
    try:
        y = operator.index(y)
    except TypeError:
        raise NoteRangeError(f"note index must be an integer, got {y!r}") from None
    if extended:
        if y < 1:
            raise NoteRangeError(f"note index must be positive, got {y}")
    elif not 1 <= y <= PIANO_KEYS:
        raise NoteRangeError(f"note index {y} outside the piano range 1..{PIANO_KEYS}")
    return y


@dataclass(frozen=True, order=True)
class NoteName:
    """Pitch class plus octave, scientific pitch notation with sharps."""

    pitch_class: str
    octave: int

    def __post_init__(self):
        if self.pitch_class not in PITCH_CLASSES:
            raise NoteParseError(f"unknown pitch class {self.pitch_class!r}")

    @classmethod
    def parse(cls, text: str) -> "NoteName":
        m = _NOTE_RE.match(text)
        if not m:
            raise NoteParseError(f"not a note name: {text!r}")
        letter, acc, octave = m.group(1).upper(), m.group(2), int(m.group(3))
        # Cb4 is B3, B#3 is C4
        if letter + acc == "Cb":
            octave -= 1
        elif letter + acc == "B#":
            octave += 1
        return cls(PITCH_CLASSES[_canonical_pc(letter, acc)], octave)

    def __str__(self):
        return f"{self.pitch_class}{self.octave}"


def index_of(name: NoteName | str, extended: bool = False) -> int:
    """Piano key index of a note name (A0 = 1, A4 = 49, C8 = 88)."""
    if isinstance(name, str):
        name = NoteName.parse(name)
    y = _C0_INDEX + 12 * name.octave + PITCH_CLASSES.index(name.pitch_class)
    return check_index(y, extended)


def name_of(y: int, extended: bool = False) -> NoteName:
    """Inverse of :func:`index_of`."""
    y = check_index(y, extended)
    octave, pc = divmod(y - _C0_INDEX, 12)
    return NoteName(PITCH_CLASSES[pc], octave)


def parse_note(text, extended: bool = False) -> int:
    """Accept a note name (``'D2'``, ``'Bb2'``) or a key index (``49``, ``'49'``)."""
    if isinstance(text, NoteName):
        return index_of(text, extended)
    if isinstance(text, int):
        return check_index(text, extended)
    text = str(text).strip()
    if text.isdigit():
        return check_index(int(text), extended)
    return index_of(NoteName.parse(text), extended)


@dataclass(frozen=True)
class ExponentialPitchModel:
    """Frequency model ``c * exp(k * y)`` over note index ``y``.

    ``c`` is in Hz, ``k`` per index step. The ratio between neighbouring
    indices is the constant ``exp(k)``.
    """

    c: float
    k: float

    def __post_init__(self):
        if not (self.c > 0 and self.k > 0 and math.isfinite(self.c) and math.isfinite(self.k)):
            raise InvalidAnchorError(f"model constants must be positive and finite: c={self.c}, k={self.k}")

    @property
    def step_ratio(self) -> float:
        return math.exp(self.k)

    def __call__(self, y, extended: bool = False) -> float:
        return model_frequency(self, y, extended)


# Published constants, kept at their printed precision.
PAPER_MODEL = ExponentialPitchModel(c=25.956753046164, k=0.0577619426421)


def fit_exponential_model(p1, p2) -> ExponentialPitchModel:
    """Fit ``c`` and ``k`` through two ``(index, frequency)`` anchors.

    Parameters
    ----------
    p1, p2 : tuple of (float, float)
        Note index and frequency in Hz. Indices need not be integers here,
        which allows fitting through arbitrary reference points.

    Returns
    -------
    ExponentialPitchModel

    Raises
    ------
    InvalidAnchorError
        If the indices coincide or a frequency is not positive.
    """
    (y1, f1), (y2, f2) = p1, p2
    if y1 == y2:
        raise InvalidAnchorError("anchor indices must differ")
    if not (f1 > 0 and f2 > 0):
        raise InvalidAnchorError("anchor frequencies must be positive")
    k = math.log(f2 / f1) / (y2 - y1)
    c = f1 / math.exp(k * y1)
    return ExponentialPitchModel(c=c, k=k)


def model_frequency(model: ExponentialPitchModel, y, extended: bool = False) -> float:
    y = check_index(y, extended)
    return model.c * math.exp(model.k * y)


def equal_temperament_frequency(y, extended: bool = False, reference: float = REFERENCE_PITCH) -> float:
    """12-TET frequency of key ``y`` relative to A4 = ``reference`` Hz."""
    y = check_index(y, extended)
    return reference * 2.0 ** ((y - A4_INDEX) / 12)


def table_frequency(y, extended: bool = False) -> float:
    """12-TET frequency rounded to 0.01 Hz, as printed in standard note tables.

    This is the frequency source for the coincidence analyses (D2 -> 73.42).
    """
    return round(equal_temperament_frequency(y, extended), 2)


def model_deviation(model: ExponentialPitchModel, y, extended: bool = False) -> float:
    """Relative error of ``model`` against 12-TET at key ``y``."""
    ref = equal_temperament_frequency(y, extended)
    return (model_frequency(model, y, extended) - ref) / ref
