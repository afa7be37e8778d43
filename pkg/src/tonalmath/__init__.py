"""
tonalmath
=========

Note-frequency models, sine-wave coincidence analysis of consonance, and
segment-symmetric heptatonic scales.

Submodules
----------
pitch        note indices/names, exponential model, 12-TET reference
coincidence  rising-zero coincidences of two tones and their spacing patterns
consonance   triad sync times, ranking and shared events
scales       scale enumeration, mode rotation, common-note counts
"""

from .coincidence import (DEFAULT_DELTA, DEFAULT_HORIZON, PATTERN_DELTA, CoincidenceEvent, DifferencePattern,
                          DyadAnalysis, PatternKind, chromatic_analyses, classify_differences,
                          detect_coincidences, inversion_partner, pattern_similarity, rising_zeros)
from .consonance import (TRIAD_QUALITIES, TriadConsonanceReport, TriadQuality, rank_triads,
                         shared_event_times, triad_sync_time)
from .errors import (AmbiguousPairingError, DomainError, InsufficientDataError, InvalidAnchorError,
                     NoteParseError, NoteRangeError, TonalError)
from .pitch import (PAPER_MODEL, ExponentialPitchModel, NoteName, equal_temperament_frequency,
                    fit_exponential_model, index_of, model_deviation, model_frequency, name_of, parse_note,
                    table_frequency)
from .scales import (IONIAN, NAMED_PATTERNS, IntervalPattern, SegmentConstraint, common_note_count,
                     enumerate_symmetric_scales, harmonizer_mode, major_scale_set, mode_rotation,
                     name_of_pattern)

__version__ = "0.1.0"
