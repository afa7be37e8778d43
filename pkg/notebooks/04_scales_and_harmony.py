# coding: utf-8

# # Segment-symmetric scales, modes and common notes

# In[1]:

from tonalmath.scales import (IONIAN, SegmentConstraint, common_note_count, enumerate_symmetric_scales,
                              harmonizer_mode, major_scale_set, mode_rotation, name_of_pattern)


# Two identical three-step segments joined by a whole tone. With the large-step rule
# a 3-semitone step has to sit mid-segment between two semitones.

# In[2]:

for p in enumerate_symmetric_scales():
    print(p, name_of_pattern(p))
print()
for p in enumerate_symmetric_scales(SegmentConstraint(large_step_rule=False)):
    print(p, name_of_pattern(p))


# Modes of Ionian

# In[3]:

for d in range(1, 8):
    print(d, mode_rotation(IONIAN, d), name_of_pattern(mode_rotation(IONIAN, d)))


# Common notes between the D major scale and the major scale on each chromatic note.
# Where all seven notes of the other scale fit, harmonizer_mode says which mode of D
# major that is.

# In[4]:

print(sorted(major_scale_set("D")))
for other in ("D", "E", "F#", "G", "A", "B", "C#"):
    print(other, common_note_count("D", other), harmonizer_mode("D", other))
