# coding: utf-8

# # Triad sync times
#
# A triad is synced when both of its upper notes have a coincidence with the root
# at (nearly) the same moment. Earlier sync ~ more consonant.

# In[1]:

from tonalmath.consonance import rank_triads, shared_event_times
from tonalmath.coincidence import chromatic_analyses


# In[2]:

for r in rank_triads("D2", horizon=2.6):
    print(f"{r.name:<11} {r.sync_time:.4f}  {r.frequencies}")


# Augmented and diminished land much earlier here than the hand-read figures (about
# 1.41 and 1.51 s). Diminished D-F-G# has an early near-hit around 0.068 s where
# both upper dyads line up inside the 5 ms window.

# In[3]:

dim = [r for r in rank_triads("D2", ["diminished"], horizon=2.6)][0]
print(dim.events)


# Same ranking an octave up once every tolerance is halved

# In[4]:

print([r.name for r in rank_triads("D3", delta=3.75e-4, agreement=2.5e-3, horizon=1.3)])


# Sub-dominant and minor sixth clash together near 0.163 s

# In[5]:

a = chromatic_analyses("D2")
print([round(t, 4) for t in shared_event_times(a[5], a[8], 5e-3)[:5]])
