# coding: utf-8

# # Coincidences against a D2 tonic
#
# Rising zeros of sin(2 pi f t) sit at n/f. Pair the tonic's zeros with each chromatic
# note's zeros when they fall within delta of each other and record the midpoint.

# In[1]:

import numpy as np

from tonalmath.coincidence import (CHROMATIC_ROLES, PATTERN_DELTA, chromatic_analyses,
                                   classify_differences, pattern_similarity)


# In[2]:

analyses = chromatic_analyses("D2")
for semis, role in CHROMATIC_ROLES:
    a = analyses[semis]
    print(f"{role:<14} {a.other:7.2f} Hz", np.round(a.times[:6], 4))


# Spacing between events. Fifth and fourth are plain periodic; the tritone never settles.
# The supertonic only shows its long/short/short cycle once delta is tightened, since
# at 7.5e-4 a couple of near misses sneak in.

# In[3]:

tight = chromatic_analyses("D2", delta=PATTERN_DELTA)
for semis, role in CHROMATIC_ROLES:
    print(f"{role:<14} default: {classify_differences(analyses[semis])!s:<28} "
          f"tight: {classify_differences(tight[semis])}")


# Inverted pairs (k, 12-k) look alike graphically. Quantized spacing overlap:

# In[4]:

for k in (1, 2, 3, 4, 5):
    print(k, 12 - k, round(pattern_similarity(analyses[k], analyses[12 - k], 0.02), 3))
