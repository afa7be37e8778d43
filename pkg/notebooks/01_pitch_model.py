# coding: utf-8

# # Pitch model
#
# Piano keys numbered 1..88 (A0..C8). Two ways to get a frequency out of an index:
# twelve-tone equal temperament, and an exponential fit x = c*exp(k*y) through two anchors.

# In[1]:

from tonalmath import PAPER_MODEL, equal_temperament_frequency, fit_exponential_model, model_frequency
from tonalmath.pitch import model_deviation, name_of


# The fitted constants, anchored on A2 (110 Hz) and A#4 (466.16 Hz).

# In[2]:

fitted = fit_exponential_model((25, 110.0), (50, 466.16))
print(fitted)
print(PAPER_MODEL)
print("k differs by", abs(fitted.k - PAPER_MODEL.k) / fitted.k)


# The published k carries a rounding slip in the ratio 466.16/110, about 6e-9 relative.
# It's invisible at audio precision:

# In[3]:

for y in (1, 18, 25, 49, 50, 88):
    print(f"{str(name_of(y)):>4} {equal_temperament_frequency(y):10.3f} {model_frequency(PAPER_MODEL, y):10.3f} "
          f"{model_deviation(PAPER_MODEL, y):+.2e}")


# Step ratio of the fit vs the semitone 2^(1/12)

# In[4]:

print(PAPER_MODEL.step_ratio, 2 ** (1 / 12))
