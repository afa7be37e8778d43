# coding: utf-8

# # Waveform plot
#
# Writes an SVG of D2, G2 and Bb2 over the first quarter second with the shared
# sub-dominant / minor-sixth events marked. Same thing as
# `tonalmath plot --notes G2,Bb2 -o clash.svg`.

# In[1]:

from pathlib import Path

from tonalmath.cli import plot_markers
from tonalmath.pitch import table_frequency, index_of
from tonalmath.svg import wave_plot


# In[2]:

traces = [(n, table_frequency(index_of(n))) for n in ("D2", "G2", "Bb2")]
markers = plot_markers(traces[0][1], [f for _, f in traces[1:]], (0.0, 0.25))
svg = wave_plot(traces, (0.0, 0.25), markers, title="D2 with G2 and Bb2")
out = Path("clash.svg")
out.write_text(svg)
print(out, len(svg), "bytes,", sum(1 for m in markers if m[1] == "shared"), "shared markers")
