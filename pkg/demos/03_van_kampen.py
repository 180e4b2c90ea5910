"""Van Kampen pushouts when the intersection has several components.

Splitting the one-ray sun's configuration space into a piece where one token
sits in a small arc of the circle and a piece where none does gives an
intersection with two components.  The pushout presentation, then its Tietze
simplification, recovers the free basis directly.
"""
from braidscope import gvk_pushout, sun1_symbolic, tietze_simplify
from braidscope.van_kampen import two_arcs_example, wedge_example

# %% Sanity checks: a wedge of two circles, and a circle made of two arcs.
print(gvk_pushout(wedge_example()).to_text())
print(gvk_pushout(two_arcs_example()).to_text())

# %% The symbolic presentation for four tokens.
p = sun1_symbolic(4)
print(p.to_text())

# %% Shortest relators go first: every alpha is solved from a length-2
# relator, then each beta with k >= 3 is conjugated away by t.
r = tietze_simplify(p)
print("eliminated:", r.eliminated)
print("free basis:", r.presentation.generator_names)
