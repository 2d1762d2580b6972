# %% [markdown]
# A tight, full spark frame of twenty vectors in C^4.
#
# The group Z_5 x| Z_4 acts on C^4 through the representation induced
# from the character x -> zeta_5^x.  Its orbit of v = (1, t, t^4, t^9)
# is checked minor by minor in exact arithmetic, with t kept symbolic.

# %%
import numpy as np

from sparkframe import GeneratingVector, SemidirectGroup, induced_rep, orbit_frame
from sparkframe import frame_bounds, full_spark_exact, is_tight
from sparkframe.groups import rep_matrix

group = SemidirectGroup.of(5)
rep = induced_rep(group, 1)
print(group, "dimension", rep.dim, "irreducible", rep.irreducible)
print("row order of H:", rep.h_order)

# %%
# pi(0, 2) shifts coordinates cyclically and pi(1, 1) is diagonal.
for g in [(0, 2), (1, 1)]:
    print(g)
    print(np.round(rep_matrix(rep, g).to_complex(), 3))

# %%
frame = orbit_frame(rep, GeneratingVector.monomial_squares(4))
cert = full_spark_exact(frame)
print(cert.verdict, "after", cert.minors_checked, "exact 4x4 minors")

# %%
# Schur's lemma makes every irreducible orbit tight: A = B = |G| ||v||^2 / d.
numeric = frame.to_numeric()
a, b = frame_bounds(numeric)
print("bounds", a, b, "tight:", is_tight(numeric))
