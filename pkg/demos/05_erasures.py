# %% [markdown]
# A full spark frame of M vectors in C^d tolerates the loss of any M - d
# coefficients.  A deficient frame does not.

# %%
import numpy as np

from sparkframe import GeneratingVector, SemidirectGroup, induced_rep, orbit_frame
from sparkframe import ErasurePattern, erasure_trial, full_spark_exact, reconstruct, transmit
from sparkframe.erasure import SingularSurvivorSet

good = orbit_frame(induced_rep(SemidirectGroup.of(5), 1), GeneratingVector.monomial_squares(4))
print(erasure_trial(good, trials=100, seed=0))

# %%
bad = orbit_frame(induced_rep(SemidirectGroup.of(6, [1, 5]), 1), GeneratingVector.random(0))
print(erasure_trial(bad, trials=100, seed=0))

# %%
# Keep only the parallel pair found by the certificate.
pair = full_spark_exact(bad).failing_subset
arr = bad.numeric_array()
pattern = ErasurePattern(set(range(bad.count)) - set(pair), bad.count)
try:
    reconstruct(arr, transmit(arr, np.ones(2), pattern))
except SingularSurvivorSet as exc:
    print("reconstruction failed:", exc)
