# %% [markdown]
# Group-free families.  With t = exp(2 pi i sqrt 2), the 28 vectors
# diag(t^(k xi))^l T^j f for xi = (1,2,3,4), l = 0..6 form a full spark frame
# in C^4, but not a tight one.

# %%
from sparkframe import ExponentFamily, GeneratingVector, orbit_frame
from sparkframe import certify_family_full_spark, frame_bounds, full_spark_numeric
from sparkframe.genfamily import factorization_crosscheck, minor_poly

family = ExponentFamily((1, 2, 3, 4), range(7))
frame = orbit_frame(family, GeneratingVector.numeric([1, 2, 3, 4]), "numeric")
print("frame bounds", frame_bounds(frame))

# %%
# Each square minor of the exponent matrix is a polynomial in t.  Its value at
# t = 2 is positive, so it has no transcendental root.
print("P(t) for rows {0,1}, cols {0,1}:", minor_poly(family, [0, 1], [0, 1]))
cert = certify_family_full_spark(family)
print("certified:", cert.certified, "with", cert.minors_checked, "positive minors")

# %%
# The positivity comes from a Vandermonde product times a Schur polynomial.
print(all(factorization_crosscheck(family, [0, 2, 3], [1, 4, 6], r) for r in (2, 3, 5)))

# %%
num = full_spark_numeric(frame, tol=1e-8)
print(num.verdict, num.minors_checked, "smallest normalized |det|", num.min_abs_det)
