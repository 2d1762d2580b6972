# %% [markdown]
# When the subgroup is too large relative to the smallest prime of N, no
# generating vector gives a full spark orbit.  Z_6 x| {1,5} is the smallest
# case; Z_9 x| {1,8} escapes because 1 and 8 differ mod 3.

# %%
from sparkframe import GeneratingVector, SemidirectGroup, deficiency_verdict, induced_rep, orbit_frame
from sparkframe import full_spark_exact
from sparkframe.framecore import spark

for n, h in [(5, None), (6, [1, 5]), (9, [1, 8]), (9, None), (15, [1, 4])]:
    g = SemidirectGroup.of(n, h)
    v = deficiency_verdict(g, 1)
    print(f"{str(g):22s} {v.verdict.value:24s} {v.rule.value}")

# %%
# For Z_6, columns (x=0, k=0) and (x=3, k=0) are parallel for every v.
rep = induced_rep(SemidirectGroup.of(6, [1, 5]), 1)
for seed in range(3):
    frame = orbit_frame(rep, GeneratingVector.random(seed))
    cert = full_spark_exact(frame)
    print(seed, cert.verdict, cert.failing_subset, "spark", spark(frame))

# %%
z9 = orbit_frame(induced_rep(SemidirectGroup.of(9, [1, 8]), 1), GeneratingVector.monomial_squares(2))
print("Z_9:", full_spark_exact(z9).verdict, "over", z9.count, "vectors")
