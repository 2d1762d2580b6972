# %% [markdown]
# Rows S of the N x N DFT can only give a full spark matrix when S meets the
# cosets of every subgroup dZ_N as evenly as possible.  For prime powers the
# converse holds too; for other N only that one direction is guaranteed.

# %%
import itertools

from sparkframe import dft_submatrix_full_spark, uniform_distribution_check

for n in (4, 6, 8):
    agree = disagree = 0
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            same = bool(dft_submatrix_full_spark(s, n)) == uniform_distribution_check(s, n)
            agree += same
            disagree += not same
    print(f"N={n}: {agree} subsets agree, {disagree} differ")

# %%
print("{1,5} in Z_6 uniform:", uniform_distribution_check({1, 5}, 6))
print("witness:", dft_submatrix_full_spark({1, 5}, 6).witness)
