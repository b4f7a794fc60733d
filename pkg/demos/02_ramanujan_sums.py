"""Ramanujan sums: integer-valued periodic sequences that are mutually orthogonal."""
# %%
import numpy as np

from gauss_ramanujan import ramanujan

# %% One period of S_R(m) for small R, with its unit-norm weights.
for R in range(1, 9):
    seq = ramanujan.sequence(R)
    print(f"R={R}  phi={ramanujan.totient(R)}  raw={[int(v) for v in seq.raw]}")

# %% Sequences with different periods are orthogonal over a common period.
defects = np.array([[ramanujan.orthogonality_defect(a, b) if a != b else np.nan
                     for b in range(1, 9)] for a in range(1, 9)])
print("largest |defect| over R1 != R2 <= 8:", np.nanmax(np.abs(defects)))

# %% Some texts list the R=3 sequence scaled to start at 1.
print("listed form of R=3:", ramanujan.sequence(3).listed_form)
