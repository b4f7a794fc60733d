"""Gaussian pulses, their delayed copies and how much they overlap."""
# %%
import numpy as np

from gauss_ramanujan import gauram

# %% The overlap of g(t) and g(t - T0) falls off like a Gaussian in T0.
for T0 in (0.0, 0.5, 1.0, 1.8, 2.4, 3.0):
    print(f"T0 = {T0:3.1f}   overlap = {gauram.overlap_closed_form(T0):.6e}")

# %% Six standard deviations of the pulse (about 2.4) already make the pair
# nearly orthogonal. Inverting the closed form gives the delay for any target.
for eps in (1e-2, 1e-4, 1e-6):
    print(f"overlap {eps:.0e} needs T0 = {gauram.delay_for_overlap(eps):.6f}")

# %% A random delay jitter of +/- delta averages the overlap. Compare the exact
# erfc expression, the exponential Q-fit shortcut and a seeded Monte-Carlo run.
rep = gauram.overlap_report(1.8, 0.09, seed=42, monte_carlo_samples=10**6)
print(f"exact  {rep.exact:.8e}")
print(f"approx {rep.approx:.8e}   ({rep.percent_error_approx_vs_exact:+.2f}% vs exact)")
print(f"MC     {rep.monte_carlo:.8e} +/- {rep.monte_carlo_stderr:.1e}")

# %% The GauRam family: weighted sums of the pulse at multiples of T0.
t = np.linspace(-2, 5, 8)
for build in (gauram.order_one, gauram.order_two, gauram.order_three):
    print(build(1.0).label, np.round(build(1.0)(t), 4))
