"""GRM: the pulse on the in-phase carrier, the negated delayed pulse in quadrature."""
# %%
import numpy as np

from gauss_ramanujan import modulation

params = modulation.GrmParams(fc=4.0, T0=1.8)
t = np.linspace(-1, 3, 9)

# %% In-phase and quadrature envelopes and the bandpass waveform.
i, q = modulation.grm_iq(t, params.T0)
print("I:", np.round(i, 5))
print("Q:", np.round(q, 5))
print("s:", np.round(modulation.grm_waveform(t, params), 5))

# %% The complex-envelope form needs the conjugate convention to reproduce
# the bandpass waveform; with (I + jQ) the quadrature term flips sign.
tt = np.linspace(-3, 5, 2001)
for conj in (False, True):
    diff = np.max(np.abs(modulation.grm_waveform(tt, params)
                         - modulation.grm_waveform_canonical(tt, params, conjugate=conj)))
    print(f"conjugate={conj}: max difference {diff:.3e}")

# %% Phase at the pulse crossing, energy and 3 dB bandwidth.
print("phase at T0/2:", modulation.grm_phase(params.T0 / 2, params.T0))
print("energy:", modulation.grm_energy_quadrature(params.T0))
print("bandwidth:", modulation.grm_bandwidth())
