"""Spectrum of the first-order GauRam pulse and GMSK vs GRSK power spectra."""
# %%
import numpy as np

from gauss_ramanujan import spectral

T0 = 1.8
f = np.linspace(-2, 2, 9)

# %% |GR_I(f)| = sqrt2 G(f) |sin(pi f T0)| vanishes at every multiple of 1/T0,
# including DC, and the phase is linear with a constant group delay T0/2.
print("|GR_I|:", np.round(spectral.gr1_magnitude(f, T0), 6))
print("nulls up to 2:", np.round(spectral.null_frequencies(T0, 2.0), 4))
print("group delay:", spectral.group_delay(T0))

# %% Normalised PSD for GMSK and GRSK pulses at several BT products.
freq = np.linspace(0, 1.5, 7)
for bt in (0.2, 0.3, 0.5):
    rho = spectral.rho_from_bt(bt)
    for kind, kw in (("gmsk", {"rho": rho}), ("grsk", {"eta": rho, "T0": 2.45})):
        pts = spectral.normalized_psd(spectral.spectrum_points(
            freq, spectral.pulse_spectrum_analytic(kind, freq, **kw)))
        print(f"BT={bt} {kind}:", " ".join(f"{p.psd_db:8.2f}" for p in pts))
