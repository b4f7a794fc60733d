"""GRSK: continuous-phase modulation driven by the first-order GauRam pulse."""
# %%
import numpy as np

from gauss_ramanujan import modulation

bits = (1, -1, -1, 1, 1, 1, -1, 1)
cfg = modulation.CpmConfig(fc=3.0, T=1.0, h=0.5, E=1.0, T0=0.5, bits=bits)
t = np.arange(0, 80001) * 1e-4

# %% Constant envelope and continuous phase over an 8-symbol burst.
env = np.abs(modulation.grsk_baseband(t, cfg))
phase = modulation.grsk_phase(t, cfg)
print("envelope spread:", env.max() - env.min())
print("largest phase step:", np.max(np.abs(np.diff(phase))))
print("phase at symbol ends:", np.round(phase[::10000], 4))

# %% The erf closed form of the phase pulse sits a constant above the running
# integral of the frequency pulse; using it as is would step the phase.
for x in (0.2, 0.6, 1.0):
    print(x, modulation.grsk_phase_pulse(x, cfg) - modulation.grsk_phase_pulse_quadrature(x, cfg))
printed = modulation.CpmConfig(**{**cfg.__dict__, "phase_pulse": "printed"})
print("largest step with the closed form:", np.max(np.abs(np.diff(modulation.grsk_phase(t, printed)))))

# %% Higher-order pulses take phi(k) Ramanujan-sum coefficients.
for k in (1, 2, 3, 4, 6):
    print(k, np.round(modulation.generalized_grsk_pulse(np.linspace(0, 3, 4), k, 1.0, 0.8), 4))
