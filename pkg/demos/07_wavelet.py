"""The GauRam wavelet next to the Hermite (Mexican-hat) wavelet."""
# %%
import json

import numpy as np

from gauss_ramanujan import wavelet

# %% Zero mean and unit energy, with a closed-form autocorrelation.
tau = np.linspace(-4, 4, 9)
print("R_GR:", np.round(wavelet.autocorr_gr(tau, 1.0), 5))
print("R_H: ", np.round(wavelet.autocorr_hermite(tau), 5))
print("1% decay lags:", wavelet.decay_lag(lambda x: wavelet.autocorr_gr(x, 1.0)),
      wavelet.decay_lag(wavelet.autocorr_hermite))

# %% Time and frequency spreads, computed two ways for the frequency side.
for kind, T0 in (("hermite", None), ("gauram", 1.0)):
    m = wavelet.tf_metrics(kind, T0)
    print(kind, {k: round(v, 6) for k, v in m.as_dict().items()},
          "freq-domain check:", round(wavelet.delta_omega_frequency_domain(kind, T0), 6))

# %% Side-by-side with the commonly quoted reference table.
print(json.dumps(wavelet.containment_comparison(1.0), indent=2, sort_keys=True))
