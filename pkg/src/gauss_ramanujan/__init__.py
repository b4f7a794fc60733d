"""Gauss-Ramanujan pulses: construction, overlap, spectra, Hilbert transforms,
GRM/GRSK modulation and the Gauss-Ramanujan wavelet."""
from . import gauram, hilbert, modulation, numerics, ramanujan, spectral, specfun, wavelet
from .gauram import GauRamSpec, gp, dgp, overlap_closed_form, delay_for_overlap
from .ramanujan import ramanujan_sum, sequence, totient

__version__ = "0.1.0"

__all__ = [
    "gauram", "hilbert", "modulation", "numerics", "ramanujan", "spectral", "specfun", "wavelet",
    "GauRamSpec", "gp", "dgp", "overlap_closed_form", "delay_for_overlap",
    "ramanujan_sum", "sequence", "totient",
]
