"""Known discrepancies between printed formulas/values and what the maths gives.

Each entry carries a function that recomputes its evidence, so the
validation report always reflects the installed code.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import gauram, hilbert, modulation, ramanujan, spectral, wavelet
from .specfun import DEFAULT_Q_CONSTANTS


@dataclass(frozen=True)
class Erratum:
    key: str
    printed: str
    implemented: str
    evidence: Callable[[], dict]

    def report(self) -> dict:
        return {"id": self.key, "printed": self.printed,
                "implemented": self.implemented, "evidence": self.evidence()}


def _prefactor_evidence() -> dict:
    T0, d = 1.8, 0.09
    c = DEFAULT_Q_CONSTANTS
    sp = math.sqrt(math.pi)
    y = 2 * c.alpha * math.pi * T0 * d + c.beta * sp * d
    beta_variant = math.exp(-(c.alpha * math.pi * T0**2 + c.beta * math.pi * d**2
                              + c.beta * sp * T0 + c.gamma)) * math.sinh(y) / d
    reference = gauram.mean_overlap_from_q_approx(T0, d)
    return {
        "T0": T0, "delta": d,
        "difference_of_q_approx": reference,
        "alpha_pi_delta2_form": gauram.mean_overlap_approx(T0, d),
        "beta_pi_delta2_form": beta_variant,
        "alpha_form_rel_err": abs(gauram.mean_overlap_approx(T0, d) / reference - 1),
        "beta_form_rel_err": abs(beta_variant / reference - 1),
    }


def _approx_accuracy_evidence() -> dict:
    rep = gauram.overlap_report(1.8, 0.09)
    return {"T0": 1.8, "delta": 0.09, "exact": rep.exact, "approx": rep.approx,
            "percent_error": rep.percent_error_approx_vs_exact, "printed_percent_error": 2.6}


def _magnitude_evidence() -> dict:
    f, T0 = 0.2, 1.8
    g = math.exp(-math.pi * f * f)
    return {"f": f, "T0": T0,
            "abs_spectrum": abs(spectral.gr1_spectrum(f, T0)),
            "sqrt2_form": spectral.gr1_magnitude(f, T0),
            "coefficient_2_form": 2 * g * abs(math.sin(math.pi * f * T0))}


def _group_delay_evidence() -> dict:
    T0, f, h = 1.8, 0.2, 1e-6
    slope = (spectral.gr1_phase(f + h, T0) - spectral.gr1_phase(f - h, T0)) / (2 * h)
    return {"T0": T0, "numeric_group_delay": -slope / (2 * math.pi),
            "implemented": spectral.group_delay(T0), "printed": math.pi * T0}


def _r3_evidence() -> dict:
    seq = ramanujan.sequence(3)
    listed = seq.listed_form
    return {"listed": list(listed), "listed_l2_norm": float(np.linalg.norm(listed)),
            "unit_norm_weights": list(seq.weights)}


def _offset_evidence() -> dict:
    cfg = modulation.CpmConfig(fc=1.0, T=1.0, h=0.5, E=1.0, T0=0.5)
    diffs = [modulation.grsk_phase_pulse(t, cfg) - modulation.grsk_phase_pulse_quadrature(t, cfg)
             for t in (0.1, 0.3, 0.5, 0.7, 0.9)]
    const = cfg.kappa / (2 * math.sqrt(2)) * math.erf(math.sqrt(math.pi) * cfg.T0)
    return {"T": cfg.T, "T0": cfg.T0, "kappa": cfg.kappa, "closed_minus_integral": diffs,
            "kappa_erf_constant": const}


def _terminal_evidence() -> dict:
    cfg = modulation.CpmConfig(fc=1.0, T=1.0, h=0.5, E=1.0, T0=0.5)
    return {"q_closed_form_at_0": modulation.grsk_phase_pulse(0.0, cfg),
            "q_closed_form_at_T": modulation.grsk_phase_pulse(cfg.T, cfg),
            "printed_normalised_value_on_0_T": 0.5}


def _modulation_index_evidence() -> dict:
    idx = modulation.grm_modulation_index(1.8)
    return {"T0": 1.8, "nominal": idx.nominal, "window_max": idx.window_max,
            "window": list(idx.window), "limit_t_to_inf": math.pi / 2}


def _grm_envelope_sign_evidence() -> dict:
    params = modulation.GrmParams(fc=4.0, T0=1.8)
    t = np.linspace(-3.0, 5.0, 8001)
    direct = modulation.grm_waveform(t, params)
    return {"fc": 4.0, "T0": 1.8,
            "max_abs_diff_i_plus_jq": float(np.max(np.abs(
                direct - modulation.grm_waveform_canonical(t, params)))),
            "max_abs_diff_i_minus_jq": float(np.max(np.abs(
                direct - modulation.grm_waveform_canonical(t, params, conjugate=True))))}


def _grm_spectrum_evidence() -> dict:
    params = modulation.GrmParams(fc=4.0, T0=1.8)
    t = np.linspace(-12.0, 14.0, 52001)
    x = modulation.grm_waveform(t, params)
    f = np.array([3.8, 4.0, 4.3])
    direct = (np.exp(-2j * np.pi * np.outer(f, t)) @ x) * (t[1] - t[0])
    derived = modulation.grm_spectrum(f, params)
    printed = modulation.grm_spectrum(f, params, form="printed")
    return {"fc": 4.0, "T0": 1.8,
            "derived_max_abs_err": float(np.max(np.abs(derived - direct))),
            "printed_max_abs_err": float(np.max(np.abs(printed - direct)))}


def _hermite_evidence() -> dict:
    m = wavelet.tf_metrics("hermite")
    return {"delta_omega": m.delta_omega, "printed_delta_omega": math.sqrt(0.5),
            "delta_t": m.delta_t, "product": m.product, "printed_product": 0.866}


def _gr_row_evidence() -> dict:
    m = wavelet.tf_metrics("gauram", 1.0)
    return {"T0": 1.0, "delta_t": m.delta_t, "delta_t_centered": m.delta_t_centered,
            "delta_omega": m.delta_omega, "product": m.product,
            "printed": dict(wavelet.REFERENCE_CONTAINMENT["gauram"])}


def _ht_value_evidence() -> dict:
    return {"T0": 2.45, "quadrature_inner_product": hilbert.ht_orthogonality_defect(2.45),
            "printed": 2.72e-17}


ERRATA: tuple[Erratum, ...] = (
    Erratum("mean-overlap-prefactor",
            "approximation prefactor written with beta*pi*delta^2 in the derivation",
            "alpha*pi*delta^2, which the quadratic-exponential Q fit actually produces",
            _prefactor_evidence),
    Erratum("mean-overlap-approx-accuracy",
            "approximation within roughly 2.6% of the exact mean overlap at T0=1.8, delta=0.09",
            "percent error computed and reported; not asserted",
            _approx_accuracy_evidence),
    Erratum("gr1-magnitude-coefficient",
            "|GR_I(f)| = 2 G(f) |sin(pi f T0)|",
            "sqrt(2) G(f) |sin(pi f T0)|, equal to G(f) sqrt(1 - cos(2 pi f T0))",
            _magnitude_evidence),
    Erratum("gr1-group-delay",
            "group delay pi*T0",
            "-(1/2pi) d(phase)/df = T0/2 (constant in f)",
            _group_delay_evidence),
    Erratum("ramanujan-r3-normalisation",
            "R=3 sequence listed as {1, -1/2, -1/2} although sequences are called unit-norm",
            "unit L2 norm by default; listed form kept as RamanujanSequence.listed_form",
            _r3_evidence),
    Erratum("grsk-phase-pulse-offset",
            "erf closed form presented as the integral of the frequency pulse from 0",
            "closed form kept verbatim; it exceeds the true integral by kappa/(2 sqrt2) erf(sqrt(pi) T0)",
            _offset_evidence),
    Erratum("grsk-normalised-phase-pulse",
            "normalised phase pulse equal to 1/2 on the whole of [0, T]",
            "treated as the terminal-value convention only; kappa sets q(T) = 1/2",
            _terminal_evidence),
    Erratum("grm-modulation-index",
            "max |phase| taken as pi/4",
            "pi/4 is the phase at t = T0/2; the phase keeps growing toward pi/2, both reported",
            _modulation_index_evidence),
    Erratum("grm-complex-envelope-sign",
            "bandpass waveform I cos - g(t-T0) sin/sqrt2 equals Re{(I + jQ) exp(j wc t)} with Q = -g(t-T0)/sqrt2",
            "both kept verbatim; they differ by the sign of the quadrature term, Re{(I - jQ) exp(j wc t)} matches",
            _grm_envelope_sign_evidence),
    Erratum("grm-bandpass-spectrum",
            "common factor exp(-j(2 pi f T0 - pi/2)) on the quadrature lobes",
            "exact transform with exp(-2j pi (f -/+ fc) T0) per lobe and +j sign",
            _grm_spectrum_evidence),
    Erratum("hermite-delta-omega",
            "Hermite delta_omega = sqrt(0.5), product 0.866",
            "int |psi'|^2 dt = 1.5, so delta_omega = sqrt(1.5) and product 1.5",
            _hermite_evidence),
    Erratum("gauram-containment-row",
            "GR wavelet at T0=1: delta_t 0.720, delta_omega 1.055, product 0.760",
            "quadrature values reported alongside",
            _gr_row_evidence),
    Erratum("gr1-hilbert-inner-product",
            "inner product of GR_I and its Hilbert transform 2.72e-17 at T0=2.45",
            "zero up to quadrature tolerance (1e-8); the exact residue is rounding noise",
            _ht_value_evidence),
)


def errata_report() -> list[dict]:
    return [e.report() for e in ERRATA]
