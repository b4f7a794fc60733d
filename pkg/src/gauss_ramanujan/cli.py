"""``gauram`` command line: figure data as CSV, metrics as JSON, self-validation.

Exit status: 0 success, 1 validation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import hashlib
import io
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import gauram, hilbert, modulation, spectral, validation, wavelet
from .numerics import Grid

SPEC_VERSION = validation.SPEC_VERSION


def fmt(x: float) -> str:
    """12 significant digits, no negative zero."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return format(x, ".12g")


class Output:
    """Collects CSV tables for one command and writes them with a manifest."""

    def __init__(self, command: str, params: dict, out: str | None, seed: int | None = None):
        self.command = command
        self.params = {k: v for k, v in sorted(params.items()) if v is not None}
        self.out = out
        self.seed = seed
        self.files: list[tuple[str | None, str]] = []

    @property
    def manifest(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.params,
            "spec_version": SPEC_VERSION,
            "seed": self.seed,
            "output_paths": [p for p, _ in self.files if p is not None],
        }

    def manifest_hash(self) -> str:
        blob = json.dumps({k: v for k, v in self.manifest.items() if k != "output_paths"},
                          sort_keys=True, default=str)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def table(self, columns: list[str], rows, path: str | None = None,
              footer: list[str] | None = None) -> None:
        buf = io.StringIO(newline="")
        buf.write(f"# gauram {self.command} manifest={self.manifest_hash()}\n")
        buf.write(",".join(columns) + "\n")
        for row in rows:
            buf.write(",".join(fmt(v) for v in row) + "\n")
        for line in footer or ():
            buf.write(f"# {line}\n")
        self.files.append((path, buf.getvalue()))

    def sidecar(self, suffix: str) -> str | None:
        if self.out is None:
            return None
        p = Path(self.out)
        return str(p.with_name(p.stem + suffix))

    def write(self, json_payload: dict | None = None, json_path: str | None = None) -> None:
        if json_payload is not None and json_path is not None:
            self.files.append((json_path, json.dumps(json_payload, sort_keys=True, indent=2) + "\n"))
        if self.out is None:
            for _, text in self.files:
                sys.stdout.write(text)
            return
        for path, text in self.files:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        with open(self.out + ".manifest.json", "w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(self.manifest, sort_keys=True, indent=2) + "\n")


def _grid(parser: argparse.ArgumentParser, text: str, flag: str) -> np.ndarray:
    try:
        return Grid.parse(text).samples()
    except ValueError as exc:
        parser.error(f"{flag}: {exc}")


def _require(parser, args, form: str, *flags: str) -> None:
    for flag in flags:
        if getattr(args, flag.lstrip("-").replace("-", "_")) is None:
            parser.error(f"{flag} is required for {form}")


def _seed(args) -> int | None:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("GAURAM_SEED")
    return int(env) if env else None


def cmd_overlap(args, parser) -> int:
    if not args.t0 > 0:
        parser.error("--t0 must be positive")
    if args.sweep_delta:
        deltas = _grid(parser, args.sweep_delta, "--sweep-delta")
    elif args.delta is not None:
        deltas = np.array([args.delta])
    else:
        parser.error("one of --delta or --sweep-delta is required")
    seed = _seed(args)
    if args.mc_samples and seed is None:
        parser.error("--mc-samples needs --seed (or GAURAM_SEED)")
    columns = ["delta", "exact", "approx", "oracle", "percent_error"]
    if args.mc_samples:
        columns += ["monte_carlo", "monte_carlo_stderr"]
    rows = []
    for d in deltas:
        rep = gauram.overlap_report(args.t0, float(d), seed, monte_carlo_samples=args.mc_samples)
        row = [d, rep.exact, rep.approx, rep.oracle, rep.percent_error_approx_vs_exact]
        if args.mc_samples:
            row += [rep.monte_carlo, rep.monte_carlo_stderr]
        rows.append(row)
    out = Output("overlap", {"t0": args.t0, "delta": args.delta, "sweep_delta": args.sweep_delta,
                             "mc_samples": args.mc_samples}, args.out, seed)
    out.table(columns, rows, args.out)
    out.write()
    return 0


def _bits(parser, text: str) -> tuple[int, ...]:
    try:
        bits = tuple(int(b) for b in text.replace(" ", "").split(",") if b)
    except ValueError:
        parser.error("--bits must be a comma-separated list of +1/-1")
    if not bits or any(b not in (1, -1) for b in bits):
        parser.error("--bits must be a comma-separated list of +1/-1")
    return bits


def cmd_waveform(args, parser) -> int:
    t = _grid(parser, args.grid, "--grid")
    form = args.form
    if form != "gp":
        _require(parser, args, f"--form {form}", "--t0")
    if form in ("grm", "grsk"):
        _require(parser, args, f"--form {form}", "--fc")
    if form == "grsk":
        _require(parser, args, "--form grsk", "--bits")
    columns, cols = ["t", "value"], None
    if form == "gp":
        cols = [gauram.gp(t)]
        if args.t0 is not None:
            columns.append("dgp")
            cols.append(gauram.dgp(t, args.t0))
    elif form == "dgp":
        cols = [gauram.dgp(t, args.t0)]
    elif form in ("gr1", "gr2", "gr3"):
        build = {"gr1": gauram.order_one, "gr2": gauram.order_two, "gr3": gauram.order_three}[form]
        cols = [build(args.t0)(t)]
    elif form == "grm":
        params = modulation.GrmParams(fc=args.fc, T0=args.t0)
        i, q = modulation.grm_iq(t, args.t0)
        columns += ["i", "q", "envelope"]
        cols = [modulation.grm_waveform(t, params), i, q, modulation.grm_envelope(t, args.t0)]
    elif form == "grsk":
        cfg = modulation.CpmConfig(fc=args.fc, T=args.t_symbol, h=args.h, E=args.energy,
                                   T0=args.t0, bits=_bits(parser, args.bits), kappa=args.kappa)
        columns += ["phase"]
        cols = [modulation.grsk_waveform(t, cfg), modulation.grsk_phase(t, cfg)]
    out = Output("waveform", {"form": form, "t0": args.t0, "fc": args.fc, "grid": args.grid,
                              "bits": args.bits, "t_symbol": args.t_symbol, "h": args.h,
                              "energy": args.energy, "kappa": args.kappa}, args.out)
    out.table(columns, zip(t, *cols), args.out)
    out.write()
    return 0


def cmd_spectrum(args, parser) -> int:
    f = _grid(parser, args.fgrid, "--fgrid")
    target = args.target
    if target == "gr1":
        _require(parser, args, "--target gr1", "--t0")
        values = spectral.gr1_spectrum(f, args.t0)
    elif target == "gmsk":
        _require(parser, args, "--target gmsk", "--bt")
        values = spectral.pulse_spectrum_analytic("gmsk", f, rho=spectral.rho_from_bt(args.bt))
    elif target == "grsk":
        _require(parser, args, "--target grsk", "--t0")
        if args.eta is None and args.bt is None:
            parser.error("--eta or --bt is required for --target grsk")
        eta = args.eta if args.eta is not None else spectral.rho_from_bt(args.bt)
        values = spectral.pulse_spectrum_analytic("grsk", f, eta=eta, T0=args.t0)
    else:
        _require(parser, args, "--target grm", "--t0", "--fc")
        values = modulation.grm_spectrum(f, modulation.GrmParams(fc=args.fc, T0=args.t0))
    points = spectral.normalized_psd(spectral.spectrum_points(f, values))
    out = Output("spectrum", {"target": target, "t0": args.t0, "bt": args.bt, "eta": args.eta,
                              "fc": args.fc, "fgrid": args.fgrid}, args.out)
    out.table(["f", "magnitude", "phase", "psd_db"],
              [(p.f, p.magnitude, p.phase, p.psd_db) for p in points], args.out)
    if target == "grsk":
        f_max = float(np.max(np.abs(f)))
        nulls = spectral.null_frequencies(args.t0, f_max) if f_max > 0 else []
        out.table(["f_null"], [(v,) for v in nulls], out.sidecar(".nulls.csv"))
    out.write()
    return 0


def cmd_hilbert(args, parser) -> int:
    if not args.t0 > 0:
        parser.error("--t0 must be positive")
    t = _grid(parser, args.grid, "--grid")
    defect = hilbert.ht_orthogonality_defect(args.t0)
    out = Output("hilbert", {"t0": args.t0, "grid": args.grid}, args.out)
    out.table(["t", "gr1", "hilbert_gr1"],
              zip(t, gauram.order_one(args.t0)(t), hilbert.hilbert_gr1(t, args.t0)),
              args.out, footer=[f"orthogonality_defect,{fmt(defect)}"])
    out.write()
    return 0


def cmd_wavelet(args, parser) -> int:
    if not args.t0 > 0:
        parser.error("--t0 must be positive")
    tau = _grid(parser, args.tau_grid, "--tau-grid")
    columns = ["tau", "r_gr"]
    cols = [wavelet.autocorr_gr(tau, args.t0)]
    if args.compare_hermite:
        columns.append("r_hermite")
        cols.append(wavelet.autocorr_hermite(tau))
    comp = wavelet.containment_comparison(args.t0)
    payload = {"spec_version": SPEC_VERSION, "T0": args.t0, "gauram": comp["gauram"],
               "table1_target": comp["gauram"]["table1_target"]}
    if args.compare_hermite:
        payload["hermite"] = comp["hermite"]
    out = Output("wavelet", {"t0": args.t0, "compare_hermite": args.compare_hermite,
                             "tau_grid": args.tau_grid}, args.out)
    out.table(columns, zip(tau, *cols), args.out)
    json_path = args.json or out.sidecar(".metrics.json")
    if json_path is None:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    out.write(payload, json_path)
    return 0


def cmd_validate(args, parser) -> int:
    report = validation.run(args.suite)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for c in report["checks"]:
        if not c["passed"]:
            print(f"FAIL [{c['suite']}] {c['name']}: {c['detail']} (value={c['value']!r}, "
                  f"tol={c['tolerance']!r})", file=sys.stderr)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gauram", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("overlap", help="mean pulse overlap vs delay offset")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--sweep-delta", metavar="LO:HI:N")
    p.add_argument("--seed", type=int)
    p.add_argument("--mc-samples", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("waveform", help="time-domain traces")
    p.add_argument("--form", required=True, choices=["gp", "dgp", "gr1", "gr2", "gr3", "grm", "grsk"])
    p.add_argument("--t0", type=float)
    p.add_argument("--fc", type=float)
    p.add_argument("--grid", default="-3:5:801", metavar="A:B:N")
    p.add_argument("--bits", help="comma-separated +1/-1 symbols (grsk)")
    p.add_argument("--t-symbol", type=float, default=1.0)
    p.add_argument("--h", type=float, default=0.5)
    p.add_argument("--energy", type=float, default=1.0)
    p.add_argument("--kappa", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_waveform)

    p = sub.add_parser("spectrum", help="analytic spectra and normalised PSD")
    p.add_argument("--target", required=True, choices=["gr1", "gmsk", "grsk", "grm"])
    p.add_argument("--t0", type=float)
    p.add_argument("--bt", type=float)
    p.add_argument("--eta", type=float)
    p.add_argument("--fc", type=float)
    p.add_argument("--fgrid", default="-2:2:401", metavar="A:B:N")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("hilbert", help="GR_I and its Hilbert transform")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--grid", default="-4:7:1101", metavar="A:B:N")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("wavelet", help="wavelet autocorrelations and containment metrics")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--compare-hermite", action="store_true")
    p.add_argument("--tau-grid", default="-6:6:601", metavar="A:B:N")
    p.add_argument("--json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_wavelet)

    p = sub.add_parser("validate", help="run the self-checks")
    p.add_argument("--suite", default="all", choices=["all", *validation.SUITES])
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValueError as exc:
        # domain errors from the library are usage problems at this layer
        print(f"gauram {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
