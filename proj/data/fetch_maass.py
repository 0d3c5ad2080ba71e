#!/usr/bin/env python3
"""Fetch Hecke eigenvalue data for a Maass cusp form on SL(2,Z) and write it
in the JSON layout expected by rsnum::automorphic::load_maass_form:

    {"R": <spectral parameter>, "parity": "even"|"odd",
     "coeffs": [a1, a2, ...], "source": "<provenance string>"}

The repository ships data/mock_maass.json, a synthetic non-arithmetic form
used only for plumbing tests.  For a real eigenform, download one from the
LMFDB Maass form collection (https://www.lmfdb.org/ModularForm/GL2/Q/Maass/)
and convert it here.  Network access is typically unavailable in the build
sandbox, so this script is a stub: it validates and normalizes an
already-downloaded LMFDB JSON export rather than fetching over the wire.

Usage:
    python3 fetch_maass.py lmfdb_export.json out_maass.json
"""

import json
import sys


def convert(src_path, dst_path):
    with open(src_path) as f:
        src = json.load(f)

    # LMFDB exports name these fields "spectral_parameter", "symmetry"
    # (0 = even, 1 = odd) and "coefficients"; accept our own layout too.
    r = src.get("spectral_parameter", src.get("R"))
    if r is None:
        raise SystemExit("no spectral parameter in input")
    sym = src.get("symmetry", src.get("parity"))
    parity = {0: "even", 1: "odd", "even": "even", "odd": "odd"}[sym]
    coeffs = [float(c) for c in src.get("coefficients", src.get("coeffs", []))]
    if len(coeffs) < 50:
        raise SystemExit("need at least 50 coefficients for the Dirichlet-series tail audit")
    if abs(coeffs[0] - 1.0) > 1e-12:
        raise SystemExit("coefficients must be Hecke-normalized (a_1 = 1)")

    out = {
        "R": float(r),
        "parity": parity,
        "coeffs": coeffs,
        "source": src.get("label", src_path),
    }
    with open(dst_path, "w") as f:
        json.dump(out, f, indent=1)
    print(f"wrote {dst_path}: R={out['R']}, {parity}, {len(coeffs)} coefficients")


if __name__ == "__main__":
    if len(sys.argv) != 3:
        raise SystemExit(__doc__)
    convert(sys.argv[1], sys.argv[2])
