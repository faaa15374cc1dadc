"""JSON polynomial/moment files, boundary CSV and the SVG overlay.

Coefficients are [re, im] pairs.  Floats go through ``repr`` (shortest
round-trip), so load(save(x)) reproduces x bit for bit.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .moments import MomentVector
from .poly import NormalizedPoly


class FileFormatError(ValueError):
    pass


def _pair(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _unpair(item, what: str) -> complex:
    if (
        not isinstance(item, (list, tuple))
        or len(item) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)
    ):
        raise FileFormatError(f"{what}: expected [re, im], got {item!r}")
    z = complex(float(item[0]), float(item[1]))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise FileFormatError(f"{what}: non-finite value {item!r}")
    return z


def poly_to_dict(p: NormalizedPoly) -> dict:
    return {"n": p.n, "a": [_pair(z) for z in p.a]}


def poly_from_dict(d) -> NormalizedPoly:
    if not isinstance(d, dict) or "n" not in d or "a" not in d:
        raise FileFormatError("polynomial file needs keys 'n' and 'a'")
    n, a = d["n"], d["a"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FileFormatError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(a, list) or len(a) != n:
        raise FileFormatError(f"'a' must list {n} coefficients")
    coeffs = [_unpair(item, f"a[{i}]") for i, item in enumerate(a)]
    try:
        return NormalizedPoly(np.array(coeffs, dtype=complex))
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def moments_to_dict(m: MomentVector) -> dict:
    return {"n": m.n, "mu0": float(m.mu0), "mu": [_pair(z) for z in m.mu]}


def moments_from_dict(d) -> MomentVector:
    if not isinstance(d, dict) or not {"n", "mu0", "mu"} <= d.keys():
        raise FileFormatError("moment file needs keys 'n', 'mu0' and 'mu'")
    n, mu0, mu = d["n"], d["mu0"], d["mu"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FileFormatError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(mu0, (int, float)) or isinstance(mu0, bool) or not mu0 > 0:
        raise FileFormatError(f"'mu0' must be a positive number, got {mu0!r}")
    if not isinstance(mu, list) or len(mu) != n - 1:
        raise FileFormatError(f"'mu' must list {n - 1} moments")
    return MomentVector(n, float(mu0), [_unpair(item, f"mu[{i}]") for i, item in enumerate(mu)])


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc


def load_poly(path) -> NormalizedPoly:
    return poly_from_dict(_read_json(path))


def load_moments(path) -> MomentVector:
    return moments_from_dict(_read_json(path))


def dumps(obj) -> str:
    return json.dumps(obj, allow_nan=False)


def atomic_write(path, text: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def save_poly(p: NormalizedPoly, path):
    atomic_write(path, dumps(poly_to_dict(p)) + "\n")


def boundary_csv(rows: np.ndarray) -> str:
    lines = ["theta,x,y"]
    lines += [",".join(repr(float(v)) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def svg_overlay(curves: list[np.ndarray], size: int = 512) -> str:
    """One polyline per curve of (theta, x, y) rows, sharing a common frame."""
    pts = np.concatenate([c[:, 1:] for c in curves])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    pad = 0.05 * span
    scale = size / (span + 2 * pad)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    for c in curves:
        xs = (c[:, 1] - lo[0] + pad) * scale
        ys = size - (c[:, 2] - lo[1] + pad) * scale
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(xs, ys))
        coords += f" {xs[0]:.3f},{ys[0]:.3f}"
        out.append(f'<polyline fill="none" stroke="black" stroke-width="1" points="{coords}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
