"""Injection-driven evolution of a polynomial domain; writes boundary CSVs, an SVG overlay and a trace."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from _config import parse_config
from momentmap import fileio
from momentmap.inverse import boundary_samples, heleshaw_evolve
from momentmap.poly import NormalizedPoly


@dataclass
class Config:
    a2: float = 0.1
    a3: float = 0.05
    rate: float = 1.0
    t_end: float = 3.0
    steps: int = 30
    samples: int = 256
    out: str = "runs/heleshaw"


def main(cfg: Config):
    p0 = NormalizedPoly([1.0, cfg.a2, cfg.a3])
    trace = heleshaw_evolve(p0, cfg.rate, cfg.t_end, cfg.steps)
    out = Path(cfg.out)
    curves = [boundary_samples(p, cfg.samples) for p in trace.polynomials]
    for i, rows in enumerate(curves):
        fileio.atomic_write(out / f"boundary_{i:04d}.csv", fileio.boundary_csv(rows))
    fileio.atomic_write(out / "overlay.svg", fileio.svg_overlay(curves))
    fileio.atomic_write(out / "trace.json", fileio.dumps(trace.to_dict()) + "\n")
    print(f"{'t':>6} {'area':>10} {'|mu_k drift|':>13} {'newton':>6}")
    for t, area, err, it in zip(trace.times, trace.areas, trace.moment_errors, trace.newton_iterations):
        print(f"{t:6.2f} {area:10.6f} {err:13.2e} {it:6d}")
    print(f"wrote {len(curves)} boundaries to {out}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__.splitlines()[0]))
