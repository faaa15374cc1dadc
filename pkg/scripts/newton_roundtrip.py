"""Invert moments from perturbed starts and tabulate iterations and recovery error per n."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from _config import parse_config
from momentmap.inverse import NewtonError, newton_invert
from momentmap.moments import moment_vector
from momentmap.sampling import round_trip_case, trial_rng


@dataclass
class Config:
    seed: int = 3
    trials: int = 200
    n_max: int = 6
    perturbation: float = 0.05
    max_cond: float = 1e4


def main(cfg: Config):
    for n in range(1, cfg.n_max + 1):
        iters = Counter()
        errors = []
        failures = Counter()
        for t in range(cfg.trials):
            p, init = round_trip_case(trial_rng(cfg.seed + n, t), n, cfg.perturbation, cfg.max_cond)
            try:
                trace = newton_invert(moment_vector(p), init)
            except NewtonError as exc:
                failures[exc.tag] += 1
                continue
            iters[trace.iterations] += 1
            errors.append(float(np.max(np.abs(trace.solution.a - p.a))))
        worst = max(errors) if errors else float("nan")
        print(f"n={n}: iterations {dict(sorted(iters.items()))}, max coef err {worst:.2e}, failures {dict(failures)}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__.splitlines()[0]))
