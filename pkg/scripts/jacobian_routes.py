"""Compare every Jacobian route on random complex polynomials and report worst errors per n."""

from __future__ import annotations

import time
from dataclasses import dataclass

from _config import parse_config
from momentmap.moments import jacobian_report
from momentmap.sampling import random_poly, trial_rng


@dataclass
class Config:
    seed: int = 1
    trials: int = 200
    n_max: int = 8


def main(cfg: Config):
    print(f"{'n':>2} {'analytic~closed':>16} {'analytic~ymatrix':>17} {'fd (modulus)':>13} {'sec':>6}")
    for n in range(1, cfg.n_max + 1):
        start = time.perf_counter()
        worst = {}
        for t in range(cfg.trials):
            rep = jacobian_report(random_poly(trial_rng(cfg.seed + n, t), n))
            for key, err in rep.pairwise_rel_errors.items():
                worst[key] = max(worst.get(key, 0.0), err)
        print(
            f"{n:>2} {worst['analytic~closed_form']:16.2e} {worst['analytic~y_matrix']:17.2e} "
            f"{worst['analytic~finite_diff']:13.2e} {time.perf_counter() - start:6.2f}"
        )


if __name__ == "__main__":
    main(parse_config(Config, __doc__.splitlines()[0]))
