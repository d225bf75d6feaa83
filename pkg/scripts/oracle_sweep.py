"""Compare both solvers with the brute-force oracle on labeled and random universes."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from nzflow.experiments import sweep_labeled, sweep_random


@dataclass
class SweepConfig:
    max_n: int = 6
    random_count: int = 1000
    random_n: int = 7
    random_max_m: int = 14
    seed: int = 0


def run(cfg: SweepConfig) -> dict:
    t0 = time.perf_counter()
    stats = sweep_labeled(cfg.max_n).merge(
        sweep_random(cfg.random_count, cfg.random_n, cfg.random_max_m, cfg.seed)
    )
    return {
        "config": asdict(cfg),
        "graphs": stats.graphs,
        "flows": stats.flows,
        "no_flows": stats.no_flows,
        "irrelevant_outcomes": stats.irrelevant,
        "independent_runs": stats.independent_runs,
        "failures": stats.failures[:20],
        "seconds": round(time.perf_counter() - t0, 1),
    }


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(SweepConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = SweepConfig(**vars(p.parse_args()))
    result = run(cfg)
    print(json.dumps(result, indent=2))
    return 1 if result["failures"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
