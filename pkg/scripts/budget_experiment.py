"""Free-edge count b against the bound 3*max(k,0)+1 on sparse minimum-degree-3 graphs."""

import argparse
import collections
import random
from fractions import Fraction
from dataclasses import dataclass, field

from nzflow.experiments import sparse_min_degree3
from nzflow.solver import solve_full


@dataclass
class BudgetConfig:
    count: int = 100
    seed: int = 0
    sizes: list[int] = field(default_factory=lambda: list(range(8, 17)))


def run(cfg: BudgetConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    rows = []
    made = 0
    while made < cfg.count:
        g = sparse_min_degree3(rng.choice(cfg.sizes), rng.randrange(2**32))
        if g is None:
            continue
        made += 1
        trace: list = []
        solve_full(g, trace)
        rows += [b.as_dict() for _, _, b in trace if b.b is not None]
    return rows


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rows = run(BudgetConfig(args.count, args.seed))
    slack = collections.Counter()
    violations = 0
    for r in rows:
        gap = Fraction(r["bound"]) - r["b"]
        slack[gap] += 1
        violations += gap < 0 or r["enumerated"] != 2 ** r["b"]
    print(f"independent-branch passes: {len(rows)}")
    print(f"max b: {max((r['b'] for r in rows), default=0)}")
    print("bound - b histogram:")
    for gap, n in sorted(slack.items()):
        print(f"  {str(gap):>6}: {n}")
    print(f"violations: {violations}")
    return 1 if violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
