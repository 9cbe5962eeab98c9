"""Trajectories of dim (V_R / T V_{R-1})^{I(1)} for every weight at small p.

Usage: python scripts/hecke_stabilization.py [--primes 2 3 5] [--radius 4]
Prints one line per weight and a JSON summary on the last line.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from serreweights.modp_llc import coker_I1_dimension, weight


@dataclass
class Config:
    primes: list[int] = field(default_factory=lambda: [2, 3, 5])
    radius: int = 4
    max_radius_p5: int = 3  # p = 5 at radius 4 takes minutes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+", default=Config().primes)
    ap.add_argument("--radius", type=int, default=Config().radius)
    cfg = Config(**vars(ap.parse_args()))
    rows = []
    for p in cfg.primes:
        radius = min(cfg.radius, cfg.max_radius_p5) if p >= 5 else cfg.radius
        for r in range(p):
            for w in range(max(p - 1, 1)):
                t = time.time()
                res = coker_I1_dimension(weight(p, r, w), radius)
                rows.append({"p": p, "r": r, "w": w, "trajectory": list(res.trajectory),
                             "stabilized": res.stabilized, "seconds": round(time.time() - t, 2)})
                print(f"p={p} r={r} w={w} trajectory={res.trajectory} stabilized={res.stabilized}")
    first = {}
    for row in rows:
        traj = row["trajectory"]
        first[f'{row["p"]},{row["r"]},{row["w"]}'] = next(i for i in range(len(traj)) if all(x == traj[-1] for x in traj[i:]))
    print(json.dumps({"config": asdict(cfg), "final_dims": sorted({row["trajectory"][-1] for row in rows}),
                      "stable_from_radius": first}))


if __name__ == "__main__":
    main()
