"""Failure-rate sweep of the local-first repair policy on one construction.

    python3 scripts/simulate_example.py --rounds 500 --seed 1
"""

import argparse
import json

from ulrc.simulate import SimConfig, run_simulation


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--params", default='{"p":5,"a":1,"t":6,"delta":2,"m":[1,1,1],"k":4}')
    ap.add_argument("--rounds", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--probs", type=float, nargs="+", default=[0.02, 0.05, 0.1, 0.2, 0.3, 0.5])
    args = ap.parse_args()
    params = json.loads(args.params)

    print(f"{'fail_prob':>9} {'local':>6} {'reads/rep':>9} {'global':>6} {'loss':>5} {'avail':>6}")
    for prob in args.probs:
        rep = run_simulation(SimConfig(params, rounds=args.rounds, fail_prob=prob, seed=args.seed))
        per = rep.symbols_read / rep.local_repairs if rep.local_repairs else 0.0
        print(f"{prob:>9.2f} {rep.local_repairs:>6} {per:>9.2f} {rep.global_decodes:>6} {rep.data_loss_events:>5} {rep.availability:>6.3f}")


if __name__ == "__main__":
    main()
