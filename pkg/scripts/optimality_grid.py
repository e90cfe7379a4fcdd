"""Distance of every construction in a small parameter grid: oracle vs greedy vs bound.

    python3 scripts/optimality_grid.py --p 5 --deltas 2 3
"""

import argparse
import itertools
import time

from ulrc.bounds import bound_d_req
from ulrc.construction import LrcParams, lrc_construct, lrc_min_distance
from ulrc.fields import build_tower
from ulrc.oracle import oracle_min_distance, oracle_profile

M_CHOICES = ((1, 1), (1, 1, 1), (2, 1), (1, 2))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--deltas", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--no-profile", action="store_true", help="skip the per-symbol locality oracle")
    args = ap.parse_args()

    print(f"{'delta':>5} {'m':>9} {'k':>2} {'n':>3} {'oracle':>6} {'greedy':>6} {'bound':>5}  profile")
    t0, mismatches = time.perf_counter(), 0
    for delta, m in itertools.product(args.deltas, M_CHOICES):
        n_gab = sum(v * j for j, v in enumerate(m, 1))
        tower = build_tower(args.p, 1, n_gab)
        for k in range(len(m), n_gab + 1):
            code = lrc_construct(LrcParams(tower, delta, m, k))
            d_o = oracle_min_distance(tower, code.G)
            d_g = lrc_min_distance(code)
            d_b = bound_d_req(code.requirement, k).d
            prof = "-" if args.no_profile else str(oracle_profile(tower, code.G, delta).n)
            mismatches += not d_o == d_g == d_b
            print(f"{delta:>5} {str(m):>9} {k:>2} {code.n:>3} {d_o:>6} {d_g:>6} {d_b:>5}  {prof}")
    print(f"mismatches: {mismatches}   elapsed: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
