"""Tabulate every bound against k for one locality requirement.

    python3 scripts/bound_tables.py --req '{"delta":2,"n":[2,3,4]}'
"""

import argparse

from ulrc.bounds import build_report
from ulrc.cli import load_json_arg
from ulrc.locality import LocalityRequirement

COLUMNS = ("d_classic", "d_classic_rmin", "d_UB_prf", "d_UB_req_prf", "d_UB_req", "d_UB_req_loose", "r_req")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--req", default='{"delta":2,"n":[2,3,4]}')
    args = ap.parse_args()
    req = LocalityRequirement.from_json(load_json_arg(args.req))

    head = build_report(req)
    print(f"requirement {list(req.n)}, delta={req.delta}, n={req.length}")
    print(f"k_UB_req = {head.k_UB_req} (floor {head.k_UB_req_floor}), k_UB_req_prf = {head.k_UB_req_prf}")
    print(f"{'k':>3} " + " ".join(f"{c:>15}" for c in COLUMNS) + "  two-locality")
    for k in range(1, req.length + 1):
        rep = build_report(req, k).to_dict()
        cells = " ".join(f"{'-' if rep[c] is None else rep[c]:>15}" for c in COLUMNS)
        tl = rep["two_locality"]
        extra = f"basic={tl['basic']} tightened={tl['tightened']}" if tl else ""
        print(f"{k:>3} {cells}  {extra}")


if __name__ == "__main__":
    main()
