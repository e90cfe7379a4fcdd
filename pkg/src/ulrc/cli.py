"""ulrc command line.

Exit codes: 0 ok, 1 verification failure, 2 parse/config error,
3 constraint violation, 4 data loss, 5 local repair infeasible, 6 size cap.
Symbol indices are 1-based on every external surface.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import bound_d_profile, bound_k_profile, build_report
from .construction import (
    LrcParams,
    format_word,
    from_descriptor,
    lrc_construct,
    lrc_encode,
    lrc_global_decode,
    lrc_local_repair,
    parse_word,
    to_descriptor,
)
from .errors import LrcError, ParseError
from .locality import LocalityProfile, LocalityRequirement, enumerate_profiles
from .simulate import SimConfig, run_simulation
from .verify import report, verify_code


def load_json_arg(text: str):
    """Inline JSON if it parses, otherwise a path to a JSON file."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        try:
            return json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad inline JSON: {exc}") from exc
    try:
        with open(text) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {text}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{text}: bad JSON: {exc}") from exc


def _read_lines(path):
    try:
        with open(path) as fh:
            return fh.readlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def parse_indices(text, n):
    """'1,4,9' -> [0, 3, 8], range-checked against n."""
    if not text:
        return []
    try:
        idx = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ParseError(f"bad index list {text!r}") from exc
    bad = [i for i in idx if not 1 <= i <= n]
    if bad:
        raise ParseError(f"indices {bad} outside [1, {n}]")
    return sorted({i - 1 for i in idx})


def _load_code(path):
    return from_descriptor(load_json_arg(path))


def _load_word(args, code):
    word = parse_word(_read_lines(args.word), code.n)
    for i in parse_indices(args.erase, code.n):
        word[i] = None
    return word


def _table(rep) -> str:
    rows = [(k, v) for k, v in rep.to_dict().items() if v is not None and k != "infeasible"]
    rows += [(f"infeasible.{k}", v) for k, v in rep.infeasible.items()]
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def cmd_bounds(args):
    obj = load_json_arg(args.req)
    cls = LocalityProfile if args.profile else LocalityRequirement
    vec = cls.from_json(obj)
    rep = build_report(vec, args.k, as_profile=args.profile)
    sys.stdout.write(_dump(rep.to_dict()) if args.format == "json" else _table(rep))
    return 0


def cmd_profile_search(args):
    req = LocalityRequirement.from_json(load_json_arg(args.req))
    out = []
    for prof in enumerate_profiles(req):
        kp = bound_k_profile(prof)
        row = {"profile": list(prof.n), "k_UB_prf": kp}
        if args.k is not None:
            row["d_UB_prf"] = bound_d_profile(prof, args.k) if 1 <= args.k <= kp else None
        out.append(row)
    sys.stdout.write("".join(json.dumps(row) + "\n" for row in out))
    return 0


def cmd_construct(args):
    code = lrc_construct(LrcParams.from_json(load_json_arg(args.params)))
    _write(args.out, _dump(to_descriptor(code)))
    sys.stderr.write(f"n={code.n} k={code.k} groups={[len(g.members) for g in code.groups]}\n")
    return 0


def cmd_encode(args):
    code = _load_code(args.code)
    msg = parse_word(_read_lines(args.message), code.k)
    if None in msg:
        raise ParseError("message may not contain erasures")
    _write(args.out, format_word(lrc_encode(code, msg)))
    return 0


def cmd_decode(args):
    code = _load_code(args.code)
    msg = lrc_global_decode(code, _load_word(args, code))
    _write(args.out, format_word(msg))
    return 0


def cmd_repair(args):
    code = _load_code(args.code)
    word = _load_word(args, code)
    (i,) = parse_indices(str(args.index), code.n)
    res = lrc_local_repair(code, word, i)
    word[i] = res.value
    _write(args.word, format_word(word))
    print(f"symbols_read={res.reads} from {[r + 1 for r in res.read_indices]}")
    return 0


def cmd_verify(args):
    if (args.params is None) == (args.code is None):
        raise ParseError("give exactly one of --params and --code")
    if args.params is not None:
        code = lrc_construct(LrcParams.from_json(load_json_arg(args.params)))
    else:
        code = _load_code(args.code)
    checks = verify_code(code, args.level, seed=args.seed, trials=args.trials)
    for c in checks:
        sys.stderr.write(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {c.detail}\n")
    out = report(checks)
    sys.stdout.write(_dump(out))
    return 0 if out["passed"] else 1


def cmd_simulate(args):
    cfg = SimConfig.from_json(load_json_arg(args.config))
    rep = run_simulation(cfg).to_dict()
    if not args.per_round:
        rep.pop("per_round")
    _write(args.out, _dump(rep))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="ulrc", description="Locally repairable codes with unequal (r, delta)-locality.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("bounds", help="all distance/dimension bounds for a requirement or profile")
    p.add_argument("--req", required=True, help='inline JSON like {"delta":2,"n":[2,3,4]} or a file path')
    p.add_argument("--k", type=int)
    p.add_argument("--profile", action="store_true", help="read the vector as a locality profile")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("profile-search", help="list every profile meeting a requirement")
    p.add_argument("--req", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_profile_search)

    p = sub.add_parser("construct", help="build a code descriptor from parameters")
    p.add_argument("--params", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="message file -> codeword file")
    p.add_argument("--code", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="codeword file with erasures -> message")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--erase", help="extra 1-based indices to treat as erased, e.g. 1,4,9")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("repair", help="locally repair one symbol, rewriting the codeword file")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--index", type=int, required=True, help="1-based symbol to repair")
    p.add_argument("--erase", help="extra 1-based indices to treat as erased")
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("verify", help="run the invariant suite against one code")
    p.add_argument("--params")
    p.add_argument("--code")
    p.add_argument("--level", choices=("quick", "full"), default="full")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="seeded node-failure simulation")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--per-round", action="store_true", help="include the per-round log")
    p.set_defaults(func=cmd_simulate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LrcError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
