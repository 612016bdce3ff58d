"""Command line front end.

Exit codes: 0 success, 1 valid negative answer (unsolvable, infeasible),
2 usage or precondition error, 3 a computation contradicted the theory.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import congruence as cg
from .config import override
from .errors import PreconditionError, TheoremViolation, WodotError
from .groups import GroupSpec
from .sequences import GSequence
from .weighted import WeightSeq, odot, odot_naive

OK, NEGATIVE, USAGE, VIOLATION = 0, 1, 2, 3


@dataclass
class RunConfig:
    subcommand: str
    json_out: Optional[str]
    out: Optional[str]
    seed: int
    mask_bits: int
    enum_budget: int

    @property
    def as_json(self) -> bool:
        return self.json_out is not None


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated integer list, got {text!r}")


def _role(text: str) -> tuple[int, int]:
    digits = tuple(int(c) for c in text if c.isdigit())
    if digits not in ((1, 2), (2, 1)):
        raise argparse.ArgumentTypeError("role must be 12 or 21")
    return digits


def build_parser() -> argparse.ArgumentParser:
    from .acceptance import DEFAULT_SEED

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH",
                        help="emit JSON (to PATH if given, else stdout)")
    common.add_argument("--out", help="write the result to this file instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--budget-mask-bits", type=int, default=24)
    common.add_argument("--budget-enum", type=int, default=1 << 20)

    p = argparse.ArgumentParser(prog="wodot", description="Weighted restricted sumsets W⊙S.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    w = sub.add_parser("wsum", parents=[common], help="compute W⊙S")
    w.add_argument("--group", required=True, type=GroupSpec.parse)
    w.add_argument("--seq", required=True, help='terms like "0^3 1 3" or "0,0^2 1,1"')
    w.add_argument("--weights", help='"a..b" (inclusive) or "w1,w2,..."; default 0..|S|-1')
    w.add_argument("--naive", action="store_true", help="use the permutation oracle")

    v = sub.add_parser("verify", parents=[common], help="exhaustively check the main theorem")
    v.add_argument("--group", required=True, type=GroupSpec.parse)
    v.add_argument("--max-len", type=int)

    c = sub.add_parser("congruence", parents=[common],
                       help="distinct-residue solutions of a linear congruence")
    c.add_argument("--mod", required=True, type=int)
    c.add_argument("--coeffs", required=True, type=_ints)
    c.add_argument("--alpha", type=int)
    c.add_argument("--witness", action="store_true")
    c.add_argument("--all-alpha", action="store_true")

    z = sub.add_parser("zerosum", parents=[common],
                       help="maximal-length minimal zero-sum sequences over C_m ⊕ C_mn")
    z.add_argument("--m", required=True, type=int)
    z.add_argument("--n", required=True, type=int)
    g = z.add_mutually_exclusive_group(required=True)
    g.add_argument("--support", type=int)
    g.add_argument("--pattern", type=_ints)
    z.add_argument("--role", type=_role, default=(1, 2))

    sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    return p


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    body = json.dumps(payload, sort_keys=True) if cfg.as_json else text
    path = cfg.out or (cfg.json_out if cfg.json_out not in (None, "-") else None)
    if path:
        with open(path, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _wsum(cfg: RunConfig, args) -> int:
    S = GSequence.parse(args.group, args.seq)
    W = WeightSeq.parse(args.weights) if args.weights else WeightSeq.run(0, len(S))
    result = (odot_naive if args.naive else odot)(W, S)
    payload = {"result": result.to_json(), "size": len(result)}
    _emit(cfg, payload, f"W⊙S = {result}  ({len(result)} of {args.group.order} elements)")
    return OK


def _verify(cfg: RunConfig, args) -> int:
    from .theorem import verify_main_theorem

    G = args.group
    rep = verify_main_theorem(G, args.max_len or G.order + 1, progress=_progress)
    lines = [f"{G}: {rep.total} sequences, {len(rep.exceptions)} exceptional at length |G|,"
             f" {len(rep.bound_violations)} bound violations, {len(rep.mismatches)} mismatches"]
    lines += [f"  {S}: {c.kind.value}, missing {c.predicted_missing}" for S, c in rep.exceptions]
    _emit(cfg, rep.to_json(), "\n".join(lines))
    return OK if rep.ok else VIOLATION


def _congruence(cfg: RunConfig, args) -> int:
    inst = cg.normalize(args.coeffs, n=args.mod)
    if args.all_alpha:
        if args.mod < 3:
            raise PreconditionError("--all-alpha needs --mod >= 3")
        every = cg.decide_all_alpha(inst)
        missing = cg.unreachable_alphas(inst)
        fam = cg.detect_special_family(inst)
        payload = {"all_alpha": every, "unreachable": missing,
                   "branch": (cg.Branch.SPECIAL_FAMILY if fam else cg.Branch.GENERAL_GCD).value,
                   "gcd": cg.diff_gcd(inst)}
        _emit(cfg, payload, f"every α solvable: {every}; unreachable residues: {missing}")
        return OK if every else NEGATIVE
    if args.alpha is None:
        raise PreconditionError("give --alpha or --all-alpha")
    v = cg.construct(inst, args.alpha) if args.witness else cg.decide(inst, args.alpha)
    payload = v.to_json()
    if v.witness is not None:
        payload["witness"] = list(cg.project_witness(inst, v.witness))
    text = f"solvable: {v.solvable} ({v.branch.value})"
    if v.witness is not None:
        text += f"; x = {payload['witness']}"
    _emit(cfg, payload, text)
    return OK if v.solvable else NEGATIVE


def _zerosum(cfg: RunConfig, args) -> int:
    from .zerosum import construct_from_pattern, construct_with_support

    if args.support is not None:
        res = construct_with_support(args.m, args.n, args.support, args.role)
    else:
        res = construct_from_pattern(args.m, args.n, args.pattern, args.role)
    if res.feasible:
        text = (f"S = {res.sequence}  (length {len(res.sequence)}, support "
                f"{len(res.sequence.support())}, x = {list(res.witness_x)}, verified)")
    else:
        text = f"infeasible: {res.infeasible}"
    _emit(cfg, res.to_json(), text)
    return OK if res.feasible else NEGATIVE


def _selftest(cfg: RunConfig, args) -> int:
    from .acceptance import run_all

    results = run_all(cfg.seed, progress=_progress)
    payload = {"criteria": [
        {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
        for r in results]}
    _emit(cfg, payload, "\n".join(r.line() for r in results))
    return OK if all(r.passed for r in results) else VIOLATION


HANDLERS = {"wsum": _wsum, "verify": _verify, "congruence": _congruence,
            "zerosum": _zerosum, "selftest": _selftest}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(args.subcommand, args.json, args.out, args.seed,
                    args.budget_mask_bits, args.budget_enum)
    try:
        with override(mask_bits=cfg.mask_bits, enum_budget=cfg.enum_budget):
            return HANDLERS[cfg.subcommand](cfg, args)
    except (WodotError, ValueError) as exc:
        code = VIOLATION if isinstance(exc, TheoremViolation) else USAGE
        if cfg.as_json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"wodot: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code


def main() -> None:
    sys.exit(run())
