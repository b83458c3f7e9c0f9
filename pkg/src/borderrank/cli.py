"""Command-line front end.

Subcommands:
  analyze               run the obstruction battery on a tensor
  zoo                   emit a benchmark tensor as a JSON tensor file
  verify-decomposition  check an epsilon decomposition certificate

Exit codes: 0 success, 2 malformed input, 3 internal consistency
violation (a certified lower bound above a certified upper bound).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .certificates import minimal_br_battery
from .decomposition import verify_eps_decomposition
from .errors import ConsistencyError, InputFormatError
from .exponent import UPPER, BrFact, kron_ledger_update
from .fields import DEFAULT_PRIME, QQ, field_from_tag
from .io import (
    content_hash,
    convert_tensor,
    load_decomposition,
    load_ledger,
    load_tensor,
    save_ledger,
    save_tensor,
    tensor_to_dict,
)
from .report import build_report, summary_lines
from .zoo import (
    big_cw,
    det3_tensor,
    matmul,
    perm3_tensor,
    small_cw,
    structure_tensor,
    unit_tensor,
    w_state,
)
from . import zoo as _zoo_mod

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_INCONSISTENT = 3

SEED_ENV_VAR = "BORDERRANK_SEED"

_METHOD_CHOICES = ("koszul", "strassen", "commutator", "end_closed",
                   "t111", "t111_twofactor", "symlie", "alg111")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR, "0")
    try:
        return int(raw)
    except ValueError:
        raise InputFormatError(
            f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def _zoo_tensor(name: str, params, field):
    """Construct a zoo tensor from a name and integer parameters."""
    try:
        if name == "matmul":
            if len(params) == 1:
                n = params[0]
                return matmul(n, n, n, field), f"matmul_{n}x{n}x{n}"
            if len(params) == 3:
                l, m, n = params
                return matmul(l, m, n, field), f"matmul_{l}x{m}x{n}"
            raise InputFormatError("matmul takes 1 or 3 parameters")
        if name == "unit":
            (m,) = params
            return unit_tensor(m, field), f"unit_{m}"
        if name == "wstate":
            if params:
                raise InputFormatError("wstate takes no parameters")
            return w_state(field), "wstate"
        if name == "big_cw":
            (q,) = params
            return big_cw(q, field), f"big_cw_{q}"
        if name == "small_cw":
            (q,) = params
            return small_cw(q, field), f"small_cw_{q}"
        if name == "det3":
            if params:
                raise InputFormatError("det3 takes no parameters")
            return det3_tensor(field), "det3"
        if name == "perm3":
            if params:
                raise InputFormatError("perm3 takes no parameters")
            return perm3_tensor(field), "perm3"
    except (ValueError, TypeError) as exc:
        raise InputFormatError(f"bad zoo parameters for {name}: {exc}") \
            from None
    raise InputFormatError(f"unknown zoo tensor {name!r}")


def _load_source(source: str, field):
    """Load a tensor from a file path or a zoo:<name>[:params] string."""
    if source.startswith("zoo:"):
        parts = source.split(":")[1:]
        name = parts[0] if parts else ""
        try:
            params = [int(x) for x in parts[1:]]
        except ValueError:
            raise InputFormatError(
                f"zoo parameters must be integers in {source!r}") from None
        T, tname = _zoo_tensor(name, params, field)
        return T, tname
    T, meta = load_tensor(source)
    T = convert_tensor(T, field)
    return T, meta.get("name", "")


def _structure_from_table_file(path: str, field):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from None
    try:
        table = _zoo_mod.AlgebraTable(
            m=doc["m"],
            labels=doc.get("labels") or [f"b{i}" for i in range(doc["m"])],
            table=doc["table"],
            unit_index=doc.get("unit"),
            field=field,
        )
    except (TypeError, KeyError, ValueError) as exc:
        raise InputFormatError(f"bad algebra table: {exc}") from None
    return structure_tensor(table)


def _merge_into_ledger(path: str, new_facts) -> list:
    facts = load_ledger(path) + list(new_facts)
    closed = kron_ledger_update(facts)
    save_ledger(closed, path)
    return closed


# ---------------------------------------------------------------------------
# subcommands

def _cmd_analyze(args) -> int:
    field = field_from_tag(args.field)
    T, name = _load_source(args.source, field)
    methods = None
    if args.methods and args.methods != "all":
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    battery = minimal_br_battery(T, seed=args.seed, p_max=args.p_max,
                                 methods=methods)

    recheck = None
    if args.exact_recheck and field != QQ:
        recheck = _run_exact_recheck(args, battery)

    report = build_report(T, battery, name=name, target_r=args.target_r,
                          exact_recheck=recheck)
    for line in summary_lines(report):
        print(line)

    if args.ledger:
        tensor_id = name or content_hash(T)[:12]
        fact = BrFact(tensor_id, "LOWER", battery.aggregate_lower_bound,
                      provenance="obstruction battery")
        _merge_into_ledger(args.ledger, [fact])

    payload = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return EXIT_OK


def _run_exact_recheck(args, battery):
    """Re-run FAIL verdicts over the rationals and compare."""
    try:
        T_q, _ = _load_source(args.source, QQ)
    except InputFormatError:
        return {"status": "skipped",
                "reason": "source entries are not liftable to rationals"}
    failed = [rec.name for rec in battery.records if rec.verdict == "FAIL"]
    if not failed:
        return {"status": "nothing to recheck"}
    name_to_method = {"KOSZUL": "koszul", "STRASSEN": "strassen",
                      "COMMUTATOR": "commutator", "END_CLOSED": "end_closed",
                      "T111_TRIPLE": "t111", "T111_TWOFACTOR":
                      "t111_twofactor", "SYMLIE": "symlie",
                      "ALG111_ABUNDANCE": "alg111"}
    rerun = minimal_br_battery(T_q, seed=args.seed, p_max=args.p_max,
                               methods=[name_to_method[n] for n in failed])
    outcome = {}
    for rec in rerun.records:
        outcome[rec.name] = {
            "verdict_over_rationals": rec.verdict,
            "agrees": rec.verdict == "FAIL",
        }
    return {"status": "done", "methods": outcome}


def _cmd_zoo(args) -> int:
    field = field_from_tag(args.field)
    if args.name == "structure":
        if not args.table:
            raise InputFormatError("structure needs --table FILE")
        T = _structure_from_table_file(args.table, field)
        name = "structure"
    else:
        params = []
        if args.name == "matmul":
            if args.n is None:
                raise InputFormatError("matmul needs --n (and optional "
                                       "--l/--m)")
            l = args.l if args.l is not None else args.n
            m = args.m if args.m is not None else args.n
            params = [l, m, args.n]
        elif args.name == "unit":
            if args.m is None:
                raise InputFormatError("unit needs --m")
            params = [args.m]
        elif args.name in ("big_cw", "small_cw"):
            if args.q is None:
                raise InputFormatError(f"{args.name} needs --q")
            params = [args.q]
        T, name = _zoo_tensor(args.name, params, field)
    if args.out:
        save_tensor(T, args.out, name=name, provenance="zoo constructor")
        print(f"wrote {name}: dims={T.dims}, "
              f"{len(T.nonzero_entries())} entries -> {args.out}")
    else:
        print(json.dumps(tensor_to_dict(T, name=name), indent=2,
                         sort_keys=True))
    return EXIT_OK


def _cmd_verify(args) -> int:
    field = field_from_tag(args.field)
    T, meta = load_tensor(args.tensor)
    T = convert_tensor(T, field)
    D = load_decomposition(args.certificate)
    try:
        ok = verify_eps_decomposition(T, D)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputFormatError(f"malformed certificate: {exc}") from None
    tensor_id = meta.get("name") or content_hash(T)[:12]
    print(f"verification: {'PASS' if ok else 'FAIL'} "
          f"(r={D.r}, h={D.h}, tensor={tensor_id})")
    result = {"verdict": "PASS" if ok else "FAIL", "r": D.r, "h": D.h,
              "tensor": tensor_id, "field": field.tag}
    if ok:
        fact = BrFact(tensor_id, UPPER, D.r,
                      provenance="verified epsilon decomposition")
        result["upper_bound"] = {"tensor_id": fact.tensor_id,
                                 "value": fact.value,
                                 "provenance": fact.provenance}
        if args.ledger:
            _merge_into_ledger(args.ledger, [fact])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borderrank",
        description="Border-rank lower-bound certificates, benchmark "
                    "tensors, and exponent bounds over exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser(
        "analyze",
        help="run the obstruction battery on a tensor file or zoo name")
    pa.add_argument("source",
                    help="tensor JSON path or zoo:<name>[:param[:param...]] "
                         "(for example zoo:matmul:2 or zoo:unit:4)")
    pa.add_argument("--methods", default="all",
                    help="comma list from: " + ",".join(_METHOD_CHOICES))
    pa.add_argument("--field", default=f"prime:{DEFAULT_PRIME}",
                    help="rational or prime:<p> (default: %(default)s)")
    pa.add_argument("--seed", type=int, default=None,
                    help=f"root seed (default ${SEED_ENV_VAR} or 0)")
    pa.add_argument("--p-max", type=int, default=3,
                    help="largest wedge degree in the sweep (default 3)")
    pa.add_argument("--target-r", type=int, default=None,
                    help="report whether the certified bound exceeds r")
    pa.add_argument("--exact-recheck", action="store_true",
                    help="re-run FAIL verdicts over the rationals")
    pa.add_argument("--ledger", default=None,
                    help="merge the certified lower bound into this "
                         "ledger JSON file")
    pa.add_argument("--out", default=None,
                    help="write the JSON report here instead of stdout")
    pa.set_defaults(func=_cmd_analyze)

    pz = sub.add_parser("zoo", help="emit a benchmark tensor as JSON")
    pz.add_argument("name",
                    choices=["matmul", "unit", "wstate", "big_cw",
                             "small_cw", "det3", "perm3", "structure"])
    pz.add_argument("--l", type=int, default=None)
    pz.add_argument("--m", type=int, default=None)
    pz.add_argument("--n", type=int, default=None)
    pz.add_argument("--q", type=int, default=None)
    pz.add_argument("--table", default=None,
                    help="algebra multiplication table JSON (structure)")
    pz.add_argument("--field", default="rational")
    pz.add_argument("--out", default=None)
    pz.set_defaults(func=_cmd_zoo)

    pv = sub.add_parser(
        "verify-decomposition",
        help="verify an epsilon decomposition certificate")
    pv.add_argument("tensor", help="tensor JSON path")
    pv.add_argument("certificate", help="certificate JSON path")
    pv.add_argument("--field", default=f"prime:{DEFAULT_PRIME}")
    pv.add_argument("--ledger", default=None,
                    help="merge a PASS upper bound into this ledger file")
    pv.add_argument("--out", default=None,
                    help="write a JSON verdict here")
    pv.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", None) is None and args.command == "analyze":
            args.seed = _default_seed()
        return args.func(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ConsistencyError as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def console_main() -> None:
    sys.exit(main())
