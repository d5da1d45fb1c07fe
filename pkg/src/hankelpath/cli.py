"""Command-line front end; a thin client over the service handlers.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .pathcount import BudgetExceededError
from .service import handlers, schemas

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelpath",
        description="Exact lattice-path sequences, Hankel determinants, "
                    "transformation orbits, and the signed path-tuple oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print f(0..n) for the given ell and t")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", default="1", help="scalar, or literal 't' for symbolic")
    p.add_argument("--n", type=int, required=True, dest="n_max")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("hankel", help="determinant table of (shifted) Hankel matrices")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", default="1")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--n", type=int, required=True, dest="n_max")
    p.add_argument("--detect-period", action="store_true")
    p.add_argument("--max-period", type=int, default=20)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("transform", help="iterate the determinant-preserving "
                                         "transformation on a functional equation")
    p.add_argument("--fe", required=True, help="JSON file with the equation "
                   "(canonical d/k/u/v or quadratic a/b/c form)")
    p.add_argument("--shift", type=int, default=0,
                   help="drop this many leading coefficients first")
    p.add_argument("--max-steps", type=int, default=16)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("lgv", help="signed tuple sum vs path-weight determinant")
    p.add_argument("--config", required=True,
                   help="JSON file with initials, terminals, ell, t")
    p.add_argument("--budget", type=int, default=20_000_000)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--only", default=None,
                   help="run only checks whose name contains this string")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_seq(args) -> int:
    response = handlers.seq(schemas.SeqRequest(ell=args.ell, t=args.t,
                                               n_max=args.n_max))
    if args.format == "json":
        print(json.dumps(response.terms))
    elif args.format == "csv":
        print("n,term")
        for n, term in enumerate(response.terms):
            print(f"{n},{term}")
    else:
        print(", ".join(response.terms))
    return EXIT_OK


def _cmd_hankel(args) -> int:
    response = handlers.hankel_table(schemas.HankelRequest(
        ell=args.ell, t=args.t, shift=args.shift, n_max=args.n_max,
        detect_period=args.detect_period, max_period=args.max_period))
    if args.format == "json":
        for row in response.rows:
            print(json.dumps({"n": row.n, "det": row.det}))
        if args.detect_period:
            print(json.dumps(
                {"period": response.period.period,
                 "offset": response.period.offset}
                if response.period else {"period": None}))
    elif args.format == "csv":
        print("n,det")
        for row in response.rows:
            print(f"{row.n},{row.det}")
    else:
        for row in response.rows:
            print(f"{row.n} {row.det}")
        if args.detect_period:
            if response.period:
                print(f"period {response.period.period} "
                      f"offset {response.period.offset}")
            else:
                print("period not certified within available terms")
    return EXIT_OK


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _fe_request(args) -> schemas.TransformRequest:
    obj = _load_json(args.fe)
    if {"a", "b", "c"} <= obj.keys():
        return schemas.TransformRequest(
            quadratic=schemas.QuadraticSpec(**{k: obj[k] for k in "abc"}),
            shift=args.shift, max_steps=args.max_steps)
    if {"d", "k", "u", "v"} <= obj.keys():
        return schemas.TransformRequest(
            fe=schemas.CanonicalFESpec(**{k: obj[k] for k in "dkuv"}),
            shift=args.shift, max_steps=args.max_steps)
    raise handlers.UsageError(
        "FE file must contain either a/b/c or d/k/u/v")


def _fe_text(fe: schemas.CanonicalFESpec) -> str:
    def side(spec: schemas.SeriesSpec) -> str:
        num = "[" + ",".join(spec.num) + "]"
        if spec.den == ["1"]:
            return num
        return num + "/[" + ",".join(spec.den) + "]"
    return f"d={fe.d} k={fe.k} u={side(fe.u)} v={side(fe.v)}"


def _cmd_transform(args) -> int:
    response = handlers.transform_orbit(_fe_request(args))
    if args.format == "json":
        print(response.model_dump_json())
        return EXIT_OK
    for i, state in enumerate(response.states):
        print(f"state {i}: {_fe_text(state)}")
    for step in response.steps:
        chain = step.chain
        print(f"step {step.kind}: delta={chain.delta} sign={chain.sign} "
              f"factors={[(f.base, f.offset) for f in chain.factors]} "
              f"| {step.note}")
    if response.status == "cycle":
        i, j = response.cycle
        rec = response.recurrence
        factors = "".join(f" * ({f.base})^(n-{f.offset})"
                          for f in rec.factors)
        print(f"cycle: state {j} equals state {i}")
        print(f"recurrence: det H_n = {rec.sign}{factors} "
              f"* det H_(n-{rec.delta})")
    elif response.status == "rational":
        print("orbit terminated: the series degenerated to a rational function")
    else:
        print("no cycle within the step budget")
    return EXIT_OK


def _cmd_lgv(args) -> int:
    obj = _load_json(args.config)
    request = schemas.LgvRequest(
        initials=[tuple(p) for p in obj["initials"]],
        terminals=[tuple(p) for p in obj["terminals"]],
        ell=int(obj["ell"]), t=str(obj.get("t", "1")), budget=args.budget)
    response = handlers.lgv(request)
    if args.format == "json":
        print(response.model_dump_json())
    else:
        print(f"signed sum    {response.signed_sum}")
        print(f"determinant   {response.determinant}")
        print("MATCH" if response.match else "MISMATCH")
    return EXIT_OK


def _cmd_verify(args) -> int:
    response = handlers.run_verify(schemas.VerifyRequest(only=args.only))
    if args.format == "json":
        print(response.model_dump_json())
    else:
        for item in response.results:
            status = "PASS" if item.passed else "FAIL"
            print(f"{status}  {item.name}  ({item.seconds:.2f}s)  {item.detail}")
    return EXIT_OK if response.ok else EXIT_VERIFY_FAILED


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    commands = {
        "seq": _cmd_seq,
        "hankel": _cmd_hankel,
        "transform": _cmd_transform,
        "lgv": _cmd_lgv,
        "verify": _cmd_verify,
        "serve": _cmd_serve,
    }
    try:
        return commands[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (handlers.UsageError, OSError, json.JSONDecodeError,
            KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
