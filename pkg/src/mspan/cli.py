"""Command-line frontend; a thin client of the HTTP service.

Commands serialize their inputs into service requests and print the service's
JSON responses verbatim.  Without ``--server`` (or ``MSPAN_SERVER``) the
requests are dispatched to an in-process application instance, so the CLI
works standalone and in shell pipelines; ``-`` means stdin/stdout.

Exit codes: 0 for success or a passing verification, 1 for a failing
verification, 2 for usage or input errors (including budget overruns).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Any, Optional

import httpx

USAGE_ERROR = 2


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    return int(raw) if raw else None


def _default_jobs(args) -> int:
    if getattr(args, "jobs", None) is not None:
        return args.jobs
    return _env_int("MSPAN_JOBS") or os.cpu_count() or 1


def _default_budget(args) -> Optional[int]:
    if getattr(args, "budget", None) is not None:
        return args.budget
    return _env_int("MSPAN_BUDGET")


def _request(args, path: str, payload: dict) -> httpx.Response:
    server = args.server or os.environ.get("MSPAN_SERVER")
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)

    async def dispatch() -> httpx.Response:
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://mspan") as client:
            return await client.post(path, json=payload)

    return asyncio.run(dispatch())


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_json(path: str) -> Any:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        print(f"error: {path}: not valid JSON: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR) from None


def _write_output(args, data: Any) -> None:
    text = json.dumps(data, indent=2) + "\n"
    target = getattr(args, "output", None) or "-"
    if target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail_http(response: httpx.Response) -> int:
    try:
        detail = response.json()
    except ValueError:
        detail = {"message": response.text}
    code = detail.get("code", f"HTTP_{response.status_code}")
    message = detail.get("message") or detail.get("detail") or ""
    print(f"error: {code}: {message}", file=sys.stderr)
    return USAGE_ERROR


def _run_generate(args, path: str, payload: dict) -> int:
    response = _request(args, path, payload)
    if response.status_code != 200:
        return _fail_http(response)
    body = response.json()
    _write_output(args, body["instance"])
    if args.output and args.output != "-":
        with open(args.output + ".meta.json", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(body["metadata"], indent=2) + "\n")
    return 0


def _run_json(args, path: str, payload: dict) -> int:
    response = _request(args, path, payload)
    if response.status_code != 200:
        return _fail_http(response)
    _write_output(args, response.json())
    return 0


def _run_verify(args, path: str, payload: dict) -> int:
    response = _request(args, path, payload)
    if response.status_code != 200:
        return _fail_http(response)
    report = response.json()
    _write_output(args, report)
    return 0 if report.get("pass") else 1


def _single_stdin(*paths: str) -> None:
    if sum(1 for p in paths if p == "-") > 1:
        print("error: at most one input may come from stdin", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mspan", description=__doc__)
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("-o", "--output", help="output file ('-' for stdout, the default)")

    gen = sub.add_parser("generate", help="construct benchmark instances")
    gen_sub = gen.add_subparsers(dest="family", required=True)

    g_intr = gen_sub.add_parser("intractable", help="exponential-front ladder")
    g_intr.add_argument("--n", type=int, required=True)
    g_intr.add_argument("--directed", action="store_true")
    add_output(g_intr)

    g_buco = gen_sub.add_parser("from-buco", help="knapsack reduction ladder")
    g_buco.add_argument("file", help="knapsack instance JSON ('-' for stdin)")
    g_buco.add_argument("--directed", action="store_true")
    add_output(g_buco)

    g_cnf = gen_sub.add_parser("from-cnf", help="satisfiability family from DIMACS CNF")
    g_cnf.add_argument("file", help="DIMACS CNF file ('-' for stdin)")
    add_output(g_cnf)

    ev = sub.add_parser("eval", help="evaluate a spanner's objective values")
    ev.add_argument("instance")
    ev.add_argument("spanner")
    ev.add_argument("--mode", choices=["edge-restricted", "all-pairs"], default="edge-restricted")
    add_output(ev)

    par = sub.add_parser("pareto", help="enumerate the exact non-dominated set")
    par.add_argument("instance")
    par.add_argument("--budget", type=int)
    par.add_argument("--witnesses", action="store_true")
    par.add_argument("--jobs", type=int)
    add_output(par)

    ext = sub.add_parser("extreme", help="compute extreme points with certificates")
    ext.add_argument("instance")
    ext.add_argument("--method", choices=["hull", "dichotomic"], default="hull")
    ext.add_argument("--budget", type=int)
    ext.add_argument("--jobs", type=int)
    add_output(ext)

    buco = sub.add_parser("buco", help="knapsack subcommands")
    buco_sub = buco.add_subparsers(dest="action", required=True)
    b_solve = buco_sub.add_parser("solve", help="non-dominated set of a knapsack instance")
    b_solve.add_argument("file")
    b_solve.add_argument("--method", choices=["brute", "dp"], default="brute")
    add_output(b_solve)

    ver = sub.add_parser("verify", help="run a structural claim check")
    ver_sub = ver.add_subparsers(dest="check", required=True)

    v_intr = ver_sub.add_parser("intractable")
    v_intr.add_argument("--n", type=int, required=True)
    v_intr.add_argument("--directed", action="store_true")
    v_intr.add_argument("--budget", type=int)
    add_output(v_intr)

    v_buco = ver_sub.add_parser("buco")
    v_buco.add_argument("file")
    v_buco.add_argument("--directed", action="store_true")
    v_buco.add_argument("--budget", type=int)
    add_output(v_buco)

    v_cai = ver_sub.add_parser("cai")
    v_cai.add_argument("file", help="DIMACS CNF file")
    v_cai.add_argument("--assignment", required=True, help="assignment JSON file")
    add_output(v_cai)

    v_unw = ver_sub.add_parser("unweighted")
    v_unw.add_argument("instance")
    v_unw.add_argument("--budget", type=int)
    add_output(v_unw)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "generate":
        if args.family == "intractable":
            return _run_generate(
                args, "/generate/intractable", {"n": args.n, "directed": args.directed}
            )
        if args.family == "from-buco":
            inst = _read_json(args.file)
            inst["directed"] = args.directed
            return _run_generate(args, "/generate/from-buco", inst)
        return _run_generate(args, "/generate/from-cnf", {"dimacs": _read_text(args.file)})

    if args.command == "eval":
        _single_stdin(args.instance, args.spanner)
        payload = {
            "instance": _read_json(args.instance),
            "spanner": _read_json(args.spanner),
            "mode": args.mode,
        }
        return _run_json(args, "/eval", payload)

    if args.command == "pareto":
        payload = {
            "instance": _read_json(args.instance),
            "budget": _default_budget(args),
            "witnesses": args.witnesses,
            "jobs": _default_jobs(args),
        }
        return _run_json(args, "/pareto", payload)

    if args.command == "extreme":
        payload = {
            "instance": _read_json(args.instance),
            "method": args.method,
            "budget": _default_budget(args),
            "jobs": _default_jobs(args),
        }
        return _run_json(args, "/extreme", payload)

    if args.command == "buco":
        payload = _read_json(args.file)
        payload["method"] = args.method
        return _run_json(args, "/buco/solve", payload)

    if args.command == "verify":
        if args.check == "intractable":
            payload = {"n": args.n, "directed": args.directed, "budget": _default_budget(args)}
            return _run_verify(args, "/verify/intractable", payload)
        if args.check == "buco":
            payload = _read_json(args.file)
            payload["directed"] = args.directed
            payload["budget"] = _default_budget(args)
            return _run_verify(args, "/verify/buco", payload)
        if args.check == "cai":
            _single_stdin(args.file, args.assignment)
            payload = {
                "dimacs": _read_text(args.file),
                "assignment": _read_json(args.assignment)["assignment"],
            }
            return _run_verify(args, "/verify/cai", payload)
        payload = {"instance": _read_json(args.instance), "budget": _default_budget(args)}
        return _run_verify(args, "/verify/unweighted", payload)

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
