"""Command-line client for the capacity service.

Every subcommand builds a request, sends it to the HTTP service (an embedded
in-process instance by default, or a remote one via --server) and renders the
tabular response as CSV on standard output, or as JSON records with --json.
Floats are printed in scientific notation with 13 significant digits, so
identical invocations produce identical bytes.  Errors go to standard error;
exit codes are 0 on success, 1 on usage errors, 2 when validation fails.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx
import pydantic

from . import __version__
from .service.schemas import (
    BpskChiRequest,
    CapacityCurvesRequest,
    PieCurvesRequest,
    PieHeatmapRequest,
    SuperadditivityRequest,
    SweepSpec,
    ValidateRequest,
)

USAGE_ERROR = 1
VALIDATION_FAILURE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _orders_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad order list {text!r}") from exc


def _add_sweep_args(parser: argparse.ArgumentParser, prefix: str = "ns") -> None:
    parser.add_argument(f"--{prefix}-min", type=float, required=True)
    parser.add_argument(f"--{prefix}-max", type=float, required=True)
    group = "--points" if prefix == "ns" else f"--{prefix}-points"
    parser.add_argument(group, type=int, required=True, dest=f"{prefix}_points")
    flag = "--log" if prefix == "ns" else f"--{prefix}-log"
    parser.add_argument(flag, action="store_true", dest=f"{prefix}_log")


def _add_common_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--server", metavar="URL", default=None,
                        help="base URL of a running service (default: in-process)")
    parser.add_argument("--json", action="store_true", dest="as_json",
                        help="emit JSON records instead of CSV")
    parser.add_argument("--out", metavar="FILE", default=None,
                        help="write output to FILE instead of standard output")


def build_parser() -> _Parser:
    parser = _Parser(prog="opticap", description=__doc__)
    parser.add_argument("--version", action="version", version=f"opticap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity-curves", help="bits per slot for the capacity limits")
    _add_sweep_args(p)
    p.add_argument("--nn", type=float, default=0.0, help="fixed excess noise photons per slot")
    p.add_argument("--schemes", default="S1,S2,Holevo,Fock",
                   help="comma list from S1,S2,Holevo,Fock")
    _add_common_args(p)

    p = sub.add_parser("pie-curves", help="photon information efficiency curves")
    _add_sweep_args(p)
    p.add_argument("--nn", type=float, default=0.0)
    p.add_argument("--orders", type=_orders_list, default=[2, 4, 8],
                   help="PPM orders to include (powers of two)")
    p.add_argument("--approx", action="store_true",
                   help="append exact-optimum and continuous-order approximation columns")
    _add_common_args(p)

    p = sub.add_parser("pie-heatmap", help="Holevo efficiency over an (n_s, n_n) grid")
    _add_sweep_args(p, "ns")
    _add_sweep_args(p, "nn")
    _add_common_args(p)

    p = sub.add_parser("bpsk-chi", help="antipodal constellation efficiency comparison")
    _add_sweep_args(p)
    _add_common_args(p)

    p = sub.add_parser("superadditivity", help="optimized joint-detection scheme figures")
    p.add_argument("--orders", type=_orders_list, default=[2, 4, 8])
    p.add_argument("--ns", type=float, default=1e-4)
    _add_common_args(p)

    p = sub.add_parser("validate", help="Monte Carlo checks of samplers against the laws")
    p.add_argument("--seed", type=int, default=1234)
    p.add_argument("--samples", type=int, default=1_000_000)
    _add_common_args(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _post(args, path: str, payload: dict) -> dict:
    async def go() -> dict:
        if args.server:
            client = httpx.AsyncClient(base_url=args.server, timeout=600.0)
        else:
            from .service.app import app

            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=app),
                base_url="http://opticap.internal",
                timeout=None,
            )
        async with client:
            response = await client.post(path, json=payload)
            response.raise_for_status()
            return response.json()

    return asyncio.run(go())


def _sweep(args, prefix: str = "ns", fixed: dict | None = None) -> SweepSpec:
    return SweepSpec(
        variable="n_s" if prefix == "ns" else "n_n",
        scale="log" if getattr(args, f"{prefix}_log") else "linear",
        start=getattr(args, f"{prefix}_min"),
        stop=getattr(args, f"{prefix}_max"),
        points=getattr(args, f"{prefix}_points"),
        fixed=fixed or {},
    )


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12e}"
    return str(value)


def _emit_table(payload: dict, args) -> str:
    columns, rows = payload["columns"], payload["rows"]
    if args.as_json:
        records = [dict(zip(columns, row)) for row in rows]
        return json.dumps(records, indent=2) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(_format_cell(cell) for cell in row) for row in rows]
    return "\n".join(lines) + "\n"


def _emit_validation(payload: dict, args) -> str:
    if args.as_json:
        return json.dumps(payload, indent=2) + "\n"
    lines = [
        f"validation seed={payload['seed']} samples={payload['samples']}",
    ]
    for check in payload["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        lines.append(
            f"{status} {check['name']}: measured={check['measured']:.6e} "
            f"expected={check['expected']:.6e} band={check['band']:.6e}"
        )
    verdict = "PASSED" if payload["passed"] else "FAILED"
    lines.append(f"validation {verdict} ({sum(c['passed'] for c in payload['checks'])}"
                 f"/{len(payload['checks'])} checks)")
    return "\n".join(lines) + "\n"


def _write_output(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _run_command(args) -> int:
    if args.command == "serve":
        import uvicorn

        uvicorn.run("opticap.service.app:app", host=args.host, port=args.port)
        return 0
    if args.command == "capacity-curves":
        request = CapacityCurvesRequest(
            sweep=_sweep(args, fixed={"n_n": args.nn}),
            schemes=[s for s in args.schemes.split(",") if s],
        )
        payload = _post(args, "/capacity-curves", request.model_dump())
        _write_output(_emit_table(payload, args), args)
        return 0
    if args.command == "pie-curves":
        request = PieCurvesRequest(
            sweep=_sweep(args, fixed={"n_n": args.nn}),
            include_ppm_orders=args.orders,
            include_approx=args.approx,
        )
        payload = _post(args, "/pie-curves", request.model_dump())
        _write_output(_emit_table(payload, args), args)
        return 0
    if args.command == "pie-heatmap":
        request = PieHeatmapRequest(ns_sweep=_sweep(args, "ns"), nn_sweep=_sweep(args, "nn"))
        payload = _post(args, "/pie-heatmap", request.model_dump())
        _write_output(_emit_table(payload, args), args)
        return 0
    if args.command == "bpsk-chi":
        request = BpskChiRequest(sweep=_sweep(args))
        payload = _post(args, "/bpsk-chi", request.model_dump())
        _write_output(_emit_table(payload, args), args)
        return 0
    if args.command == "superadditivity":
        request = SuperadditivityRequest(orders=args.orders, n_s=args.ns)
        payload = _post(args, "/superadditivity", request.model_dump())
        _write_output(_emit_table(payload, args), args)
        return 0
    if args.command == "validate":
        request = ValidateRequest(seed=args.seed, samples=args.samples)
        payload = _post(args, "/validate", request.model_dump())
        _write_output(_emit_validation(payload, args), args)
        return 0 if payload["passed"] else VALIDATION_FAILURE
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run_command(args)
    except pydantic.ValidationError as exc:
        first = exc.errors()[0]
        print(f"opticap: invalid request: {first['msg']}", file=sys.stderr)
        return USAGE_ERROR
    except httpx.HTTPStatusError as exc:
        print(f"opticap: service rejected the request: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (httpx.HTTPError, ValueError, OSError) as exc:
        print(f"opticap: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
