"""Command line interface.

Commands either call the service handlers in-process (the default) or, with
``--server URL``, send the same request models to a running instance of
``braidsep.service:app``; both paths format the identical response model, so
output bytes depend only on the command line and the seed.

Scalars are written in the "a+br" syntax (``-1``, ``2+3r``, ``1/2-5/3r``).
Verdicts are data: exit code stays 0 whatever the outcome unless ``--expect``
asks for a specific one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from pydantic import BaseModel

from . import schemas, service
from .knots import load_knots

ENV_SEED = "BRAIDSEP_SEED"
DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
DEFAULT_RANGE = (1, 1000)


class CliError(Exception):
    """User-facing failure; the message goes to stderr and the exit code is 1."""


@dataclass(frozen=True)
class RunConfig:
    """Run-wide knobs shared by the randomized commands."""

    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    format: str = "text"
    param_range: tuple[int, int] = DEFAULT_RANGE

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        seed = getattr(args, "seed", None)
        if seed is None:
            raw = os.environ.get(ENV_SEED)
            if raw is not None:
                try:
                    seed = int(raw)
                except ValueError:
                    raise CliError(f"{ENV_SEED} must be an integer, got {raw!r}")
            else:
                seed = DEFAULT_SEED
        low, high = getattr(args, "param_range", None) or DEFAULT_RANGE
        if low > high:
            raise CliError(f"empty parameter range [{low}, {high}]")
        return cls(
            seed=seed,
            trials=getattr(args, "trials", None) or DEFAULT_TRIALS,
            format=getattr(args, "format", "text"),
            param_range=(low, high),
        )


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected LOW,HIGH")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("bounds must be integers")


def _parse_alpha(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected six comma-separated integers")
    if len(values) != 6:
        raise argparse.ArgumentTypeError("expected exactly six multiplicities")
    return values


def _parse_params(text: str) -> dict[str, str]:
    bindings: dict[str, str] = {}
    for piece in text.split(","):
        name, eq, value = piece.partition("=")
        if not eq or not name.strip() or not value.strip():
            raise argparse.ArgumentTypeError(f"bad binding {piece!r}, expected NAME=VALUE")
        if name.strip() in bindings:
            raise argparse.ArgumentTypeError(f"parameter {name.strip()!r} bound twice")
        bindings[name.strip()] = value.strip()
    return bindings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidsep",
        description="Detect braid words from their reversals via exact traces "
        "on parametrized representation families.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        help="send requests to a running service instead of computing in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument(
        "--seed",
        type=int,
        help=f"random seed (default: ${ENV_SEED} if set, else {DEFAULT_SEED})",
    )
    seeded.add_argument(
        "--param-range",
        type=_parse_range,
        metavar="LOW,HIGH",
        help="integer bounds for random coordinates (default 1,1000)",
    )
    trials = argparse.ArgumentParser(add_help=False)
    trials.add_argument(
        "--trials", type=int, help=f"random trials per verdict (default {DEFAULT_TRIALS})"
    )
    expect = argparse.ArgumentParser(add_help=False)
    expect.add_argument(
        "--expect",
        choices=("separated", "indistinguishable"),
        help="exit nonzero unless every verdict matches (for CI)",
    )

    p = sub.add_parser(
        "components", parents=[fmt], help="enumerate components for one dimension"
    )
    p.add_argument("--n", type=int, required=True, metavar="N")

    p = sub.add_parser(
        "family", parents=[fmt, seeded], help="print B and the braid matrices"
    )
    p.add_argument("--type", dest="type_code", metavar="CODE", help="catalog row, e.g. 6b")
    p.add_argument("--alpha", type=_parse_alpha, help="generic chart, e.g. 1,1,1,1,1,1")
    p.add_argument("--params", type=_parse_params, help="bindings, e.g. a=1,b=-1")
    p.add_argument("--lambda", dest="lam", metavar="VALUE", help="central scalar")
    p.add_argument("--random", action="store_true", help="draw all parameters from --seed")

    p = sub.add_parser(
        "separate",
        parents=[fmt, seeded, trials, expect],
        help="compare a word's trace with its reversal's on one family",
    )
    p.add_argument("--braid", required=True, metavar="WORD", help='e.g. "s1^-2 s2 s1"')
    p.add_argument("--component", required=True, metavar="CODE")

    knots = sub.add_parser("knots", help="knot table operations")
    knots_sub = knots.add_subparsers(dest="knots_command", required=True)
    p = knots_sub.add_parser(
        "sweep",
        parents=[fmt, seeded, trials, expect],
        help="separation verdict for every table entry",
    )
    p.add_argument("--component", required=True, metavar="CODE")
    p.add_argument("--file", metavar="PATH", help="knot table (default: bundled)")

    sub.add_parser("selftest", parents=[fmt], help="run the built-in fixture checks")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


# ---------------------------------------------------------------------------
# Transport: in-process by default, HTTP with --server
# ---------------------------------------------------------------------------

_ROUTES = {
    "/components": (service.run_components, schemas.ComponentsResponse),
    "/family": (service.run_family, schemas.FamilyResponse),
    "/separate": (service.run_separate, schemas.SeparateResponse),
    "/knots/sweep": (service.run_sweep, schemas.SweepResponse),
    "/selftest": (service.run_selftest, schemas.SelftestResponse),
}


def _call(server: Optional[str], path: str, request: Optional[BaseModel]):
    handler, response_cls = _ROUTES[path]
    if server is None:
        try:
            return handler(request) if request is not None else handler()
        except (ValueError, ArithmeticError) as err:
            raise CliError(str(err))
    import httpx

    body = request.model_dump(mode="json", by_alias=True) if request is not None else {}
    try:
        reply = httpx.post(server.rstrip("/") + path, json=body, timeout=300.0)
    except httpx.HTTPError as err:
        raise CliError(f"cannot reach {server}: {err}")
    if reply.status_code != 200:
        try:
            detail = reply.json().get("detail", reply.text)
        except ValueError:
            detail = reply.text
        raise CliError(f"server rejected the request: {detail}")
    return response_cls.model_validate(reply.json())


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json", by_alias=True), indent=2)


def _tuple_text(values: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [
        max(len(header), *(len(row[i]) for row in rows)) if rows else len(header)
        for i, header in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def _grid(matrix: schemas.Matrix) -> list[str]:
    widths = [
        max(len(matrix.entries[i][j]) for i in range(matrix.rows))
        for j in range(matrix.cols)
    ]
    return [
        "  ".join(entry.rjust(w) for entry, w in zip(row, widths))
        for row in matrix.entries
    ]


def _components_text(resp: schemas.ComponentsResponse) -> list[str]:
    rows = [
        (
            row.name or "-",
            _tuple_text(row.beta),
            str(row.dim_gamma),
            str(row.dim_b3),
            _tuple_text(row.mirror_of) if row.mirror_of else "-",
        )
        for row in resp.rows
    ]
    lines = _table(("name", "beta", "dim_gamma", "dim_b3", "mirror_of"), rows)
    lines.append(f"{len(rows)} component(s) of dimension {resp.n}")
    return lines


def _family_text(resp: schemas.FamilyResponse) -> list[str]:
    if resp.type_code is not None:
        head = f"family {resp.type_code} ({resp.source} parametrization"
        head += f", code {resp.code})" if resp.code else ")"
    else:
        head = f"family for alpha {_tuple_text(resp.alpha)} (generic parametrization)"
    lines = [
        head,
        f"alpha = {_tuple_text(resp.alpha)}   beta = {_tuple_text(resp.beta)}   n = {resp.n}",
    ]
    if resp.bindings:
        pairs = ", ".join(f"{k} = {v}" for k, v in resp.bindings.items())
        lines.append(f"bindings: {pairs}")
    else:
        lines.append("bindings: (none; the family has no free parameters)")
    lines.append(f"lambda = {resp.lam}")
    for label, matrix in (("B", resp.b), ("sigma1", resp.sigma1), ("sigma2", resp.sigma2)):
        lines.append(f"{label}:")
        lines.extend(_grid(matrix))
    return lines


def _witness_text(witness: schemas.Witness, indent: str = "  ") -> list[str]:
    pairs = ", ".join(f"{k} = {v}" for k, v in witness.bindings.items())
    return [
        f"{indent}bindings: {pairs}",
        f"{indent}lambda = {witness.lam}",
        f"{indent}trace(word)     = {witness.trace_word}",
        f"{indent}trace(reversed) = {witness.trace_reversed}",
    ]


def _separate_text(resp: schemas.SeparateResponse) -> list[str]:
    lines = [
        f"word: {resp.braid}",
        f"component: {resp.component}",
        f"status: {resp.status} ({resp.trials} trial(s))",
    ]
    if resp.witness is not None:
        lines.append("witness:")
        lines.extend(_witness_text(resp.witness))
    lines.append(f"explanation: {resp.explanation}")
    return lines


def _sweep_text(resp: schemas.SweepResponse) -> list[str]:
    rows = [
        (row.name, str(row.crossings), row.status, str(row.trials), row.braid)
        for row in resp.rows
    ]
    lines = [f"component: {resp.component}"]
    lines.extend(_table(("knot", "crossings", "status", "trials", "braid"), rows))
    separated = sum(1 for row in resp.rows if row.status == "SEPARATED")
    lines.append(f"{separated} of {len(resp.rows)} entries separated")
    return lines


def _selftest_text(resp: schemas.SelftestResponse) -> list[str]:
    lines = [
        f"{'ok  ' if check.ok else 'FAIL'} {check.name}: {check.detail}"
        for check in resp.checks
    ]
    failed = sum(1 for check in resp.checks if not check.ok)
    lines.append(
        f"all {len(resp.checks)} checks passed"
        if not failed
        else f"{failed} of {len(resp.checks)} checks failed"
    )
    return lines


def _emit(lines: list[str], out) -> None:
    out.write("\n".join(lines) + "\n")


def _check_expectation(expect: Optional[str], statuses: Sequence[str], err) -> int:
    if expect is None:
        return 0
    wanted = "SEPARATED" if expect == "separated" else "INDISTINGUISHABLE_PROBABLE"
    misses = sum(1 for status in statuses if status != wanted)
    if misses:
        err.write(f"expectation not met: {misses} verdict(s) are not {wanted}\n")
        return 1
    return 0


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_components(args, config: RunConfig, out, err) -> int:
    resp = _call(args.server, "/components", schemas.ComponentsRequest(n=args.n))
    _emit([_dump_json(resp)] if config.format == "json" else _components_text(resp), out)
    return 0


def _cmd_family(args, config: RunConfig, out, err) -> int:
    request = schemas.FamilyRequest(
        type_code=args.type_code,
        alpha=list(args.alpha) if args.alpha else None,
        params=args.params or {},
        lam=args.lam,
        random=args.random,
        seed=config.seed,
        low=config.param_range[0],
        high=config.param_range[1],
    )
    resp = _call(args.server, "/family", request)
    _emit([_dump_json(resp)] if config.format == "json" else _family_text(resp), out)
    return 0


def _cmd_separate(args, config: RunConfig, out, err) -> int:
    request = schemas.SeparateRequest(
        braid=args.braid,
        component=args.component,
        trials=config.trials,
        seed=config.seed,
        low=config.param_range[0],
        high=config.param_range[1],
    )
    resp = _call(args.server, "/separate", request)
    _emit([_dump_json(resp)] if config.format == "json" else _separate_text(resp), out)
    return _check_expectation(args.expect, [resp.status], err)


def _cmd_knots_sweep(args, config: RunConfig, out, err) -> int:
    knots = None
    if args.file is not None:
        try:
            entries = load_knots(args.file)
        except (OSError, ValueError) as error:
            raise CliError(str(error))
        knots = [
            schemas.KnotEntryIn(
                name=entry.name,
                braid=str(entry.braid),
                crossings=entry.crossings,
                source=entry.source,
            )
            for entry in entries
        ]
    request = schemas.SweepRequest(
        component=args.component,
        trials=config.trials,
        seed=config.seed,
        low=config.param_range[0],
        high=config.param_range[1],
        knots=knots,
    )
    resp = _call(args.server, "/knots/sweep", request)
    _emit([_dump_json(resp)] if config.format == "json" else _sweep_text(resp), out)
    return _check_expectation(args.expect, [row.status for row in resp.rows], err)


def _cmd_selftest(args, config: RunConfig, out, err) -> int:
    resp = _call(args.server, "/selftest", None)
    _emit([_dump_json(resp)] if config.format == "json" else _selftest_text(resp), out)
    return 0 if resp.ok else 1


def _cmd_serve(args, config: RunConfig, out, err) -> int:
    import uvicorn

    uvicorn.run("braidsep.service:app", host=args.host, port=args.port)
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    args = build_parser().parse_args(argv)
    commands = {
        "components": _cmd_components,
        "family": _cmd_family,
        "separate": _cmd_separate,
        "knots": _cmd_knots_sweep,
        "selftest": _cmd_selftest,
        "serve": _cmd_serve,
    }
    try:
        config = RunConfig.from_args(args)
        return commands[args.command](args, config, out, err)
    except CliError as error:
        err.write(f"error: {error}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
