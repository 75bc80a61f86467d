"""Command-line access to the lattice path matroid tools.

Every tool subcommand goes through the same handler as the HTTP service;
``evidence`` and ``probe`` run the sampling experiments directly.

Exit codes: 0 on success, 1 on domain errors and failed writes, 2 on usage
errors and unreadable or malformed input files.
"""

import argparse
import asyncio
import functools
import json
import logging
import os
import random
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

from pydantic import ValidationError

from services.lattice.config import get_settings
from services.lattice.domain.errors import LatticePathError
from services.lattice.domain.squares import properness_probe
from services.lattice.domain.wqo import evidence_report, random_sample
from services.lattice.infrastructure.formats import (
    dump_matroid,
    evidence_tsv,
    load_matroid,
    read_text,
    write_text,
)
from shared.config import get_search_settings
from shared.logging import setup_logging

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Bad command line or unreadable input."""


def read_source(source: str) -> str:
    """File contents when ``source`` names a file, otherwise ``source`` itself."""
    if os.path.isfile(source):
        try:
            return read_text(source)
        except OSError as e:
            raise UsageError(f"cannot read {source}: {e}")
    return source


def read_json_source(source: str) -> Any:
    try:
        return json.loads(read_source(source))
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON in {source}: {e}")


def presentation_source(args: argparse.Namespace, attribute: str = "source") -> str:
    if getattr(args, "p", None) is not None or getattr(args, "q", None) is not None:
        if args.p is None or args.q is None:
            raise UsageError("--p and --q must be given together")
        return f"P={args.p}\nQ={args.q}\noffset={args.offset}\n"
    source = getattr(args, attribute, None)
    if source is None:
        raise UsageError("a presentation file, inline words or --p/--q is required")
    return read_source(source)


def _presentation_text(result: Dict[str, Any]) -> str:
    return result["presentation"]["text"]


def _witness_text(witness: Optional[Dict[str, Any]]) -> str:
    if witness is None:
        return "none\n"
    return witness["text"] or "(empty witness)\n"


def _info_text(result: Dict[str, Any]) -> str:
    lines = [
        f"m={result['m']} r={result['r']} square-width={result['square_width']} bases={result['bases']}",
        f"rank={result['rank']} size={result['size']}",
        "loops=" + " ".join(map(str, result["loops"])),
        "coloops=" + " ".join(map(str, result["coloops"])),
        "gap-profile=" + " ".join(map(str, result["gap_profile"])),
        "intervals=" + " ".join(f"[{low},{high}]" for low, high in result["intervals"]),
        f"nested={str(result['nested']).lower()} uniform={str(result['uniform']).lower()}",
    ]
    return "\n".join(lines) + "\n"


def _bases_text(result: Dict[str, Any]) -> str:
    lines = [f"bases={result['count']}"]
    lines.extend(" ".join(map(str, basis)) for basis in result.get("bases", []))
    return "\n".join(lines) + "\n"


def _squares_text(result: Dict[str, Any]) -> str:
    lines = [f"square-width={result['square_width']}"]
    lines.extend(
        f"{s['position']} {s['size']} {'proper' if s['proper'] else 'improper'}"
        for s in result["squares"]
    )
    return "\n".join(lines) + "\n"


def _pull_text(result: Dict[str, Any]) -> str:
    return (
        f"# k={result['k']}\n# bottom\n{result['bottom']['text']}"
        f"# top\n{result['top']['text']}"
    )


def _mapping_text(mapping: Optional[Dict[str, int]]) -> str:
    if mapping is None:
        return "none\n"
    return " ".join(f"{x}->{y}" for x, y in mapping.items()) + "\n"


def _oracle_minor_text(result: Dict[str, Any]) -> str:
    if not result["minor"]:
        return "none\n"
    return (
        "deleted=" + " ".join(map(str, result["deleted"])) + "\n"
        + "contracted=" + " ".join(map(str, result["contracted"])) + "\n"
        + "mapping=" + _mapping_text(result["mapping"])
    )


def _antichain_text(result: Dict[str, Any]) -> str:
    lines = ["relation:"]
    lines.extend(" ".join(map(str, row)) for row in result["relation"])
    lines.append("max-antichain=" + " ".join(map(str, result["max_antichain"])))
    lines.append(f"max-antichain-size={len(result['max_antichain'])}")
    lines.append("longest-chain=" + " ".join(map(str, result["longest_chain"])))
    lines.append(f"longest-chain-length={len(result['longest_chain'])}")
    return "\n".join(lines) + "\n"


def _base_case_text(result: Dict[str, Any]) -> str:
    codes = " / ".join(f"l={c['loops']} c={c['coloops']}" for c in result["codes"])
    return (
        f"{codes}\n"
        f"matroid-minor={str(result['matroid_minor']).lower()}\n"
        f"presentation-minor={str(result['presentation_minor']).lower()}\n"
    )


HUMAN: Dict[str, Callable[[Dict[str, Any]], str]] = {
    "info": _info_text,
    "validate": lambda result: "valid\n",
    "bases": _bases_text,
    "dual": _presentation_text,
    "sum": _presentation_text,
    "delete": _presentation_text,
    "contract": _presentation_text,
    "apply-witness": _presentation_text,
    "is-minor": lambda result: _witness_text(result["witness"]),
    "uniform-minor": lambda result: _witness_text(result["witness"]),
    "squares": _squares_text,
    "pull": _pull_text,
    "glue": _presentation_text,
    "check-glue-minor": lambda result: f"{str(result['minor']).lower()}\n",
    "render": lambda result: result["grid"],
    "gen": lambda result: dump_matroid(load_matroid(result["matroid"])),
    "branch-width": lambda result: f"{result['branch_width']}\n",
    "isomorphic": lambda result: _mapping_text(result["mapping"]),
    "oracle-minor": _oracle_minor_text,
    "find-presentation": lambda result: (
        _presentation_text(result) if result["found"] else "none\n"
    ),
    "antichain": _antichain_text,
    "base-case": _base_case_text,
}


SINGLE_PRESENTATION_TOOLS = (
    "info",
    "validate",
    "bases",
    "dual",
    "squares",
    "render",
    "delete",
    "contract",
    "apply-witness",
    "uniform-minor",
    "pull",
    "check-glue-minor",
)


def tool_arguments(command: str, args: argparse.Namespace) -> Dict[str, Any]:
    """Translate parsed command-line options into handler arguments."""
    if command in SINGLE_PRESENTATION_TOOLS:
        arguments: Dict[str, Any] = {"presentation": presentation_source(args)}
        if command in ("delete", "contract"):
            arguments["label"] = args.label
        elif command == "uniform-minor":
            arguments["k"] = args.k
        elif command == "render":
            arguments["square"] = args.square
        elif command == "bases":
            arguments["cap"] = args.cap
            arguments["count_only"] = args.count
        elif command == "pull":
            arguments["position"] = args.at
        elif command == "apply-witness":
            arguments["witness"] = read_source(args.witness)
        elif command == "check-glue-minor":
            arguments["position"] = args.at
            arguments["bottom_witness"] = read_source(args.bottom_witness)
            arguments["top_witness"] = read_source(args.top_witness)
        return arguments
    if command in ("sum", "base-case"):
        return {"first": read_source(args.first), "second": read_source(args.second)}
    if command == "is-minor":
        return {"small": read_source(args.small), "large": read_source(args.large)}
    if command == "glue":
        return {"bottom": read_source(args.bottom), "top": read_source(args.top), "k": args.k}
    if command == "gen":
        return {"family": args.family, "n": args.n}
    if command in ("branch-width", "find-presentation"):
        return {"matroid": read_json_source(args.matroid)}
    if command == "isomorphic":
        return {"first": read_json_source(args.first), "second": read_json_source(args.second)}
    if command == "oracle-minor":
        return {"small": read_json_source(args.small), "large": read_json_source(args.large)}
    if command == "antichain":
        if args.matroids:
            return {"matroids": [read_json_source(source) for source in args.sources]}
        return {"items": [read_source(source) for source in args.sources]}
    raise UsageError(f"unknown command {command}")


def _add_presentation_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("source", nargs="?", help="presentation file or inline words such as EENN/NNEE")
    parser.add_argument("--p", help="lower word")
    parser.add_argument("--q", help="upper word")
    parser.add_argument("--offset", type=int, default=1, help="first label (default 1)")


def _add_output_options(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    json_default, level_default = (argparse.SUPPRESS, argparse.SUPPRESS) if suppress else (False, None)
    parser.add_argument("--json", action="store_true", default=json_default, help="machine-readable output")
    parser.add_argument("--log-level", default=level_default, help="override LOG_LEVEL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpm",
        description="Lattice path matroid presentations, minors, squares and oracles",
    )
    _add_output_options(parser)
    # subcommand copies only set the value when given, so either position works
    common = argparse.ArgumentParser(add_help=False)
    _add_output_options(common, suppress=True)
    commands = parser.add_subparsers(dest="command", required=True)
    add_command = functools.partial(commands.add_parser, parents=[common])

    for name, help_text in (
        ("info", "m, r, loops, coloops, square-width, gap profile"),
        ("validate", "check a presentation"),
        ("dual", "dual presentation"),
        ("squares", "list squares"),
    ):
        _add_presentation_input(add_command(name, help=help_text))

    bases = add_command("bases", help="count and list bases")
    _add_presentation_input(bases)
    bases.add_argument("--cap", type=int, help="list at most this many bases")
    bases.add_argument("--count", action="store_true", help="only count")

    for name in ("delete", "contract"):
        sub = add_command(name, help=f"{name} one element")
        _add_presentation_input(sub)
        sub.add_argument("--label", type=int, required=True)

    witness = add_command("apply-witness", help="apply delete/contract steps")
    _add_presentation_input(witness)
    witness.add_argument("--witness", required=True, help="witness file or inline steps")

    uniform = add_command("uniform-minor", help="witness down to U_{k,2k}")
    _add_presentation_input(uniform)
    uniform.add_argument("--k", type=int, required=True)

    pull = add_command("pull", help="pull apart at a square")
    _add_presentation_input(pull)
    pull.add_argument("--at", type=int, required=True, help="prefix position of the square")
    pull.add_argument("--out-dir", help="write bottom.txt and top.txt here")

    check = add_command("check-glue-minor", help="glue minors of both halves and test containment")
    _add_presentation_input(check)
    check.add_argument("--at", type=int, required=True)
    check.add_argument("--bottom-witness", default="", help="witness for the bottom half")
    check.add_argument("--top-witness", default="", help="witness for the top half")

    render = add_command("render", help="ASCII grid of the bounding paths")
    _add_presentation_input(render)
    render.add_argument("--square", type=int, help="mark the square at this position")

    for name, first, second in (
        ("sum", "first", "second"),
        ("base-case", "first", "second"),
        ("is-minor", "small", "large"),
        ("isomorphic", "first", "second"),
        ("oracle-minor", "small", "large"),
    ):
        sub = add_command(name)
        sub.add_argument(first)
        sub.add_argument(second)

    glue = add_command("glue", help="glue bottom and top along a k x k square")
    glue.add_argument("bottom")
    glue.add_argument("top")
    glue.add_argument("--k", type=int, required=True)

    gen = add_command("gen", help="explicit matroid of an anti-chain family")
    gen.add_argument("--family", choices=["F", "G", "H"], required=True)
    gen.add_argument("--n", type=int, required=True)

    for name in ("branch-width", "find-presentation"):
        sub = add_command(name)
        sub.add_argument("matroid", help="explicit-matroid JSON file or inline JSON")

    antichain = add_command("antichain", help="minor poset report")
    antichain.add_argument("sources", nargs="*")
    antichain.add_argument("--matroids", action="store_true", help="inputs are explicit-matroid JSON")

    evidence = add_command("evidence", help="anti-chain evidence table over random samples")
    evidence.add_argument("--samples", type=int, default=5)
    evidence.add_argument("--sample-size", type=int, default=30)
    evidence.add_argument("--max-size", type=int, default=10)
    evidence.add_argument("--max-square-width", type=int, default=1)
    evidence.add_argument("--seed", type=int, default=None)

    probe = add_command("probe", help="widest squares that are not proper")
    probe.add_argument("--max-size", type=int, default=10)

    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _run_evidence(args: argparse.Namespace) -> None:
    seed = get_search_settings().RANDOM_SEED if args.seed is None else args.seed
    rng = random.Random(seed)
    samples = [
        random_sample(rng, args.sample_size, args.max_size, args.max_square_width)
        for _ in range(args.samples)
    ]
    rows = evidence_report(samples)
    if args.json:
        _emit(json.dumps([row.__dict__ for row in rows], indent=2) + "\n")
    else:
        _emit(evidence_tsv(rows))


def _run_probe(args: argparse.Namespace) -> None:
    found = properness_probe(args.max_size)
    if args.json:
        _emit(json.dumps([str(pres) for pres in found], indent=2) + "\n")
    else:
        _emit("".join(f"{pres}\n" for pres in found))


def _run_tool(args: argparse.Namespace) -> None:
    from services.lattice.handler import mcp_handler

    result = asyncio.run(mcp_handler.handle_tool(args.command, tool_arguments(args.command, args)))
    if args.command == "pull" and args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_text(out / "bottom.txt", result["bottom"]["text"])
        write_text(out / "top.txt", result["top"]["text"])
    if args.json:
        _emit(json.dumps(result, indent=2, sort_keys=True) + "\n")
    else:
        _emit(HUMAN[args.command](result))


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    level = args.log_level or get_settings().LOG_LEVEL
    try:
        setup_logging(log_level=level, log_file=get_settings().LOG_FILE)
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2

    try:
        if args.command == "evidence":
            _run_evidence(args)
        elif args.command == "probe":
            _run_probe(args)
        else:
            _run_tool(args)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        parser.print_usage(sys.stderr)
        return 2
    except ValidationError as e:
        sys.stderr.write(f"malformed input: {e}\n")
        return 2
    except OSError as e:
        sys.stderr.write(f"cannot write output: {e}\n")
        return 1
    except LatticePathError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except ValueError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
