"""Command-line front end.

Subcommands cover generation (diagonals, ideal-product), single
computations (colon, betti, reg, groebner), verification sweeps
(linquot-verify, verify, conjecture-scan), and the golden-data replay
(paper-replay).  Exit codes: 0 pass, 1 mismatch, 2 resource or config
error.  JSON output is one object per line, keys sorted, so identical
invocations produce identical bytes (timing fields excepted).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, IO

from . import checks
from .caps import Caps, DEFAULT_CAPS, load_caps_file
from .errors import ChainOrderError, DiagIdealError, ResourceLimitError
from .fields import make_field
from .groebner import buchberger, initial_ideal, natural_window_generators
from .ideals import MonomialIdeal, parse_ideal
from .monomials import GridShape
from .quotients import (
    closed_form_colon,
    closed_form_product_colon,
    quotient_chain,
)
from .replay import run_paper_replay
from .resolution import betti_table, mapping_cone_betti
from .windows import Window, WindowChain, diagonal_ideal, enumerate_diagonals, window_product_ideal

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_RESOURCE = 2


@dataclass
class RunConfig:
    format: str = "text"
    seed: int = 7
    caps: Caps = field(default_factory=lambda: DEFAULT_CAPS)
    stream: IO[str] = sys.stdout
    force_brute: bool = False


def emit(config: RunConfig, record: dict) -> None:
    if config.format == "json":
        config.stream.write(json.dumps(record, sort_keys=True) + "\n")
        return
    for line in _text_lines(record):
        config.stream.write(line + "\n")


def emit_values(config: RunConfig, key: str, record: dict) -> None:
    """A record whose payload is the list under `key`: text mode prints
    one item per line, json mode the whole record."""
    if config.format == "json":
        emit(config, record)
        return
    for item in record[key]:
        config.stream.write(str(item) + "\n")


def _flat(value: Any) -> bool:
    return bool(value) and isinstance(value, list) and all(
        isinstance(item, int) or (isinstance(item, list) and all(isinstance(x, int) for x in item))
        for item in value
    )


def _scalar_summary(record: dict) -> str:
    parts = []
    for key in sorted(record):
        value = record[key]
        if key == "ok" or isinstance(value, dict):
            continue
        if isinstance(value, list):
            if not _flat(value):
                continue
            value = str(value).replace(" ", "")
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _text_lines(record: dict) -> list[str]:
    if "ok" in record:
        head = "PASS" if record["ok"] else "FAIL"
    elif record.get("skipped"):
        head = "SKIP"
    else:
        head = "INFO"
    lines = [f"{head} {_scalar_summary(record)}".rstrip()]
    for step in record.get("steps", ()):
        if step.get("equal"):
            continue
        lines.append(
            f"  step u={step['u']} brute={step['brute']} closed={step['closed']}"
        )
    return lines


def _parse_window(text: str) -> Window:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"window must be 'k,l', got {text!r}")
    return Window(int(parts[0]), int(parts[1]))


def _parse_chain(text: str) -> list[Window]:
    return [_parse_window(part) for part in text.split(":") if part]


def _shape(args: argparse.Namespace) -> GridShape:
    return GridShape(args.rows, args.cols)


def _chain_windows(args: argparse.Namespace, config: RunConfig) -> list[Window]:
    windows = _parse_chain(args.chain)
    if not windows:
        raise ChainOrderError("empty window chain")
    if not config.force_brute:
        WindowChain(tuple(windows))
    return windows


def _ideal_argument(args: argparse.Namespace, config: RunConfig, shape: GridShape) -> MonomialIdeal:
    given = [
        name
        for name in ("window", "chain", "gens", "gens_file")
        if getattr(args, name, None)
    ]
    if len(given) != 1:
        raise DiagIdealError(
            "provide exactly one of --window, --chain, --gens, --gens-file"
        )
    if args.window:
        return diagonal_ideal(shape, _parse_window(args.window))
    if args.chain:
        return window_product_ideal(shape, _chain_windows(args, config))
    if args.gens:
        return parse_ideal(shape, args.gens)
    with open(args.gens_file, "r", encoding="utf-8") as handle:
        return parse_ideal(shape, handle.read().strip())


def cmd_diagonals(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args)
    window = _parse_window(args.window)
    gens = enumerate_diagonals(shape, window)
    emit_values(
        config,
        "generators",
        {
            "shape": [shape.rows, shape.cols],
            "window": [window.first, window.last],
            "generators": [str(g) for g in gens],
        },
    )
    return EXIT_PASS


def cmd_ideal_product(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args)
    windows = _chain_windows(args, config)
    product = window_product_ideal(shape, windows)
    emit_values(
        config,
        "generators",
        {
            "shape": [shape.rows, shape.cols],
            "chain": [[w.first, w.last] for w in windows],
            "generators": [str(g) for g in product.gens],
        },
    )
    return EXIT_PASS


def cmd_colon(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args)
    windows = _chain_windows(args, config)
    diagonals = enumerate_diagonals(shape, windows[0])
    u = args.step
    if not 0 <= u < len(diagonals):
        raise DiagIdealError(
            f"step {u} out of range: window {windows[0]} has {len(diagonals)} diagonals"
        )
    f = diagonals[u]
    prefix = MonomialIdeal.from_generators(shape, diagonals[:u])
    if len(windows) == 1:
        brute = prefix.colon(f)
    else:
        product = window_product_ideal(shape, windows)
        brute = (product + prefix).colon(f)
    record: dict[str, Any] = {
        "shape": [shape.rows, shape.cols],
        "chain": [[w.first, w.last] for w in windows],
        "u": u,
        "brute": str(brute),
    }
    sorted_chain = True
    try:
        chain = WindowChain(tuple(windows))
    except ChainOrderError:
        sorted_chain = False
    if sorted_chain:
        if len(windows) == 1:
            closed = closed_form_colon(shape, windows[0], f)
        else:
            closed = closed_form_product_colon(shape, chain, f, u)
        record["closed"] = str(closed)
        record["equal"] = brute == closed
        emit(config, record)
        return EXIT_PASS if record["equal"] else EXIT_MISMATCH
    record["closed"] = None
    record["equal"] = None
    emit(config, record)
    return EXIT_PASS


def cmd_linquot_verify(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args)
    window = _parse_window(args.window)
    report = checks.single_window_report(shape, window)
    emit(config, report)
    return EXIT_PASS if report["ok"] else EXIT_MISMATCH


def _betti_for(config: RunConfig, args: argparse.Namespace, ideal: MonomialIdeal):
    characteristic = args.char if args.char is not None else 0
    if args.oracle == "cone":
        return mapping_cone_betti(ideal)
    if args.oracle == "homology":
        return betti_table(ideal, characteristic=characteristic, caps=config.caps)
    if quotient_chain(ideal).certifies_linear_quotients:
        return mapping_cone_betti(ideal)
    return betti_table(ideal, characteristic=characteristic, caps=config.caps)


def cmd_betti(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args)
    ideal = _ideal_argument(args, config, shape)
    table = _betti_for(config, args, ideal)
    if config.format == "json":
        emit(config, table.to_json_obj())
        return EXIT_PASS
    for row in table.to_json_obj()["rows"]:
        config.stream.write(f"beta[{row['i']},{row['j']}] = {row['beta']}\n")
    config.stream.write(f"reg = {table.regularity}\n")
    return EXIT_PASS


def cmd_reg(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args)
    ideal = _ideal_argument(args, config, shape)
    table = _betti_for(config, args, ideal)
    degree = ideal.single_generation_degree()
    record = {
        "reg": table.regularity,
        "degree": degree,
        "linear": None if degree is None else table.regularity == degree,
    }
    if config.format == "json":
        emit(config, record)
    else:
        config.stream.write(f"reg = {record['reg']}\n")
        if record["linear"] is not None:
            config.stream.write(
                f"linear resolution: {'yes' if record['linear'] else 'no'}\n"
            )
    return EXIT_PASS


def cmd_groebner(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args)
    windows = _chain_windows(args, config)
    chain = WindowChain(tuple(windows))
    characteristic = args.char if args.char is not None else 32003
    generators = natural_window_generators(shape, chain, make_field(characteristic))
    basis = buchberger(generators, caps=config.caps)
    ini = initial_ideal(basis)
    record = {
        "shape": [shape.rows, shape.cols],
        "chain": [[w.first, w.last] for w in windows],
        "char": characteristic,
        "generators": len(generators),
        "basis": [str(p) for p in basis.polys],
        "initial_ideal": [str(g) for g in ini.gens],
        "spairs": basis.spairs_reduced,
    }
    if config.format == "json":
        emit(config, record)
        return EXIT_PASS
    config.stream.write(
        f"reduced basis ({len(basis.polys)} elements, {basis.spairs_reduced} S-pairs):\n"
    )
    for poly in record["basis"]:
        config.stream.write(f"  {poly}\n")
    config.stream.write(f"initial ideal: <{', '.join(record['initial_ideal'])}>\n")
    return EXIT_PASS


def cmd_conjecture_scan(config: RunConfig, args: argparse.Namespace) -> int:
    caps = config.caps
    max_rows = args.max_rows if args.max_rows is not None else caps.max_conjecture_rows
    max_cols = args.max_cols if args.max_cols is not None else caps.max_conjecture_cols
    max_factors = (
        args.max_factors if args.max_factors is not None else caps.max_conjecture_factors
    )
    if (
        max_rows > caps.max_conjecture_rows
        or max_cols > caps.max_conjecture_cols
        or max_factors > caps.max_conjecture_factors
    ):
        raise ResourceLimitError(
            f"scan bounds ({max_rows},{max_cols},{max_factors}) exceed caps "
            f"({caps.max_conjecture_rows},{caps.max_conjecture_cols},"
            f"{caps.max_conjecture_factors})"
        )
    characteristic = args.char if args.char is not None else 32003
    for verdict in checks.conjecture_scan(
        max_rows, max_cols, max_factors, characteristic=characteristic, caps=caps
    ):
        if config.format == "json":
            emit(config, verdict)
            continue
        if verdict.get("skipped"):
            config.stream.write(f"SKIP {_scalar_summary(verdict)}\n")
            continue
        status = "true" if verdict["ini_equals_J"] and verdict["natural_gens_are_GB"] else "FALSE"
        config.stream.write(
            f"{status} shape={verdict['shape']} chain={verdict['chain']} "
            f"spairs={verdict['spairs']}\n"
        )
    # A FALSE verdict is a finding, not a failure; only engine errors exit nonzero.
    return EXIT_PASS


def cmd_verify(config: RunConfig, args: argparse.Namespace) -> int:
    shape = _shape(args) if args.rows and args.cols else None
    window = _parse_window(args.window) if args.window else None
    chain = None
    if args.chain:
        chain = WindowChain(tuple(_parse_chain(args.chain)))
    characteristic = args.char if args.char is not None else 0
    all_ok = True
    reports = checks.verify_reports(
        args.target,
        shape=shape,
        window=window,
        chain=chain,
        caps=config.caps,
        characteristic=characteristic,
    )
    try:
        for report in reports:
            emit(config, report)
            all_ok = all_ok and bool(report["ok"])
    except ResourceLimitError as err:
        emit(config, {"error": str(err), "ok": False})
        return EXIT_RESOURCE
    return EXIT_PASS if all_ok else EXIT_MISMATCH


def cmd_paper_replay(config: RunConfig, args: argparse.Namespace) -> int:
    records = run_paper_replay()
    all_ok = True
    for record in records:
        all_ok = all_ok and record["ok"]
        if config.format == "json":
            emit(config, record)
        else:
            status = "PASS" if record["ok"] else "FAIL"
            line = f"{status} {record['name']}"
            if not record["ok"]:
                line += f" expected={record['expected']} got={record['got']}"
            config.stream.write(line + "\n")
    return EXIT_PASS if all_ok else EXIT_MISMATCH


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default=None,
                        help="output format (default text)")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for sampled verification paths")
    parser.add_argument("--caps", default=None, metavar="FILE",
                        help="resource-limit config file (key = value lines)")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="write output here instead of standard output")


def _add_shape(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--rows", type=int, required=required)
    parser.add_argument("--cols", type=int, required=required)


def _add_ideal_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window", default=None, metavar="K,L")
    parser.add_argument("--chain", default=None, metavar="K1,L1:K2,L2")
    parser.add_argument("--gens", default=None, metavar="IDEAL",
                        help="ideal text, e.g. '<x[1,1]*x[1,2], x[1,2]^2>'")
    parser.add_argument("--gens-file", default=None, metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagideal",
        description="Window ideals of a generic matrix: generation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagonals", help="list the diagonal monomials of a window")
    _add_common(p)
    _add_shape(p)
    p.add_argument("--window", required=True, metavar="K,L")
    p.set_defaults(handler=cmd_diagonals)

    p = sub.add_parser("ideal-product", help="product of window diagonal ideals")
    _add_common(p)
    _add_shape(p)
    p.add_argument("--chain", required=True, metavar="K1,L1:K2,L2")
    p.add_argument("--force-brute", action="store_true",
                   help="accept out-of-order chains")
    p.set_defaults(handler=cmd_ideal_product)

    p = sub.add_parser("colon", help="one colon step, brute force vs closed form")
    _add_common(p)
    _add_shape(p)
    p.add_argument("--chain", required=True, metavar="K1,L1:K2,L2")
    p.add_argument("--step", type=int, required=True, metavar="U",
                   help="0-based index of the divided generator")
    p.add_argument("--force-brute", action="store_true",
                   help="accept out-of-order chains; skips the closed form")
    p.set_defaults(handler=cmd_colon)

    p = sub.add_parser("linquot-verify",
                       help="check a window ideal has linear quotients")
    _add_common(p)
    _add_shape(p)
    p.add_argument("--window", required=True, metavar="K,L")
    p.set_defaults(handler=cmd_linquot_verify)

    p = sub.add_parser("betti", help="Betti table of a monomial ideal")
    _add_common(p)
    _add_shape(p)
    _add_ideal_source(p)
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--oracle", choices=("auto", "homology", "cone"), default="auto")
    p.add_argument("--force-brute", action="store_true")
    p.set_defaults(handler=cmd_betti)

    p = sub.add_parser("reg", help="Castelnuovo-Mumford regularity")
    _add_common(p)
    _add_shape(p)
    _add_ideal_source(p)
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--oracle", choices=("auto", "homology", "cone"), default="auto")
    p.add_argument("--force-brute", action="store_true")
    p.set_defaults(handler=cmd_reg)

    p = sub.add_parser("groebner",
                       help="reduced basis of a product of window minor ideals")
    _add_common(p)
    _add_shape(p)
    p.add_argument("--chain", required=True, metavar="K1,L1:K2,L2")
    p.add_argument("--char", type=int, default=None, help="default 32003")
    p.set_defaults(handler=cmd_groebner)

    p = sub.add_parser("conjecture-scan",
                       help="compare initial ideals of minor products over many chains")
    _add_common(p)
    p.add_argument("--max-rows", type=int, default=None)
    p.add_argument("--max-cols", type=int, default=None)
    p.add_argument("--max-factors", type=int, default=None)
    p.add_argument("--char", type=int, default=None, help="default 32003")
    p.set_defaults(handler=cmd_conjecture_scan)

    p = sub.add_parser("verify", help="run a verification target")
    _add_common(p)
    p.add_argument("--target", required=True,
                   choices=("lemma1", "lemma2", "theorem", "remarks", "all"))
    _add_shape(p, required=False)
    p.add_argument("--window", default=None, metavar="K,L")
    p.add_argument("--chain", default=None, metavar="K1,L1:K2,L2")
    p.add_argument("--char", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("paper-replay",
                       help="recompute the golden worked examples and diff")
    _add_common(p)
    p.set_defaults(handler=cmd_paper_replay)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    caps, extras = load_caps_file(args.caps) if args.caps else (DEFAULT_CAPS, {})
    fmt = args.format or extras.get("format") or "text"
    if fmt not in ("text", "json"):
        parser.error(f"config file sets unknown format {fmt!r}")
    seed = args.seed if args.seed is not None else int(extras.get("seed", 7))
    if getattr(args, "char", None) is None and "char" in extras:
        args.char = int(extras["char"])
    stream = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    config = RunConfig(
        format=fmt,
        seed=seed,
        caps=caps,
        stream=stream,
        force_brute=bool(getattr(args, "force_brute", False)),
    )
    try:
        return args.handler(config, args)
    except ResourceLimitError as err:
        emit(config, {"error": str(err), "snapshot": err.snapshot, "ok": False})
        return EXIT_RESOURCE
    except DiagIdealError as err:
        emit(config, {"error": str(err), "ok": False})
        return EXIT_RESOURCE
    except ValueError as err:
        emit(config, {"error": str(err), "ok": False})
        return EXIT_RESOURCE
    except BrokenPipeError:
        # reader went away (e.g. piped into head); die quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_MISMATCH
    finally:
        if stream is not sys.stdout:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
