"""Command-line front end.

Subcommands: trace, verify, word, convert-twist, random, kra.  Every
subcommand that reads a surface validates it before touching coordinates.
Output is plain text or JSON lines (--format jsonl); JSON field names are
part of the stable interface.  Exit codes: 0 success, 1 verification
failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dtcoords import CoordError, DTCoords, window_twists, validate
from .holonomy import (
    annulus_from_gluing_parameter,
    evaluate_word,
    gluing_parameter_from_annulus,
    trace_of_curve,
)
from .standardpos import extract_components, word_to_text
from .surface import SurfaceError, load_surface
from .verifier import verify
from .fuzz import FuzzConfig, random_coords

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def _parse_vector(text: str) -> tuple[int, ...]:
    body = text.strip().lstrip("[").rstrip("]")
    if not body:
        return ()
    return tuple(int(tok) for tok in body.replace(",", " ").split())


def _coords_from_args(args) -> DTCoords:
    return DTCoords(_parse_vector(args.q), _parse_vector(args.p))


def _emit(args, record: dict, text: str) -> None:
    if args.format == "jsonl":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _add_surface_coord_args(sub, coords: bool = True):
    sub.add_argument("--surface", required=True, help="surface description file")
    if coords:
        sub.add_argument("--q", required=True, help="intersection numbers, e.g. 2,0")
        sub.add_argument("--p", required=True, help="twists, e.g. 0,4")
    sub.add_argument("--format", choices=("text", "jsonl"), default="text")


def cmd_trace(args) -> int:
    surface = load_surface(args.surface)
    coords = _coords_from_args(args)
    for idx, (comp, trace) in enumerate(trace_of_curve(surface, coords)):
        record = {
            "kind": "trace",
            "component": idx,
            "q": list(comp.q),
            "phat": list(comp.phat),
            "parallel_to": None if comp.parallel_to is None else comp.parallel_to + 1,
            "trace": str(trace),
        }
        text = f"component {idx} q={list(comp.q)} trace={trace}"
        if args.matrix and comp.word is not None:
            record["matrix"] = str(evaluate_word(comp.word))
            text += f" matrix={record['matrix']}"
        _emit(args, record, text)
    return EXIT_OK


def cmd_word(args) -> int:
    surface = load_surface(args.surface)
    coords = _coords_from_args(args)
    validate(surface, coords)
    window_twists(surface, coords)
    for idx, comp in enumerate(extract_components(surface, coords)):
        if comp.word is None:
            print(f"# component {idx}: parallel to curve {comp.parallel_to + 1}")
            continue
        print(f"# component {idx}: q={list(comp.q)} phat={list(comp.phat)}")
        print(word_to_text(comp.word))
    return EXIT_OK


def cmd_convert_twist(args) -> int:
    surface = load_surface(args.surface)
    coords = _coords_from_args(args)
    phat = window_twists(surface, coords)
    _emit(
        args,
        {"kind": "window-twist", "q": list(coords.q), "p": list(coords.p), "phat": list(phat)},
        f"phat={list(phat)}",
    )
    return EXIT_OK


def _verify_one(args, surface, coords) -> bool:
    report = verify(surface, coords)
    record = report.to_record()
    record["kind"] = "verify"
    status = "PASS" if report.passed else "FAIL"
    text = f"{status} q={list(coords.q)} p={list(coords.p)} trace={report.trace}"
    if not report.passed:
        text += " | " + "; ".join(report.failures())
    _emit(args, record, text)
    return report.passed


def cmd_verify(args) -> int:
    surface = load_surface(args.surface)
    if args.fuzz:
        cfg = FuzzConfig(
            surface,
            seed=args.seed,
            max_q=args.max_q,
            max_abs_p=args.max_abs_p,
            count=args.fuzz,
            connected_only=True,
        )
        ok = True
        for coords in random_coords(cfg):
            ok = _verify_one(args, surface, coords) and ok
        return EXIT_OK if ok else EXIT_VERIFY_FAILED
    coords = _coords_from_args(args)
    return EXIT_OK if _verify_one(args, surface, coords) else EXIT_VERIFY_FAILED


def cmd_random(args) -> int:
    surface = load_surface(args.surface)
    cfg = FuzzConfig(
        surface,
        seed=args.seed,
        max_q=args.max_q,
        max_abs_p=args.max_abs_p,
        count=args.count,
        connected_only=args.connected_only,
    )
    for coords in random_coords(cfg):
        _emit(
            args,
            {"kind": "coords", "q": list(coords.q), "p": list(coords.p)},
            f"q={list(coords.q)} p={list(coords.p)}",
        )
    return EXIT_OK


def cmd_kra(args) -> int:
    if (args.to_tau is None) == (args.from_tau is None):
        raise CoordError("pass exactly one of --to-tau / --from-tau")
    if args.to_tau is not None:
        value = gluing_parameter_from_annulus(complex(args.to_tau))
        record = {"kind": "kra", "direction": "annulus->tau", "value": str(value)}
    else:
        value = annulus_from_gluing_parameter(complex(args.from_tau))
        record = {"kind": "kra", "direction": "tau->annulus", "value": str(value)}
    _emit(args, record, str(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plumbtrace",
        description="Exact holonomy trace polynomials from Dehn-Thurston coordinates",
    )
    default_seed = int(os.environ.get("PLUMBTRACE_SEED", "0"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", help="trace polynomial per component")
    _add_surface_coord_args(p)
    p.add_argument("--matrix", action="store_true", help="also print the 2x2 matrix")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("word", help="print the compiled holonomy word")
    _add_surface_coord_args(p)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("convert-twist", help="symmetric twist -> window twist")
    _add_surface_coord_args(p)
    p.set_defaults(func=cmd_convert_twist)

    p = sub.add_parser("verify", help="check the top-term shape of the trace")
    p.add_argument("--surface", required=True)
    p.add_argument("--q", help="intersection numbers (omit with --fuzz)")
    p.add_argument("--p", help="twists (omit with --fuzz)")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--fuzz", type=int, default=0, help="verify N random curves")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--max-q", type=int, default=8)
    p.add_argument("--max-abs-p", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="emit random admissible coordinates")
    p.add_argument("--surface", required=True)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--max-q", type=int, default=6)
    p.add_argument("--max-abs-p", type=int, default=8)
    p.add_argument("--connected-only", action="store_true")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("kra", help="convert between annulus and gluing parameters")
    p.add_argument("--to-tau", help="annulus parameter t_K, e.g. 0.5+0.1j")
    p.add_argument("--from-tau", help="gluing parameter tau, e.g. 1+4j")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_kra)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SurfaceError, CoordError, OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
