"""
Command handlers
Each handler runs one subcommand on the engine, writes JSON to stdout and
returns the process exit code.
"""

import json
import logging
import sys
from argparse import Namespace
from typing import Any, Callable, Dict, TextIO

from ..engine import Pro2EqEngine

logger = logging.getLogger(__name__)


def emit(payload: Any, compact: bool = False, stream: TextIO = None):
    stream = stream or sys.stdout
    text = json.dumps(payload, ensure_ascii=False, separators=(",", ":") if compact else None,
                      indent=None if compact else 2)
    stream.write(text + "\n")


def cmd_classify(engine: Pro2EqEngine, args: Namespace) -> int:
    payload, code = engine.classify(args.expr)
    emit(payload, args.json)
    logger.info(f"classify {args.expr}: {payload['label']}")
    return code


def cmd_compare(engine: Pro2EqEngine, args: Namespace) -> int:
    payload, code = engine.compare(args.first, args.second, with_explanation=args.explain)
    emit(payload, args.json)
    if args.explain:
        # the readable form goes to stderr so stdout stays JSON
        sys.stderr.write("\n".join(payload["explanation"]) + "\n")
        for problem in payload["replay"]:
            sys.stderr.write(f"replay: {problem}\n")
    return code


def cmd_invariants(engine: Pro2EqEngine, args: Namespace) -> int:
    payload, code = engine.invariants_report(args.expr)
    emit(payload, args.json)
    return code


def cmd_ends(engine: Pro2EqEngine, args: Namespace) -> int:
    payload, code = engine.ends(args.expr, args.k, args.R, dot=args.dot, tsv=args.tsv)
    emit(payload, args.json)
    return code


def cmd_tower(engine: Pro2EqEngine, args: Namespace) -> int:
    payload, code = engine.tower(args.tower_command, args.files, args.depth)
    emit(payload, args.json)
    return code


def cmd_batch(engine: Pro2EqEngine, args: Namespace) -> int:
    results, code = engine.batch(args.file)
    emit(results, args.json)
    return code


HANDLERS: Dict[str, Callable[[Pro2EqEngine, Namespace], int]] = {
    "classify": cmd_classify,
    "compare": cmd_compare,
    "invariants": cmd_invariants,
    "ends": cmd_ends,
    "tower": cmd_tower,
    "batch": cmd_batch,
}


def run(engine: Pro2EqEngine, args: Namespace) -> int:
    return HANDLERS[args.command](engine, args)
