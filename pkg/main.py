#!/usr/bin/env python3
"""
Proper 2-Equivalence Classifier - Main Entry Point
"""

import os
import sys
import logging
import argparse
from dotenv import load_dotenv

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from src.cli.commands import emit, run
from src.engine import Pro2EqEngine
from src.errors import Pro2EqError
from src.towers.analysis import DEFAULT_DEPTH
from src.utils.config import load_config

# Load environment variables
load_dotenv()


def setup_logging(verbose: bool = False):
    """Setup logging configuration; stdout is reserved for JSON"""
    log_level = 'DEBUG' if verbose else os.getenv('LOG_LEVEL', 'WARNING').upper()
    log_file = os.getenv('LOG_FILE')

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, log_level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Proper 2-equivalence classification of finitely presented groups')
    parser.add_argument('--strict-paper', action='store_true', default=None,
                        help='Disable the quarantined axioms (graph semistability, stacked simple connectivity)')
    parser.add_argument('--depth', type=int, help=f'Tower depth (default {DEFAULT_DEPTH}, clamped to explicit windows)')
    parser.add_argument('--budget', type=int, help='Element budget of the Cayley oracle')
    parser.add_argument('--cache', help='Result cache directory (overrides PRO2EQ_CACHE)')
    parser.add_argument('--no-cache', action='store_true', help='Do not read or write the result cache')
    parser.add_argument('--annotations', help='Annotation registry file for named groups')
    parser.add_argument('--explain', action='store_true', help='Add the replayable derivation to compare output')
    parser.add_argument('--batch', metavar='FILE', help='Classify/compare every line of FILE')
    parser.add_argument('--json', action='store_true', help='Compact single-line JSON')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')

    commands = parser.add_subparsers(dest='command')

    classify = commands.add_parser('classify', help='Class label of an expression')
    classify.add_argument('expr')

    compare = commands.add_parser('compare', help='Decide proper 2-equivalence of two expressions')
    compare.add_argument('first')
    compare.add_argument('second')

    invariants = commands.add_parser('invariants', help='Invariant report of an expression')
    invariants.add_argument('expr')

    ends = commands.add_parser('ends', help='Estimate the number of ends from a Cayley ball')
    ends.add_argument('expr')
    ends.add_argument('--k', type=int, default=3, help='Largest removed radius of the sweep')
    ends.add_argument('--R', type=int, default=8, help='Ball radius')
    ends.add_argument('--dot', help='Write the ball as a DOT graph')
    ends.add_argument('--tsv', help='Write the sweep table as TSV')

    tower = commands.add_parser('tower', help='Tower calculus on tower files')
    tower.add_argument('tower_command', choices=['ml', 'protrivial', 'type', 'proiso'])
    tower.add_argument('files', nargs='+')

    batch = commands.add_parser('batch', help='Classify/compare every line of a file')
    batch.add_argument('file')
    return parser


def main(argv=None):
    """Main function"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.batch:
        args.command, args.file = 'batch', args.batch
    if not args.command:
        parser.print_help(sys.stderr)
        return 3

    setup_logging(args.verbose)
    logger = logging.getLogger('main')

    try:
        config = load_config().override(
            strict_paper=args.strict_paper,
            depth=args.depth,
            budget=args.budget,
            cache_dir=args.cache,
            annotations=args.annotations,
        )
        if args.no_cache:
            config = config.override(use_cache=False)
        engine = Pro2EqEngine(config)
        return run(engine, args)
    except Pro2EqError as e:
        logger.error(str(e))
        emit({'error': str(e), 'type': type(e).__name__}, args.json)
        return e.exit_code
    except ValueError as e:
        # argument checks inside the library (negative radius, empty sweep, ...)
        logger.error(str(e))
        emit({'error': str(e), 'type': 'InputError'}, args.json)
        return 3
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 6
    except Exception as e:
        logger.exception(f"Unexpected failure: {str(e)}")
        emit({'error': str(e), 'type': type(e).__name__}, args.json)
        return 6


if __name__ == '__main__':
    sys.exit(main())
