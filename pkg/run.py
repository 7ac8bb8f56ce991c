#!/usr/bin/env python
"""
q-series identity verification
Command-line entrypoint: verify, list, manifest
"""
import argparse
import json
import logging
import os
import sys

# Add the project root to the Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from src.app import run_suite
from src.catalog.registry import all_records, load_manifest_ids, manifest, match_records
from src.utils.errors import ManifestError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to ManifestError"""

    def error(self, message):
        raise ManifestError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='verify', description="Numerical verification of multiple basic hypergeometric identities")
    commands = parser.add_subparsers(dest='command')

    verify = commands.add_parser('verify', help="Run a verification suite")
    verify.add_argument('--suite', default='*', help="Record id pattern, e.g. 'S*' or 'B5*,T4*' (default: all)")
    verify.add_argument('--n-max', type=int, default=None, dest='n_max', help="Largest dimension n (default: 2)")
    verify.add_argument('--seeds', type=int, default=None, help="Seeds per (record, n) (default: 5)")
    verify.add_argument('--digits', type=int, default=None, help="Working precision in decimal digits (default: 50)")
    verify.add_argument('--report', default=None, help="JSON-lines report path")
    verify.add_argument('--manifest', default=None, help="Restrict to the records of a manifest file")
    verify.add_argument('--jobs', type=int, default=None, help="Worker processes (default: 1)")

    listing = commands.add_parser('list', help="List catalog records")
    listing.add_argument('--suite', default='*', help="Record id pattern")
    listing.add_argument('--notes', action='store_true', help="Print each record's notes ledger")

    export = commands.add_parser('manifest', help="Write the manifest JSON")
    export.add_argument('--output', default=None, help="Output path (default: stdout)")
    return parser


def _list(args) -> int:
    for record in match_records(args.suite):
        print(f"{record.id:28s} {record.family.value:22s} n={list(record.dims)}")
        if args.notes:
            print(f"    anchor: {record.anchor}")
            for note in record.notes:
                print(f"    note: {note}")
    return EXIT_OK


def _manifest(args) -> int:
    text = json.dumps(manifest(), indent=2, sort_keys=True)
    if args.output:
        with open(args.output, 'w') as f:
            f.write(text + '\n')
        logger.info(f"Manifest with {len(all_records())} records written to {args.output}")
    else:
        print(text)
    return EXIT_OK


def _verify(args) -> int:
    ids = None
    if args.manifest:
        try:
            with open(args.manifest, 'r') as f:
                ids = load_manifest_ids(json.load(f))
        except (OSError, ValueError) as e:
            raise ManifestError(f"cannot read manifest {args.manifest}: {str(e)}")
    _, summary = run_suite(args.suite, n_max=args.n_max, seeds=args.seeds, digits=args.digits,
                           jobs=args.jobs, report_path=args.report, ids=ids)
    independence = summary.get('n_independence')
    print(f"{summary['passed']} passed, {summary['failed']} failed, hash {summary['determinism_hash']}")
    if independence:
        print(f"N-independence of {independence['record']}: "
              f"{'holds' if independence['holds'] else 'VIOLATED'} over {independence['runs']} runs")
    return EXIT_FAILURES if summary['failed'] else EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == 'list':
            return _list(args)
        if args.command == 'manifest':
            return _manifest(args)
        if args.command == 'verify':
            return _verify(args)
        raise ManifestError("a command is required: verify, list or manifest")
    except ManifestError as e:
        logger.error(f"Usage error: {str(e)}")
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
