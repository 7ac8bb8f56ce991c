#!/usr/bin/env python
"""
Verification suite driver
Selects records, fans (record, n, seed) tasks out to workers and writes the report trail
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Dict, Any, List, Optional, Sequence, Tuple

from dotenv import load_dotenv

from src.catalog.registry import match_records
from src.handlers.verification_handler import N_INDEPENDENT, get_verification_handler
from src.utils.config import PrecisionContext, load_settings
from src.utils.report_logger import get_report_logger

# Load environment variables
load_dotenv()

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

Task = Tuple[str, str, int, int]


def build_tasks(pattern: str, n_max: int, seeds: int,
                ids: Optional[Sequence[str]] = None) -> List[Task]:
    """
    Tasks for every matched record in manifest order

    Each record contributes one verify task per (n, seed) with n in its
    dimension policy and n <= n_max, one reduction task per seed when it has
    a univariate reduction, and the N-independence tasks for the N-sliced
    bilateral record.

    Raises:
        ManifestError: if the pattern matches nothing
    """
    records = match_records(pattern)
    if ids is not None:
        records = [r for r in records if r.id in set(ids)]
    tasks: List[Task] = []
    for record in records:
        dims = [n for n in record.dims if n <= n_max]
        for n in dims:
            for seed in range(seeds):
                tasks.append(('verify', record.id, n, seed))
        if record.reduction is not None and 1 in record.dims:
            for seed in range(seeds):
                tasks.append(('reduce', record.id, 1, seed))
        if record.id == N_INDEPENDENT:
            for n in dims:
                for seed in range(seeds):
                    tasks.append(('independence', record.id, n, seed))
    return tasks


def _execute(task: Task, precision: Dict[str, Any]) -> Dict[str, Any]:
    """Worker entry: rebuild the handler from plain settings and run one task"""
    return get_verification_handler(precision).run_task(task)


def _independence_summary(reports: List[Dict[str, Any]]) -> Optional[Dict[str, Any]]:
    runs = [r for r in reports if r.get('kind') == 'independence']
    if not runs:
        return None
    return {
        'record': N_INDEPENDENT,
        'runs': len(runs),
        'holds': all(r.get('pass') for r in runs),
    }


def run_suite(pattern: str = '*',
              n_max: Optional[int] = None,
              seeds: Optional[int] = None,
              digits: Optional[int] = None,
              jobs: Optional[int] = None,
              report_path: Optional[str] = None,
              ids: Optional[Sequence[str]] = None) -> Tuple[List[Dict[str, Any]], Dict[str, Any]]:
    """
    Run every task of a suite and emit the report trail

    Reports are assembled in task order whatever the worker count, so the
    determinism hash depends only on the arguments.

    Args:
        pattern: Record id pattern (fnmatch, comma-separated alternatives)
        n_max: Largest dimension to test
        seeds: Seeds 0 .. seeds-1 per (record, n)
        digits: Working precision
        jobs: Worker processes (1 runs in-process)
        report_path: JSON-lines output; defaults to a dated file in the report directory
        ids: Optional manifest restriction of the matched records

    Returns:
        (reports, summary)

    Raises:
        ManifestError: if the pattern matches nothing
    """
    settings = load_settings({'n_max': n_max, 'seeds': seeds, 'digits': digits, 'jobs': jobs})
    precision = PrecisionContext(digits=settings['digits']).settings()
    tasks = build_tasks(pattern, settings['n_max'], settings['seeds'], ids)
    logger.info(f"Running {len(tasks)} tasks for {pattern!r} at {settings['digits']} digits "
                f"with {settings['jobs']} worker(s)")

    if settings['jobs'] > 1:
        with ProcessPoolExecutor(max_workers=settings['jobs']) as executor:
            reports = list(executor.map(_execute, tasks, repeat(precision), chunksize=1))
    else:
        reports = [_execute(task, precision) for task in tasks]

    report_logger = get_report_logger(report_path=report_path,
                                      report_dir=None if report_path else settings['report_dir'],
                                      reset=True)
    for report in reports:
        report_logger.log_report(report)
    summary = report_logger.log_summary({
        'suite': pattern,
        'n_max': settings['n_max'],
        'seeds': settings['seeds'],
        'digits': settings['digits'],
        'tasks': len(tasks),
        'n_independence': _independence_summary(reports),
    })
    return report_logger.records, summary
