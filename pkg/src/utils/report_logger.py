#!/usr/bin/env python
import os
import json
import logging
import time
import uuid
import hashlib
from datetime import datetime
from typing import Dict, Any, Optional, List

logger = logging.getLogger(__name__)

REPORT_SCHEMA = 'qverify.report/1'

# fields that differ between otherwise identical runs
VOLATILE_FIELDS = ('report_uuid', 'timestamp', 'runtime_ms')


def canonical_body(report: Dict[str, Any]) -> str:
    """JSON text of a report without its volatile fields, keys sorted"""
    body = {key: value for key, value in report.items() if key not in VOLATILE_FIELDS}
    return json.dumps(body, sort_keys=True, separators=(',', ':'))


def determinism_hash(reports: List[Dict[str, Any]]) -> str:
    """SHA-256 over the canonical bodies in the given (manifest) order"""
    digest = hashlib.sha256()
    for report in reports:
        digest.update(canonical_body(report).encode('utf-8'))
        digest.update(b'\n')
    return digest.hexdigest()


class ReportLogger:
    """
    Verification report trail

    Writes one JSON line per verification run followed by a summary
    object. Reports are always mirrored to the module logger; a report
    file is written when a path or directory is configured.
    """

    def __init__(self, report_path: Optional[str] = None, report_dir: Optional[str] = None):
        """
        Initialize the report logger

        Args:
            report_path: Explicit JSON-lines file to write
            report_dir: Directory for a dated report file (used when no path is given)
        """
        self.report_path = report_path
        if not report_path and report_dir:
            os.makedirs(report_dir, exist_ok=True)
            self.report_path = os.path.join(
                report_dir, f"verify_{datetime.now().strftime('%Y%m%d')}.jsonl")
        elif report_path and os.path.dirname(report_path):
            os.makedirs(os.path.dirname(report_path), exist_ok=True)
        self.records: List[Dict[str, Any]] = []

    def log_report(self, report: Dict[str, Any]) -> str:
        """
        Record one verification report

        Args:
            report: Report body (id, n, seed, params, lhs, rhs, residual, ...)

        Returns:
            ID of the report entry
        """
        report_id = str(uuid.uuid4())
        entry = dict(report)
        entry['schema'] = REPORT_SCHEMA
        entry['report_uuid'] = report_id
        entry['timestamp'] = time.time()
        self.records.append(entry)

        status = 'PASS' if entry.get('pass') else 'FAIL'
        logger.info(f"{status} {entry.get('id')} n={entry.get('n')} seed={entry.get('seed')} "
                    f"residual={entry.get('residual')}")
        return report_id

    def log_summary(self, summary: Dict[str, Any]) -> Dict[str, Any]:
        """Attach pass/fail counts and the determinism hash, then flush"""
        entry = dict(summary)
        entry['schema'] = REPORT_SCHEMA
        entry['kind'] = 'summary'
        entry['passed'] = sum(1 for r in self.records if r.get('pass'))
        entry['failed'] = sum(1 for r in self.records if not r.get('pass'))
        entry['determinism_hash'] = determinism_hash(self.records)
        entry['timestamp'] = time.time()
        logger.info(f"Suite finished: {entry['passed']} passed, {entry['failed']} failed, "
                    f"hash {entry['determinism_hash'][:16]}")
        self.flush(entry)
        return entry

    def flush(self, summary: Optional[Dict[str, Any]] = None):
        if not self.report_path:
            return
        try:
            with open(self.report_path, 'w') as f:
                for record in self.records:
                    f.write(json.dumps(record, sort_keys=True) + '\n')
                if summary is not None:
                    f.write(json.dumps(summary, sort_keys=True) + '\n')
            logger.info(f"Report written to {self.report_path}")
        except OSError as e:
            logger.error(f"Failed to write report file: {str(e)}")


# Singleton instance
_report_logger = None


def get_report_logger(report_path: Optional[str] = None,
                      report_dir: Optional[str] = None,
                      reset: bool = False) -> ReportLogger:
    """Get the report logger, creating it on first use, on reset or when a new sink is requested"""
    global _report_logger
    if _report_logger is None or reset or report_path or report_dir:
        _report_logger = ReportLogger(report_path=report_path, report_dir=report_dir)
    return _report_logger
