#!/usr/bin/env python
"""
Record lookup and the versioned manifest

Manifest order is the order of the RECORDS tuples below: univariate
templates, terminating, bilateral, transformations, consistency checks,
integrals, Macdonald identities. Reports are assembled in this order.
"""
import fnmatch
import logging
from functools import lru_cache
from typing import Dict, Any, List, Tuple

from ..utils.errors import ManifestError
from . import bilateral, consistency, terminating, transformations, univariate
from .records import IdentityRecord

logger = logging.getLogger(__name__)

MANIFEST_SCHEMA = 'qverify.manifest/1'


@lru_cache(maxsize=1)
def all_records() -> Tuple[IdentityRecord, ...]:
    """Every catalog record in manifest order"""
    from ..integrals import identities as integral_identities
    from ..macdonald import identities as macdonald_identities

    records = (univariate.TEMPLATES + terminating.RECORDS + bilateral.RECORDS
               + transformations.RECORDS + consistency.RECORDS
               + integral_identities.RECORDS + macdonald_identities.RECORDS)
    seen = set()
    for record in records:
        if record.id in seen:
            raise ManifestError(f"duplicate record id {record.id}")
        seen.add(record.id)
    return records


def get_record(record_id: str) -> IdentityRecord:
    """
    Look up one record by id

    Raises:
        ManifestError: for an unknown id
    """
    for record in all_records():
        if record.id == record_id:
            return record
    raise ManifestError(f"unknown record id {record_id}")


def match_records(pattern: str) -> List[IdentityRecord]:
    """
    Records whose id matches a shell-style pattern (comma-separated alternatives allowed)

    Raises:
        ManifestError: if nothing matches
    """
    alternatives = [p.strip() for p in pattern.split(',') if p.strip()]
    matched = [r for r in all_records()
               if any(fnmatch.fnmatchcase(r.id, p) for p in alternatives)]
    if not matched:
        raise ManifestError(f"suite pattern {pattern!r} matches no record")
    return matched


def manifest() -> Dict[str, Any]:
    """Manifest document: schema id plus one entry per record"""
    return {
        'schema': MANIFEST_SCHEMA,
        'records': [record.manifest_entry() for record in all_records()],
    }


def load_manifest_ids(document: Dict[str, Any]) -> List[str]:
    """
    Record ids of a manifest document, checked against the catalog

    Raises:
        ManifestError: on a schema mismatch or unknown ids
    """
    if document.get('schema') != MANIFEST_SCHEMA:
        raise ManifestError(f"manifest schema {document.get('schema')!r}, expected {MANIFEST_SCHEMA}")
    try:
        ids = [entry['id'] for entry in document['records']]
    except (KeyError, TypeError):
        raise ManifestError("manifest entries need an 'id' field")
    for record_id in ids:
        get_record(record_id)
    return ids
