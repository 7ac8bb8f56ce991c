#!/usr/bin/env python
import hashlib
import logging
import math
from typing import Dict, Any, Optional

import numpy as np

from ..utils.config import PrecisionContext
from ..utils.errors import SamplingError, DomainError, PoleError
from .records import IdentityRecord, ParamSet, ParamSpec, OrderSpec

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000
DOMAIN_MARGIN = 0.05


def _stream(record_id: str, seed: int, name: str, attempt: int) -> np.random.Generator:
    """Counter-based generator keyed by (record, seed, parameter name, attempt)"""
    material = f"{record_id}|{seed}|{name}|{attempt}".encode('utf-8')
    key = int.from_bytes(hashlib.sha256(material).digest()[:16], 'big')
    return np.random.Generator(np.random.Philox(key=key))


def _length(shape: str, n: int, orders: Dict[str, Any]) -> int:
    if shape.isdigit():
        return int(shape)
    m = orders.get('m', 1)
    return {
        'n': n,
        'n+1': n + 1,
        'm': m,
        'm+1': m + 1,
        '2n': 2 * n,
        '2n+2': 2 * n + 2,
        'p': orders.get('p', 1),
    }[shape]


def _draw_param(spec: ParamSpec, rng: np.random.Generator, count: int, ctx: PrecisionContext):
    mp = ctx.mp
    values = []
    for _ in range(count):
        modulus = float(rng.uniform(spec.lo, spec.hi))
        theta = 0.0 if spec.real else float(rng.uniform(0.0, 2.0 * math.pi))
        values.append(mp.mpc(spec.shift + modulus * math.cos(theta), modulus * math.sin(theta)))
    return values


def _draw_order(spec: OrderSpec, rng: np.random.Generator, count: int):
    return tuple(int(v) for v in rng.integers(spec.lo, spec.hi + 1, size=count))


def sample_params(record: IdentityRecord, n: int, seed: int, ctx: PrecisionContext,
                  fixed_orders: Optional[Dict[str, Any]] = None) -> ParamSet:
    """
    Draw an admissible parameter point for a record

    Free parameters get moduli uniform in their spec range and uniform
    phases; each constraint is then solved for its dependent parameter and
    every domain inequality and sampling window is checked with a margin.

    Args:
        record: Catalog record
        n: Dimension (must be in the record's dimension policy)
        seed: Run seed
        ctx: Precision context
        fixed_orders: Integer parameters to pin instead of drawing

    Returns:
        ParamSet satisfying constraints, domain and guards

    Raises:
        SamplingError: if no admissible point is found within MAX_ATTEMPTS
    """
    if n not in record.dims:
        raise DomainError(f"n={n} outside the dimension policy {record.dims} of {record.id}")

    for attempt in range(MAX_ATTEMPTS):
        orders: Dict[str, Any] = {}
        for spec in record.orders:
            if fixed_orders and spec.name in fixed_orders:
                orders[spec.name] = fixed_orders[spec.name]
                continue
            rng = _stream(record.id, seed, spec.name, attempt)
            if spec.shape == 'scalar':
                orders[spec.name] = _draw_order(spec, rng, 1)[0]
            else:
                orders[spec.name] = _draw_order(spec, rng, _length(spec.shape, n, orders))

        values: Dict[str, Any] = {}
        for spec in record.params:
            rng = _stream(record.id, seed, spec.name, attempt)
            if spec.shape == 'scalar':
                values[spec.name] = _draw_param(spec, rng, 1, ctx)[0]
            else:
                values[spec.name] = _draw_param(spec, rng, _length(spec.shape, n, orders), ctx)

        P = ParamSet(n, values, orders, ctx)
        try:
            for constraint in record.constraints:
                P.set(constraint.target, constraint.solve(P))
            if not all(cond.holds(P, DOMAIN_MARGIN) for cond in record.domain):
                continue
            if not all(cond.holds(P, DOMAIN_MARGIN) for cond in record.window):
                continue
            if not all(guard(P) for guard in record.guards):
                continue
        except (ZeroDivisionError, PoleError):
            continue

        if attempt:
            logger.debug(f"{record.id} n={n} seed={seed}: admissible after {attempt + 1} attempts")
        return P

    raise SamplingError(f"no admissible parameters after {MAX_ATTEMPTS} attempts",
                        record_id=record.id)
