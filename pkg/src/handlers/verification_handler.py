#!/usr/bin/env python
import time
import logging
from typing import Dict, Any, Optional, Sequence, Tuple

from ..catalog.records import Family, IdentityRecord, ParamSet
from ..catalog.registry import get_record
from ..catalog.sampler import sample_params
from ..macdonald.polynomials import clear_tables
from ..utils.config import PrecisionContext
from ..utils.errors import DomainError, VerificationError
from ..utils.numerics import rel_residual, to_decimal
from ..utils.qkernel import get_kernel
from ..utils.sumengine import unwrap

logger = logging.getLogger(__name__)

INTEGRAL_FAMILIES = (Family.INTEGRAL, Family.CONSTANT_TERM)

# record whose left side is additionally compared at N and N + 1
N_INDEPENDENT = 'B5_CONSTRAINED'


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


class VerificationHandler:
    """
    Evaluates catalog records and turns the results into report bodies

    One handler owns one precision context; worker processes build their
    own handler from plain settings.
    """

    def __init__(self, ctx: PrecisionContext):
        """
        Initialize the verification handler

        Args:
            ctx: Precision context shared by every evaluation of this handler
        """
        self.ctx = ctx

    # -- serialisation ---------------------------------------------------------

    def _decimal(self, value):
        if isinstance(value, (list, tuple)):
            return [self._decimal(v) for v in value]
        if isinstance(value, int):
            return value
        return list(to_decimal(value, self.ctx))

    def serialize_params(self, P: ParamSet) -> Dict[str, Any]:
        """Parameter values as (re, im) decimal strings, orders as integers"""
        params = {name: self._decimal(value) for name, value in sorted(P.values.items())}
        for name, value in sorted(P.orders.items()):
            params[name] = list(value) if isinstance(value, (list, tuple)) else value
        return params

    @staticmethod
    def _diagnostics(result) -> Tuple[Any, int, str]:
        """(value, terms, note) of an evaluator result"""
        value, terms = unwrap(result)
        note = getattr(result, 'note', '') or ''
        if hasattr(result, 'est_error'):
            note = f"grid {result.grid}, est_error {float(result.est_error):.3e}" + (f"; {note}" if note else '')
        return value, terms, note

    def _evaluate(self, record: IdentityRecord, side: str, P: ParamSet):
        evaluator = record.lhs if side == 'lhs' else record.rhs
        try:
            return self._diagnostics(evaluator(P))
        except VerificationError as e:
            raise e.with_context(side=side, record_id=record.id)

    # -- operations ------------------------------------------------------------

    def verify(self, record: IdentityRecord, P: ParamSet, seed: Optional[int] = None) -> Dict[str, Any]:
        """
        Evaluate both sides of a record independently at one parameter point

        Args:
            record: Catalog record
            P: Admissible parameter set (constraints already solved)
            seed: Seed the point was drawn with, copied into the report

        Returns:
            Report body; pass iff the relative residual is below the record's tolerance

        Raises:
            VerificationError: from either side, tagged with the failing side
        """
        start = time.perf_counter()
        lhs, lhs_terms, lhs_note = self._evaluate(record, 'lhs', P)
        rhs, rhs_terms, rhs_note = self._evaluate(record, 'rhs', P)
        residual = rel_residual(lhs, rhs, self.ctx)
        tolerance = record.tolerance(self.ctx)
        notes = [f"lhs: {lhs_note}" if lhs_note else '', f"rhs: {rhs_note}" if rhs_note else '']
        return {
            'id': record.id,
            'kind': 'verify',
            'n': P.n,
            'seed': seed,
            'params': self.serialize_params(P),
            'lhs': self._decimal(lhs),
            'rhs': self._decimal(rhs),
            'residual': float(residual),
            'terms_used': lhs_terms + rhs_terms,
            'truncation_note': '; '.join(filter(None, notes)),
            'tolerance_regime': record.tolerance_kind,
            'pass': bool(residual < tolerance),
            'runtime_ms': _elapsed_ms(start),
        }

    def verify_integral(self, record: IdentityRecord, P: ParamSet,
                        seed: Optional[int] = None) -> Dict[str, Any]:
        """verify restricted to integral and constant-term records"""
        if record.family not in INTEGRAL_FAMILIES:
            raise DomainError(f"{record.id} is not an integral record", record_id=record.id)
        return self.verify(record, P, seed)

    def verify_mac(self, record: IdentityRecord, P: ParamSet,
                   seed: Optional[int] = None) -> Dict[str, Any]:
        """verify restricted to Macdonald polynomial records"""
        if record.family != Family.MACDONALD:
            raise DomainError(f"{record.id} is not a Macdonald record", record_id=record.id)
        return self.verify(record, P, seed)

    def verify_sampled(self, record: IdentityRecord, n: int, seed: int) -> Dict[str, Any]:
        """Draw the parameter point for (record, n, seed) and dispatch on the family"""
        P = sample_params(record, n, seed, self.ctx)
        if record.family in INTEGRAL_FAMILIES:
            return self.verify_integral(record, P, seed)
        if record.family == Family.MACDONALD:
            return self.verify_mac(record, P, seed)
        return self.verify(record, P, seed)

    def reduce_check(self, record: IdentityRecord, seed: int) -> Dict[str, Any]:
        """
        Compare a record at n = 1 with its univariate template

        Both identities are verified at matched parameters and the record's
        left side must equal scale * the template's left side.

        Raises:
            DomainError: if the record has no reduction or excludes n = 1
        """
        reduction = record.reduction
        if reduction is None:
            raise DomainError(f"{record.id} has no univariate reduction", record_id=record.id)
        if 1 not in record.dims:
            raise DomainError(f"{record.id} is not testable at n = 1", record_id=record.id)
        template = get_record(reduction.template)

        start = time.perf_counter()
        P = sample_params(record, 1, seed, self.ctx, fixed_orders=reduction.orders)
        T = reduction.mapping(P)
        lhs, lhs_terms, _ = self._evaluate(record, 'lhs', P)
        rhs, rhs_terms, _ = self._evaluate(record, 'rhs', P)
        t_lhs, t_lhs_terms, _ = self._evaluate(template, 'lhs', T)
        t_rhs, t_rhs_terms, _ = self._evaluate(template, 'rhs', T)
        scale = reduction.scale(P) if reduction.scale else 1

        residuals = {
            'record': rel_residual(lhs, rhs, self.ctx),
            'template': rel_residual(t_lhs, t_rhs, self.ctx),
            'agreement': rel_residual(lhs, scale * t_lhs, self.ctx),
        }
        tolerance = max(record.tolerance(self.ctx), template.tolerance(self.ctx), self.ctx.bilateral_tol)
        residual = max(residuals.values())
        return {
            'id': record.id,
            'kind': 'reduce',
            'template': template.id,
            'n': 1,
            'seed': seed,
            'params': self.serialize_params(P),
            'template_params': self.serialize_params(T),
            'lhs': self._decimal(lhs),
            'rhs': self._decimal(t_lhs * scale),
            'residual': float(residual),
            'residuals': {key: float(value) for key, value in residuals.items()},
            'terms_used': lhs_terms + rhs_terms + t_lhs_terms + t_rhs_terms,
            'truncation_note': f"record against {template.id} at n = 1",
            'tolerance_regime': record.tolerance_kind,
            'pass': bool(residual < tolerance),
            'runtime_ms': _elapsed_ms(start),
        }

    def check_n_independence(self, record: IdentityRecord, n: int, seed: int) -> Dict[str, Any]:
        """
        Left side of an N-sliced bilateral record at N and N + 1 against one right side

        Raises:
            DomainError: if the record has no scalar order N
        """
        start = time.perf_counter()
        P = sample_params(record, n, seed, self.ctx)
        if 'N' not in P.orders or isinstance(P['N'], (list, tuple)):
            raise DomainError(f"{record.id} has no scalar order N", record_id=record.id)
        N = P['N']
        shifted = P.copy(orders={'N': N + 1})
        lhs, lhs_terms, _ = self._evaluate(record, 'lhs', P)
        lhs_next, next_terms, _ = self._evaluate(record, 'lhs', shifted)
        rhs, rhs_terms, _ = self._evaluate(record, 'rhs', P)

        residuals = {
            'N': rel_residual(lhs, rhs, self.ctx),
            'N+1': rel_residual(lhs_next, rhs, self.ctx),
            'spread': rel_residual(lhs, lhs_next, self.ctx),
        }
        residual = max(residuals.values())
        return {
            'id': record.id,
            'kind': 'independence',
            'n': n,
            'seed': seed,
            'params': self.serialize_params(P),
            'lhs': self._decimal(lhs),
            'lhs_next': self._decimal(lhs_next),
            'rhs': self._decimal(rhs),
            'residual': float(residual),
            'residuals': {key: float(value) for key, value in residuals.items()},
            'terms_used': lhs_terms + next_terms + rhs_terms,
            'truncation_note': f"left side at N = {N} and N = {N + 1}",
            'tolerance_regime': record.tolerance_kind,
            'pass': bool(residual < record.tolerance(self.ctx)),
            'runtime_ms': _elapsed_ms(start),
        }

    def run_task(self, task: Sequence) -> Dict[str, Any]:
        """
        Execute one (kind, record id, n, seed) task

        Returns:
            Report body; a VerificationError becomes a failed entry with
            error and error_type fields instead of propagating
        """
        try:
            return self._run_task(task)
        finally:
            self.release_caches()

    def release_caches(self):
        """Empty the q-factorial kernel and the Macdonald degree tables"""
        get_kernel(self.ctx).clear()
        clear_tables()

    def _run_task(self, task: Sequence) -> Dict[str, Any]:
        kind, record_id, n, seed = task
        try:
            record = get_record(record_id)
            if kind == 'reduce':
                return self.reduce_check(record, seed)
            if kind == 'independence':
                return self.check_n_independence(record, n, seed)
            return self.verify_sampled(record, n, seed)
        except VerificationError as e:
            logger.error(f"{kind} {record_id} n={n} seed={seed} failed: {str(e)}")
            return {
                'id': record_id,
                'kind': kind,
                'n': n,
                'seed': seed,
                'pass': False,
                'error': str(e),
                'error_type': type(e).__name__,
                'side': e.side,
            }
        except (ArithmeticError, ValueError) as e:
            logger.error(f"{kind} {record_id} n={n} seed={seed} raised {type(e).__name__}: {str(e)}")
            return {
                'id': record_id,
                'kind': kind,
                'n': n,
                'seed': seed,
                'pass': False,
                'error': str(e),
                'error_type': type(e).__name__,
                'side': None,
            }


# Handlers per precision settings (one per worker process)
_handlers: Dict[Tuple, VerificationHandler] = {}


def get_verification_handler(settings: Optional[Dict[str, Any]] = None) -> VerificationHandler:
    """
    Get the handler for the given precision settings, creating it on first use

    Args:
        settings: PrecisionContext.settings() output; defaults to PrecisionContext()
    """
    ctx = PrecisionContext.from_settings(settings) if settings else PrecisionContext()
    key = tuple(sorted(ctx.settings().items()))
    handler = _handlers.get(key)
    if handler is None:
        handler = VerificationHandler(ctx)
        _handlers[key] = handler
        logger.debug(f"Created verification handler at {ctx.digits} digits")
    return handler
