#!/usr/bin/env python
import os
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Any, Optional

import mpmath

from .errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrecisionContext:
    """
    Working precision, tolerances and truncation policy for one evaluation

    Each context owns an isolated mpmath context so that concurrent workers
    never touch the global ``mpmath.mp`` precision.

    Args:
        digits: Decimal working precision of the results
        verify_tol: Relative residual threshold for terminating identities
        trunc_tol: Tail-bound target for infinite sums and products
        max_terms: Hard cap on lattice points per summation
        bilateral_tol: Residual threshold for nonterminating/bilateral identities
        quad_target: Relative change that stops torus grid doubling
        quad_tol: Residual threshold for quadrature-limited checks
    """
    digits: int = 50
    verify_tol: Optional[float] = None
    trunc_tol: Optional[float] = None
    max_terms: int = 10 ** 7
    bilateral_tol: Optional[float] = None
    min_shells: int = 4
    quad_target: Optional[float] = None
    quad_tol: float = 1e-7
    max_grid: int = 1024
    mac_max_degree: int = 80
    guard_digits: int = 10
    mp: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.digits < 20:
            raise DomainError(f"digits must be at least 20, got {self.digits}")
        if self.verify_tol is None:
            object.__setattr__(self, 'verify_tol', 10.0 ** -(self.digits - 15))
        if self.trunc_tol is None:
            object.__setattr__(self, 'trunc_tol', 10.0 ** -(self.digits + 5))
        if self.bilateral_tol is None:
            object.__setattr__(self, 'bilateral_tol', 10.0 ** -(self.digits - 12))
        if self.quad_target is None:
            object.__setattr__(self, 'quad_target', 10.0 ** -min(self.digits, 25))
        if not (self.verify_tol > self.trunc_tol > 0):
            raise DomainError("tolerances must satisfy verify_tol > trunc_tol > 0")

        ctx = mpmath.MPContext()
        ctx.dps = self.digits + self.guard_digits
        object.__setattr__(self, 'mp', ctx)

    @property
    def eps(self):
        """Pole threshold 10^-(digits+10) as an mpf of this context"""
        return self.mp.mpf(10) ** (-(self.digits + 10))

    def settings(self) -> Dict[str, Any]:
        """Plain, picklable description used to rebuild the context in workers"""
        return {
            'digits': self.digits,
            'verify_tol': self.verify_tol,
            'trunc_tol': self.trunc_tol,
            'max_terms': self.max_terms,
            'bilateral_tol': self.bilateral_tol,
            'min_shells': self.min_shells,
            'quad_target': self.quad_target,
            'quad_tol': self.quad_tol,
            'max_grid': self.max_grid,
            'mac_max_degree': self.mac_max_degree,
            'guard_digits': self.guard_digits,
        }

    @classmethod
    def from_settings(cls, settings: Dict[str, Any]) -> "PrecisionContext":
        return cls(**settings)


DEFAULT_SETTINGS = {
    'digits': 50,
    'jobs': 1,
    'seeds': 5,
    'n_max': 2,
    'report_dir': 'reports',
}


def load_settings(overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Resolve run settings from defaults, environment, a JSON file and overrides

    Environment variables are named ``VERIFY_<KEY>``; a JSON file given by
    ``VERIFY_CONFIG_PATH`` may set the same keys. Explicit overrides (CLI
    flags) win over both.

    Args:
        overrides: Values that take precedence; None entries are ignored

    Returns:
        Dictionary with the keys of DEFAULT_SETTINGS
    """
    settings = dict(DEFAULT_SETTINGS)

    for key, default in DEFAULT_SETTINGS.items():
        env_key = f"VERIFY_{key.upper()}"
        if os.environ.get(env_key):
            raw = os.environ.get(env_key)
            try:
                settings[key] = type(default)(raw)
                logger.info(f"Loaded {key} from environment: {settings[key]}")
            except ValueError:
                logger.warning(f"Invalid value in {env_key}, using default")

    config_path = os.environ.get('VERIFY_CONFIG_PATH')
    if config_path and os.path.exists(config_path):
        try:
            with open(config_path, 'r') as f:
                config = json.load(f)
            for key, value in config.items():
                if key in settings and isinstance(value, type(DEFAULT_SETTINGS[key])):
                    settings[key] = value
                    logger.info(f"Loaded {key} from config file: {value}")
        except Exception as e:
            logger.error(f"Failed to load verification config file: {str(e)}")

    for key, value in (overrides or {}).items():
        if value is not None:
            settings[key] = value

    return settings
