#!/usr/bin/env python
import logging
import threading
from typing import Dict, List, Tuple

from .config import PrecisionContext
from .errors import PoleError

logger = logging.getLogger(__name__)

# Spouge coefficients per working precision
_spouge_cache: Dict[int, Tuple[int, List]] = {}
_spouge_lock = threading.Lock()


def _spouge_coefficients(ctx: PrecisionContext) -> Tuple[int, List]:
    """Return (a, [c_0, ..., c_{a-1}]) for the context's working precision"""
    mp = ctx.mp
    dps = mp.dps
    with _spouge_lock:
        cached = _spouge_cache.get(dps)
    if cached is not None:
        return cached

    a = int(1.25 * (dps + 5)) + 1
    coeffs = []
    # c_k alternate in sign and grow like e^a
    with mp.workdps(dps + a):
        coeffs.append(mp.sqrt(2 * mp.pi))
        factorial = mp.mpf(1)
        for k in range(1, a):
            if k > 1:
                factorial *= (k - 1)
            c = (a - k) ** (mp.mpf(k) - mp.mpf(0.5)) * mp.exp(a - k) / factorial
            coeffs.append(c if k % 2 == 1 else -c)
    coeffs = [mp.mpf(c) for c in coeffs]

    with _spouge_lock:
        _spouge_cache[dps] = (a, coeffs)
    logger.debug(f"Computed {a} Spouge coefficients at {dps} digits")
    return a, coeffs


def gamma(z, ctx: PrecisionContext):
    """
    Gamma function via Spouge's approximation

    Uses the reflection formula for Re(z) < 1/2, so the series itself is
    only ever evaluated in the right half-plane.

    Args:
        z: Complex argument
        ctx: Precision context

    Returns:
        Gamma(z) at the context precision

    Raises:
        PoleError: if z is within 10^-digits of a nonpositive integer
    """
    mp = ctx.mp
    z = mp.mpc(z)
    nearest = mp.nint(z.real)
    if nearest <= 0 and abs(z - nearest) < mp.mpf(10) ** (-ctx.digits):
        raise PoleError(f"Gamma pole at z={mp.nstr(z, 10)}")

    if z.real < 0.5:
        return mp.pi / (mp.sin(mp.pi * z) * gamma(1 - z, ctx))

    a, coeffs = _spouge_coefficients(ctx)
    w = z - 1
    series = coeffs[0]
    for k in range(1, a):
        series += coeffs[k] / (w + k)
    base = w + a
    return mp.exp((w + mp.mpf(0.5)) * mp.log(base) - base) * series


def rel_residual(lhs, rhs, ctx: PrecisionContext):
    """
    Relative residual |lhs-rhs| / max(|lhs|+|rhs|, 10^-digits)

    Returns 0 when both values are exactly zero.
    """
    mp = ctx.mp
    if lhs == 0 and rhs == 0:
        return mp.mpf(0)
    floor = mp.mpf(10) ** (-ctx.digits)
    return abs(lhs - rhs) / max(abs(lhs) + abs(rhs), floor)


def cdiv(num, den, ctx: PrecisionContext, scale=None):
    """
    Divide with a pole check

    Args:
        num: Numerator
        den: Divisor
        ctx: Precision context
        scale: Magnitude of the operands the divisor was formed from

    Raises:
        PoleError: when |den| < 10^-(digits+10) * scale
    """
    mp = ctx.mp
    if scale is None:
        scale = max(abs(num), mp.mpf(1))
    if abs(den) < ctx.eps * scale:
        raise PoleError(f"Vanishing divisor |{mp.nstr(abs(den), 5)}|")
    return num / den


def to_decimal(value, ctx: PrecisionContext) -> Tuple[str, str]:
    """(re, im) decimal strings at full context precision"""
    mp = ctx.mp
    value = mp.mpc(value)
    return (mp.nstr(value.real, ctx.digits),
            mp.nstr(value.imag, ctx.digits))

