#!/usr/bin/env python
"""Univariate (basic) hypergeometric series straight from their definitions."""
import logging
from typing import Optional, Sequence

from ..utils.config import PrecisionContext
from ..utils.qkernel import get_kernel
from ..utils.sumengine import LatticeRegion, SumResult, sum_finite, sum_infinite, sum_bilateral

logger = logging.getLogger(__name__)


def phi(uppers: Sequence, lowers: Sequence, q, z, ctx: PrecisionContext,
        order: Optional[int] = None) -> SumResult:
    """
    r-phi-s series

    sum_k (a_1..a_r;q)_k / (q, b_1..b_s;q)_k ((-1)^k q^binom(k,2))^(1+s-r) z^k.

    ``order`` is N for a series with an upper parameter q^{-N}; the sum then
    runs over 0..N exactly, since rounding leaves (q^{-N};q)_{N+1} near
    10^-digits rather than 0.
    """
    kernel = get_kernel(ctx)
    up = [kernel.ladder(a, q) for a in uppers]
    down = [kernel.ladder(b, q) for b in lowers] + [kernel.ladder(q, q)]
    excess = 1 + len(lowers) - len(uppers)

    def term(k):
        j = k[0]
        value = z ** j
        for ladder in up:
            value *= ladder.get(j)
        for ladder in down:
            value *= ladder.inv(j)
        if excess:
            value *= ((-1) ** j * kernel.qpow(q, j * (j - 1) // 2)) ** excess
        return value

    if order is not None:
        return sum_finite(LatticeRegion.rect([order]), term, ctx)
    return sum_infinite(1, term, ctx)


def psi(uppers: Sequence, lowers: Sequence, q, z, ctx: PrecisionContext) -> SumResult:
    """
    r-psi-s series

    sum_{k in Z} (a_1..a_r;q)_k / (b_1..b_s;q)_k ((-1)^k q^binom(k,2))^(s-r) z^k.
    """
    kernel = get_kernel(ctx)
    up = [kernel.ladder(a, q) for a in uppers]
    down = [kernel.ladder(b, q) for b in lowers]
    excess = len(lowers) - len(uppers)

    def term(k):
        j = k[0]
        value = z ** j
        for ladder in up:
            value *= ladder.get(j)
        for ladder in down:
            value *= ladder.inv(j)
        if excess:
            value *= ((-1) ** (j % 2) * kernel.qpow(q, j * (j - 1) // 2)) ** excess
        return value

    return sum_bilateral(LatticeRegion.bilateral(1), term, ctx)


def hyper_H(uppers: Sequence, lowers: Sequence, z, ctx: PrecisionContext) -> SumResult:
    """r-H-s bilateral series sum_{k in Z} (a)_k / (b)_k z^k"""
    kernel = get_kernel(ctx)

    def term(k):
        j = k[0]
        value = z ** j
        for a in uppers:
            value *= kernel.poch(a, j)
        for b in lowers:
            value /= kernel.poch(b, j)
        return value

    return sum_bilateral(LatticeRegion.bilateral(1), term, ctx)


def very_well_poised(a, q, ctx: PrecisionContext):
    """(qa^(1/2), -qa^(1/2); a^(1/2), -a^(1/2)) parameter pairs of a very-well-poised series"""
    root = ctx.mp.sqrt(a)
    return [q * root, -q * root], [root, -root]
