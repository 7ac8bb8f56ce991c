#!/usr/bin/env python
"""
Hook products, generalized shifted factorials and evaluation homomorphisms
"""
import logging
from functools import lru_cache
from typing import Sequence, Tuple

import sympy as sp

from ..utils.config import PrecisionContext
from ..utils.errors import BudgetError, DomainError, PoleError
from ..utils.qkernel import get_kernel
from .partitions import Partition, partitions_of
from .polynomials import MacdonaldPoly

logger = logging.getLogger(__name__)

# largest degree for which the power-sum transition is inverted exactly
MAX_EPS_DEGREE = 10


def qt_poch(a, parts: Sequence[int], q, t, ctx: PrecisionContext):
    """(a;q,t)_lambda = prod_i (a t^(1-i); q)_{lambda_i}; negative parts allowed"""
    kernel = get_kernel(ctx)
    result = ctx.mp.mpc(1)
    for i, part in enumerate(parts):
        result *= kernel.qpoch(a * t ** (-i), q, part)
    return result


def qt_poch_inv(a, parts: Sequence[int], q, t, ctx: PrecisionContext):
    kernel = get_kernel(ctx)
    result = ctx.mp.mpc(1)
    for i, part in enumerate(parts):
        result *= kernel.qpoch_inv(a * t ** (-i), q, part)
    return result


def hooks(lam: Partition, n: int, q, t, ctx: PrecisionContext) -> Tuple:
    """
    (c_lambda, c'_lambda, b_lambda) from the pairwise products

    c_lambda  = prod_i (t^(n-i+1);q)_{l_i} prod_{i<j} (t^(j-i);q)_{l_i-l_j} / (t^(j-i+1);q)_{l_i-l_j}
    c'_lambda = prod_i (q t^(n-i);q)_{l_i} prod_{i<j} (q t^(j-i-1);q)_{l_i-l_j} / (q t^(j-i);q)_{l_i-l_j}

    b_lambda is taken as c_lambda / c'_lambda.

    Raises:
        DomainError: if l(lambda) > n
        PoleError: from a vanishing denominator factor
    """
    if lam.length > n:
        raise DomainError(f"hooks need l({lam.parts}) <= {n}")
    kernel = get_kernel(ctx)
    c = ctx.mp.mpc(1)
    c_prime = ctx.mp.mpc(1)
    for i in range(n):
        li = lam[i]
        c *= kernel.qpoch(t ** (n - i), q, li)
        c_prime *= kernel.qpoch(q * t ** (n - i - 1), q, li)
        for j in range(i + 1, n):
            diff = li - lam[j]
            c *= kernel.qpoch(t ** (j - i), q, diff) * kernel.qpoch_inv(t ** (j - i + 1), q, diff)
            c_prime *= kernel.qpoch(q * t ** (j - i - 1), q, diff) * kernel.qpoch_inv(q * t ** (j - i), q, diff)
    if abs(c_prime) < ctx.eps:
        raise PoleError(f"c'_{lam.parts} vanishes", index=lam.parts)
    return c, c_prime, c / c_prime


def arm_leg_hooks(lam: Partition, q, t, ctx: PrecisionContext) -> Tuple:
    """(prod_s (1 - q^a(s) t^(l(s)+1)), prod_s (1 - q^(a(s)+1) t^l(s))) over the cells of lambda"""
    c = ctx.mp.mpc(1)
    c_prime = ctx.mp.mpc(1)
    conj = lam.conjugate()
    for i, j in lam.cells():
        arm = lam[i] - j - 1
        leg = conj[j] - i - 1
        c *= 1 - q ** arm * t ** (leg + 1)
        c_prime *= 1 - q ** (arm + 1) * t ** leg
    return c, c_prime


def principal_point(x, n: int, t) -> list:
    """x t^delta = (x, x t, ..., x t^(n-1))"""
    return [x * t ** i for i in range(n)]


def eval_u(lam: Partition, f: MacdonaldPoly, ctx: PrecisionContext):
    """u_lambda(f): f at z_i = q^lambda_i t^(n-i); zero when l(lambda) > n"""
    n = f.n_vars
    if lam.length > n:
        return ctx.mp.mpc(0)
    q, t = f.q, f.t
    return f([q ** lam[i] * t ** (n - 1 - i) for i in range(n)])


# -- epsilon specialization ------------------------------------------------------

def _count_assignments(parts: Tuple[int, ...], targets: Tuple[int, ...]) -> int:
    """Ways to place each part in one target slot so that the slot sums equal targets"""
    if not parts:
        return 1 if all(v == 0 for v in targets) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    for k, room in enumerate(targets):
        if room >= first:
            total += _count_assignments(rest, targets[:k] + (room - first,) + targets[k + 1:])
    return total


@lru_cache(maxsize=16)
def monomial_to_power(d: int) -> Tuple[Tuple[Partition, ...], sp.Matrix]:
    """
    Exact transition m_mu = sum_nu M[mu, nu] p_nu over all partitions of d

    Built by inverting the integer matrix of p_nu in the monomial basis.
    """
    if d > MAX_EPS_DEGREE:
        raise BudgetError(f"power-sum transition limited to degree {MAX_EPS_DEGREE}, got {d}")
    basis = partitions_of(d)
    size = len(basis)
    L = sp.zeros(size, size)
    for r, nu in enumerate(basis):
        for c, mu in enumerate(basis):
            L[r, c] = _count_assignments(nu.parts, mu.parts)
    return basis, L.inv()


def eps_power_sum(nu: Partition, a, t, ctx: PrecisionContext):
    """epsilon_{a;t}(p_nu) = prod_r (1 - a^nu_r) / (1 - t^nu_r)"""
    result = ctx.mp.mpc(1)
    for r in nu:
        denom = 1 - t ** r
        if abs(denom) < ctx.eps:
            raise PoleError(f"t^{r} = 1 in epsilon specialization")
        result *= (1 - a ** r) / denom
    return result


def eval_eps(a, t, f: MacdonaldPoly, ctx: PrecisionContext):
    """epsilon_{a;t}(f) through the monomial to power-sum transition at degree |f|"""
    basis, M = monomial_to_power(f.degree)
    index = {mu: r for r, mu in enumerate(basis)}
    eps_p = [eps_power_sum(nu, a, t, ctx) for nu in basis]
    total = ctx.mp.mpc(0)
    for mu, coeff in f.coeffs.items():
        row = index[mu]
        value = 0
        for c in range(len(basis)):
            entry = sp.Rational(M[row, c])
            if entry:
                value += ctx.mp.mpf(int(entry.p)) / int(entry.q) * eps_p[c]
        total += coeff * value
    return total

