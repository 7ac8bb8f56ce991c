#!/usr/bin/env python
"""
Basic hypergeometric series with Macdonald polynomial argument

    rPhis(a; b; z) = sum_lambda [(-1)^|l| q^n(l') t^-n(l)]^(s+1-r)
                     t^n(l) / c'_l  prod (a_i;q,t)_l / prod (b_j;q,t)_l  P_l(z)

summed in degree shells |lambda| = d, and the bilateral rPsi(s+1) over
dominant integral weights lambda_1 >= ... >= lambda_n, lambda_n in Z.
"""
import logging
from typing import Sequence

from ..utils.config import PrecisionContext
from ..utils.errors import ConvergenceError
from ..utils.qkernel import get_kernel
from ..utils.sumengine import ShellMonitor, SumResult
from .evaluations import hooks, qt_poch, qt_poch_inv
from .partitions import Partition, partitions_of
from .polynomials import degree_table

logger = logging.getLogger(__name__)


def extra_factor(parts: Sequence[int], q, t, power: int):
    """((-1)^|lambda| q^n(lambda') t^-n(lambda))^power; n(lambda') = sum binom(lambda_i, 2)"""
    if power == 0:
        return 1
    size = sum(parts)
    n_conj = sum(p * (p - 1) // 2 for p in parts)
    n_lam = sum(i * p for i, p in enumerate(parts))
    base = (-1) ** size * q ** n_conj * t ** (-n_lam)
    return base ** power


def _upper_lower(parts, uppers, lowers, q, t, ctx):
    value = ctx.mp.mpc(1)
    for a in uppers:
        value *= qt_poch(a, parts, q, t, ctx)
    for b in lowers:
        value *= qt_poch_inv(b, parts, q, t, ctx)
    return value


def phi_coefficient(lam: Partition, uppers: Sequence, lowers: Sequence, q, t, n: int,
                    ctx: PrecisionContext):
    """Coefficient of P_lambda(z) in rPhis"""
    power = len(lowers) + 1 - len(uppers)
    c_prime = hooks(lam, n, q, t, ctx)[1]
    return (extra_factor(lam.parts, q, t, power) * t ** lam.n_weight() / c_prime
            * _upper_lower(lam.parts, uppers, lowers, q, t, ctx))


def phi_series(uppers: Sequence, lowers: Sequence, q, t, z: Sequence,
               ctx: PrecisionContext) -> SumResult:
    """
    rPhis with r = len(uppers), s = len(lowers) at the point z

    Degree shells are added until three consecutive shells are below
    trunc_tol relative to the running sum.

    Raises:
        ConvergenceError: if no settling happens up to degree ctx.mac_max_degree
        PoleError: from a vanishing lower factor
    """
    mp = ctx.mp
    n = len(z)
    monitor = ShellMonitor(ctx)
    total = mp.mpc(0)
    abs_total = mp.mpf(0)
    used = 0
    d = 0
    while True:
        shell_mass = mp.mpf(0)
        table = None
        for lam in partitions_of(d, n):
            used += 1
            coeff = phi_coefficient(lam, uppers, lowers, q, t, n, ctx)
            if abs(coeff) < ctx.eps:
                continue
            if table is None:
                table = degree_table(d, n, q, t, ctx)
            value = coeff * table[lam](z)
            total += value
            shell_mass += abs(value)
        abs_total += shell_mass
        monitor.push(shell_mass)
        if monitor.settled(abs(total) if total != 0 else abs_total):
            return SumResult(total, used, d + 1, note=f"{d + 1} degree shells, {used} partitions")
        if d >= ctx.mac_max_degree:
            raise ConvergenceError(
                f"Phi series not settled by degree {d} (last shell mass {mp.nstr(shell_mass, 5)})")
        d += 1


def psi_coefficient(parts: Sequence[int], uppers: Sequence, b, lowers: Sequence, q, t,
                    ctx: PrecisionContext):
    """
    Coefficient of P_lambda(z) in rPsi(s+1) without the constant prefactor

    The prefactor prod_i (b q^l_i t^(n-i);q)_inf / (q^(l_i+1) t^(n-i);q)_inf
    is merged with the first product of c'_lambda through
    (x;q)_k (x q^k;q)_inf = (x;q)_inf, leaving
    prod_i 1/(b t^(n-i);q)_{l_i} prod_{i<j} (q t^(j-i);q)_{l_i-l_j} / (q t^(j-i-1);q)_{l_i-l_j}.
    """
    kernel = get_kernel(ctx)
    n = len(parts)
    power = len(lowers) + 1 - len(uppers)
    value = ctx.mp.mpc(1)
    for i in range(n):
        value *= kernel.qpoch_inv(b * t ** (n - 1 - i), q, parts[i])
        for j in range(i + 1, n):
            diff = parts[i] - parts[j]
            value *= kernel.qpoch(q * t ** (j - i), q, diff) * kernel.qpoch_inv(q * t ** (j - i - 1), q, diff)
    value *= t ** sum(i * p for i, p in enumerate(parts))
    value *= extra_factor(parts, q, t, power)
    return value * _upper_lower(parts, uppers, lowers, q, t, ctx)


def psi_prefactor(b, q, t, n: int, ctx: PrecisionContext):
    """(q;q)_inf^n / (b;q)_inf^n prod_i (b t^(n-i);q)_inf / (q t^(n-i);q)_inf"""
    kernel = get_kernel(ctx)
    value = (kernel.qpoch_inf(q, q) / kernel.qpoch_inf(b, q)) ** n
    for i in range(n):
        value *= kernel.qpoch_inf(b * t ** (n - 1 - i), q) / kernel.qpoch_inf(q * t ** (n - 1 - i), q)
    return value


def psi_series(uppers: Sequence, b, lowers: Sequence, q, t, z: Sequence,
               ctx: PrecisionContext) -> SumResult:
    """
    Bilateral rPsi(s+1) with the distinguished lower parameter b

    lambda = mu + m (1, ..., 1) with l(mu) <= n - 1 and m in Z, so that
    P_lambda(z) = (z_1 ... z_n)^m P_mu(z). Shell s collects |mu| + |m| = s;
    m >= 0 feeds the growing monitor, m < 0 the shrinking one.

    Raises:
        ConvergenceError: if either direction is unsettled past ctx.mac_max_degree shells
    """
    mp = ctx.mp
    n = len(z)
    Z = mp.fprod(z)
    growing = ShellMonitor(ctx)
    shrinking = ShellMonitor(ctx)
    total = mp.mpc(0)
    abs_total = mp.mpf(0)
    used = 0
    s = 0
    while True:
        mass_up = mp.mpf(0)
        mass_down = mp.mpf(0)
        for size in range(s + 1):
            if n == 1 and size:
                break
            shift = s - size
            for m in ((shift, -shift) if shift else (0,)):
                for mu in partitions_of(size, n - 1):
                    parts = [mu[i] + m for i in range(n)]
                    used += 1
                    coeff = psi_coefficient(parts, uppers, b, lowers, q, t, ctx)
                    if abs(coeff) < ctx.eps:
                        continue
                    value = coeff * Z ** m * degree_table(size, n, q, t, ctx)[mu](z)
                    total += value
                    if m >= 0:
                        mass_up += abs(value)
                    else:
                        mass_down += abs(value)
        abs_total += mass_up + mass_down
        growing.push(mass_up)
        shrinking.push(mass_down)
        scale = abs(total) if total != 0 else abs_total
        if growing.settled(scale) and shrinking.settled(scale):
            result = total * psi_prefactor(b, q, t, n, ctx)
            return SumResult(result, used, s + 1, note=f"{s + 1} bilateral weight shells, {used} weights")
        if s >= ctx.mac_max_degree:
            raise ConvergenceError(
                f"Psi series not settled after {s} shells "
                f"(masses +{mp.nstr(mass_up, 5)} -{mp.nstr(mass_down, 5)})")
        s += 1


def cauchy_shell(d: int, z: Sequence, y: Sequence, q, t, ctx: PrecisionContext):
    """sum_{|lambda| = d} P_lambda(z) Q_lambda(y) with Q_lambda = b_lambda P_lambda"""
    n = len(z)
    table = degree_table(d, n, q, t, ctx)
    value = ctx.mp.mpc(0)
    for lam, P in table.items():
        value += P(z) * hooks(lam, n, q, t, ctx)[2] * P(y)
    return value


def cauchy_sum(z: Sequence, y: Sequence, q, t, ctx: PrecisionContext) -> SumResult:
    """
    sum_lambda P_lambda(z) Q_lambda(y) in degree shells

    Raises:
        ConvergenceError: if no settling happens up to degree ctx.mac_max_degree
    """
    mp = ctx.mp
    monitor = ShellMonitor(ctx)
    total = mp.mpc(0)
    used = 0
    d = 0
    while True:
        shell = cauchy_shell(d, z, y, q, t, ctx)
        used += len(partitions_of(d, len(z)))
        total += shell
        monitor.push(abs(shell))
        if monitor.settled(abs(total)):
            return SumResult(total, used, d + 1, note=f"{d + 1} degree shells, {used} partitions")
        if d >= ctx.mac_max_degree:
            raise ConvergenceError(f"Cauchy sum not settled by degree {d}")
        d += 1
