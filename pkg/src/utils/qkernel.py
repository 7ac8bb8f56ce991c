#!/usr/bin/env python
import logging
import threading
from typing import Dict, List, Sequence, Tuple

from .config import PrecisionContext
from .errors import PoleError, ConvergenceError, DomainError
from .numerics import cdiv

logger = logging.getLogger(__name__)


class QLadder:
    """
    Prefix products of (a;q)_k in both index directions

    ``pos[k]`` holds (1-a)(1-aq)...(1-aq^{k-1}) and ``neg[m]`` holds
    (1-aq^{-1})...(1-aq^{-m}); both grow lazily on demand.
    """

    def __init__(self, a, q, ctx: PrecisionContext):
        mp = ctx.mp
        self.a = a
        self.q = q
        self.ctx = ctx
        self.pos = [mp.mpc(1)]
        self.neg = [mp.mpc(1)]
        self._pos_power = mp.mpc(a)
        self._neg_power = mp.mpc(a) / q
        # index of the first near-vanishing factor in each direction
        self.pos_zero = None
        self.neg_zero = None
        self._lock = threading.Lock()

    def _extend(self, k: int):
        eps = self.ctx.eps
        with self._lock:
            if k > 0:
                while len(self.pos) <= k:
                    factor = 1 - self._pos_power
                    if self.pos_zero is None and abs(factor) < eps * max(1, abs(self._pos_power)):
                        self.pos_zero = len(self.pos)
                    self.pos.append(self.pos[-1] * factor)
                    self._pos_power *= self.q
            else:
                while len(self.neg) <= -k:
                    factor = 1 - self._neg_power
                    if self.neg_zero is None and abs(factor) < eps * max(1, abs(self._neg_power)):
                        self.neg_zero = len(self.neg)
                    self.neg.append(self.neg[-1] * factor)
                    self._neg_power /= self.q

    def get(self, k: int):
        """(a;q)_k"""
        if k >= 0:
            if k >= len(self.pos):
                self._extend(k)
            return self.pos[k]
        m = -k
        if m >= len(self.neg):
            self._extend(k)
        if self.neg_zero is not None and self.neg_zero <= m:
            raise PoleError(f"(a;q)_{k} has a vanishing factor", index=(k,))
        return 1 / self.neg[m]

    def inv(self, k: int):
        """1/(a;q)_k"""
        if k >= 0:
            if k >= len(self.pos):
                self._extend(k)
            if self.pos_zero is not None and self.pos_zero <= k:
                raise PoleError(f"1/(a;q)_{k} has a vanishing factor", index=(k,))
            return 1 / self.pos[k]
        m = -k
        if m >= len(self.neg):
            self._extend(k)
        return self.neg[m]

    __getitem__ = get


class QKernel:
    """
    Memoized q-shifted factorials for one precision context

    Ladders are keyed by the exact (a, q) values; caches are guarded by a
    lock so concurrent readers see consistent lists. Entries live until
    clear(); the verification handler clears them after every task.
    """

    def __init__(self, ctx: PrecisionContext):
        self.ctx = ctx
        self.mp = ctx.mp
        self._ladders: Dict[Tuple, QLadder] = {}
        self._poch: Dict = {}
        self._powers: Dict = {}
        self._lock = threading.Lock()

    def clear(self):
        """Drop every memoized ladder and power table"""
        with self._lock:
            self._ladders.clear()
            self._poch.clear()
            self._powers.clear()

    @property
    def cached(self) -> int:
        return len(self._ladders) + len(self._poch) + len(self._powers)

    def ladder(self, a, q) -> QLadder:
        key = (self.mp.mpc(a), self.mp.mpc(q))
        ladder = self._ladders.get(key)
        if ladder is None:
            with self._lock:
                ladder = self._ladders.get(key)
                if ladder is None:
                    ladder = QLadder(key[0], key[1], self.ctx)
                    self._ladders[key] = ladder
        return ladder

    def qpow(self, q, k: int):
        """q^k from a memoized ladder of nonnegative and negative powers"""
        key = self.mp.mpc(q)
        entry = self._powers.get(key)
        if entry is None:
            with self._lock:
                entry = self._powers.setdefault(key, ([self.mp.mpc(1)], [self.mp.mpc(1)]))
        up, down = entry
        if k >= 0:
            while len(up) <= k:
                up.append(up[-1] * key)
            return up[k]
        while len(down) <= -k:
            down.append(down[-1] / key)
        return down[-k]

    def qpoch(self, a, q, k: int):
        return self.ladder(a, q).get(k)

    def qpoch_inv(self, a, q, k: int):
        return self.ladder(a, q).inv(k)

    def poch(self, a, k: int):
        """(a)_k by the three-case definition"""
        mp = self.mp
        a = mp.mpc(a)
        key = a
        entry = self._poch.get(key)
        if entry is None:
            with self._lock:
                entry = self._poch.setdefault(key, ([mp.mpc(1)], [mp.mpc(1)]))
        up, down = entry
        if k >= 0:
            while len(up) <= k:
                up.append(up[-1] * (a + len(up) - 1))
            return up[k]
        nearest = int(mp.nint(a.real))
        if 1 <= nearest <= -k and abs(a - nearest) < self.ctx.eps * max(1, abs(a)):
            raise PoleError(f"({mp.nstr(a, 8)})_{k} has a vanishing factor", index=(k,))
        while len(down) <= -k:
            down.append(down[-1] * (a - len(down)))
        return 1 / down[-k]

    def qpoch_inf(self, a, q):
        """
        (a;q)_infinity truncated by the tail bound

        The product stops at the first M with
        2|a||q|^M / (1-|q|) < trunc_tol and |a||q|^M < 1/2, which bounds
        sum_{i>=M} |a||q|^i / (1 - |a||q|^i) and therefore the relative error.
        """
        mp = self.mp
        aq = abs(q)
        if aq >= 1:
            raise ConvergenceError(f"(a;q)_inf requires |q|<1, got |q|={mp.nstr(aq, 8)}")
        a = mp.mpc(a)
        if a == 0:
            return mp.mpc(1)
        M = infinite_product_depth(abs(a), aq, self.ctx)
        result = mp.mpc(1)
        for i in range(M):
            result *= 1 - a * self.qpow(q, i)
        return result


def infinite_product_depth(abs_a, abs_q, ctx: PrecisionContext) -> int:
    """Smallest truncation depth meeting the tail bound of qpoch_inf"""
    mp = ctx.mp
    if abs_q == 0:
        return 1
    target = mp.mpf(ctx.trunc_tol) * (1 - abs_q) / 2
    M = 0
    if abs_a > target:
        M = int(mp.ceil(mp.log(target / abs_a) / mp.log(abs_q)))
    M = max(M, 0)
    while abs_a * abs_q ** M >= mp.mpf(0.5):
        M += 1
    return M + 1


_kernels: Dict[int, Tuple[PrecisionContext, QKernel]] = {}
_kernels_lock = threading.Lock()


def get_kernel(ctx: PrecisionContext) -> QKernel:
    """Get the kernel bound to a precision context"""
    key = id(ctx.mp)
    with _kernels_lock:
        entry = _kernels.get(key)
        if entry is None or entry[0] is not ctx:
            entry = (ctx, QKernel(ctx))
            _kernels[key] = entry
    return entry[1]


def poch(a, k: int, ctx: PrecisionContext):
    """Shifted factorial (a)_k for any integer k"""
    return get_kernel(ctx).poch(a, k)


def qpoch(a, q, k: int, ctx: PrecisionContext):
    """q-shifted factorial (a;q)_k for any integer k"""
    return get_kernel(ctx).qpoch(a, q, k)


def qpoch_inf(a, q, ctx: PrecisionContext):
    """(a;q)_infinity"""
    return get_kernel(ctx).qpoch_inf(a, q)


def qpoch_prod(args: Sequence, q, k, ctx: PrecisionContext):
    """(a_1,...,a_r;q)_k with k an integer or None for infinity"""
    kernel = get_kernel(ctx)
    result = ctx.mp.mpc(1)
    for a in args:
        result *= kernel.qpoch_inf(a, q) if k is None else kernel.qpoch(a, q, k)
    return result


def qbinom(N: int, k: int, q, ctx: PrecisionContext):
    """
    q-binomial coefficient [N k]_q

    Raises:
        DomainError: unless 0 <= k <= N
    """
    if k < 0 or k > N:
        raise DomainError(f"q-binomial requires 0 <= k <= N, got N={N}, k={k}")
    mp = ctx.mp
    if q == 1:
        return mp.mpc(mp.binomial(N, k))
    ladder = get_kernel(ctx).ladder(q, q)
    return ladder.get(N) * ladder.inv(k) * ladder.inv(N - k)


def an_qbinom(N: Sequence[int], k: Sequence[int], x: Sequence, q, ctx: PrecisionContext):
    """
    A_n q-binomial coefficient

    prod_{i,j} (q x_i/x_j;q)_{N_i} / ((q x_i/x_j;q)_{k_i} (q^{1+k_i-k_j} x_i/x_j;q)_{N_i-k_i})
    """
    n = len(x)
    for i in range(n):
        if k[i] < 0 or k[i] > N[i]:
            raise DomainError(f"A_n q-binomial requires 0 <= k_i <= N_i at i={i}")
    kernel = get_kernel(ctx)
    result = ctx.mp.mpc(1)
    for i in range(n):
        for j in range(n):
            ratio = x[i] / x[j]
            base = kernel.ladder(q * ratio, q)
            result *= base.get(N[i]) * base.inv(k[i])
            result *= kernel.qpoch_inv(kernel.qpow(q, 1 + k[i] - k[j]) * ratio, q, N[i] - k[i])
    return result


def pfd_sides(t, x: Sequence, y: Sequence, ctx: PrecisionContext) -> Tuple:
    """
    Both sides of the partial fraction decomposition

    Left: prod_i (1 - t x_i y_i)/(1 - t x_i).
    Right: y_1...y_n + sum_k prod_i (1 - y_i x_i/x_k) / ((1 - t x_k) prod_{i != k} (1 - x_i/x_k)).
    """
    mp = ctx.mp
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(x[i] - x[j]) < ctx.eps * max(abs(x[i]), 1):
                raise PoleError("coincident x values", index=(i, j))

    left = mp.mpc(1)
    for i in range(n):
        if abs(1 - t * x[i]) < ctx.eps:
            raise PoleError("pole at t*x_i = 1", index=(i,))
        left *= (1 - t * x[i] * y[i]) / (1 - t * x[i])

    right = mp.fprod(y)
    for k in range(n):
        numer = mp.fprod([1 - y[i] * x[i] / x[k] for i in range(n)])
        denom = (1 - t * x[k]) * mp.fprod([1 - x[i] / x[k] for i in range(n) if i != k])
        right += cdiv(numer, denom, ctx, scale=max(abs(numer), 1))
    return left, right


def prod_simplify_sides(x: Sequence, k: Sequence[int], m: Sequence[int], q,
                        ctx: PrecisionContext) -> Tuple:
    """
    Both sides of the product-simplification lemma

    The double product over i, j with index shift k_i - m_i requires
    k_i >= m_i; the right side is (-1)^{|k|-|m|} q^{-binom(|k|-|m|+1, 2)}.
    """
    mp = ctx.mp
    kernel = get_kernel(ctx)
    n = len(x)
    left = mp.mpc(1)
    for i in range(n):
        for j in range(i + 1, n):
            numer = x[i] * kernel.qpow(q, k[i]) - x[j] * kernel.qpow(q, k[j])
            denom = x[i] * kernel.qpow(q, m[i]) - x[j] * kernel.qpow(q, m[j])
            if abs(denom) < ctx.eps * max(abs(x[i]), abs(x[j])):
                raise PoleError("coincident shifted x values", index=(i, j))
            left *= numer / denom
    for i in range(n):
        for j in range(n):
            ratio = x[i] / x[j]
            d = k[i] - m[i]
            left *= kernel.qpoch(kernel.qpow(q, m[i] - k[j]) * ratio, q, d)
            left *= kernel.qpoch_inv(kernel.qpow(q, 1 + m[i] - m[j]) * ratio, q, d)

    s = sum(k) - sum(m)
    right = (-1) ** (s % 2) * kernel.qpow(q, -((s + 1) * s // 2))
    return left, mp.mpc(right)
