#!/usr/bin/env python
import logging
import itertools
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Callable, Iterator, List, Tuple

from .config import PrecisionContext
from .errors import BudgetError, ConvergenceError, PoleError, DomainError

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]
Term = Callable[[MultiIndex], object]


class RegionKind(Enum):
    RECT = 'rect'
    SIMPLEX = 'simplex'
    HYPERPLANE = 'hyperplane'
    BILATERAL = 'bilateral'
    BILATERAL_PARITY = 'bilateral_parity'
    BILATERAL_ZERO_SUM = 'bilateral_zero_sum'


@dataclass(frozen=True)
class LatticeRegion:
    """
    Range of a summation index k in Z^dim

    ``total`` is N for SIMPLEX/HYPERPLANE and the fixed coordinate sum for
    BILATERAL_ZERO_SUM (zero unless a record sums over |k| = N in Z^n).
    """
    kind: RegionKind
    dim: int
    bounds: Tuple[int, ...] = ()
    total: int = 0
    parity: int = 0

    @classmethod
    def rect(cls, N) -> "LatticeRegion":
        N = tuple(int(v) for v in N)
        if any(v < 0 for v in N):
            raise DomainError(f"RECT region requires N_i >= 0, got {N}")
        return cls(RegionKind.RECT, len(N), bounds=N)

    @classmethod
    def simplex(cls, dim: int, N: int) -> "LatticeRegion":
        return cls(RegionKind.SIMPLEX, dim, total=int(N))

    @classmethod
    def hyperplane(cls, dim: int, N: int) -> "LatticeRegion":
        return cls(RegionKind.HYPERPLANE, dim, total=int(N))

    @classmethod
    def bilateral(cls, dim: int) -> "LatticeRegion":
        return cls(RegionKind.BILATERAL, dim)

    @classmethod
    def bilateral_parity(cls, dim: int, sigma: int) -> "LatticeRegion":
        if sigma not in (0, 1):
            raise DomainError(f"parity must be 0 or 1, got {sigma}")
        return cls(RegionKind.BILATERAL_PARITY, dim, parity=sigma)

    @classmethod
    def zero_sum(cls, dim: int, total: int = 0) -> "LatticeRegion":
        return cls(RegionKind.BILATERAL_ZERO_SUM, dim, total=int(total))

    @property
    def is_finite(self) -> bool:
        return self.kind in (RegionKind.RECT, RegionKind.SIMPLEX, RegionKind.HYPERPLANE)

    def count(self) -> int:
        """Number of lattice points of a finite region"""
        if self.kind == RegionKind.RECT:
            result = 1
            for v in self.bounds:
                result *= v + 1
            return result
        if self.kind == RegionKind.SIMPLEX:
            return comb(self.total + self.dim, self.dim)
        if self.kind == RegionKind.HYPERPLANE:
            if self.total < 0:
                return 0
            return comb(self.total + self.dim - 1, self.dim - 1)
        raise DomainError(f"{self.kind.value} region is infinite")

    def points(self) -> Iterator[MultiIndex]:
        """Lattice points of a finite region in lexicographic order"""
        if self.kind == RegionKind.RECT:
            yield from itertools.product(*(range(v + 1) for v in self.bounds))
        elif self.kind == RegionKind.SIMPLEX:
            yield from _bounded_compositions(self.dim, self.total, exact=False)
        elif self.kind == RegionKind.HYPERPLANE:
            yield from _bounded_compositions(self.dim, self.total, exact=True)
        else:
            raise DomainError(f"{self.kind.value} region is infinite")


def _bounded_compositions(dim: int, total: int, exact: bool) -> Iterator[MultiIndex]:
    if dim == 0:
        if total == 0 or not exact:
            yield ()
        return
    if dim == 1:
        if exact:
            if total >= 0:
                yield (total,)
        else:
            for k in range(total + 1):
                yield (k,)
        return
    for k in range(total + 1):
        for rest in _bounded_compositions(dim - 1, total - k, exact):
            yield (k,) + rest


@dataclass
class SumResult:
    """
    Value of a lattice sum together with its diagnostics

    Scaling by a number or adding two results keeps the term count, so a
    displayed side like prefactor * sum_1 + prefactor * sum_2 reports the
    total number of evaluated terms.
    """
    value: object
    terms: int
    shells: int = 0
    note: str = ''

    def _combine(self, other, value) -> "SumResult":
        if isinstance(other, SumResult):
            return SumResult(value, self.terms + other.terms,
                             max(self.shells, other.shells), '; '.join(filter(None, (self.note, other.note))))
        return SumResult(value, self.terms, self.shells, self.note)

    def __add__(self, other):
        return self._combine(other, self.value + _value(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, self.value - _value(other))

    def __rsub__(self, other):
        return self._combine(other, _value(other) - self.value)

    def __mul__(self, other):
        return self._combine(other, self.value * _value(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._combine(other, self.value / _value(other))

    def __neg__(self):
        return SumResult(-self.value, self.terms, self.shells, self.note)


def _value(x):
    return x.value if isinstance(x, SumResult) else x


def unwrap(x) -> Tuple[object, int]:
    """(value, terms) of an evaluator result (lattice sums and quadratures alike)"""
    if hasattr(x, 'value') and hasattr(x, 'terms'):
        return x.value, x.terms
    return x, 0


def sum_finite(region: LatticeRegion, term: Term, ctx: PrecisionContext) -> SumResult:
    """
    Exact finite sum in lexicographic order

    Raises:
        BudgetError: if the region has more than ctx.max_terms points
        PoleError: from the term, with the offending index attached
    """
    if not region.is_finite:
        raise DomainError(f"sum_finite needs a finite region, got {region.kind.value}")
    count = region.count()
    if count > ctx.max_terms:
        raise BudgetError(f"{count} lattice points exceed max_terms={ctx.max_terms}")

    total = ctx.mp.mpc(0)
    for k in region.points():
        total += _evaluate(term, k)
    return SumResult(total, count, note=f"finite {region.kind.value} ({count} points)")


def _evaluate(term: Term, k: MultiIndex):
    try:
        return term(k)
    except PoleError as e:
        if e.index is None:
            e.index = k
        raise


class ShellMonitor:
    """
    Stopping rule for shell-wise summation

    Stops once the last three shells each have absolute mass below
    trunc_tol * scale and shell m carries at most half the mass of shell m // 2.
    """

    def __init__(self, ctx: PrecisionContext):
        self.ctx = ctx
        self.mass: List = []

    def push(self, mass):
        self.mass.append(mass)

    def settled(self, scale) -> bool:
        m = len(self.mass) - 1
        if m + 1 < max(self.ctx.min_shells, 3):
            return False
        bound = self.ctx.trunc_tol * scale
        if any(v > bound for v in self.mass[-3:]):
            return False
        current = self.mass[m]
        return current == 0 or current <= self.mass[m // 2] / 2


def _unilateral_shell(n: int, m: int) -> Iterator[MultiIndex]:
    """{k in [0, m]^n : max k_i = m}, ordered by the first index attaining m"""
    if m == 0:
        yield (0,) * n
        return
    for i in range(n):
        heads = itertools.product(range(m), repeat=i)
        for head in heads:
            for tail in itertools.product(range(m + 1), repeat=n - i - 1):
                yield head + (m,) + tail


def _box_shell(f: int, m: int) -> Iterator[MultiIndex]:
    """{v in [-m, m]^f : max |v_i| = m}"""
    if f == 0:
        if m == 0:
            yield ()
        return
    if m == 0:
        yield (0,) * f
        return
    for i in range(f):
        for head in itertools.product(range(-(m - 1), m), repeat=i):
            for edge in (m, -m):
                for tail in itertools.product(range(-m, m + 1), repeat=f - i - 1):
                    yield head + (edge,) + tail


def _zero_sum_shell(dim: int, m: int) -> Iterator[MultiIndex]:
    """{k in Z^dim : sum k = 0, max |k_i| = m}"""
    f = dim - 1
    if f == 0:
        if m == 0:
            yield (0,)
        return
    for free in _box_shell(f, m):
        last = -sum(free)
        if abs(last) <= m:
            yield free + (last,)
    if m == 0:
        return
    # points whose only coordinate of modulus m is the dependent one
    for head in itertools.product(range(-(m - 1), m), repeat=f - 1):
        for edge in (m, -m):
            v = -edge - sum(head)
            if abs(v) <= m - 1:
                yield head + (v, edge)


def sum_infinite(n: int, term: Term, ctx: PrecisionContext) -> SumResult:
    """
    Sum over k in N^n by expanding shells max k_i = m

    Raises:
        ConvergenceError: when the stopping rule is not met within max_terms
    """
    mp = ctx.mp
    monitor = ShellMonitor(ctx)
    total = mp.mpc(0)
    abs_total = mp.mpf(0)
    used = 0
    m = 0
    while True:
        shell_sum = mp.mpc(0)
        shell_mass = mp.mpf(0)
        for k in _unilateral_shell(n, m):
            value = _evaluate(term, k)
            shell_sum += value
            shell_mass += abs(value)
            used += 1
        total += shell_sum
        abs_total += shell_mass
        monitor.push(shell_mass)
        if m % 50 == 0 and m:
            logger.debug(f"shell {m}: mass {mp.nstr(shell_mass, 5)}, {used} terms")
        if monitor.settled(abs(total) if total != 0 else abs_total):
            return SumResult(total, used, m + 1, note=f"{m + 1} shells, {used} terms")
        if used > ctx.max_terms:
            raise ConvergenceError(
                f"no shell decay after {used} terms (last shell mass {mp.nstr(shell_mass, 5)})")
        m += 1


def _bilateral_shell(region: LatticeRegion, m: int) -> Iterator[MultiIndex]:
    if region.kind == RegionKind.BILATERAL_ZERO_SUM:
        offset = region.total
        for k in _zero_sum_shell(region.dim, m):
            yield (k[0] + offset,) + k[1:] if offset else k
        return
    for k in _box_shell(region.dim, m):
        if region.kind == RegionKind.BILATERAL_PARITY and sum(k) % 2 != region.parity:
            continue
        yield k


def sum_bilateral(region: LatticeRegion, term: Term, ctx: PrecisionContext) -> SumResult:
    """
    Sum over a bilateral region by expanding symmetric boxes

    Points of shell m that reach +m in some coordinate form the growing
    direction; the remaining ones (reaching -m) the shrinking direction.
    Each direction has its own stopping monitor.

    Raises:
        ConvergenceError: when either direction fails to settle within max_terms
    """
    if region.is_finite:
        raise DomainError(f"sum_bilateral needs a bilateral region, got {region.kind.value}")
    mp = ctx.mp
    growing = ShellMonitor(ctx)
    shrinking = ShellMonitor(ctx)
    total = mp.mpc(0)
    abs_total = mp.mpf(0)
    used = 0
    m = 0
    offset = region.total if region.kind == RegionKind.BILATERAL_ZERO_SUM else 0
    while True:
        shell_sum = mp.mpc(0)
        mass_up = mp.mpf(0)
        mass_down = mp.mpf(0)
        for k in _bilateral_shell(region, m):
            value = _evaluate(term, k)
            shell_sum += value
            centred = (k[0] - offset,) + k[1:] if offset else k
            if max(centred) == m:
                mass_up += abs(value)
            else:
                mass_down += abs(value)
            used += 1
        total += shell_sum
        abs_total += mass_up + mass_down
        growing.push(mass_up)
        shrinking.push(mass_down)
        if m % 50 == 0 and m:
            logger.debug(f"bilateral shell {m}: mass +{mp.nstr(mass_up, 5)} -{mp.nstr(mass_down, 5)}")
        scale = abs(total) if total != 0 else abs_total
        if growing.settled(scale) and shrinking.settled(scale):
            return SumResult(total, used, m + 1, note=f"{m + 1} bilateral shells, {used} terms")
        if used > ctx.max_terms:
            raise ConvergenceError(
                f"bilateral sum not settled after {used} terms "
                f"(shell masses +{mp.nstr(mass_up, 5)} -{mp.nstr(mass_down, 5)})")
        m += 1
