"""
Tests for lattice regions, shell-wise summation and the stopping rule.
"""
import pytest

from src.utils.errors import DomainError, PoleError
from src.utils.numerics import rel_residual
from src.utils.qkernel import qpoch_inf
from src.utils.sumengine import (LatticeRegion, ShellMonitor, SumResult, sum_finite, sum_infinite,
                                 sum_bilateral, unwrap)


def test_region_counts_match_points():
    for region in (LatticeRegion.rect([2, 3]), LatticeRegion.simplex(3, 4), LatticeRegion.hyperplane(3, 4)):
        points = list(region.points())
        assert len(points) == region.count()
        assert len(set(points)) == len(points)


def test_region_shapes():
    assert all(sum(k) == 4 for k in LatticeRegion.hyperplane(3, 4).points())
    assert all(sum(k) <= 4 for k in LatticeRegion.simplex(2, 4).points())
    assert list(LatticeRegion.rect([1, 1]).points()) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_invalid_regions():
    with pytest.raises(DomainError):
        LatticeRegion.rect([2, -1])
    with pytest.raises(DomainError):
        LatticeRegion.bilateral_parity(2, 3)
    with pytest.raises(DomainError):
        LatticeRegion.bilateral(2).count()


def test_empty_rect_sum_is_one_term(ctx):
    result = sum_finite(LatticeRegion.rect([0, 0]), lambda k: 1, ctx)
    assert result.value == 1
    assert result.terms == 1


def test_sum_finite_binomial(ctx):
    # sum over |k| = 5 in N^2 of 1 is 6
    assert sum_finite(LatticeRegion.hyperplane(2, 5), lambda k: 1, ctx).value == 6


def test_sum_finite_tags_pole_index(ctx):
    def term(k):
        if k == (1, 1):
            raise PoleError("vanishing divisor")
        return 1

    with pytest.raises(PoleError) as info:
        sum_finite(LatticeRegion.rect([2, 2]), term, ctx)
    assert info.value.index == (1, 1)


def test_sum_infinite_geometric(ctx):
    mp = ctx.mp
    z = mp.mpf(0.3)
    result = sum_infinite(2, lambda k: z ** (k[0] + k[1]), ctx)
    assert rel_residual(result.value, 1 / (1 - z) ** 2, ctx) < 1e-19
    assert result.shells > 4


def test_sum_infinite_terminating(ctx):
    result = sum_infinite(1, lambda k: 1 if k[0] < 3 else 0, ctx)
    assert result.value == 3


def test_sum_bilateral_jacobi_triple_product(ctx):
    mp = ctx.mp
    q, z = mp.mpf(0.3), mp.mpf(0.7)
    series = sum_bilateral(LatticeRegion.bilateral(1),
                           lambda k: (-1) ** (k[0] % 2) * q ** (k[0] * (k[0] - 1) // 2) * z ** k[0], ctx)
    product = qpoch_inf(q, q, ctx) * qpoch_inf(z, q, ctx) * qpoch_inf(q / z, q, ctx)
    assert rel_residual(series.value, product, ctx) < 1e-18


def test_sum_bilateral_zero_sum_slice(ctx):
    mp = ctx.mp
    # sum over k_1 + k_2 = 0 of w^|k_1| is (1 + w) / (1 - w)
    w = mp.mpf(0.4)
    result = sum_bilateral(LatticeRegion.zero_sum(2), lambda k: w ** abs(k[0]), ctx)
    assert rel_residual(result.value, (1 + w) / (1 - w), ctx) < 1e-19


def test_sum_bilateral_rejects_finite(ctx):
    with pytest.raises(DomainError):
        sum_bilateral(LatticeRegion.rect([1]), lambda k: 1, ctx)


def test_shell_monitor_needs_min_shells(ctx):
    monitor = ShellMonitor(ctx)
    for _ in range(3):
        monitor.push(0)
    assert not monitor.settled(1)
    monitor.push(0)
    assert monitor.settled(1)


def test_shell_monitor_waits_for_decay(ctx):
    monitor = ShellMonitor(ctx)
    for mass in (1, 1e-30, 1e-30, 1e-30, 1e-30):
        monitor.push(mass)
    # shell 4 is not below half of shell 2
    assert not monitor.settled(1)


def test_sum_result_arithmetic():
    a = SumResult(2, 3, 1, 'first')
    b = SumResult(5, 4, 2, 'second')
    combined = 2 * a + b
    assert combined.value == 9
    assert combined.terms == 7
    assert combined.note == 'first; second'
    assert unwrap(combined) == (9, 7)
    assert unwrap(1.5) == (1.5, 0)
