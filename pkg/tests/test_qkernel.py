"""
Tests for shifted factorials, q-binomials and the product lemmas.
"""
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from src.utils.config import PrecisionContext
from src.utils.errors import ConvergenceError, DomainError, PoleError
from src.utils.numerics import rel_residual
from src.utils.qkernel import (get_kernel, poch, qpoch, qpoch_inf, qpoch_prod, qbinom, an_qbinom,
                               pfd_sides, prod_simplify_sides, infinite_product_depth)


def test_poch_three_cases(ctx):
    assert poch(3, 0, ctx) == 1
    assert poch(3, 4, ctx) == 3 * 4 * 5 * 6
    # (a)_{-k} = 1 / ((a-1)(a-2)...(a-k))
    assert abs(poch(5.5, -2, ctx) - 1 / (4.5 * 3.5)) < 1e-18


def test_poch_negative_pole(ctx):
    with pytest.raises(PoleError):
        poch(2, -3, ctx)


def test_qpoch_direct_product(ctx):
    a, q = ctx.mp.mpc(0.3, 0.2), ctx.mp.mpf(0.4)
    direct = (1 - a) * (1 - a * q) * (1 - a * q ** 2)
    assert rel_residual(qpoch(a, q, 3, ctx), direct, ctx) < 1e-18


def test_qpoch_negative_index(ctx):
    a, q = ctx.mp.mpc(0.7, -0.1), ctx.mp.mpf(0.3)
    # (a;q)_{-k} = 1 / (a q^{-k};q)_k
    assert rel_residual(qpoch(a, q, -3, ctx), 1 / qpoch(a * q ** -3, q, 3, ctx), ctx) < 1e-18


def test_qpoch_negative_index_pole(ctx):
    q = ctx.mp.mpf(0.5)
    with pytest.raises(PoleError):
        qpoch(q ** 2, q, -3, ctx)


def test_reciprocal_of_vanishing_factorial(ctx):
    q = ctx.mp.mpf(0.5)
    assert qpoch(q ** -2, q, 4, ctx) == 0
    with pytest.raises(PoleError):
        get_kernel(ctx).qpoch_inv(q ** -2, q, 4)


@settings(max_examples=30, deadline=None)
@given(m=st.integers(min_value=-6, max_value=6), k=st.integers(min_value=-6, max_value=6),
       re=st.floats(min_value=0.2, max_value=0.9), im=st.floats(min_value=0.05, max_value=0.5))
def test_qpoch_splitting(ctx, m, k, re, im):
    mp = ctx.mp
    a, q = mp.mpc(re, im), mp.mpf(0.35)
    left = qpoch(a, q, m + k, ctx)
    right = qpoch(a, q, m, ctx) * qpoch(a * q ** m, q, k, ctx)
    assert rel_residual(left, right, ctx) < 1e-15


def test_qpoch_inf_matches_mpmath(ctx):
    mp = ctx.mp
    a, q = mp.mpf(0.6), mp.mpf(0.45)
    assert rel_residual(qpoch_inf(a, q, ctx), mp.qp(a, q), ctx) < 1e-19


def test_qpoch_inf_requires_small_base(ctx):
    with pytest.raises(ConvergenceError):
        qpoch_inf(0.5, 1.2, ctx)


def test_finite_times_tail_is_infinite(ctx):
    mp = ctx.mp
    a, q = mp.mpc(0.4, 0.3), mp.mpc(0.2, 0.3)
    assert rel_residual(qpoch(a, q, 7, ctx) * qpoch_inf(a * q ** 7, q, ctx),
                        qpoch_inf(a, q, ctx), ctx) < 1e-18


def test_product_depth_grows_with_precision(ctx):
    wide = PrecisionContext(digits=60)
    assert infinite_product_depth(0.5, 0.5, wide) > infinite_product_depth(0.5, 0.5, ctx)


def test_qpoch_prod(ctx):
    q = ctx.mp.mpf(0.3)
    assert rel_residual(qpoch_prod([0.2, 0.5], q, 2, ctx),
                        qpoch(0.2, q, 2, ctx) * qpoch(0.5, q, 2, ctx), ctx) < 1e-19


def test_qbinom_values(ctx):
    q = ctx.mp.mpf(0.5)
    # [4 2]_q = 1 + q + 2q^2 + q^3 + q^4
    assert rel_residual(qbinom(4, 2, q, ctx), 1 + q + 2 * q ** 2 + q ** 3 + q ** 4, ctx) < 1e-19
    assert qbinom(6, 3, 1, ctx) == 20


def test_qbinom_domain(ctx):
    with pytest.raises(DomainError):
        qbinom(3, 4, 0.5, ctx)


def test_an_qbinom_one_variable(ctx):
    q = ctx.mp.mpf(0.3)
    assert rel_residual(an_qbinom([5], [2], [ctx.mp.mpc(0.7, 0.2)], q, ctx), qbinom(5, 2, q, ctx), ctx) < 1e-18


def test_pfd_sides(ctx):
    mp = ctx.mp
    x = [mp.mpc(0.3, 0.1), mp.mpc(-0.2, 0.4), mp.mpc(0.5, -0.3)]
    y = [mp.mpc(1.1, 0.2), mp.mpc(0.6, -0.5), mp.mpc(-0.4, 0.3)]
    left, right = pfd_sides(mp.mpc(0.7, 0.2), x, y, ctx)
    assert rel_residual(left, right, ctx) < 1e-17


def test_pfd_coincident_points(ctx):
    with pytest.raises(PoleError):
        pfd_sides(0.5, [0.3, 0.3], [1, 2], ctx)


def test_prod_simplify_sides(ctx):
    mp = ctx.mp
    x = [mp.mpc(0.9, 0.1), mp.mpc(0.4, -0.3)]
    left, right = prod_simplify_sides(x, [3, 2], [1, 1], mp.mpf(0.4), ctx)
    assert rel_residual(left, right, ctx) < 1e-17


def test_kernel_clear_forgets_ladders():
    own = PrecisionContext(digits=20)
    kernel = get_kernel(own)
    q = own.mp.mpf(0.5)
    before = qpoch(0.3, q, 5, own)
    kernel.qpow(q, 4)
    assert kernel.cached >= 2
    kernel.clear()
    assert kernel.cached == 0
    assert qpoch(0.3, q, 5, own) == before
