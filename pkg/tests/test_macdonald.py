"""
Tests for partitions, Macdonald polynomials, evaluations and the Phi/Psi series.
"""
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from src.catalog.registry import get_record
from src.handlers.verification_handler import VerificationHandler
from src.macdonald.evaluations import (arm_leg_hooks, eval_eps, eval_u, hooks, qt_poch, principal_point)
from src.macdonald.partitions import (Partition, dominance_leq, dominated_by, monomial_sym, partitions_of)
from src.macdonald.polynomials import eigenvalue, macdonald_operator, macdonald_P, schur_bialternant
from src.macdonald.series import phi_series, psi_series
from src.utils.errors import DomainError
from src.utils.numerics import rel_residual
from src.utils.qkernel import qpoch, qpoch_inf


@pytest.fixture(scope='module')
def handler(ctx):
    return VerificationHandler(ctx)


@pytest.fixture
def qt(ctx):
    return ctx.mp.mpf(0.3), ctx.mp.mpf(0.6)


# -- partitions ---------------------------------------------------------------------

def test_partition_normalises_trailing_zeros():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition((4, 2, 1)).n_weight() == 4


def test_partition_rejects_increasing_parts():
    with pytest.raises(DomainError):
        Partition((1, 2))


def test_dominance_examples():
    assert dominance_leq(Partition((2, 2)), Partition((3, 1)))
    assert not dominance_leq(Partition((3, 1)), Partition((2, 2)))
    assert not dominance_leq(Partition((2, 2, 2)), Partition((3, 1, 1, 1)))
    assert not dominance_leq(Partition((3, 1, 1, 1)), Partition((2, 2, 2)))
    with pytest.raises(DomainError):
        dominance_leq(Partition((2,)), Partition((2, 1)))


def test_dominated_by_respects_length():
    assert dominated_by(Partition((2, 1)), 2) == [Partition((2, 1))]
    assert dominated_by(Partition((2, 1)), 3) == [Partition((2, 1)), Partition((1, 1, 1))]


@settings(max_examples=40, deadline=None)
@given(d=st.integers(min_value=1, max_value=9))
def test_dominance_is_a_partial_order(d):
    shapes = partitions_of(d)
    top, bottom = Partition((d,)), Partition((1,) * d)
    for lam in shapes:
        assert dominance_leq(lam, lam)
        assert dominance_leq(bottom, lam) and dominance_leq(lam, top)
        for mu in shapes:
            if mu != lam and dominance_leq(mu, lam):
                assert not dominance_leq(lam, mu)


def test_partition_counts():
    assert len(partitions_of(6)) == 11
    assert len(partitions_of(6, 2)) == 4


def test_monomial_symmetric():
    assert monomial_sym(Partition((2, 1)), [1, 1, 1]) == 6
    assert monomial_sym(Partition((1, 1)), [2, 3, 5]) == 6 + 10 + 15
    assert monomial_sym(Partition((1, 1, 1)), [2, 3]) == 0


# -- polynomials --------------------------------------------------------------------

def test_two_row_coefficient(ctx, qt):
    q, t = qt
    P = macdonald_P((2,), 2, q, t, ctx)
    assert P.coefficient(Partition((2,))) == 1
    expected = (1 - t) * (1 + q) / (1 - q * t)
    assert rel_residual(P.coefficient(Partition((1, 1))), expected, ctx) < 1e-18


def test_eigenfunction_of_operator(ctx, qt):
    mp = ctx.mp
    q, t = qt
    P = macdonald_P((2, 1), 3, q, t, ctx)
    z = [mp.mpc(0.3, 0.4), mp.mpc(-0.5, 0.2), mp.mpc(0.7, -0.1)]
    left = macdonald_operator(P, z, q, t)
    right = eigenvalue(P.lam, 3, q, t) * P(z)
    assert rel_residual(left, right, ctx) < 1e-16


def test_schur_limit(ctx):
    mp = ctx.mp
    q = mp.mpf(0.4)
    z = [mp.mpc(0.3, 0.2), mp.mpc(0.6, -0.4), mp.mpc(-0.2, 0.5)]
    lam = Partition((2, 1))
    P = macdonald_P(lam, 3, q, q, ctx)
    assert rel_residual(P(z), schur_bialternant(lam, z, ctx), ctx) < 1e-16


def test_too_many_parts(ctx, qt):
    with pytest.raises(DomainError):
        macdonald_P((1, 1, 1), 2, *qt, ctx)


def test_homogeneous_of_degree(ctx, qt):
    mp = ctx.mp
    q, t = qt
    P = macdonald_P((3, 1), 2, q, t, ctx)
    z = [mp.mpc(0.3, 0.1), mp.mpc(0.5, -0.2)]
    s = mp.mpc(0.7, 0.4)
    assert rel_residual(P([s * zi for zi in z]), s ** 4 * P(z), ctx) < 1e-17


# -- evaluations --------------------------------------------------------------------

def test_hooks_one_box(ctx, qt):
    q, t = qt
    c, c_prime, b = hooks(Partition((1,)), 1, q, t, ctx)
    assert rel_residual(c, 1 - t, ctx) < 1e-19
    assert rel_residual(c_prime, 1 - q, ctx) < 1e-19
    assert rel_residual(b, (1 - t) / (1 - q), ctx) < 1e-19


@pytest.mark.parametrize('parts,n', [((2, 1), 3), ((3, 1), 2), ((2, 2, 1), 4), ((4,), 1)])
def test_hooks_match_arm_leg_products(ctx, qt, parts, n):
    q, t = qt
    lam = Partition(parts)
    c, c_prime, _ = hooks(lam, n, q, t, ctx)
    arm_c, arm_c_prime = arm_leg_hooks(lam, q, t, ctx)
    assert rel_residual(c, arm_c, ctx) < 1e-18
    assert rel_residual(c_prime, arm_c_prime, ctx) < 1e-18


def test_qt_poch_single_row(ctx, qt):
    mp = ctx.mp
    q, t = qt
    a = mp.mpc(0.4, 0.2)
    assert rel_residual(qt_poch(a, (3,), q, t, ctx), qpoch(a, q, 3, ctx), ctx) < 1e-19
    two_rows = qpoch(a, q, 2, ctx) * qpoch(a / t, q, 1, ctx)
    assert rel_residual(qt_poch(a, (2, 1), q, t, ctx), two_rows, ctx) < 1e-19


def test_eval_u_principal_point(ctx, qt):
    q, t = qt
    P = macdonald_P((1,), 2, q, t, ctx)
    assert rel_residual(eval_u(Partition(), P, ctx), 1 + t, ctx) < 1e-19
    assert eval_u(Partition((1, 1, 1)), P, ctx) == 0


def test_principal_point():
    assert principal_point(2, 3, 3) == [2, 6, 18]


def test_eps_on_first_power_sum(ctx, qt):
    mp = ctx.mp
    q, t = qt
    a = mp.mpc(0.2, 0.5)
    P = macdonald_P((1,), 3, q, t, ctx)
    assert rel_residual(eval_eps(a, t, P, ctx), (1 - a) / (1 - t), ctx) < 1e-19


def test_eps_at_power_of_t_is_principal_evaluation(ctx, qt):
    q, t = qt
    P = macdonald_P((2, 1), 3, q, t, ctx)
    # epsilon_{t^n;t} evaluates at (1, t, ..., t^(n-1))
    assert rel_residual(eval_eps(t ** 3, t, P, ctx), P(principal_point(1, 3, t)), ctx) < 1e-16


# -- series ---------------------------------------------------------------------------

def test_phi_series_at_origin(ctx, qt):
    mp = ctx.mp
    result = phi_series([mp.mpf(0.3)], [mp.mpf(0.5)], *qt, [0, 0], ctx)
    assert result.value == 1


def test_phi_series_single_variable_is_q_binomial(ctx, qt):
    mp = ctx.mp
    q, t = qt
    a, z = mp.mpc(0.4, 0.2), mp.mpf(0.3)
    result = phi_series([a], [], q, t, [z], ctx)
    expected = qpoch_inf(a * z, q, ctx) / qpoch_inf(z, q, ctx)
    assert rel_residual(result.value, expected, ctx) < 1e-18


def test_psi_series_single_variable_is_ramanujan(ctx, qt):
    mp = ctx.mp
    q, t = qt
    a, b, z = mp.mpf(0.8), mp.mpf(0.02), mp.mpf(0.3)
    result = psi_series([a], b, [], q, t, [z], ctx)
    top = [q, b / a, a * z, q / (a * z)]
    bottom = [b, q / a, z, b / (a * z)]
    expected = mp.fprod(qpoch_inf(v, q, ctx) for v in top) / mp.fprod(qpoch_inf(v, q, ctx) for v in bottom)
    assert rel_residual(result.value, expected, ctx) < 1e-15


def test_psi_series_at_b_equal_q_is_unilateral(ctx, qt):
    mp = ctx.mp
    q, t = qt
    a = mp.mpc(0.5, 0.1)
    z = [mp.mpc(0.15, 0.05), mp.mpc(-0.1, 0.12)]
    bilateral = psi_series([a], q, [], q, t, z, ctx)
    unilateral = phi_series([a], [], q, t, z, ctx)
    assert rel_residual(bilateral.value, unilateral.value, ctx) < 1e-16


# -- records --------------------------------------------------------------------------

@pytest.mark.parametrize('record_id,n', [
    ('M5_QBINOMIAL', 1), ('M5_QBINOMIAL', 2), ('M2_CAUCHY', 1), ('M4_SPECIALIZATION', 2),
    ('P_EPS_PRINCIPAL', 2), ('P_HOMOGENEITY', 2), ('P_STABILITY', 2), ('P_SCHUR', 3),
    ('P_HOOKS', 3), ('M3_EVAL_SYMMETRY', 2), ('M11_KANEKO', 1),
])
def test_macdonald_records(handler, record_id, n):
    report = handler.verify_sampled(get_record(record_id), n, 0)
    assert report['pass'], report


@pytest.mark.slow
@pytest.mark.parametrize('record_id,n', [
    ('M2_CAUCHY', 2), ('M6_HEINE', 2), ('M7_QGAUSS', 2), ('M8_EULER', 2), ('M9_QPS', 2),
    ('M10_SEARS', 2), ('M1_NORM', 2), ('P_ORTHOGONALITY', 2), ('P_CAUCHY_DEGREE', 2),
])
def test_macdonald_records_two_variables(handler, record_id, n):
    report = handler.verify_sampled(get_record(record_id), n, 0)
    assert report['pass'], report


@pytest.mark.parametrize('record_id', ['M5_QBINOMIAL', 'M8_EULER', 'M11_KANEKO'])
def test_macdonald_reductions(handler, record_id):
    report = handler.reduce_check(get_record(record_id), 0)
    assert report['pass'], report


@pytest.mark.parametrize('seed', [0, 1])
def test_kaneko_bilateral_sum_two_variables(handler, seed):
    report = handler.verify_sampled(get_record('M11_KANEKO'), 2, seed)
    assert report['pass'], report
