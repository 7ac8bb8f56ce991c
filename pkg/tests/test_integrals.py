"""
Tests for the quadrature rules, the exact constant term and the integral records.
"""
import pytest
import sympy as sp

from src.catalog.registry import get_record
from src.handlers.verification_handler import VerificationHandler
from src.integrals.constant_term import (constant_term_poly, closed_form_poly, constant_term_check,
                                         exact_agreement, q_symbol)
from src.integrals.quadrature import (TorusIntegrand, torus_integrate, gauss_jacobi, selberg_integrate,
                                      selberg_product, mellin_barnes_product)
from src.utils.errors import DomainError
from src.utils.numerics import rel_residual


@pytest.fixture(scope='module')
def handler(ctx):
    return VerificationHandler(ctx)


# -- constant term ---------------------------------------------------------------

def test_constant_term_two_variables():
    q = q_symbol
    assert constant_term_poly(2, 1) == sp.Poly(1 + q, q, domain='ZZ')
    # (q;q)_4 / (q;q)_2^2 is the Gaussian binomial [4 2]_q
    assert constant_term_poly(2, 2) == sp.Poly(1 + q + 2 * q ** 2 + q ** 3 + q ** 4, q, domain='ZZ')


@pytest.mark.parametrize('n,k', [(2, 1), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_constant_term_matches_closed_form_exactly(n, k):
    assert exact_agreement(n, k)


def test_closed_form_three_variables():
    q = q_symbol
    # degrees 2, 3 at k = 1: [2 1]_q [3 1]_q
    assert closed_form_poly(3, 1) == sp.Poly(sp.expand((1 + q) * (1 + q + q ** 2)), q, domain='ZZ')


def test_constant_term_numeric(ctx):
    left, right = constant_term_check(3, 2, ctx.mp.mpc(0.3, 0.4), ctx)
    assert rel_residual(left, right, ctx) < 1e-19


def test_constant_term_needs_two_variables():
    with pytest.raises(DomainError):
        constant_term_poly(1, 2)


# -- quadrature rules --------------------------------------------------------------

def test_torus_trapezoid_constant_term(ctx):
    mp = ctx.mp
    a = mp.mpf(0.3)
    # mean of 1 / ((1 - a z)(1 - a / z)) over the circle is 1 / (1 - a^2)
    result = torus_integrate(TorusIntegrand(1, lambda z: 1 / ((1 - a * z[0]) * (1 - a / z[0]))), ctx)
    assert rel_residual(result.value, 1 / (1 - a ** 2), ctx) < 1e-19
    assert result.grid >= 64
    assert result.est_error < ctx.quad_target


def test_torus_constrained_coordinate(ctx):
    mp = ctx.mp
    a = mp.mpf(0.2)
    # z_3 = 1 / (z_1 z_2): the mean of 1 / (1 - a z_3) is 1
    result = torus_integrate(TorusIntegrand(2, lambda z: 1 / (1 - a * z[2]), constrained=True), ctx)
    assert rel_residual(result.value, 1, ctx) < 1e-18


def test_gauss_jacobi_mass_and_moment(ctx):
    mp = ctx.mp
    nodes, weights = gauss_jacobi(6, 2, 1, ctx)
    assert rel_residual(mp.fsum(weights), mp.beta(3, 2), ctx) < 1e-18
    # the integral of s (1 - s)^2 s is B(3, 3)
    moment = mp.fsum(w * s for s, w in zip(nodes, weights))
    assert rel_residual(moment, mp.beta(3, 3), ctx) < 1e-18
    assert all(0 < s < 1 for s in nodes)


def test_gauss_jacobi_rejects_nonintegrable_weight(ctx):
    with pytest.raises(DomainError):
        gauss_jacobi(4, -1, 0, ctx)


def test_selberg_one_variable_is_beta(ctx):
    result = selberg_integrate(1, 2, 3, 0, ctx)
    assert rel_residual(result.value, ctx.mp.mpf(1) / 12, ctx) < 1e-18
    assert rel_residual(selberg_product(1, 2, 3, 0, ctx), ctx.mp.mpf(1) / 12, ctx) < 1e-18


def test_selberg_two_variables(ctx):
    mp = ctx.mp
    alpha = mp.mpf(1.5)
    result = selberg_integrate(2, alpha, 2, 1, ctx)
    assert rel_residual(result.value, selberg_product(2, alpha, 2, 1, ctx), ctx) < 1e-15


def test_selberg_rejects_complex_exponent(ctx):
    with pytest.raises(DomainError):
        selberg_integrate(2, ctx.mp.mpc(1, 1), 2, 1, ctx)


def test_selberg_needs_integer_beta_beyond_one_variable(ctx):
    with pytest.raises(DomainError):
        selberg_integrate(2, 1, 1.5, 1, ctx)
    with pytest.raises(DomainError):
        selberg_integrate(2, 1, 2, 0.3, ctx)
    result = selberg_integrate(1, 2, 1.5, 0, ctx)
    assert rel_residual(result.value, selberg_product(1, 2, 1.5, 0, ctx), ctx) < 1e-15


def test_mellin_barnes_product_one_variable(ctx):
    mp = ctx.mp
    a = [mp.mpf(1.2), mp.mpf(1.1)]
    b = [mp.mpf(1.3), mp.mpf(1.0)]
    # 2! Gamma(2.3) Gamma(2.3) Gamma(2.5) Gamma(2.2) Gamma(2.4) Gamma(2.1) / Gamma(4.6)
    expected = 2 * mp.gamma(2.3) ** 2 * mp.gamma(2.5) * mp.gamma(2.2) * mp.gamma(2.4) * mp.gamma(2.1) / mp.gamma(4.6)
    assert rel_residual(mellin_barnes_product(1, a, b, ctx), expected, ctx) < 1e-18


# -- integral records ----------------------------------------------------------------

def test_askey_wilson_integral(handler):
    report = handler.verify_sampled(get_record('I_AW'), 1, 0)
    assert report['pass'], report
    assert report['tolerance_regime'] == 'quadrature'
    assert report['truncation_note'].startswith('lhs: grid')


@pytest.mark.parametrize('n', [2, 3, 4])
def test_constant_term_record(handler, n):
    report = handler.verify_sampled(get_record('I_CT'), n, 0)
    assert report['pass'], report
    assert report['residual'] < 1e-15
    assert 'integer closed form agrees' in report['truncation_note']


@pytest.mark.parametrize('n', [1, 2])
def test_selberg_record(handler, n):
    report = handler.verify_sampled(get_record('I_SELBERG'), n, 1)
    assert report['pass'], report


def test_mellin_barnes_record_single_variable(handler):
    report = handler.verify_sampled(get_record('I_MB'), 1, 0)
    assert report['pass'], report


@pytest.mark.slow
@pytest.mark.parametrize('record_id,n', [('I_AW_AN', 1), ('I_AW_AN', 2), ('I_AW_CN', 1), ('I_MK', 1),
                                         ('I_G2', 2), ('I_AW_GR', 1)])
def test_torus_records(handler, record_id, n):
    report = handler.verify_sampled(get_record(record_id), n, 0)
    assert report['pass'], report


@pytest.mark.slow
def test_askey_wilson_reductions(handler):
    for record_id in ('I_AW_AN', 'I_AW_CN', 'I_MK'):
        report = handler.reduce_check(get_record(record_id), 0)
        assert report['pass'], report
