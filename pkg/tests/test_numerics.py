"""
Tests for the precision context, Gamma and residual helpers.
"""
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from src.utils.config import PrecisionContext, load_settings
from src.utils.errors import DomainError, PoleError
from src.utils.numerics import cdiv, gamma, rel_residual, to_decimal


def test_context_tolerances(ctx):
    assert ctx.verify_tol == pytest.approx(1e-5)
    assert ctx.trunc_tol == pytest.approx(1e-25)
    assert ctx.bilateral_tol == pytest.approx(1e-8)
    assert ctx.mp.dps == 30


def test_context_rejects_low_precision():
    with pytest.raises(DomainError):
        PrecisionContext(digits=10)


def test_contexts_do_not_share_precision():
    low = PrecisionContext(digits=20)
    high = PrecisionContext(digits=60)
    assert low.mp.dps != high.mp.dps
    assert PrecisionContext.from_settings(high.settings()).mp.dps == high.mp.dps


def test_tolerances_follow_digits():
    wider = PrecisionContext(digits=40)
    assert wider.verify_tol == pytest.approx(1e-25)


def test_load_settings_precedence(monkeypatch, tmp_path):
    config = tmp_path / 'verify.json'
    config.write_text('{"seeds": 7, "n_max": 3}')
    monkeypatch.setenv('VERIFY_DIGITS', '40')
    monkeypatch.setenv('VERIFY_JOBS', 'many')
    monkeypatch.setenv('VERIFY_CONFIG_PATH', str(config))
    settings = load_settings({'n_max': 1, 'seeds': None})
    assert settings['digits'] == 40
    assert settings['jobs'] == 1
    assert settings['seeds'] == 7
    assert settings['n_max'] == 1


def test_gamma_integers_and_half(ctx):
    mp = ctx.mp
    assert abs(gamma(5, ctx) - 24) < 1e-18
    assert abs(gamma(0.5, ctx) - mp.sqrt(mp.pi)) < 1e-18


def test_gamma_pole(ctx):
    with pytest.raises(PoleError):
        gamma(-3, ctx)


@settings(max_examples=25, deadline=None)
@given(re=st.floats(min_value=-4.5, max_value=6.0), im=st.floats(min_value=0.1, max_value=3.0))
def test_gamma_recurrence(ctx, re, im):
    z = ctx.mp.mpc(re, im)
    assert rel_residual(gamma(z + 1, ctx), z * gamma(z, ctx), ctx) < 1e-15


@settings(max_examples=25, deadline=None)
@given(re=st.floats(min_value=0.05, max_value=0.95), im=st.floats(min_value=-2.0, max_value=2.0))
def test_gamma_reflection(ctx, re, im):
    mp = ctx.mp
    z = mp.mpc(re, im)
    assert rel_residual(gamma(z, ctx) * gamma(1 - z, ctx), mp.pi / mp.sin(mp.pi * z), ctx) < 1e-15


def test_gamma_matches_mpmath(ctx):
    mp = ctx.mp
    z = mp.mpc(2.25, -1.5)
    assert rel_residual(gamma(z, ctx), mp.gamma(z), ctx) < 1e-18


def test_rel_residual(ctx):
    assert rel_residual(0, 0, ctx) == 0
    assert rel_residual(1, 1, ctx) == 0
    assert rel_residual(1, -1, ctx) == 1


def test_cdiv_pole(ctx):
    assert cdiv(6, 3, ctx) == 2
    with pytest.raises(PoleError):
        cdiv(1, ctx.mp.mpf(10) ** -40, ctx)


def test_decimal_strings_restore_value(ctx):
    value = ctx.mp.mpc(1, 3) / 7
    pair = to_decimal(value, ctx)
    assert all(isinstance(s, str) for s in pair)
    restored = ctx.mp.mpc(ctx.mp.mpf(pair[0]), ctx.mp.mpf(pair[1]))
    assert abs(restored - value) < 1e-19

