"""
Tests for the record catalog: sampling, registry and verification reports.
"""
import pytest

from src.catalog.bilateral import B2_AN_1PSI1_GUS, B5_CONSTRAINED
from src.catalog.records import (IdentityRecord, Family, ParamSet, ParamSpec, below,
                                 distinct_guard, lattice_guard)
from src.catalog.registry import (MANIFEST_SCHEMA, all_records, get_record, load_manifest_ids,
                                  manifest, match_records)
from src.catalog.sampler import sample_params
from src.catalog.terminating import S1_HOLMAN_PS, S2_FUNDAMENTAL, S17_GUSTAFSON_RAKHA
from src.catalog.univariate import U_JACKSON_87
from src.handlers.verification_handler import VerificationHandler
from src.macdonald.polynomials import cached_tables, degree_table
from src.utils.errors import DomainError, ManifestError, PoleError, SamplingError
from src.utils.numerics import rel_residual
from src.utils.qkernel import get_kernel


@pytest.fixture(scope='module')
def handler(ctx):
    return VerificationHandler(ctx)


# -- parameter sets -------------------------------------------------------------

def test_param_set_aggregates_follow_primitives(ctx):
    P = ParamSet(2, {'x': [ctx.mp.mpc(2), ctx.mp.mpc(3)], 'q': ctx.mp.mpf(0.5)}, {'N': 1}, ctx)
    assert P.X == 6
    P.values['x'][0] = ctx.mp.mpc(5)
    assert P.X == 15
    assert P['N'] == 1
    assert 'x' in P and 'y' not in P


def test_param_set_copy_is_independent(ctx):
    P = ParamSet(1, {'x': [ctx.mp.mpc(2)]}, {'N': 2}, ctx)
    Q = P.copy(orders={'N': 3})
    Q.values['x'][0] = ctx.mp.mpc(7)
    assert P['x'][0] == 2
    assert (P['N'], Q['N']) == (2, 3)


def test_derive_keeps_base(ctx):
    P = ParamSet(2, {'q': ctx.mp.mpf(0.3), 'a': [1, 2]}, {}, ctx)
    D = P.derive({'a': 5}, {'N': 1})
    assert D.n == 1
    assert D['q'] == P['q']
    assert D['a'] == 5


def test_guards():
    P = {'x': [1.0, 1.01]}
    assert not distinct_guard('x', 0.05)(_Stub(P))
    assert distinct_guard('x', 0.001)(_Stub(P))


class _Stub:
    def __init__(self, values):
        self.values = values

    def __getitem__(self, name):
        return self.values[name]


# -- sampling -----------------------------------------------------------------

def test_sampling_is_deterministic(ctx):
    first = sample_params(S2_FUNDAMENTAL, 2, 3, ctx)
    second = sample_params(S2_FUNDAMENTAL, 2, 3, ctx)
    other = sample_params(S2_FUNDAMENTAL, 2, 4, ctx)
    assert first['x'] == second['x'] and first['a'] == second['a'] and first['N'] == second['N']
    assert first['x'] != other['x']


def test_sampled_moduli_in_range(ctx):
    P = sample_params(S2_FUNDAMENTAL, 3, 0, ctx)
    assert all(0.15 <= abs(v) <= 0.85 for v in P['a'] + P['x'])
    assert 0 <= P['N'] <= 4


def test_sampling_solves_gustafson_rakha_constraint(ctx):
    P = sample_params(S17_GUSTAFSON_RAKHA, 2, 1, ctx)
    q, N = P['q'], P['N']
    left = P['a'] ** 2 * q ** (N + 1)
    right = P['b1'] * P['b2'] * P['b3'] * P['b4'] * P.X ** 2
    assert rel_residual(left, right, ctx) < 1e-19


def test_sampling_solves_jackson_balance(ctx):
    P = sample_params(U_JACKSON_87, 1, 2, ctx)
    q, N = P['q'], P['N']
    assert rel_residual(P['a'] ** 2 * q, P['b'] * P['c'] * P['d'] * P['e'] * q ** (-N), ctx) < 1e-19


def test_sampling_respects_annulus(ctx):
    P = sample_params(B2_AN_1PSI1_GUS, 2, 0, ctx)
    inner = abs(P.B * P['q'] ** (1 - P.n) / P.A)
    assert inner < abs(P['z']) < 1


def test_sampling_outside_dimension_policy(ctx):
    with pytest.raises(DomainError):
        sample_params(B2_AN_1PSI1_GUS, 3, 0, ctx)


def test_sampling_error_for_empty_domain(ctx):
    impossible = IdentityRecord(
        id='EMPTY',
        family=Family.SERIES_TERMINATING,
        anchor='none',
        lhs=lambda P: 0,
        rhs=lambda P: 0,
        params=(ParamSpec('z', lo=0.5, hi=0.8),),
        domain=(below('|z| < 0.1', lambda P: P['z'], 0.1),),
    )
    with pytest.raises(SamplingError):
        sample_params(impossible, 1, 0, ctx)


def test_lattice_guard_rejects_powers_of_q(ctx):
    q = ctx.mp.mpf(0.5)
    guard = lattice_guard(lambda P: [P['v']])
    assert not guard(_Stub({'v': q ** 3, 'q': q}))
    assert guard(_Stub({'v': ctx.mp.mpc(0.3, 0.2), 'q': q}))


# -- registry -------------------------------------------------------------------

def test_record_ids_unique_and_complete():
    ids = [r.id for r in all_records()]
    assert len(ids) == len(set(ids))
    for expected in ('U_SEARS', 'S18_AN_JACKSON_DET', 'B13_BNV_6PSI6_SW', 'T9_AN_WATSON_TERM',
                     'X4_65_FROM_FUNDAMENTAL', 'I_CT', 'M11_KANEKO', 'P_HOOKS'):
        assert expected in ids


def test_every_record_has_anchor_and_dims():
    for record in all_records():
        assert record.anchor
        assert record.dims
        assert record.tolerance_kind in ('series', 'bilateral', 'quadrature')


def test_reductions_point_at_registered_records():
    for record in all_records():
        if record.reduction is not None:
            template = get_record(record.reduction.template)
            assert template.id != record.id
            assert 1 in template.dims


def test_match_records():
    assert [r.id for r in match_records('B5*')] == ['B5_CONSTRAINED']
    ids = [r.id for r in match_records('S2_*,M5*')]
    assert ids == ['S2_FUNDAMENTAL', 'M5_QBINOMIAL']


def test_match_records_unknown_pattern():
    with pytest.raises(ManifestError):
        match_records('nonexistent')
    with pytest.raises(ManifestError):
        get_record('NOPE')


def test_manifest_document():
    document = manifest()
    assert document['schema'] == MANIFEST_SCHEMA
    entries = {entry['id']: entry for entry in document['records']}
    assert entries['S17_GUSTAFSON_RAKHA']['constraints'] == ['b4 = a^2 q^(N+1) / (b1 b2 b3 X^2)']
    assert entries['M8_EULER']['univariate_reduction'] == 'U_HEINE_EULER'
    assert entries['I_G2']['tolerance_regime'] == 'quadrature'
    assert load_manifest_ids(document) == [r.id for r in all_records()]


def test_manifest_schema_checked():
    with pytest.raises(ManifestError):
        load_manifest_ids({'schema': 'other/9', 'records': []})
    with pytest.raises(ManifestError):
        load_manifest_ids({'schema': MANIFEST_SCHEMA, 'records': [{'id': 'NOPE'}]})


# -- verification -----------------------------------------------------------------

def test_verify_fundamental_theorem_single_variable(ctx, handler):
    P = sample_params(S2_FUNDAMENTAL, 1, 0, ctx)
    report = handler.verify(S2_FUNDAMENTAL, P, seed=0)
    assert report['pass']
    assert report['residual'] < 1e-15
    assert report['terms_used'] >= 1
    assert report['tolerance_regime'] == 'series'
    assert all(isinstance(s, str) for s in report['params']['q'])
    assert isinstance(report['params']['N'], int)


def test_verify_holman_empty_sum(ctx, handler):
    mp = ctx.mp
    P = ParamSet(2, {'a': mp.mpc(0.3, 0.1), 'b': mp.mpc(0.2, -0.4), 'c': mp.mpc(0.7, 0.2),
                     'x': [mp.mpc(0.1, 0.3), mp.mpc(-0.4, 0.2)]}, {'N': (0, 0)}, ctx)
    report = handler.verify(S1_HOLMAN_PS, P)
    assert report['pass']
    assert report['residual'] < 1e-25
    assert handler.serialize_params(P)['N'] == [0, 0]


@pytest.mark.parametrize('record_id', ['U_QBIN_T', 'U_QBIN_NT', 'U_QPS', 'U_JACKSON_87',
                                       'U_RAMANUJAN_1PSI1', 'U_WATSON', 'U_HEINE_EULER', 'U_SEARS'])
def test_univariate_templates(handler, record_id):
    report = handler.verify_sampled(get_record(record_id), 1, 0)
    assert report['pass'], report


@pytest.mark.parametrize('record_id', ['S2_FUNDAMENTAL', 'S3_AN_65', 'S5_QBIN_RECT', 'S8_QBIN_SIMPLEX',
                                       'S11_AN_32_F', 'S15_AN_JACKSON', 'S17_GUSTAFSON_RAKHA'])
def test_terminating_sums_two_variables(handler, record_id):
    report = handler.verify_sampled(get_record(record_id), 2, 1)
    assert report['pass'], report


def test_verify_tags_failing_side(ctx, handler):
    def explode(P):
        raise PoleError("vanishing divisor")

    record = IdentityRecord(id='BROKEN', family=Family.SERIES_TERMINATING, anchor='none',
                            lhs=lambda P: 1, rhs=explode)
    with pytest.raises(PoleError) as info:
        handler.verify(record, ParamSet(1, {}, {}, ctx))
    assert info.value.side == 'rhs'
    assert info.value.record_id == 'BROKEN'


def test_run_task_isolates_errors(handler):
    report = handler.run_task(('verify', 'B2_AN_1PSI1_GUS', 3, 0))
    assert report['pass'] is False
    assert report['error_type'] == 'DomainError'


def test_verify_integral_rejects_series_record(ctx, handler):
    P = sample_params(S2_FUNDAMENTAL, 1, 0, ctx)
    with pytest.raises(DomainError):
        handler.verify_integral(S2_FUNDAMENTAL, P)
    with pytest.raises(DomainError):
        handler.verify_mac(S2_FUNDAMENTAL, P)


# -- reductions and cross-runs ---------------------------------------------------------

@pytest.mark.parametrize('record_id', ['S15_AN_JACKSON', 'S17_GUSTAFSON_RAKHA', 'T4_KAJIHARA_EULER'])
def test_reduce_check(handler, record_id):
    report = handler.reduce_check(get_record(record_id), 0)
    assert report['kind'] == 'reduce'
    assert report['pass'], report
    assert report['residuals']['agreement'] < 1e-8


def test_reduce_check_needs_reduction(handler):
    with pytest.raises(DomainError):
        handler.reduce_check(S2_FUNDAMENTAL, 0)


def test_n_independence_single_variable(handler):
    report = handler.check_n_independence(B5_CONSTRAINED, 1, 0)
    assert report['kind'] == 'independence'
    assert report['pass'], report


@pytest.mark.slow
def test_n_independence_two_variables(handler):
    report = handler.check_n_independence(B5_CONSTRAINED, 2, 0)
    assert report['pass'], report
    assert report['residuals']['spread'] < 1e-8


def test_n_independence_needs_scalar_order(handler):
    with pytest.raises(DomainError):
        handler.check_n_independence(S1_HOLMAN_PS, 1, 0)


def test_run_task_releases_caches(ctx, handler):
    kernel = get_kernel(ctx)
    degree_table(2, 2, ctx.mp.mpf(0.3), ctx.mp.mpf(0.6), ctx)
    assert cached_tables() > 0
    report = handler.run_task(('verify', 'U_QPS', 1, 0))
    assert report['pass'], report
    assert kernel.cached == 0
    assert cached_tables() == 0
