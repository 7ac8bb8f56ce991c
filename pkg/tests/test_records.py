"""
Every registered record at its smallest dimension, over a few seeds, and every
reduction onto its single-variable template.
"""
import pytest

from src.catalog.basic import phi
from src.catalog.records import ParamSet
from src.catalog.registry import all_records, get_record
from src.catalog.univariate import U_WATSON
from src.handlers.verification_handler import VerificationHandler
from src.utils.numerics import rel_residual
from src.utils.qkernel import qpoch_prod

SEEDS = (0, 1, 2)

# torus quadratures and inner products over the degree table
HEAVY = frozenset({'I_AW_AN', 'I_AW_CN', 'I_AW_GR', 'I_MK', 'I_G2', 'M1_NORM', 'P_ORTHOGONALITY'})


def _marks(record):
    return [pytest.mark.slow] if record.id in HEAVY else []


def _smallest_dimension_cases():
    for record in all_records():
        n = min(record.dims)
        for seed in SEEDS:
            yield pytest.param(record.id, n, seed, marks=_marks(record),
                               id=f'{record.id}-n{n}-s{seed}')


def _reduction_cases():
    for record in all_records():
        if record.reduction is None or 1 not in record.dims:
            continue
        for seed in SEEDS[:2]:
            yield pytest.param(record.id, seed, marks=_marks(record), id=f'{record.id}-s{seed}')


@pytest.fixture(scope='module')
def handler(ctx):
    return VerificationHandler(ctx)


@pytest.mark.parametrize('record_id,n,seed', list(_smallest_dimension_cases()))
def test_record_passes_at_smallest_dimension(handler, record_id, n, seed):
    report = handler.verify_sampled(get_record(record_id), n, seed)
    assert report['pass'], report


@pytest.mark.parametrize('record_id,seed', list(_reduction_cases()))
def test_record_reduces_to_template(handler, record_id, seed):
    report = handler.reduce_check(get_record(record_id), seed)
    assert report['pass'], report


# -- terminating series with a large argument -----------------------------------------

def test_terminating_phi_ignores_argument_size(ctx):
    mp = ctx.mp
    q, z, N = mp.mpf(0.4), mp.mpf(5), 3
    # 1phi0(q^-N;-;q,z) = (z q^-N;q)_N
    result = phi([q ** (-N)], [], q, z, ctx, order=N)
    assert result.terms == N + 1
    assert rel_residual(result.value, qpoch_prod([z * q ** (-N)], q, N, ctx), ctx) < 1e-18


def test_watson_with_argument_outside_unit_disc(ctx, handler):
    mp = ctx.mp
    P = ParamSet(1, {'a': mp.mpc(0.8), 'b': mp.mpc(0.2), 'c': mp.mpc(0.2), 'd': mp.mpc(0.2),
                     'e': mp.mpc(0.3), 'q': mp.mpf(0.4)}, {'N': 2}, ctx)
    z = P['a'] ** 2 * P['q'] ** 4 / (P['b'] * P['c'] * P['d'] * P['e'])
    assert abs(z) > 1
    report = handler.verify(U_WATSON, P)
    assert report['pass'], report
    assert report['terms_used'] <= 2 * (P['N'] + 1)


@pytest.mark.parametrize('seed', SEEDS)
def test_watson_sampled_points(handler, seed):
    report = handler.verify_sampled(U_WATSON, 1, seed)
    assert report['pass'], report


# -- A_n 3phi2 terminating sum ------------------------------------------------------------

@pytest.mark.parametrize('n', [1, 2])
@pytest.mark.parametrize('seed', SEEDS)
def test_an_32_terminating_sum(handler, n, seed):
    report = handler.verify_sampled(get_record('S12_AN_32_T'), n, seed)
    assert report['pass'], report


def test_an_32_terminating_sum_reduces_to_q_pfaff_saalschuetz(handler):
    report = handler.reduce_check(get_record('S12_AN_32_T'), 0)
    assert report['pass'], report
    assert report['template'] == 'U_QPS'
