#!/usr/bin/env python
"""
Macdonald polynomial records

Series identities with Macdonald polynomial argument, the norm and
Cauchy evaluations, and property checks of the polynomial construction.
Partition-valued parameters are drawn as indices into SHAPES.
"""
import logging
from math import factorial

from ..catalog.records import (IdentityRecord, Family, ParamSpec, OrderSpec, DomainCondition,
                               Constraint, Reduction, below, lattice_guard)
from ..integrals.quadrature import TorusIntegrand, torus_integrate
from ..utils.sumengine import unwrap
from .evaluations import arm_leg_hooks, eval_eps, eval_u, hooks, principal_point, qt_poch
from .partitions import Partition, partitions_up_to
from .polynomials import macdonald_P, schur_bialternant
from .series import cauchy_shell, cauchy_sum, phi_series, psi_series

logger = logging.getLogger(__name__)

SHAPES = tuple(partitions_up_to(4))
# SHAPES[:7] are the partitions of size <= 3
SHAPES_UP_TO_3 = 6

Q = ParamSpec('q', lo=0.1, hi=0.4)
T = ParamSpec('t', lo=0.5, hi=0.8)
# moduli bound of the series arguments; keeps the degree cutoff well inside mac_max_degree
RATE = 0.15


def _shape(P, name='shape') -> Partition:
    return SHAPES[P[name]]


def _fits(*names):
    return lambda P: all(_shape(P, name).length <= P.n for name in names)


def _shape_order(name='shape', hi=len(SHAPES) - 1):
    return OrderSpec(name, lo=0, hi=hi)


def _inf(P, values):
    kernel = P.kernel
    q = P['q']
    result = P.mp.mpc(1)
    for v in values:
        result *= kernel.qpoch_inf(v, q)
    return result


def _fin(P, values, N):
    kernel = P.kernel
    q = P['q']
    result = P.mp.mpc(1)
    for v in values:
        result *= kernel.qpoch(v, q, N)
    return result


def _qn(P, k):
    return P.kernel.qpow(P['q'], k)


def _P(P, lam, n=None, q=None, t=None):
    return macdonald_P(lam, P.n if n is None else n, P['q'] if q is None else q,
                       P['t'] if t is None else t, P.ctx)


def _delta(P, z):
    """prod_{i != j} (z_i/z_j;q)_inf / (t z_i/z_j;q)_inf"""
    t = P['t']
    n = len(z)
    ratios = [z[i] / z[j] for i in range(n) for j in range(n) if i != j]
    return _inf(P, ratios) / _inf(P, [t * r for r in ratios])


def inner_product(P, lam: Partition, mu: Partition):
    """
    <P_lam, P_mu> = (1/n!) torus mean of P_lam conj(P_mu) Delta

    Only equal sizes are integrated: the integrand is then invariant under
    z -> c z on the torus, so z_n is fixed to 1. Different sizes are
    orthogonal by homogeneity.
    """
    if lam.size != mu.size:
        return P.mp.mpc(0)
    n = P.n
    left, right = _P(P, lam), _P(P, mu)

    def f(w):
        z = list(w) + [P.mp.mpc(1)]
        return left(z) * P.mp.conj(right(z)) * _delta(P, z)

    result = torus_integrate(TorusIntegrand(n - 1, f), P.ctx)
    return result / factorial(n)


# -- squared norm -----------------------------------------------------------

def _norm_rhs(P):
    lam, q, t, n = _shape(P), P['q'], P['t'], P.n
    top, bottom = [], []
    for i in range(n):
        for j in range(i + 1, n):
            d = lam[i] - lam[j]
            top += [q ** d * t ** (j - i), q ** (d + 1) * t ** (j - i)]
            bottom += [q ** d * t ** (j - i + 1), q ** (d + 1) * t ** (j - i - 1)]
    return _inf(P, top) / _inf(P, bottom)


M1_NORM = IdentityRecord(
    id='M1_NORM',
    family=Family.MACDONALD,
    anchor='Eq. (snev), "The squared norm evaluation of"',
    lhs=lambda P: inner_product(P, _shape(P), _shape(P)),
    rhs=_norm_rhs,
    dims=(2,),
    params=(ParamSpec('q', lo=0.1, hi=0.4, real=True), ParamSpec('t', lo=0.2, hi=0.5, real=True)),
    orders=(_shape_order(hi=SHAPES_UP_TO_3),),
    guards=(_fits('shape'),),
    notes=('q and t are real so that conj(P_lambda(z)) = P_lambda(1/z) on the torus',),
    regime='quadrature',
)


# -- Cauchy identity --------------------------------------------------------

def _cauchy_rhs(P, s=1):
    z, y, t = P['z'], P['y'], P['t']
    pairs = [s * zi * yj for zi in z for yj in y]
    return _inf(P, [t * v for v in pairs]) / _inf(P, pairs)


M2_CAUCHY = IdentityRecord(
    id='M2_CAUCHY',
    family=Family.MACDONALD,
    anchor='Eq. (cauchy), "the Cauchy identity"',
    lhs=lambda P: cauchy_sum(P['z'], P['y'], P['q'], P['t'], P.ctx),
    rhs=_cauchy_rhs,
    dims=(1, 2),
    params=(ParamSpec('z', 'n', lo=0.1, hi=0.3), ParamSpec('y', 'n', lo=0.1, hi=0.3), Q, T),
    domain=(below('|z_i y_j| < 1', lambda P: [zi * yj for zi in P['z'] for yj in P['y']]),),
    notes=('Q_lambda = b_lambda P_lambda with b_lambda = c_lambda / c\'_lambda',),
    terminating=False,
)


def _cauchy_degree_rhs(P):
    """Coefficient of s^d in the product at (s z, y), extracted on the unit circle"""
    d = P['d']

    def f(w):
        s = w[0]
        return _cauchy_rhs(P, s) * s ** (-d)

    return torus_integrate(TorusIntegrand(1, f), P.ctx)


P_CAUCHY_DEGREE = IdentityRecord(
    id='P_CAUCHY_DEGREE',
    family=Family.MACDONALD,
    anchor='Eq. (cauchy), "the Cauchy identity"',
    lhs=lambda P: cauchy_shell(P['d'], P['z'], P['y'], P['q'], P['t'], P.ctx),
    rhs=_cauchy_degree_rhs,
    dims=(1, 2),
    params=(ParamSpec('z', 'n', lo=0.2, hi=0.5), ParamSpec('y', 'n', lo=0.2, hi=0.5), Q, T),
    orders=(OrderSpec('d', lo=0, hi=6),),
    notes=('degree-d component of both sides; the product side by a trapezoid rule in the '
           'scaling variable',),
    regime='quadrature',
)


# -- evaluation symmetry ----------------------------------------------------

def _u_pair(P, first, second):
    return eval_u(Partition(), _P(P, first), P.ctx) * eval_u(first, _P(P, second), P.ctx)


M3_EVAL_SYMMETRY = IdentityRecord(
    id='M3_EVAL_SYMMETRY',
    family=Family.MACDONALD,
    anchor='Eq. (evsym), "evaluation symmetry"',
    lhs=lambda P: _u_pair(P, _shape(P, 'lam'), _shape(P, 'mu')),
    rhs=lambda P: _u_pair(P, _shape(P, 'mu'), _shape(P, 'lam')),
    dims=(2, 3),
    params=(Q, T),
    orders=(_shape_order('lam'), _shape_order('mu')),
    guards=(_fits('lam', 'mu'),),
)


# -- epsilon specialization --------------------------------------------------

def _eps_rhs(P):
    lam, a, q, t = _shape(P), P['a'], P['q'], P['t']
    c = hooks(lam, P.n, q, t, P.ctx)[0]
    return t ** lam.n_weight() * qt_poch(a, lam.parts, q, t, P.ctx) / c


M4_SPECIALIZATION = IdentityRecord(
    id='M4_SPECIALIZATION',
    family=Family.MACDONALD,
    anchor='Eq. (specmac), "The following evaluations are useful"',
    lhs=lambda P: eval_eps(P['a'], P['t'], _P(P, _shape(P)), P.ctx),
    rhs=_eps_rhs,
    dims=(1, 2, 3),
    params=(ParamSpec('a'), Q, T),
    orders=(_shape_order(),),
    guards=(_fits('shape'),),
)


P_EPS_PRINCIPAL = IdentityRecord(
    id='P_EPS_PRINCIPAL',
    family=Family.MACDONALD,
    anchor='epsilon specialization, "for any $f\\in\\Lambda_{n}$"',
    lhs=lambda P: eval_eps(P['t'] ** P.n, P['t'], _P(P, _shape(P)), P.ctx),
    rhs=lambda P: _P(P, _shape(P))(principal_point(1, P.n, P['t'])),
    dims=(1, 2, 3),
    params=(Q, T),
    orders=(_shape_order(),),
    guards=(_fits('shape'),),
)


# -- q-binomial theorem -------------------------------------------------------

M5_QBINOMIAL = IdentityRecord(
    id='M5_QBINOMIAL',
    family=Family.MACDONALD,
    anchor='Eq. (qbinmac), "q-binomial theorem for Macdonald polynomials"',
    lhs=lambda P: phi_series([P['a']], [], P['q'], P['t'], P['z'], P.ctx),
    rhs=lambda P: _inf(P, [P['a'] * zi for zi in P['z']]) / _inf(P, P['z']),
    dims=(1, 2),
    params=(ParamSpec('a'), ParamSpec('z', 'n', lo=0.02, hi=RATE), Q, T),
    domain=(below('|z_i| < 1', lambda P: list(P['z'])),),
    reduction=Reduction('U_QBIN_NT', lambda P: P.derive({'a': P['a'], 'z': P['z'][0]})),
    terminating=False,
)


# -- Heine transformation ---------------------------------------------------

def _heine_rhs(P):
    a, b, c, x, q, t, n = P['a'], P['b'], P['c'], P['x'], P['q'], P['t'], P.n
    prefactor = (_inf(P, [b * t ** (-i) for i in range(n)] + [a * x * t ** (n - 1 - i) for i in range(n)])
                 / _inf(P, [c * t ** (-i) for i in range(n)] + [x * t ** (n - 1 - i) for i in range(n)]))
    w = b * t ** (1 - n)
    return prefactor * phi_series([c / b, x * t ** (n - 1)], [a * x * t ** (n - 1)], q, t,
                                  principal_point(w, n, t), P.ctx)


M6_HEINE = IdentityRecord(
    id='M6_HEINE',
    family=Family.MACDONALD,
    anchor='Eq. (heine), "multivariate generalization of the Heine transformation"',
    lhs=lambda P: phi_series([P['a'], P['b']], [P['c']], P['q'], P['t'],
                             principal_point(P['x'], P.n, P['t']), P.ctx),
    rhs=_heine_rhs,
    dims=(1, 2),
    params=(ParamSpec('a'), ParamSpec('b', lo=0.02, hi=RATE / 2), ParamSpec('c'),
            ParamSpec('x', lo=0.02, hi=RATE), Q, T),
    domain=(below('|x| < 1 and |b t^{1-n}| < 1', lambda P: [P['x'], P['b'] * P['t'] ** (1 - P.n)]),),
    window=(below('|b t^{1-n}| <= RATE', lambda P: P['b'] * P['t'] ** (1 - P.n), RATE),),
    guards=(lattice_guard(lambda P: [P['c'] * P['t'] ** (-i) for i in range(P.n)]
                          + [P['a'] * P['x'] * P['t'] ** (P.n - 1 - i) for i in range(P.n)]),),
    terminating=False,
)


# -- q-Gauss summation --------------------------------------------------------

def _gauss_argument(P):
    return P['c'] * P['t'] ** (1 - P.n) / (P['a'] * P['b'])


def _gauss_rhs(P):
    a, b, c, t, n = P['a'], P['b'], P['c'], P['t'], P.n
    ct = [c * t ** (-i) for i in range(n)]
    return (_inf(P, [v / b for v in ct] + [v / a for v in ct])
            / _inf(P, [v / (a * b) for v in ct] + ct))


M7_QGAUSS = IdentityRecord(
    id='M7_QGAUSS',
    family=Family.MACDONALD,
    anchor='Eq. (qgauss), "multivariate extension of the $q$-Gau{\\ss} summation"',
    lhs=lambda P: phi_series([P['a'], P['b']], [P['c']], P['q'], P['t'],
                             principal_point(_gauss_argument(P), P.n, P['t']), P.ctx),
    rhs=_gauss_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', lo=0.6, hi=0.95), ParamSpec('b', lo=0.6, hi=0.95),
            ParamSpec('c', lo=0.01, hi=0.08), Q, T),
    domain=(below('|c t^{1-n} / (a b)| < 1', _gauss_argument),),
    window=(below('|c t^{1-n} / (a b)| <= RATE', _gauss_argument, RATE),),
    guards=(lattice_guard(lambda P: [P['c'] * P['t'] ** (-i) for i in range(P.n)]),),
    terminating=False,
)


# -- Euler transformation ---------------------------------------------------

def _euler_w(P):
    return P['a'] * P['b'] / P['c']


def _euler_rhs(P):
    a, b, c, z, q, t = P['a'], P['b'], P['c'], P['z'], P['q'], P['t']
    w = _euler_w(P)
    return (_inf(P, [w * zi for zi in z]) / _inf(P, z)
            * phi_series([c / a, c / b], [c], q, t, [w * zi for zi in z], P.ctx))


M8_EULER = IdentityRecord(
    id='M8_EULER',
    family=Family.MACDONALD,
    anchor='Eq. (qeuler), "multivariate extension of the Euler transformation"',
    lhs=lambda P: phi_series([P['a'], P['b']], [P['c']], P['q'], P['t'], P['z'], P.ctx),
    rhs=_euler_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', hi=0.6), ParamSpec('b', hi=0.6), ParamSpec('c', lo=0.5, hi=0.9),
            ParamSpec('z', 'n', lo=0.02, hi=RATE), Q, T),
    domain=(below('|z_i| < 1 and |a b z_i / c| < 1',
                  lambda P: list(P['z']) + [_euler_w(P) * zi for zi in P['z']]),),
    guards=(lattice_guard(lambda P: [P['c'] * P['t'] ** (-i) for i in range(P.n)]),),
    reduction=Reduction('U_HEINE_EULER', lambda P: P.derive(
        {'a': P['a'], 'b': P['b'], 'c': P['c'], 'z': P['z'][0]})),
    terminating=False,
)


# -- q-Pfaff-Saalschuetz ------------------------------------------------------

def _qps_lower(P):
    a, b, c, t, N = P['a'], P['b'], P['c'], P['t'], P['N']
    return a * b * _qn(P, 1 - N) * t ** (P.n - 1) / c


def _qps_lhs(P):
    a, b, c, q, t, N = P['a'], P['b'], P['c'], P['q'], P['t'], P['N']
    return phi_series([a, b, _qn(P, -N)], [c, _qps_lower(P)], q, t,
                      principal_point(q, P.n, t), P.ctx)


def _qps_rhs(P):
    a, b, c, t, N = P['a'], P['b'], P['c'], P['t'], P['N']
    ct = [c * t ** (-i) for i in range(P.n)]
    return (_fin(P, [v / a for v in ct] + [v / b for v in ct], N)
            / _fin(P, ct + [v / (a * b) for v in ct], N))


def _t_shifts(P, values):
    return [v * P['t'] ** (-i) for v in values for i in range(P.n)]


M9_QPS = IdentityRecord(
    id='M9_QPS',
    family=Family.MACDONALD,
    anchor='Eq. (qps), "specialized Macdonald polynomial argument is"',
    lhs=_qps_lhs,
    rhs=_qps_rhs,
    dims=(1, 2),
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), Q, T),
    orders=(OrderSpec('N', lo=0, hi=3),),
    guards=(lattice_guard(lambda P: _t_shifts(P, [P['c'], _qps_lower(P), P['c'] / (P['a'] * P['b'])])),),
    reduction=Reduction('U_QPS', lambda P: P.derive(
        {'a': P['a'], 'b': P['b'], 'c': P['c']}, orders={'N': P['N']})),
)


# -- Sears transformation ---------------------------------------------------

def _sears_f(P):
    a, b, c, d, e, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'N'))
    return a * b * c * _qn(P, 1 - N) / (d * e)


def _sears_lhs(P):
    a, b, c, d, e, f, q, t, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'q', 't', 'N'))
    n = P.n
    return phi_series([a, b, c, _qn(P, -N)], [d, e, f * t ** (n - 1)], q, t,
                      principal_point(q, n, t), P.ctx)


def _sears_rhs(P):
    a, b, c, d, e, f, q, t, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'q', 't', 'N'))
    n = P.n
    shift = a * _qn(P, 1 - N)
    prefactor = (a ** (n * N)
                 * _fin(P, [e * t ** (-i) / a for i in range(n)] + [f * t ** (n - 1 - i) / a for i in range(n)], N)
                 / _fin(P, [e * t ** (-i) for i in range(n)] + [f * t ** (n - 1 - i) for i in range(n)], N))
    return prefactor * phi_series([a, d / b, d / c, _qn(P, -N)],
                                  [d, shift * t ** (n - 1) / e, shift / f], q, t,
                                  principal_point(q, n, t), P.ctx)


M10_SEARS = IdentityRecord(
    id='M10_SEARS',
    family=Family.MACDONALD,
    anchor='Eq. (sears), "multivariate Sears\' transformation"',
    lhs=_sears_lhs,
    rhs=_sears_rhs,
    dims=(1, 2),
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), ParamSpec('e'), Q, T),
    orders=(OrderSpec('N', lo=0, hi=3),),
    constraints=(Constraint('f', 'a b c q^(1-N) / (d e)', _sears_f),),
    guards=(lattice_guard(lambda P: _t_shifts(P, [P['d'], P['e'], P['f'] * P['t'] ** (P.n - 1),
                                                   P['e'] / P['a'], P['f'] / P['a']])
                          + _t_shifts(P, [P['a'] * _qn(P, 1 - P['N']) * P['t'] ** (P.n - 1) / P['e'],
                                          P['a'] * _qn(P, 1 - P['N']) / P['f']])),),
    reduction=Reduction('U_SEARS', lambda P: P.derive(
        {k: P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f')}, orders={'N': P['N']})),
)


# -- Kaneko's 1Psi1 -----------------------------------------------------------

def _kaneko_rhs(P):
    a, b, z, q, t, n = P['a'], P['b'], P['z'], P['q'], P['t'], P.n
    top, bottom = [], []
    for i in range(n):
        top += [q, b * t ** (n - 1 - i) / a]
        bottom += [b, q * t ** (n - 1 - i) / a]
    for zi in z:
        top += [a * zi, q / (a * zi)]
        bottom += [zi, b / (a * zi)]
    return _inf(P, top) / _inf(P, bottom)


def _annulus(P):
    inner = abs(P['b'] / P['a'])
    return [(inner, abs(zi)) for zi in P['z']] + [(abs(zi), 1) for zi in P['z']]


def _kaneko_rate(P):
    return list(P['z']) + [P['b'] / (P['a'] * zi) for zi in P['z']]


M11_KANEKO = IdentityRecord(
    id='M11_KANEKO',
    family=Family.MACDONALD,
    anchor='Eq. (kan1psi1), "Kaneko\'s $_1\\psi_1$ summation for Macdonald polynomials"',
    lhs=lambda P: psi_series([P['a']], P['b'], [], P['q'], P['t'], P['z'], P.ctx),
    rhs=_kaneko_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', lo=0.7, hi=0.95), ParamSpec('b', lo=0.001, hi=0.02),
            ParamSpec('z', 'n', lo=0.08, hi=RATE), Q, T),
    domain=(DomainCondition('|b / a| < |z_i| < 1', _annulus),),
    window=(below('|z_i|, |b / (a z_i)| <= RATE', _kaneko_rate, RATE),),
    reduction=Reduction('U_RAMANUJAN_1PSI1', lambda P: P.derive(
        {'a': P['a'], 'b': P['b'], 'z': P['z'][0]})),
    notes=('the display prints prod_i (q t^{n-i}, b t^{1-i}/a, a z_i, q/(a z_i))_inf / '
           '(b q t^{1-i}, q t^{n-i}/a, z_i, b t^{1-n}/(a z_i))_inf; at n = 1 it must be Ramanujan\'s '
           '1psi1 and at b = q the left side collapses to 1Phi0(a; z), neither of which it gives',
           'at b = q^{1+M} the left side runs over lambda_n >= -M and sums to '
           'prod_i (q, q/(a z_i);q)_M (a z_i;q)_inf / ((q t^{n-i}/a;q)_M (z_i;q)_inf); the right side '
           'is the product analytic in b through these points: '
           'prod_i (q, b t^{n-i}/a, a z_i, q/(a z_i))_inf / (b, q t^{n-i}/a, z_i, b/(a z_i))_inf',
           'the convergence condition follows the poles of that product: |b/a| < |z_i| < 1'),
    terminating=False,
)


# -- properties of the construction --------------------------------------------

P_HOMOGENEITY = IdentityRecord(
    id='P_HOMOGENEITY',
    family=Family.MACDONALD,
    anchor='Macdonald polynomials, "homogeneous of degree $|\\lambda|$"',
    lhs=lambda P: _P(P, _shape(P))([P['c'] * zi for zi in P['z']]),
    rhs=lambda P: P['c'] ** _shape(P).size * _P(P, _shape(P))(P['z']),
    dims=(1, 2, 3),
    params=(ParamSpec('c', lo=0.5, hi=1.5), ParamSpec('z', 'n', lo=0.5, hi=1.2), Q, T),
    orders=(_shape_order(),),
    guards=(_fits('shape'),),
)


P_STABILITY = IdentityRecord(
    id='P_STABILITY',
    family=Family.MACDONALD,
    anchor='Macdonald polynomials, "satisfy the stability property"',
    lhs=lambda P: _P(P, _shape(P), n=P.n + 1)(list(P['z']) + [P.mp.mpc(0)]),
    rhs=lambda P: _P(P, _shape(P))(P['z']),
    dims=(1, 2, 3),
    params=(ParamSpec('z', 'n', lo=0.5, hi=1.2), Q, T),
    orders=(_shape_order(),),
    guards=(_fits('shape'),),
)


def _distinct(z, spread=0.05):
    return all(abs(z[i] - z[j]) >= spread for i in range(len(z)) for j in range(i + 1, len(z)))


P_SCHUR = IdentityRecord(
    id='P_SCHUR',
    family=Family.MACDONALD,
    anchor='Macdonald polynomials, "Schur polynomials" at q = t',
    lhs=lambda P: _P(P, _shape(P), t=P['q'])(P['z']),
    rhs=lambda P: schur_bialternant(_shape(P), P['z'], P.ctx),
    dims=(1, 2, 3),
    params=(ParamSpec('z', 'n', lo=0.5, hi=1.2), ParamSpec('q', lo=0.2, hi=0.7)),
    orders=(_shape_order(),),
    guards=(_fits('shape'), lambda P: _distinct(P['z'])),
)


def _orthogonality(P):
    lam, mu = _shape(P, 'lam'), _shape(P, 'mu')
    cross = unwrap(inner_product(P, lam, mu))[0]
    scale = P.mp.sqrt(abs(unwrap(inner_product(P, lam, lam))[0] * unwrap(inner_product(P, mu, mu))[0]))
    return 1 + cross / scale


P_ORTHOGONALITY = IdentityRecord(
    id='P_ORTHOGONALITY',
    family=Family.MACDONALD,
    anchor='Macdonald polynomials, "orthogonal with respect to the scalar product"',
    lhs=_orthogonality,
    rhs=lambda P: P.mp.mpc(1),
    dims=(2,),
    params=(ParamSpec('q', lo=0.1, hi=0.4, real=True), ParamSpec('t', lo=0.2, hi=0.5, real=True)),
    orders=(_shape_order('lam', SHAPES_UP_TO_3), _shape_order('mu', SHAPES_UP_TO_3)),
    guards=(_fits('lam', 'mu'),
            lambda P: P['lam'] != P['mu'] and _shape(P, 'lam').size == _shape(P, 'mu').size),
    notes=('left side is 1 + <P_lam, P_mu> / sqrt(<P_lam, P_lam> <P_mu, P_mu>); pairs of '
           'different size are orthogonal by homogeneity and are not drawn',),
    regime='quadrature',
)


P_HOOKS = IdentityRecord(
    id='P_HOOKS',
    family=Family.MACDONALD,
    anchor='Macdonald polynomials, "An important normalization"',
    lhs=lambda P: hooks(_shape(P), P.n, P['q'], P['t'], P.ctx)[2],
    rhs=lambda P: (lambda c, cp: c / cp)(*arm_leg_hooks(_shape(P), P['q'], P['t'], P.ctx)),
    dims=(1, 2, 3),
    params=(Q, T),
    orders=(_shape_order(),),
    guards=(_fits('shape'),),
    notes=('b_lambda is taken as c_lambda / c\'_lambda and compared with the arm-leg product '
           'prod (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l)',),
)


RECORDS = (M1_NORM, M2_CAUCHY, M3_EVAL_SYMMETRY, M4_SPECIALIZATION, M5_QBINOMIAL, M6_HEINE,
           M7_QGAUSS, M8_EULER, M9_QPS, M10_SEARS, M11_KANEKO, P_HOMOGENEITY, P_STABILITY,
           P_SCHUR, P_ORTHOGONALITY, P_HOOKS, P_CAUCHY_DEGREE, P_EPS_PRINCIPAL)
