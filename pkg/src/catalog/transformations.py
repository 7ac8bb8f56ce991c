#!/usr/bin/env python
"""
Multiple series transformations

Terminating A_n, C_n and mixed Watson transformations, Kajihara's A_n <-> A_m
Euler and Sears transformations, the Karlsson-Minton type A_n and C_n
transformations, the C_n extension of Bailey's four-term 10phi9
transformation and the A_n nonterminating Watson transformation. Both
sides of every record are composite expressions evaluated independently.
"""
import itertools
import logging

from ..utils.qkernel import qpoch_prod
from ..utils.sumengine import LatticeRegion, sum_finite, sum_infinite, sum_bilateral
from .records import (IdentityRecord, Family, ParamSpec, OrderSpec, Constraint, DomainCondition,
                      Reduction, below, distinct_guard, lattice_guard, off_diagonal)
from .terms import pair_ladders, apply_pairs, ladders, a_weyl, c_weyl, ratio

logger = logging.getLogger(__name__)

Q = ParamSpec('q', lo=0.15, hi=0.5)
X = ParamSpec('x', 'n', lo=0.6, hi=1.0)
N_RECT = OrderSpec('N', 'n', 0, 3)
N_SCALAR = OrderSpec('N', 'scalar', 0, 4)
M_ORDER = OrderSpec('m', 'scalar', 1, 2)
DIMS = (1, 2, 3)

X_DISTINCT = distinct_guard('x', 0.1)
X_RATIOS = lattice_guard(lambda P: off_diagonal(P['x'], lambda u, v: u / v))


def _qn(P, k):
    return P.kernel.qpow(P['q'], k)


def _prod(P, values):
    return P.mp.fprod(values)


def _inf(P, values):
    return qpoch_prod(values, P['q'], None, P.ctx)


def _ratios(name):
    return lattice_guard(lambda P: off_diagonal(P[name], lambda u, v: u / v))


def _rect_core(P, f=None):
    """Ladders for prod_{i,j} (f_j x_i/x_j;q)_{k_i} / (q x_i/x_j;q)_{k_i}, f_j = q^{-N_j} by default"""
    x = P['x']
    if f is None:
        f = [_qn(P, -Nj) for Nj in P['N']]
    return pair_ladders(P, lambda i, j: f[j] * x[i] / x[j])


# -- T1: A_n Watson transformation ------------------------------------------

def _anwatson_lhs(P):
    a, b, c, d, e, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q', 'N'))
    n = P.n
    core = _rect_core(P)
    ax = ladders(P, [a * xi for xi in x])
    axN = ladders(P, [a * x[i] * _qn(P, 1 + N[i]) for i in range(n)])
    tops = [ladders(P, [b * xi, c * xi]) for xi in x]
    bottoms = [ladders(P, [a * xi * q / d, a * xi * q / e]) for xi in x]
    ld, le, lb, lc = ladders(P, [d, e, a * q / b, a * q / c])
    z = a * a * _qn(P, sum(N) + 2) / (b * c * d * e)

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(n):
            value *= (1 - a * x[i] * _qn(P, k[i] + K)) / (1 - a * x[i])
            value *= ax[i].get(K) * axN[i].inv(K) * ratio(tops[i], bottoms[i], k[i])
        return value * ld.get(K) * le.get(K) * lb.inv(K) * lc.inv(K) * z ** K

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _anwatson_rhs(P):
    a, b, c, d, e, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q', 'N'))
    n = P.n
    total = sum(N)
    value = qpoch_prod([a * q / (c * e)], q, total, P.ctx) / qpoch_prod([a * q / c], q, total, P.ctx)
    for i in range(n):
        value *= qpoch_prod([a * x[i] * q], q, N[i], P.ctx) / qpoch_prod([a * x[i] * q / e], q, N[i], P.ctx)

    core = _rect_core(P)
    cx = ladders(P, [c * xi for xi in x])
    axd = ladders(P, [a * xi * q / d for xi in x])
    lbd, le, lb, lce = ladders(P, [a * q / (b * d), e, a * q / b, c * e * _qn(P, -total) / a])

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(n):
            value *= cx[i].get(k[i]) * axd[i].inv(k[i])
        return value * lbd.get(K) * le.get(K) * lb.inv(K) * lce.inv(K) * _qn(P, K)

    return value * sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _anwatson_poles(P):
    a, b, c, d, e, x = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x'))
    return ([a / b, a / c, c * e / a] + [a * xi for xi in x]
            + [a * xi / v for xi in x for v in (d, e)])


T1_AN_WATSON = IdentityRecord(
    id='T1_AN_WATSON',
    family=Family.TRANSFORMATION,
    anchor='Eq. (anwatsongl), "The following $\\mathrm A_n$ Watson transformation"',
    lhs=_anwatson_lhs,
    rhs=_anwatson_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), ParamSpec('e'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_anwatson_poles)),
    reduction=Reduction('U_WATSON', lambda P: P.derive(
        {'a': P['a'] * P['x'][0], 'b': P['b'] * P['x'][0], 'c': P['c'] * P['x'][0],
         'd': P['d'], 'e': P['e']}, {'N': P['N'][0]})),
)


# -- T2: C_n <-> A_{n-1} Watson transformation ------------------------------

def _cnwatson_lhs(P):
    b, c, d, e, x, q, N = (P[k] for k in ('b', 'c', 'd', 'e', 'x', 'q', 'N'))
    n = P.n
    core = _rect_core(P)
    cross = pair_ladders(P, lambda i, j: x[i] * x[j], lambda i, j: _qn(P, 1 + N[i]) * x[i] * x[j])
    tops = [ladders(P, [v * xi for v in (b, c, d, e)]) for xi in x]
    bottoms = [ladders(P, [q * xi / v for v in (b, c, d, e)]) for xi in x]
    z = _qn(P, sum(N) + 2) / (b * c * d * e)

    def term(k):
        value = c_weyl(P, k) * apply_pairs(core, k) * apply_pairs(cross, k)
        for i in range(n):
            value *= ratio(tops[i], bottoms[i], k[i])
        return value * z ** sum(k)

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _cnwatson_rhs(P):
    b, c, d, e, x, q, N = (P[k] for k in ('b', 'c', 'd', 'e', 'x', 'q', 'N'))
    n = P.n
    total = sum(N)
    value = qpoch_prod([q / (b * c)], q, total, P.ctx)
    for i in range(n):
        value /= qpoch_prod([q * x[i] / b, q * x[i] / c], q, N[i], P.ctx)
        for j in range(n):
            value *= qpoch_prod([q * x[i] * x[j]], q, N[i], P.ctx)
        for j in range(i + 1, n):
            value /= qpoch_prod([q * x[i] * x[j]], q, N[i] + N[j], P.ctx)

    core = _rect_core(P)
    tops = [ladders(P, [b * xi, c * xi]) for xi in x]
    bottoms = [ladders(P, [q * xi / d, q * xi / e]) for xi in x]
    lde, lbc = ladders(P, [q / (d * e), b * c * _qn(P, -total)])

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(n):
            value *= ratio(tops[i], bottoms[i], k[i])
        return value * lde.get(K) * lbc.inv(K) * _qn(P, K)

    return value * sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _cnwatson_poles(P):
    b, c, d, e, x = (P[k] for k in ('b', 'c', 'd', 'e', 'x'))
    n = len(x)
    return ([b * c] + [x[i] * x[j] for i in range(n) for j in range(n)]
            + [xi / v for xi in x for v in (b, c, d, e)])


T2_CN_AN_WATSON = IdentityRecord(
    id='T2_CN_AN_WATSON',
    family=Family.TRANSFORMATION,
    anchor='Eq. (cnwatsongl), "$\\mathrm C_n\\leftrightarrow\\mathrm A_{n-1}$"',
    lhs=_cnwatson_lhs,
    rhs=_cnwatson_rhs,
    dims=DIMS,
    params=(ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), ParamSpec('e'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_cnwatson_poles)),
    reduction=Reduction('U_WATSON', lambda P: P.derive(
        {'a': P['x'][0] ** 2, 'b': P['d'] * P['x'][0], 'c': P['e'] * P['x'][0],
         'd': P['b'] * P['x'][0], 'e': P['c'] * P['x'][0]}, {'N': P['N'][0]})),
)


# -- T3: mixed-type Watson transformation -----------------------------------

def _mixed_pair_term(P):
    """k -> A_n factor times the (a x_i x_j q/c, e x_i x_j) products common to both sides"""
    a, c, e, x, q, N = (P[k] for k in ('a', 'c', 'e', 'x', 'q', 'N'))
    n, kernel = P.n, P.kernel
    core = _rect_core(P)
    mixed = pair_ladders(P, lambda i, j: e * x[i] * x[j] * _qn(P, N[j]),
                         lambda i, j: a * x[i] * x[j] * q / c)
    cross = {(i, j): (kernel.ladder(a * x[i] * x[j] * q / c, q), kernel.ladder(e * x[i] * x[j], q))
             for i in range(n) for j in range(i + 1, n)}

    def term(k):
        value = a_weyl(P, k) * apply_pairs(core, k) * apply_pairs(mixed, k)
        for (i, j), (up, down) in cross.items():
            value *= up.get(k[i] + k[j]) * down.inv(k[i] + k[j])
        return value

    return term


def _mixed_watson_lhs(P):
    a, b, c, d, e, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q', 'N'))
    n = P.n
    shared = _mixed_pair_term(P)
    ax = ladders(P, [a * xi for xi in x])
    cx = ladders(P, [c / xi for xi in x])
    aex = ladders(P, [a * q / (e * xi) for xi in x])
    axN = ladders(P, [a * x[i] * _qn(P, 1 + N[i]) for i in range(n)])
    aeN = ladders(P, [a * _qn(P, 1 - N[i]) / (e * x[i]) for i in range(n)])
    bx = ladders(P, [b * xi for xi in x])
    axd = ladders(P, [a * xi * q / d for xi in x])
    ld, lb = ladders(P, [d, a * q / b])
    z = q * q * a * a / (b * c * d * e)

    def term(k):
        K = sum(k)
        value = shared(k)
        for i in range(n):
            rest = K - k[i]
            value *= (1 - a * x[i] * _qn(P, k[i] + K)) / (1 - a * x[i])
            value *= aex[i].get(rest) * cx[i].inv(rest)
            value *= ax[i].get(K) * cx[i].get(K) * axN[i].inv(K) * aeN[i].inv(K)
            value *= bx[i].get(k[i]) * axd[i].inv(k[i])
        return value * ld.get(K) * lb.inv(K) * z ** K

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _mixed_watson_rhs(P):
    a, b, c, d, e, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q', 'N'))
    n = P.n
    value = d ** (-sum(N))
    for i in range(n):
        value *= (qpoch_prod([a * x[i] * q, d * e * x[i] / a], q, N[i], P.ctx)
                  / qpoch_prod([e * x[i] / a, a * x[i] * q / d], q, N[i], P.ctx))

    shared = _mixed_pair_term(P)
    top = ladders(P, [a * xi * q / (b * c) for xi in x])
    bottom = ladders(P, [d * e * xi / a for xi in x])
    ld, lb = ladders(P, [d, a * q / b])

    def term(k):
        K = sum(k)
        value = shared(k)
        for i in range(n):
            value *= top[i].get(k[i]) * bottom[i].inv(k[i])
        return value * ld.get(K) * lb.inv(K) * _qn(P, K)

    return value * sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _mixed_watson_poles(P):
    a, b, c, d, e, x = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x'))
    n = len(x)
    values = [a / b]
    for i in range(n):
        values += [a * x[i], c / x[i], a / (e * x[i]), a * x[i] / d, d * e * x[i] / a, e * x[i] / a]
        for j in range(n):
            values += [a * x[i] * x[j] / c, e * x[i] * x[j]]
    return values


T3_MIXED_WATSON = IdentityRecord(
    id='T3_MIXED_WATSON',
    family=Family.TRANSFORMATION,
    anchor='Eq. (dnwat1e), "cannot be simplified to"',
    lhs=_mixed_watson_lhs,
    rhs=_mixed_watson_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), ParamSpec('e'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_mixed_watson_poles)),
    reduction=Reduction('U_WATSON', lambda P: P.derive(
        {'a': P['a'] * P['x'][0], 'b': P['c'] / P['x'][0], 'c': P['b'] * P['x'][0], 'd': P['d'],
         'e': P['e'] * P['x'][0] ** 2 * _qn(P, P['N'][0])}, {'N': P['N'][0]})),
)


# -- T4: Kajihara's A_n <-> A_m Euler transformation ------------------------

def _kajihara_arg(P):
    return P.A * P.B * P['z'] / P['c'] ** len(P['y'])


def _kajihara_lhs(P):
    a, b, c, x, y, z = (P[k] for k in ('a', 'b', 'c', 'x', 'y', 'z'))
    n = P.n
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j])
    tops = [ladders(P, [bl * xi * yl for bl, yl in zip(b, y)]) for xi in x]
    bottoms = [ladders(P, [c * xi * yl for yl in y]) for xi in x]

    def term(k):
        value = a_weyl(P, k) * apply_pairs(pairs, k)
        for i in range(n):
            value *= ratio(tops[i], bottoms[i], k[i])
        return value * z ** sum(k)

    return sum_infinite(n, term, P.ctx)


def _kajihara_rhs(P):
    a, b, c, x, y, z = (P[k] for k in ('a', 'b', 'c', 'x', 'y', 'z'))
    m = len(y)
    w = _kajihara_arg(P)
    pairs = pair_ladders(P, lambda j, l: c * y[j] / (b[l] * y[l]), x=y)
    tops = [ladders(P, [c * xi * yl / ai for xi, ai in zip(x, a)]) for yl in y]
    bottoms = [ladders(P, [c * xi * yl for xi in x]) for yl in y]

    def term(k):
        value = a_weyl(P, k, y) * apply_pairs(pairs, k)
        for l in range(m):
            value *= ratio(tops[l], bottoms[l], k[l])
        return value * w ** sum(k)

    return _inf(P, [w]) / _inf(P, [z]) * sum_infinite(m, term, P.ctx)


T4_KAJIHARA_EULER = IdentityRecord(
    id='T4_KAJIHARA_EULER',
    family=Family.TRANSFORMATION,
    anchor='Eq. (kaji1id), "connects $\\mathrm A_n$ and $\\mathrm A_m$"',
    lhs=_kajihara_lhs,
    rhs=_kajihara_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', 'n'), ParamSpec('b', 'm'), ParamSpec('c', lo=0.5, hi=0.95), X,
            ParamSpec('y', 'm', lo=0.6, hi=1.0), ParamSpec('z', hi=0.7), Q),
    orders=(M_ORDER,),
    domain=(below('|z| < 1', lambda P: P['z']), below('|A B z / c^m| < 1', _kajihara_arg)),
    window=(below('|z|, |A B z / c^m| <= 0.6', lambda P: [P['z'], _kajihara_arg(P)], 0.65),),
    guards=(X_DISTINCT, X_RATIOS, distinct_guard('y', 0.1), _ratios('y'),
            lattice_guard(lambda P: [P['c'] * xi * yl for xi in P['x'] for yl in P['y']])),
    reduction=Reduction('U_HEINE_EULER', lambda P: P.derive(
        {'a': P['a'][0], 'b': P['b'][0] * P['x'][0] * P['y'][0], 'c': P['c'] * P['x'][0] * P['y'][0],
         'z': P['z']}), orders={'m': 1}),
    terminating=False,
)


# -- T5: Kajihara's Sears transformation ------------------------------------

def phi_block(P, a, x, top, bottom, N):
    """
    Phi_N: sum over |k| = N of the A_n factor in x, prod_{i,j} (a_j x_i/x_j)_{k_i}/(q x_i/x_j)_{k_i}
    and prod_{i,l} (top_l x_i)_{k_i} / (bottom_l x_i)_{k_i}
    """
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j], x=x)
    tops = [ladders(P, [u * xi for u in top]) for xi in x]
    bottoms = [ladders(P, [u * xi for u in bottom]) for xi in x]

    def term(k):
        value = a_weyl(P, k, x) * apply_pairs(pairs, k)
        for i in range(len(x)):
            value *= ratio(tops[i], bottoms[i], k[i])
        return value

    return sum_finite(LatticeRegion.hyperplane(len(x), N), term, P.ctx)


def _sears_d(P):
    """d_1 = A B f^n / (c^m E d_2...d_m), making A B / c^m = D E / f^n"""
    d = list(P['d'])
    d[0] = P.A * P.B * P['f'] ** P.n / (P['c'] ** len(P['b']) * P.E * _prod(P, d[1:]))
    return d


def _kajihara_sears_lhs(P):
    a, b, c, d, e, f, v, w, x, y, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'v', 'w', 'x', 'y', 'N'))
    z = _prod(P, d) * P.E / f ** P.n
    total = 0
    for K in range(N + 1):
        first = phi_block(P, [f / et for et in e], v, [f * wr / dr for wr, dr in zip(w, d)],
                          [f * wr for wr in w], K)
        second = phi_block(P, a, x, [bl * yl for bl, yl in zip(b, y)], [c * yl for yl in y], N - K)
        total = total + first * second * z ** K
    return total


def _kajihara_sears_rhs(P):
    a, b, c, d, e, f, v, w, x, y, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'v', 'w', 'x', 'y', 'N'))
    z = P.A * P.B / c ** len(y)
    total = 0
    for L in range(N + 1):
        first = phi_block(P, [c / bl for bl in b], y, [c * xi / ai for xi, ai in zip(x, a)],
                          [c * xi for xi in x], L)
        second = phi_block(P, d, w, [et * vt for et, vt in zip(e, v)], [f * vt for vt in v], N - L)
        total = total + first * second * z ** L
    return total


def _sears_reduce(P):
    a, b, c, d, e, f, v, w, x, y, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'v', 'w', 'x', 'y', 'N'))
    shift = _qn(P, 1 - N)
    xy = x[0] * y[0]
    return P.derive({'a': shift / (c * xy), 'b': f / e[0], 'c': f * v[0] * w[0] / d[0],
                     'd': shift / a[0], 'e': shift / (b[0] * xy), 'f': f * v[0] * w[0]}, {'N': N})


def _sears_scale(P):
    a, b, c, x, y, q, N = (P[k] for k in ('a', 'b', 'c', 'x', 'y', 'q', 'N'))
    xy = x[0] * y[0]
    return qpoch_prod([a[0], b[0] * xy], q, N, P.ctx) / qpoch_prod([q, c * xy], q, N, P.ctx)


def _sears_poles(P):
    a, b, c, f, v, w, x, y = (P[k] for k in ('a', 'b', 'c', 'f', 'v', 'w', 'x', 'y'))
    return ([c * xi * yl for xi in x for yl in y] + [f * vt * wr for vt in v for wr in w]
            + list(a) + [bl * xi * yl for bl, yl in zip(b, y) for xi in x])


SEARS_PARAM = dict(lo=0.3, hi=0.9)

T5_KAJIHARA_SEARS = IdentityRecord(
    id='T5_KAJIHARA_SEARS',
    family=Family.TRANSFORMATION,
    anchor='Sec. 2.6, "multivariate extension of the Sears transformation"',
    lhs=_kajihara_sears_lhs,
    rhs=_kajihara_sears_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', 'n', **SEARS_PARAM), X, ParamSpec('b', 'm', **SEARS_PARAM),
            ParamSpec('y', 'm', lo=0.6, hi=1.0), ParamSpec('c', **SEARS_PARAM),
            ParamSpec('d', 'm', **SEARS_PARAM), ParamSpec('w', 'm', lo=0.6, hi=1.0),
            ParamSpec('e', 'n', **SEARS_PARAM), ParamSpec('v', 'n', lo=0.6, hi=1.0),
            ParamSpec('f', **SEARS_PARAM), Q),
    orders=(M_ORDER, N_SCALAR),
    constraints=(Constraint('d', 'd_1 = A B f^n / (c^m E d_2...d_m)', _sears_d),),
    window=(DomainCondition('0.1 <= |d_1| <= 3',
                            lambda P: [(0.1, abs(P['d'][0])), (abs(P['d'][0]), 3.0)]),),
    guards=(X_DISTINCT, X_RATIOS) + tuple(g for name in 'yvw'
                                          for g in (distinct_guard(name, 0.1), _ratios(name)))
           + (lattice_guard(_sears_poles),),
    reduction=Reduction('U_SEARS', _sears_reduce, scale=_sears_scale, orders={'m': 1}),
    notes=('both Phi blocks of each side are taken with n2 = n and m2 = m second-block sizes',),
)


# -- T6: A_n transformation of Karlsson-Minton type -------------------------

def _km_an_arg(P):
    return _qn(P, 1 - sum(P['ms']) - P.n) * P.B / P.A


def _km_an_lhs(P):
    a, b, x, y, ms, q = (P[k] for k in ('a', 'b', 'x', 'y', 'ms', 'q'))
    n = P.n
    tops = [ladders(P, [xi * yj * _qn(P, mj) for yj, mj in zip(y, ms)] + [xi * aj for aj in a])
            for xi in x]
    bottoms = [ladders(P, [xi * yj for yj in y] + [xi * bj for bj in b]) for xi in x]

    def term(k):
        value = a_weyl(P, k)
        for i in range(n):
            value *= ratio(tops[i], bottoms[i], k[i])
        return value

    return sum_bilateral(LatticeRegion.zero_sum(n), term, P.ctx)


def _km_an_rhs(P):
    a, b, x, y, ms, q = (P[k] for k in ('a', 'b', 'x', 'y', 'ms', 'q'))
    n, p = P.n, len(y)
    A, B, X_ = P.A, P.B, P.X
    M = sum(ms)
    value = (_inf(P, [_qn(P, 1 - M) / (A * X_), _qn(P, 1 - n) * B * X_])
             / _inf(P, [q, _km_an_arg(P)]))
    for i in range(n):
        for j in range(n):
            value *= _inf(P, [b[i] / a[j], q * x[i] / x[j]]) / _inf(P, [q / (x[i] * a[j]), x[i] * b[j]])
        for j in range(p):
            value *= (qpoch_prod([_qn(P, -ms[j]) * b[i] / y[j]], q, ms[j], P.ctx)
                      / qpoch_prod([_qn(P, 1 - ms[j]) / (x[i] * y[j])], q, ms[j], P.ctx))

    pairs = pair_ladders(P, lambda r, s: _qn(P, -ms[s]) * y[r] / y[s], x=y)
    tops = [ladders(P, [yj / ai for ai in a]) for yj in y]
    bottoms = [ladders(P, [q * yj / bi for bi in b]) for yj in y]
    top, bottom = ladders(P, [_qn(P, n) / (B * X_), _qn(P, 1 - M) / (A * X_)])

    def term(k):
        K = sum(k)
        value = _qn(P, K) * top.get(K) * bottom.inv(K) * a_weyl(P, k, y) * apply_pairs(pairs, k)
        for j in range(p):
            value *= ratio(tops[j], bottoms[j], k[j])
        return value

    return value * sum_finite(LatticeRegion.rect(ms), term, P.ctx)


def _km_an_poles(P):
    a, b, x, y = P['a'], P['b'], P['x'], P['y']
    return ([xi * v for xi in x for v in list(a) + list(b) + list(y)]
            + [yj / bi for yj in y for bi in b] + [P.A * P.X])


T6_KM_AN = IdentityRecord(
    id='T6_KM_AN',
    family=Family.TRANSFORMATION,
    anchor='Eq. (rosanid), "of Karlsson--Minton type"',
    lhs=_km_an_lhs,
    rhs=_km_an_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', 'n', lo=0.5, hi=0.95), ParamSpec('b', 'n', lo=0.05, hi=0.3), X,
            ParamSpec('y', 'p', lo=0.3, hi=0.9), ParamSpec('q', lo=0.4, hi=0.6)),
    orders=(OrderSpec('p', 'scalar', 0, 2), OrderSpec('ms', 'p', 0, 1)),
    domain=(below('|q^(1-|m|-n) B / A| < 1', _km_an_arg),),
    window=(below('|q^(1-|m|-n) B / A| <= 0.6', _km_an_arg, 0.65),),
    guards=(X_DISTINCT, X_RATIOS, distinct_guard('y', 0.1), _ratios('y'), lattice_guard(_km_an_poles)),
    notes=('the A_n factor of the finite sum is printed over 1 <= i < j <= n although that sum '
           'runs over p indices; read over 1 <= i < j <= p',),
    terminating=False,
)


# -- T7: C_n transformation of Karlsson-Minton type -------------------------

def _km_cn_arg(P):
    return _qn(P, 1 - sum(P['ms'])) / P.A


def _km_cn_lhs(P):
    a, x, y, ms, q = (P[k] for k in ('a', 'x', 'y', 'ms', 'q'))
    n = P.n
    tops = [ladders(P, [xi * yj * _qn(P, mj) for yj, mj in zip(y, ms)] + [q * xi / yj for yj in y]
                    + [xi * aj for aj in a]) for xi in x]
    bottoms = [ladders(P, [xi * yj for yj in y] + [_qn(P, 1 - mj) * xi / yj for yj, mj in zip(y, ms)]
                       + [q * xi / aj for aj in a]) for xi in x]
    z = _km_cn_arg(P)

    def term(k):
        value = c_weyl(P, k)
        for i in range(n):
            value *= ratio(tops[i], bottoms[i], k[i])
        return value * z ** sum(k)

    return sum_bilateral(LatticeRegion.bilateral(n), term, P.ctx)


def _km_cn_rhs(P):
    a, x, y, ms, q = (P[k] for k in ('a', 'x', 'y', 'ms', 'q'))
    n, p, r = P.n, len(y), len(a)
    A = P.A
    M = sum(ms)
    value = 1 / _inf(P, [q / A]) / qpoch_prod([A], q, M, P.ctx)
    for i in range(n):
        for j in range(i, n):
            value *= _inf(P, [q * x[i] * x[j], q / (x[i] * x[j])])
        for j in range(n):
            value *= _inf(P, [q * x[i] / x[j]])
        value /= _inf(P, [q * x[i] / aj for aj in a] + [q / (x[i] * aj) for aj in a])
    for i in range(r):
        for j in range(i + 1, r):
            value *= _inf(P, [q / (a[i] * a[j])])
    for j in range(p):
        value *= qpoch_prod([y[j] * ai for ai in a], q, ms[j], P.ctx)
        value /= qpoch_prod([y[j] * xi for xi in x] + [y[j] / xi for xi in x], q, ms[j], P.ctx)
        for i in range(p):
            value /= qpoch_prod([y[i] * y[j]], q, ms[i], P.ctx)
            if i < j:
                value *= qpoch_prod([y[i] * y[j]], q, ms[i] + ms[j], P.ctx)

    first = pair_ladders(P, lambda i, j: y[i] * y[j] / q, x=y)
    second = pair_ladders(P, lambda i, j: _qn(P, -ms[j]) * y[i] / y[j],
                          lambda i, j: _qn(P, ms[j]) * y[i] * y[j], x=y)
    tops = [ladders(P, [yj / ai for ai in a]) for yj in y]
    bottoms = [ladders(P, [yj * ai for ai in a]) for yj in y]
    z = A * _qn(P, M)

    def term(k):
        value = c_weyl(P, k, 1 / q, y) * apply_pairs(first, k) * apply_pairs(second, k)
        for j in range(p):
            value *= ratio(tops[j], bottoms[j], k[j])
        return value * z ** sum(k)

    return value * sum_finite(LatticeRegion.rect(ms), term, P.ctx)


def _km_cn_poles(P):
    a, x, y = P['a'], P['x'], P['y']
    n = len(x)
    return ([xi * v for xi in x for v in list(a) + list(y)] + [xi / v for xi in x for v in list(a) + list(y)]
            + [x[i] * x[j] for i in range(n) for j in range(i, n)]
            + [yj * ai for yj in y for ai in a] + off_diagonal(y, lambda u, v: u * v) + [P.A])


T7_KM_CN = IdentityRecord(
    id='T7_KM_CN',
    family=Family.TRANSFORMATION,
    anchor='Eq. (roscnid), "associated with the root system $\\mathrm C_n$"',
    lhs=_km_cn_lhs,
    rhs=_km_cn_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', '2n+2', lo=1.1, hi=2.0), X, ParamSpec('y', 'p', lo=0.3, hi=0.8),
            ParamSpec('q', lo=0.3, hi=0.55)),
    orders=(OrderSpec('p', 'scalar', 0, 2), OrderSpec('ms', 'p', 0, 1)),
    domain=(below('|q^(1-|m|) / A| < 1', _km_cn_arg),),
    window=(below('|q^(1-|m|) / A| <= 0.6', _km_cn_arg, 0.65),),
    guards=(X_DISTINCT, X_RATIOS, distinct_guard('y', 0.1), _ratios('y'), lattice_guard(_km_cn_poles)),
    reduction=Reduction('U_BAILEY_6PSI6', lambda P: P.derive(
        {'a': P['x'][0] ** 2, 'b': P['x'][0] * P['a'][0], 'c': P['x'][0] * P['a'][1],
         'd': P['x'][0] * P['a'][2], 'e': P['x'][0] * P['a'][3]}), orders={'p': 0}),
    notes=('the A_n factor and the (1 - y_i y_j q^{k_i+k_j-1}) factor of the finite sum are '
           'printed over indices up to n although that sum runs over p indices; read over p',),
    terminating=False,
)


# -- T8: C_n extension of Bailey's four-term 10phi9 transformation ----------

def _bailey_e(P):
    """e_i = a^3 q^{3-n} / (b c_i d_i x_i f g h)"""
    a, b, c, d, x, f, g, h = (P[k] for k in ('a', 'b', 'c', 'd', 'x', 'f', 'g', 'h'))
    head = a ** 3 * _qn(P, 3 - P.n) / (b * f * g * h)
    return [head / (ci * di * xi) for ci, di, xi in zip(c, d, x)]


def _bailey_lambda(P):
    a, c, d, e, x, q = (P[k] for k in ('a', 'c', 'd', 'e', 'x', 'q'))
    return a * a * q / (c[0] * d[0] * e[0] * x[0])


def _subset_sum(P, base, inside, others):
    """
    One S-summand of a side: its prefactor times the n-fold series.

    inside[i] marks i in S; others[i] lists the six parameters c'_i x_i, ..., h x_i.
    Indices outside S are summed against the point b q^{k_i}/base, those in S
    against x_i q^{k_i}.
    """
    b, x, q = P['b'], P['x'], P['q']
    n = P.n
    outside = inside.count(False)
    value = (b / base) ** (outside * (outside - 1) // 2)
    vwp, tops, bottoms = [], [], []
    for i in range(n):
        A = base * x[i] ** 2
        bx = b * x[i]
        u = others[i]
        if inside[i]:
            vwp.append(A)
            tops.append(ladders(P, [A, bx] + u))
            bottoms.append(ladders(P, [q, A * q / bx] + [A * q / v for v in u]))
        else:
            value *= (_inf(P, [A * q, bx / A] + u + [bx * q / v for v in u])
                      / _inf(P, [bx * bx * q / A, A / bx] + [A * q / v for v in u] + [bx * v / A for v in u]))
            vwp.append(bx * bx / A)
            tops.append(ladders(P, [bx * bx / A, bx] + [bx * v / A for v in u]))
            bottoms.append(ladders(P, [q, bx * q / A] + [bx * q / v for v in u]))

    def cross(i, j, k):
        norm = (x[i] - x[j]) * (1 - base * x[i] * x[j])
        if inside[i] and inside[j]:
            ui, uj = x[i] * _qn(P, k[i]), x[j] * _qn(P, k[j])
            return (ui - uj) * (1 - base * ui * uj) / norm
        if not inside[i] and not inside[j]:
            return (_qn(P, k[i]) - _qn(P, k[j])) * (1 - b * b * _qn(P, k[i] + k[j]) / base) / norm
        s, o = (i, j) if inside[i] else (j, i)
        norm = (x[s] - x[o]) * (1 - base * x[s] * x[o])
        return ((x[s] * _qn(P, k[s]) - b * _qn(P, k[o]) / base)
                * (1 - b * x[s] * _qn(P, k[s] + k[o])) / norm)

    def term(k):
        value = _qn(P, sum(k))
        for i in range(n):
            value *= (1 - vwp[i] * _qn(P, 2 * k[i])) / (1 - vwp[i]) * ratio(tops[i], bottoms[i], k[i])
            for j in range(i + 1, n):
                value *= cross(i, j, k)
        return value

    return value * sum_infinite(n, term, P.ctx)


def _subset_side(P, base, c, d, e):
    f, g, h, x = P['f'], P['g'], P['h'], P['x']
    others = [[c[i] * x[i], d[i] * x[i], e[i] * x[i], f * x[i], g * x[i], h * x[i]] for i in range(P.n)]
    total = 0
    for inside in itertools.product((True, False), repeat=P.n):
        total = total + _subset_sum(P, base, list(inside), others)
    return total


def _cn_bailey_lhs(P):
    return _subset_side(P, P['a'], P['c'], P['d'], P['e'])


def _cn_bailey_rhs(P):
    a, b, c, d, e, f, g, h, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'x', 'q'))
    n = P.n
    lam = _bailey_lambda(P)
    value = 1
    for i in range(n):
        shift = _qn(P, i)
        value *= (_inf(P, [a * x[i] ** 2 * q, b / (a * x[i])] + [lam * x[i] * q / u for u in (f, g, h)]
                       + [b * u * shift / lam for u in (f, g, h)])
                  / _inf(P, [lam * x[i] ** 2 * q, b / (lam * x[i])] + [a * x[i] * q / u for u in (f, g, h)]
                         + [b * u * shift / a for u in (f, g, h)]))
        for j in range(i + 1, n):
            value *= (1 - lam * x[i] * x[j]) / (1 - a * x[i] * x[j])
    scaled = [[lam * v / a for v in seq] for seq in (c, d, e)]
    return value * _subset_side(P, lam, *scaled)


def _cn_bailey_window(P):
    lam = _bailey_lambda(P)
    bounds = [(0.1, abs(lam)), (abs(lam), 2.0)]
    for ei in P['e']:
        bounds += [(0.1, abs(ei)), (abs(ei), 2.0)]
    return bounds


def _cn_bailey_poles(P):
    a, b, c, d, e, f, g, h, x = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'x'))
    lam = _bailey_lambda(P)
    n = len(x)
    values = [b * b / a, b * b / lam]
    for base in (a, lam):
        values += [b * u / base for u in (f, g, h)]
        for i in range(n):
            values += [base * x[i] ** 2, base * x[i] / b, b / (base * x[i])]
            values += [base * x[i] / u for u in (f, g, h)]
            for j in range(i + 1, n):
                values.append(base * x[i] * x[j])
    for i in range(n):
        for u in (c[i], d[i], e[i]):
            values += [a * x[i] / u, b * u / a, b / u, a * b / (u * lam)]
    return values + [b / u for u in (f, g, h)]


T8_CN_BAILEY_4TERM = IdentityRecord(
    id='T8_CN_BAILEY_4TERM',
    family=Family.TRANSFORMATION,
    anchor='Eq. (cnnt109gl), "2^n nonterminating $\\mathrm C_n$ basic hypergeometric series"',
    lhs=_cn_bailey_lhs,
    rhs=_cn_bailey_rhs,
    dims=(1, 2),
    params=((ParamSpec('a', lo=0.3, hi=0.8), ParamSpec('b', lo=0.3, hi=0.9),
             ParamSpec('c', 'n', lo=0.3, hi=0.9), ParamSpec('d', 'n', lo=0.3, hi=0.9), X)
            + tuple(ParamSpec(k, lo=0.3, hi=0.9) for k in 'fgh') + (Q,)),
    constraints=(Constraint('e', 'e_i = a^3 q^(3-n) / (b c_i d_i x_i f g h)', _bailey_e),),
    window=(DomainCondition('0.1 <= |lambda|, |e_i| <= 2', _cn_bailey_window),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_cn_bailey_poles)),
    reduction=Reduction('U_BAILEY_10PHI9_4TERM', lambda P: P.derive(
        {'a': P['a'] * P['x'][0] ** 2, 'b': P['b'] * P['x'][0], 'c': P['c'][0] * P['x'][0],
         'd': P['d'][0] * P['x'][0], 'e': P['e'][0] * P['x'][0], 'f': P['f'] * P['x'][0],
         'g': P['g'] * P['x'][0], 'h': P['h'] * P['x'][0]})),
    notes=('left side prints (1 - b^2 q^{2k_x}/a); read q^{2k_i}',
           'left side mixed factor printed (x_i q^{k_i} - b q^{y_j}/a)(1 - b x_j q^{k_i+k_j}); '
           'read (x_i q^{k_i} - b q^{k_j}/a)(1 - b x_i q^{k_i+k_j}), the form the right side '
           'uses with lambda in place of a',),
    terminating=False,
)


# -- T9: A_n nonterminating Watson transformation ---------------------------

def _vwp_term(P, f):
    """Summand of the very-well-poised A_n 8phi7 side with the sequence f"""
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    n = P.n
    core = _rect_core(P, f)
    ax = ladders(P, [a * xi for xi in x])
    axf = ladders(P, [a * xi * q / fi for xi, fi in zip(x, f)])
    tops = [ladders(P, [b * xi, c * xi]) for xi in x]
    bottoms = [ladders(P, [a * xi * q / d, a * xi * q / e]) for xi in x]
    ld, le, lb, lc = ladders(P, [d, e, a * q / b, a * q / c])
    z = a * a * q * q / (b * c * d * e * _prod(P, f))

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(n):
            value *= (1 - a * x[i] * _qn(P, k[i] + K)) / (1 - a * x[i])
            value *= ax[i].get(K) * axf[i].inv(K) * ratio(tops[i], bottoms[i], k[i])
        return value * ld.get(K) * le.get(K) * lb.inv(K) * lc.inv(K) * z ** K

    return term


def _balanced_term(P, f):
    """Summand of the first balanced A_n 4phi3 series"""
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    n = P.n
    bcF = b * c * _prod(P, f)
    core = _rect_core(P, f)
    tops = [ladders(P, [a * xi * q / (d * e), b * xi, c * xi]) for xi in x]
    bottoms = [ladders(P, [a * xi * q / d, a * xi * q / e, bcF * xi / a]) for xi in x]

    def term(k):
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(n):
            value *= ratio(tops[i], bottoms[i], k[i])
        return value * _qn(P, sum(k))

    return term


def _nt_watson_z(P):
    a, b, c, d, e, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'q'))
    return a * a * q * q / (b * c * d * e * P._product('f'))


def _nt_watson_lhs(P):
    return sum_infinite(P.n, _vwp_term(P, P['f']), P.ctx)


def _shifted_sum(P, s):
    """Inner series of the s-th balanced multiple, including its q^{(n-1)k_s} weight"""
    a, b, c, d, e, f, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'x', 'q'))
    n, kernel = P.n, P.kernel
    F = _prod(P, f)
    bcF = b * c * F
    w = _nt_watson_z(P)
    rows = [i for i in range(n) if i != s]
    core = _rect_core(P, f)
    tops = {i: ladders(P, [a * x[i] * q / (d * e), b * x[i], c * x[i]]) for i in rows}
    bottoms = {i: ladders(P, [bcF * x[i] / a, a * x[i] * q / d, a * x[i] * q / e]) for i in rows}
    s_tops = ladders(P, [w, a * q / (b * F), a * q / (c * F)] + [a * fi * q / (bcF * xi) for fi, xi in zip(f, x)])
    s_bottoms = ladders(P, [q, a * a * q * q / (b * c * d * F), a * a * q * q / (b * c * e * F)]
                        + [a * q * q / (bcF * xi) for xi in x])
    weight = 1
    for i in rows:
        weight *= x[i] / (x[i] - x[s])

    def term(k):
        value = weight * _qn(P, (n - 1) * k[s] + sum(k)) * ratio(s_tops, s_bottoms, k[s])
        for i in rows:
            for j in rows:
                if i < j:
                    value *= (x[i] * kernel.qpow(q, k[i]) - x[j] * kernel.qpow(q, k[j])) / (x[i] - x[j])
            for up, down in core[i]:
                value *= up.get(k[i]) * down.inv(k[i])
            value *= (1 - bcF * x[i] * _qn(P, k[i] - k[s] - 1) / a) / (1 - bcF * x[i] / (a * q))
            value *= ratio(tops[i], bottoms[i], k[i])
        return value

    return sum_infinite(n, term, P.ctx)


def _nt_watson_rhs(P):
    a, b, c, d, e, f, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'x', 'q'))
    n = P.n
    F = _prod(P, f)
    bcF = b * c * F
    first = _inf(P, [a * q / (b * F), a * q / (c * F)]) / _inf(P, [a * q / b, a * q / c])
    for i in range(n):
        first *= (_inf(P, [a * x[i] * q, a * f[i] * q / (bcF * x[i])])
                  / _inf(P, [a * q / (bcF * x[i]), a * x[i] * q / f[i]]))
    first = first * sum_infinite(n, _balanced_term(P, f), P.ctx)

    aq2 = a * a * q * q
    outer = (_inf(P, [q, aq2 / (b * c * d * F), aq2 / (b * c * e * F)])
             / _inf(P, [_nt_watson_z(P), a * q / b, a * q / c]))
    for i in range(n):
        outer *= _inf(P, [a * x[i] * q]) / _inf(P, [a * x[i] * q / f[i]])
    second = 0
    for s in range(n):
        xs = x[s]
        pref = (_inf(P, [a * xs * q / (d * e), b * xs, c * xs])
                / _inf(P, [bcF * xs / (a * q), a * xs * q / d, a * xs * q / e]))
        for i in range(n):
            pref *= _inf(P, [f[i] * xs / x[i]]) / _inf(P, [q * xs / x[i]])
        second = second + pref * _shifted_sum(P, s)
    return first + outer * second


def _nt_watson_poles(P):
    a, b, c, d, e, f, x = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'x'))
    bcF = b * c * P._product('f')
    return ([a / b, a / c, a * a / (b * c * d * P._product('f')), a * a / (b * c * e * P._product('f'))]
            + [a * xi for xi in x] + [a * xi / fi for xi, fi in zip(x, f)]
            + [a * xi / v for xi in x for v in (d, e)] + [bcF * xi / a for xi in x])


T9_AN_WATSON_NT = IdentityRecord(
    id='T9_AN_WATSON_NT',
    family=Family.TRANSFORMATION,
    anchor='Eq. (anntwatsongl), "$n+1$ multiples of nonterminating balanced"',
    lhs=_nt_watson_lhs,
    rhs=_nt_watson_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', lo=0.2, hi=0.8),) + tuple(ParamSpec(k, lo=0.4, hi=0.95) for k in 'bcde')
           + (ParamSpec('f', 'n', lo=0.4, hi=0.95), X, Q),
    domain=(below('|a^2 q^2 / (b c d e F)| < 1', _nt_watson_z),),
    window=(below('|a^2 q^2 / (b c d e F)| <= 0.6', _nt_watson_z, 0.65),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_nt_watson_poles)),
    reduction=Reduction('U_WATSON_NT', lambda P: P.derive(
        {'a': P['a'] * P['x'][0], 'b': P['b'] * P['x'][0], 'c': P['c'] * P['x'][0],
         'd': P['d'], 'e': P['e'], 'f': P['f'][0]})),
    notes=('numerator of the shifted balanced series printed with q^{k_i - y_s - 1}; read q^{k_i - k_s - 1}',
           'the weight q^{(n-1)k_s} is printed outside the inner sum over k; it belongs to the '
           'summand, where it balances the n - 1 factors growing like q^{-k_s}',
           'products F = f_1...f_n printed both with \\dots and \\cdots; same product'),
    terminating=False,
)


def _term_fs(P):
    return [_qn(P, -Ni) for Ni in P['N']]


def _t_watson_lhs(P):
    return sum_finite(LatticeRegion.rect(P['N']), _vwp_term(P, _term_fs(P)), P.ctx)


def _t_watson_rhs(P):
    a, b, c, x, q, N = (P[k] for k in ('a', 'b', 'c', 'x', 'q', 'N'))
    total = sum(N)
    value = 1 / qpoch_prod([a * q / b, a * q / c], q, total, P.ctx)
    for xi, Ni in zip(x, N):
        value *= qpoch_prod([a * xi * q, a * _qn(P, 1 + total - Ni) / (b * c * xi)], q, Ni, P.ctx)
    return value * sum_finite(LatticeRegion.rect(N), _balanced_term(P, _term_fs(P)), P.ctx)


T9_AN_WATSON_TERM = IdentityRecord(
    id='T9_AN_WATSON_TERM',
    family=Family.TRANSFORMATION,
    anchor='Eq. (anntwatsongl), "gives a terminating $\\mathrm A_n$ Watson transformation"',
    lhs=_t_watson_lhs,
    rhs=_t_watson_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), ParamSpec('e'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['a'] / P['b'], P['a'] / P['c']] + [P['a'] * xi for xi in P['x']]
                          + [P['a'] * xi / v for xi in P['x'] for v in (P['d'], P['e'])]
                          + [P['b'] * P['c'] * xi / P['a'] for xi in P['x']])),
    reduction=Reduction('U_WATSON', lambda P: P.derive(
        {'a': P['a'] * P['x'][0], 'b': P['b'] * P['x'][0], 'c': P['c'] * P['x'][0],
         'd': P['d'], 'e': P['e']}, {'N': P['N'][0]})),
    notes=('f_i = q^{-N_i}: the second group of balanced multiples vanishes through '
           '(f_s;q)_inf = 0 and the infinite products of the first collapse to finite ones',),
)


RECORDS = (
    T1_AN_WATSON, T2_CN_AN_WATSON, T3_MIXED_WATSON, T4_KAJIHARA_EULER, T5_KAJIHARA_SEARS,
    T6_KM_AN, T7_KM_CN, T8_CN_BAILEY_4TERM, T9_AN_WATSON_NT, T9_AN_WATSON_TERM,
)
