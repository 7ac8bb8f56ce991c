#!/usr/bin/env python
"""
Terminating multiple series summations

Holman's hypergeometric sum, the fundamental theorem and its
consequences, the A_n q-binomial theorems, the 3phi2 summations and the
multivariate Jackson summations. Sums run over rectangles
0 <= k_i <= N_i, simplices |k| <= N or the hyperplane |k| = N.
"""
import logging

from ..utils.qkernel import qpoch_prod, an_qbinom
from ..utils.sumengine import LatticeRegion, sum_finite, sum_infinite
from .records import (IdentityRecord, Family, ParamSpec, OrderSpec, Constraint, Reduction,
                      below, distinct_guard, lattice_guard, integer_guard, off_diagonal)
from .terms import pair_ladders, apply_pairs, ladders, a_weyl

logger = logging.getLogger(__name__)

Q = ParamSpec('q', lo=0.15, hi=0.5)
X = ParamSpec('x', 'n')
N_RECT = OrderSpec('N', 'n', 0, 4)
N_SCALAR = OrderSpec('N', 'scalar', 0, 4)
DIMS = (1, 2, 3)

X_DISTINCT = distinct_guard('x', 0.1)
X_RATIOS = lattice_guard(lambda P: off_diagonal(P['x'], lambda u, v: u / v))


def _qn(P, k):
    return P.kernel.qpow(P['q'], k)


def _prod(P, values):
    return P.mp.fprod(values)


# -- S1: Holman's A_n Pfaff-Saalschuetz sum ----------------------------------

def _holman_lhs(P):
    a, b, c, x, N = P['a'], P['b'], P['c'], P['x'], P['N']
    n, kernel = P.n, P.kernel
    total = sum(N)

    def term(k):
        value = 1
        for i in range(n):
            for j in range(i + 1, n):
                value *= (x[i] + k[i] - x[j] - k[j]) / (x[i] - x[j])
        for i in range(n):
            for j in range(n):
                value *= kernel.poch(-N[j] + x[i] - x[j], k[i]) / kernel.poch(1 + x[i] - x[j], k[i])
            value *= kernel.poch(a + x[i], k[i]) * kernel.poch(b + x[i], k[i])
            value /= kernel.poch(c + x[i], k[i]) * kernel.poch(a + b - c + 1 - total + x[i], k[i])
        return value

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _holman_rhs(P):
    a, b, c, x, N = P['a'], P['b'], P['c'], P['x'], P['N']
    kernel = P.kernel
    total = sum(N)
    value = kernel.poch(c - a, total) * kernel.poch(c - b, total)
    for i in range(P.n):
        value /= kernel.poch(c + x[i], N[i]) * kernel.poch(c - a - b + total - N[i] - x[i], N[i])
    return value


def _holman_poles(P):
    a, b, c, x = P['a'], P['b'], P['c'], P['x']
    total = sum(P['N'])
    return (off_diagonal(x, lambda u, v: 1 + u - v) + [c + xi for xi in x]
            + [a + b - c + 1 - total + xi for xi in x])


S1_HOLMAN_PS = IdentityRecord(
    id='S1_HOLMAN_PS',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (1.1), "terminating balanced Pfaff--Saalsch\\"utz ${}_3F_2$ summation"',
    lhs=_holman_lhs,
    rhs=_holman_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), X),
    orders=(N_RECT,),
    guards=(X_DISTINCT, integer_guard(_holman_poles)),
    notes=('first product printed as (x_i+k_i-x_j-x_k)/(x_i-x_j); read as '
           '(x_i+k_i-x_j-k_j)/(x_i-x_j), the A_n factor',),
)


# -- S2: fundamental theorem of A_n series ----------------------------------

def fundamental_term(P):
    a, x = P['a'], P['x']
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j])
    return lambda k: a_weyl(P, k) * apply_pairs(pairs, k)


def _fundamental_lhs(P):
    return sum_finite(LatticeRegion.hyperplane(P.n, P['N']), fundamental_term(P), P.ctx)


def _fundamental_rhs(P):
    return (qpoch_prod([_prod(P, P['a'])], P['q'], P['N'], P.ctx)
            / qpoch_prod([P['q']], P['q'], P['N'], P.ctx))


S2_FUNDAMENTAL = IdentityRecord(
    id='S2_FUNDAMENTAL',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (1.2), "fundamental theorem of  $\\mathrm A_n$ series"',
    lhs=_fundamental_lhs,
    rhs=_fundamental_rhs,
    dims=DIMS,
    params=(ParamSpec('a', 'n'), X, Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS),
)


# -- S3: A_n 6phi5 ----------------------------------------------------------

def _an65_lhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    n = P.n
    pairs = pair_ladders(P, lambda i, j: c[j] * x[i] / x[j])
    ax = ladders(P, [a * xi for xi in x])
    axc = ladders(P, [a * x[i] * q / c[i] for i in range(n)])
    bx = ladders(P, [b * xi for xi in x])
    axN = ladders(P, [a * xi * _qn(P, 1 + N) for xi in x])
    qN, aqb = ladders(P, [_qn(P, -N), a * q / b])
    z = a * _qn(P, 1 + N) / (b * _prod(P, c))

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(pairs, k)
        for i in range(n):
            value *= (1 - a * x[i] * _qn(P, k[i] + K)) / (1 - a * x[i])
            value *= ax[i].get(K) * bx[i].get(k[i]) * axc[i].inv(K) * axN[i].inv(k[i])
        return value * qN.get(K) * aqb.inv(K) * z ** K

    return sum_finite(LatticeRegion.simplex(n, N), term, P.ctx)


def _an65_rhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    value = qpoch_prod([a * q / (b * _prod(P, c))], q, N, P.ctx) / qpoch_prod([a * q / b], q, N, P.ctx)
    for i in range(P.n):
        value *= qpoch_prod([a * x[i] * q], q, N, P.ctx) / qpoch_prod([a * x[i] * q / c[i]], q, N, P.ctx)
    return value


S3_AN_65 = IdentityRecord(
    id='S3_AN_65',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (an65eq), "terminating $\\mathrm A_n$ ${}_6\\phi_5$ summation"',
    lhs=_an65_lhs,
    rhs=_an65_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c', 'n'), X, Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['a'] * P['q'] / P['b']]
                          + [P['a'] * xi * P['q'] / ci for xi, ci in zip(P['x'], P['c'])])),
)


# -- S4: A_n nonterminating q-binomial theorem ------------------------------

def _an_qbin_nt_lhs(P):
    a, x, z = P['a'], P['x'], P['z']
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j])
    return sum_infinite(P.n, lambda k: a_weyl(P, k) * apply_pairs(pairs, k) * z ** sum(k), P.ctx)


def _an_qbin_nt_rhs(P):
    q, z = P['q'], P['z']
    return (qpoch_prod([_prod(P, P['a']) * z], q, None, P.ctx)
            / qpoch_prod([z], q, None, P.ctx))


S4_AN_QBIN_NT = IdentityRecord(
    id='S4_AN_QBIN_NT',
    family=Family.SERIES_NONTERMINATING,
    anchor='Eq. (ntqbin1), "nonterminating $q$-binomial theorem"',
    lhs=_an_qbin_nt_lhs,
    rhs=_an_qbin_nt_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', 'n'), X, ParamSpec('z', hi=0.6), Q),
    domain=(below('|z| < 1', lambda P: P['z']),),
    window=(below('|z| <= 0.5', lambda P: P['z'], 0.55),),
    guards=(X_DISTINCT, X_RATIOS),
    reduction=Reduction('U_QBIN_NT', lambda P: P.derive({'a': P['a'][0], 'z': P['z']})),
    terminating=False,
)


# -- S5-S10: A_n q-binomial theorems ----------------------------------------

def _first_order(P):
    N = P['N']
    return N[0] if isinstance(N, tuple) else N


def _qbin_reduction(z_of):
    return Reduction('U_QBIN_T', lambda P: P.derive({'z': z_of(P)}, {'N': _first_order(P)}))


def _rect_binomial_sum(P, weight):
    """sum over 0 <= k <= N of the A_n q-binomial coefficient times weight(k)"""
    x, q, N = P['x'], P['q'], P['N']
    return sum_finite(LatticeRegion.rect(N), lambda k: an_qbinom(N, k, x, q, P.ctx) * weight(k), P.ctx)


def _qbin1_rhs(P):
    z = P['z']

    def weight(k):
        K = sum(k)
        return (-1) ** K * _qn(P, K * (K - 1) // 2) * z ** K

    return _rect_binomial_sum(P, weight)


def _qbin2_rhs(P):
    z, x = P['z'], P['x']

    def weight(k):
        K = sum(k)
        value = (-1) ** K * _qn(P, sum(v * (v - 1) // 2 for v in k)) * z ** K
        for i in range(P.n):
            value *= x[i] ** k[i]
        return value

    return _rect_binomial_sum(P, weight)


def _qbin3_lhs(P):
    z, x, q, N = P['z'], P['x'], P['q'], P['N']
    total = sum(N)
    value = 1
    for i in range(P.n):
        value *= qpoch_prod([z * _qn(P, total - N[i]) / x[i]], q, N[i], P.ctx)
    return value


def _qbin3_rhs(P):
    z, x = P['z'], P['x']
    n = P.n

    def weight(k):
        K = sum(k)
        cross = sum(k[i] * k[j] for i in range(n) for j in range(i + 1, n))
        value = (-1) ** K * _qn(P, K * (K - 1) // 2 + cross) * z ** K
        for i in range(n):
            value *= x[i] ** (-k[i])
        return value

    return _rect_binomial_sum(P, weight)


S5_QBIN_RECT = IdentityRecord(
    id='S5_QBIN_RECT',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (qbin1), "the $\\mathrm A_n$ $q$-binomial coefficient"',
    lhs=lambda P: qpoch_prod([P['z']], P['q'], sum(P['N']), P.ctx),
    rhs=_qbin1_rhs,
    dims=DIMS,
    params=(X, ParamSpec('z'), Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS),
    reduction=_qbin_reduction(lambda P: P['z']),
)

S6_QBIN_RECT = IdentityRecord(
    id='S6_QBIN_RECT',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (qbin2), "the $\\mathrm A_n$ $q$-binomial coefficient"',
    lhs=lambda P: P.mp.fprod([qpoch_prod([P['z'] * xi], P['q'], Ni, P.ctx)
                              for xi, Ni in zip(P['x'], P['N'])]),
    rhs=_qbin2_rhs,
    dims=DIMS,
    params=(X, ParamSpec('z'), Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS),
    reduction=_qbin_reduction(lambda P: P['z'] * P['x'][0]),
)

S7_QBIN_RECT = IdentityRecord(
    id='S7_QBIN_RECT',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (qbin3), "the $\\mathrm A_n$ $q$-binomial coefficient"',
    lhs=_qbin3_lhs,
    rhs=_qbin3_rhs,
    dims=DIMS,
    params=(X, ParamSpec('z'), Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS),
    reduction=_qbin_reduction(lambda P: P['z'] / P['x'][0]),
)


def _simplex_binomial_sum(P, weight):
    """sum over |k| <= N of the Vandermonde-type factor, 1/(q x_i/x_j)_{k_i} and (q^-N)_{|k|}"""
    q, N = P['q'], P['N']
    inverse = pair_ladders(P, lambda i, j: 0)
    qN = P.kernel.ladder(_qn(P, -N), q)

    def term(k):
        return a_weyl(P, k) * apply_pairs(inverse, k) * qN.get(sum(k)) * weight(k)

    return sum_finite(LatticeRegion.simplex(P.n, N), term, P.ctx)


def _qbinm1_rhs(P):
    z, N = P['z'], P['N']
    return _simplex_binomial_sum(P, lambda k: _qn(P, N * sum(k)) * z ** sum(k))


def _qbinm2_rhs(P):
    z, x, N = P['z'], P['x'], P['N']
    n = P.n

    def weight(k):
        K = sum(k)
        exponent = N * K - K * (K - 1) // 2 + n * sum(v * (v - 1) // 2 for v in k)
        value = (-1) ** ((n - 1) * K) * _qn(P, exponent) * z ** K
        for i in range(n):
            value *= x[i] ** (n * k[i] - K)
        return value

    return _simplex_binomial_sum(P, weight)


def _qbin4_rhs(P):
    z, x, q, N = P['z'], P['x'], P['q'], P['N']
    n = P.n
    zx = ladders(P, [z / xi for xi in x])

    def weight(k):
        K = sum(k)
        cross = sum(k[i] * k[j] for i in range(n) for j in range(i + 1, n))
        value = _qn(P, N * K + cross) * z ** K
        for i in range(n):
            value *= x[i] ** (-k[i]) * zx[i].get(K - k[i])
        return value

    return _simplex_binomial_sum(P, weight)


S8_QBIN_SIMPLEX = IdentityRecord(
    id='S8_QBIN_SIMPLEX',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (qbinm1), "equivalent with respect to inverting the base"',
    lhs=lambda P: qpoch_prod([P['z']], P['q'], P['N'], P.ctx),
    rhs=_qbinm1_rhs,
    dims=DIMS,
    params=(X, ParamSpec('z'), Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS),
    reduction=_qbin_reduction(lambda P: P['z']),
)

S9_QBIN_SIMPLEX = IdentityRecord(
    id='S9_QBIN_SIMPLEX',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (qbinm2), "equivalent with respect to inverting the base"',
    lhs=lambda P: qpoch_prod([P['z']], P['q'], P['N'], P.ctx),
    rhs=_qbinm2_rhs,
    dims=DIMS,
    params=(X, ParamSpec('z'), Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS),
    reduction=_qbin_reduction(lambda P: P['z']),
)

S10_QBIN_SIMPLEX_BS = IdentityRecord(
    id='S10_QBIN_SIMPLEX_BS',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (qbin4), "Yet another terminating $\\mathrm A_n$ $q$-binomial theorem"',
    lhs=lambda P: P.mp.fprod([qpoch_prod([P['z'] / xi], P['q'], P['N'], P.ctx) for xi in P['x']]),
    rhs=_qbin4_rhs,
    dims=DIMS,
    params=(X, ParamSpec('z'), Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS),
    reduction=_qbin_reduction(lambda P: P['z'] / P['x'][0]),
)


# -- S11-S14: A_n 3phi2 summations ------------------------------------------

def _rect_core(P):
    """Ladders for prod_{i,j} (q^{-N_j} x_i/x_j;q)_{k_i} / (q x_i/x_j;q)_{k_i}"""
    x, N = P['x'], P['N']
    return pair_ladders(P, lambda i, j: _qn(P, -N[j]) * x[i] / x[j])


def _an32f_lhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    core = _rect_core(P)
    ax = ladders(P, [a * xi for xi in x])
    cx = ladders(P, [c * xi for xi in x])
    lb, lbal = ladders(P, [b, a * b * _qn(P, 1 - sum(N)) / c])

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(P.n):
            value *= ax[i].get(k[i]) * cx[i].inv(k[i])
        return value * lb.get(K) * lbal.inv(K) * _qn(P, K)

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _an32f_rhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    total = sum(N)
    value = qpoch_prod([c / a], q, total, P.ctx) / qpoch_prod([c / (a * b)], q, total, P.ctx)
    for i in range(P.n):
        value *= qpoch_prod([c * x[i] / b], q, N[i], P.ctx) / qpoch_prod([c * x[i]], q, N[i], P.ctx)
    return value


S11_AN_32_F = IdentityRecord(
    id='S11_AN_32_F',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (an32feq), "two $\\mathrm A_n$ ${}_3\\phi_2$ summations"',
    lhs=_an32f_lhs,
    rhs=_an32f_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['c'] / (P['a'] * P['b'])] + [P['c'] * xi for xi in P['x']])),
    reduction=Reduction('U_QPS', lambda P: P.derive(
        {'a': P['a'] * P['x'][0], 'b': P['b'], 'c': P['c'] * P['x'][0]}, {'N': P['N'][0]})),
)


def _an32t_lhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    core = _rect_core(P)
    shift = a * b * _qn(P, 1 - sum(N)) / c
    tops = [ladders(P, [a * xi, b * xi]) for xi in x]
    bottoms = [ladders(P, [c * xi, shift * xi]) for xi in x]

    def term(k):
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(P.n):
            for ladder in tops[i]:
                value *= ladder.get(k[i])
            for ladder in bottoms[i]:
                value *= ladder.inv(k[i])
        return value * _qn(P, sum(k))

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _an32t_rhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    total = sum(N)
    value = qpoch_prod([c / a, c / b], q, total, P.ctx)
    for i in range(P.n):
        value /= qpoch_prod([c * x[i], c * _qn(P, total - N[i]) / (a * b * x[i])], q, N[i], P.ctx)
    return value


S12_AN_32_T = IdentityRecord(
    id='S12_AN_32_T',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (an32teq), "two $\\mathrm A_n$ ${}_3\\phi_2$ summations"',
    lhs=_an32t_lhs,
    rhs=_an32t_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['c'] * xi for xi in P['x']]
                          + [P['c'] / (P['a'] * P['b'] * xi) for xi in P['x']])),
    notes=('right side printed with (c x_i q^{|N|-N_i}/ab;q)_{N_i}; n = 1 must give '
           'q-Pfaff-Saalschuetz at a x, b x, c x, which forces c q^{|N|-N_i}/(a b x_i)',),
    reduction=Reduction('U_QPS', lambda P: P.derive(
        {'a': P['a'] * P['x'][0], 'b': P['b'] * P['x'][0], 'c': P['c'] * P['x'][0]}, {'N': P['N'][0]})),
)


def _an32fd_lhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j])
    bx = ladders(P, [b * xi for xi in x])
    cx = ladders(P, [c * xi for xi in x])
    qN, lbal = ladders(P, [_qn(P, -N), _prod(P, a) * b * _qn(P, 1 - N) / c])

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(pairs, k)
        for i in range(P.n):
            value *= bx[i].get(k[i]) * cx[i].inv(k[i])
        return value * qN.get(K) * lbal.inv(K) * _qn(P, K)

    return sum_finite(LatticeRegion.simplex(P.n, N), term, P.ctx)


def _an32fd_rhs(P):
    a, b, c, x, q, N = P['a'], P['b'], P['c'], P['x'], P['q'], P['N']
    value = qpoch_prod([c / b], q, N, P.ctx) / qpoch_prod([c / (_prod(P, a) * b)], q, N, P.ctx)
    for i in range(P.n):
        value *= qpoch_prod([c * x[i] / a[i]], q, N, P.ctx) / qpoch_prod([c * x[i]], q, N, P.ctx)
    return value


S13_AN_32_FD = IdentityRecord(
    id='S13_AN_32_FD',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (an32fdeq), "simple polynomial argument applied"',
    lhs=_an32fd_lhs,
    rhs=_an32fd_rhs,
    dims=DIMS,
    params=(ParamSpec('a', 'n'), ParamSpec('b'), ParamSpec('c'), X, Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['c'] * xi for xi in P['x']]
                          + [P['c'] / (P.A * P['b'])])),
    reduction=Reduction('U_QPS', lambda P: P.derive(
        {'a': P['a'][0], 'b': P['b'] * P['x'][0], 'c': P['c'] * P['x'][0]}, {'N': P['N']})),
)


def _mixed32_lhs(P):
    a, b, x, q, N = P['a'], P['b'], P['x'], P['q'], P['N']
    n, kernel = P.n, P.kernel
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j])
    second = pair_ladders(P, lambda i, j: x[i] * x[j] / a[j], lambda i, j: 0)
    cross = [[kernel.ladder(x[i] * x[j], q) for j in range(n)] for i in range(n)]
    bx = ladders(P, [b * xi * _qn(P, -N) for xi in x])
    qxb = ladders(P, [q * xi / b for xi in x])
    qN = kernel.ladder(_qn(P, -N), q)

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(pairs, k) * apply_pairs(second, k)
        for i in range(n):
            for j in range(i + 1, n):
                value *= cross[i][j].inv(k[i] + k[j])
            value *= bx[i].inv(k[i]) * qxb[i].inv(k[i])
        return value * qN.get(K) * _qn(P, K)

    return sum_finite(LatticeRegion.simplex(n, N), term, P.ctx)


def _mixed32_rhs(P):
    a, b, x, q, N = P['a'], P['b'], P['x'], P['q'], P['N']
    value = 1
    for i in range(P.n):
        value *= (qpoch_prod([q * a[i] / (b * x[i]), q * x[i] / (a[i] * b)], q, N, P.ctx)
                  / qpoch_prod([q / (b * x[i]), q * x[i] / b], q, N, P.ctx))
    return value


S14_MIXED = IdentityRecord(
    id='S14_MIXED',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (dn32fdeq), "considered of ``mixed-type\'\'"',
    lhs=_mixed32_lhs,
    rhs=_mixed32_rhs,
    dims=DIMS,
    params=(ParamSpec('a', 'n'), ParamSpec('b'), X, Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['b'] * xi for xi in P['x']] + [xi / P['b'] for xi in P['x']]
                          + off_diagonal(P['x'], lambda u, v: u * v))),
    reduction=Reduction('U_QPS', lambda P: P.derive(
        {'a': P['a'][0], 'b': P['x'][0] ** 2 / P['a'][0], 'c': P['q'] * P['x'][0] / P['b']},
        {'N': P['N']})),
)


# -- S15-S18: A_n Jackson summations ----------------------------------------

def _jackson_e(P, a, b, c, d, N):
    """a^2 q^{N+1} / (b c d), the balancing parameter of the univariate 8phi7"""
    return a * a * _qn(P, N + 1) / (b * c * d)


def _an87_lhs(P):
    a, b, c, d, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'x', 'q', 'N'))
    n = P.n
    total = sum(N)
    core = _rect_core(P)
    ax = ladders(P, [a * xi for xi in x])
    axN = ladders(P, [a * xi * _qn(P, 1 + total) for xi in x])
    tops = [ladders(P, [d * x[i], a * a * x[i] * _qn(P, 1 + N[i]) / (b * c * d)]) for i in range(n)]
    bottoms = [ladders(P, [a * x[i] * q / b, a * x[i] * q / c]) for i in range(n)]
    lb, lc, ld, lbal = ladders(P, [b, c, a * q / d, b * c * d * _qn(P, -total) / a])

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(n):
            value *= (1 - a * x[i] * _qn(P, k[i] + K)) / (1 - a * x[i])
            value *= ax[i].get(K) * axN[i].inv(K)
            for ladder in tops[i]:
                value *= ladder.get(k[i])
            for ladder in bottoms[i]:
                value *= ladder.inv(k[i])
        return value * lb.get(K) * lc.get(K) * ld.inv(K) * lbal.inv(K) * _qn(P, K)

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _an87_rhs(P):
    a, b, c, d, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'x', 'q', 'N'))
    total = sum(N)
    value = (qpoch_prod([a * q / (b * d), a * q / (c * d)], q, total, P.ctx)
             / qpoch_prod([a * q / d, a * q / (b * c * d)], q, total, P.ctx))
    for i in range(P.n):
        value *= (qpoch_prod([a * x[i] * q, a * x[i] * q / (b * c)], q, N[i], P.ctx)
                  / qpoch_prod([a * x[i] * q / b, a * x[i] * q / c], q, N[i], P.ctx))
    return value


def _an87_reduce(P):
    a, b, c, d, x, N = P['a'], P['b'], P['c'], P['d'], P['x'][0], P['N'][0]
    return P.derive({'a': a * x, 'b': b, 'c': c, 'd': d * x,
                     'e': _jackson_e(P, a * x, b, c, d * x, N)}, {'N': N})


def _jackson_poles(P):
    a, b, c, d, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'x', 'q'))
    return ([a * q / d, b * c * d / a, a * q / b, a * q / c]
            + [a * xi * q / b for xi in x] + [a * xi * q / c for xi in x] + [a * xi * q / d for xi in x]
            + [b * c * d / (a * xi) for xi in x])


S15_AN_JACKSON = IdentityRecord(
    id='S15_AN_JACKSON',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (an87eq), "the following $\\mathrm A_n$ Jackson summation"',
    lhs=_an87_lhs,
    rhs=_an87_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_jackson_poles)),
    reduction=Reduction('U_JACKSON_87', _an87_reduce),
)


def _an87_inv_lhs(P):
    a, b, c, d, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'x', 'q', 'N'))
    n = P.n
    total = sum(N)
    core = _rect_core(P)
    bcd = b * c * d
    outer = [ladders(P, [bcd / (a * xi), d / xi]) for xi in x]
    dx = ladders(P, [d / xi for xi in x])
    bal = ladders(P, [bcd * _qn(P, -N[i]) / (a * x[i]) for i in range(n)])
    top = ladders(P, [a * a * xi * _qn(P, 1 + total) / bcd for xi in x])
    bottom = ladders(P, [a * xi * q / d for xi in x])
    la, lb, lc, laN, lab, lac = ladders(P, [a, b, c, a * _qn(P, 1 + total), a * q / b, a * q / c])

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(core, k)
        for i in range(n):
            rest = K - k[i]
            value *= outer[i][0].get(rest) * outer[i][1].inv(rest)
            value *= dx[i].get(K) * bal[i].inv(K)
            value *= top[i].get(k[i]) * bottom[i].inv(k[i])
        value *= (1 - a * _qn(P, 2 * K)) / (1 - a)
        value *= la.get(K) * lb.get(K) * lc.get(K) * laN.inv(K) * lab.inv(K) * lac.inv(K)
        return value * _qn(P, K)

    return sum_finite(LatticeRegion.rect(N), term, P.ctx)


def _an87_inv_rhs(P):
    a, b, c, d, x, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'x', 'q', 'N'))
    total = sum(N)
    value = (qpoch_prod([a * q, a * q / (b * c)], q, total, P.ctx)
             / qpoch_prod([a * q / b, a * q / c], q, total, P.ctx))
    for i in range(P.n):
        axq = a * x[i] * q
        value *= (qpoch_prod([axq / (b * d), axq / (c * d)], q, N[i], P.ctx)
                  / qpoch_prod([axq / d, axq / (b * c * d)], q, N[i], P.ctx))
    return value


def _an87_inv_reduce(P):
    a, b, c, d, x, N = P['a'], P['b'], P['c'], P['d'], P['x'][0], P['N'][0]
    return P.derive({'a': a, 'b': b, 'c': c, 'd': d / x,
                     'e': _jackson_e(P, a, b, c, d / x, N)}, {'N': N})


def _jackson_inv_poles(P):
    a, b, c, d, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'x', 'q'))
    return ([a * q / b, a * q / c, a] + [d / xi for xi in x] + [b * c * d / (a * xi) for xi in x]
            + [a * xi * q / d for xi in x])


S16_AN_JACKSON_INV = IdentityRecord(
    id='S16_AN_JACKSON_INV',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (an87eq2), "by multivariable matrix inversion"',
    lhs=_an87_inv_lhs,
    rhs=_an87_inv_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), X, Q),
    orders=(N_RECT,),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_jackson_inv_poles)),
    reduction=Reduction('U_JACKSON_87', _an87_inv_reduce),
    notes=('right side printed with prod_i (ax_iq/bd, ax_iq/bc;q)_{N_i}; the left side is '
           'symmetric in b, c and the n = 1 case is Jackson with d -> d/x, both forcing '
           '(ax_iq/bd, ax_iq/cd;q)_{N_i}',),
)


def _gr_b4(P):
    a, q, N = P['a'], P['q'], P['N']
    return a * a * _qn(P, N + 1) / (P['b1'] * P['b2'] * P['b3'] * P.X ** 2)


def _gr_bs(P):
    return [P['b1'], P['b2'], P['b3'], P['b4']]


def _gr_lhs(P):
    a, x, q, N = P['a'], P['x'], P['q'], P['N']
    n, kernel = P.n, P.kernel
    bs = _gr_bs(P)
    cross = [[kernel.ladder(x[i] * x[j], q) for j in range(n)] for i in range(n)]
    inverse = pair_ladders(P, lambda i, j: 0)
    ax = ladders(P, [a * xi for xi in x])
    aqx = ladders(P, [a * q / xi for xi in x])
    axN = ladders(P, [a * xi * _qn(P, 1 + N) for xi in x])
    xb = [ladders(P, [xi * bj for bj in bs]) for xi in x]
    aqb = ladders(P, [a * q / bj for bj in bs])
    qN = kernel.ladder(_qn(P, -N), q)

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(inverse, k)
        for i in range(n):
            for j in range(i + 1, n):
                value *= cross[i][j].get(k[i] + k[j])
            value *= (1 - a * x[i] * _qn(P, k[i] + K)) / (1 - a * x[i])
            value *= ax[i].get(K) * aqx[i].inv(K - k[i]) * axN[i].inv(k[i])
            for ladder in xb[i]:
                value *= ladder.get(k[i])
        for ladder in aqb:
            value *= ladder.inv(K)
        return value * qN.get(K) * _qn(P, K)

    return sum_finite(LatticeRegion.simplex(n, N), term, P.ctx)


def _gr_rhs(P):
    a, x, q, N = P['a'], P['x'], P['q'], P['N']
    b1, b2, b3 = P['b1'], P['b2'], P['b3']
    X = P.X
    aq = a * q
    value = 1 / qpoch_prod([aq / b1, aq / b2, aq / b3, aq / (b1 * b2 * b3 * X * X)], q, N, P.ctx)
    for xi in x:
        value *= qpoch_prod([aq * xi], q, N, P.ctx) / qpoch_prod([aq / xi], q, N, P.ctx)
    if P.n % 2:
        branch = [aq / X, aq / (b1 * b2 * X), aq / (b1 * b3 * X), aq / (b2 * b3 * X)]
    else:
        branch = [aq / (b1 * X), aq / (b2 * X), aq / (b3 * X), aq / (b1 * b2 * b3 * X)]
    return value * qpoch_prod(branch, q, N, P.ctx)


def _gr_reduce(P):
    x = P['x'][0]
    a, N = P['a'], P['N']
    b1, b2, b3 = x * P['b1'], x * P['b2'], x * P['b3']
    return P.derive({'a': a * x, 'b': b1, 'c': b2, 'd': b3,
                     'e': _jackson_e(P, a * x, b1, b2, b3, N)}, {'N': N})


S17_GUSTAFSON_RAKHA = IdentityRecord(
    id='S17_GUSTAFSON_RAKHA',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (grsum), "due to Gustafson and Rakha"',
    lhs=_gr_lhs,
    rhs=_gr_rhs,
    dims=DIMS,
    params=(ParamSpec('a'), ParamSpec('b1'), ParamSpec('b2'), ParamSpec('b3'), X, Q),
    orders=(N_SCALAR,),
    constraints=(Constraint('b4', 'a^2 q^(N+1) / (b1 b2 b3 X^2)', _gr_b4),),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['a'] * P['q'] / bj for bj in _gr_bs(P)]
                          + [P['a'] / xi for xi in P['x']]
                          + [P['a'] * P['q'] / (P['b1'] * P['b2'] * P['b3'] * P.X ** 2)])),
    reduction=Reduction('U_JACKSON_87', _gr_reduce),
    notes=('summand factor printed as (ax_iq^{1+N_i};q)_{k_i} although the sum has the single '
           'order N; read as (ax_iq^{1+N};q)_{k_i}, which the n = 1 Jackson case requires',),
)


def _det_lhs(P):
    t0, t, b, d, x, q, N = (P[k] for k in ('t0', 't', 'b', 'd', 'x', 'q', 'N'))
    n, mp, kernel = P.n, P.mp, P.kernel
    T = _prod(P, t)
    pairs = pair_ladders(P, lambda i, j: q * x[i] / (t[i] * x[j]))
    skew = [[(kernel.ladder(t[j] * x[i] / x[j], q), kernel.ladder(q * x[i] / (t[i] * x[j]), q))
             for j in range(n)] for i in range(n)]
    outer = [ladders(P, [d * _qn(P, -N) / (t0 * xi), d * ti * _qn(P, -N) / (t0 * xi)])
             for xi, ti in zip(x, t)]
    tops = [ladders(P, [t0 * x[i] * q / t[i], b * x[i], t0 * t0 * x[i] * _qn(P, 1 + N) / (b * d * T)])
            for i in range(n)]
    bottoms = [ladders(P, [t0 * x[i] * q, t0 * x[i] * q / (d * t[i]), t0 * x[i] * _qn(P, 1 + N) / t[i]])
               for i in range(n)]
    ld, lqN, lbd, lbt = ladders(P, [d, _qn(P, -N), b * d * _qn(P, -N) / t0, t0 * q / (b * T)])

    def entry(i, j, k):
        y = x[i] * _qn(P, k[i])
        ratio = (1 - t0 * y) / (1 - t0 * y / t[i])
        for s in range(n):
            ratio *= (y - x[s]) / (y / t[i] - x[s])
        return y ** (n - 1 - j) * (1 - t[i] ** (j - n) * ratio)

    def term(k):
        K = sum(k)
        value = apply_pairs(pairs, k)
        for i in range(n):
            for j in range(i + 1, n):
                up, down = skew[i][j]
                value *= up.get(k[i] - k[j]) * down.inv(k[i] - k[j]) / (x[i] - x[j])
        value *= mp.det(mp.matrix([[entry(i, j, k) for j in range(n)] for i in range(n)]))
        for i in range(n):
            rest = K - k[i]
            value *= outer[i][0].get(rest) * outer[i][1].inv(rest)
            for ladder in tops[i]:
                value *= ladder.get(k[i])
            for ladder in bottoms[i]:
                value *= ladder.inv(k[i])
            value *= _qn(P, (1 - i) * k[i]) * t[i] ** (i * k[i] + sum(k[i + 1:]))
        return value * ld.get(K) * lqN.get(K) * lbd.inv(K) * lbt.inv(K)

    return sum_finite(LatticeRegion.simplex(n, N), term, P.ctx)


def _det_rhs(P):
    t0, t, b, d, x, q, N = (P[k] for k in ('t0', 't', 'b', 'd', 'x', 'q', 'N'))
    T = _prod(P, t)
    value = (qpoch_prod([t0 * q / b, t0 * q / (b * d * T)], q, N, P.ctx)
             / qpoch_prod([t0 * q / (b * d), t0 * q / (b * T)], q, N, P.ctx))
    for xi, ti in zip(x, t):
        value *= (qpoch_prod([t0 * xi * q / ti, t0 * xi * q / d], q, N, P.ctx)
                  / qpoch_prod([t0 * xi * q, t0 * xi * q / (d * ti)], q, N, P.ctx))
    return value


def _det_reduce(P):
    t0, t, b, d, x, N = P['t0'], P['t'][0], P['b'], P['d'], P['x'][0], P['N']
    A = t0 * x / t
    return P.derive({'a': A, 'b': 1 / t, 'c': d, 'd': b * x,
                     'e': _jackson_e(P, A, 1 / t, d, b * x, N)}, {'N': N})


def _det_poles(P):
    t0, t, b, d, x, q = (P[k] for k in ('t0', 't', 'b', 'd', 'x', 'q'))
    T = _prod(P, t)
    values = [b * d / t0, t0 / (b * T)]
    for xi, ti in zip(x, t):
        values += [t0 * xi, t0 * xi / (d * ti), t0 * xi / ti, d * ti / (t0 * xi)]
    pairs = list(zip(x, t))
    return (values + off_diagonal(pairs, lambda u, v: u[0] / (u[1] * v[0]))
            + off_diagonal(pairs, lambda u, v: v[1] * u[0] / v[0]))


S18_AN_JACKSON_DET = IdentityRecord(
    id='S18_AN_JACKSON_DET',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (an87neq), "intimately related to Macdonald polynomials"',
    lhs=_det_lhs,
    rhs=_det_rhs,
    dims=DIMS,
    params=(ParamSpec('t0'), ParamSpec('t', 'n', lo=0.3), ParamSpec('b'), ParamSpec('d'), X, Q),
    orders=(N_SCALAR,),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_det_poles)),
    reduction=Reduction('U_JACKSON_87', _det_reduce),
)


RECORDS = (
    S1_HOLMAN_PS, S2_FUNDAMENTAL, S3_AN_65, S4_AN_QBIN_NT,
    S5_QBIN_RECT, S6_QBIN_RECT, S7_QBIN_RECT, S8_QBIN_SIMPLEX, S9_QBIN_SIMPLEX, S10_QBIN_SIMPLEX_BS,
    S11_AN_32_F, S12_AN_32_T, S13_AN_32_FD, S14_MIXED,
    S15_AN_JACKSON, S16_AN_JACKSON_INV, S17_GUSTAFSON_RAKHA, S18_AN_JACKSON_DET,
)
