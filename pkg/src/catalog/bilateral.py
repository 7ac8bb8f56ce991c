#!/usr/bin/env python
"""
Bilateral multiple series summations

Gustafson's A_n Dougall and 1psi1 sums, Milne's and Macdonald's 1psi1
variants, the A_n, C_n and B_n-type very-well-poised 6psi6 sums and the
zero-sum (A_n over Z^{n+1}) evaluations. Every left side is summed over
symmetric boxes by sum_bilateral; every right side is a finite product of
infinite q-shifted factorials or Gamma values.
"""
import logging

from ..utils.numerics import gamma
from ..utils.qkernel import qpoch_prod
from ..utils.sumengine import LatticeRegion, sum_bilateral
from .records import (IdentityRecord, Family, ParamSpec, OrderSpec, DomainCondition, Reduction,
                      below, distinct_guard, lattice_guard, integer_guard, off_diagonal)
from .terms import pair_ladders, apply_pairs, ladders, a_weyl, c_weyl

logger = logging.getLogger(__name__)

Q = ParamSpec('q', lo=0.15, hi=0.5)
X = ParamSpec('x', 'n', lo=0.6, hi=1.0)
X_WIDE = ParamSpec('x', 'n+1', lo=0.6, hi=1.0)
SIGMA = OrderSpec('sigma', 'scalar', 0, 1)
DIMS = (1, 2)

X_DISTINCT = distinct_guard('x', 0.1)
X_RATIOS = lattice_guard(lambda P: off_diagonal(P['x'], lambda u, v: u / v))

A_WIDE = ParamSpec('a', lo=0.5, hi=0.95)
WINDOW = 0.65


def _qn(P, k):
    return P.kernel.qpow(P['q'], k)


def _inf(P, values):
    return qpoch_prod(values, P['q'], None, P.ctx)


def _pairs_inf(P, top, bottom):
    """prod_{i,j} (top(i,j);q)_inf / (bottom(i,j);q)_inf over the x sequence"""
    n = len(P['x'])
    value = 1
    for i in range(n):
        for j in range(n):
            value *= _inf(P, top(i, j)) / _inf(P, bottom(i, j))
    return value


def _g(P):
    return lambda z: gamma(z, P.ctx)


# -- B1: Gustafson's A_n Dougall 2H2 (q = 1) --------------------------------

def _gus_dougall_lhs(P):
    a, b, x = P['a'], P['b'], P['x']
    n, kernel = P.n, P.kernel

    def term(k):
        value = 1
        for i in range(n):
            for j in range(i + 1, n):
                value *= (x[i] + k[i] - x[j] - k[j]) / (x[i] - x[j])
        for i in range(n):
            for j in range(n + 1):
                value *= kernel.poch(a[j] + x[i], k[i]) / kernel.poch(b[j] + x[i], k[i])
        return value

    return sum_bilateral(LatticeRegion.bilateral(n), term, P.ctx)


def _gus_dougall_rhs(P):
    a, b, x = P['a'], P['b'], P['x']
    n, g = P.n, _g(P)
    value = g(-n + sum(b) - sum(a))
    for i in range(n):
        for j in range(n + 1):
            value *= g(1 - a[j] - x[i]) * g(b[j] + x[i])
    for i in range(n + 1):
        for j in range(n + 1):
            value /= g(b[j] - a[i])
    for i in range(n):
        for j in range(i + 1, n):
            value /= g(1 - x[i] + x[j]) * g(1 + x[i] - x[j])
    return value


def _real_excess(P, offset):
    return [(0, (sum(P['b']) - sum(P['a'])).real - offset)]


B1_AN_DOUGALL = IdentityRecord(
    id='B1_AN_DOUGALL',
    family=Family.BILATERAL,
    anchor="Sec. 2.4, \"proved by Gustafson in\"",
    lhs=_gus_dougall_lhs,
    rhs=_gus_dougall_rhs,
    dims=DIMS,
    params=(ParamSpec('a', 'n+1', shift=-6.0), ParamSpec('b', 'n+1', shift=6.0),
            ParamSpec('x', 'n')),
    domain=(DomainCondition('Re(b_1+...+b_{n+1} - a_1-...-a_{n+1}) > n',
                            lambda P: _real_excess(P, P.n)),),
    guards=(X_DISTINCT, integer_guard(lambda P: off_diagonal(P['x'], lambda u, v: u - v))),
    reduction=Reduction('U_DOUGALL_2H2', lambda P: P.derive(
        {'a': P['a'][0] + P['x'][0], 'b': P['a'][1] + P['x'][0],
         'c': P['b'][0] + P['x'][0], 'd': P['b'][1] + P['x'][0]})),
    notes=('right side printed with Gamma(1 - a_j - u_i) Gamma(b_j + u_i) and '
           'Gamma(1 - u_i + u_j); read u as the summation shifts x',),
    terminating=False,
)


# -- B2: Gustafson's A_n 1psi1 ----------------------------------------------

def _gus_arg(P):
    return P.B * _qn(P, 1 - P.n) / P.A


def _gus_1psi1_lhs(P):
    a, b, x, z = P['a'], P['b'], P['x'], P['z']
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j], lambda i, j: b[j] * x[i] / x[j])
    return sum_bilateral(LatticeRegion.bilateral(P.n),
                         lambda k: a_weyl(P, k) * apply_pairs(pairs, k) * z ** sum(k), P.ctx)


def _gus_1psi1_rhs(P):
    a, b, x, q, z = P['a'], P['b'], P['x'], P['q'], P['z']
    A = P.A
    value = _inf(P, [A * z, q / (A * z)]) / _inf(P, [z, _gus_arg(P) / z])
    return value * _pairs_inf(P, lambda i, j: [b[j] * x[i] / (a[i] * x[j]), q * x[i] / x[j]],
                              lambda i, j: [q * x[i] / (a[i] * x[j]), b[j] * x[i] / x[j]])


def _ramanujan_domain(small, text):
    return DomainCondition(f'|{text}| < |z| < 1',
                           lambda P: [(abs(small(P)), abs(P['z'])), (abs(P['z']), 1)])


def _ramanujan_window(small, text):
    return (below('|z| <= 0.6', lambda P: P['z'], WINDOW),
            below(f'|{text} z^-1| <= 0.6', lambda P: small(P) / P['z'], WINDOW))


def _ratio_lattice(*names):
    """Keep p_j x_i/x_j for every listed sequence parameter off the q-lattice"""
    def values(P):
        x = P['x']
        n = len(x)
        return [P[name][j] * x[i] / x[j] for name in names for i in range(n) for j in range(n)]
    return lattice_guard(values)


B2_AN_1PSI1_GUS = IdentityRecord(
    id='B2_AN_1PSI1_GUS',
    family=Family.BILATERAL,
    anchor="Eq. (1psi1gus), \"extension of Ramanujan's ${}_1\\psi_1$\"",
    lhs=_gus_1psi1_lhs,
    rhs=_gus_1psi1_rhs,
    dims=DIMS,
    params=(ParamSpec('a', 'n', lo=0.5, hi=0.95), ParamSpec('b', 'n', lo=0.1, hi=0.45), X,
            ParamSpec('z', lo=0.3, hi=0.8), Q),
    domain=(_ramanujan_domain(_gus_arg, 'B q^(1-n) / A'),),
    window=_ramanujan_window(_gus_arg, 'B q^(1-n) / A'),
    guards=(X_DISTINCT, X_RATIOS, _ratio_lattice('a', 'b'),
            lattice_guard(lambda P: [P.A * P['z']])),
    reduction=Reduction('U_RAMANUJAN_1PSI1', lambda P: P.derive(
        {'a': P['a'][0], 'b': P['b'][0], 'z': P['z']})),
    terminating=False,
)


# -- B3: Milne's A_n 1psi1 --------------------------------------------------

def _milne_arg(P):
    return P.B * _qn(P, 1 - P.n) / P['a']


def _milne_1psi1_lhs(P):
    a, b, x, z = P['a'], P['b'], P['x'], P['z']
    n = P.n
    inverse = pair_ladders(P, lambda i, j: 0, lambda i, j: b[j] * x[i] / x[j])
    la = P.kernel.ladder(a, P['q'])

    def term(k):
        K = sum(k)
        exponent = -(K * (K - 1) // 2) + n * sum(v * (v - 1) // 2 for v in k)
        value = a_weyl(P, k) * apply_pairs(inverse, k) * la.get(K)
        for i in range(n):
            value *= x[i] ** (n * k[i] - K)
        return value * (-1) ** ((n - 1) * K) * _qn(P, exponent) * z ** K

    return sum_bilateral(LatticeRegion.bilateral(n), term, P.ctx)


def _milne_1psi1_rhs(P):
    a, b, x, q, z = P['a'], P['b'], P['x'], P['q'], P['z']
    small = _milne_arg(P)
    value = _inf(P, [a * z, q / (a * z), small]) / _inf(P, [z, small / z, q / a])
    return value * _pairs_inf(P, lambda i, j: [q * x[i] / x[j]], lambda i, j: [b[j] * x[i] / x[j]])


B3_AN_1PSI1_MS = IdentityRecord(
    id='B3_AN_1PSI1_MS',
    family=Family.BILATERAL,
    anchor="Eq. (1psi1b), \"Another $\\mathrm A_n$ ${}_1\\psi_1$ summation theorem\"",
    lhs=_milne_1psi1_lhs,
    rhs=_milne_1psi1_rhs,
    dims=DIMS,
    params=(A_WIDE, ParamSpec('b', 'n', lo=0.1, hi=0.45), X, ParamSpec('z', lo=0.3, hi=0.8), Q),
    domain=(_ramanujan_domain(_milne_arg, 'B q^(1-n) / a'),),
    window=_ramanujan_window(_milne_arg, 'B q^(1-n) / a'),
    guards=(X_DISTINCT, X_RATIOS, _ratio_lattice('b'),
            lattice_guard(lambda P: [P['a'], P['a'] * P['z']])),
    reduction=Reduction('U_RAMANUJAN_1PSI1', lambda P: P.derive(
        {'a': P['a'], 'b': P['b'][0], 'z': P['z']})),
    terminating=False,
)


# -- B4, B5: Macdonald-type A_n 1psi1 and its |k| = N slice -----------------

def _macdonald_pair_term(P):
    """k -> prod_{i<j} V_ij (x_i/t x_j)_{k_i-k_j} / (q t x_i/x_j)_{k_i-k_j} q^{-k_j} t^{k_i-k_j}"""
    x, t, q = P['x'], P['t'], P['q']
    n, kernel = P.n, P.kernel
    pairs = {(i, j): (kernel.ladder(x[i] / (t * x[j]), q), kernel.ladder(q * t * x[i] / x[j], q))
             for i in range(n) for j in range(i + 1, n)}

    def term(k):
        value = a_weyl(P, k)
        for (i, j), (up, down) in pairs.items():
            d = k[i] - k[j]
            value *= up.get(d) * down.inv(d) * _qn(P, -k[j]) * t ** d
        return value

    return term


def _macdonald_tail(P):
    """prod_{i=1}^{n-1} (q t^{i+1})_inf / (t^i)_inf times prod_{i,j} (q x_i/x_j)_inf / (q t x_i/x_j)_inf"""
    x, t, q = P['x'], P['t'], P['q']
    value = 1
    for i in range(1, P.n):
        value *= _inf(P, [q * t ** (i + 1)]) / _inf(P, [t ** i])
    return value * _pairs_inf(P, lambda i, j: [q * x[i] / x[j]], lambda i, j: [q * t * x[i] / x[j]])


def _mac_1psi1_lhs(P):
    a, b, z, q = P['a'], P['b'], P['z'], P['q']
    pair_term = _macdonald_pair_term(P)
    la, lb = ladders(P, [a, b])

    def term(k):
        K = sum(k)
        return pair_term(k) * la.get(K) * lb.inv(K) * z ** K

    return sum_bilateral(LatticeRegion.bilateral(P.n), term, P.ctx)


def _mac_1psi1_rhs(P):
    a, b, z, t, q = P['a'], P['b'], P['z'], P['t'], P['q']
    return (_inf(P, [a * z, q / (a * z), b / a, q * t]) / _inf(P, [z, b / (a * z), q / a, b])
            * _macdonald_tail(P))


def _t_lattice(P):
    t, x = P['t'], P['x']
    return ([t ** i for i in range(1, P.n)]
            + off_diagonal(x, lambda u, v: u / (t * v)) + off_diagonal(x, lambda u, v: t * u / v))


T = ParamSpec('t', lo=0.15, hi=0.6)


B4_AN_1PSI1_MAC = IdentityRecord(
    id='B4_AN_1PSI1_MAC',
    family=Family.BILATERAL,
    anchor="Eq. (mac11), \"implicitly contained in\"",
    lhs=_mac_1psi1_lhs,
    rhs=_mac_1psi1_rhs,
    dims=DIMS,
    params=(A_WIDE, ParamSpec('b', lo=0.1, hi=0.5), T, X, ParamSpec('z', lo=0.3, hi=0.8), Q),
    domain=(below('|t| < 1', lambda P: P['t']),
            DomainCondition('|b/a| < |z| < 1', lambda P: [(abs(P['b'] / P['a']), abs(P['z'])),
                                                          (abs(P['z']), 1)])),
    window=(below('|z| <= 0.6', lambda P: P['z'], WINDOW),
            below('|b/(a z)| <= 0.6', lambda P: P['b'] / (P['a'] * P['z']), WINDOW)),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_t_lattice),
            lattice_guard(lambda P: [P['a'], P['b'], P['a'] * P['z']])),
    reduction=Reduction('U_RAMANUJAN_1PSI1', lambda P: P.derive(
        {'a': P['a'], 'b': P['b'], 'z': P['z']})),
    terminating=False,
)


def _mac_slice_lhs(P):
    return sum_bilateral(LatticeRegion.zero_sum(P.n, P['N']), _macdonald_pair_term(P), P.ctx)


def _mac_slice_rhs(P):
    q, t = P['q'], P['t']
    return _inf(P, [q * t]) / _inf(P, [q]) * _macdonald_tail(P)


B5_CONSTRAINED = IdentityRecord(
    id='B5_CONSTRAINED',
    family=Family.BILATERAL,
    anchor="Eq. (mac11t), \"right-hand side is independent of $N$\"",
    lhs=_mac_slice_lhs,
    rhs=_mac_slice_rhs,
    dims=DIMS,
    params=(T, X, Q),
    orders=(OrderSpec('N', 'scalar', 0, 3),),
    domain=(below('|t| < 1', lambda P: P['t']),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_t_lattice)),
    notes=('the right side does not involve N; the suite additionally compares the '
           'left side at N and N + 1',),
    terminating=False,
)


# -- B6: A_n very-well-poised 6psi6 ----------------------------------------

def _an66_arg(P):
    a, c, d = P['a'], P['c'], P['d']
    return a ** (P.n + 1) * P['q'] / (P.B * c * d * P.E)


def _an66_lhs(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    n = P.n
    pairs = pair_ladders(P, lambda i, j: b[j] * x[i] / x[j], lambda i, j: a * x[i] * q / (e[j] * x[j]))
    ex = ladders(P, [e[i] * x[i] for i in range(n)])
    cx = ladders(P, [c * xi for xi in x])
    axb = ladders(P, [a * x[i] * q / b[i] for i in range(n)])
    axd = ladders(P, [a * xi * q / d for xi in x])
    ld, lac = ladders(P, [d, a * q / c])
    z = _an66_arg(P)

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(pairs, k)
        for i in range(n):
            value *= (1 - a * x[i] * _qn(P, k[i] + K)) / (1 - a * x[i])
            value *= ex[i].get(K) * cx[i].get(k[i]) * axb[i].inv(K) * axd[i].inv(k[i])
        return value * ld.get(K) * lac.inv(K) * z ** K

    return sum_bilateral(LatticeRegion.bilateral(n), term, P.ctx)


def _an66_rhs(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    B, E = P.B, P.E
    value = (_inf(P, [a * q / (B * c), a ** P.n * q / (d * E), a * q / (c * d)])
             / _inf(P, [_an66_arg(P), a * q / c, q / d]))
    value *= _pairs_inf(P, lambda i, j: [a * x[i] * q / (b[i] * e[j] * x[j]), q * x[i] / x[j]],
                        lambda i, j: [q * x[i] / (b[i] * x[j]), a * x[i] * q / (e[j] * x[j])])
    for i in range(P.n):
        axq = a * x[i] * q
        value *= (_inf(P, [a * q / (c * e[i] * x[i]), axq / (b[i] * d), axq, q / (a * x[i])])
                  / _inf(P, [axq / b[i], q / (e[i] * x[i]), q / (c * x[i]), axq / d]))
    return value


def _an66_poles(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    return ([d, a * q / c, a] + [a * xi for xi in x] + [c * xi for xi in x]
            + [e[i] * x[i] for i in range(P.n)] + [a * xi * q / d for xi in x])


def _vwp_params(*names, lo=0.5, hi=0.95, shape='scalar'):
    return tuple(ParamSpec(name, shape, lo=lo, hi=hi) for name in names)


B6_AN_6PSI6 = IdentityRecord(
    id='B6_AN_6PSI6',
    family=Family.BILATERAL,
    anchor="Eq. (r66gl), \"an $\\mathrm A_n$ extension of the ${}_6\\psi_6$\"",
    lhs=_an66_lhs,
    rhs=_an66_rhs,
    dims=DIMS,
    params=((ParamSpec('a', lo=0.2, hi=0.8), ParamSpec('b', 'n', lo=0.5, hi=0.95))
            + _vwp_params('c', 'd') + (ParamSpec('e', 'n', lo=0.5, hi=0.95), X, Q)),
    domain=(below('|a^(n+1) q / (B c d E)| < 1', _an66_arg),),
    window=(below('|a^(n+1) q / (B c d E)| <= 0.6', _an66_arg, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, _ratio_lattice('b'), lattice_guard(_an66_poles)),
    reduction=Reduction('U_BAILEY_6PSI6', lambda P: P.derive(
        {'a': P['a'] * P['x'][0], 'b': P['b'][0], 'c': P['e'][0] * P['x'][0],
         'd': P['c'] * P['x'][0], 'e': P['d']})),
    notes=('the convergence condition is stated with B = b_1...b_n, the same product '
           'that enters the series argument',),
    terminating=False,
)


# -- B7: A_n 1psi1 over the zero-sum lattice in Z^{n+1} --------------------

def _zero_sum_arg(P):
    return P.B * _qn(P, -P.n) / P.A


def _zero_1psi1_lhs(P):
    a, b, x = P['a'], P['b'], P['x']
    pairs = pair_ladders(P, lambda i, j: a[j] * x[i] / x[j], lambda i, j: b[j] * x[i] / x[j])
    return sum_bilateral(LatticeRegion.zero_sum(P.n + 1),
                         lambda k: a_weyl(P, k) * apply_pairs(pairs, k), P.ctx)


def _zero_1psi1_rhs(P):
    a, b, x, q = P['a'], P['b'], P['x'], P['q']
    Bq = P.B * _qn(P, -P.n)
    value = _inf(P, [Bq, q / P.A]) / _inf(P, [q, _zero_sum_arg(P)])
    return value * _pairs_inf(P, lambda i, j: [q * x[i] / x[j], b[j] * x[i] / (a[i] * x[j])],
                              lambda i, j: [b[j] * x[i] / x[j], x[i] * q / (a[i] * x[j])])


B7_AN_6PSI6_COMPACT = IdentityRecord(
    id='B7_AN_6PSI6_COMPACT',
    family=Family.BILATERAL,
    anchor="Eq. (an1psi1cglN), \"more compact form\"",
    lhs=_zero_1psi1_lhs,
    rhs=_zero_1psi1_rhs,
    dims=DIMS,
    params=(ParamSpec('a', 'n+1', lo=0.5, hi=0.95), ParamSpec('b', 'n+1', lo=0.1, hi=0.4), X_WIDE, Q),
    domain=(below('|B q^(-n) / A| < 1', _zero_sum_arg),),
    window=(below('|B q^(-n) / A| <= 0.6', _zero_sum_arg, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, _ratio_lattice('a', 'b'), lattice_guard(lambda P: [P.A])),
    terminating=False,
)


# -- B8: A_n 2H2 over the zero-sum lattice (q = 1) -------------------------

def _zero_2h2_lhs(P):
    a, b, x = P['a'], P['b'], P['x']
    dim, kernel = P.n + 1, P.kernel

    def term(k):
        value = 1
        for i in range(dim):
            for j in range(i + 1, dim):
                value *= (x[i] + k[i] - x[j] - k[j]) / (x[i] - x[j])
            for j in range(dim):
                shift = x[i] - x[j]
                value *= kernel.poch(a[j] + shift, k[i]) / kernel.poch(b[j] + shift, k[i])
        return value

    return sum_bilateral(LatticeRegion.zero_sum(dim), term, P.ctx)


def _zero_2h2_rhs(P):
    a, b, x = P['a'], P['b'], P['x']
    n, g = P.n, _g(P)
    value = g(-n + sum(b) - sum(a)) / (g(1 - sum(a)) * g(-n + sum(b)))
    for i in range(n + 1):
        for j in range(n + 1):
            shift = x[i] - x[j]
            value *= g(b[j] + shift) * g(1 - a[i] + shift) / (g(1 + shift) * g(b[j] - a[i] + shift))
    return value


B8_AN_5H5 = IdentityRecord(
    id='B8_AN_5H5',
    family=Family.BILATERAL,
    anchor="Eq. (an2h2cglN), \"formally lets $q\\to 1$\"",
    lhs=_zero_2h2_lhs,
    rhs=_zero_2h2_rhs,
    dims=DIMS,
    params=(ParamSpec('a', 'n+1', shift=-6.0), ParamSpec('b', 'n+1', shift=6.0),
            ParamSpec('x', 'n+1')),
    domain=(DomainCondition('Re(b_1+...+b_{n+1} - a_1-...-a_{n+1}) > n',
                            lambda P: _real_excess(P, P.n)),),
    guards=(X_DISTINCT, integer_guard(lambda P: off_diagonal(P['x'], lambda u, v: u - v))),
    terminating=False,
)


# -- B9: A_n 6psi6 with a single very-well-poised factor -------------------

def _sch_arg(P):
    a, b, d = P['a'], P['b'], P['d']
    return a ** (P.n + 1) * P['q'] / (b * P.C * d * P.E)


def _sch_lhs(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    n = P.n
    C, E = P.C, P.E
    pairs = pair_ladders(P, lambda i, j: c[j] * x[i] / x[j], lambda i, j: a * x[i] * q / (e[j] * x[j]))
    rest_up = ladders(P, [a * q / (b * C * xi) for xi in x])
    rest_down = ladders(P, [d * E / (a ** n * xi) for xi in x])
    full_up = ladders(P, [d * E / (a ** (n - 1) * e[i] * x[i]) for i in range(n)])
    full_down = ladders(P, [a * c[i] * q / (b * C * x[i]) for i in range(n)])
    bx = ladders(P, [b * xi for xi in x])
    axd = ladders(P, [a * xi * q / d for xi in x])
    lE, laC = ladders(P, [E / a ** (n - 1), a * q / C])
    z = _sch_arg(P)

    def term(k):
        K = sum(k)
        value = a_weyl(P, k) * apply_pairs(pairs, k)
        for i in range(n):
            rest = K - k[i]
            value *= rest_up[i].get(rest) * rest_down[i].inv(rest)
            value *= full_up[i].get(K) * full_down[i].inv(K)
            value *= bx[i].get(k[i]) * axd[i].inv(k[i])
        value *= (1 - a * _qn(P, 2 * K)) / (1 - a)
        return value * lE.get(K) * laC.inv(K) * z ** K

    return sum_bilateral(LatticeRegion.bilateral(n), term, P.ctx)


def _sch_rhs(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    n = P.n
    C, E = P.C, P.E
    value = (_inf(P, [a * q, q / a, a * q / (b * d)])
             / _inf(P, [a * q / C, _sch_arg(P), a ** (n - 1) * q / E]))
    value *= _pairs_inf(P, lambda i, j: [q * x[i] / x[j], a * x[i] * q / (c[i] * e[j] * x[j])],
                        lambda i, j: [q * x[i] / (c[i] * x[j]), a * x[i] * q / (e[j] * x[j])])
    for i in range(n):
        value *= (_inf(P, [a ** n * x[i] * q / (d * E), a * q / (b * e[i] * x[i]),
                           a * q / (b * C * x[i]), a * x[i] * q / (c[i] * d)])
                  / _inf(P, [a ** (n - 1) * e[i] * x[i] * q / (d * E), q / (b * x[i]),
                             a * x[i] * q / d, a * c[i] * q / (b * C * x[i])]))
    return value


def _sch_poles(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    n, C, E = P.n, P.C, P.E
    return ([a, a * q / C, E / a ** (n - 1)] + [b * xi for xi in x] + [a * xi * q / d for xi in x]
            + [d * E / (a ** n * xi) for xi in x] + [a * q / (b * C * xi) for xi in x]
            + [a * c[i] * q / (b * C * x[i]) for i in range(n)])


B9_AN_6PSI6_SCHL = IdentityRecord(
    id='B9_AN_6PSI6_SCHL',
    family=Family.BILATERAL,
    anchor="display after Eq. (an2h2cglN), \"Another $\\mathrm A_n$ very-well-poised\"",
    lhs=_sch_lhs,
    rhs=_sch_rhs,
    dims=DIMS,
    params=((ParamSpec('a', lo=0.2, hi=0.8),) + _vwp_params('b', 'd')
            + _vwp_params('c', 'e', shape='n') + (X, Q)),
    domain=(below('|a^(n+1) q / (b C d E)| < 1', _sch_arg),),
    window=(below('|a^(n+1) q / (b C d E)| <= 0.6', _sch_arg, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, _ratio_lattice('c'), lattice_guard(_sch_poles)),
    reduction=Reduction('U_BAILEY_6PSI6', lambda P: P.derive(
        {'a': P['a'], 'b': P['c'][0], 'c': P['e'][0], 'd': P['b'] * P['x'][0],
         'e': P['d'] / P['x'][0]})),
    notes=('convergence condition printed as |a^(n+1) q / BcdE| < 1; the series argument '
           'is a^(n+1) q / (b C d E) and that is the condition used',),
    terminating=False,
)


# -- B10, B11: C_n and B_n-type 6psi6 --------------------------------------

def _c_pairs(P):
    a, c, e, x, q = P['a'], P['c'], P['e'], P['x'], P['q']
    first = pair_ladders(P, lambda i, j: c[j] * x[i] / x[j], lambda i, j: a * x[i] * x[j] * q / c[j])
    second = pair_ladders(P, lambda i, j: e[j] * x[i] * x[j], lambda i, j: a * x[i] * q / (e[j] * x[j]))
    return first, second


def _c_rhs_core(P):
    """Products shared by the C_n 6psi6 sum and its B_n specialisation"""
    a, c, e, x, q = P['a'], P['c'], P['e'], P['x'], P['q']
    n = P.n
    value = 1
    for i in range(n):
        for j in range(i, n):
            axx = a * x[i] * x[j]
            value *= _inf(P, [axx * q, q / axx])
            if j > i:
                value *= _inf(P, [axx * q / (c[i] * c[j]), a * q / (e[i] * e[j] * x[i] * x[j])])
    return value * _pairs_inf(
        P,
        lambda i, j: [a * x[i] * q / (c[i] * e[j] * x[j]), q * x[i] / x[j]],
        lambda i, j: [a * x[i] * q / (e[j] * x[j]), q / (e[j] * x[i] * x[j]),
                      a * x[i] * x[j] * q / c[i], q * x[i] / (c[i] * x[j])])


def _cn66_arg(P):
    return P['a'] ** (P.n + 1) * P['q'] / (P['b'] * P.C * P['d'] * P.E)


def _cn66_lhs(P):
    a, b, d, x, q = P['a'], P['b'], P['d'], P['x'], P['q']
    n = P.n
    first, second = _c_pairs(P)
    tops = [ladders(P, [b * xi, d * xi]) for xi in x]
    bottoms = [ladders(P, [a * xi * q / b, a * xi * q / d]) for xi in x]
    z = _cn66_arg(P)

    def term(k):
        value = c_weyl(P, k, a) * apply_pairs(first, k) * apply_pairs(second, k)
        for i in range(n):
            for ladder in tops[i]:
                value *= ladder.get(k[i])
            for ladder in bottoms[i]:
                value *= ladder.inv(k[i])
        return value * z ** sum(k)

    return sum_bilateral(LatticeRegion.bilateral(n), term, P.ctx)


def _cn66_rhs(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    value = _c_rhs_core(P) * _inf(P, [a * q / (b * d)]) / _inf(P, [_cn66_arg(P)])
    for i in range(P.n):
        axq = a * x[i] * q
        value *= (_inf(P, [axq / (b * c[i]), a * q / (b * e[i] * x[i]), axq / (c[i] * d),
                           a * q / (d * e[i] * x[i])])
                  / _inf(P, [axq / b, q / (b * x[i]), axq / d, q / (d * x[i])]))
    return value


def _c_poles(P):
    a, c, e, x = P['a'], P['c'], P['e'], P['x']
    n = len(x)
    values = []
    for i in range(n):
        for j in range(n):
            values += [c[j] * x[i] / x[j], a * x[i] * x[j] / c[j], e[j] * x[i] * x[j],
                       a * x[i] / (e[j] * x[j])]
        values.append(a * x[i] * x[i])
    return values


def _c_params(*extra):
    return ((ParamSpec('a', lo=0.2, hi=0.8),) + _vwp_params(*extra)
            + _vwp_params('c', 'e', shape='n') + (X, Q))


B10_CN_6PSI6 = IdentityRecord(
    id='B10_CN_6PSI6',
    family=Family.BILATERAL,
    anchor="Eq. (cr66gl), \"A $\\mathrm C_n$ very-well-poised ${}_6\\psi_6$ summation\"",
    lhs=_cn66_lhs,
    rhs=_cn66_rhs,
    dims=DIMS,
    params=_c_params('b', 'd'),
    domain=(below('|a^(n+1) q / (b C d E)| < 1', _cn66_arg),),
    window=(below('|a^(n+1) q / (b C d E)| <= 0.6', _cn66_arg, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_c_poles),
            lattice_guard(lambda P: [v * xi for xi in P['x'] for v in (P['b'], P['d'])]
                          + [P['a'] * xi / v for xi in P['x'] for v in (P['b'], P['d'])])),
    reduction=Reduction('U_BAILEY_6PSI6', lambda P: P.derive(
        {'a': P['a'] * P['x'][0] ** 2, 'b': P['c'][0], 'c': P['e'][0] * P['x'][0] ** 2,
         'd': P['b'] * P['x'][0], 'e': P['d'] * P['x'][0]})),
    notes=('right side printed with (a x_i q / b c_x); the n = 1 case is Bailey\'s 6psi6 '
           'and needs (a x_i q / b c_i)',),
    terminating=False,
)


def _bn66_arg(P):
    return -P['a'] ** P.n / (P.C * P.E)


def _bn66_lhs(P):
    a = P['a']
    first, second = _c_pairs(P)
    z = _bn66_arg(P)
    return sum_bilateral(
        LatticeRegion.bilateral_parity(P.n, P['sigma']),
        lambda k: c_weyl(P, k, a) * apply_pairs(first, k) * apply_pairs(second, k) * z ** sum(k),
        P.ctx)


def _bn66_rhs(P):
    a, c, e, x, q = P['a'], P['c'], P['e'], P['x'], P['q']
    q2 = q * q
    value = _c_rhs_core(P) * _inf(P, [-q]) / _inf(P, [_bn66_arg(P)])
    for i in range(P.n):
        x2 = x[i] * x[i]
        value *= (qpoch_prod([a * q * x2 / c[i] ** 2, a * q / (e[i] ** 2 * x2)], q2, None, P.ctx)
                  / qpoch_prod([a * q * x2, q / (a * x2)], q2, None, P.ctx))
    return value


B11_BNV_6PSI6 = IdentityRecord(
    id='B11_BNV_6PSI6',
    family=Family.BILATERAL,
    anchor="Eq. (br66gl), \"Macdonald's~\\cite{Mac72} terminology for affine root systems\"",
    lhs=_bn66_lhs,
    rhs=_bn66_rhs,
    dims=DIMS,
    params=_c_params(),
    orders=(SIGMA,),
    domain=(below('|a^n / (C E)| < 1', _bn66_arg),),
    window=(below('|a^n / (C E)| <= 0.6', _bn66_arg, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_c_poles)),
    notes=('right side printed with (aqu_i^2/c_i^2, aq/e_i^2u_i^2;q^2); read u as x',),
    terminating=False,
)


# -- B12, B13: C_n 6psi6 with an extra parameter t --------------------------

def _t_pair_term(P):
    """k -> prod_{i<j} (t a x_i x_j)_{k_i+k_j} (t x_i/x_j)_{k_i-k_j} / (...) times (t^2/q)^{sum (i-1) k_i}"""
    a, t, x, q = P['a'], P['t'], P['x'], P['q']
    n, kernel = P.n, P.kernel
    pairs = {}
    for i in range(n):
        for j in range(i + 1, n):
            pairs[i, j] = (kernel.ladder(t * a * x[i] * x[j], q), kernel.ladder(a * x[i] * x[j] * q / t, q),
                           kernel.ladder(t * x[i] / x[j], q), kernel.ladder(q * x[i] / (t * x[j]), q))
    step = t * t / q

    def term(k):
        value = c_weyl(P, k, a)
        for (i, j), (up, down, skew_up, skew_down) in pairs.items():
            s, d = k[i] + k[j], k[i] - k[j]
            value *= up.get(s) * down.inv(s) * skew_up.get(d) * skew_down.inv(d)
        return value * step ** sum(i * v for i, v in enumerate(k))

    return term


def _t_rhs_core(P, scale):
    """Common products of the two t-deformed sums; scale(i) supplies the (.)_inf in the i-th denominator"""
    a, t, x, q = P['a'], P['t'], P['x'], P['q']
    n = P.n
    value = _pairs_inf(P, lambda i, j: [q * x[i] / x[j]], lambda i, j: [q * x[i] / (t * x[j])])
    for i in range(n):
        for j in range(i, n):
            axx = a * x[i] * x[j]
            value *= _inf(P, [axx * q, q / axx])
            if j > i:
                value /= _inf(P, [axx * q / t, q / (t * axx)])
    for i in range(1, n + 1):
        value *= _inf(P, [q * t ** (-i)]) / _inf(P, [scale(i)])
    return value


def _vd_args(P):
    a, b, c, d, e, t, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 't', 'q'))
    n = P.n
    bcde = b * c * d * e
    return [a * a * _qn(P, 2 - n) / bcde, t ** (2 - 2 * n) * a * a * q / bcde]


def _vd_lhs(P):
    a, b, c, d, e, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'x', 'q'))
    n = P.n
    pair_term = _t_pair_term(P)
    tops = [ladders(P, [v * xi for v in (b, c, d, e)]) for xi in x]
    bottoms = [ladders(P, [a * xi * q / v for v in (b, c, d, e)]) for xi in x]
    z = _vd_args(P)[1]

    def term(k):
        value = pair_term(k)
        for i in range(n):
            for ladder in tops[i]:
                value *= ladder.get(k[i])
            for ladder in bottoms[i]:
                value *= ladder.inv(k[i])
        return value * z ** sum(k)

    return sum_bilateral(LatticeRegion.bilateral(n), term, P.ctx)


def _vd_rhs(P):
    a, b, c, d, e, t, x, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 't', 'x', 'q'))
    n = P.n
    bcde = b * c * d * e
    value = _t_rhs_core(P, lambda i: q * t ** (2 - i - n) * a * a / bcde)
    pairs = [b * c, b * d, b * e, c * d, c * e, d * e]
    for i in range(1, n + 1):
        value *= _inf(P, [a * t ** (1 - i) * q / u for u in pairs])
    for xi in x:
        value /= _inf(P, [q / (v * xi) for v in (b, c, d, e)] + [a * xi * q / v for v in (b, c, d, e)])
    return value


def _t_poles(P):
    a, t, x = P['a'], P['t'], P['x']
    n = len(x)
    values = [t ** i for i in range(1, n + 1)]
    for i in range(n):
        values.append(a * x[i] * x[i])
        for j in range(i + 1, n):
            values += [t * a * x[i] * x[j], a * x[i] * x[j] / t, t * x[i] / x[j], x[i] / (t * x[j])]
    return values


def _t_params(*names):
    return ((ParamSpec('a', lo=0.2, hi=0.7),) + _vwp_params(*names)
            + (ParamSpec('t', lo=0.6, hi=0.95), X, Q))


B12_CN_6PSI6_VD = IdentityRecord(
    id='B12_CN_6PSI6_VD',
    family=Family.BILATERAL,
    anchor="Eq. (cnvd66gl), \"Another $\\mathrm C_n$ very-well-poised ${}_6\\psi_6$ summation was established\"",
    lhs=_vd_lhs,
    rhs=_vd_rhs,
    dims=DIMS,
    params=_t_params('b', 'c', 'd', 'e'),
    domain=(below('|a^2 q^(2-n) / bcde| < 1, |t^(2-2n) a^2 q / bcde| < 1', _vd_args),),
    window=(below('|a^2 q^(2-n) / bcde|, |t^(2-2n) a^2 q / bcde| <= 0.6', _vd_args, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_t_poles),
            lattice_guard(lambda P: [P[v] * xi for xi in P['x'] for v in 'bcde']
                          + [P['a'] * xi / P[v] for xi in P['x'] for v in 'bcde'])),
    reduction=Reduction('U_BAILEY_6PSI6', lambda P: P.derive(
        {'a': P['a'] * P['x'][0] ** 2, 'b': P['b'] * P['x'][0], 'c': P['c'] * P['x'][0],
         'd': P['d'] * P['x'][0], 'e': P['e'] * P['x'][0]})),
    notes=('t-dependent factors printed over 1 <= i <= j <= n; the i = j factors '
           '(t a x_i^2)_{2k_i}/(a x_i^2 q/t)_{2k_i} contradict the n = 1 case (Bailey\'s '
           '6psi6, which the right side reproduces), so they run over i < j',),
    terminating=False,
)


def _bn_t_args(P):
    a, b, c, t, q = P['a'], P['b'], P['c'], P['t'], P['q']
    n = P.n
    return [a * _qn(P, 1 - n) / (b * c), t ** (2 - 2 * n) * a / (b * c)]


def _bn_t_lhs(P):
    a, b, c, x, q = P['a'], P['b'], P['c'], P['x'], P['q']
    n = P.n
    pair_term = _t_pair_term(P)
    tops = [ladders(P, [b * xi, c * xi]) for xi in x]
    bottoms = [ladders(P, [a * xi * q / b, a * xi * q / c]) for xi in x]
    z = -_bn_t_args(P)[1]

    def term(k):
        value = pair_term(k)
        for i in range(n):
            for ladder in tops[i]:
                value *= ladder.get(k[i])
            for ladder in bottoms[i]:
                value *= ladder.inv(k[i])
        return value * z ** sum(k)

    return sum_bilateral(LatticeRegion.bilateral_parity(n, P['sigma']), term, P.ctx)


def _bn_t_rhs(P):
    a, b, c, t, x, q = (P[k] for k in ('a', 'b', 'c', 't', 'x', 'q'))
    n = P.n
    q2 = q * q
    value = _t_rhs_core(P, lambda i: -t ** (2 - i - n) * a / (b * c)) / 2
    for i in range(1, n + 1):
        value *= _inf(P, [a * t ** (1 - i) * q / (b * c), -t ** (1 - i)])
        value *= qpoch_prod([a * t ** (2 - 2 * i) * q / (b * b), a * t ** (2 - 2 * i) * q / (c * c)],
                            q2, None, P.ctx)
    for xi in x:
        value /= _inf(P, [q / (b * xi), q / (c * xi), a * xi * q / b, a * xi * q / c])
        value /= qpoch_prod([q / (a * xi * xi), a * q * xi * xi], q2, None, P.ctx)
    return value


B13_BNV_6PSI6_SW = IdentityRecord(
    id='B13_BNV_6PSI6_SW',
    family=Family.BILATERAL,
    anchor="Eq. (bn66gl), \"evaluates to twice the product\"",
    lhs=_bn_t_lhs,
    rhs=_bn_t_rhs,
    dims=DIMS,
    params=_t_params('b', 'c'),
    orders=(SIGMA,),
    domain=(below('|a q^(1-n) / bc| < 1, |t^(2-2n) a / bc| < 1', _bn_t_args),),
    window=(below('|a q^(1-n) / bc|, |t^(2-2n) a / bc| <= 0.6', _bn_t_args, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_t_poles),
            lattice_guard(lambda P: [P[v] * xi for xi in P['x'] for v in 'bc']
                          + [P['a'] * xi / P[v] for xi in P['x'] for v in 'bc'])),
    notes=('t-dependent factors run over i < j as in the C_n sum with t',
           'right side printed with (a t^(2-2i) q / b, a t^(2-2i) q / c; q^2); specialising '
           'd = sqrt(aq), e = -sqrt(aq) in the C_n sum with t gives '
           '(a t^(2-2i) q / b^2, a t^(2-2i) q / c^2; q^2), which is used'),
    terminating=False,
)


RECORDS = (
    B1_AN_DOUGALL, B2_AN_1PSI1_GUS, B3_AN_1PSI1_MS, B4_AN_1PSI1_MAC, B5_CONSTRAINED,
    B6_AN_6PSI6, B7_AN_6PSI6_COMPACT, B8_AN_5H5, B9_AN_6PSI6_SCHL,
    B10_CN_6PSI6, B11_BNV_6PSI6, B12_CN_6PSI6_VD, B13_BNV_6PSI6_SW,
)
