#!/usr/bin/env python
"""
Integral evaluation records

Left sides are numerical integrals, right sides the displayed products.
Torus integrals use the normalised measure prod dz_i / (2 pi i z_i), so
an integrand here is the displayed integrand without the dz/z factors.
"""
import logging
from math import factorial

from ..catalog.records import (IdentityRecord, Family, ParamSpec, OrderSpec, Reduction, below)
from ..utils.sumengine import SumResult
from .constant_term import constant_term_poly, evaluate_poly, closed_form_value, exact_agreement
from .quadrature import (TorusIntegrand, torus_integrate, selberg_integrate, selberg_product,
                         mellin_barnes_integrate, mellin_barnes_product)

logger = logging.getLogger(__name__)

Q = ParamSpec('q', lo=0.1, hi=0.4)
SMALL = 0.4


def _inf(P, values):
    """prod (v;q)_inf over values"""
    kernel = P.kernel
    q = P['q']
    result = P.mp.mpc(1)
    for v in values:
        result *= kernel.qpoch_inf(v, q)
    return result


def _torus(P, n_free, integrand, constrained=False):
    return torus_integrate(TorusIntegrand(n_free, integrand, constrained), P.ctx)


def _aw_params(P):
    return [P[v] for v in 'abcd']


# -- univariate Askey-Wilson integral ---------------------------------------

def aw_integrand(P):
    params = _aw_params(P)

    def f(z):
        w = z[0]
        numer = _inf(P, [w ** 2, 1 / w ** 2])
        return numer / _inf(P, [v * w for v in params] + [v / w for v in params])

    return f


def _aw_rhs(P):
    a, b, c, d = _aw_params(P)
    return 2 * _inf(P, [a * b * c * d]) / _inf(P, [P['q'], a * b, a * c, a * d, b * c, b * d, c * d])


I_AW = IdentityRecord(
    id='I_AW',
    family=Family.INTEGRAL,
    anchor='Askey-Wilson integral, "the positively oriented unit circle"',
    lhs=lambda P: _torus(P, 1, aw_integrand(P)),
    rhs=_aw_rhs,
    params=tuple(ParamSpec(v, hi=SMALL) for v in 'abcd') + (Q,),
    domain=(below('|a|, |b|, |c|, |d| < 1', _aw_params),),
    regime='quadrature',
)


def _to_aw(values):
    def mapping(P):
        a, b, c, d = values(P)
        return P.derive({'a': a, 'b': b, 'c': c, 'd': d})
    return mapping


# -- A_n Askey-Wilson integral ----------------------------------------------

def aw_an_integrand(P):
    a, b = P['a'], P['b']
    m = P.n + 1

    def f(z):
        numer = _inf(P, [z[i] / z[j] for i in range(m) for j in range(m) if i != j])
        denom = _inf(P, [a[i] / z[j] for i in range(m) for j in range(m)]
                     + [b[i] * z[j] for i in range(m) for j in range(m)])
        return numer / denom

    return f


def _aw_an_rhs(P):
    a, b, q, n = P['a'], P['b'], P['q'], P.n
    A, B = P.A, P.B
    denom = _inf(P, [q]) ** n * _inf(P, [A, B] + [ai * bj for ai in a for bj in b])
    return factorial(n + 1) * _inf(P, [A * B]) / denom


I_AW_AN = IdentityRecord(
    id='I_AW_AN',
    family=Family.INTEGRAL,
    anchor='Eq. (awint), "$\\mathrm A_n$ Askey--Wilson integral evaluation was derived"',
    lhs=lambda P: _torus(P, P.n, aw_an_integrand(P), constrained=True),
    rhs=_aw_an_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', 'n+1', hi=SMALL), ParamSpec('b', 'n+1', hi=SMALL), Q),
    domain=(below('|a_i|, |b_i| < 1', lambda P: list(P['a']) + list(P['b'])),),
    reduction=Reduction('I_AW', _to_aw(lambda P: (P['a'][0], P['a'][1], P['b'][0], P['b'][1]))),
    notes=('z_{n+1} = 1 / (z_1 ... z_n); the n-fold measure runs over z_1..z_n',),
    regime='quadrature',
)


# -- A_n Askey-Wilson integral depending on the parity of n -----------------

def _c(P):
    return [P['c1'], P['c2'], P['c3']]


def _gr_S(P):
    return P['b'] ** (P.n + 2) * P.A * P.mp.fprod(_c(P))


def gr_integrand(P):
    a, b, c, m = P['a'], P['b'], _c(P), P.n + 1
    S = _gr_S(P)

    def f(z):
        numer = _inf(P, [z[i] / z[j] for i in range(m) for j in range(m) if i != j]
                     + [S / zi for zi in z])
        denom = _inf(P, [ai / zj for ai in a for zj in z]
                     + [b * z[i] * z[j] for i in range(m) for j in range(i + 1, m)]
                     + [b * cj * zi for zi in z for cj in c])
        return numer / denom

    return f


def _gr_rhs(P):
    a, b, c, q, n = P['a'], P['b'], _c(P), P['q'], P.n
    m = n + 1
    A, C, S = P.A, P.mp.fprod(c), _gr_S(P)
    top = factorial(m) * _inf(P, [S / ai for ai in a])
    bottom = _inf(P, [q]) ** n * _inf(P, [b * ai * cj for ai in a for cj in c]
                                      + [b * a[i] * a[j] for i in range(m) for j in range(i + 1, m)])
    if n % 2 == 0:
        top *= _inf(P, [b ** ((n + 4) // 2) * A * C]
                    + [b ** ((n + 2) // 2) * cj * A for cj in c])
        bottom *= _inf(P, [A, b ** ((n + 4) // 2) * C] + [b ** ((n + 2) // 2) * cj for cj in c])
    else:
        top *= _inf(P, [b ** ((n + 1) // 2) * A]
                    + [b ** ((n + 3) // 2) * A * C / cj for cj in c])
        bottom *= _inf(P, [b ** ((n + 1) // 2), A]
                       + [b ** ((n + 3) // 2) * c[i] * c[j] for i in range(3) for j in range(i + 1, 3)])
    return top / bottom


I_AW_GR = IdentityRecord(
    id='I_AW_GR',
    family=Family.INTEGRAL,
    anchor='A_n Askey-Wilson integral, "depending on the parity of $n$"',
    lhs=lambda P: _torus(P, P.n, gr_integrand(P), constrained=True),
    rhs=_gr_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', 'n+1', hi=SMALL), ParamSpec('b', hi=SMALL),
            ParamSpec('c1', hi=SMALL), ParamSpec('c2', hi=SMALL), ParamSpec('c3', hi=SMALL), Q),
    domain=(below('|b|, |a_i|, |c_j| < 1', lambda P: [P['b']] + list(P['a']) + _c(P)),),
    notes=('n even: the display prints (b^{(m+2)/2} c_j;q) in the denominator; read as '
           'b^{(n+2)/2} c_j',
           'the conditions print |c_j| < 1 for 1 <= j <= n; there are three c_j',
           'the display attaches dz_i/z_i to all n+1 factors; the measure is n-fold with '
           'z_{n+1} = 1 / (z_1 ... z_n)'),
    regime='quadrature',
)


# -- C_n Askey-Wilson integral ----------------------------------------------

def _cn_cross(z, i, j):
    return [z[i] / z[j], z[j] / z[i], z[i] * z[j], 1 / (z[i] * z[j])]


def aw_cn_integrand(P):
    a, n = P['a'], P.n

    def f(z):
        numer = _inf(P, [v for i in range(n) for j in range(i + 1, n) for v in _cn_cross(z, i, j)]
                     + [w for zi in z for w in (zi ** 2, 1 / zi ** 2)])
        denom = _inf(P, [ai * zj for ai in a for zj in z] + [ai / zj for ai in a for zj in z])
        return numer / denom

    return f


def _aw_cn_rhs(P):
    a, q, n = P['a'], P['q'], P.n
    pairs = [a[i] * a[j] for i in range(len(a)) for j in range(i + 1, len(a))]
    return 2 ** n * factorial(n) * _inf(P, [P.A]) / (_inf(P, [q]) ** n * _inf(P, pairs))


I_AW_CN = IdentityRecord(
    id='I_AW_CN',
    family=Family.INTEGRAL,
    anchor='C_n Askey-Wilson integral, "The following $\\mathrm C_n$ Askey--Wilson integral evaluation"',
    lhs=lambda P: _torus(P, P.n, aw_cn_integrand(P)),
    rhs=_aw_cn_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', '2n+2', hi=SMALL), Q),
    domain=(below('|a_i| < 1', lambda P: list(P['a'])),),
    reduction=Reduction('I_AW', _to_aw(lambda P: tuple(P['a']))),
    notes=('the conditions print |a_i| < 1 for 1 <= i <= n; all 2n + 2 parameters are bounded',),
    regime='quadrature',
)


# -- Macdonald-Koornwinder normalisation integral ---------------------------

def mk_integrand(P):
    a, b, n = P['a'], P['b'], P.n

    def f(z):
        value = P.mp.mpc(1)
        for i in range(n):
            for j in range(i + 1, n):
                cross = _cn_cross(z, i, j)
                value *= _inf(P, cross) / _inf(P, [b * v for v in cross])
        for zi in z:
            value *= _inf(P, [zi ** 2, 1 / zi ** 2]) / _inf(P, [aj * zi for aj in a] + [aj / zi for aj in a])
        return value

    return f


def _mk_rhs(P):
    a, b, q, n = P['a'], P['b'], P['q'], P.n
    A = P.A
    result = 2 ** n * factorial(n) * (_inf(P, [b]) / _inf(P, [q])) ** n
    for i in range(1, n + 1):
        pairs = [a[j] * a[k] * b ** (i - 1) for j in range(4) for k in range(j + 1, 4)]
        result *= _inf(P, [b ** (n + i - 2) * A]) / _inf(P, [b ** i] + pairs)
    return result


I_MK = IdentityRecord(
    id='I_MK',
    family=Family.INTEGRAL,
    anchor='Eq. (intmk), "Macdonald--Koornwinder polynomials"',
    lhs=lambda P: _torus(P, P.n, mk_integrand(P)),
    rhs=_mk_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', '4', hi=SMALL), ParamSpec('b', hi=SMALL), Q),
    domain=(below('|b| < 1, |a_j| < 1', lambda P: [P['b']] + list(P['a'])),),
    reduction=Reduction('I_AW', _to_aw(lambda P: tuple(P['a']))),
    notes=('the display prints (a_j z_i, a_j/z_j;q) in the denominator; read as a_j/z_i',
           'the conditions print |b_i| < 1; b is a single parameter'),
    regime='quadrature',
)


# -- G_2 Askey-Wilson integral ----------------------------------------------

def g2_integrand(P):
    a = P['a']

    def f(z):
        numer = _inf(P, [z[i] / z[j] for i in range(3) for j in range(3) if i != j]
                     + [w for zj in z for w in (zj, 1 / zj)])
        denom = _inf(P, [ai * zj for ai in a for zj in z] + [ai / zj for ai in a for zj in z])
        return numer / denom

    return f


def _g2_rhs(P):
    a, q = P['a'], P['q']
    A = P.A
    top = 12 * _inf(P, [A ** 2]) * _inf(P, list(a))
    singles = [a[i] * a[j] for i in range(4) for j in range(i, 4)]
    triples = [a[i] * a[j] * a[k] for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)]
    return top / (_inf(P, [q]) ** 2 * _inf(P, [A] + singles + triples))


I_G2 = IdentityRecord(
    id='I_G2',
    family=Family.INTEGRAL,
    anchor='G_2 Askey-Wilson integral, "for the root system $\\mathrm G_2$"',
    lhs=lambda P: _torus(P, 2, g2_integrand(P), constrained=True),
    rhs=_g2_rhs,
    dims=(2,),
    params=(ParamSpec('a', '4', hi=SMALL), Q),
    domain=(below('|a_i| < 1', lambda P: list(P['a'])),),
    notes=('normalisation 12 (the order of the Weyl group of G_2) taken as displayed; '
           'z_3 = 1 / (z_1 z_2)',
           'prod_{1<=i<=j<=4} (a_i a_j;q) includes the squares a_i^2'),
    regime='quadrature',
)


# -- Selberg integral --------------------------------------------------------

def _selberg_args(P):
    return P.n, P['alpha'], P['beta'], P.mp.mpf(P['g2']) / 2


I_SELBERG = IdentityRecord(
    id='I_SELBERG',
    family=Family.INTEGRAL,
    anchor='Eq. (sel), "classical beta integral evaluation"',
    lhs=lambda P: selberg_integrate(*_selberg_args(P), P.ctx),
    rhs=lambda P: selberg_product(*_selberg_args(P), P.ctx),
    dims=(1, 2, 3),
    params=(ParamSpec('alpha', lo=0.5, hi=2.0, real=True),),
    orders=(OrderSpec('beta', lo=1, hi=3), OrderSpec('g2', lo=1, hi=4)),
    notes=('gamma = g2 / 2 ranges over 1/2, 1, 3/2, 2; beta is sampled among integers so the '
           'ordered-simplex remainder is a polynomial',),
    regime='quadrature',
)


# -- Mellin-Barnes limit -----------------------------------------------------

def _mb_args(P):
    return P.n, list(P['a']), list(P['b'])


I_MB = IdentityRecord(
    id='I_MB',
    family=Family.INTEGRAL,
    anchor='Eq. (awinto), "multidimensional Mellin--Barnes integral"',
    lhs=lambda P: mellin_barnes_integrate(*_mb_args(P), P.ctx),
    rhs=lambda P: mellin_barnes_product(*_mb_args(P), P.ctx),
    dims=(1, 2),
    params=(ParamSpec('a', 'n+1', lo=0.0, hi=0.4, shift=1.0),
            ParamSpec('b', 'n+1', lo=0.0, hi=0.4, shift=1.0)),
    notes=('the display prints the measure prod dz_i/z_i; the q -> 1 limit of dz/z with '
           'z = q^s gives ds, so the measure is prod dz_i',),
    regime='quadrature',
)


# -- A_{n-1} constant term ---------------------------------------------------

CT_MAX_K = {2: 3, 3: 3, 4: 2}


def _ct_lhs(P):
    poly = constant_term_poly(P.n, P['k'])
    exact = 'agrees' if exact_agreement(P.n, P['k']) else 'differs'
    return SumResult(evaluate_poly(poly, P['q'], P.ctx), len(poly.terms()),
                     note=f"exact expansion, {len(poly.terms())} monomials; integer closed form {exact}")


I_CT = IdentityRecord(
    id='I_CT',
    family=Family.CONSTANT_TERM,
    anchor='Macdonald constant term conjecture, "not containing any $e^\\alpha$"',
    lhs=_ct_lhs,
    rhs=lambda P: closed_form_value(P.n, P['k'], P['q'], P.ctx),
    dims=(2, 3, 4),
    params=(ParamSpec('q'),),
    orders=(OrderSpec('k', lo=1, hi=3),),
    guards=(lambda P: P['k'] <= CT_MAX_K[P.n],),
    notes=('root system A_{n-1} in n variables with degrees 2..n; left side from an exact '
           'integer Laurent expansion',),
)


RECORDS = (I_AW, I_AW_AN, I_AW_GR, I_AW_CN, I_MK, I_G2, I_SELBERG, I_MB, I_CT)
