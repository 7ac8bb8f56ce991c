#!/usr/bin/env python
"""
Cross-identity consistency checks

Each record compares one catalog identity, specialised or summed over an
order, against the closed form of another. Nothing here is a new identity;
a failure points at one of the two records involved.
"""
import logging

from ..utils.sumengine import LatticeRegion, sum_finite, sum_infinite, unwrap
from .bilateral import (_cn66_lhs, _bn66_rhs, _bn66_arg, _vd_lhs, _bn_t_rhs, _bn_t_args,
                        _c_params, _t_params, _c_poles, _t_poles, X_DISTINCT, X_RATIOS, WINDOW)
from .records import IdentityRecord, Family, ParamSpec, ParamSet, OrderSpec, below, lattice_guard
from .terminating import (fundamental_term, _an65_rhs, _an_qbin_nt_rhs,
                          X as X_TERMINATING, Q)

logger = logging.getLogger(__name__)


def _root(P):
    return P.mp.sqrt(P['a'] * P['q'])


# -- X1: B_n sum as a specialised C_n 6psi6 ---------------------------------

def _c_specialised_lhs(P):
    root = _root(P)
    return _cn66_lhs(P.copy(values={'b': root, 'd': -root}))


X1_BN_FROM_CN = IdentityRecord(
    id='X1_BN_FROM_CN',
    family=Family.CONSISTENCY,
    anchor='Eq. (br66gl), "evaluates to twice the product on the right-hand side of"',
    lhs=_c_specialised_lhs,
    rhs=lambda P: 2 * _bn66_rhs(P),
    dims=(1, 2),
    params=_c_params(),
    domain=(below('|a^n / (C E)| < 1', _bn66_arg),),
    window=(below('|a^n / (C E)| <= 0.6', _bn66_arg, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_c_poles),
            lattice_guard(lambda P: [_root(P) * xi for xi in P['x']])),
    notes=('C_n 6psi6 at b = sqrt(aq), d = -sqrt(aq), summed over all of Z^n, against both '
           'parity classes of the B_n sum',),
    terminating=False,
)


# -- X2: B_n sum with t as a specialised C_n sum with t ---------------------

def _t_specialised_lhs(P):
    root = _root(P)
    return _vd_lhs(P.copy(values={'d': root, 'e': -root}))


X2_BN_T_FROM_CN_T = IdentityRecord(
    id='X2_BN_T_FROM_CN_T',
    family=Family.CONSISTENCY,
    anchor='Eq. (bn66gl), "the identity in \\eqref{bn66gl} is closely connected"',
    lhs=_t_specialised_lhs,
    rhs=lambda P: 2 * _bn_t_rhs(P),
    dims=(1, 2),
    params=_t_params('b', 'c'),
    domain=(below('|a q^(1-n) / bc| < 1, |t^(2-2n) a / bc| < 1', _bn_t_args),),
    window=(below('|a q^(1-n) / bc|, |t^(2-2n) a / bc| <= 0.6', _bn_t_args, WINDOW),),
    guards=(X_DISTINCT, X_RATIOS, lattice_guard(_t_poles),
            lattice_guard(lambda P: [P[v] * xi for xi in P['x'] for v in 'bc']
                          + [P['a'] * xi / P[v] for xi in P['x'] for v in 'bc']
                          + [_root(P) * xi for xi in P['x']])),
    terminating=False,
)


# -- X3: nonterminating q-binomial theorem from the fundamental theorem -----

def _summed_fundamental(P):
    z = P['z']

    def term(k):
        N = k[0]
        inner = P.copy(orders={'N': N})
        value, _ = unwrap(sum_finite(LatticeRegion.hyperplane(P.n, N), fundamental_term(inner), P.ctx))
        return value * z ** N

    return sum_infinite(1, term, P.ctx)


X3_QBIN_FROM_FUNDAMENTAL = IdentityRecord(
    id='X3_QBIN_FROM_FUNDAMENTAL',
    family=Family.CONSISTENCY,
    anchor='Eq. (ntqbin1), "another consequence of \\eqref{fthmmilne}"',
    lhs=_summed_fundamental,
    rhs=_an_qbin_nt_rhs,
    dims=(1, 2),
    params=(ParamSpec('a', 'n'), ParamSpec('x', 'n', lo=0.6, hi=1.0), ParamSpec('z', hi=0.6), Q),
    domain=(below('|z| < 1', lambda P: P['z']),),
    window=(below('|z| <= 0.5', lambda P: P['z'], 0.55),),
    guards=(X_DISTINCT, X_RATIOS),
    notes=('left side: sum over N of z^N times the fundamental theorem sum over |k| = N',),
    terminating=False,
)


# -- X4: A_n 6phi5 from the fundamental theorem in n + 1 variables ----------

def _widened(P):
    """Fundamental theorem data in n + 1 variables: a -> (c_1..c_n, q^-N b/a), x -> (x, q^-N/a)"""
    a, b, c, x, q, N = (P[k] for k in ('a', 'b', 'c', 'x', 'q', 'N'))
    shift = P.kernel.qpow(q, -N)
    values = {'a': list(c) + [shift * b / a], 'x': list(x) + [shift / a], 'q': q}
    return ParamSet(P.n + 1, values, {'N': N}, P.ctx)


def _widened_lhs(P):
    wide = _widened(P)
    return sum_finite(LatticeRegion.hyperplane(wide.n, P['N']), fundamental_term(wide), P.ctx)


def _scaled_65_rhs(P):
    wide = _widened(P)
    corner = fundamental_term(wide)((0,) * P.n + (P['N'],))
    return corner * _an65_rhs(P)


X4_65_FROM_FUNDAMENTAL = IdentityRecord(
    id='X4_65_FROM_FUNDAMENTAL',
    family=Family.CONSISTENCY,
    anchor='Eq. (an65eq), "the following terminating $\\mathrm A_n$ ${}_6\\phi_5$ summation is obtained"',
    lhs=_widened_lhs,
    rhs=_scaled_65_rhs,
    dims=(1, 2, 3),
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c', 'n'), X_TERMINATING, Q),
    orders=(OrderSpec('N', 'scalar', 0, 4),),
    guards=(X_DISTINCT, X_RATIOS,
            lattice_guard(lambda P: [P['a'] * P['q'] / P['b'], P['b'] / P['a']]
                          + [P['a'] * xi for xi in P['x']]
                          + [P['a'] * xi * P['q'] / ci for xi, ci in zip(P['x'], P['c'])])),
    notes=('k_{n+1} = N - |k|; the 6phi5 summand is the n + 1 variable summand divided by its '
           'value at k = 0, which scales the 6phi5 right side',),
)


RECORDS = (X1_BN_FROM_CN, X2_BN_T_FROM_CN_T, X3_QBIN_FROM_FUNDAMENTAL, X4_65_FROM_FUNDAMENTAL)
