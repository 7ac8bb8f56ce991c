#!/usr/bin/env python
"""
Univariate template identities

These are the classical one-variable summations and transformations the
multivariate records reduce to at n = 1. Each side is evaluated from the
series definition, never from another identity.
"""
import logging

from ..utils.numerics import gamma
from ..utils.qkernel import qpoch_prod, qbinom
from ..utils.sumengine import LatticeRegion, sum_finite
from .basic import phi, psi, hyper_H, very_well_poised
from .records import (IdentityRecord, Family, ParamSpec, OrderSpec, Constraint,
                      DomainCondition, below, lattice_guard)

logger = logging.getLogger(__name__)

Q = ParamSpec('q', lo=0.15, hi=0.5)
N_ORDER = OrderSpec('N', lo=0, hi=4)


def _qn(P, k):
    return P.kernel.qpow(P['q'], k)


# -- terminating q-binomial theorem ----------------------------------------

def _qbin_t_lhs(P):
    return qpoch_prod([P['z']], P['q'], P['N'], P.ctx)


def _qbin_t_rhs(P):
    q, z, N = P['q'], P['z'], P['N']

    def term(k):
        j = k[0]
        return qbinom(N, j, q, P.ctx) * (-1) ** j * _qn(P, j * (j - 1) // 2) * z ** j

    return sum_finite(LatticeRegion.rect([N]), term, P.ctx)


U_QBIN_T = IdentityRecord(
    id='U_QBIN_T',
    family=Family.SERIES_TERMINATING,
    anchor='Eq. (tqbin), "terminating $q$-binomial theorem can be written"',
    lhs=_qbin_t_lhs,
    rhs=_qbin_t_rhs,
    params=(ParamSpec('z'), Q),
    orders=(N_ORDER,),
)


# -- nonterminating q-binomial theorem -------------------------------------

U_QBIN_NT = IdentityRecord(
    id='U_QBIN_NT',
    family=Family.SERIES_NONTERMINATING,
    anchor='Eq. (ntqbin0), "nonterminating $q$-binomial theorem"',
    lhs=lambda P: phi([P['a']], [], P['q'], P['z'], P.ctx),
    rhs=lambda P: (qpoch_prod([P['a'] * P['z']], P['q'], None, P.ctx)
                   / qpoch_prod([P['z']], P['q'], None, P.ctx)),
    params=(ParamSpec('a'), ParamSpec('z', hi=0.7), Q),
    domain=(below('|z| < 1', lambda P: P['z']),),
    terminating=False,
)


# -- q-Pfaff-Saalschuetz ----------------------------------------------------

def _qps_lhs(P):
    a, b, c, q, N = P['a'], P['b'], P['c'], P['q'], P['N']
    return phi([a, b, _qn(P, -N)], [c, a * b * _qn(P, 1 - N) / c], q, q, P.ctx, order=N)


def _qps_rhs(P):
    a, b, c, q, N = P['a'], P['b'], P['c'], P['q'], P['N']
    return (qpoch_prod([c / a, c / b], q, N, P.ctx)
            / qpoch_prod([c, c / (a * b)], q, N, P.ctx))


U_QPS = IdentityRecord(
    id='U_QPS',
    family=Family.SERIES_TERMINATING,
    anchor='Sec. 2.3, "terminating balanced ${}_3\\phi_2$ summation"',
    lhs=_qps_lhs,
    rhs=_qps_rhs,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), Q),
    orders=(N_ORDER,),
    guards=(lattice_guard(lambda P: [P['c'], P['a'] * P['b'] / P['c']]),),
)


# -- Jackson's 8phi7 --------------------------------------------------------

def _jackson_e(P):
    return P['a'] ** 2 * _qn(P, P['N'] + 1) / (P['b'] * P['c'] * P['d'])


def _jackson_lhs(P):
    a, b, c, d, e, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'q', 'N'))
    vwp_up, vwp_down = very_well_poised(a, q, P.ctx)
    uppers = [a] + vwp_up + [b, c, d, e, _qn(P, -N)]
    lowers = vwp_down + [a * q / b, a * q / c, a * q / d, a * q / e, a * _qn(P, N + 1)]
    return phi(uppers, lowers, q, q, P.ctx, order=N)


def _jackson_rhs(P):
    a, b, c, d, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'q', 'N'))
    return (qpoch_prod([a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], q, N, P.ctx)
            / qpoch_prod([a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], q, N, P.ctx))


U_JACKSON_87 = IdentityRecord(
    id='U_JACKSON_87',
    family=Family.SERIES_TERMINATING,
    anchor='Sec. 2.3, "Jackson\'s terminating balanced very-well-poised"',
    lhs=_jackson_lhs,
    rhs=_jackson_rhs,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), Q),
    orders=(N_ORDER,),
    constraints=(Constraint('e', 'a^2 q^(N+1) / (b c d)', _jackson_e),),
    guards=(lattice_guard(lambda P: [P['a'] * P['q'] / P['e'],
                                     P['a'] * P['q'] / (P['b'] * P['c'] * P['d'])]),),
)


# -- Dougall's 2H2 ----------------------------------------------------------

def _dougall_rhs(P):
    a, b, c, d = P['a'], P['b'], P['c'], P['d']
    g = lambda z: gamma(z, P.ctx)
    return (g(1 - a) * g(1 - b) * g(c) * g(d) * g(c + d - a - b - 1)
            / (g(c - a) * g(c - b) * g(d - a) * g(d - b)))


U_DOUGALL_2H2 = IdentityRecord(
    id='U_DOUGALL_2H2',
    family=Family.BILATERAL,
    anchor='Sec. 2.4, "Dougall\'s bilateral ${}_2H_2$ summation"',
    lhs=lambda P: hyper_H([P['a'], P['b']], [P['c'], P['d']], 1, P.ctx),
    rhs=_dougall_rhs,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c', shift=12.0), ParamSpec('d', shift=12.0)),
    domain=(DomainCondition('Re(c + d - a - b - 1) > 0',
                            lambda P: [(0, (P['c'] + P['d'] - P['a'] - P['b'] - 1).real)]),),
    terminating=False,
)


# -- Ramanujan's 1psi1 ------------------------------------------------------

def _ramanujan_rhs(P):
    a, b, q, z = P['a'], P['b'], P['q'], P['z']
    return (qpoch_prod([q, b / a, a * z, q / (a * z)], q, None, P.ctx)
            / qpoch_prod([b, q / a, z, b / (a * z)], q, None, P.ctx))


U_RAMANUJAN_1PSI1 = IdentityRecord(
    id='U_RAMANUJAN_1PSI1',
    family=Family.BILATERAL,
    anchor='Sec. 2.4, "Ramanujan\'s ${}_1\\psi_1$ summation theorem"',
    lhs=lambda P: psi([P['a']], [P['b']], P['q'], P['z'], P.ctx),
    rhs=_ramanujan_rhs,
    params=(ParamSpec('a', lo=0.5, hi=0.95), ParamSpec('b', hi=0.5), ParamSpec('z', lo=0.3, hi=0.8), Q),
    domain=(DomainCondition('|b/a| < |z| < 1',
                            lambda P: [(abs(P['b'] / P['a']), abs(P['z'])), (abs(P['z']), 1)]),),
    window=(below('|z| <= 0.7', lambda P: P['z'], 0.75),
            below('|b/az| <= 0.7', lambda P: P['b'] / (P['a'] * P['z']), 0.75)),
    guards=(lattice_guard(lambda P: [P['a'], P['b']]),),
    terminating=False,
)


# -- Bailey's 6psi6 ---------------------------------------------------------

def _bailey_argument(P):
    return P['a'] ** 2 * P['q'] / (P['b'] * P['c'] * P['d'] * P['e'])


def _bailey_lhs(P):
    a, b, c, d, e, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'q'))
    vwp_up, vwp_down = very_well_poised(a, q, P.ctx)
    return psi(vwp_up + [b, c, d, e], vwp_down + [a * q / b, a * q / c, a * q / d, a * q / e],
               q, _bailey_argument(P), P.ctx)


def _bailey_rhs(P):
    a, b, c, d, e, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'q'))
    top = [q, a * q, q / a, a * q / (b * c), a * q / (b * d), a * q / (b * e),
           a * q / (c * d), a * q / (c * e), a * q / (d * e)]
    bottom = [a * q / b, a * q / c, a * q / d, a * q / e, q / b, q / c, q / d, q / e,
              _bailey_argument(P)]
    return qpoch_prod(top, q, None, P.ctx) / qpoch_prod(bottom, q, None, P.ctx)


U_BAILEY_6PSI6 = IdentityRecord(
    id='U_BAILEY_6PSI6',
    family=Family.BILATERAL,
    anchor='Sec. 2.4, "Bailey\'s very-well-poised ${}_6\\psi_6$ summation"',
    lhs=_bailey_lhs,
    rhs=_bailey_rhs,
    params=(ParamSpec('a', lo=0.2, hi=0.8), ParamSpec('b', lo=0.5, hi=0.95),
            ParamSpec('c', lo=0.5, hi=0.95), ParamSpec('d', lo=0.5, hi=0.95),
            ParamSpec('e', lo=0.5, hi=0.95), Q),
    domain=(below('|a^2 q / (b c d e)| < 1', _bailey_argument),),
    window=(below('|a^2 q / (b c d e)| <= 0.6', _bailey_argument, 0.65),),
    guards=(lattice_guard(lambda P: [P['a'], P['b'], P['c'], P['d'], P['e']]),),
    notes=('display prints the series argument as q; the stated convergence condition '
           'and the classical form use a^2 q/(bcde)',),
    terminating=False,
)


# -- Watson's transformation ------------------------------------------------

def _watson_lhs(P):
    a, b, c, d, e, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'q', 'N'))
    vwp_up, vwp_down = very_well_poised(a, q, P.ctx)
    uppers = [a] + vwp_up + [b, c, d, e, _qn(P, -N)]
    lowers = vwp_down + [a * q / b, a * q / c, a * q / d, a * q / e, a * _qn(P, N + 1)]
    z = a ** 2 * _qn(P, N + 2) / (b * c * d * e)
    return phi(uppers, lowers, q, z, P.ctx, order=N)


def _watson_rhs(P):
    a, b, c, d, e, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'q', 'N'))
    prefactor = (qpoch_prod([a * q, a * q / (d * e)], q, N, P.ctx)
                 / qpoch_prod([a * q / d, a * q / e], q, N, P.ctx))
    return prefactor * phi([a * q / (b * c), d, e, _qn(P, -N)],
                           [a * q / b, a * q / c, d * e * _qn(P, -N) / a], q, q, P.ctx, order=N)


U_WATSON = IdentityRecord(
    id='U_WATSON',
    family=Family.TRANSFORMATION,
    anchor='Sec. 2.5, "The Watson transformation"',
    lhs=_watson_lhs,
    rhs=_watson_rhs,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), ParamSpec('e'), Q),
    orders=(N_ORDER,),
    guards=(lattice_guard(lambda P: [P['d'] * P['e'] / P['a'], P['a'] / (P['d'] * P['e'])]),),
    notes=('display prints the 8phi7 argument as q; the terminating very-well-poised '
           'series transforms with argument a^2 q^(N+2)/(bcde) as in the stated condition',),
)


# -- Heine's q-Euler transformation ----------------------------------------

def _heine_w(P):
    return P['a'] * P['b'] * P['z'] / P['c']


def _heine_rhs(P):
    a, b, c, q, z = P['a'], P['b'], P['c'], P['q'], P['z']
    w = _heine_w(P)
    return (qpoch_prod([w], q, None, P.ctx) / qpoch_prod([z], q, None, P.ctx)
            * phi([c / a, c / b], [c], q, w, P.ctx))


U_HEINE_EULER = IdentityRecord(
    id='U_HEINE_EULER',
    family=Family.TRANSFORMATION,
    anchor='Eq. (qeuleru), "Heine\'s $q$-analogue of the classical Euler"',
    lhs=lambda P: phi([P['a'], P['b']], [P['c']], P['q'], P['z'], P.ctx),
    rhs=_heine_rhs,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c', lo=0.3), ParamSpec('z', hi=0.7), Q),
    domain=(below('|z| < 1', lambda P: P['z']), below('|abz/c| < 1', _heine_w)),
    window=(below('|abz/c| <= 0.7', _heine_w, 0.75),),
    guards=(lattice_guard(lambda P: [P['c']]),),
    terminating=False,
)


# -- Bailey's four-term 10phi9 transformation ------------------------------

def _ten_h(P):
    a, b, c, d, e, f, g, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'g', 'q'))
    return a ** 3 * q ** 2 / (b * c * d * e * f * g)


def _ten_phi_nine(A, b, rest, q, ctx):
    """10phi9 very-well-poised in A with parameters b, rest (7 entries), argument q"""
    vwp_up, vwp_down = very_well_poised(A, q, ctx)
    params = [b] + list(rest)
    return phi([A] + vwp_up + params, vwp_down + [A * q / u for u in params], q, q, ctx)


def _ten_lhs(P):
    a, b, c, d, e, f, g, h, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'q'))
    ctx = P.ctx
    others = [c, d, e, f, g, h]
    first = _ten_phi_nine(a, b, others, q, ctx)
    top = [a * q, b / a] + others + [b * q / u for u in others]
    bottom = [b * b * q / a, a / b] + [a * q / u for u in others] + [b * u / a for u in others]
    second = _ten_phi_nine(b * b / a, b, [b * u / a for u in others], q, ctx)
    return first + qpoch_prod(top, q, None, ctx) / qpoch_prod(bottom, q, None, ctx) * second


def _ten_rhs(P):
    a, b, c, d, e, f, g, h, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'q'))
    ctx = P.ctx
    lam = a * a * q / (c * d * e)
    fgh = [f, g, h]
    cde = [c, d, e]
    top = [a * q, b / a] + [lam * q / u for u in fgh] + [b * u / lam for u in fgh]
    bottom = [lam * q, b / lam] + [a * q / u for u in fgh] + [b * u / a for u in fgh]
    first = (qpoch_prod(top, q, None, ctx) / qpoch_prod(bottom, q, None, ctx)
             * _ten_phi_nine(lam, b, [lam * u / a for u in cde] + fgh, q, ctx))

    top = ([a * q, b / a] + fgh + [b * q / u for u in fgh] + [lam * u / a for u in cde]
           + [a * b * q / (lam * u) for u in cde])
    bottom = ([b * b * q / lam, lam / b] + [a * q / u for u in cde + fgh]
              + [b * u / a for u in cde + fgh])
    second = (qpoch_prod(top, q, None, ctx) / qpoch_prod(bottom, q, None, ctx)
              * _ten_phi_nine(b * b / lam, b, [b * u / a for u in cde] + [b * u / lam for u in fgh],
                              q, ctx))
    return first + second


def _ten_window(P):
    lam = P.lambda_bailey
    return [(0.1, abs(P['h'])), (abs(P['h']), 2.0), (0.1, abs(lam)), (abs(lam), 2.0)]


U_BAILEY_10PHI9_4TERM = IdentityRecord(
    id='U_BAILEY_10PHI9_4TERM',
    family=Family.TRANSFORMATION,
    anchor='Eq. (4t109), "Bailey\'s nonterminating balanced very-well-poised ${}_{10}\\phi_9$"',
    lhs=_ten_lhs,
    rhs=_ten_rhs,
    params=(ParamSpec('a', lo=0.3, hi=0.8),) + tuple(ParamSpec(k, lo=0.3, hi=0.9) for k in 'bcdefg') + (Q,),
    constraints=(Constraint('h', 'a^3 q^2 / (b c d e f g)', _ten_h),),
    window=(DomainCondition('0.1 <= |h|, |lambda| <= 2', _ten_window),),
    guards=(lattice_guard(lambda P: [P['a'] / P['b'], P['b'] / P['a'], P['b'] / P.lambda_bailey,
                                     P.lambda_bailey / P['b'], P['b'] ** 2 / P['a'],
                                     P['b'] ** 2 / P.lambda_bailey]),),
    terminating=False,
)


# -- nonterminating Watson transformation ----------------------------------

def _watson_nt_z(P):
    a, b, c, d, e, f, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'q'))
    return a * a * q * q / (b * c * d * e * f)


def _watson_nt_lhs(P):
    a, b, c, d, e, f, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'q'))
    vwp_up, vwp_down = very_well_poised(a, q, P.ctx)
    params = [b, c, d, e, f]
    return phi([a] + vwp_up + params, vwp_down + [a * q / u for u in params], q, _watson_nt_z(P), P.ctx)


def _watson_nt_rhs(P):
    a, b, c, d, e, f, q = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'q'))
    ctx = P.ctx
    aq = a * q
    first = (qpoch_prod([aq, aq / (d * e), aq / (d * f), aq / (e * f)], q, None, ctx)
             / qpoch_prod([aq / d, aq / e, aq / f, aq / (d * e * f)], q, None, ctx)
             * phi([aq / (b * c), d, e, f], [aq / b, aq / c, d * e * f / a], q, q, ctx))
    w = aq * aq
    second = (qpoch_prod([aq, aq / (b * c), d, e, f, w / (b * d * e * f), w / (c * d * e * f)], q, None, ctx)
              / qpoch_prod([aq / b, aq / c, aq / d, aq / e, aq / f, _watson_nt_z(P), d * e * f / aq],
                           q, None, ctx)
              * phi([aq / (d * e), aq / (d * f), aq / (e * f), _watson_nt_z(P)],
                    [w / (b * d * e * f), w / (c * d * e * f), aq * q / (d * e * f)], q, q, ctx))
    return first + second


U_WATSON_NT = IdentityRecord(
    id='U_WATSON_NT',
    family=Family.TRANSFORMATION,
    anchor='Eq. (3t87), "nonterminating Watson transformation"',
    lhs=_watson_nt_lhs,
    rhs=_watson_nt_rhs,
    params=(ParamSpec('a', lo=0.2, hi=0.8),) + tuple(ParamSpec(k, lo=0.4, hi=0.95) for k in 'bcdef') + (Q,),
    domain=(below('|a^2 q^2 / (b c d e f)| < 1', _watson_nt_z),),
    window=(below('|a^2 q^2 / (b c d e f)| <= 0.6', _watson_nt_z, 0.65),),
    guards=(lattice_guard(lambda P: [P['d'] * P['e'] * P['f'] / P['a']]),),
    notes=('last numerator of the second 4phi3 printed as a^2q^2/bcdefa; balancing of that '
           'series forces a^2q^2/bcdef',),
    terminating=False,
)


# -- Sears' balanced 4phi3 transformation ----------------------------------

def _sears_f(P):
    a, b, c, d, e, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'N'))
    return a * b * c * _qn(P, 1 - N) / (d * e)


def _sears_lhs(P):
    a, b, c, d, e, f, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'q', 'N'))
    return phi([_qn(P, -N), a, b, c], [d, e, f], q, q, P.ctx, order=N)


def _sears_rhs(P):
    a, b, c, d, e, f, q, N = (P[k] for k in ('a', 'b', 'c', 'd', 'e', 'f', 'q', 'N'))
    shift = a * _qn(P, 1 - N)
    return (qpoch_prod([e / a, f / a], q, N, P.ctx) / qpoch_prod([e, f], q, N, P.ctx) * a ** N
            * phi([_qn(P, -N), a, d / b, d / c], [d, shift / e, shift / f], q, q, P.ctx, order=N))


U_SEARS = IdentityRecord(
    id='U_SEARS',
    family=Family.TRANSFORMATION,
    anchor='Sec. 2.6, "multivariate extension of the Sears transformation"',
    lhs=_sears_lhs,
    rhs=_sears_rhs,
    params=(ParamSpec('a'), ParamSpec('b'), ParamSpec('c'), ParamSpec('d'), ParamSpec('e'), Q),
    orders=(N_ORDER,),
    constraints=(Constraint('f', 'a b c q^(1-N) / (d e)', _sears_f),),
    guards=(lattice_guard(lambda P: [P['d'], P['e'], P['f'], P['e'] / P['a'], P['f'] / P['a'],
                                     P['a'] * _qn(P, 1 - P['N']) / P['e'],
                                     P['a'] * _qn(P, 1 - P['N']) / P['f']]),),
)


TEMPLATES = (
    U_QBIN_T, U_QBIN_NT, U_QPS, U_JACKSON_87, U_DOUGALL_2H2, U_RAMANUJAN_1PSI1,
    U_BAILEY_6PSI6, U_WATSON, U_HEINE_EULER, U_BAILEY_10PHI9_4TERM, U_WATSON_NT, U_SEARS,
)
