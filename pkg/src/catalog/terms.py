#!/usr/bin/env python
"""Summand building blocks shared by the multivariate records"""
from typing import Callable, List, Sequence

from ..utils.qkernel import QLadder
from .records import ParamSet


def pair_ladders(P: ParamSet, top: Callable[[int, int], object],
                 bottom: Callable[[int, int], object] = None, x: Sequence = None) -> List[List]:
    """
    Ladders for prod_{i,j} (top(i,j);q)_{k_i} / (bottom(i,j);q)_{k_i}

    bottom defaults to q x_i/x_j; x defaults to the x sequence of P.
    """
    q, kernel = P['q'], P.kernel
    x = P['x'] if x is None else x
    if bottom is None:
        bottom = lambda i, j: q * x[i] / x[j]
    n = len(x)
    return [[(kernel.ladder(top(i, j), q), kernel.ladder(bottom(i, j), q)) for j in range(n)]
            for i in range(n)]


def apply_pairs(pairs: List[List], k: Sequence[int]):
    value = 1
    for i, row in enumerate(pairs):
        for up, down in row:
            value *= up.get(k[i]) * down.inv(k[i])
    return value


def ladders(P: ParamSet, values: Sequence) -> List[QLadder]:
    kernel, q = P.kernel, P['q']
    return [kernel.ladder(v, q) for v in values]


def a_weyl(P: ParamSet, k: Sequence[int], x: Sequence = None):
    """prod_{i<j} (x_i q^{k_i} - x_j q^{k_j}) / (x_i - x_j)"""
    kernel, q = P.kernel, P['q']
    x = P['x'] if x is None else x
    value = 1
    for i in range(len(x)):
        xi = x[i] * kernel.qpow(q, k[i])
        for j in range(i + 1, len(x)):
            value *= (xi - x[j] * kernel.qpow(q, k[j])) / (x[i] - x[j])
    return value


def c_weyl(P: ParamSet, k: Sequence[int], a=1, x: Sequence = None):
    """A-type factor times prod_{i<=j} (1 - a x_i x_j q^{k_i+k_j}) / (1 - a x_i x_j)"""
    kernel, q = P.kernel, P['q']
    x = P['x'] if x is None else x
    value = a_weyl(P, k, x)
    for i in range(len(x)):
        for j in range(i, len(x)):
            value *= (1 - a * x[i] * x[j] * kernel.qpow(q, k[i] + k[j])) / (1 - a * x[i] * x[j])
    return value


def vwp_factor(P: ParamSet, a, k: int):
    """(1 - a q^{2k}) / (1 - a)"""
    return (1 - a * P.kernel.qpow(P['q'], 2 * k)) / (1 - a)


def ratio(tops: Sequence[QLadder], bottoms: Sequence[QLadder], k: int):
    """prod (top;q)_k / prod (bottom;q)_k"""
    value = 1
    for ladder in tops:
        value *= ladder.get(k)
    for ladder in bottoms:
        value *= ladder.inv(k)
    return value
