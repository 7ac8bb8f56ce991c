#!/usr/bin/env python
"""
Macdonald polynomials P_lambda(z; q, t) in n variables

P_lambda is the eigenfunction of the first Macdonald operator

    D f(z) = sum_i prod_{j != i} (t z_i - z_j) / (z_i - z_j) f(z_1, .., q z_i, .., z_n)

with eigenvalue sum_i q^lambda_i t^(n-i), normalised so that the
coefficient of m_lambda is 1. D maps m_mu into the span of m_nu with
nu <= mu, so its matrix in the monomial basis of one degree is triangular
for dominance. That matrix is recovered by collocation at generic points on
the torus; every P_lambda of the degree then follows by back substitution.
"""
import hashlib
import logging
import threading
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..utils.config import PrecisionContext
from ..utils.errors import DegeneracyError, DomainError
from .partitions import Partition, dominance_leq, dominated_by, monomial_sym, partitions_of

logger = logging.getLogger(__name__)

# extra working digits while inverting the collocation matrix
EXTRA_DPS = 30


@dataclass(frozen=True)
class MacdonaldPoly:
    """
    Coefficients of P_lambda in the monomial basis {m_mu : mu <= lambda, l(mu) <= n}

    coeffs[lam] is exactly 1; evaluation is homogeneous of degree |lam|.
    """
    lam: Partition
    n_vars: int
    coeffs: Dict[Partition, object]
    q: object
    t: object

    @property
    def degree(self) -> int:
        return self.lam.size

    def __call__(self, z: Sequence):
        if len(z) != self.n_vars:
            raise DomainError(f"P_{self.lam.parts} takes {self.n_vars} variables, got {len(z)}")
        return sum(c * monomial_sym(mu, z) for mu, c in self.coeffs.items())

    def coefficient(self, mu: Partition):
        return self.coeffs.get(mu, 0)


def eigenvalue(lam: Partition, n: int, q, t):
    """sum_i q^lambda_i t^(n-i)"""
    return sum(q ** lam[i] * t ** (n - 1 - i) for i in range(n))


def operator_coefficients(z: Sequence, t) -> List:
    """prod_{j != i} (t z_i - z_j) / (z_i - z_j) for every i"""
    n = len(z)
    coefficients = []
    for i in range(n):
        value = 1
        for j in range(n):
            if j != i:
                value *= (t * z[i] - z[j]) / (z[i] - z[j])
        coefficients.append(value)
    return coefficients


def macdonald_operator(f, z: Sequence, q, t):
    """(D f)(z) for a callable f of n variables"""
    z = list(z)
    total = 0
    for i, a in enumerate(operator_coefficients(z, t)):
        shifted = list(z)
        shifted[i] = q * z[i]
        total += a * f(shifted)
    return total


def _collocation_points(d: int, n: int, count: int, ctx: PrecisionContext) -> List[List]:
    """Fixed pseudo-random points on the unit torus for one (degree, n)"""
    mp = ctx.mp
    material = f"macdonald|{d}|{n}".encode('utf-8')
    key = int.from_bytes(hashlib.sha256(material).digest()[:16], 'big')
    rng = np.random.Generator(np.random.Philox(key=key))
    thetas = rng.uniform(0.0, 1.0, size=(count, n))
    return [[mp.expjpi(2 * mp.mpf(float(theta))) for theta in row] for row in thetas]


def _operator_matrix(basis: Sequence[Partition], n: int, q, t, ctx: PrecisionContext):
    """Matrix of D in the monomial basis: column mu holds the coefficients of D m_mu"""
    mp = ctx.mp
    size = len(basis)
    d = basis[0].size
    V = mp.matrix(size, size)
    W = mp.matrix(size, size)
    for r, z in enumerate(_collocation_points(d, n, size, ctx)):
        coefficients = operator_coefficients(z, t)
        shifted = []
        for i in range(n):
            point = list(z)
            point[i] = q * z[i]
            shifted.append(point)
        for c, mu in enumerate(basis):
            V[r, c] = monomial_sym(mu, z)
            W[r, c] = sum(a * monomial_sym(mu, point) for a, point in zip(coefficients, shifted))
    return mp.inverse(V) * W


def _build_degree(d: int, n: int, q, t, ctx: PrecisionContext) -> Dict[Partition, MacdonaldPoly]:
    mp = ctx.mp
    basis = partitions_of(d, n)
    if len(basis) == 1:
        lam = basis[0]
        return {lam: MacdonaldPoly(lam, n, {lam: mp.mpc(1)}, q, t)}

    with mp.workdps(mp.dps + EXTRA_DPS):
        qx, tx = mp.mpc(q), mp.mpc(t)
        D = _operator_matrix(basis, n, qx, tx, ctx)
        eig = [eigenvalue(mu, n, qx, tx) for mu in basis]
        scale = max(abs(e) for e in eig)

        drift = max(abs(D[c, c] - eig[c]) for c in range(len(basis)))
        if drift > mp.mpf(10) ** (-(ctx.digits - 15)) * scale:
            raise DegeneracyError(
                f"collocation for degree {d}, n={n} is ill-conditioned (diagonal drift {mp.nstr(drift, 3)})")

        separation = mp.mpf(10) ** (-(ctx.digits // 2)) * scale
        table = {}
        for li, lam in enumerate(basis):
            coeffs = {lam: mp.mpc(1)}
            lower = set(dominated_by(lam, n))
            for ci in range(li + 1, len(basis)):
                nu = basis[ci]
                if nu not in lower:
                    continue
                gap = eig[li] - eig[ci]
                if abs(gap) < separation:
                    raise DegeneracyError(
                        f"eigenvalues of {lam.parts} and {nu.parts} collide at n={n}",
                        index=lam.parts)
                acc = 0
                for cj in range(li, ci):
                    mu = basis[cj]
                    if mu in coeffs and dominance_leq(nu, mu):
                        acc += D[ci, cj] * coeffs[mu]
                coeffs[nu] = acc / gap
            table[lam] = coeffs

    return {lam: MacdonaldPoly(lam, n, {mu: +c for mu, c in coeffs.items()}, q, t)
            for lam, coeffs in table.items()}


_tables: Dict[Tuple, Dict[Partition, MacdonaldPoly]] = {}
_tables_lock = threading.Lock()


def degree_table(d: int, n: int, q, t, ctx: PrecisionContext) -> Dict[Partition, MacdonaldPoly]:
    """Every P_lambda with |lambda| = d and l(lambda) <= n, cached per (d, n, q, t, precision)"""
    mp = ctx.mp
    key = (d, n, mp.mpc(q), mp.mpc(t), ctx.digits, id(mp))
    table = _tables.get(key)
    if table is None:
        table = _build_degree(d, n, mp.mpc(q), mp.mpc(t), ctx)
        with _tables_lock:
            table = _tables.setdefault(key, table)
        logger.debug(f"built {len(table)} Macdonald polynomials of degree {d} in {n} variables")
    return table


def clear_tables():
    """Forget every cached degree table"""
    with _tables_lock:
        _tables.clear()


def cached_tables() -> int:
    return len(_tables)


def macdonald_P(lam, n_vars: int, q, t, ctx: PrecisionContext) -> MacdonaldPoly:
    """
    P_lambda(z; q, t) in n_vars variables

    Raises:
        DomainError: if lambda has more than n_vars parts
        DegeneracyError: for non-generic (q, t)
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if lam.length > n_vars:
        raise DomainError(f"P_{lam.parts} vanishes identically in {n_vars} variables")
    return degree_table(lam.size, n_vars, q, t, ctx)[lam]


def schur_bialternant(lam: Partition, z: Sequence, ctx: PrecisionContext):
    """det(z_i^(lambda_j + n - j)) / det(z_i^(n - j))"""
    mp = ctx.mp
    n = len(z)
    exps = [lam[j] + n - 1 - j for j in range(n)]
    numer = mp.matrix([[zi ** e for e in exps] for zi in z])
    denom = mp.matrix([[zi ** (n - 1 - j) for j in range(n)] for zi in z])
    return mp.det(numer) / mp.det(denom)
