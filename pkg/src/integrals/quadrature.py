#!/usr/bin/env python
"""
Quadrature rules for the integral evaluations

Three rules cover every integral in the catalog: the product trapezoid rule
on the torus (analytic periodic integrands), tensor Gauss-Jacobi on the
ordered simplex for Selberg-type integrals, and the trapezoid rule along
imaginary axes for Mellin-Barnes integrals.
"""
import logging
import itertools
from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict, List, Sequence, Tuple

from ..utils.config import PrecisionContext
from ..utils.errors import BudgetError, ConvergenceError, DomainError
from ..utils.numerics import gamma

logger = logging.getLogger(__name__)

TORUS_START = 32
JACOBI_START = 8
JACOBI_MAX = 256
JACOBI_TARGET = 1e-8
LINE_STEP = 0.5
LINE_TARGET = 1e-8
LINE_MIN_STEP = 1.0 / 64
LINE_MAX_HEIGHT = 60


@dataclass
class QuadratureResult:
    """
    Value of a numerical integral with its convergence diagnostics

    est_error is the relative change over the last refinement (grid
    doubling or step halving); terms counts integrand evaluations.
    """
    value: object
    grid: int
    est_error: object
    terms: int = 0
    note: str = ''

    def _wrap(self, value) -> "QuadratureResult":
        return QuadratureResult(value, self.grid, self.est_error, self.terms, self.note)

    def __mul__(self, other):
        return self._wrap(self.value * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.value / other)


@dataclass(frozen=True)
class TorusIntegrand:
    """
    Integrand on T^n_free with the normalised measure prod dz_i / (2 pi i z_i)

    With ``constrained`` set the evaluator receives n_free + 1 coordinates,
    the last one fixed by z_1 ... z_{n_free+1} = 1.
    """
    n_free: int
    evaluator: Callable[[Sequence], object]
    constrained: bool = False


def _relative_change(new, old, mass, target, mp):
    floor = mass * mp.mpf(target)
    return abs(new - old) / max(abs(new), floor, mp.mpf(10) ** (-mp.dps))


def torus_integrate(f: TorusIntegrand, ctx: PrecisionContext) -> QuadratureResult:
    """
    Product trapezoid rule with grid doubling

    Node values are cached under their index at the finest admissible grid,
    so each doubling only evaluates the new nodes. Accumulation runs in
    lexicographic node order.

    Args:
        f: Torus integrand
        ctx: Precision context (quad_target, max_grid, max_terms)

    Returns:
        QuadratureResult with the mean of f over the torus

    Raises:
        BudgetError: if a grid would exceed max_terms nodes
        ConvergenceError: if the relative change is still above quad_target at max_grid
    """
    mp = ctx.mp
    dim = f.n_free
    if dim < 1:
        raise DomainError(f"torus integrand needs at least one free variable, got {dim}")
    fine = ctx.max_grid
    cache: Dict[Tuple[int, ...], object] = {}
    roots = [mp.expjpi(2 * mp.mpf(j) / fine) for j in range(fine)]

    def node(index: Tuple[int, ...]):
        value = cache.get(index)
        if value is None:
            z = [roots[j] for j in index]
            if f.constrained:
                z.append(1 / mp.fprod(z))
            value = f.evaluator(z)
            cache[index] = value
        return value

    def rule(M: int):
        if M ** dim > ctx.max_terms:
            raise BudgetError(f"torus grid {M}^{dim} exceeds max_terms={ctx.max_terms}")
        stride = fine // M
        values = [node(tuple(stride * j for j in idx))
                  for idx in itertools.product(range(M), repeat=dim)]
        total = mp.fsum(values)
        mass = mp.fsum(abs(v) for v in values)
        return total / M ** dim, mass / M ** dim

    M = TORUS_START
    previous, _ = rule(M)
    change = mp.inf
    while 2 * M <= fine:
        M *= 2
        current, mass = rule(M)
        change = _relative_change(current, previous, mass, ctx.quad_target, mp)
        logger.debug(f"torus grid {M}^{dim}: relative change {mp.nstr(change, 5)}")
        if change < ctx.quad_target:
            return QuadratureResult(current, M, change, len(cache),
                                    note=f"trapezoid {M}^{dim}, change {mp.nstr(change, 3)}")
        previous = current
    raise ConvergenceError(
        f"torus quadrature not converged at grid {M}^{dim} (relative change {mp.nstr(change, 5)})")


# -- Gauss-Jacobi on [0, 1] --------------------------------------------------

def gauss_jacobi(N: int, a, b, ctx: PrecisionContext) -> Tuple[List, List]:
    """
    N-point rule for the weight (1 - s)^a s^b on [0, 1]

    Golub-Welsch on the Jacobi matrix of the weight (1 - x)^a (1 + x)^b on
    [-1, 1], mapped by s = (1 + x) / 2. Weights sum to B(a + 1, b + 1).
    """
    mp = ctx.mp
    a = mp.mpf(a)
    b = mp.mpf(b)
    if a <= -1 or b <= -1:
        raise DomainError(f"Jacobi weight exponents must exceed -1, got a={a}, b={b}")
    J = mp.zeros(N, N)
    for k in range(N):
        if k == 0:
            J[0, 0] = (b - a) / (a + b + 2)
        else:
            s = 2 * k + a + b
            J[k, k] = (b * b - a * a) / (s * (s + 2))
            off = mp.sqrt(4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1)))
            J[k, k - 1] = off
            J[k - 1, k] = off
    eigenvalues, vectors = mp.eigsy(J)
    mass = mp.beta(a + 1, b + 1)
    order = sorted(range(N), key=lambda j: eigenvalues[j])
    nodes = [(1 + eigenvalues[j]) / 2 for j in order]
    weights = [mass * vectors[0, j] ** 2 for j in order]
    return nodes, weights


def _real_parameter(value, name, mp):
    value = mp.mpc(value)
    if value.imag != 0:
        raise DomainError(f"{name} must be real for the ordered-simplex rule, got {mp.nstr(value, 8)}")
    return mp.mpf(value.real)


def _is_integer(value, mp) -> bool:
    return value == mp.nint(value)


def selberg_integrate(n: int, alpha, beta, gamma_, ctx: PrecisionContext) -> QuadratureResult:
    """
    Selberg integral over [0, 1]^n by tensor Gauss-Jacobi quadrature

    The integrand is symmetric, so the cube is replaced by n! times the
    ordered region 0 < z_1 < ... < z_n < 1, parametrised by
    z_i = s_i s_{i+1} ... s_n. In these coordinates

        s_k carries s_k^(e_k) with e_k = (alpha-1)k + (k-1) + gamma k(k-1),
        s_n also carries (1 - s_n)^(beta-1),

    and both are built into the nodes. What remains,
    prod_{i<n} (1 - z_i)^(beta-1) prod_{i<j} (1 - s_i ... s_{j-1})^(2 gamma),
    is a polynomial whenever beta is an integer and 2 gamma is an integer.
    Only then is the rule exact, so for n >= 2 both are required; at n = 1
    the remainder is 1 and any beta > 0 is accepted.

    Raises:
        DomainError: for complex parameters or alpha, beta <= 0
            or, for n >= 2, beta or 2 gamma not an integer
        ConvergenceError: if JACOBI_TARGET is not met by JACOBI_MAX nodes
    """
    mp = ctx.mp
    alpha = _real_parameter(alpha, 'alpha', mp)
    beta = _real_parameter(beta, 'beta', mp)
    g = _real_parameter(gamma_, 'gamma', mp)
    if alpha <= 0 or beta <= 0:
        raise DomainError("Selberg integral requires alpha > 0 and beta > 0")
    if g < 0:
        raise DomainError("Selberg integral requires gamma >= 0")
    if n >= 2 and not (_is_integer(beta, mp) and _is_integer(2 * g, mp)):
        raise DomainError(f"Selberg quadrature in {n} variables needs integer beta and 2 gamma, "
                          f"got beta={mp.nstr(beta, 8)}, gamma={mp.nstr(g, 8)}")

    exponents = [(alpha - 1) * k + (k - 1) + g * k * (k - 1) for k in range(1, n + 1)]

    def remainder(s):
        z = [mp.fprod(s[i:]) for i in range(n)]
        value = mp.mpf(1)
        for i in range(n - 1):
            value *= (1 - z[i]) ** (beta - 1)
        for i in range(n):
            for j in range(i + 1, n):
                value *= (1 - mp.fprod(s[i:j])) ** (2 * g)
        return value

    def rule(N: int):
        if N ** n > ctx.max_terms:
            raise BudgetError(f"Gauss-Jacobi grid {N}^{n} exceeds max_terms={ctx.max_terms}")
        rules = [gauss_jacobi(N, beta - 1 if k == n - 1 else 0, exponents[k], ctx) for k in range(n)]
        total = mp.mpf(0)
        for idx in itertools.product(range(N), repeat=n):
            s = [rules[k][0][idx[k]] for k in range(n)]
            w = mp.fprod(rules[k][1][idx[k]] for k in range(n))
            total += w * remainder(s)
        return factorial(n) * total

    N = JACOBI_START
    previous = rule(N)
    used = N ** n
    while 2 * N <= JACOBI_MAX:
        N *= 2
        current = rule(N)
        used += N ** n
        change = _relative_change(current, previous, abs(current), JACOBI_TARGET, mp)
        logger.debug(f"Gauss-Jacobi {N}^{n}: relative change {mp.nstr(change, 5)}")
        if change < JACOBI_TARGET:
            return QuadratureResult(mp.mpc(current), N, change, used,
                                    note=f"Gauss-Jacobi {N}^{n}, change {mp.nstr(change, 3)}")
        previous = current
    raise ConvergenceError(f"Selberg quadrature not converged with {N}^{n} nodes")


def selberg_product(n: int, alpha, beta, gamma_, ctx: PrecisionContext):
    """Closed form of the Selberg integral as a product of Gamma values"""
    mp = ctx.mp
    result = mp.mpc(1)
    for i in range(1, n + 1):
        result *= gamma(alpha + (i - 1) * gamma_, ctx) * gamma(beta + (i - 1) * gamma_, ctx)
        result *= gamma(1 + i * gamma_, ctx)
        result /= gamma(alpha + beta + (n + i - 2) * gamma_, ctx) * gamma(1 + gamma_, ctx)
    return result


# -- Mellin-Barnes along imaginary axes --------------------------------------

def mellin_barnes_integrand(a: Sequence, b: Sequence, ctx: PrecisionContext) -> Callable:
    """
    prod_{i,j} Gamma(a_i - z_j) Gamma(b_i + z_j) / prod_{i != j} Gamma(z_i - z_j)

    as a function of the free heights y (z_j = i y_j, z_{n+1} = -sum z_j).
    Reciprocal Gamma keeps the denominator entire.
    """
    mp = ctx.mp

    def evaluate(y):
        z = [mp.mpc(0, v) for v in y]
        z.append(-mp.fsum(z))
        value = mp.mpc(1)
        for zj in z:
            for ai in a:
                value *= mp.gamma(ai - zj)
            for bi in b:
                value *= mp.gamma(bi + zj)
        for i, zi in enumerate(z):
            for j, zj in enumerate(z):
                if i != j:
                    value *= mp.rgamma(zi - zj)
        return value

    return evaluate


def mellin_barnes_integrate(n: int, a: Sequence, b: Sequence, ctx: PrecisionContext) -> QuadratureResult:
    """
    (2 pi i)^-n times the integral over (i R)^n with z_{n+1} = -(z_1 + ... + z_n)

    The truncation height T grows until the integrand on the axes at
    height T is below trunc_tol relative to its size near the origin; the
    trapezoid step is then halved until the relative change drops below
    LINE_TARGET.

    Raises:
        DomainError: unless Re a_i > 0 and Re b_i > 0
        ConvergenceError: if the step or height limits are exhausted
    """
    mp = ctx.mp
    if len(a) != n + 1 or len(b) != n + 1:
        raise DomainError(f"Mellin-Barnes integral in {n} variables needs {n + 1} a's and b's")
    if any(mp.re(v) <= 0 for v in list(a) + list(b)):
        raise DomainError("Mellin-Barnes contour needs Re a_i > 0 and Re b_i > 0")
    f = mellin_barnes_integrand(a, b, ctx)

    def axis_points(height):
        for k in range(n):
            for sign in (1, -1):
                y = [mp.mpf(0)] * n
                y[k] = sign * mp.mpf(height)
                yield y

    scale = max(abs(f(y)) for y in axis_points(1))
    T = 4
    while max(abs(f(y)) for y in axis_points(T)) >= ctx.trunc_tol * scale:
        T += 2
        if T > LINE_MAX_HEIGHT:
            raise ConvergenceError(f"Mellin-Barnes integrand not decayed by height {LINE_MAX_HEIGHT}")

    cache: Dict[Tuple, object] = {}

    def node(y):
        key = tuple(y)
        value = cache.get(key)
        if value is None:
            value = f(y)
            cache[key] = value
        return value

    def rule(h):
        steps = int(mp.ceil(T / h))
        if (2 * steps + 1) ** n > ctx.max_terms:
            raise BudgetError(f"Mellin-Barnes grid {(2 * steps + 1)}^{n} exceeds max_terms")
        axis = [h * j for j in range(-steps, steps + 1)]
        total = mp.fsum(node(list(y)) for y in itertools.product(axis, repeat=n))
        return total * (h / (2 * mp.pi)) ** n

    h = mp.mpf(LINE_STEP)
    previous = rule(h)
    while h / 2 >= LINE_MIN_STEP:
        h /= 2
        current = rule(h)
        change = _relative_change(current, previous, abs(current), LINE_TARGET, mp)
        logger.debug(f"Mellin-Barnes step {mp.nstr(h, 4)}, height {T}: change {mp.nstr(change, 5)}")
        if change < LINE_TARGET:
            return QuadratureResult(current, int(2 * T / h) + 1, change, len(cache),
                                    note=f"trapezoid step {mp.nstr(h, 4)} up to height {T}")
        previous = current
    raise ConvergenceError(f"Mellin-Barnes quadrature not converged at step {mp.nstr(h, 4)}")


def mellin_barnes_product(n: int, a: Sequence, b: Sequence, ctx: PrecisionContext):
    """(n+1)! Gamma(sum a) Gamma(sum b) prod_{i,j} Gamma(a_i + b_j) / Gamma(sum a + sum b)"""
    mp = ctx.mp
    A = mp.fsum(a)
    B = mp.fsum(b)
    result = factorial(n + 1) * gamma(A, ctx) * gamma(B, ctx) / gamma(A + B, ctx)
    for ai in a:
        for bj in b:
            result *= gamma(ai + bj, ctx)
    return result
