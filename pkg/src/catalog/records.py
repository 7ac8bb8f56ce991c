#!/usr/bin/env python
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Any

from ..utils.config import PrecisionContext
from ..utils.qkernel import get_kernel, QKernel

logger = logging.getLogger(__name__)


class Family(Enum):
    SERIES_TERMINATING = 'series_terminating'
    SERIES_NONTERMINATING = 'series_nonterminating'
    BILATERAL = 'bilateral'
    TRANSFORMATION = 'transformation'
    CONSISTENCY = 'consistency'
    INTEGRAL = 'integral'
    CONSTANT_TERM = 'constant_term'
    MACDONALD = 'macdonald'


class ParamSet:
    """
    Named parameter assignment for one identity instance

    Scalars and sequences live in ``values``; integer orders (N, N-sequence,
    m, sigma, ...) in ``orders``. Aggregates such as X = x_1...x_n are
    recomputed from the primitives on every access.
    """

    def __init__(self, n: int, values: Dict[str, Any], orders: Dict[str, Any],
                 ctx: PrecisionContext):
        self.n = n
        self.values = dict(values)
        self.orders = dict(orders)
        self.ctx = ctx

    @property
    def mp(self):
        return self.ctx.mp

    @property
    def kernel(self) -> QKernel:
        return get_kernel(self.ctx)

    def __getitem__(self, name: str):
        if name in self.values:
            return self.values[name]
        return self.orders[name]

    def __contains__(self, name: str) -> bool:
        return name in self.values or name in self.orders

    def set(self, name: str, value):
        self.values[name] = value

    def _product(self, name: str):
        return self.mp.fprod(self.values[name])

    @property
    def X(self):
        return self._product('x')

    @property
    def A(self):
        return self._product('a')

    @property
    def B(self):
        return self._product('b')

    @property
    def C(self):
        return self._product('c')

    @property
    def E(self):
        return self._product('e')

    @property
    def lambda_bailey(self):
        """a^2 q / (c d e) for scalar c, d, e"""
        v = self.values
        return v['a'] ** 2 * v['q'] / (v['c'] * v['d'] * v['e'])

    def derive(self, values: Dict[str, Any], orders: Optional[Dict[str, Any]] = None,
               n: int = 1) -> "ParamSet":
        """Fresh parameter set sharing this one's base q and context"""
        base = {'q': self.values['q']} if 'q' in self.values else {}
        base.update(values)
        return ParamSet(n, base, orders or {}, self.ctx)

    def copy(self, n: Optional[int] = None, values: Optional[Dict[str, Any]] = None,
             orders: Optional[Dict[str, Any]] = None) -> "ParamSet":
        new_values = {k: (list(v) if isinstance(v, list) else v) for k, v in self.values.items()}
        new_values.update(values or {})
        new_orders = dict(self.orders)
        new_orders.update(orders or {})
        return ParamSet(self.n if n is None else n, new_values, new_orders, self.ctx)


@dataclass(frozen=True)
class ParamSpec:
    """
    Free complex parameter drawn by the sampler

    shape: 'scalar', 'n' (one per variable), 'n+1', 'm', 'm+1', '2n', '2n+2', 'p'
    or a fixed length such as '4'.
    shift: real offset added after drawing (q = 1 records need large real parts).
    """
    name: str
    shape: str = 'scalar'
    lo: float = 0.15
    hi: float = 0.85
    real: bool = False
    shift: float = 0.0


@dataclass(frozen=True)
class OrderSpec:
    """Integer parameter: termination orders, second dimension m, parity"""
    name: str
    shape: str = 'scalar'
    lo: int = 0
    hi: int = 4


@dataclass(frozen=True)
class Constraint:
    """Monomial relation solved in closed form for its dependent parameter"""
    target: str
    text: str
    solve: Callable[[ParamSet], Any]


@dataclass(frozen=True)
class DomainCondition:
    """
    Modulus inequalities |small| < |large| checked with an absolute margin

    ``pairs`` returns a list of (small, large) moduli for a parameter point.
    """
    text: str
    pairs: Callable[[ParamSet], List[Tuple[Any, Any]]]

    def holds(self, P: ParamSet, margin: float) -> bool:
        return all(small + margin <= large for small, large in self.pairs(P))


def below(text: str, fn: Callable[[ParamSet], Any], bound: float = 1.0) -> DomainCondition:
    """Shorthand for |fn(P)| < bound (fn may return a list)"""
    def pairs(P):
        values = fn(P)
        if not isinstance(values, (list, tuple)):
            values = [values]
        return [(abs(v), bound) for v in values]
    return DomainCondition(text, pairs)


@dataclass(frozen=True)
class Reduction:
    """
    n = 1 correspondence with a univariate template

    ``mapping`` builds the template's parameter set from the record's;
    ``scale`` (optional) is the factor with lhs_record = scale * lhs_template;
    ``orders`` pins integer parameters (such as m = 1) before sampling.
    """
    template: str
    mapping: Callable[[ParamSet], ParamSet]
    scale: Optional[Callable[[ParamSet], Any]] = None
    orders: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class IdentityRecord:
    """One catalog entry with independent left and right evaluators"""
    id: str
    family: Family
    anchor: str
    lhs: Callable[[ParamSet], Any]
    rhs: Callable[[ParamSet], Any]
    dims: Tuple[int, ...] = (1,)
    params: Tuple[ParamSpec, ...] = ()
    orders: Tuple[OrderSpec, ...] = ()
    constraints: Tuple[Constraint, ...] = ()
    domain: Tuple[DomainCondition, ...] = ()
    window: Tuple[DomainCondition, ...] = ()
    guards: Tuple[Callable[[ParamSet], bool], ...] = ()
    reduction: Optional[Reduction] = None
    notes: Tuple[str, ...] = ()
    terminating: bool = True
    regime: Optional[str] = None

    @property
    def tolerance_kind(self) -> str:
        """'series', 'bilateral' or 'quadrature'"""
        if self.regime:
            return self.regime
        return 'series' if self.terminating else 'bilateral'

    def tolerance(self, ctx: PrecisionContext) -> float:
        return {
            'series': ctx.verify_tol,
            'bilateral': ctx.bilateral_tol,
            'quadrature': ctx.quad_tol,
        }[self.tolerance_kind]

    def manifest_entry(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'family': self.family.value,
            'anchor': self.anchor,
            'dimensions': list(self.dims),
            'parameters': [{'name': p.name, 'shape': p.shape, 'modulus': [p.lo, p.hi],
                            'real': p.real} for p in self.params],
            'orders': [{'name': o.name, 'shape': o.shape, 'range': [o.lo, o.hi]}
                       for o in self.orders],
            'constraints': [f"{c.target} = {c.text}" for c in self.constraints],
            'domain': [d.text for d in self.domain],
            'sampling_window': [d.text for d in self.window],
            'univariate_reduction': self.reduction.template if self.reduction else None,
            'notes': list(self.notes),
            'tolerance_regime': self.tolerance_kind,
        }


def distinct_guard(name: str, spread: float = 0.05) -> Callable[[ParamSet], bool]:
    """Entries of a sequence parameter must stay apart relative to their size"""
    def guard(P: ParamSet) -> bool:
        seq = P[name]
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if abs(seq[i] - seq[j]) < spread * max(abs(seq[i]), abs(seq[j])):
                    return False
        return True
    return guard


def lattice_guard(fn: Callable[[ParamSet], Sequence], span: int = 12,
                  spread: float = 0.02) -> Callable[[ParamSet], bool]:
    """
    Values returned by fn stay clear of q^j for |j| <= span

    (v;q)_k with negative k, (v;q)_inf and reciprocal ladders vanish or blow
    up exactly on that lattice.
    """
    def guard(P: ParamSet) -> bool:
        values = fn(P)
        if not isinstance(values, (list, tuple)):
            values = [values]
        q = P['q']
        for v in values:
            for j in range(-span, span + 1):
                point = q ** j
                if abs(v - point) < spread * max(1, abs(point)):
                    return False
        return True
    return guard


def away_from_one(fn: Callable[[ParamSet], Sequence], spread: float = 0.05) -> Callable[[ParamSet], bool]:
    """Every value returned by fn stays at least `spread` away from 1"""
    def guard(P: ParamSet) -> bool:
        values = fn(P)
        if not isinstance(values, (list, tuple)):
            values = [values]
        return all(abs(1 - v) >= spread for v in values)
    return guard


def integer_guard(fn: Callable[[ParamSet], Sequence], spread: float = 0.05) -> Callable[[ParamSet], bool]:
    """Values returned by fn stay `spread` away from every integer (poles of (v)_k and Gamma)"""
    def guard(P: ParamSet) -> bool:
        values = fn(P)
        if not isinstance(values, (list, tuple)):
            values = [values]
        return all(abs(v - round(float(v.real))) >= spread for v in values)
    return guard


def off_diagonal(seq: Sequence, fn: Callable[[Any, Any], Any]) -> List:
    """[fn(seq[i], seq[j]) for i != j]"""
    return [fn(seq[i], seq[j]) for i in range(len(seq)) for j in range(len(seq)) if i != j]
