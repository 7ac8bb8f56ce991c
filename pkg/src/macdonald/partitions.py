#!/usr/bin/env python
"""
Partitions, dominance order and monomial symmetric polynomials
"""
import logging
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations, partitions

from ..utils.errors import DomainError

logger = logging.getLogger(__name__)


class Partition:
    """
    Weakly decreasing sequence of nonnegative integers

    Trailing zeros are dropped, so (2, 1, 0) and (2, 1) are the same
    partition. Instances are hashable and ordered lexicographically.
    """

    __slots__ = ('parts',)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"partition parts must be nonnegative, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def __repr__(self):
        return f"Partition{self.parts}"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """lambda_{i+1}, zero beyond the length"""
        return self.parts[i] if i < len(self.parts) else 0

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    @property
    def size(self) -> int:
        """|lambda|"""
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        columns = [0] * (self.parts[0] if self.parts else 0)
        for row in self.parts:
            for j in range(row):
                columns[j] += 1
        return Partition(columns)

    def n_weight(self) -> int:
        """n(lambda) = sum (i-1) lambda_i"""
        return sum(i * p for i, p in enumerate(self.parts))

    def padded(self, n: int) -> Tuple[int, ...]:
        if self.length > n:
            raise DomainError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - self.length)

    def arm(self, i: int, j: int) -> int:
        """Cells to the right of (i, j), zero-based"""
        return self.parts[i] - j - 1

    def leg(self, i: int, j: int) -> int:
        """Cells below (i, j), zero-based"""
        return self.conjugate()[j] - i - 1

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j


def n_weight_of(parts: Sequence[int]) -> int:
    """sum (i-1) lambda_i for any integer sequence (dominant weights with negative parts)"""
    return sum(i * p for i, p in enumerate(parts))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """
    mu <= lam in dominance order

    Raises:
        DomainError: if |mu| != |lam|
    """
    if mu.size != lam.size:
        raise DomainError(f"dominance needs equal sizes, got |{mu}|={mu.size} and |{lam}|={lam.size}")
    mu_sum = lam_sum = 0
    for i in range(max(mu.length, lam.length)):
        mu_sum += mu[i]
        lam_sum += lam[i]
        if mu_sum > lam_sum:
            return False
    return True


@lru_cache(maxsize=512)
def partitions_of(d: int, max_len: int = None) -> Tuple[Partition, ...]:
    """Partitions of d with at most max_len parts, in decreasing lexicographic order"""
    if d < 0:
        raise DomainError(f"cannot partition {d}")
    if d == 0:
        return (Partition(),)
    found = []
    for multiplicities in partitions(d, m=max_len):
        parts = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        found.append(Partition(parts))
    return tuple(sorted(found, reverse=True))


def dominated_by(lam: Partition, n_vars: int) -> List[Partition]:
    """{mu <= lam : l(mu) <= n_vars} in decreasing lexicographic order (lam first)"""
    return [mu for mu in partitions_of(lam.size, n_vars) if dominance_leq(mu, lam)]


def partitions_up_to(d: int, max_len: int = None) -> List[Partition]:
    """All partitions of size <= d, grouped by size"""
    return [lam for size in range(d + 1) for lam in partitions_of(size, max_len)]


@lru_cache(maxsize=2048)
def exponent_vectors(mu: Partition, n: int) -> Tuple[Tuple[int, ...], ...]:
    """Distinct permutations of mu padded to n entries"""
    return tuple(tuple(v) for v in multiset_permutations(list(mu.padded(n))))


def monomial_sym(mu: Partition, z: Sequence):
    """m_mu(z): sum over distinct permutations of the exponents of prod z_i^e_i"""
    n = len(z)
    if mu.length > n:
        return 0
    total = 0
    for exponents in exponent_vectors(mu, n):
        term = 1
        for zi, e in zip(z, exponents):
            if e:
                term *= zi ** e
        total += term
    return total
