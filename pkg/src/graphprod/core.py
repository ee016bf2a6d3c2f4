"""Finitely generated abelian groups used as vertex labels.

Cyclic factor orders are plain integers.  ``INFINITE`` (0, as in Z/0Z = Z)
stands for the infinite cyclic group, so ``lcm`` and ``gcd`` arithmetic keeps
working: ``lcm(n, INFINITE) == INFINITE``.

Text grammar: factors joined by ``x``, each one ``Z``, ``Z^k`` or ``Z/n``::

    >>> str(AbelianLabel.parse("Z^2xZ/4xZ/6"))
    'Z/2xZ/12xZ^2'
    >>> primary_decompose(AbelianLabel.parse("ZxZ/12"))
    (4, 3, 0)
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import LabelError, ParseError

INFINITE = 0

__all__ = [
    "INFINITE",
    "AbelianLabel",
    "factorize",
    "is_prime_power",
    "factor_sort_key",
    "primary_decompose",
    "invariant_factors",
    "is_indecomposable",
    "format_factor",
]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{p: a}`` of a positive integer, by trial division."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def factor_sort_key(order: int) -> tuple:
    """Canonical position of a cyclic factor: prime powers by (prime, exponent), INFINITE last."""
    if order == INFINITE:
        return (1, 0, 0)
    f = factorize(order)
    if len(f) == 1:
        ((p, a),) = f.items()
        return (0, p, a)
    # not primary; only reachable for callers sorting arbitrary orders
    return (0, order, 0)


def format_factor(order: int) -> str:
    return "Z" if order == INFINITE else f"Z/{order}"


_FACTOR_RE = re.compile(r"Z(?:\^(\d+)|/(\d+))?$")


@dataclass(frozen=True)
class AbelianLabel:
    """``Z^free_rank x Z/t1 x Z/t2 x ...`` with the torsion orders kept as given (sorted)."""

    free_rank: int = 0
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise LabelError(f"negative free rank {self.free_rank}")
        orders = tuple(sorted(int(n) for n in self.torsion_orders))
        for n in orders:
            if n < 2:
                raise LabelError(f"torsion order must be >= 2, got {n}")
        if self.free_rank == 0 and not orders:
            raise LabelError("vertex groups must be non-trivial")
        object.__setattr__(self, "torsion_orders", orders)

    @classmethod
    def cyclic(cls, order: int) -> AbelianLabel:
        if order == INFINITE:
            return cls(1)
        return cls(0, (order,))

    @classmethod
    def from_factors(cls, orders) -> AbelianLabel:
        orders = list(orders)
        return cls(orders.count(INFINITE), tuple(n for n in orders if n != INFINITE))

    @classmethod
    def parse(cls, text: str) -> AbelianLabel:
        """Parse the ``x``-joined factor grammar; columns in errors are 1-based."""
        if not text:
            raise ParseError("empty abelian label", column=1)
        free_rank = 0
        torsion = []
        col = 1
        for token in text.split("x"):
            m = _FACTOR_RE.match(token)
            if not m:
                raise ParseError(f"bad cyclic factor {token!r} (expected Z, Z^k or Z/n)", column=col)
            rank, mod = m.groups()
            if rank is not None:
                if int(rank) < 1:
                    raise ParseError(f"free rank must be >= 1 in {token!r}", column=col)
                free_rank += int(rank)
            elif mod is not None:
                if int(mod) < 2:
                    raise ParseError(f"cyclic order must be >= 2 in {token!r}", column=col)
                torsion.append(int(mod))
            else:
                free_rank += 1
            col += len(token) + 1
        return cls(free_rank, tuple(torsion))

    def __mul__(self, other: AbelianLabel) -> AbelianLabel:
        return AbelianLabel(self.free_rank + other.free_rank, self.torsion_orders + other.torsion_orders)

    def __str__(self):
        parts = [format_factor(d) for d in invariant_factors(self) if d != INFINITE]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return "x".join(parts)

    def canonical(self) -> AbelianLabel:
        """Same group, torsion stored as its invariant-factor chain."""
        return AbelianLabel.from_factors(invariant_factors(self))

    def key(self) -> tuple[int, ...]:
        """Hashable isomorphism invariant: equal keys iff isomorphic groups."""
        return invariant_factors(self)

    def isomorphic(self, other: AbelianLabel) -> bool:
        return self.key() == other.key()

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        """Group order, or INFINITE."""
        return math.prod(self.torsion_orders) if self.is_finite else INFINITE

    @property
    def is_cyclic(self) -> bool:
        return len(invariant_factors(self)) == 1

    @property
    def cyclic_order(self) -> int:
        """Order of the generator of a cyclic label (INFINITE for Z)."""
        inv = invariant_factors(self)
        if len(inv) != 1:
            raise LabelError(f"label {self} is not cyclic")
        return inv[0]


def primary_decompose(label: AbelianLabel) -> tuple[int, ...]:
    """Directly-indecomposable cyclic factors of ``label`` in canonical order."""
    out = []
    for n in label.torsion_orders:
        out.extend(p**a for p, a in factorize(n).items())
    out.sort(key=factor_sort_key)
    return tuple(out) + (INFINITE,) * label.free_rank


def invariant_factors(label: AbelianLabel) -> tuple[int, ...]:
    """Invariant-factor chain ``d1 | d2 | ... | dk`` followed by the free factors."""
    by_prime: dict[int, list[int]] = {}
    for n in label.torsion_orders:
        for p, a in factorize(n).items():
            by_prime.setdefault(p, []).append(a)
    k = max((len(v) for v in by_prime.values()), default=0)
    chain = [1] * k
    for p, exps in by_prime.items():
        exps.sort(reverse=True)
        for j, a in enumerate(exps):
            chain[k - 1 - j] *= p**a
    return tuple(chain) + (INFINITE,) * label.free_rank


def is_indecomposable(label: AbelianLabel) -> bool:
    if label.free_rank == 1 and not label.torsion_orders:
        return True
    return label.free_rank == 0 and len(label.torsion_orders) == 1 and is_prime_power(label.torsion_orders[0])
