"""Bisets over a ground set ``{0, ..., n-1}`` stored as integer bitmasks.

A biset is a pair ``(A, A+)`` with ``A`` a subset of ``A+``.  Its boundary is
``A+ - A``, its co-set is ``V - A+`` and its co-biset is ``(V - A+, V - A)``.
An edge covers a biset when it joins the inner set to the co-set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


def mask_of(nodes: Iterable[int]) -> int:
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


def nodes_of(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True, order=True)
class Biset:
    """Value object ``(inner, outer)``; ``n`` fixes the ground set.

    Ordering is the canonical one used for sorting families: lexicographic on
    the ``(inner, outer)`` bitmask pair.
    """

    inner: int
    outer: int
    n: int

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if self.inner & ~self.outer:
            raise ValueError("inner set must be contained in outer set")
        if self.outer & ~full:
            raise ValueError("biset exceeds the ground set")

    @classmethod
    def of(cls, inner: Iterable[int], outer: Iterable[int], n: int) -> "Biset":
        inner = mask_of(inner)
        return cls(inner, inner | mask_of(outer), n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def boundary(self) -> int:
        return self.outer & ~self.inner

    @property
    def coset(self) -> int:
        return self.full & ~self.outer

    def is_proper(self) -> bool:
        return self.inner != 0 and self.coset != 0

    def __repr__(self) -> str:
        return f"Biset({nodes_of(self.inner)}, {nodes_of(self.outer)})"


@dataclass(frozen=True)
class CandidateEdge:
    u: int
    v: int
    cost: int = 0
    index: int = 0

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError("candidate edge is a self-loop")
        if self.cost < 0:
            raise ValueError("costs must be non-negative")

    @property
    def mask(self) -> int:
        return (1 << self.u) | (1 << self.v)


class _Root:
    """Marker for the root node on the ``Y`` side of :func:`separates`."""

    def __repr__(self) -> str:
        return "ROOT"


ROOT = _Root()

Edgeish = Union[CandidateEdge, tuple[int, int]]


def _edge_mask(e: Edgeish) -> int:
    if isinstance(e, CandidateEdge):
        return e.mask
    u, v = e
    return (1 << u) | (1 << v)


def covers(e: Edgeish, b: Biset) -> bool:
    m = _edge_mask(e)
    lo = m & -m
    hi = m ^ lo
    return bool((lo & b.inner and hi & b.coset) or (hi & b.inner and lo & b.coset))


def contains(a: Biset, b: Biset) -> bool:
    """True iff ``a`` is contained in ``b`` (``A <= B`` and ``A+ <= B+``)."""
    return not (a.inner & ~b.inner) and not (a.outer & ~b.outer)


def intersects(a: Biset, b: Biset) -> bool:
    return bool(a.inner & b.inner)


def crosses(a: Biset, b: Biset) -> bool:
    return intersects(a, b) and (a.outer | b.outer) != a.full


def co_crosses(a: Biset, b: Biset) -> bool:
    return bool(a.inner & ~b.outer) and bool(b.inner & ~a.outer)


def cap(a: Biset, b: Biset) -> Biset:
    return Biset(a.inner & b.inner, a.outer & b.outer, a.n)


def cup(a: Biset, b: Biset) -> Biset:
    return Biset(a.inner | b.inner, a.outer | b.outer, a.n)


def co_biset(a: Biset) -> Biset:
    return Biset(a.full & ~a.outer, a.full & ~a.inner, a.n)


def separates(a: Biset, X: Iterable, Y: Iterable) -> bool:
    """Whether ``a`` separates ``X`` (cores and edges) from ``Y`` (edges, ROOT).

    Cores in ``X`` must be contained in ``a``, edges in ``X`` must lie inside
    ``A+`` and edges in ``Y`` must avoid ``A``.  The root imposes nothing
    here; members of the families used by the solver keep it in the co-set.
    """
    X = list(X)
    Y = list(Y)
    x_edges = [x for x in X if not isinstance(x, Biset)]
    y_edges = [y for y in Y if y is not ROOT]
    if any(x == y for x in x_edges for y in y_edges):
        raise ValueError("X and Y share an edge")
    for x in X:
        if isinstance(x, Biset):
            if not contains(x, a):
                return False
        elif _edge_mask(x) & ~a.outer:
            return False
    return all(not (_edge_mask(y) & a.inner) for y in y_edges)
