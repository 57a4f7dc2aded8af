"""Inclusion-based conflict measure between two mass functions.

Two bodies of evidence conflict when they are far apart *and* neither's
focal elements nest inside the other's.  The measure combines the focal
inclusion degree with the Jaccard-weighted distance, giving 0 for nested
evidence and 1 for certain, disjoint evidence.
"""

from __future__ import annotations

from .belief import MassFunction, _require_same_frame, jousselme_distance

__all__ = [
    "inclusion_index",
    "inclusion_degree",
    "symmetric_inclusion",
    "conflict",
]


def inclusion_index(x: int, y: int) -> int:
    """1 if subset ``x`` is included in subset ``y``, else 0.

    The empty set is included in everything.
    """
    return 1 if x & y == x else 0


def inclusion_degree(m1: MassFunction, m2: MassFunction) -> float:
    """Fraction of focal pairs of ``m1`` x ``m2`` where the first nests in
    the second.  Asymmetric."""
    _require_same_frame(m1, m2)
    f1 = m1.focal_sets()
    f2 = m2.focal_sets()
    included = sum(inclusion_index(x, y) for x in f1 for y in f2)
    return included / (len(f1) * len(f2))


def symmetric_inclusion(m1: MassFunction, m2: MassFunction) -> float:
    """Larger of the two one-way inclusion degrees."""
    return max(inclusion_degree(m1, m2), inclusion_degree(m2, m1))


def conflict(m1: MassFunction, m2: MassFunction) -> float:
    """Conflict between two mass functions, in [0, 1].

    ``(1 - symmetric_inclusion) * jousselme_distance``: distance scaled
    down by how much one body of evidence nests inside the other.
    Symmetric, zero for identical inputs, never above the raw distance.
    """
    return (1.0 - symmetric_inclusion(m1, m2)) * jousselme_distance(m1, m2)
