"""Core belief-function machinery.

Frames of discernment, basic belief assignments over the power set,
the classic combination rules (Dempster / conjunctive / disjunctive)
and the Jaccard-weighted distance between two bodies of evidence.

Subsets of a frame are plain ints interpreted as bitmasks: bit ``i`` set
means the ``i``-th hypothesis belongs to the subset.  ``0`` is the empty
set and ``2**n - 1`` is the whole frame.  Intersection, union and
cardinality are then single bit operations.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import (
    DuplicateSubset,
    FrameMismatch,
    InvalidSubset,
    NegativeMass,
    SumNotOne,
    TotalConflict,
)

__all__ = [
    "MASS_SUM_TOLERANCE",
    "INTERNAL_TOLERANCE",
    "MAX_FRAME_SIZE",
    "Frame",
    "MassFunction",
    "combine_conjunctive",
    "combine_disjunctive",
    "combine_dempster",
    "global_conflict",
    "jaccard",
    "jousselme_distance",
]

# Separates user data-entry error (construction) from numerical drift
# (identities between computed results).
MASS_SUM_TOLERANCE = 1e-9
INTERNAL_TOLERANCE = 1e-12

MAX_FRAME_SIZE = 16

# Largest frame for which the dense 2^n x 2^n similarity matrix is
# materialized; above this the matrix would exceed ~128 MiB.
_DENSE_MATRIX_LIMIT = 12


class Frame:
    """An ordered frame of discernment: named, mutually exclusive hypotheses.

    Immutable after construction and safe to share between threads.  The
    dense Jaccard similarity matrix over the power set is built lazily,
    exactly once, under a lock (see :meth:`jaccard_matrix`).
    """

    __slots__ = ("_labels", "_positions", "_matrix", "_matrix_lock")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        if not labels:
            raise ValueError("a frame needs at least one hypothesis")
        if len(labels) > MAX_FRAME_SIZE:
            raise ValueError(
                f"frame has {len(labels)} hypotheses, maximum is {MAX_FRAME_SIZE}"
            )
        positions: dict[str, int] = {}
        for i, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise ValueError(f"hypothesis {i} is not a non-empty string")
            if label in positions:
                raise ValueError(f"duplicate hypothesis name {label!r}")
            positions[label] = i
        self._labels = labels
        self._positions = positions
        self._matrix: np.ndarray | None = None
        self._matrix_lock = threading.Lock()

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def full_set(self) -> int:
        """Bitmask of the whole frame."""
        return (1 << len(self._labels)) - 1

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Frame):
            return NotImplemented
        return self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"Frame({list(self._labels)!r})"

    def subset(self, members: Iterable[str]) -> int:
        """Bitmask for the subset holding the given hypothesis names."""
        mask = 0
        for label in members:
            try:
                mask |= 1 << self._positions[label]
            except KeyError:
                raise InvalidSubset(
                    f"{label!r} is not a hypothesis of {self!r}"
                ) from None
        return mask

    def singleton(self, label: str) -> int:
        return self.subset((label,))

    def members(self, subset: int) -> tuple[str, ...]:
        """Hypothesis names of a subset, in frame order."""
        self.check_subset(subset)
        return tuple(
            label for i, label in enumerate(self._labels) if subset >> i & 1
        )

    def check_subset(self, subset: int) -> None:
        if not isinstance(subset, int) or subset < 0 or subset > self.full_set:
            raise InvalidSubset(
                f"subset {subset!r} is not a valid mask for a frame of size "
                f"{len(self._labels)}"
            )

    def subsets(self) -> range:
        """All subset masks, empty set through full frame."""
        return range(self.full_set + 1)

    def jaccard_matrix(self) -> np.ndarray:
        """Dense Jaccard similarity matrix over the whole power set.

        Entry ``[a, b]`` is ``jaccard(a, b)``.  Built on first use and
        cached; initialization is guarded so concurrent callers observe a
        single, fully-built matrix.  Only available for frames of at most
        12 hypotheses (the matrix has 4^n entries).
        """
        if self._matrix is not None:
            return self._matrix
        if len(self._labels) > _DENSE_MATRIX_LIMIT:
            raise ValueError(
                f"dense Jaccard matrix not materialized for frames larger "
                f"than {_DENSE_MATRIX_LIMIT} hypotheses"
            )
        with self._matrix_lock:
            if self._matrix is None:
                size = self.full_set + 1
                matrix = np.empty((size, size), dtype=float)
                for a in range(size):
                    for b in range(a, size):
                        matrix[a, b] = matrix[b, a] = jaccard(a, b)
                self._matrix = matrix
        return self._matrix


class MassFunction:
    """A basic belief assignment: positive masses on subsets, summing to one.

    Only focal elements (strictly positive mass) are stored; zero-mass
    entries are dropped at construction.  Instances are immutable.

    ``assignments`` may be a mapping from subset masks to masses or an
    iterable of ``(subset, mass)`` pairs.  Validation raises
    :class:`InvalidSubset`, :class:`NegativeMass`, :class:`DuplicateSubset`
    or :class:`SumNotOne`; masses are checked, never renormalized.
    """

    __slots__ = ("_frame", "_masses")

    def __init__(
        self,
        frame: Frame,
        assignments: Mapping[int, float] | Iterable[tuple[int, float]],
    ):
        if isinstance(assignments, Mapping):
            assignments = assignments.items()
        masses: dict[int, float] = {}
        for subset, mass in assignments:
            frame.check_subset(subset)
            if mass < 0.0:
                raise NegativeMass(f"mass {mass!r} on subset {subset:#b}")
            if subset in masses:
                raise DuplicateSubset(f"subset {subset:#b} assigned twice")
            masses[subset] = mass
        total = math.fsum(masses.values())
        if abs(total - 1.0) > MASS_SUM_TOLERANCE:
            raise SumNotOne(f"masses sum to {total!r}, expected 1")
        # Sorted storage gives every downstream loop a deterministic order.
        self._frame = frame
        self._masses = {s: m for s, m in sorted(masses.items()) if m > 0.0}

    @classmethod
    def vacuous(cls, frame: Frame) -> "MassFunction":
        """Total ignorance: all mass on the whole frame."""
        return cls(frame, {frame.full_set: 1.0})

    @property
    def frame(self) -> Frame:
        return self._frame

    def mass(self, subset: int) -> float:
        """Mass on a subset; zero for non-focal subsets."""
        self._frame.check_subset(subset)
        return self._masses.get(subset, 0.0)

    def focal_sets(self) -> tuple[int, ...]:
        return tuple(self._masses)

    def items(self) -> Iterator[tuple[int, float]]:
        return iter(self._masses.items())

    def to_dict(self) -> dict[int, float]:
        return dict(self._masses)

    def __len__(self) -> int:
        return len(self._masses)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self._frame == other._frame and self._masses == other._masses

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{{{','.join(self._frame.members(s)) or '∅'}}}: {m:.6g}"
            for s, m in self._masses.items()
        )
        return f"MassFunction({parts})"


def _require_same_frame(m1: MassFunction, m2: MassFunction) -> None:
    if m1.frame != m2.frame:
        raise FrameMismatch(f"{m1.frame!r} vs {m2.frame!r}")


def _combine(m1: MassFunction, m2: MassFunction, op) -> dict[int, float]:
    """Accumulate products of focal-pair masses under a subset operator."""
    out: dict[int, float] = {}
    for s1, v1 in m1.items():
        for s2, v2 in m2.items():
            key = op(s1, s2)
            out[key] = out.get(key, 0.0) + v1 * v2
    return out


def combine_conjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Unnormalized conjunctive combination; may place mass on the empty set."""
    _require_same_frame(m1, m2)
    return MassFunction(m1.frame, _combine(m1, m2, lambda a, b: a & b))


def combine_disjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Disjunctive combination: products accumulate on unions of focal sets."""
    _require_same_frame(m1, m2)
    return MassFunction(m1.frame, _combine(m1, m2, lambda a, b: a | b))


def global_conflict(m1: MassFunction, m2: MassFunction) -> float:
    """Total product mass falling on the empty set under conjunction."""
    _require_same_frame(m1, m2)
    k = 0.0
    for s1, v1 in m1.items():
        for s2, v2 in m2.items():
            if s1 & s2 == 0:
                k += v1 * v2
    return k


def combine_dempster(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Normalized conjunctive combination (the orthogonal sum).

    Distributes the conjunctive result over non-empty subsets, scaling by
    ``1 / (1 - k)`` where ``k`` is the mass the conjunction puts on the
    empty set.  Raises :class:`TotalConflict` when ``k`` is 1 within
    ``INTERNAL_TOLERANCE``.
    """
    _require_same_frame(m1, m2)
    combined = _combine(m1, m2, lambda a, b: a & b)
    k = combined.pop(0, 0.0)
    if 1.0 - k <= INTERNAL_TOLERANCE:
        raise TotalConflict(f"sources fully contradict (conflict mass {k!r})")
    scale = 1.0 / (1.0 - k)
    return MassFunction(m1.frame, {s: v * scale for s, v in combined.items()})


def jaccard(a: int, b: int) -> float:
    """Jaccard similarity of two subset masks.

    ``|a & b| / |a | b|``, with the convention that two empty sets are
    perfectly similar (1) while an empty set against a non-empty one has
    no overlap (0).
    """
    if a == 0 and b == 0:
        return 1.0
    return (a & b).bit_count() / (a | b).bit_count()


def jousselme_distance(m1: MassFunction, m2: MassFunction) -> float:
    """Jaccard-weighted distance between two mass functions, in [0, 1].

    Square root of half the quadratic form of the mass difference under
    the Jaccard similarity matrix.  The difference vector is non-zero only
    on the union of focal sets, so the form is evaluated over those
    entries directly (bit-identical to the dense matrix product, without
    materializing 2^n terms).
    """
    _require_same_frame(m1, m2)
    delta = dict(m1.items())
    for s, v in m2.items():
        delta[s] = delta.get(s, 0.0) - v
    entries = sorted(delta.items())
    total = 0.0
    for i, (si, vi) in enumerate(entries):
        total += vi * vi  # diagonal similarity is always 1
        for sj, vj in entries[i + 1 :]:
            total += 2.0 * vi * vj * jaccard(si, sj)
    squared = 0.5 * total
    if squared < 0.0:
        if squared < -INTERNAL_TOLERANCE:
            raise ArithmeticError(
                f"quadratic form produced {squared!r}; inputs are corrupt"
            )
        squared = 0.0
    return math.sqrt(squared)
